#include "dc1lab/decomposition.hpp"
#include "dc1lab/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace dc1lab;

namespace {

std::set<std::pair<VertexId, VertexId>> edges(const ChainGraph& g) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (VertexId u = 0; u < g.size(); ++u)
        for (auto v : g.successors(u)) out.insert({u, v});
    return out;
}

ChainGraph three_cycle() { return ChainGraph(oracle::cycle_graph(3)); }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("doubling map with four boxes and no slack") {
    const ChainGraph g = discretize(doubling_map(), 4, Rational(0));
    REQUIRE(g.size() == 4);
    for (VertexId v = 0; v < 4; ++v) CHECK(g.successors(v).size() == 2);
    CHECK(g.has_edge(0, 0));
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(verify_chain(g, std::vector<VertexId>{0, 1, 2}, false));
}

TEST_CASE("identity map with no slack has only self-loops") {
    const ChainGraph g = discretize(identity_map(), 4, Rational(0));
    CHECK(edges(g) == std::set<std::pair<VertexId, VertexId>>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("golden-mean words of depth two") {
    const ChainGraph g = discretize(golden_mean_shift(), 2, Rational(1, 4));
    REQUIRE(g.size() == 3);
    CHECK(word_to_string(g.word(0)) == "00");
    CHECK(word_to_string(g.word(1)) == "01");
    CHECK(word_to_string(g.word(2)) == "10");
    CHECK(edges(g) == std::set<std::pair<VertexId, VertexId>>{{0, 0}, {0, 1}, {1, 2}, {2, 0}, {2, 1}});
    CHECK_THROWS_AS(discretize(golden_mean_shift(), 2, Rational(1, 8)), InputError);
}

TEST_CASE("interval images keep the last box closed") {
    const ChainGraph g = discretize(identity_map(), 4, Rational(0));
    CHECK(g.vertex_of(Rational(1)) == 3);
    CHECK(g.vertex_of(Rational(1, 4)) == 1);
    CHECK_THROWS_AS(g.vertex_of(Rational(2)), InputError);
}

TEST_CASE("parallel and serial edge scans agree") {
    for (const auto& spec : {doubling_map(), tent_map(), identity_map(), circle_rotation(Rational(1, 3))}) {
        for (std::size_t n : {5u, 16u, 33u}) {
            for (const Rational& d : {Rational(0), Rational(1, static_cast<long long>(n)), Rational(1, 7)}) {
                CHECK(edges(discretize(spec, n, d)) == edges(discretize_serial(spec, n, d)));
            }
        }
    }
    CHECK(edges(discretize(golden_mean_shift(4), 4, Rational(1, 16))) ==
          edges(discretize_serial(golden_mean_shift(4), 4, Rational(1, 16))));
}

TEST_CASE("edges agree with exhaustive sampling of box pairs") {
    const std::size_t per_box = 24;
    for (const auto& spec : {doubling_map(), tent_map(), identity_map(), circle_rotation(Rational(1, 3))}) {
        const std::size_t n = 6;
        for (const Rational& delta : {Rational(0), Rational(1, 6), Rational(1, 12)}) {
            const ChainGraph g = discretize(spec, n, delta);
            const bool interval = spec.kind() == SystemKind::interval_pw_linear;
            auto samples = [&](std::size_t box) {
                std::vector<Rational> pts;
                for (std::size_t t = 0; t < per_box; ++t)
                    pts.emplace_back(static_cast<long long>(box * per_box + t), static_cast<long long>(n * per_box));
                if (interval && box + 1 == n) pts.emplace_back(1);
                return pts;
            };
            for (VertexId i = 0; i < n; ++i) {
                for (VertexId j = 0; j < n; ++j) {
                    bool witness = false;
                    for (const auto& x : samples(i)) {
                        const Point fx = evaluate(spec, x);
                        for (const auto& y : samples(j)) {
                            if (distance(spec, fx, y) <= delta) {
                                witness = true;
                                break;
                            }
                        }
                        if (witness) break;
                    }
                    CAPTURE(spec.name);
                    CAPTURE(i);
                    CAPTURE(j);
                    CHECK(g.has_edge(i, j) == witness);
                }
            }
        }
    }
}

TEST_CASE("chain recurrence and decomposition examples") {
    CHECK(chain_recurrent_set(discretize(identity_map(), 5, Rational(0))).size() == 5);
    const ChainGraph path({{1}, {2}, {2}});
    CHECK(chain_recurrent_set(path) == std::vector<VertexId>{2});
    CHECK(chain_recurrent_set(discretize(doubling_map(), 8, Rational(0))).size() == 8);

    const auto tri = cyclic_decomposition(three_cycle());
    REQUIRE(tri.components.size() == 1);
    CHECK(tri.components[0].period == 3);
    CHECK(tri.components[0].classes == std::vector<std::vector<VertexId>>{{0}, {1}, {2}});

    const auto dbl = cyclic_decomposition(discretize(doubling_map(), 8, Rational(0)));
    REQUIRE(dbl.components.size() == 1);
    CHECK(dbl.components[0].period == 1);

    const auto two = cyclic_decomposition(ChainGraph({{1}, {0}, {3}, {2}}));
    REQUIRE(two.components.size() == 2);
    CHECK(two.components[0].period == 2);
    CHECK(two.components[1].period == 2);

    const ChainGraph pair(std::vector<std::vector<VertexId>>{{1}, {0}});
    const auto table = reachability_threshold(pair, cyclic_decomposition(pair), 0);
    CHECK(table.size() == 2);
    for (const auto& [uv, n] : table) CHECK(uv.first == uv.second);
}

TEST_CASE("verify_chain") {
    const ChainGraph id = discretize(identity_map(), 3, Rational(0));
    CHECK(verify_chain(id, std::vector<VertexId>{1, 1}, true));
    CHECK(!verify_chain(three_cycle(), std::vector<VertexId>{0, 2}, false));
    CHECK(verify_chain(three_cycle(), std::vector<VertexId>{0, 1, 2, 0}, true));
    CHECK(!verify_chain(three_cycle(), std::vector<VertexId>{0, 1, 2}, true));
    CHECK_THROWS_AS(verify_chain(three_cycle(), std::vector<VertexId>{0, 9}, false), InputError);
    CHECK_THROWS_AS(verify_chain(three_cycle(), std::vector<VertexId>{0}, false), InputError);
}

TEST_CASE("find_chain") {
    CHECK(find_chain(three_cycle(), 0, 0, 3) == Path{0, 1, 2, 0});
    CHECK(!find_chain(three_cycle(), 0, 1, 2));
    const ChainGraph dbl = discretize(doubling_map(), 8, Rational(0));
    for (VertexId u = 0; u < 8; ++u)
        for (VertexId v = 0; v < 8; ++v) {
            const auto p = find_chain(dbl, u, v, 3);
            REQUIRE(p);
            CHECK(p->size() == 4);
            CHECK(verify_chain(dbl, *p, false));
        }
    CHECK_THROWS_AS(find_chain(three_cycle(), 0, 0, 0), InputError);
}

TEST_CASE("thresholds on small examples") {
    const auto tri = three_cycle();
    const auto dec = cyclic_decomposition(tri);
    CHECK(pair_threshold(tri, dec, 0, 0) == 1);
    CHECK_THROWS_AS(pair_threshold(tri, dec, 0, 1), PreconditionError);
    const ChainGraph dbl = discretize(doubling_map(), 8, Rational(0));
    const auto ddec = cyclic_decomposition(dbl);
    for (const auto& [pair, n] : reachability_threshold(dbl, ddec, 0)) CHECK(n <= 8);
}

TEST_CASE("property: decomposition matches the walk oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const auto adj = trial % 3 == 2 ? oracle::layered_digraph(rng, n, 2 + rng() % 3) : oracle::random_digraph(rng, n);
        const ChainGraph g(adj);
        const auto dec = cyclic_decomposition(g);
        const auto want = oracle::decompose(g);
        for (VertexId v = 0; v < n; ++v) {
            CAPTURE(trial);
            CAPTURE(v);
            REQUIRE(dec.recurrent(v) == static_cast<bool>(want.recurrent[v]));
            if (!dec.recurrent(v)) continue;
            const auto ci = *dec.index[v];
            CHECK(ci.component == static_cast<std::size_t>(want.component[v]));
            CHECK(dec.components[ci.component].period == want.period[ci.component]);
            CHECK(ci.cls == static_cast<std::size_t>(want.cls[v]));
        }
    }
}

TEST_CASE("property: find_chain returns the least walk") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        const ChainGraph g(oracle::random_digraph(rng, n));
        const VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
        const std::size_t len = 1 + rng() % 5;
        CHECK(find_chain(g, u, v, len) == oracle::least_walk(g, u, v, len));
    }
}

TEST_CASE("property: thresholds match exhaustive walk tables") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        const auto adj = trial % 2 ? oracle::layered_digraph(rng, n, 1 + rng() % 3) : oracle::random_digraph(rng, n);
        const ChainGraph g(adj);
        const auto dec = cyclic_decomposition(g);
        for (std::size_t c = 0; c < dec.components.size(); ++c) {
            const std::size_t p = dec.components[c].period;
            const std::size_t bound = n * n + 3 * n + 2;
            for (const auto& [pair, threshold] : reachability_threshold(g, dec, c)) {
                CAPTURE(trial);
                CHECK(threshold == oracle::threshold(g, pair.first, pair.second, p, bound));
            }
        }
    }
}

}
