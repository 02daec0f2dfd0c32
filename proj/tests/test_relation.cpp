#include "dc1lab/errors.hpp"
#include "dc1lab/pstar.hpp"
#include "dc1lab/relation.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dc1lab;

namespace {

ChainGraph three_cycle() { return ChainGraph(oracle::cycle_graph(3)); }

std::vector<Resolution> grid_schedule(std::initializer_list<long long> ns) {
    std::vector<Resolution> out;
    for (auto n : ns) out.push_back(Resolution{static_cast<std::size_t>(n), Rational(1, n)});
    return out;
}

}  // namespace

TEST_SUITE("relation") {

TEST_CASE("related_at examples") {
    const auto tri = cyclic_decomposition(three_cycle());
    CHECK(related_at(tri, 1, 1).related);
    CHECK(!related_at(tri, 0, 1).related);
    CHECK(related_at(tri, 0, 1).both_recurrent);
    const ChainGraph path(std::vector<std::vector<VertexId>>{{1}, {1}});
    const auto pd = cyclic_decomposition(path);
    CHECK(!related_at(pd, 0, 1).related);
    CHECK(!related_at(pd, 0, 1).both_recurrent);
    const auto dbl = cyclic_decomposition(discretize(doubling_map(), 8, Rational(0)));
    for (VertexId u = 0; u < 8; ++u)
        for (VertexId v = 0; v < 8; ++v) CHECK(related_at(dbl, u, v).related);
}

TEST_CASE("relate_schedule on the doubling map") {
    const auto verdict = relate_schedule(doubling_map(), Rational(1, 10), Rational(7, 10), grid_schedule({8, 16, 32}));
    CHECK(verdict.records.size() == 3);
    CHECK(verdict.related_for_all_tested);
    CHECK_THROWS_AS(relate_schedule(doubling_map(), Rational(1, 10), Rational(7, 10), grid_schedule({16, 8})),
                    InputError);
    CHECK_THROWS_AS(relate_schedule(doubling_map(), Rational(1, 10), Rational(7, 10), {}), InputError);
    CHECK_THROWS_AS(relate_schedule(identity_map(), Rational(3), Rational(7, 10), grid_schedule({8})), Error);
}

TEST_CASE("identity map: one chain class at positive delta, singletons at zero") {
    const auto coarse = relate_schedule(identity_map(), Rational(1, 10), Rational(7, 10), grid_schedule({8}));
    CHECK(coarse.related_for_all_tested);
    const auto exact = relate_schedule(identity_map(), Rational(1, 10), Rational(7, 10),
                                       {Resolution{8, Rational(0)}});
    CHECK(!exact.related_for_all_tested);
}

TEST_CASE("rotation verdicts are recorded per delta") {
    const auto v = relate_schedule(circle_rotation(Rational(1, 3)), Rational(0), Rational(1, 3), grid_schedule({12}));
    REQUIRE(v.records.size() == 1);
    CHECK(v.records[0].boxes == 12);
}

TEST_CASE("entropy pairs") {
    const auto fs = full_shift();
    const auto fsd = cyclic_decomposition(discretize(fs, 1, Rational(1, 2)));
    const auto pairs = entropy_pairs(fsd, fs);
    CHECK(pairs.pairs.size() == 2);
    CHECK(pairs.shadowing_verified);
    CHECK(pairs.caveat.empty());
    CHECK(entropy_pairs(cyclic_decomposition(discretize(identity_map(), 6, Rational(0))), identity_map()).pairs.empty());
    CHECK(entropy_pairs(cyclic_decomposition(three_cycle()), true).pairs.empty());
    const auto rot = circle_rotation(Rational(1, 3));
    const auto rp = entropy_pairs(cyclic_decomposition(discretize(rot, 12, Rational(1, 12))), rot);
    CHECK(!rp.shadowing_verified);
    CHECK(!rp.caveat.empty());
}

TEST_CASE("property P") {
    const ChainGraph fs = discretize(full_shift(), 1, Rational(1, 2));
    const auto w = check_property_P(fs, cyclic_decomposition(fs), 0, 1);
    REQUIRE(w);
    CHECK(w->length == 1);
    CHECK(w->uv == Path{0, 1});
    CHECK(!check_property_P(three_cycle(), cyclic_decomposition(three_cycle()), 0, 1));
    const ChainGraph loop(std::vector<std::vector<VertexId>>{{0}});
    const auto l = check_property_P(loop, cyclic_decomposition(loop), 0, 0);
    REQUIRE(l);
    CHECK(l->length == 1);
    CHECK(l->uu == l->vv);
}

TEST_CASE("property: relation is an equivalence on CR and invariant along edges") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 12;
        const ChainGraph g(trial % 2 ? oracle::layered_digraph(rng, n, 1 + rng() % 4) : oracle::random_digraph(rng, n));
        const auto dec = cyclic_decomposition(g);
        for (VertexId a = 0; a < n; ++a) {
            if (dec.recurrent(a)) CHECK(related_at(dec, a, a).related);
            for (VertexId b = 0; b < n; ++b) {
                CHECK(related_at(dec, a, b).related == related_at(dec, b, a).related);
                if (!related_at(dec, a, b).related) continue;
                for (VertexId c = 0; c < n; ++c)
                    if (related_at(dec, b, c).related) CHECK(related_at(dec, a, c).related);
                for (auto a2 : g.successors(a))
                    for (auto b2 : g.successors(b))
                        if (dec.recurrent(a2) && dec.recurrent(b2) && dec.index[a2]->component == dec.index[a]->component &&
                            dec.index[b2]->component == dec.index[b]->component)
                            CHECK(related_at(dec, a2, b2).related);
            }
        }
    }
}

}

TEST_SUITE("pstar") {

TEST_CASE("full shift fixed words") {
    const ChainGraph g = discretize(full_shift(), 1, Rational(1, 2));
    const auto res = property_star(g, 0, 1, Rational(1, 2));
    REQUIRE(res.witness);
    CHECK(res.witness->length == 1);
    CHECK(res.witness->cycle1 == Path{0, 0});
    CHECK(res.witness->cycle2 == Path{1, 1});
    CHECK(res.witness->min_certified_separation() == Rational(1));
    CHECK(verify_pstar_witness(g, *res.witness, 0, 1));
}

TEST_CASE("radius at or above the diameter") {
    const ChainGraph g = discretize(full_shift(), 1, Rational(1, 2));
    const auto res = property_star(g, 0, 1, Rational(1));
    CHECK(!res.witness);
    CHECK(res.reason == "endpoints too close");
}

TEST_CASE("three points at mutual distance one on a 3-cycle") {
    std::vector<Rational> table(9, Rational(1));
    for (int i = 0; i < 3; ++i) table[i * 4] = 0;
    const ChainGraph g(oracle::cycle_graph(3), table);
    const auto res = property_star(g, 0, 1, Rational(1, 2));
    REQUIRE(res.witness);
    CHECK(res.witness->length == 3);
    CHECK(res.witness->cycle1 == Path{0, 1, 2, 0});
    CHECK(res.witness->cycle2 == Path{1, 2, 0, 1});
}

TEST_CASE("tampered witnesses fail verification") {
    const ChainGraph g = discretize(full_shift(), 1, Rational(1, 2));
    auto w = *property_star(g, 0, 1, Rational(1, 2)).witness;
    w.cycle2 = Path{0, 0};
    CHECK(!verify_pstar_witness(g, w, 0, 1));
}

TEST_CASE("omega limits") {
    const auto fs = full_shift();
    const ChainGraph g = discretize(fs, 1, Rational(1, 2));
    const auto o = omega_product(fs, g, parse_point(fs, "0(1)"), parse_point(fs, "(1)"), 50);
    CHECK(o.exact);
    CHECK(o.pairs == std::set<std::pair<VertexId, VertexId>>{{1, 1}});
    const auto fix = omega_product(fs, g, parse_point(fs, "(0)"), parse_point(fs, "(0)"), 10);
    CHECK(fix.pairs == std::set<std::pair<VertexId, VertexId>>{{0, 0}});

    const auto dbl = doubling_map();
    const ChainGraph dg = discretize(dbl, 6, Rational(1, 6));
    const auto d = omega_product(dbl, dg, Rational(1, 3), Rational(2, 3), 40);
    CHECK(d.exact);
    const VertexId a = dg.vertex_of(Rational(1, 3)), b = dg.vertex_of(Rational(2, 3));
    CHECK(d.pairs == std::set<std::pair<VertexId, VertexId>>{{a, b}, {b, a}});
}

TEST_CASE("property: product cycles match brute-force BFS") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 2 + rng() % 7;
        std::vector<Rational> table(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                table[i * n + j] = table[j * n + i] = Rational(static_cast<long long>(1 + rng() % 4), 4);
        const ChainGraph g(oracle::random_digraph(rng, n), table);
        const VertexId u = static_cast<VertexId>(rng() % n), v = static_cast<VertexId>(rng() % n);
        const Rational r(static_cast<long long>(rng() % 4), 4);
        const auto res = property_star(g, u, v, r);
        const auto want = oracle::product_cycle_length(g, u, v, r);
        CAPTURE(trial);
        REQUIRE(static_cast<bool>(res.witness) == static_cast<bool>(want));
        if (want) {
            CHECK(res.witness->length == *want);
            CHECK(verify_pstar_witness(g, *res.witness, u, v));
        }
    }
}

}
