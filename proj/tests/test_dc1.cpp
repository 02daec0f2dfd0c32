#include "dc1lab/dc1.hpp"
#include "dc1lab/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace dc1lab;

namespace {

bool inequality(const BigInt& a, const BigInt& m, const BigInt& b, std::size_t n) {
    const Rational lhs(BigInt(a * (m - 2) + 1), BigInt(b + a * m + 1));
    return lhs > Rational(1) - Rational(1, static_cast<long long>(n));
}

/// Least m >= 2 satisfying the level-n inequality, by scanning.
BigInt scan_minimal_m(const BigInt& a, const BigInt& b, std::size_t n) {
    for (BigInt m = 2;; ++m)
        if (inequality(a, m, b, n)) return m;
}

Dc1Schedule full_shift_schedule(std::size_t n) {
    const auto fs = full_shift();
    return build_schedule(
        gather_blocks(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"), Rational(1, 2), n, default_grids(fs, n)), n);
}

}  // namespace

TEST_SUITE("dc1") {

TEST_CASE("repetition counts for constant block lengths") {
    const std::vector<std::size_t> fours(3, 4);
    const auto m4 = schedule_multiplicities(fours);
    CHECK(m4.m[0] == 2);
    CHECK(m4.b[1] == 8);
    CHECK(m4.m[1] == 6);
    CHECK(m4.b[2] == 32);
    CHECK(m4.m[2] == 22);
    const std::vector<std::size_t> ones(2, 1);
    const auto m1 = schedule_multiplicities(ones);
    CHECK(m1.b[1] == 2);
    CHECK(m1.m[1] == 6);
    CHECK(m1.c[1] == m1.b[1] + m1.a[1] * m1.m[1] + 1);
    CHECK_THROWS_AS(schedule_multiplicities(std::vector<std::size_t>{1, 0}), InputError);
}

TEST_CASE("property: closed-form m_n equals the scanned minimum") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<std::size_t> a(1 + rng() % 12);
        for (auto& x : a) x = 1 + rng() % 20;
        const auto m = schedule_multiplicities(a);
        for (std::size_t n = 2; n <= a.size(); ++n) {
            if (n <= 4) CHECK(m.m[n - 1] == scan_minimal_m(m.a[n - 1], m.b[n - 1], n));
            CHECK(inequality(m.a[n - 1], m.m[n - 1], m.b[n - 1], n));
            if (m.m[n - 1] > 2) CHECK(!inequality(m.a[n - 1], m.m[n - 1] - 1, m.b[n - 1], n));
            CHECK(m.b[n - 1] == m.b[n - 2] + m.a[n - 2] * m.m[n - 2]);
        }
    }
}

TEST_CASE("full-shift blocks have length one") {
    const auto s = full_shift_schedule(4);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(s.a(n) == 1);
    CHECK(s.m(2) == 6);
}

TEST_CASE("golden-mean blocks through 00 and the 01/10 cycle") {
    const auto gm = golden_mean_shift();
    const auto b = gather_blocks(gm, parse_point(gm, "(0)"), parse_point(gm, "(01)"), Rational(1, 4), 3,
                                 default_grids(gm, 3));
    for (const auto& lvl : b.levels) {
        CHECK(lvl.length == 2);
        CHECK(lvl.gamma0 == Path{0, 0, 0});
        CHECK(lvl.gamma1 == Path{1, 2, 1});
        CHECK(lvl.alpha.front() == 0);
        CHECK(lvl.alpha.back() == 1);
        CHECK(lvl.beta.front() == 1);
        CHECK(lvl.beta.back() == 0);
    }
}

TEST_CASE("gathering needs related anchors and one grid per level") {
    const auto gm = golden_mean_shift();
    CHECK_THROWS_AS(gather_blocks(gm, parse_point(gm, "(0)"), parse_point(gm, "(01)"), Rational(1, 4), 3,
                                  {Resolution{2, Rational(1, 4)}}),
                    InputError);
    CHECK_THROWS_AS(gather_blocks(identity_map(), Rational(1, 10), Rational(7, 10), Rational(1, 4), 1,
                                  {Resolution{8, Rational(0)}}),
                    PreconditionError);
}

TEST_CASE("xi orbits concatenate the blocks") {
    const auto s = full_shift_schedule(2);
    const auto x0 = build_xi(parse_bits("0"), s);
    CHECK(x0.orbit.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(to_string(x0.orbit[i]) == "(0)");
    const auto x01 = build_xi(parse_bits("01"), s);
    std::string text;
    for (std::size_t i = 2; i < x01.orbit.size(); ++i) text += to_string(x01.orbit[i]) == "(0)" ? 'z' : 'w';
    CHECK(text == "zwwwwwz");
    CHECK(x01.block_start == std::vector<std::size_t>{0, 2, 8});
    CHECK_THROWS_AS(build_xi(parse_bits("010"), s), PreconditionError);
}

TEST_CASE("pair statistics on fixed points") {
    const auto fs = full_shift();
    const std::vector<std::size_t> cps{1, 10, 100};
    const auto same = dc1_statistics(fs, parse_point(fs, "(01)"), parse_point(fs, "(01)"), cps, default_dyadic_grid(),
                                     {Rational(1, 2), Rational(1, 100)});
    for (std::size_t c = 0; c < cps.size(); ++c) {
        for (std::size_t k = 0; k < same.delta_grid.size(); ++k) CHECK(same.closeness(c, k) == 1.0);
        for (std::size_t k = 0; k < same.s_grid.size(); ++k) CHECK(same.separation(c, k) == 0.0);
    }
    const auto apart = dc1_statistics(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"), cps, default_dyadic_grid(),
                                      {Rational(1, 2), Rational(99, 100)});
    for (std::size_t c = 0; c < cps.size(); ++c)
        for (std::size_t k = 0; k < 2; ++k) CHECK(apart.separation(c, k) == 1.0);
}

TEST_CASE("certificates") {
    const auto fs = full_shift();
    const auto run = run_dc1(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"), Rational(1, 2), parse_bits("01010101"),
                             parse_bits("00000000"));
    CHECK(run.certificate.passed);
    CHECK(run.certificate.levels.size() == 8);
    for (const auto& l : run.certificate.levels) CHECK(l.margin > 0);
    CHECK_THROWS_AS(run_dc1(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"), Rational(1, 2), parse_bits("000"),
                            parse_bits("000")),
                    PreconditionError);

    const auto gm = golden_mean_shift();
    const auto g = run_dc1(gm, parse_point(gm, "(0)"), parse_point(gm, "(01)"), Rational(1, 4), parse_bits("001011"),
                           parse_bits("010110"));
    CHECK(g.certificate.passed);
    for (const auto& l : g.certificate.levels) CHECK(l.margin > 0);

    CHECK_THROWS_AS(run_dc1(doubling_map(), Rational(0), Rational(1, 3), Rational(1, 8), parse_bits("01"),
                            parse_bits("00")),
                    PreconditionError);
}

TEST_CASE("factor construction and entropy bounds") {
    const auto fs = full_shift();
    const auto f = factor_construct(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"));
    CHECK(f.length == 1);
    const auto sample = sample_factor(fs, f, parse_bits("0110"));
    CHECK(sample.ball_condition);
    CHECK(word_to_string(sample.point.head(4)) == "0110");
    const auto fb = entropy_lower_bound(fs, f);
    CHECK(fb.lower_bound == doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const auto gm = golden_mean_shift();
    const auto g = factor_construct(gm, parse_point(gm, "(0)"), parse_point(gm, "(01)"));
    CHECK(g.length == 2);
    const auto gb = entropy_lower_bound(gm, g);
    CHECK(gb.lower_bound == doctest::Approx(std::log(2.0) / 2).epsilon(1e-12));
    CHECK(gb.lower_bound <= gb.sft_entropy);

    const auto zeros = sample_factor(gm, g, parse_bits("00000000"));
    CHECK(zeros.ball_condition);
    for (const auto& d : zeros.ball_distances) CHECK(d <= g.ball_radius);

    CHECK_THROWS_AS(factor_construct(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"), Rational(1, 2)),
                    PreconditionError);
    const auto narrow = factor_construct(gm, parse_point(gm, "(0)"), parse_point(gm, "(01)"), Rational(1, 8));
    CHECK(narrow.depth == 3);
    CHECK(entropy_lower_bound(gm, narrow).lower_bound <= gb.lower_bound);
}

TEST_CASE("pairs near an entropy pair") {
    const auto fs = full_shift();
    const auto near = approximate_dc1_near(fs, parse_point(fs, "(0)"), parse_point(fs, "(1)"), Rational(1, 4), 5);
    CHECK(to_string(near.z) == "(0)");
    CHECK(to_string(near.w) == "(1)");
    CHECK(near.run.certificate.passed);

    const auto gm = golden_mean_shift();
    const auto g = approximate_dc1_near(gm, parse_point(gm, "(0)"), parse_point(gm, "(01)"), Rational(1, 8), 4);
    CHECK(g.dz <= Rational(1, 8));
    CHECK(g.dw <= Rational(1, 8));
    CHECK(g.run.certificate.passed);
}

}
