#include "dc1lab/errors.hpp"
#include "dc1lab/shadowing.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <sstream>

using namespace dc1lab;

namespace {

/// Pseudo-orbit of depth-k words following an admissible random walk; every
/// entry gets its own random admissible continuation.
PseudoOrbit random_pseudo_orbit(std::mt19937_64& rng, const ShiftOfFiniteType& sft, std::size_t k, std::size_t len) {
    const SymbolSeq walk = gen::admissible_seq(rng, sft, Word{static_cast<Symbol>(rng() % sft.alphabet)}, len + k);
    std::vector<Point> points;
    for (std::size_t i = 0; i < len; ++i) {
        Word head;
        for (std::size_t j = 0; j < k; ++j) head.push_back(walk.at(i + j));
        points.push_back(gen::admissible_seq(rng, sft, head, rng() % 4));
    }
    return PseudoOrbit::from_points(points);
}

}  // namespace

TEST_SUITE("shadowing") {

TEST_CASE("a true orbit shadows itself") {
    const auto fs = full_shift();
    const SymbolSeq x = parse_symbol_seq("0110(01)");
    std::vector<Point> orbit;
    for (std::size_t i = 0; i < 12; ++i) orbit.push_back(x.shifted(i));
    const auto po = PseudoOrbit::from_points(orbit);
    CHECK(shadow_sft(fs.sft(), po, 1) == x);
    for (double e : tracking_average(fs, x, po, 12)) CHECK(e == doctest::Approx(0.0).epsilon(1e-15));
    for (const auto& d : defects(fs, po)) CHECK(d == 0);
}

TEST_CASE("read-off of first symbols") {
    const auto fs = full_shift();
    std::vector<Point> pts;
    for (const char* s : {"(0)", "0(1)", "(1)", "1(0)", "(0)"}) pts.push_back(parse_point(fs, s));
    const auto po = PseudoOrbit::from_points(pts);
    const SymbolSeq y = shadow_sft(fs.sft(), po, 1);
    CHECK(to_string(y).rfind("0011", 0) == 0);
    CHECK(max_tracking_distance(fs, y, po, po.size()) <= Rational(1, 2));
}

TEST_CASE("golden-mean read-off containing 11 is rejected") {
    const auto gm = golden_mean_shift(1);
    std::vector<Point> pts;
    for (const char* s : {"(10)", "(10)", "(0)"}) pts.push_back(parse_point(gm, s));
    CHECK_THROWS_AS(shadow_sft(gm.sft(), PseudoOrbit::from_points(pts), 1), SftError);
}

TEST_CASE("overlap violations name the index") {
    const auto fs = full_shift(2, 2);
    std::vector<Point> pts;
    for (const char* s : {"(0)", "(0)", "(1)"}) pts.push_back(parse_point(fs, s));
    try {
        shadow_sft(fs.sft(), PseudoOrbit::from_points(pts), 2);
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("entries 1 and 2") != std::string::npos);
    }
}

TEST_CASE("a single unit defect averages out as 1/m") {
    const auto id = identity_map();
    std::vector<Point> pts{Rational(1)};
    for (int i = 0; i < 9; ++i) pts.push_back(Rational(0));
    const auto eps = tracking_average(id, Rational(0), PseudoOrbit::from_points(pts), 10);
    for (std::size_t m = 1; m <= 10; ++m) CHECK(eps[m - 1] == doctest::Approx(1.0 / static_cast<double>(m)));
    const std::vector<std::size_t> cps{1, 5, 10};
    const auto at = tracking_average_at(id, Rational(0), PseudoOrbit::from_points(pts), cps);
    CHECK(at[1] == doctest::Approx(0.2));
}

TEST_CASE("pseudo-orbits round-trip through JSON lines") {
    const auto gm = golden_mean_shift();
    std::mt19937_64 rng(3);
    const auto po = random_pseudo_orbit(rng, gm.sft(), 2, 30);
    std::stringstream ss;
    write_pseudo_orbit(po, ss);
    const auto back = read_pseudo_orbit(gm, ss);
    REQUIRE(back.size() == po.size());
    for (std::size_t i = 0; i < po.size(); ++i) CHECK(back[i] == po[i]);
    std::stringstream bad("{\"pt\": 1}\n");
    CHECK_THROWS_AS(read_pseudo_orbit(gm, bad), InputError);
}

TEST_CASE("property: read-off shadows track within 2^-k") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = 1 + trial % 3;
        const SystemSpec spec = trial % 2 ? full_shift(2, k) : golden_mean_shift(k);
        const auto po = random_pseudo_orbit(rng, spec.sft(), k, 5 + rng() % 60);
        const SymbolSeq y = shadow_sft(spec.sft(), po, k);
        CHECK(max_tracking_distance(spec, y, po, po.size()) <= dyadic(k));
        for (std::size_t i = 0; i < po.size(); ++i) CHECK(distance(spec, y.shifted(i), po[i]) <= dyadic(k));
        for (const auto& d : defects(spec, po)) CHECK(d <= dyadic(k - 1));
    }
}

}
