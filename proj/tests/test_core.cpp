#include "dc1lab/config.hpp"
#include "dc1lab/errors.hpp"
#include "dc1lab/systems.hpp"

#include <doctest.h>

#include <random>

using namespace dc1lab;

TEST_SUITE("core") {

TEST_CASE("rationals parse exactly") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(3, 4)) == "3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(dyadic(3) == Rational(1, 8));
    CHECK(dyadic_depth_at_most(Rational(1, 8)) == 3);
    CHECK(dyadic_depth_at_most(Rational(1, 7)) == 3);
    CHECK(dyadic_depth_at_most(Rational(1, 9)) == 4);
    CHECK(dyadic_depth_at_most(Rational(2)) == 0);
    CHECK(fractional_part(Rational(-1, 4)) == Rational(3, 4));
}

TEST_CASE("symbol sequences canonicalize") {
    const SymbolSeq a = parse_symbol_seq("01(1)");
    CHECK(to_string(a) == "0(1)");
    CHECK(a.at(0) == 0);
    CHECK(a.at(57) == 1);
    CHECK(parse_symbol_seq("(0101)") == parse_symbol_seq("(01)"));
    CHECK(parse_symbol_seq("(01)").shifted(1) == parse_symbol_seq("(10)"));
    CHECK(parse_symbol_seq("0110").is_finite());
    CHECK(minimal_period(Word{0, 1, 0, 1}) == 2);
    CHECK(minimal_period(Word{0, 0, 1}) == 3);
    CHECK_THROWS_AS(parse_symbol_seq("0(1"), InputError);
}

TEST_CASE("evaluate on the reference systems") {
    CHECK(std::get<Rational>(evaluate(doubling_map(), Rational(1, 10))) == Rational(1, 5));
    CHECK(std::get<Rational>(evaluate(doubling_map(), Rational(7, 10))) == Rational(2, 5));
    CHECK(std::get<Rational>(evaluate(identity_map(), parse_rational("0.37"))) == parse_rational("0.37"));
    CHECK(std::get<Rational>(evaluate(tent_map(), Rational(3, 4))) == Rational(1, 2));
    CHECK(std::get<Rational>(evaluate(circle_rotation(Rational(1, 3)), Rational(5, 6))) == Rational(1, 6));
    const auto sh = full_shift();
    CHECK(std::get<SymbolSeq>(evaluate(sh, parse_point(sh, "01(1)"))) == parse_symbol_seq("(1)"));
    CHECK_THROWS_AS(evaluate(identity_map(), Rational(3, 2)), DomainError);
    CHECK_THROWS_AS(parse_point(golden_mean_shift(), "(1)"), DomainError);
}

TEST_CASE("metrics") {
    CHECK(distance(doubling_map(), Rational(1, 10), Rational(9, 10)) == Rational(1, 5));
    CHECK(distance(identity_map(), Rational(1, 10), Rational(9, 10)) == Rational(4, 5));
    const auto sh = full_shift();
    CHECK(distance(sh, parse_point(sh, "(0)"), parse_point(sh, "(1)")) == Rational(1));
    CHECK(distance(sh, parse_point(sh, "00(1)"), parse_point(sh, "(0)")) == Rational(1, 4));
    CHECK(distance(sh, parse_point(sh, "(01)"), parse_point(sh, "(0101)")) == Rational(0));
}

TEST_CASE("validation rejects broken systems") {
    SystemSpec jump{"jump", IntervalMap{{Rational(0), Rational(1, 2), Rational(1)},
                                        {LinearPiece{Rational(2), Rational(0)}, LinearPiece{Rational(2), Rational(-1)}}}};
    CHECK_THROWS_AS(validate(jump), ValidationError);
    SystemSpec escape{"escape", IntervalMap{{Rational(0), Rational(1)}, {LinearPiece{Rational(2), Rational(0)}}}};
    CHECK_THROWS_AS(validate(escape), ValidationError);
    CHECK_NOTHROW(validate(tent_map()));
    CHECK_NOTHROW(validate(doubling_map()));
}

TEST_CASE("entropy of shifts") {
    CHECK(sft_entropy(full_shift().sft()) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(sft_entropy(golden_mean_shift().sft()) ==
          doctest::Approx(std::log((1 + std::sqrt(5.0)) / 2)).epsilon(1e-12));
}

TEST_CASE("least continuation is admissible and lexicographically least") {
    const auto spec = golden_mean_shift();
    const auto& gm = spec.sft();
    CHECK(least_continuation(gm, Word{1}) == parse_symbol_seq("1(0)"));
    CHECK(least_continuation(gm, Word{0, 1}) == parse_symbol_seq("01(0)"));
    CHECK_THROWS_AS(least_continuation(gm, Word{1, 1}), SftError);
}

TEST_CASE("configs round-trip") {
    for (const auto& spec : {doubling_map(), identity_map(), tent_map(), circle_rotation(Rational(1, 3)),
                             full_shift(), golden_mean_shift()}) {
        const std::string text = dump_system_config(spec);
        const SystemSpec back = parse_system_config(text);
        CHECK(dump_system_config(back) == text);
        CHECK(back.kind() == spec.kind());
    }
    CHECK_THROWS_AS(parse_system_config("kind: sft\nmetric: arc\nparameters: {alphabet: 2, adjacency: [[1,1],[1,1]]}"),
                    ValidationError);
    CHECK_THROWS_AS(parse_system_config("kind: warp\nparameters: {}"), ValidationError);
    CHECK_THROWS_AS(parse_system_config("[1, 2"), ValidationError);
}

TEST_CASE("property: circle distance is a metric on random rationals") {
    std::mt19937_64 rng(7);
    auto draw = [&] { return Rational(static_cast<long long>(rng() % 97), 97); };
    const auto spec = doubling_map();
    for (int i = 0; i < 300; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        CHECK(distance(spec, a, b) == distance(spec, b, a));
        CHECK(distance(spec, a, c) <= distance(spec, a, b) + distance(spec, b, c));
        CHECK(distance(spec, a, b) <= Rational(1, 2));
    }
}

}
