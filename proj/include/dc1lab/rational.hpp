#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace dc1lab {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Accepts "p/q", integers and finite decimals ("0.1" is exactly 1/10).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

BigInt floor_of(const Rational& q);

/// x - floor(x), in [0, 1).
Rational fractional_part(const Rational& q);

/// 2^-exponent.
Rational dyadic(std::size_t exponent);

/// Smallest k with 2^-k <= q, for 0 < q. Returns 0 for q >= 1.
std::size_t dyadic_depth_at_most(const Rational& q);

}  // namespace dc1lab
