#include "dc1lab/rational.hpp"

#include "dc1lab/errors.hpp"

#include <cctype>

namespace dc1lab {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw InputError("malformed number: '" + std::string(whole) + "'");
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw InputError("malformed number: '" + std::string(whole) + "'");
    }
    return BigInt(std::string(digits));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = trim(text);
    std::string_view s = whole;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash), whole);
        BigInt den = parse_integer(s.substr(slash + 1), whole);
        if (den == 0) throw InputError("zero denominator: '" + std::string(whole) + "'");
        value = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        BigInt num = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
        BigInt den = 1;
        if (!frac_part.empty()) {
            BigInt f = parse_integer(frac_part, whole);
            for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
            num = num * den + f;
        } else if (int_part.empty()) {
            throw InputError("malformed number: '" + std::string(whole) + "'");
        }
        value = Rational(num, den);
    } else {
        value = Rational(parse_integer(s, whole));
    }
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt floor_of(const Rational& q) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    BigInt n = numerator(q);
    BigInt d = denominator(q);
    BigInt f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor_of(q)); }

Rational dyadic(std::size_t exponent) {
    BigInt den = 1;
    den <<= exponent;
    return Rational(BigInt(1), den);
}

std::size_t dyadic_depth_at_most(const Rational& q) {
    if (q <= 0) throw InputError("dyadic depth needs a positive radius");
    std::size_t k = 0;
    while (dyadic(k) > q) ++k;
    return k;
}

}  // namespace dc1lab
