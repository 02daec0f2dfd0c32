#include "dc1lab/systems.hpp"

#include "dc1lab/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace dc1lab {

std::string to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::interval_pw_linear: return "interval-pw-linear";
        case SystemKind::circle_affine: return "circle-affine";
        case SystemKind::sft: return "sft";
    }
    return "unknown";
}

SystemKind SystemSpec::kind() const noexcept {
    switch (map.index()) {
        case 0: return SystemKind::interval_pw_linear;
        case 1: return SystemKind::circle_affine;
        default: return SystemKind::sft;
    }
}

std::string SystemSpec::metric_name() const {
    switch (kind()) {
        case SystemKind::interval_pw_linear: return "absolute";
        case SystemKind::circle_affine: return "arc";
        case SystemKind::sft: return "symbolic";
    }
    return "unknown";
}

const ShiftOfFiniteType& SystemSpec::sft() const {
    if (!is_sft()) throw PreconditionError("system '" + name + "' is not a shift of finite type");
    return std::get<ShiftOfFiniteType>(map);
}

std::string to_string(const Point& p) {
    if (const auto* q = std::get_if<Rational>(&p)) return to_string(*q);
    return to_string(std::get<SymbolSeq>(p));
}

Point parse_point(const SystemSpec& spec, std::string_view text) {
    Point p;
    switch (spec.kind()) {
        case SystemKind::interval_pw_linear:
            p = parse_rational(text);
            break;
        case SystemKind::circle_affine:
            p = fractional_part(parse_rational(text));
            break;
        case SystemKind::sft:
            p = parse_symbol_seq(text);
            break;
    }
    require_in_domain(spec, p);
    return p;
}

namespace {

void validate_interval(const IntervalMap& m) {
    const auto& bp = m.breakpoints;
    if (bp.size() < 2) throw ValidationError("interval map needs at least two breakpoints");
    if (bp.front() != 0 || bp.back() != 1)
        throw ValidationError("breakpoints must start at 0 and end at 1");
    for (std::size_t i = 1; i < bp.size(); ++i) {
        if (!(bp[i - 1] < bp[i])) throw ValidationError("breakpoints must be strictly increasing");
    }
    if (m.pieces.size() + 1 != bp.size())
        throw ValidationError("interval map needs exactly one piece per breakpoint gap");
    for (std::size_t p = 0; p < m.pieces.size(); ++p) {
        const auto& piece = m.pieces[p];
        for (const Rational& t : {bp[p], bp[p + 1]}) {
            const Rational y = piece.slope * t + piece.intercept;
            if (y < 0 || y > 1)
                throw ValidationError("piece " + std::to_string(p) + " maps " + to_string(t) +
                                      " outside [0,1]");
        }
        if (p + 1 < m.pieces.size()) {
            const Rational& t = bp[p + 1];
            const auto& next = m.pieces[p + 1];
            if (piece.slope * t + piece.intercept != next.slope * t + next.intercept)
                throw ValidationError("map is not continuous at breakpoint " + to_string(t));
        }
    }
}

void validate_sft(const ShiftOfFiniteType& s) {
    if (s.alphabet < 1 || s.alphabet > 36) throw ValidationError("alphabet size must be in [1, 36]");
    if (s.adjacency.size() != s.alphabet) throw ValidationError("adjacency matrix must be square");
    for (const auto& row : s.adjacency) {
        if (row.size() != s.alphabet) throw ValidationError("adjacency matrix must be square");
        for (auto e : row) {
            if (e > 1) throw ValidationError("adjacency matrix must be binary");
        }
    }
    for (std::size_t a = 0; a < s.alphabet; ++a) {
        bool row_ok = false;
        bool col_ok = false;
        for (std::size_t b = 0; b < s.alphabet; ++b) {
            row_ok = row_ok || s.adjacency[a][b] != 0;
            col_ok = col_ok || s.adjacency[b][a] != 0;
        }
        if (!row_ok || !col_ok)
            throw ValidationError("symbol " + std::to_string(a) + " is dead (empty row or column)");
    }
    if (s.depth < 1) throw ValidationError("word depth must be at least 1");
}

}  // namespace

void validate(const SystemSpec& spec) {
    switch (spec.kind()) {
        case SystemKind::interval_pw_linear:
            validate_interval(std::get<IntervalMap>(spec.map));
            break;
        case SystemKind::circle_affine:
            break;
        case SystemKind::sft:
            validate_sft(std::get<ShiftOfFiniteType>(spec.map));
            break;
    }
}

bool admissible(const ShiftOfFiniteType& sft, const Word& w) {
    for (Symbol c : w) {
        if (c >= sft.alphabet) return false;
    }
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (!sft.allowed(w[i - 1], w[i])) return false;
    }
    return true;
}

void require_admissible(const ShiftOfFiniteType& sft, const SymbolSeq& s) {
    auto check_symbol = [&](Symbol c) {
        if (c >= sft.alphabet) throw SftError("symbol " + std::to_string(c) + " outside the alphabet");
    };
    for (Symbol c : s.prefix) check_symbol(c);
    for (Symbol c : s.period) check_symbol(c);
    const std::size_t n = s.is_finite() ? s.prefix.size() : s.prefix.size() + s.period.size() + 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (!sft.allowed(s.at(i - 1), s.at(i)))
            throw SftError("forbidden word " + word_to_string({s.at(i - 1), s.at(i)}) +
                           " at index " + std::to_string(i - 1));
    }
}

void require_in_domain(const SystemSpec& spec, const Point& p) {
    switch (spec.kind()) {
        case SystemKind::interval_pw_linear: {
            const auto* x = std::get_if<Rational>(&p);
            if (x == nullptr || *x < 0 || *x > 1)
                throw DomainError("point " + to_string(p) + " is not in [0,1]");
            break;
        }
        case SystemKind::circle_affine: {
            const auto* x = std::get_if<Rational>(&p);
            if (x == nullptr || *x < 0 || *x >= 1)
                throw DomainError("point " + to_string(p) + " is not in [0,1)");
            break;
        }
        case SystemKind::sft: {
            const auto* s = std::get_if<SymbolSeq>(&p);
            if (s == nullptr) throw DomainError("shift systems take symbol sequences");
            try {
                require_admissible(spec.sft(), *s);
            } catch (const SftError& e) {
                throw DomainError(std::string("point is not in the shift space: ") + e.what());
            }
            break;
        }
    }
}

Point evaluate(const SystemSpec& spec, const Point& p) {
    require_in_domain(spec, p);
    switch (spec.kind()) {
        case SystemKind::interval_pw_linear: {
            const auto& m = std::get<IntervalMap>(spec.map);
            const Rational& x = std::get<Rational>(p);
            auto it = std::upper_bound(m.breakpoints.begin(), m.breakpoints.end(), x);
            std::size_t piece = static_cast<std::size_t>(it - m.breakpoints.begin());
            piece = std::clamp<std::size_t>(piece, 1, m.pieces.size()) - 1;
            return Rational(m.pieces[piece].slope * x + m.pieces[piece].intercept);
        }
        case SystemKind::circle_affine: {
            const auto& c = std::get<CircleAffine>(spec.map);
            return fractional_part(Rational(c.multiplier) * std::get<Rational>(p) + c.shift);
        }
        case SystemKind::sft: {
            const auto& s = std::get<SymbolSeq>(p);
            if (s.known_length() < 1) throw DomainError("cannot shift an empty sequence");
            return s.shifted(1);
        }
    }
    return p;
}

Rational distance(const SystemSpec& spec, const Point& a, const Point& b, std::size_t horizon_cap) {
    switch (spec.kind()) {
        case SystemKind::interval_pw_linear:
            return abs(std::get<Rational>(a) - std::get<Rational>(b));
        case SystemKind::circle_affine: {
            Rational d = abs(std::get<Rational>(a) - std::get<Rational>(b));
            return std::min(d, Rational(1 - d));
        }
        case SystemKind::sft: {
            const auto& x = std::get<SymbolSeq>(a);
            const auto& y = std::get<SymbolSeq>(b);
            const bool both_infinite = !x.is_finite() && !y.is_finite();
            const std::size_t window =
                both_infinite ? deciding_length(x, y) : std::min(deciding_length(x, y), horizon_cap);
            if (auto idx = first_difference(x, y, window)) return dyadic(*idx);
            if (both_infinite) return Rational(0);
            return dyadic(window);
        }
    }
    return Rational(0);
}

SymbolSeq least_continuation(const ShiftOfFiniteType& sft, const Word& word) {
    if (word.empty() || !admissible(sft, word)) throw SftError("word '" + word_to_string(word) + "' is not admissible");
    std::vector<std::ptrdiff_t> seen(sft.alphabet, -1);
    Word generated;
    Symbol state = word.back();
    for (;;) {
        if (seen[state] >= 0) {
            const auto start = static_cast<std::size_t>(seen[state]);
            Word prefix = word;
            prefix.insert(prefix.end(), generated.begin(), generated.begin() + static_cast<std::ptrdiff_t>(start));
            Word period(generated.begin() + static_cast<std::ptrdiff_t>(start), generated.end());
            return make_periodic(std::move(prefix), std::move(period));
        }
        seen[state] = static_cast<std::ptrdiff_t>(generated.size());
        Symbol next = 0;
        while (!sft.allowed(state, next)) ++next;
        generated.push_back(next);
        state = next;
    }
}

double sft_entropy(const ShiftOfFiniteType& sft) {
    const auto n = static_cast<Eigen::Index>(sft.alphabet);
    Eigen::MatrixXd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = sft.adjacency[i][j];
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    double rho = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) rho = std::max(rho, std::abs(solver.eigenvalues()[i]));
    return std::log(rho);
}

SystemSpec doubling_map() {
    return SystemSpec{"doubling", CircleAffine{2, Rational(0)}};
}

SystemSpec identity_map() {
    return SystemSpec{"identity", IntervalMap{{Rational(0), Rational(1)}, {LinearPiece{Rational(1), Rational(0)}}}};
}

SystemSpec circle_rotation(Rational shift) {
    return SystemSpec{"rotation", CircleAffine{1, std::move(shift)}};
}

SystemSpec tent_map() {
    return SystemSpec{"tent",
                      IntervalMap{{Rational(0), Rational(1, 2), Rational(1)},
                                  {LinearPiece{Rational(2), Rational(0)}, LinearPiece{Rational(-2), Rational(2)}}}};
}

SystemSpec full_shift(std::size_t alphabet, std::size_t depth) {
    ShiftOfFiniteType s;
    s.alphabet = alphabet;
    s.adjacency.assign(alphabet, std::vector<std::uint8_t>(alphabet, 1));
    s.depth = depth;
    return SystemSpec{"full-shift", s};
}

SystemSpec golden_mean_shift(std::size_t depth) {
    ShiftOfFiniteType s;
    s.alphabet = 2;
    s.adjacency = {{1, 1}, {1, 0}};
    s.depth = depth;
    return SystemSpec{"golden-mean", s};
}

}  // namespace dc1lab
