#pragma once

#include "dc1lab/rational.hpp"
#include "dc1lab/symbolic.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace dc1lab {

enum class SystemKind { interval_pw_linear, circle_affine, sft };

std::string to_string(SystemKind kind);

/// f(x) = slope * x + intercept on one piece.
struct LinearPiece {
    Rational slope;
    Rational intercept;
};

/// Continuous piecewise-linear self-map of [0,1]; piece p acts on
/// [breakpoints[p], breakpoints[p+1]].
struct IntervalMap {
    std::vector<Rational> breakpoints;
    std::vector<LinearPiece> pieces;
};

/// x -> multiplier * x + shift (mod 1) on R/Z. An integer multiplier keeps
/// the map continuous on the circle.
struct CircleAffine {
    long long multiplier = 1;
    Rational shift;
};

/// One-sided shift of finite type with the 2^-min{i : x_i != y_i} metric.
/// `depth` is the default cylinder depth used by discretization.
struct ShiftOfFiniteType {
    std::size_t alphabet = 2;
    std::vector<std::vector<std::uint8_t>> adjacency;
    std::size_t depth = 1;

    bool allowed(Symbol a, Symbol b) const { return adjacency[a][b] != 0; }
};

struct SystemSpec {
    std::string name;
    std::variant<IntervalMap, CircleAffine, ShiftOfFiniteType> map;

    SystemKind kind() const noexcept;
    std::string metric_name() const;
    bool is_sft() const noexcept { return kind() == SystemKind::sft; }
    const ShiftOfFiniteType& sft() const;
};

using Point = std::variant<Rational, SymbolSeq>;

std::string to_string(const Point& p);

/// Parses a point in the notation of the system: rationals/decimals for
/// interval and circle systems, "01(1)"-style sequences for shifts.
Point parse_point(const SystemSpec& spec, std::string_view text);

/// Throws ValidationError when the system breaks its invariants (ordering and
/// continuity of pieces, range inside [0,1], no dead symbols, ...).
void validate(const SystemSpec& spec);

/// Throws DomainError unless `p` lies in the phase space.
void require_in_domain(const SystemSpec& spec, const Point& p);

/// Exact image f(p).
Point evaluate(const SystemSpec& spec, const Point& p);

/// Symbolic distances are exact when the first disagreement is found within
/// the deciding window (or `horizon_cap` symbols for finite sequences);
/// otherwise 2^-horizon_cap is returned as an upper bound.
Rational distance(const SystemSpec& spec, const Point& a, const Point& b,
                  std::size_t horizon_cap = 64);

/// True when the SFT admits the word (every consecutive pair allowed).
bool admissible(const ShiftOfFiniteType& sft, const Word& w);

/// Throws SftError naming the first forbidden transition of an eventually
/// periodic (or finite) sequence.
void require_admissible(const ShiftOfFiniteType& sft, const SymbolSeq& s);

/// Lexicographically least admissible eventually periodic continuation of
/// `word` (greedy smallest successor until a state repeats).
SymbolSeq least_continuation(const ShiftOfFiniteType& sft, const Word& word);

/// Topological entropy log(spectral radius) of the SFT adjacency matrix.
double sft_entropy(const ShiftOfFiniteType& sft);

/// Builders for the systems used throughout tests and configs.
SystemSpec doubling_map();
SystemSpec identity_map();
SystemSpec circle_rotation(Rational shift);
SystemSpec tent_map();
SystemSpec full_shift(std::size_t alphabet = 2, std::size_t depth = 1);
SystemSpec golden_mean_shift(std::size_t depth = 2);

}  // namespace dc1lab
