#pragma once

#include "dc1lab/systems.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace dc1lab {

/// Entries are stored as indices into a small palette of points, so block
/// pseudo-orbits of tens of millions of steps stay compact.
struct PseudoOrbit {
    enum class Kind { finite, blockwise };

    std::vector<Point> palette;
    std::vector<std::uint16_t> entries;
    Kind kind = Kind::finite;

    std::size_t size() const noexcept { return entries.size(); }
    const Point& operator[](std::size_t i) const { return palette[entries[i]]; }

    /// One palette slot per distinct point.
    static PseudoOrbit from_points(const std::vector<Point>& points);
};

/// d(f(x_i), x_{i+1}) for every step.
std::vector<Rational> defects(const SystemSpec& spec, const PseudoOrbit& po);

/// Read-off shadow of a pseudo-orbit of depth-k cylinders: y_i is the first
/// symbol of entry i, followed by the last entry itself. Consecutive depth-k
/// words must overlap on k-1 symbols (PreconditionError naming the index);
/// the result must be admissible (SftError).
SymbolSeq shadow_sft(const ShiftOfFiniteType& sft, const PseudoOrbit& po, std::size_t depth);

/// eps_m = (1/m) sum_{i<m} d(f^i(y), x_i) for m = 1..n.
std::vector<double> tracking_average(const SystemSpec& spec, const Point& y, const PseudoOrbit& po,
                                     std::size_t n);

/// eps at selected horizons only; uses the parallel kernels on shifts.
std::vector<double> tracking_average_at(const SystemSpec& spec, const Point& y,
                                        const PseudoOrbit& po,
                                        std::span<const std::size_t> checkpoints);

/// Largest d(f^i(y), x_i) for i < n.
Rational max_tracking_distance(const SystemSpec& spec, const Point& y, const PseudoOrbit& po,
                               std::size_t n);

/// JSON lines: one entry per line, {"point": "..."} in the system's notation.
PseudoOrbit read_pseudo_orbit(const SystemSpec& spec, std::istream& in);
void write_pseudo_orbit(const PseudoOrbit& po, std::ostream& out);

}  // namespace dc1lab
