#pragma once

// Data-parallel inner loops over long orbits. Every kernel exists twice:
// `serial` is the plain reference loop, `parallel` the OpenMP version. Tests
// require identical output; bench/ compares their speed.

#include "dc1lab/symbolic.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dc1lab::kernels {

/// Exponents are capped: e = cap means no disagreement within cap symbols,
/// i.e. distance <= 2^-cap.
inline constexpr unsigned exponent_cap = 64;

using Histogram = std::array<std::uint64_t, exponent_cap + 1>;

/// Longest run of ones and where it starts.
struct RunSummary {
    std::size_t longest = 0;
    std::size_t start = 0;
};

/// For a palette of sequences: successor[a * n + b] != 0 iff sigma(p_a) == p_b.
std::vector<char> successor_table(std::span<const SymbolSeq> palette);

namespace serial {

/// e_i = min(cap, first j with a_{i+j} != b_{i+j}) for i < horizon.
std::vector<std::uint8_t> pair_exponents(const SymbolSeq& a, const SymbolSeq& b,
                                         std::size_t horizon);

/// e_i = min(cap, first j with y_{i+j} != p_{entries[i]}(j)).
std::vector<std::uint8_t> tracking_exponents(const SymbolSeq& y,
                                             std::span<const std::uint16_t> entries,
                                             std::span<const SymbolSeq> palette);

/// Cumulative exponent histograms over [0, c) for each checkpoint c
/// (checkpoints ascending, each <= e.size()).
std::vector<Histogram> histograms_at(std::span<const std::uint8_t> e,
                                     std::span<const std::size_t> checkpoints);

RunSummary longest_run(std::span<const char> bits);

}  // namespace serial

namespace parallel {

std::vector<std::uint8_t> pair_exponents(const SymbolSeq& a, const SymbolSeq& b,
                                         std::size_t horizon);
std::vector<std::uint8_t> tracking_exponents(const SymbolSeq& y,
                                             std::span<const std::uint16_t> entries,
                                             std::span<const SymbolSeq> palette);
std::vector<Histogram> histograms_at(std::span<const std::uint8_t> e,
                                     std::span<const std::size_t> checkpoints);
RunSummary longest_run(std::span<const char> bits);

}  // namespace parallel

/// sum over a histogram of count * 2^-e, the e = cap bucket counted at 2^-cap.
double dyadic_mass(const Histogram& h);

}  // namespace dc1lab::kernels
