#pragma once

#include "dc1lab/errors.hpp"
#include "dc1lab/kernels.hpp"

#include <algorithm>

namespace dc1lab::kernels::detail {

inline void require_infinite(const SymbolSeq& s) {
    if (s.is_finite()) throw InputError("orbit kernels need eventually periodic sequences");
}

/// Direct scan, at most `exponent_cap` symbols.
template <class A, class B>
std::uint8_t scan(A&& a, B&& b) {
    unsigned j = 0;
    while (j < exponent_cap && a(j) == b(j)) ++j;
    return static_cast<std::uint8_t>(j);
}

inline std::uint8_t extend(std::uint8_t next) {
    return static_cast<std::uint8_t>(std::min<unsigned>(exponent_cap, next + 1u));
}

/// Backward recurrence over [lo, hi): the last index is scanned directly,
/// every earlier one reuses its successor.
inline void pair_block(const SymbolSeq& a, const SymbolSeq& b, std::size_t lo, std::size_t hi,
                       std::uint8_t* out) {
    if (lo >= hi) return;
    const std::size_t last = hi - 1;
    out[last] = scan([&](unsigned j) { return a.at(last + j); }, [&](unsigned j) { return b.at(last + j); });
    for (std::size_t i = last; i-- > lo;) out[i] = a.at(i) != b.at(i) ? 0 : extend(out[i + 1]);
}

inline void tracking_block(const SymbolSeq& y, std::span<const std::uint16_t> entries,
                           std::span<const SymbolSeq> palette, const std::vector<char>& succ, std::size_t lo,
                           std::size_t hi, std::uint8_t* out) {
    const std::size_t n = palette.size();
    auto direct = [&](std::size_t i) {
        const SymbolSeq& p = palette[entries[i]];
        const std::size_t limit = std::min<std::size_t>(exponent_cap, p.known_length());
        unsigned j = 0;
        while (j < limit && y.at(i + j) == p.at(j)) ++j;
        return static_cast<std::uint8_t>(j);
    };
    if (lo >= hi) return;
    out[hi - 1] = direct(hi - 1);
    for (std::size_t i = hi - 1; i-- > lo;) {
        const std::uint16_t a = entries[i];
        if (succ[a * n + entries[i + 1]]) {
            out[i] = y.at(i) != palette[a].at(0) ? 0 : extend(out[i + 1]);
        } else {
            out[i] = direct(i);
        }
    }
}

}  // namespace dc1lab::kernels::detail
