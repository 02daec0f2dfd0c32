#include "dc1lab/kernels.hpp"

#include <cmath>

namespace dc1lab::kernels {

std::vector<char> successor_table(std::span<const SymbolSeq> palette) {
    const std::size_t n = palette.size();
    std::vector<char> table(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        if (palette[a].known_length() < 2) continue;
        const SymbolSeq next = palette[a].shifted(1);
        for (std::size_t b = 0; b < n; ++b) table[a * n + b] = next == palette[b] ? 1 : 0;
    }
    return table;
}

double dyadic_mass(const Histogram& h) {
    double total = 0.0;
    for (unsigned e = 0; e <= exponent_cap; ++e) total += static_cast<double>(h[e]) * std::ldexp(1.0, -static_cast<int>(e));
    return total;
}

}  // namespace dc1lab::kernels
