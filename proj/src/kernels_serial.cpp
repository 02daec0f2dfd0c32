#include "kernels_detail.hpp"

namespace dc1lab::kernels::serial {

std::vector<std::uint8_t> pair_exponents(const SymbolSeq& a, const SymbolSeq& b, std::size_t horizon) {
    detail::require_infinite(a);
    detail::require_infinite(b);
    std::vector<std::uint8_t> e(horizon);
    detail::pair_block(a, b, 0, horizon, e.data());
    return e;
}

std::vector<std::uint8_t> tracking_exponents(const SymbolSeq& y, std::span<const std::uint16_t> entries,
                                             std::span<const SymbolSeq> palette) {
    detail::require_infinite(y);
    const auto succ = successor_table(palette);
    std::vector<std::uint8_t> e(entries.size());
    detail::tracking_block(y, entries, palette, succ, 0, entries.size(), e.data());
    return e;
}

std::vector<Histogram> histograms_at(std::span<const std::uint8_t> e, std::span<const std::size_t> checkpoints) {
    std::vector<Histogram> out;
    Histogram h{};
    std::size_t i = 0;
    for (std::size_t c : checkpoints) {
        if (c > e.size() || c < i) throw InputError("checkpoints must be ascending and within the horizon");
        for (; i < c; ++i) ++h[e[i]];
        out.push_back(h);
    }
    return out;
}

RunSummary longest_run(std::span<const char> bits) {
    RunSummary best;
    std::size_t start = 0, len = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) {
            if (len == 0) start = i;
            ++len;
            if (len > best.longest) best = {len, start};
        } else {
            len = 0;
        }
    }
    return best;
}

}  // namespace dc1lab::kernels::serial
