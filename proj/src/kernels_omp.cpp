#include "kernels_detail.hpp"

#include <omp.h>

namespace dc1lab::kernels::parallel {

namespace {

constexpr std::size_t chunk = std::size_t{1} << 16;

std::size_t chunks_for(std::size_t n) { return (n + chunk - 1) / chunk; }

}  // namespace

std::vector<std::uint8_t> pair_exponents(const SymbolSeq& a, const SymbolSeq& b, std::size_t horizon) {
    detail::require_infinite(a);
    detail::require_infinite(b);
    std::vector<std::uint8_t> e(horizon);
    const auto blocks = static_cast<long long>(chunks_for(horizon));
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < blocks; ++k) {
        const std::size_t lo = static_cast<std::size_t>(k) * chunk;
        detail::pair_block(a, b, lo, std::min(horizon, lo + chunk), e.data());
    }
    return e;
}

std::vector<std::uint8_t> tracking_exponents(const SymbolSeq& y, std::span<const std::uint16_t> entries,
                                             std::span<const SymbolSeq> palette) {
    detail::require_infinite(y);
    const auto succ = successor_table(palette);
    std::vector<std::uint8_t> e(entries.size());
    const auto blocks = static_cast<long long>(chunks_for(entries.size()));
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < blocks; ++k) {
        const std::size_t lo = static_cast<std::size_t>(k) * chunk;
        detail::tracking_block(y, entries, palette, succ, lo, std::min(entries.size(), lo + chunk), e.data());
    }
    return e;
}

std::vector<Histogram> histograms_at(std::span<const std::uint8_t> e, std::span<const std::size_t> checkpoints) {
    std::vector<Histogram> out;
    Histogram total{};
    std::size_t lo = 0;
    for (std::size_t c : checkpoints) {
        if (c > e.size() || c < lo) throw InputError("checkpoints must be ascending and within the horizon");
        const auto blocks = static_cast<long long>(chunks_for(c - lo));
#pragma omp parallel
        {
            Histogram local{};
#pragma omp for schedule(static) nowait
            for (long long k = 0; k < blocks; ++k) {
                const std::size_t from = lo + static_cast<std::size_t>(k) * chunk;
                const std::size_t to = std::min(c, from + chunk);
                for (std::size_t i = from; i < to; ++i) ++local[e[i]];
            }
#pragma omp critical
            for (std::size_t b = 0; b < local.size(); ++b) total[b] += local[b];
        }
        out.push_back(total);
        lo = c;
    }
    return out;
}

RunSummary longest_run(std::span<const char> bits) {
    struct Piece {
        std::size_t prefix = 0, suffix = 0;
        RunSummary inner;
        bool full = false;
    };
    const std::size_t n = bits.size();
    std::vector<Piece> pieces(chunks_for(n));
    const auto blocks = static_cast<long long>(pieces.size());
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < blocks; ++k) {
        const std::size_t lo = static_cast<std::size_t>(k) * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        Piece& p = pieces[static_cast<std::size_t>(k)];
        std::size_t i = lo;
        while (i < hi && bits[i]) ++i;
        p.prefix = i - lo;
        if (i == hi) {
            p.full = true;
            continue;
        }
        std::size_t j = hi;
        while (bits[j - 1]) --j;
        p.suffix = hi - j;
        std::size_t start = 0, len = 0;
        for (; i < j; ++i) {
            if (bits[i]) {
                if (len == 0) start = i;
                ++len;
                if (len > p.inner.longest) p.inner = {len, start};
            } else {
                len = 0;
            }
        }
    }
    RunSummary best;
    std::size_t open_start = 0, open_len = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const Piece& p = pieces[k];
        const std::size_t lo = k * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (p.full) {
            if (open_len == 0) open_start = lo;
            open_len += hi - lo;
            continue;
        }
        if (open_len + p.prefix > 0) {
            const std::size_t s = open_len > 0 ? open_start : lo;
            if (open_len + p.prefix > best.longest) best = {open_len + p.prefix, s};
        }
        if (p.inner.longest > best.longest) best = p.inner;
        open_len = p.suffix;
        open_start = hi - p.suffix;
    }
    if (open_len > best.longest) best = {open_len, open_start};
    return best;
}

}  // namespace dc1lab::kernels::parallel
