#include "dc1lab/chain_graph.hpp"

#include "dc1lab/errors.hpp"

#include <omp.h>

#include <algorithm>

namespace dc1lab {

namespace {

struct Span {
    Rational lo, hi;
    bool lo_closed = true;
    bool hi_closed = false;

    bool empty() const { return hi < lo || (lo == hi && !(lo_closed && hi_closed)); }
};

Span intersect(const Span& a, const Span& b) {
    Span s;
    if (a.lo > b.lo) {
        s.lo = a.lo;
        s.lo_closed = a.lo_closed;
    } else if (b.lo > a.lo) {
        s.lo = b.lo;
        s.lo_closed = b.lo_closed;
    } else {
        s.lo = a.lo;
        s.lo_closed = a.lo_closed && b.lo_closed;
    }
    if (a.hi < b.hi) {
        s.hi = a.hi;
        s.hi_closed = a.hi_closed;
    } else if (b.hi < a.hi) {
        s.hi = b.hi;
        s.hi_closed = b.hi_closed;
    } else {
        s.hi = a.hi;
        s.hi_closed = a.hi_closed && b.hi_closed;
    }
    return s;
}

Span as_span(const Box& b) { return Span{b.lo, b.hi, true, b.hi_closed}; }

/// Image of a span under x -> slope*x + intercept.
Span affine_image(const Span& d, const Rational& slope, const Rational& intercept) {
    if (slope > 0) return Span{slope * d.lo + intercept, slope * d.hi + intercept, d.lo_closed, d.hi_closed};
    if (slope < 0) return Span{slope * d.hi + intercept, slope * d.lo + intercept, d.hi_closed, d.lo_closed};
    return Span{intercept, intercept, true, true};
}

/// Closed delta-thickening of a box; the open right end stays open.
Span thicken(const Box& b, const Rational& delta, const Rational& shift) {
    return Span{b.lo - delta + shift, b.hi + delta + shift, true, b.hi_closed};
}

std::vector<Span> interval_images(const IntervalMap& m, const Box& box) {
    std::vector<Span> out;
    const Span dom = as_span(box);
    for (std::size_t p = 0; p < m.pieces.size(); ++p) {
        const Span piece{m.breakpoints[p], m.breakpoints[p + 1], true, true};
        const Span d = intersect(dom, piece);
        if (d.empty()) continue;
        out.push_back(affine_image(d, m.pieces[p].slope, m.pieces[p].intercept));
    }
    return out;
}

std::vector<VertexId> box_row(const SystemSpec& spec, const std::vector<Box>& boxes, std::size_t i,
                              const Rational& delta) {
    const auto n = static_cast<long long>(boxes.size());
    const Rational N(n);
    std::vector<VertexId> row;
    if (spec.kind() == SystemKind::interval_pw_linear) {
        for (const Span& img : interval_images(std::get<IntervalMap>(spec.map), boxes[i])) {
            const long long from = std::max<long long>(0, floor_of((img.lo - delta) * N).convert_to<long long>() - 1);
            const long long to = std::min<long long>(n - 1, floor_of((img.hi + delta) * N).convert_to<long long>() + 1);
            for (long long j = from; j <= to; ++j) {
                if (!intersect(img, thicken(boxes[j], delta, Rational(0))).empty())
                    row.push_back(static_cast<VertexId>(j));
            }
        }
    } else {
        const auto& c = std::get<CircleAffine>(spec.map);
        const Span img = affine_image(as_span(boxes[i]), Rational(c.multiplier), c.shift);
        if (img.hi - img.lo + 2 * delta > 1) {
            for (long long j = 0; j < n; ++j) row.push_back(static_cast<VertexId>(j));
        } else {
            const long long from = floor_of((img.lo - delta) * N).convert_to<long long>() - 1;
            const long long to = floor_of((img.hi + delta) * N).convert_to<long long>() + 1;
            for (long long k = from; k <= to; ++k) {
                const long long j = ((k % n) + n) % n;
                const long long turns = (k - j) / n;
                if (!intersect(img, thicken(boxes[j], delta, Rational(turns))).empty())
                    row.push_back(static_cast<VertexId>(j));
            }
        }
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    return row;
}

void enumerate_words(const ShiftOfFiniteType& sft, std::size_t depth, Word& current, std::vector<Word>& out) {
    if (current.size() == depth) {
        out.push_back(current);
        return;
    }
    for (Symbol s = 0; s < sft.alphabet; ++s) {
        if (!current.empty() && !sft.allowed(current.back(), s)) continue;
        current.push_back(s);
        enumerate_words(sft, depth, current, out);
        current.pop_back();
    }
}

/// Words w, w' are joined when some x in [w], y in [w'] have sigma(x) and y
/// agreeing on their first `agree` symbols.
bool word_edge(const ShiftOfFiniteType& sft, const Word& w, const Word& next, std::size_t agree) {
    const std::size_t k = w.size();
    for (std::size_t i = 0; i < std::min(agree, k - 1); ++i) {
        if (w[i + 1] != next[i]) return false;
    }
    if (agree == k) return sft.allowed(w[k - 1], next[k - 1]);
    return true;
}

template <bool Parallel>
ChainGraph build(const SystemSpec& spec, std::size_t boxes_or_depth, const Rational& delta) {
    validate(spec);
    BoxCover cover = make_cover(spec, boxes_or_depth, delta);
    const std::size_t n = cover.size();
    std::vector<std::vector<VertexId>> adj(n);
    if (spec.is_sft()) {
        const auto& sft = spec.sft();
        const std::size_t agree = delta >= 1 ? 0 : dyadic_depth_at_most(delta);
        const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (Parallel)
        for (long long i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (word_edge(sft, cover.words[i], cover.words[j], agree))
                    adj[i].push_back(static_cast<VertexId>(j));
            }
        }
        return ChainGraph::from_words(std::move(adj), std::move(cover.words), sft, delta);
    }
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4) if (Parallel)
    for (long long i = 0; i < count; ++i) adj[i] = box_row(spec, cover.boxes, static_cast<std::size_t>(i), delta);
    return ChainGraph::from_boxes(std::move(adj), std::move(cover.boxes),
                                  spec.kind() == SystemKind::circle_affine, delta);
}

}  // namespace

BoxCover make_cover(const SystemSpec& spec, std::size_t boxes_or_depth, const Rational& delta) {
    if (delta < 0) throw InputError("delta must be non-negative");
    BoxCover cover;
    cover.delta = delta;
    if (spec.is_sft()) {
        const auto& sft = spec.sft();
        const std::size_t k = boxes_or_depth;
        if (k < 1) throw InputError("word depth must be at least 1");
        if (delta < dyadic(k))
            throw InputError("delta " + to_string(delta) + " is below the cylinder resolution 2^-" +
                             std::to_string(k));
        Word current;
        enumerate_words(sft, k, current, cover.words);
        cover.diam = dyadic(k);
        return cover;
    }
    const std::size_t n = boxes_or_depth;
    if (n < 2) throw InputError("at least two boxes are required");
    for (std::size_t i = 0; i < n; ++i) {
        Box b{Rational(i, n), Rational(i + 1, n), false};
        cover.boxes.push_back(std::move(b));
    }
    if (spec.kind() == SystemKind::interval_pw_linear) cover.boxes.back().hi_closed = true;
    cover.diam = Rational(1, n);
    return cover;
}

ChainGraph discretize(const SystemSpec& spec, std::size_t boxes_or_depth, const Rational& delta) {
    return build<true>(spec, boxes_or_depth, delta);
}

ChainGraph discretize(const SystemSpec& spec, const Resolution& res) {
    return build<true>(spec, res.boxes, res.delta);
}

ChainGraph discretize_serial(const SystemSpec& spec, std::size_t boxes_or_depth, const Rational& delta) {
    return build<false>(spec, boxes_or_depth, delta);
}

Resolution resolution_for_delta(const SystemSpec& spec, const Rational& delta) {
    if (delta <= 0) throw InputError("delta must be positive to derive a resolution");
    if (spec.is_sft()) {
        const std::size_t k = dyadic_depth_at_most(delta);
        if (dyadic(k) != delta)
            throw InputError("shift resolutions must be dyadic (2^-k), got " + to_string(delta));
        return Resolution{std::max<std::size_t>(k, 1), delta};
    }
    BigInt n = floor_of(Rational(1) / delta);
    if (Rational(n) * delta < 1) n += 1;
    return Resolution{std::max<std::size_t>(2, n.convert_to<std::size_t>()), delta};
}

}  // namespace dc1lab
