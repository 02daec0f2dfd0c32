#include "dc1lab/pstar.hpp"

#include "dc1lab/decomposition.hpp"
#include "dc1lab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace dc1lab {

Rational PStarWitness::min_certified_separation() const {
    if (certified_separations.empty()) return Rational(0);
    return *std::min_element(certified_separations.begin(), certified_separations.end());
}

Rational certified_separation(const ChainGraph& g, VertexId a, VertexId b) {
    return g.distance(a, b) - g.separation_slack();
}

namespace {

/// Product graph on pairs separated by more than r, generated on demand.
class SeparatedProduct {
public:
    SeparatedProduct(const ChainGraph& g, const Rational& r) : g_(g), r_(r), n_(g.size()), state_(n_ * n_, 0) {}

    bool allowed(std::size_t p) {
        char& s = state_[p];
        if (s == 0) s = certified_separation(g_, first(p), second(p)) > r_ ? 1 : 2;
        return s == 1;
    }

    template <class F>
    void successors(std::size_t p, F&& f) {
        for (VertexId a : g_.successors(first(p))) {
            for (VertexId b : g_.successors(second(p))) {
                const std::size_t q = pair(a, b);
                if (allowed(q)) f(q);
            }
        }
    }

    template <class F>
    void predecessors(std::size_t p, F&& f) {
        for (VertexId a : g_.predecessors(first(p))) {
            for (VertexId b : g_.predecessors(second(p))) {
                const std::size_t q = pair(a, b);
                if (allowed(q)) f(q);
            }
        }
    }

    std::size_t pair(VertexId a, VertexId b) const { return static_cast<std::size_t>(a) * n_ + b; }
    VertexId first(std::size_t p) const { return static_cast<VertexId>(p / n_); }
    VertexId second(std::size_t p) const { return static_cast<VertexId>(p % n_); }
    std::size_t size() const { return n_ * n_; }

private:
    const ChainGraph& g_;
    Rational r_;
    std::size_t n_;
    std::vector<char> state_;
};

}  // namespace

PStarResult property_star(const ChainGraph& g, VertexId u, VertexId v, const Rational& r) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (r < 0) throw InputError("separation radius must be non-negative");
    PStarResult result;
    if (!(certified_separation(g, u, v) > r)) {
        result.reason = "endpoints too close";
        return result;
    }
    SeparatedProduct prod(g, r);
    const std::size_t start = prod.pair(u, v);
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);

    // Shortest return to the start pair.
    std::map<std::size_t, std::size_t> dist;
    dist[start] = 0;
    std::queue<std::size_t> q;
    q.push(start);
    std::size_t length = unseen;
    while (!q.empty() && length == unseen) {
        const std::size_t p = q.front();
        q.pop();
        prod.successors(p, [&](std::size_t s) {
            if (s == start && length == unseen) length = dist[p] + 1;
            if (!dist.count(s)) {
                dist[s] = dist[p] + 1;
                q.push(s);
            }
        });
    }
    if (length == unseen) {
        result.reason = "no separated cycle through the pair";
        return result;
    }

    // back[t]: pairs that return to the start in exactly t steps.
    std::vector<std::vector<std::size_t>> back(length + 1);
    back[0] = {start};
    for (std::size_t t = 1; t <= length; ++t) {
        std::vector<std::size_t> layer;
        for (std::size_t p : back[t - 1]) prod.predecessors(p, [&](std::size_t s) { layer.push_back(s); });
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
        back[t] = std::move(layer);
    }

    PStarWitness w;
    w.r = r;
    w.length = length;
    std::size_t cur = start;
    auto record = [&](std::size_t p) {
        const VertexId a = prod.first(p);
        const VertexId b = prod.second(p);
        w.cycle1.push_back(a);
        w.cycle2.push_back(b);
        w.separations.push_back(g.distance(a, b));
        w.certified_separations.push_back(certified_separation(g, a, b));
    };
    record(cur);
    for (std::size_t s = 0; s < length; ++s) {
        const auto& layer = back[length - s - 1];
        std::size_t best = unseen;
        prod.successors(cur, [&](std::size_t c) {
            if (c < best && std::binary_search(layer.begin(), layer.end(), c)) best = c;
        });
        cur = best;
        record(cur);
    }
    result.witness = std::move(w);
    return result;
}

bool verify_pstar_witness(const ChainGraph& g, const PStarWitness& w, VertexId u, VertexId v) {
    if (w.length < 1 || w.cycle1.size() != w.length + 1 || w.cycle2.size() != w.length + 1) return false;
    if (w.cycle1.front() != u || w.cycle2.front() != v) return false;
    if (!verify_chain(g, w.cycle1, true) || !verify_chain(g, w.cycle2, true)) return false;
    for (std::size_t i = 0; i <= w.length; ++i) {
        if (!(certified_separation(g, w.cycle1[i], w.cycle2[i]) > w.r)) return false;
    }
    return true;
}

OmegaProduct omega_product(const SystemSpec& spec, const ChainGraph& g, const Point& u, const Point& v,
                           std::size_t horizon) {
    if (horizon < 1) throw InputError("horizon must be at least 1");
    OmegaProduct out;
    if (spec.is_sft()) {
        const auto& a = std::get<SymbolSeq>(u);
        const auto& b = std::get<SymbolSeq>(v);
        if (a.is_finite() || b.is_finite())
            throw InputError("omega-limits need eventually periodic sequences");
        const std::size_t start = std::max(a.prefix.size(), b.prefix.size());
        const std::size_t period = std::lcm(a.period.size(), b.period.size());
        SymbolSeq x = a.shifted(start);
        SymbolSeq y = b.shifted(start);
        for (std::size_t i = 0; i < period; ++i) {
            out.pairs.emplace(g.vertex_of(x), g.vertex_of(y));
            out.points.emplace_back(x, y);
            x = x.shifted(1);
            y = y.shifted(1);
        }
        out.exact = true;
        return out;
    }
    std::map<std::pair<Rational, Rational>, std::size_t> first_seen;
    std::vector<std::pair<Point, Point>> orbit;
    Point x = u, y = v;
    for (std::size_t i = 0; i < horizon; ++i) {
        auto key = std::make_pair(std::get<Rational>(x), std::get<Rational>(y));
        auto [it, fresh] = first_seen.emplace(key, i);
        if (!fresh) {
            for (std::size_t j = it->second; j < i; ++j) {
                out.pairs.emplace(g.vertex_of(orbit[j].first), g.vertex_of(orbit[j].second));
                out.points.push_back(orbit[j]);
            }
            out.exact = true;
            return out;
        }
        orbit.emplace_back(x, y);
        x = evaluate(spec, x);
        y = evaluate(spec, y);
    }
    std::map<std::pair<VertexId, VertexId>, std::size_t> visits;
    for (std::size_t i = horizon / 2; i < horizon; ++i)
        ++visits[{g.vertex_of(orbit[i].first), g.vertex_of(orbit[i].second)}];
    for (const auto& [pair, count] : visits) {
        if (count >= 2) out.pairs.insert(pair);
    }
    return out;
}

}  // namespace dc1lab
