#include "dc1lab/relation.hpp"

#include "dc1lab/errors.hpp"

#include <algorithm>

namespace dc1lab {

Relatedness related_at(const CyclicDecomposition& dec, VertexId u, VertexId v) {
    Relatedness r;
    r.both_recurrent = dec.recurrent(u) && dec.recurrent(v);
    r.related = r.both_recurrent && *dec.index[u] == *dec.index[v];
    return r;
}

RelationVerdict relate_schedule(const SystemSpec& spec, const Point& x, const Point& y,
                                const std::vector<Resolution>& schedule) {
    if (schedule.empty()) throw InputError("relation schedule is empty");
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (!(schedule[i].delta < schedule[i - 1].delta))
            throw InputError("schedule deltas must be strictly decreasing");
    }
    RelationVerdict verdict;
    verdict.related_for_all_tested = true;
    for (const auto& res : schedule) {
        const ChainGraph g = discretize(spec, res);
        const CyclicDecomposition dec = cyclic_decomposition(g);
        RelationRecord rec;
        rec.delta = res.delta;
        rec.boxes = res.boxes;
        rec.x_vertex = g.vertex_of(x);
        rec.y_vertex = g.vertex_of(y);
        rec.related = related_at(dec, rec.x_vertex, rec.y_vertex).related;
        rec.x_class = dec.index[rec.x_vertex];
        rec.y_class = dec.index[rec.y_vertex];
        verdict.related_for_all_tested = verdict.related_for_all_tested && rec.related;
        verdict.records.push_back(std::move(rec));
    }
    return verdict;
}

EntropyPairs entropy_pairs(const CyclicDecomposition& dec, bool shadowing_verified) {
    EntropyPairs out;
    out.shadowing_verified = shadowing_verified;
    if (!shadowing_verified)
        out.caveat = "shadowing is not verified for this system; pairs are chain-related only and need not be entropy pairs";
    for (const auto& comp : dec.components) {
        for (const auto& cls : comp.classes) {
            for (VertexId u : cls) {
                for (VertexId v : cls) {
                    if (u != v) out.pairs.emplace_back(u, v);
                }
            }
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

EntropyPairs entropy_pairs(const CyclicDecomposition& dec, const SystemSpec& spec) {
    return entropy_pairs(dec, spec.is_sft());
}

std::optional<PropertyPWitness> check_property_P(const ChainGraph& g, const CyclicDecomposition& dec,
                                                 VertexId u, VertexId v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (!related_at(dec, u, v).related) return std::nullopt;
    const std::size_t period = dec.components[dec.index[u]->component].period;
    std::size_t bound = 0;
    for (auto [a, b] : {std::pair{u, u}, std::pair{u, v}, std::pair{v, u}, std::pair{v, v}})
        bound = std::max(bound, pair_threshold(g, dec, a, b));
    bound += g.size();
    for (std::size_t n = 1; n <= bound; ++n) {
        const std::size_t len = period * n;
        auto uu = find_chain(g, u, u, len);
        if (!uu) continue;
        auto uv = find_chain(g, u, v, len);
        if (!uv) continue;
        auto vu = find_chain(g, v, u, len);
        if (!vu) continue;
        auto vv = find_chain(g, v, v, len);
        if (!vv) continue;
        return PropertyPWitness{len, std::move(*uu), std::move(*uv), std::move(*vu), std::move(*vv)};
    }
    return std::nullopt;
}

}  // namespace dc1lab
