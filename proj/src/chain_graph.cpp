#include "dc1lab/chain_graph.hpp"

#include "dc1lab/errors.hpp"

#include <algorithm>

namespace dc1lab {

namespace {

void normalize(std::vector<std::vector<VertexId>>& adj) {
    const std::size_t n = adj.size();
    for (auto& row : adj) {
        for (VertexId v : row) {
            if (v >= n) throw InputError("edge target " + std::to_string(v) + " out of range");
        }
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
}

}  // namespace

ChainGraph::ChainGraph(std::vector<std::vector<VertexId>> adjacency, std::vector<Rational> distance_table)
    : succ_(std::move(adjacency)), table_(std::move(distance_table)) {
    normalize(succ_);
    if (!table_.empty() && table_.size() != succ_.size() * succ_.size())
        throw InputError("distance table must have n*n entries");
    build_predecessors();
}

ChainGraph ChainGraph::from_boxes(std::vector<std::vector<VertexId>> adjacency, std::vector<Box> boxes,
                                  bool circle, Rational delta) {
    ChainGraph g(std::move(adjacency));
    if (boxes.size() != g.size()) throw InputError("one box per vertex required");
    g.geometry_ = circle ? Geometry::circle : Geometry::interval;
    g.boxes_ = std::move(boxes);
    g.delta_ = std::move(delta);
    return g;
}

ChainGraph ChainGraph::from_words(std::vector<std::vector<VertexId>> adjacency, std::vector<Word> words,
                                  ShiftOfFiniteType sft, Rational delta) {
    ChainGraph g(std::move(adjacency));
    if (words.size() != g.size()) throw InputError("one word per vertex required");
    g.geometry_ = Geometry::words;
    g.words_ = std::move(words);
    g.sft_ = std::move(sft);
    g.delta_ = std::move(delta);
    return g;
}

void ChainGraph::build_predecessors() {
    pred_.assign(succ_.size(), {});
    for (VertexId u = 0; u < succ_.size(); ++u) {
        for (VertexId v : succ_[u]) pred_[v].push_back(u);
    }
}

std::size_t ChainGraph::edge_count() const noexcept {
    std::size_t e = 0;
    for (const auto& row : succ_) e += row.size();
    return e;
}

bool ChainGraph::has_edge(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    return std::binary_search(succ_[u].begin(), succ_[u].end(), v);
}

void ChainGraph::require_vertex(VertexId v) const {
    if (v >= size()) throw InputError("unknown vertex id " + std::to_string(v));
}

std::string ChainGraph::metric_name() const {
    switch (geometry_) {
        case Geometry::abstract: return table_.empty() ? "discrete" : "table";
        case Geometry::interval: return "absolute";
        case Geometry::circle: return "arc";
        case Geometry::words: return "symbolic";
    }
    return "unknown";
}

Rational ChainGraph::distance(VertexId u, VertexId v) const {
    require_vertex(u);
    require_vertex(v);
    switch (geometry_) {
        case Geometry::abstract:
            if (table_.empty()) return Rational(u == v ? 0 : 1);
            return table_[u * size() + v];
        case Geometry::interval:
            return abs(boxes_[u].center() - boxes_[v].center());
        case Geometry::circle: {
            Rational d = abs(boxes_[u].center() - boxes_[v].center());
            return std::min(d, Rational(1 - d));
        }
        case Geometry::words: {
            const Word& a = words_[u];
            const Word& b = words_[v];
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (a[i] != b[i]) return dyadic(i);
            }
            return Rational(0);
        }
    }
    return Rational(0);
}

Rational ChainGraph::separation_slack() const {
    switch (geometry_) {
        case Geometry::interval:
        case Geometry::circle: return cell_diameter();
        default: return Rational(0);
    }
}

Rational ChainGraph::cell_diameter() const {
    switch (geometry_) {
        case Geometry::abstract: return Rational(0);
        case Geometry::words: return dyadic(word_depth());
        default: {
            Rational d(0);
            for (const auto& b : boxes_) d = std::max(d, Rational(b.hi - b.lo));
            return d;
        }
    }
}

std::string ChainGraph::label(VertexId v) const {
    require_vertex(v);
    switch (geometry_) {
        case Geometry::abstract: return std::to_string(v);
        case Geometry::words: return word_to_string(words_[v]);
        default: {
            const Box& b = boxes_[v];
            return "[" + to_string(b.lo) + "," + to_string(b.hi) + (b.hi_closed ? "]" : ")");
        }
    }
}

std::optional<VertexId> ChainGraph::locate(const Point& p) const {
    switch (geometry_) {
        case Geometry::abstract: return std::nullopt;
        case Geometry::words: {
            const auto* s = std::get_if<SymbolSeq>(&p);
            const std::size_t k = word_depth();
            if (s == nullptr || s->known_length() < k) return std::nullopt;
            const Word w = s->head(k);
            auto it = std::lower_bound(words_.begin(), words_.end(), w);
            if (it == words_.end() || *it != w) return std::nullopt;
            return static_cast<VertexId>(it - words_.begin());
        }
        default: {
            const auto* x = std::get_if<Rational>(&p);
            if (x == nullptr) return std::nullopt;
            auto it = std::upper_bound(boxes_.begin(), boxes_.end(), *x,
                                       [](const Rational& value, const Box& b) { return value < b.lo; });
            if (it == boxes_.begin()) return std::nullopt;
            --it;
            if (!it->contains(*x)) return std::nullopt;
            return static_cast<VertexId>(it - boxes_.begin());
        }
    }
}

VertexId ChainGraph::vertex_of(const Point& p) const {
    if (auto v = locate(p)) return *v;
    throw InputError("point " + to_string(p) + " maps to no box");
}

Point ChainGraph::representative(VertexId v) const {
    require_vertex(v);
    switch (geometry_) {
        case Geometry::words: return least_continuation(*sft_, words_[v]);
        case Geometry::abstract: throw InputError("abstract graphs carry no points");
        default: return boxes_[v].center();
    }
}

}  // namespace dc1lab
