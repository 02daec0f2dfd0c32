#pragma once

#include "dc1lab/rational.hpp"
#include "dc1lab/symbolic.hpp"
#include "dc1lab/systems.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dc1lab {

using VertexId = std::uint32_t;
using Path = std::vector<VertexId>;

/// Half-open [lo, hi), or closed when `hi_closed` (last box of [0,1]).
struct Box {
    Rational lo;
    Rational hi;
    bool hi_closed = false;

    Rational center() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && (x < hi || (hi_closed && x == hi)); }
};

/// Directed graph whose edges are the admissible one-step moves of a
/// delta-chain over a finite cover. Immutable once built; adjacency lists are
/// sorted so every traversal is deterministic.
class ChainGraph {
public:
    enum class Geometry { abstract, interval, circle, words };

    /// Abstract graph. `distance_table` is row-major n*n; when empty the
    /// discrete metric (1 off the diagonal) is used.
    explicit ChainGraph(std::vector<std::vector<VertexId>> adjacency,
                        std::vector<Rational> distance_table = {});

    static ChainGraph from_boxes(std::vector<std::vector<VertexId>> adjacency,
                                 std::vector<Box> boxes, bool circle, Rational delta);
    static ChainGraph from_words(std::vector<std::vector<VertexId>> adjacency,
                                 std::vector<Word> words, ShiftOfFiniteType sft, Rational delta);

    std::size_t size() const noexcept { return succ_.size(); }
    std::size_t edge_count() const noexcept;
    std::span<const VertexId> successors(VertexId v) const { return succ_.at(v); }
    std::span<const VertexId> predecessors(VertexId v) const { return pred_.at(v); }
    bool has_edge(VertexId u, VertexId v) const;

    Geometry geometry() const noexcept { return geometry_; }
    const Rational& delta() const noexcept { return delta_; }
    std::string metric_name() const;

    /// Vertex distance: box centers for box covers, exact cylinder distance
    /// for words, the supplied table for abstract graphs.
    Rational distance(VertexId u, VertexId v) const;

    /// Worst-case gap between vertex distance and the distance of arbitrary
    /// points inside two distinct vertices (box diameter; 0 for cylinders
    /// and abstract graphs).
    Rational separation_slack() const;

    /// Largest box (or cylinder) diameter.
    Rational cell_diameter() const;

    std::string label(VertexId v) const;
    const Box& box(VertexId v) const { return boxes_.at(v); }
    const Word& word(VertexId v) const { return words_.at(v); }
    std::size_t word_depth() const noexcept { return words_.empty() ? 0 : words_.front().size(); }
    const std::optional<ShiftOfFiniteType>& sft() const noexcept { return sft_; }

    /// Vertex containing `p`, if any.
    std::optional<VertexId> locate(const Point& p) const;
    /// Like locate, but throws InputError ("point maps to no box").
    VertexId vertex_of(const Point& p) const;

    /// A fixed point inside the vertex: the center of a box, or the least
    /// admissible continuation of a word.
    Point representative(VertexId v) const;

    void require_vertex(VertexId v) const;

private:
    void build_predecessors();

    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::vector<VertexId>> pred_;
    Geometry geometry_ = Geometry::abstract;
    Rational delta_;
    std::vector<Rational> table_;
    std::vector<Box> boxes_;
    std::vector<Word> words_;
    std::optional<ShiftOfFiniteType> sft_;
};

struct Resolution {
    std::size_t boxes = 0;  // box count, or cylinder depth for shifts
    Rational delta;
};

/// Equal boxes for interval/circle systems, admissible words for shifts.
struct BoxCover {
    Rational delta;
    Rational diam;
    std::vector<Box> boxes;
    std::vector<Word> words;

    std::size_t size() const noexcept { return words.empty() ? boxes.size() : words.size(); }
};

BoxCover make_cover(const SystemSpec& spec, std::size_t boxes_or_depth, const Rational& delta);

/// Builds the delta-chain graph: edge i -> j iff some x in B_i, y in B_j have
/// d(f(x), y) <= delta, decided exactly on image intervals (or on shifted
/// cylinder sets). The edge scan runs in parallel over boxes.
ChainGraph discretize(const SystemSpec& spec, std::size_t boxes_or_depth, const Rational& delta);
ChainGraph discretize(const SystemSpec& spec, const Resolution& res);

/// Serial edge scan, kept as the reference for the parallel one.
ChainGraph discretize_serial(const SystemSpec& spec, std::size_t boxes_or_depth,
                             const Rational& delta);

/// The resolution implied by a delta alone: N = ceil(1/delta) boxes, or
/// depth k with 2^-k = delta for shifts (delta must be dyadic there).
Resolution resolution_for_delta(const SystemSpec& spec, const Rational& delta);

}  // namespace dc1lab
