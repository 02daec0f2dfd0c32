#pragma once

#include "dc1lab/chain_graph.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace dc1lab {

/// Position of a chain-recurrent vertex in the cyclic decomposition.
struct ClassIndex {
    std::size_t component = 0;
    std::size_t cls = 0;

    friend bool operator==(const ClassIndex&, const ClassIndex&) = default;
};

struct CyclicComponent {
    std::size_t id = 0;
    std::size_t period = 1;
    /// classes[j] is D_{id,j}; every intra-component edge goes from class j
    /// to class j+1 mod period.
    std::vector<std::vector<VertexId>> classes;

    std::size_t size() const;
};

/// Graph-level delta-cyclic decomposition of the chain-recurrent vertices.
struct CyclicDecomposition {
    std::vector<CyclicComponent> components;
    /// Indexed by vertex; empty for vertices that are not chain recurrent.
    std::vector<std::optional<ClassIndex>> index;

    bool recurrent(VertexId v) const { return v < index.size() && index[v].has_value(); }
    std::vector<VertexId> recurrent_vertices() const;
};

/// Consecutive entries must be edges; a closed sequence must also return to
/// its first vertex. Throws InputError for unknown vertices or |seq| < 2.
bool verify_chain(const ChainGraph& g, std::span<const VertexId> seq, bool closed);

/// Strongly connected components in order of their smallest vertex; each
/// component sorted ascending.
std::vector<std::vector<VertexId>> strongly_connected_components(const ChainGraph& g);

/// Vertices on at least one cycle (nontrivial SCC or self-loop).
std::vector<VertexId> chain_recurrent_set(const ChainGraph& g);

/// SCCs of the recurrent subgraph, period = gcd of level(u)+1-level(v) over
/// intra-component edges of a BFS leveling, classes = level mod period with
/// the smallest vertex in class 0.
CyclicDecomposition cyclic_decomposition(const ChainGraph& g);

/// Lexicographically least path u -> v with exactly `length` edges, if one
/// exists. Requires length >= 1.
std::optional<Path> find_chain(const ChainGraph& g, VertexId u, VertexId v, std::size_t length);

/// Least N such that paths u -> v of length period*n exist for every n in
/// [N, N + |V|]. u and v must share a class. The window certifies every
/// larger n as well, since v lies on a cycle of at most |V| period-steps.
std::size_t pair_threshold(const ChainGraph& g, const CyclicDecomposition& dec, VertexId u,
                           VertexId v);

/// pair_threshold for every ordered pair sharing a class of the component.
std::map<std::pair<VertexId, VertexId>, std::size_t> reachability_threshold(
    const ChainGraph& g, const CyclicDecomposition& dec, std::size_t component);

/// Sets of vertices reachable from `source` in exactly t steps, t = 0..steps.
std::vector<std::vector<char>> exact_step_reach(const ChainGraph& g, VertexId source,
                                                std::size_t steps);

}  // namespace dc1lab
