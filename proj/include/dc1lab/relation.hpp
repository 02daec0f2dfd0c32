#pragma once

#include "dc1lab/chain_graph.hpp"
#include "dc1lab/decomposition.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dc1lab {

struct Relatedness {
    bool related = false;
    /// False when either vertex is outside the chain-recurrent set; `related`
    /// is then false as well.
    bool both_recurrent = false;
};

/// Same class D_{i,j} of the decomposition.
Relatedness related_at(const CyclicDecomposition& dec, VertexId u, VertexId v);

struct RelationRecord {
    Rational delta;
    std::size_t boxes = 0;
    VertexId x_vertex = 0;
    VertexId y_vertex = 0;
    bool related = false;
    std::optional<ClassIndex> x_class;
    std::optional<ClassIndex> y_class;
};

/// Per-resolution verdicts only; nothing is claimed about delta -> 0.
struct RelationVerdict {
    std::vector<RelationRecord> records;
    bool related_for_all_tested = false;
};

/// Schedule must be non-empty with strictly decreasing delta.
RelationVerdict relate_schedule(const SystemSpec& spec, const Point& x, const Point& y,
                                const std::vector<Resolution>& schedule);

struct EntropyPairs {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    bool shadowing_verified = false;
    std::string caveat;
};

/// Ordered distinct pairs sharing a class. Only shifts of finite type carry
/// verified shadowing; every other system gets a caveat instead of a refusal.
EntropyPairs entropy_pairs(const CyclicDecomposition& dec, bool shadowing_verified);
EntropyPairs entropy_pairs(const CyclicDecomposition& dec, const SystemSpec& spec);

/// Four paths u->u, u->v, v->u, v->v of one common length.
struct PropertyPWitness {
    std::size_t length = 0;
    Path uu, uv, vu, vv;
};

/// Searches lengths period*n for n = 1 .. N + |V|, N the largest pair
/// threshold among the four pairs.
std::optional<PropertyPWitness> check_property_P(const ChainGraph& g, const CyclicDecomposition& dec,
                                                 VertexId u, VertexId v);

}  // namespace dc1lab
