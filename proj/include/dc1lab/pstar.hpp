#pragma once

#include "dc1lab/chain_graph.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dc1lab {

struct PStarWitness {
    Rational r;
    std::size_t length = 0;
    Path cycle1;  // through u, length+1 entries
    Path cycle2;  // through v
    /// Vertex distances along the cycles, and the same minus the cover slack.
    std::vector<Rational> separations;
    std::vector<Rational> certified_separations;

    Rational min_certified_separation() const;
};

struct PStarResult {
    std::optional<PStarWitness> witness;
    std::string reason;  // set when no witness
};

/// Certified separation of two vertices: distance minus cover slack.
Rational certified_separation(const ChainGraph& g, VertexId a, VertexId b);

/// Shortest (then lexicographically least) cycle through (u,v) in the
/// product graph restricted to pairs with certified separation > r.
PStarResult property_star(const ChainGraph& g, VertexId u, VertexId v, const Rational& r);

/// Independent re-check: both cycles are closed chains of one length and
/// every simultaneous pair is separated by more than r.
bool verify_pstar_witness(const ChainGraph& g, const PStarWitness& w, VertexId u, VertexId v);

struct OmegaProduct {
    std::set<std::pair<VertexId, VertexId>> pairs;
    /// Points of the limit cycle when found exactly.
    std::vector<std::pair<Point, Point>> points;
    bool exact = false;
};

/// Omega-limit of the product orbit of (u, v): exact for eventually periodic
/// symbolic points and for rational orbits that close up within the horizon;
/// otherwise the box pairs visited at least twice in [H/2, H).
OmegaProduct omega_product(const SystemSpec& spec, const ChainGraph& g, const Point& u,
                           const Point& v, std::size_t horizon);

}  // namespace dc1lab
