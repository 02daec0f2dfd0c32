#pragma once

#include "dc1lab/chain_graph.hpp"
#include "dc1lab/dc1.hpp"
#include "dc1lab/decomposition.hpp"
#include "dc1lab/pairlab.hpp"
#include "dc1lab/pstar.hpp"
#include "dc1lab/relation.hpp"

#include <json.hpp>

#include <span>
#include <string>

namespace dc1lab {

using Json = nlohmann::ordered_json;

std::string format_double(double x);

Json graph_json(const ChainGraph& g);
std::string graph_dot(const ChainGraph& g);
std::string graph_csv(const ChainGraph& g);

Json decomposition_json(const ChainGraph& g, const CyclicDecomposition& dec);
std::string decomposition_csv(const ChainGraph& g, const CyclicDecomposition& dec);
Json entropy_pairs_json(const ChainGraph& g, const EntropyPairs& pairs);

Json relation_json(const RelationVerdict& v);
Json pstar_json(const ChainGraph& g, const PStarResult& r);
Json omega_json(const ChainGraph& g, const OmegaProduct& o);

Json blocks_json(const GatheredBlocks& b);
Json schedule_json(const Dc1Schedule& s);
Json certificate_json(const Dc1Certificate& c);
/// One row per level: checkpoint, n, closeness at delta, separation at r/3,
/// the checked kind, its bound and margin (fractions of c_n).
std::string stats_csv(const Dc1Certificate& c, const PairStatistics& st);
std::string stats_plot_script(const std::string& csv_path);

Json factor_json(const FactorConstruction& f, const EntropyBound& b);
Json factor_sample_json(const FactorSample& s);
Json near_json(const NearPair& p, const EntropyBound& b);

Json pair_class_json(const PairClass& c, const Thresholds& t);
Json thick_json(const ThickProfile& t);
std::string tracking_csv(std::span<const double> eps);

}  // namespace dc1lab
