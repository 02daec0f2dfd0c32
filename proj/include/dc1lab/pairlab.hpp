#pragma once

#include "dc1lab/chain_graph.hpp"
#include "dc1lab/pstar.hpp"
#include "dc1lab/relation.hpp"
#include "dc1lab/systems.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dc1lab {

/// Orbit distances d(f^i x, f^i y), i < horizon. Shifts keep capped dyadic
/// exponents, other systems exact values rounded to double.
class DistanceTrace {
public:
    static DistanceTrace of(const SystemSpec& spec, const Point& x, const Point& y,
                            std::size_t horizon);

    std::size_t size() const noexcept;
    double at(std::size_t i) const;
    bool symbolic() const noexcept { return !exponents_.empty() || values_.empty(); }

    /// 1 where the distance exceeds `level`.
    std::vector<char> above(const Rational& level) const;

private:
    std::vector<std::uint8_t> exponents_;
    std::vector<double> values_;
};

struct Thresholds {
    Rational low = Rational(1, 256);
    Rational high = Rational(1, 4);
};

struct PairClass {
    std::size_t horizon = 0;
    double min_distance = 0.0;       // over [0, H)
    double tail_min_distance = 0.0;  // liminf proxy over [H/2, H)
    double tail_max_distance = 0.0;  // limsup proxy over [H/2, H)
    bool proximal = false;
    bool distal = false;
    bool li_yorke = false;

    std::vector<std::string> labels() const;
};

/// proximal: min < low; distal: min > 2 low; Li-Yorke: proximal and the tail
/// maximum exceeds high.
PairClass classify_pair(const SystemSpec& spec, const Point& x, const Point& y, std::size_t horizon,
                        const Thresholds& t = {});
PairClass classify_trace(const DistanceTrace& trace, const Thresholds& t = {});

struct ThickProfile {
    std::size_t horizon = 0;
    std::size_t max_run = 0;
    std::size_t run_start = 0;

    /// A run of n consecutive members exists in [0, H).
    bool thick_to(std::size_t n) const { return n <= max_run; }
};

ThickProfile thick_profile(std::span<const char> bits, std::size_t horizon);

/// Runs of ones that set a new length record, in time order.
struct RecordRun {
    std::size_t start = 0;
    std::size_t length = 0;
};
std::vector<RecordRun> record_runs(std::span<const char> bits);

/// Candidate limit pair behind a long stretch of an orbit pair.
struct RecurrentPair {
    bool found = false;
    bool exact = false;
    Point p, q;  // limit of (f^{n_j} x, f^{n_j} y)
    Point z, w;  // recurrent pair in the omega-limit of (p, q)
    std::vector<std::size_t> times;
    std::string note;
};

/// Exact eventual periodicity when the points' transients end inside the
/// horizon; otherwise periodic structure read off the separation record runs.
RecurrentPair recurrent_pair(const SystemSpec& spec, const Point& x, const Point& y,
                             std::size_t horizon, const Rational& separation, bool want_distinct);

struct PStarExtraction {
    bool conclusive = false;
    std::string note;
    RecurrentPair pair;
    Rational r;
    Resolution resolution;
    std::optional<PStarWitness> witness;
    Relatedness relation;
};

/// Proximal pairs without Li-Yorke evidence are rejected (PreconditionError).
/// `r` defaults to half the least orbit separation of (z, w).
PStarExtraction extract_pstar_pair(const SystemSpec& spec, const Point& x, const Point& y,
                                   std::size_t horizon, const Rational& separation,
                                   const Resolution& resolution,
                                   std::optional<Rational> r = std::nullopt,
                                   const Thresholds& t = {});

struct LiYorkeRelation {
    bool conclusive = false;
    bool li_yorke = false;
    std::string note;
    RecurrentPair pair;
    RelationVerdict verdict;
};

LiYorkeRelation liyorke_to_relation(const SystemSpec& spec, const Point& x, const Point& y,
                                    std::size_t horizon, const std::vector<Resolution>& schedule,
                                    const Thresholds& t = {});

/// Least distance between f^i(z) and f^i(w) over one joint period of an
/// exactly periodic pair (nullopt when not exactly periodic).
std::optional<Rational> periodic_separation(const SystemSpec& spec, const Point& z, const Point& w);

}  // namespace dc1lab
