#include "dc1lab/pairlab.hpp"

#include "dc1lab/decomposition.hpp"
#include "dc1lab/errors.hpp"
#include "dc1lab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace dc1lab {

DistanceTrace DistanceTrace::of(const SystemSpec& spec, const Point& x, const Point& y, std::size_t horizon) {
    require_in_domain(spec, x);
    require_in_domain(spec, y);
    DistanceTrace t;
    if (spec.is_sft()) {
        t.exponents_ = kernels::parallel::pair_exponents(std::get<SymbolSeq>(x), std::get<SymbolSeq>(y), horizon);
        return t;
    }
    t.values_.reserve(horizon);
    Point a = x, b = y;
    for (std::size_t i = 0; i < horizon; ++i) {
        t.values_.push_back(to_double(distance(spec, a, b)));
        if (i + 1 < horizon) {
            a = evaluate(spec, a);
            b = evaluate(spec, b);
        }
    }
    return t;
}

std::size_t DistanceTrace::size() const noexcept { return exponents_.empty() ? values_.size() : exponents_.size(); }

double DistanceTrace::at(std::size_t i) const {
    if (!exponents_.empty()) return std::ldexp(1.0, -static_cast<int>(exponents_.at(i)));
    return values_.at(i);
}

std::vector<char> DistanceTrace::above(const Rational& level) const {
    std::vector<char> out(size());
    if (!exponents_.empty()) {
        std::array<char, kernels::exponent_cap + 1> over{};
        for (unsigned e = 0; e < kernels::exponent_cap; ++e) over[e] = dyadic(e) > level;
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = over[exponents_[i]];
        return out;
    }
    const double l = to_double(level);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = values_[i] > l;
    return out;
}

std::vector<std::string> PairClass::labels() const {
    std::vector<std::string> out;
    if (proximal) out.emplace_back("proximal-evidence");
    if (distal) out.emplace_back("distal-evidence");
    if (li_yorke) out.emplace_back("LiYorke-evidence");
    return out;
}

PairClass classify_trace(const DistanceTrace& trace, const Thresholds& t) {
    const std::size_t h = trace.size();
    if (h < 2) throw InputError("classification needs a horizon of at least 2");
    PairClass c;
    c.horizon = h;
    c.min_distance = std::numeric_limits<double>::infinity();
    c.tail_min_distance = std::numeric_limits<double>::infinity();
    c.tail_max_distance = 0.0;
    for (std::size_t i = 0; i < h; ++i) {
        const double d = trace.at(i);
        c.min_distance = std::min(c.min_distance, d);
        if (i >= h / 2) {
            c.tail_min_distance = std::min(c.tail_min_distance, d);
            c.tail_max_distance = std::max(c.tail_max_distance, d);
        }
    }
    c.proximal = c.min_distance < to_double(t.low);
    c.distal = c.min_distance > 2 * to_double(t.low);
    c.li_yorke = c.proximal && c.tail_max_distance > to_double(t.high);
    return c;
}

PairClass classify_pair(const SystemSpec& spec, const Point& x, const Point& y, std::size_t horizon,
                        const Thresholds& t) {
    if (horizon < 2) throw InputError("classification needs a horizon of at least 2");
    return classify_trace(DistanceTrace::of(spec, x, y, horizon), t);
}

ThickProfile thick_profile(std::span<const char> bits, std::size_t horizon) {
    if (bits.size() < horizon)
        throw InputError("bit sequence shorter than the horizon " + std::to_string(horizon));
    const auto run = kernels::parallel::longest_run(bits.first(horizon));
    return ThickProfile{horizon, run.longest, run.start};
}

std::vector<RecordRun> record_runs(std::span<const char> bits) {
    std::vector<RecordRun> out;
    std::size_t best = 0, start = 0, len = 0;
    for (std::size_t i = 0; i <= bits.size(); ++i) {
        if (i < bits.size() && bits[i]) {
            if (len == 0) start = i;
            ++len;
            continue;
        }
        if (len > best) {
            best = len;
            out.push_back({start, len});
        }
        len = 0;
    }
    return out;
}

namespace {

struct PeriodicPair {
    SymbolSeq p, q;
};

/// Periodic structure of the second half of a record window.
std::optional<PeriodicPair> window_pair(const SymbolSeq& x, const SymbolSeq& y, const RecordRun& run) {
    const std::size_t from = run.start + run.length / 2;
    const std::size_t len = run.length - run.length / 2;
    if (len < 8) return std::nullopt;
    Word a(len), b(len);
    for (std::size_t i = 0; i < len; ++i) {
        a[i] = x.at(from + i);
        b[i] = y.at(from + i);
    }
    const std::size_t pa = minimal_period(a);
    const std::size_t pb = minimal_period(b);
    if (4 * pa > len || 4 * pb > len) return std::nullopt;
    return PeriodicPair{make_periodic({}, Word(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pa))),
                        make_periodic({}, Word(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(pb)))};
}

bool same_orbit(const PeriodicPair& s, const PeriodicPair& t) {
    const std::size_t period = std::lcm(s.p.period.size(), s.q.period.size());
    for (std::size_t j = 0; j < period; ++j) {
        if (s.p.shifted(j) == t.p && s.q.shifted(j) == t.q) return true;
    }
    return false;
}

bool equal_points(const Point& a, const Point& b) { return a == b; }

}  // namespace

RecurrentPair recurrent_pair(const SystemSpec& spec, const Point& x, const Point& y, std::size_t horizon,
                             const Rational& separation, bool want_distinct) {
    require_in_domain(spec, x);
    require_in_domain(spec, y);
    if (horizon < 2) throw InputError("horizon must be at least 2");
    RecurrentPair out;
    auto finish = [&](const std::string& note) {
        out.note = note;
        out.found = !(want_distinct && equal_points(out.z, out.w));
        if (!out.found) out.note = "omega-limit pair is diagonal (asymptotic orbits); " + note;
        return out;
    };

    if (spec.is_sft()) {
        const auto& a = std::get<SymbolSeq>(x);
        const auto& b = std::get<SymbolSeq>(y);
        if (a.is_finite() || b.is_finite()) throw InputError("recurrence needs eventually periodic sequences");
        const std::size_t transient = std::max(a.prefix.size(), b.prefix.size());
        if (transient <= horizon / 2) {
            out.exact = true;
            out.p = a.shifted(transient);
            out.q = b.shifted(transient);
            out.z = out.p;
            out.w = out.q;
            out.times = {transient};
            return finish("exact eventual periodicity");
        }
        const auto trace = DistanceTrace::of(spec, x, y, horizon);
        const auto runs = record_runs(trace.above(separation));
        std::optional<PeriodicPair> last, prev;
        std::size_t t_last = 0, t_prev = 0;
        for (const auto& run : runs) {
            if (auto pp = window_pair(a, b, run)) {
                prev = last;
                t_prev = t_last;
                last = pp;
                t_last = run.start + run.length / 2;
            }
        }
        if (!last || !prev || !same_orbit(*prev, *last)) {
            out.note = "no stable periodic structure in the separation record runs";
            return out;
        }
        out.p = last->p;
        out.q = last->q;
        out.z = out.p;
        out.w = out.q;
        out.times = {t_prev, t_last};
        return finish("periodic structure of the separation record runs");
    }

    std::map<std::pair<Rational, Rational>, std::size_t> seen;
    std::vector<std::pair<Rational, Rational>> orbit;
    Point a = x, b = y;
    for (std::size_t i = 0; i < horizon; ++i) {
        auto key = std::make_pair(std::get<Rational>(a), std::get<Rational>(b));
        auto [it, fresh] = seen.emplace(key, i);
        if (!fresh) {
            if (it->second > horizon / 2) break;
            out.exact = true;
            out.p = orbit[it->second].first;
            out.q = orbit[it->second].second;
            out.z = out.p;
            out.w = out.q;
            out.times = {it->second, i};
            return finish("exact periodic orbit");
        }
        orbit.push_back(key);
        a = evaluate(spec, a);
        b = evaluate(spec, b);
    }

    // Closest return of the product orbit over the tail half.
    const std::size_t from = orbit.size() / 2;
    std::optional<Rational> best;
    std::size_t bi = from, bj = from;
    for (std::size_t i = from; i < orbit.size(); ++i) {
        for (std::size_t j = i + 1; j < orbit.size(); ++j) {
            const Rational d = std::max(distance(spec, orbit[i].first, orbit[j].first),
                                        distance(spec, orbit[i].second, orbit[j].second));
            if (!best || d < *best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    if (!best) {
        out.note = "horizon too short for a return";
        return out;
    }
    out.p = orbit[bi].first;
    out.q = orbit[bi].second;
    out.z = orbit[bj].first;
    out.w = orbit[bj].second;
    out.times = {bi, bj};
    return finish("closest return over the tail half (heuristic, distance " + to_string(*best) + ")");
}

std::optional<Rational> periodic_separation(const SystemSpec& spec, const Point& z, const Point& w) {
    if (spec.is_sft()) {
        const auto& a = std::get<SymbolSeq>(z);
        const auto& b = std::get<SymbolSeq>(w);
        if (a.is_finite() || b.is_finite() || !a.prefix.empty() || !b.prefix.empty()) return std::nullopt;
        const std::size_t period = std::lcm(a.period.size(), b.period.size());
        Rational best = distance(spec, a, b);
        for (std::size_t i = 1; i < period; ++i) best = std::min(best, distance(spec, a.shifted(i), b.shifted(i)));
        return best;
    }
    constexpr std::size_t max_period = 100000;
    Point a = z, b = w;
    Rational best = distance(spec, a, b);
    for (std::size_t i = 1; i <= max_period; ++i) {
        a = evaluate(spec, a);
        b = evaluate(spec, b);
        if (a == z && b == w) return best;
        best = std::min(best, distance(spec, a, b));
    }
    return std::nullopt;
}

PStarExtraction extract_pstar_pair(const SystemSpec& spec, const Point& x, const Point& y, std::size_t horizon,
                                   const Rational& separation, const Resolution& resolution,
                                   std::optional<Rational> r, const Thresholds& t) {
    const PairClass cls = classify_pair(spec, x, y, horizon, t);
    if (cls.proximal && !cls.li_yorke)
        throw PreconditionError("proximal pair without Li-Yorke evidence at horizon " + std::to_string(horizon));
    PStarExtraction out;
    out.resolution = resolution;
    out.pair = recurrent_pair(spec, x, y, horizon, separation, true);
    if (!out.pair.found) {
        out.note = "inconclusive: " + out.pair.note;
        return out;
    }
    if (r) {
        out.r = *r;
    } else {
        const auto sep = periodic_separation(spec, out.pair.z, out.pair.w);
        out.r = sep ? *sep / 2 : separation / 2;
    }
    const ChainGraph g = discretize(spec, resolution);
    const CyclicDecomposition dec = cyclic_decomposition(g);
    const VertexId vz = g.vertex_of(out.pair.z);
    const VertexId vw = g.vertex_of(out.pair.w);
    out.relation = related_at(dec, vz, vw);
    const PStarResult ps = property_star(g, vz, vw, out.r);
    out.witness = ps.witness;
    out.conclusive = ps.witness.has_value() && out.relation.related;
    if (out.conclusive) {
        out.note = "property* witness and relation found at delta " + to_string(resolution.delta);
    } else if (!ps.witness) {
        out.note = "inconclusive: property* search failed: " + ps.reason;
    } else {
        out.note = "inconclusive: the pair is not related at delta " + to_string(resolution.delta);
    }
    return out;
}

LiYorkeRelation liyorke_to_relation(const SystemSpec& spec, const Point& x, const Point& y, std::size_t horizon,
                                    const std::vector<Resolution>& schedule, const Thresholds& t) {
    LiYorkeRelation out;
    out.li_yorke = classify_pair(spec, x, y, horizon, t).li_yorke;
    out.pair = recurrent_pair(spec, x, y, horizon, t.high, true);
    if (!out.pair.found) {
        out.note = "inconclusive: " + out.pair.note;
        return out;
    }
    out.verdict = relate_schedule(spec, out.pair.z, out.pair.w, schedule);
    out.conclusive = true;
    out.note = out.li_yorke ? "Li-Yorke evidence; omega pair checked on the schedule"
                            : "no Li-Yorke evidence at this horizon; omega pair checked on the schedule";
    return out;
}

}  // namespace dc1lab
