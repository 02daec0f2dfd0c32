#include "dc1lab/dc1.hpp"

#include "dc1lab/decomposition.hpp"
#include "dc1lab/errors.hpp"
#include "dc1lab/kernels.hpp"
#include "dc1lab/pairlab.hpp"
#include "dc1lab/pstar.hpp"
#include "dc1lab/relation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace dc1lab {

Bits parse_bits(std::string_view text) {
    if (text.empty()) throw InputError("empty binary string");
    Bits out;
    for (char c : text) {
        if (c != '0' && c != '1') throw InputError("binary strings take 0 and 1 only, got '" + std::string(text) + "'");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string bits_to_string(const Bits& bits) {
    std::string s;
    for (auto b : bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

std::vector<Resolution> default_grids(const SystemSpec& spec, std::size_t n_max) {
    std::vector<Resolution> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (spec.is_sft()) {
            const std::size_t k = spec.sft().depth;
            out.push_back(Resolution{k, dyadic(k)});
        } else {
            out.push_back(Resolution{8 * n, Rational(1, static_cast<long long>(n))});
        }
    }
    return out;
}

namespace {

std::uint16_t palette_slot(std::vector<Point>& palette, const Point& p) {
    auto it = std::find(palette.begin(), palette.end(), p);
    if (it != palette.end()) return static_cast<std::uint16_t>(it - palette.begin());
    if (palette.size() > std::numeric_limits<std::uint16_t>::max()) throw Error("point palette overflow");
    palette.push_back(p);
    return static_cast<std::uint16_t>(palette.size() - 1);
}

/// Points standing for vertices: the anchors themselves, then their orbit
/// points, then a representative of every other vertex.
class VertexPoints {
public:
    VertexPoints(const SystemSpec& spec, const ChainGraph& g, std::vector<Point>& palette,
                 const std::vector<Point>& anchors)
        : g_(g), palette_(palette) {
        for (const Point& a : anchors) assign(a);
        for (const Point& a : anchors) {
            Point cur = a;
            for (std::size_t j = 0; j < g.size(); ++j) {
                cur = evaluate(spec, cur);
                assign(cur);
            }
        }
    }

    std::uint16_t operator()(VertexId v) {
        auto it = slot_.find(v);
        if (it != slot_.end()) return it->second;
        return slot_[v] = palette_slot(palette_, g_.representative(v));
    }

    std::vector<std::uint16_t> along(const Path& p) {
        std::vector<std::uint16_t> out;
        for (VertexId v : p) out.push_back((*this)(v));
        return out;
    }

private:
    void assign(const Point& p) {
        if (auto v = g_.locate(p); v && !slot_.count(*v)) slot_[*v] = palette_slot(palette_, p);
    }

    const ChainGraph& g_;
    std::vector<Point>& palette_;
    std::map<VertexId, std::uint16_t> slot_;
};

Path repeat_cycle(const Path& cycle, std::size_t times) {
    Path out{cycle.front()};
    for (std::size_t t = 0; t < times; ++t) out.insert(out.end(), cycle.begin() + 1, cycle.end());
    return out;
}

}  // namespace

GatheredBlocks gather_blocks(const SystemSpec& spec, const Point& z, const Point& w, const Rational& r,
                             std::size_t n_max, const std::vector<Resolution>& grids) {
    validate(spec);
    require_in_domain(spec, z);
    require_in_domain(spec, w);
    if (n_max < 1) throw InputError("n_max must be at least 1");
    if (grids.size() < n_max) throw InputError("one resolution per level is required");
    GatheredBlocks out;
    out.z = z;
    out.w = w;
    out.r = r;
    out.palette = {z, w};
    for (std::size_t n = 1; n <= n_max; ++n) {
        const Resolution& res = grids[n - 1];
        const std::string at = "level " + std::to_string(n) + " (delta " + to_string(res.delta) + ")";
        const ChainGraph g = discretize(spec, res);
        const CyclicDecomposition dec = cyclic_decomposition(g);
        const VertexId vz = g.vertex_of(z);
        const VertexId vw = g.vertex_of(w);
        if (!related_at(dec, vz, vw).related) throw PreconditionError("z and w are not related at " + at);

        const PStarResult ps = property_star(g, vz, vw, r);
        if (!ps.witness) throw Error(at + ": property* search failed: " + ps.reason);
        const PStarWitness& wit = *ps.witness;
        const std::size_t k = wit.length;
        const std::size_t period = dec.components[dec.index[vz]->component].period;
        const std::size_t limit =
            period * std::max(pair_threshold(g, dec, vz, vw), pair_threshold(g, dec, vw, vz)) + k;

        std::optional<Path> alpha, beta;
        std::size_t times = 1;
        for (; k * times <= limit; ++times) {
            alpha = find_chain(g, vz, vw, k * times);
            beta = alpha ? find_chain(g, vw, vz, k * times) : std::nullopt;
            if (alpha && beta) break;
        }
        if (!alpha || !beta)
            throw Error(at + ": no common block length; cycle length " + std::to_string(k) + ", period " +
                        std::to_string(period));

        LevelBlocks lb;
        lb.level = n;
        lb.resolution = res;
        lb.length = k * times;
        lb.gamma0 = repeat_cycle(wit.cycle1, times);
        lb.gamma1 = repeat_cycle(wit.cycle2, times);
        lb.alpha = std::move(*alpha);
        lb.beta = std::move(*beta);
        VertexPoints pts(spec, g, out.palette, {z, w});
        lb.gamma0_points = pts.along(lb.gamma0);
        lb.gamma1_points = pts.along(lb.gamma1);
        lb.alpha_points = pts.along(lb.alpha);
        lb.beta_points = pts.along(lb.beta);
        out.levels.push_back(std::move(lb));
    }
    return out;
}

bool schedule_inequality_holds(const BigInt& a, const BigInt& m, const BigInt& b, std::size_t n) {
    // (a(m-2)+1)/(b+am+1) > 1 - 1/n, cross-multiplied.
    const BigInt N(n);
    return N * (a * (m - 2) + 1) > (N - 1) * (b + a * m + 1);
}

Multiplicities schedule_multiplicities(std::span<const std::size_t> block_lengths) {
    Multiplicities out;
    BigInt b = 0;
    for (std::size_t i = 0; i < block_lengths.size(); ++i) {
        const std::size_t n = i + 1;
        const BigInt a(block_lengths[i]);
        if (a < 1) throw InputError("block lengths must be positive");
        BigInt m = 2;
        if (n > 1) {
            const BigInt N(n);
            m = std::max(BigInt(2), BigInt(((N - 1) * b + 2 * N * a - 1) / a + 1));
        }
        out.a.push_back(a);
        out.m.push_back(m);
        out.b.push_back(b);
        out.c.push_back(b + a * m + 1);
        b += a * m;
    }
    return out;
}

namespace {

std::size_t fit(const BigInt& x, const char* what) {
    if (x > BigInt(std::numeric_limits<std::size_t>::max()))
        throw PreconditionError(std::string(what) + " does not fit in memory-sized integers");
    return x.convert_to<std::size_t>();
}

void require_level(std::size_t n, std::size_t levels) {
    if (n < 1 || n > levels) throw InputError("level " + std::to_string(n) + " is outside the schedule");
}

}  // namespace

std::size_t Dc1Schedule::a(std::size_t n) const {
    require_level(n, levels());
    return fit(counts.a[n - 1], "a_n");
}
std::size_t Dc1Schedule::m(std::size_t n) const {
    require_level(n, levels());
    return fit(counts.m[n - 1], "m_n");
}
std::size_t Dc1Schedule::b(std::size_t n) const {
    require_level(n, levels());
    return fit(counts.b[n - 1], "b_n");
}
std::size_t Dc1Schedule::c(std::size_t n) const {
    require_level(n, levels());
    return fit(counts.c[n - 1], "c_n");
}

Dc1Schedule build_schedule(GatheredBlocks blocks, std::size_t n_max) {
    if (blocks.levels.size() < n_max) throw InputError("schedule needs blocks for every level");
    blocks.levels.resize(n_max);
    std::vector<std::size_t> lengths;
    for (const auto& lb : blocks.levels) lengths.push_back(lb.length);
    Dc1Schedule s;
    s.counts = schedule_multiplicities(lengths);
    s.blocks = std::move(blocks);
    return s;
}

XiOrbit build_xi(const Bits& u, const Dc1Schedule& sched) {
    if (u.empty()) throw InputError("empty binary prefix");
    if (u.size() > sched.levels())
        throw PreconditionError("prefix length " + std::to_string(u.size()) + " exceeds the schedule (" +
                                std::to_string(sched.levels()) + " levels)");
    const BigInt total = sched.counts.c[u.size() - 1];
    constexpr std::size_t max_entries = std::size_t{1} << 31;
    if (total > BigInt(max_entries))
        throw PreconditionError("xi orbit of " + total.str() + " entries does not fit in memory");

    XiOrbit xi;
    xi.u = u;
    xi.orbit.palette = sched.blocks.palette;
    xi.orbit.kind = PseudoOrbit::Kind::blockwise;
    auto& e = xi.orbit.entries;
    e.reserve(total.convert_to<std::size_t>());
    for (std::size_t n = 1; n <= u.size(); ++n) {
        const LevelBlocks& lb = sched.blocks.levels[n - 1];
        const std::size_t a = lb.length;
        const std::size_t m = sched.m(n);
        xi.block_start.push_back(e.size());
        auto put = [&](const std::vector<std::uint16_t>& pts) { e.insert(e.end(), pts.begin(), pts.begin() + a); };
        if (u[n - 1] == 0) {
            for (std::size_t t = 0; t < m; ++t) put(lb.gamma0_points);
        } else {
            put(lb.alpha_points);
            for (std::size_t t = 0; t + 2 < m; ++t) put(lb.gamma1_points);
            put(lb.beta_points);
        }
    }
    xi.block_start.push_back(e.size());
    e.push_back(sched.blocks.levels.front().gamma0_points.front());
    return xi;
}

double PairStatistics::closeness(std::size_t cp, std::size_t k) const {
    return static_cast<double>(closeness_counts.at(cp).at(k)) / static_cast<double>(checkpoints.at(cp));
}

double PairStatistics::separation(std::size_t cp, std::size_t k) const {
    return static_cast<double>(separation_counts.at(cp).at(k)) / static_cast<double>(checkpoints.at(cp));
}

std::vector<Rational> default_dyadic_grid() {
    std::vector<Rational> g;
    for (std::size_t e = 1; e <= 10; ++e) g.push_back(dyadic(e));
    return g;
}

PairStatistics dc1_statistics(const SystemSpec& spec, const Point& x0, const Point& x1,
                              std::span<const std::size_t> checkpoints, const std::vector<Rational>& delta_grid,
                              const std::vector<Rational>& s_grid) {
    PairStatistics st;
    st.checkpoints.assign(checkpoints.begin(), checkpoints.end());
    st.delta_grid = delta_grid;
    st.s_grid = s_grid;
    if (checkpoints.empty()) return st;
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] == 0 || (i > 0 && checkpoints[i] <= checkpoints[i - 1]))
            throw InputError("checkpoints must be positive and strictly increasing");
    }
    const std::size_t horizon = checkpoints.back();

    if (spec.is_sft()) {
        // Exponent e means distance 2^-e; the capped bucket means at most 2^-cap.
        const auto e = kernels::parallel::pair_exponents(std::get<SymbolSeq>(x0), std::get<SymbolSeq>(x1), horizon);
        const auto hist = kernels::parallel::histograms_at(e, checkpoints);
        for (const auto& h : hist) {
            std::vector<std::uint64_t> close, sep;
            for (const auto& d : delta_grid) {
                std::uint64_t c = 0;
                for (unsigned k = 0; k <= kernels::exponent_cap; ++k) {
                    if (dyadic(k) < d) c += h[k];
                }
                close.push_back(c);
            }
            for (const auto& s : s_grid) {
                std::uint64_t c = 0;
                for (unsigned k = 0; k < kernels::exponent_cap; ++k) {
                    if (dyadic(k) > s) c += h[k];
                }
                sep.push_back(c);
            }
            st.closeness_counts.push_back(std::move(close));
            st.separation_counts.push_back(std::move(sep));
        }
        return st;
    }

    std::vector<std::uint64_t> close(delta_grid.size(), 0), sep(s_grid.size(), 0);
    Point a = x0, b = x1;
    std::size_t next = 0;
    for (std::size_t i = 0; i < horizon; ++i) {
        const Rational d = distance(spec, a, b);
        for (std::size_t k = 0; k < delta_grid.size(); ++k) close[k] += d < delta_grid[k];
        for (std::size_t k = 0; k < s_grid.size(); ++k) sep[k] += d > s_grid[k];
        if (i + 1 == checkpoints[next]) {
            st.closeness_counts.push_back(close);
            st.separation_counts.push_back(sep);
            ++next;
        }
        a = evaluate(spec, a);
        b = evaluate(spec, b);
    }
    return st;
}

Dc1Run certify_dc1(const SystemSpec& spec, const Dc1Schedule& sched, const Bits& u, const Bits& v,
                   const Rational& closeness_delta) {
    if (!spec.is_sft()) throw PreconditionError("no exact shadowing available for " + spec.name);
    if (u.size() != v.size()) throw InputError("u and v must have the same length");
    if (u == v) throw PreconditionError("no separation checkpoints: u and v agree on every level");
    if (closeness_delta <= 0) throw InputError("closeness delta must be positive");
    const std::size_t levels = u.size();
    const std::size_t depth = sched.blocks.levels.front().resolution.boxes;

    Dc1Run run;
    run.schedule = sched;
    run.xi_u = build_xi(u, sched);
    run.xi_v = build_xi(v, sched);
    run.x_u = shadow_sft(spec.sft(), run.xi_u.orbit, depth);
    run.x_v = shadow_sft(spec.sft(), run.xi_v.orbit, depth);

    std::vector<std::size_t> cps;
    for (std::size_t n = 1; n <= levels; ++n) cps.push_back(sched.c(n));
    const Rational sep_threshold = sched.blocks.r / 3;
    const PairStatistics st = dc1_statistics(spec, run.x_u, run.x_v, cps, {closeness_delta}, {sep_threshold});
    const auto eps0 = tracking_average_at(spec, run.x_u, run.xi_u.orbit, cps);
    const auto eps1 = tracking_average_at(spec, run.x_v, run.xi_v.orbit, cps);

    Dc1Certificate& cert = run.certificate;
    cert.system = spec.name;
    cert.z = sched.blocks.z;
    cert.w = sched.blocks.w;
    cert.r = sched.blocks.r;
    cert.closeness_delta = closeness_delta;
    cert.u = u;
    cert.v = v;
    cert.passed = true;
    std::size_t first_failure = 0;
    for (std::size_t n = 1; n <= levels; ++n) {
        CertificateLevel lv;
        lv.n = n;
        lv.checkpoint = cps[n - 1];
        lv.agree = u[n - 1] == v[n - 1];
        lv.eps0 = eps0[n - 1];
        lv.eps1 = eps1[n - 1];
        const double c = static_cast<double>(lv.checkpoint);
        const double base = 1.0 - 1.0 / static_cast<double>(n);
        lv.plain_bound = c * base;
        if (lv.agree) {
            lv.kind = "closeness";
            lv.threshold = closeness_delta;
            lv.measured = st.closeness_counts[n - 1][0];
            lv.bound = c * (base - 2.0 / to_double(closeness_delta) * (lv.eps0 + lv.eps1));
        } else {
            lv.kind = "separation";
            lv.threshold = sep_threshold;
            lv.measured = st.separation_counts[n - 1][0];
            lv.bound = c * (base - 3.0 / to_double(cert.r) * (lv.eps0 + lv.eps1));
        }
        lv.margin = static_cast<double>(lv.measured) - lv.bound;
        lv.pass = static_cast<double>(lv.measured) > lv.bound;
        if (!lv.pass && cert.passed) {
            cert.passed = false;
            first_failure = n;
        }
        cert.levels.push_back(std::move(lv));
    }
    cert.verdict = cert.passed ? "finite-scale DC1 evidence to level " + std::to_string(levels)
                               : "finite-scale DC1 evidence fails at level " + std::to_string(first_failure);
    return run;
}

Dc1Run run_dc1(const SystemSpec& spec, const Point& z, const Point& w, const Rational& r, const Bits& u,
               const Bits& v, const Rational& closeness_delta) {
    if (!spec.is_sft()) throw PreconditionError("no exact shadowing available for " + spec.name);
    if (u == v) throw PreconditionError("no separation checkpoints: u and v agree on every level");
    const std::size_t n = u.size();
    GatheredBlocks blocks = gather_blocks(spec, z, w, r, n, default_grids(spec, n));
    return certify_dc1(spec, build_schedule(std::move(blocks), n), u, v, closeness_delta);
}

FactorConstruction factor_construct(const SystemSpec& spec, const Point& x, const Point& y,
                                    std::optional<Rational> eps) {
    if (!spec.is_sft()) throw PreconditionError("no exact shadowing available for " + spec.name);
    require_in_domain(spec, x);
    require_in_domain(spec, y);
    const auto& sft = spec.sft();
    const Rational dxy = distance(spec, x, y);
    if (dxy == 0) throw PreconditionError("x and y coincide");
    std::size_t depth = sft.depth;
    Rational radius;
    if (eps) {
        if (!(*eps > 0 && *eps < dxy / 2))
            throw PreconditionError("eps must satisfy 0 < eps < d(x,y)/2 = " + to_string(dxy / 2));
        depth = std::max(depth, dyadic_depth_at_most(*eps));
        radius = *eps;
    } else {
        radius = dyadic(depth);
        if (!(dxy > radius))
            throw PreconditionError("the depth-" + std::to_string(depth) +
                                    " cylinders of x and y coincide; pass an explicit eps");
    }
    ChainGraph g = discretize(spec, depth, dyadic(depth));
    const CyclicDecomposition dec = cyclic_decomposition(g);
    const VertexId vx = g.vertex_of(x);
    const VertexId vy = g.vertex_of(y);
    if (!related_at(dec, vx, vy).related) throw PreconditionError("x and y are not related");
    auto p = check_property_P(g, dec, vx, vy);
    if (!p) throw Error("no common chain length for x and y");
    return FactorConstruction{x,      y,  depth, radius, eps, std::move(g), vx, vy, p->length,
                              {{{p->uu, p->uv}, {p->vu, p->vv}}}};
}

FactorSample sample_factor(const SystemSpec& spec, const FactorConstruction& f, const Bits& s) {
    if (s.empty()) throw InputError("empty binary string");
    std::vector<Point> palette;
    VertexPoints pts(spec, f.graph, palette, {f.x, f.y});
    PseudoOrbit po;
    po.kind = PseudoOrbit::Kind::blockwise;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const Path& chain = f.chains[s[i]][s[i + 1]];
        for (std::size_t j = 0; j < f.length; ++j) po.entries.push_back(pts(chain[j]));
    }
    po.entries.push_back(pts(s.back() == 0 ? f.x_vertex : f.y_vertex));
    po.palette = palette;

    FactorSample out;
    out.s = s;
    out.point = shadow_sft(spec.sft(), po, f.depth);
    out.ball_condition = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point target = s[i] == 0 ? f.x : f.y;
        const Rational d = distance(spec, Point(out.point.shifted(i * f.length)), target);
        out.ball_condition = out.ball_condition && d <= f.ball_radius;
        out.ball_distances.push_back(d);
    }
    return out;
}

EntropyBound entropy_lower_bound(const SystemSpec& spec, const FactorConstruction& f) {
    EntropyBound b;
    b.length = f.length;
    b.lower_bound = std::log(2.0) / static_cast<double>(f.length);
    b.sft_entropy = sft_entropy(spec.sft());
    return b;
}

namespace {

/// Periodic point read off a closed chain of cylinders.
SymbolSeq cycle_point(const ChainGraph& g, const Path& cycle) {
    Word period;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) period.push_back(g.word(cycle[i]).front());
    return make_periodic({}, std::move(period));
}

}  // namespace

NearPair approximate_dc1_near(const SystemSpec& spec, const Point& x, const Point& y, const Rational& eps,
                              std::size_t n_max) {
    NearPair out{factor_construct(spec, x, y, eps), {}, {}, {}, {}, {}, {}, {}, {}};
    const FactorConstruction& f = out.factor;
    const SymbolSeq p = cycle_point(f.graph, f.chains[0][0]);
    const SymbolSeq q = cycle_point(f.graph, f.chains[1][1]);
    out.p = p;
    out.q = q;
    // Purely periodic shadows are their own omega-limit under f^a.
    out.z = p;
    out.w = q;
    out.dz = distance(spec, out.z, x);
    out.dw = distance(spec, out.w, y);
    const auto sep = periodic_separation(spec, out.z, out.w);
    if (!sep || *sep == 0) throw Error("shadow orbits of the two cycles are not separated");
    out.r = *sep / 2;
    Bits u(n_max, 0), v(n_max, 0);
    for (std::size_t i = 1; i < n_max; i += 2) v[i] = 1;
    out.run = run_dc1(spec, out.z, out.w, out.r, u, v);
    return out;
}

}  // namespace dc1lab
