#include "dc1lab/export.hpp"

#include <cstdio>
#include <sstream>

namespace dc1lab {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

Json path_json(const ChainGraph& g, const Path& p) {
    Json out = Json::array();
    for (VertexId v : p) out.push_back(g.label(v));
    return out;
}

Json bits_json(const Bits& b) { return bits_to_string(b); }

}  // namespace

Json graph_json(const ChainGraph& g) {
    Json out;
    out["vertices"] = g.size();
    out["edges"] = g.edge_count();
    out["delta"] = to_string(g.delta());
    out["metric"] = g.metric_name();
    out["cell_diameter"] = to_string(g.cell_diameter());
    Json labels = Json::array();
    Json adj = Json::array();
    for (VertexId v = 0; v < g.size(); ++v) {
        labels.push_back(g.label(v));
        Json row = Json::array();
        for (VertexId w : g.successors(v)) row.push_back(w);
        adj.push_back(std::move(row));
    }
    out["labels"] = std::move(labels);
    out["adjacency"] = std::move(adj);
    return out;
}

std::string graph_dot(const ChainGraph& g) {
    std::ostringstream os;
    os << "digraph chain {\n";
    for (VertexId v = 0; v < g.size(); ++v) os << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
    for (VertexId v = 0; v < g.size(); ++v) {
        for (VertexId w : g.successors(v)) os << "  " << v << " -> " << w << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string graph_csv(const ChainGraph& g) {
    std::ostringstream os;
    os << "from,to\n";
    for (VertexId v = 0; v < g.size(); ++v) {
        for (VertexId w : g.successors(v)) os << v << ',' << w << '\n';
    }
    return os.str();
}

Json decomposition_json(const ChainGraph& g, const CyclicDecomposition& dec) {
    Json comps = Json::array();
    for (const auto& c : dec.components) {
        Json classes = Json::array();
        Json labels = Json::array();
        for (const auto& cls : c.classes) {
            classes.push_back(cls);
            labels.push_back(path_json(g, cls));
        }
        comps.push_back({{"id", c.id}, {"period", c.period}, {"classes", classes}, {"labels", labels}});
    }
    Json out;
    out["delta"] = to_string(g.delta());
    out["vertices"] = g.size();
    out["chain_recurrent"] = dec.recurrent_vertices().size();
    out["components"] = std::move(comps);
    return out;
}

std::string decomposition_csv(const ChainGraph& g, const CyclicDecomposition& dec) {
    std::ostringstream os;
    os << "vertex,label,component,class\n";
    for (VertexId v = 0; v < g.size(); ++v) {
        os << v << ',' << g.label(v) << ',';
        if (dec.index[v]) {
            os << dec.index[v]->component << ',' << dec.index[v]->cls << '\n';
        } else {
            os << ",\n";
        }
    }
    return os.str();
}

Json entropy_pairs_json(const ChainGraph& g, const EntropyPairs& pairs) {
    Json list = Json::array();
    for (auto [u, v] : pairs.pairs) list.push_back({g.label(u), g.label(v)});
    Json out;
    out["count"] = pairs.pairs.size();
    out["pairs"] = std::move(list);
    out["shadowing_verified"] = pairs.shadowing_verified;
    if (!pairs.caveat.empty()) out["caveat"] = pairs.caveat;
    return out;
}

Json relation_json(const RelationVerdict& v) {
    Json records = Json::array();
    for (const auto& r : v.records) {
        Json rec;
        rec["delta"] = to_string(r.delta);
        rec["boxes"] = r.boxes;
        rec["x_vertex"] = r.x_vertex;
        rec["y_vertex"] = r.y_vertex;
        rec["related"] = r.related;
        auto cls = [](const std::optional<ClassIndex>& c) -> Json {
            if (!c) return nullptr;
            return {{"component", c->component}, {"class", c->cls}};
        };
        rec["x_class"] = cls(r.x_class);
        rec["y_class"] = cls(r.y_class);
        records.push_back(std::move(rec));
    }
    Json out;
    out["records"] = std::move(records);
    out["related_for_all_tested"] = v.related_for_all_tested;
    out["note"] = "per-resolution verdicts only; no claim about delta -> 0";
    return out;
}

Json pstar_json(const ChainGraph& g, const PStarResult& r) {
    Json out;
    out["found"] = r.witness.has_value();
    if (!r.witness) {
        out["reason"] = r.reason;
        return out;
    }
    const auto& w = *r.witness;
    out["r"] = to_string(w.r);
    out["length"] = w.length;
    out["cycle1"] = path_json(g, w.cycle1);
    out["cycle2"] = path_json(g, w.cycle2);
    Json sep = Json::array(), cert = Json::array();
    for (const auto& s : w.separations) sep.push_back(to_string(s));
    for (const auto& s : w.certified_separations) cert.push_back(to_string(s));
    out["separations"] = std::move(sep);
    out["certified_separations"] = std::move(cert);
    out["slack"] = to_string(g.separation_slack());
    out["verified"] = verify_pstar_witness(g, w, w.cycle1.front(), w.cycle2.front());
    return out;
}

Json omega_json(const ChainGraph& g, const OmegaProduct& o) {
    Json pairs = Json::array();
    for (auto [a, b] : o.pairs) pairs.push_back({g.label(a), g.label(b)});
    Json pts = Json::array();
    for (const auto& [p, q] : o.points) pts.push_back({to_string(p), to_string(q)});
    return {{"exact", o.exact}, {"pairs", pairs}, {"points", pts}};
}

Json blocks_json(const GatheredBlocks& b) {
    Json levels = Json::array();
    auto pts = [&](const std::vector<std::uint16_t>& idx) {
        Json a = Json::array();
        for (auto i : idx) a.push_back(to_string(b.palette[i]));
        return a;
    };
    for (const auto& lb : b.levels) {
        levels.push_back({{"n", lb.level},
                          {"delta", to_string(lb.resolution.delta)},
                          {"boxes", lb.resolution.boxes},
                          {"a", lb.length},
                          {"gamma0", pts(lb.gamma0_points)},
                          {"gamma1", pts(lb.gamma1_points)},
                          {"alpha", pts(lb.alpha_points)},
                          {"beta", pts(lb.beta_points)}});
    }
    return {{"z", to_string(b.z)}, {"w", to_string(b.w)}, {"r", to_string(b.r)}, {"levels", levels}};
}

Json schedule_json(const Dc1Schedule& s) {
    Json levels = Json::array();
    for (std::size_t i = 0; i < s.levels(); ++i) {
        levels.push_back({{"n", i + 1},
                          {"a", s.counts.a[i].str()},
                          {"m", s.counts.m[i].str()},
                          {"b", s.counts.b[i].str()},
                          {"c", s.counts.c[i].str()}});
    }
    Json out = blocks_json(s.blocks);
    out["schedule"] = std::move(levels);
    return out;
}

Json certificate_json(const Dc1Certificate& c) {
    Json levels = Json::array();
    for (const auto& l : c.levels) {
        levels.push_back({{"n", l.n},
                          {"checkpoint", l.checkpoint},
                          {"agree", l.agree},
                          {"kind", l.kind},
                          {"threshold", to_string(l.threshold)},
                          {"measured", l.measured},
                          {"eps0", l.eps0},
                          {"eps1", l.eps1},
                          {"bound", l.bound},
                          {"plain_bound", l.plain_bound},
                          {"margin", l.margin},
                          {"pass", l.pass}});
    }
    return {{"system", c.system},
            {"z", to_string(c.z)},
            {"w", to_string(c.w)},
            {"r", to_string(c.r)},
            {"closeness_delta", to_string(c.closeness_delta)},
            {"u", bits_json(c.u)},
            {"v", bits_json(c.v)},
            {"levels", levels},
            {"passed", c.passed},
            {"verdict", c.verdict}};
}

std::string stats_csv(const Dc1Certificate& c, const PairStatistics& st) {
    std::ostringstream os;
    os << "checkpoint,n,phi,psi,kind,bound,plain_bound,margin\n";
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
        const auto& l = c.levels[i];
        const double cp = static_cast<double>(l.checkpoint);
        os << l.checkpoint << ',' << l.n << ',' << format_double(st.closeness(i, 0)) << ','
           << format_double(st.separation(i, 0)) << ',' << l.kind << ',' << format_double(l.bound / cp) << ','
           << format_double(l.plain_bound / cp) << ',' << format_double(l.margin / cp) << '\n';
    }
    return os.str();
}

std::string stats_plot_script(const std::string& csv_path) {
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set key top left\n"
       << "set logscale x\n"
       << "set xlabel 'checkpoint c_n'\n"
       << "set ylabel 'fraction of [0, c_n)'\n"
       << "set yrange [0:1.05]\n"
       << "plot '" << csv_path << "' every ::1 using 1:3 with linespoints title 'closeness', \\\n"
       << "     '" << csv_path << "' every ::1 using 1:4 with linespoints title 'separation', \\\n"
       << "     '" << csv_path << "' every ::1 using 1:7 with lines dashtype 2 title '1 - 1/n'\n";
    return os.str();
}

Json factor_json(const FactorConstruction& f, const EntropyBound& b) {
    Json chains;
    const char* names[2] = {"x", "y"};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) chains[std::string(names[i]) + names[j]] = path_json(f.graph, f.chains[i][j]);
    }
    Json out = {{"x", to_string(f.x)},
                {"y", to_string(f.y)},
                {"depth", f.depth},
                {"ball_radius", to_string(f.ball_radius)},
                {"length", f.length},
                {"chains", chains},
                {"entropy_lower_bound", b.lower_bound},
                {"sft_entropy", b.sft_entropy}};
    if (f.eps) out["eps"] = to_string(*f.eps);
    return out;
}

Json factor_sample_json(const FactorSample& s) {
    Json d = Json::array();
    for (const auto& x : s.ball_distances) d.push_back(to_string(x));
    return {{"s", bits_json(s.s)}, {"point", to_string(s.point)}, {"ball_distances", d}, {"ball_condition", s.ball_condition}};
}

Json near_json(const NearPair& p, const EntropyBound& b) {
    return {{"factor", factor_json(p.factor, b)},
            {"p", to_string(p.p)},
            {"q", to_string(p.q)},
            {"z", to_string(p.z)},
            {"w", to_string(p.w)},
            {"d_zx", to_string(p.dz)},
            {"d_wy", to_string(p.dw)},
            {"r", to_string(p.r)},
            {"certificate", certificate_json(p.run.certificate)}};
}

Json pair_class_json(const PairClass& c, const Thresholds& t) {
    return {{"horizon", c.horizon},
            {"min_distance", c.min_distance},
            {"tail_min_distance", c.tail_min_distance},
            {"tail_max_distance", c.tail_max_distance},
            {"low", to_string(t.low)},
            {"high", to_string(t.high)},
            {"labels", c.labels()}};
}

Json thick_json(const ThickProfile& t) {
    return {{"horizon", t.horizon}, {"max_run", t.max_run}, {"run_start", t.run_start}};
}

std::string tracking_csv(std::span<const double> eps) {
    std::ostringstream os;
    os << "m,eps\n";
    for (std::size_t i = 0; i < eps.size(); ++i) os << i + 1 << ',' << format_double(eps[i]) << '\n';
    return os.str();
}

}  // namespace dc1lab
