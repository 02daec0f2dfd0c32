#include "dc1lab/cli.hpp"

#include "dc1lab/config.hpp"
#include "dc1lab/dc1.hpp"
#include "dc1lab/decomposition.hpp"
#include "dc1lab/errors.hpp"
#include "dc1lab/export.hpp"
#include "dc1lab/pairlab.hpp"
#include "dc1lab/pstar.hpp"
#include "dc1lab/relation.hpp"
#include "dc1lab/shadowing.hpp"
#include "store.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace dc1lab::cli {

namespace {

struct Options {
    std::string system, emit = "json", x, y, z, w, u, v, r, delta, schedule, eps, po, bits, out;
    std::string low = "1/256", high = "1/4", sample, separation, closeness = "1/2";
    std::size_t boxes = 0, nmax = 0, horizon = 0;
    bool persist = false;
    bool plot = false;
    std::string replay;
};

/// What a subcommand produced: the main artifact first, plus summary lines.
struct Output {
    std::vector<Artifact> artifacts;
    std::vector<std::pair<std::string, std::string>> summary;
};

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Session {
public:
    explicit Session(Options& o) : o_(o) {}

    const SystemSpec& spec() {
        if (!spec_) {
            if (o_.system.empty()) throw InputError("--system is required");
            spec_ = parse_system_config(read_text(o_.system));
        }
        return *spec_;
    }

    Point point(const std::string& text, const char* flag) {
        if (text.empty()) throw InputError(std::string(flag) + " is required");
        return parse_point(spec(), text);
    }

    Point z() { return anchor(o_.z, "(0)", "--z"); }
    Point w() { return anchor(o_.w, "(1)", "--w"); }

    Rational rational(const std::string& text, const char* flag) {
        if (text.empty()) throw InputError(std::string(flag) + " is required");
        return parse_rational(text);
    }

    Resolution resolution() {
        if (o_.boxes == 0) {
            if (o_.delta.empty()) throw InputError("--boxes or --delta is required");
            return resolution_for_delta(spec(), parse_rational(o_.delta));
        }
        if (!o_.delta.empty()) return Resolution{o_.boxes, parse_rational(o_.delta)};
        return Resolution{o_.boxes, spec().is_sft() ? dyadic(o_.boxes) : Rational(1, static_cast<long long>(o_.boxes))};
    }

    Bits bits(const std::string& text, const char* flag) {
        if (text.empty()) throw InputError(std::string(flag) + " is required");
        return parse_bits(text);
    }

private:
    Point anchor(const std::string& given, const char* fallback, const char* flag) {
        if (!given.empty() || !spec().is_sft()) return point(given, flag);
        try {
            Point p = point(fallback, flag);
            require_in_domain(spec(), p);
            return p;
        } catch (const Error&) {
            throw InputError(std::string("default ") + fallback + " is not in the shift space; pass " + flag);
        }
    }

    Options& o_;
    std::optional<SystemSpec> spec_;
};

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::string resolution_text(const Resolution& r) {
    return std::to_string(r.boxes) + " cells, delta " + to_string(r.delta);
}

Output cmd_discretize(Options& o, Session& s) {
    const Resolution res = s.resolution();
    const ChainGraph g = discretize(s.spec(), res);
    Output out;
    if (o.emit == "dot") {
        out.artifacts.push_back({"graph.dot", graph_dot(g)});
    } else if (o.emit == "csv") {
        out.artifacts.push_back({"graph.csv", graph_csv(g)});
    } else {
        out.artifacts.push_back({"graph.json", json_text(graph_json(g))});
    }
    out.summary = {{"resolution", resolution_text(res)}, {"vertices", std::to_string(g.size())},
                   {"edges", std::to_string(g.edge_count())}};
    return out;
}

Output cmd_decompose(Options& o, Session& s) {
    const Resolution res = s.resolution();
    const ChainGraph g = discretize(s.spec(), res);
    const CyclicDecomposition dec = cyclic_decomposition(g);
    Output out;
    if (o.emit == "csv") {
        out.artifacts.push_back({"decomposition.csv", decomposition_csv(g, dec)});
    } else {
        Json j = decomposition_json(g, dec);
        j["entropy_pairs"] = entropy_pairs_json(g, entropy_pairs(dec, s.spec()));
        out.artifacts.push_back({"decomposition.json", json_text(j)});
    }
    std::string periods;
    for (const auto& c : dec.components) periods += (periods.empty() ? "" : ",") + std::to_string(c.period);
    out.summary = {{"resolution", resolution_text(res)},
                   {"chain recurrent", std::to_string(dec.recurrent_vertices().size()) + " of " + std::to_string(g.size())},
                   {"components", std::to_string(dec.components.size())},
                   {"periods", periods}};
    return out;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Output cmd_relate(Options& o, Session& s) {
    if (o.schedule.empty()) throw InputError("--schedule is required");
    std::vector<Resolution> schedule;
    for (const auto& d : split_list(o.schedule)) {
        const Rational delta = parse_rational(d);
        schedule.push_back(o.boxes ? Resolution{o.boxes, delta} : resolution_for_delta(s.spec(), delta));
    }
    const auto verdict = relate_schedule(s.spec(), s.point(o.x, "--x"), s.point(o.y, "--y"), schedule);
    Output out;
    out.artifacts.push_back({"relation.json", json_text(relation_json(verdict))});
    for (const auto& r : verdict.records)
        out.summary.emplace_back("delta " + to_string(r.delta), r.related ? "related" : "not related");
    out.summary.emplace_back("related for all tested", verdict.related_for_all_tested ? "true" : "false");
    return out;
}

Output cmd_pstar(Options& o, Session& s) {
    const Resolution res = s.resolution();
    const ChainGraph g = discretize(s.spec(), res);
    const Point x = s.point(o.x, "--x");
    const Point y = s.point(o.y, "--y");
    const VertexId u = g.vertex_of(x);
    const VertexId v = g.vertex_of(y);
    const PStarResult result = property_star(g, u, v, s.rational(o.r, "--r"));
    Json j = pstar_json(g, result);
    j["resolution"] = {{"cells", res.boxes}, {"delta", to_string(res.delta)}};
    if (o.horizon > 0) j["omega"] = omega_json(g, omega_product(s.spec(), g, x, y, o.horizon));
    Output out;
    out.artifacts.push_back({"pstar.json", json_text(j)});
    out.summary = {{"resolution", resolution_text(res)},
                   {"witness", result.witness ? "cycle length " + std::to_string(result.witness->length) : result.reason}};
    return out;
}

std::size_t levels_from(const Options& o, std::size_t fallback) {
    const std::size_t n = o.nmax ? o.nmax : fallback;
    if (n == 0) throw InputError("--nmax is required");
    return n;
}

GatheredBlocks gather(Options& o, Session& s, std::size_t n) {
    return gather_blocks(s.spec(), s.z(), s.w(), s.rational(o.r, "--r"), n, default_grids(s.spec(), n));
}

Output cmd_gather(Options& o, Session& s) {
    const std::size_t n = levels_from(o, 0);
    const GatheredBlocks b = gather(o, s, n);
    Output out;
    out.artifacts.push_back({"blocks.json", json_text(blocks_json(b))});
    out.summary = {{"levels", std::to_string(n)}, {"a_1", std::to_string(b.levels.front().length)}};
    return out;
}

Output cmd_schedule(Options& o, Session& s) {
    const std::size_t n = levels_from(o, 0);
    const Dc1Schedule sched = build_schedule(gather(o, s, n), n);
    Output out;
    out.artifacts.push_back({"schedule.json", json_text(schedule_json(sched))});
    out.summary = {{"levels", std::to_string(n)}, {"c_n", sched.counts.c.back().str()}};
    return out;
}

Output cmd_build_xi(Options& o, Session& s) {
    const Bits u = s.bits(o.u, "--u");
    const std::size_t n = levels_from(o, u.size());
    const Dc1Schedule sched = build_schedule(gather(o, s, n), n);
    const XiOrbit xi = build_xi(u, sched);
    std::ostringstream os;
    write_pseudo_orbit(xi.orbit, os);
    Output out;
    out.artifacts.push_back({"xi.jsonl", os.str()});
    out.summary = {{"u", bits_to_string(u)}, {"entries", std::to_string(xi.orbit.size())}};
    return out;
}

Dc1Run certify(Options& o, Session& s) {
    const Bits u = s.bits(o.u, "--u");
    const Bits v = s.bits(o.v, "--v");
    if (u.size() != v.size()) throw InputError("--u and --v must have the same length");
    if (!s.spec().is_sft()) throw PreconditionError("no exact shadowing available for " + s.spec().name);
    if (u == v) throw PreconditionError("no separation checkpoints: u and v agree on every level");
    const std::size_t n = u.size();
    const Dc1Schedule sched = build_schedule(gather(o, s, n), n);
    return certify_dc1(s.spec(), sched, u, v, parse_rational(o.closeness));
}

void certificate_summary(const Dc1Certificate& c, Output& out) {
    for (const auto& l : c.levels) {
        out.summary.emplace_back("level " + std::to_string(l.n),
                                 l.kind + " " + std::to_string(l.measured) + " / " + std::to_string(l.checkpoint) +
                                     (l.pass ? " pass" : " FAIL") + ", margin " + format_double(l.margin));
    }
    out.summary.emplace_back("verdict", c.verdict);
}

Output cmd_stats(Options& o, Session& s) {
    const Dc1Run run = certify(o, s);
    std::vector<std::size_t> cps;
    for (const auto& l : run.certificate.levels) cps.push_back(l.checkpoint);
    const PairStatistics st = dc1_statistics(s.spec(), run.x_u, run.x_v, cps, {run.certificate.closeness_delta},
                                             {Rational(run.certificate.r / 3)});
    Output out;
    out.artifacts.push_back({"stats.csv", stats_csv(run.certificate, st)});
    if (o.plot) {
        const std::string csv = o.out.empty() ? "stats.csv" : o.out;
        out.artifacts.push_back({"stats.gp", stats_plot_script(csv)});
    }
    certificate_summary(run.certificate, out);
    return out;
}

Output cmd_certify(Options& o, Session& s) {
    const Dc1Run run = certify(o, s);
    Output out;
    out.artifacts.push_back({"certificate.json", json_text(certificate_json(run.certificate))});
    certificate_summary(run.certificate, out);
    return out;
}

std::optional<Rational> optional_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return parse_rational(text);
}

Output cmd_factor(Options& o, Session& s) {
    const FactorConstruction f =
        factor_construct(s.spec(), s.point(o.x, "--x"), s.point(o.y, "--y"), optional_rational(o.eps));
    const EntropyBound b = entropy_lower_bound(s.spec(), f);
    Json j = factor_json(f, b);
    if (!o.sample.empty()) j["sample"] = factor_sample_json(sample_factor(s.spec(), f, parse_bits(o.sample)));
    Output out;
    out.artifacts.push_back({"factor.json", json_text(j)});
    out.summary = {{"length a", std::to_string(f.length)},
                   {"entropy lower bound", format_double(b.lower_bound)},
                   {"sft entropy", format_double(b.sft_entropy)}};
    return out;
}

Output cmd_near(Options& o, Session& s) {
    const NearPair p = approximate_dc1_near(s.spec(), s.point(o.x, "--x"), s.point(o.y, "--y"),
                                            s.rational(o.eps, "--eps"), o.nmax ? o.nmax : 6);
    Output out;
    out.artifacts.push_back({"near.json", json_text(near_json(p, entropy_lower_bound(s.spec(), p.factor)))});
    out.summary = {{"z", to_string(p.z)}, {"w", to_string(p.w)}};
    certificate_summary(p.run.certificate, out);
    return out;
}

Output cmd_track(Options& o, Session& s) {
    if (o.po.empty()) throw InputError("--po is required");
    std::ifstream in(o.po);
    if (!in) throw InputError("cannot read '" + o.po + "'");
    const PseudoOrbit po = read_pseudo_orbit(s.spec(), in);
    Point y;
    if (!o.y.empty()) {
        y = s.point(o.y, "--y");
    } else if (s.spec().is_sft()) {
        y = shadow_sft(s.spec().sft(), po, s.spec().sft().depth);
    } else {
        throw InputError("--y is required for systems without exact shadowing");
    }
    const std::size_t n = o.horizon ? o.horizon : po.size();
    const auto eps = tracking_average(s.spec(), y, po, n);
    Output out;
    out.artifacts.push_back({"tracking.csv", tracking_csv(eps)});
    out.summary = {{"shadow", to_string(y)},
                   {"eps_n", eps.empty() ? "-" : format_double(eps.back())},
                   {"note", s.spec().is_sft() ? "exact shadowing by read-off" : "diagnostic only, no shadowing claim"}};
    return out;
}

Output cmd_classify(Options& o, Session& s) {
    if (o.horizon < 2) throw InputError("--horizon of at least 2 is required");
    const Thresholds t{parse_rational(o.low), parse_rational(o.high)};
    const PairClass c = classify_pair(s.spec(), s.point(o.x, "--x"), s.point(o.y, "--y"), o.horizon, t);
    Output out;
    out.artifacts.push_back({"classify.json", json_text(pair_class_json(c, t))});
    std::string labels;
    for (const auto& l : c.labels()) labels += (labels.empty() ? "" : ", ") + l;
    out.summary = {{"labels", labels.empty() ? "none" : labels}};
    return out;
}

Output cmd_thick(Options& o, Session&) {
    if (o.bits.empty()) throw InputError("--bits is required");
    std::vector<char> bits;
    for (char c : read_text(o.bits)) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<char>(c - '0'));
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw InputError("bits file may contain only 0, 1 and whitespace");
        }
    }
    const ThickProfile t = thick_profile(bits, o.horizon ? o.horizon : bits.size());
    Output out;
    out.artifacts.push_back({"thick.json", json_text(thick_json(t))});
    out.summary = {{"max run", std::to_string(t.max_run)}, {"run start", std::to_string(t.run_start)}};
    return out;
}

/// Splits --flag=value and drops store/output flags, which do not change
/// what is computed.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string a = args[i];
        std::string value;
        bool inline_value = false;
        if (a.rfind("--", 0) == 0) {
            if (auto eq = a.find('='); eq != std::string::npos) {
                value = a.substr(eq + 1);
                a = a.substr(0, eq);
                inline_value = true;
            }
        }
        if (a == "--persist") continue;
        if (a == "--out") {
            if (!inline_value) ++i;
            continue;
        }
        out.push_back(a);
        if (inline_value) out.push_back(value);
    }
    return out;
}

Manifest make_manifest(const std::vector<std::string>& args) {
    Manifest m;
    const std::vector<std::string> files = {"--system", "--po", "--bits"};
    const auto norm = normalize(args);
    for (std::size_t i = 0; i < norm.size(); ++i) {
        const bool is_file = std::find(files.begin(), files.end(), norm[i]) != files.end();
        m.command.push_back(norm[i]);
        if (is_file && i + 1 < norm.size()) {
            InputFile f;
            f.flag = norm[i];
            f.path = norm[++i];
            f.content = read_text(f.path.string());
            f.sha256 = sha256_hex(f.content);
            m.command.push_back("@sha256:" + f.sha256);
            m.inputs.push_back(std::move(f));
        }
    }
    return m;
}

std::string line_diff(const std::string& name, const std::string& stored, const std::string& fresh) {
    std::istringstream a(stored), b(fresh);
    std::string la, lb;
    std::size_t line = 0;
    for (;;) {
        ++line;
        const bool ga = static_cast<bool>(std::getline(a, la));
        const bool gb = static_cast<bool>(std::getline(b, lb));
        if (!ga && !gb) return "";
        if (!ga || !gb || la != lb) {
            return name + ":" + std::to_string(line) + ":\n- " + (ga ? la : "<eof>") + "\n+ " + (gb ? lb : "<eof>") + "\n";
        }
    }
}

RunResult replay(const std::string& hash);

RunResult execute(const std::vector<std::string>& args) {
    RunResult result;
    Options o;
    CLI::App app{"Chain dynamics and DC1 construction toolkit", "dc1lab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", tool_version);
    app.add_flag("--persist", o.persist, "store inputs, manifest and outputs under their manifest hash");
    app.add_option("--out", o.out, "write the main output to this file");

    using Handler = std::function<Output(Options&, Session&)>;
    Handler chosen;
    auto bind = [&](CLI::App* sub, Handler h) { sub->callback([&chosen, h] { chosen = h; }); };
    auto system = [&](CLI::App* sub) { sub->add_option("--system", o.system, "system config (YAML)")->required(); };
    auto grid = [&](CLI::App* sub) {
        sub->add_option("--boxes", o.boxes, "box count, or word depth for shifts");
        sub->add_option("--delta", o.delta, "resolution p/q");
    };

    auto* disc = app.add_subcommand("discretize", "build the delta-chain graph");
    system(disc);
    grid(disc);
    disc->add_option("--emit", o.emit, "json | dot | csv")->check(CLI::IsMember({"json", "dot", "csv"}));
    bind(disc, cmd_discretize);

    auto* deco = app.add_subcommand("decompose", "chain recurrent set and cyclic decomposition");
    system(deco);
    grid(deco);
    deco->add_option("--emit", o.emit, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    bind(deco, cmd_decompose);

    auto* rel = app.add_subcommand("relate", "chain relation over a schedule of resolutions");
    system(rel);
    rel->add_option("--x", o.x)->required();
    rel->add_option("--y", o.y)->required();
    rel->add_option("--schedule", o.schedule, "comma separated deltas, strictly decreasing")->required();
    rel->add_option("--boxes", o.boxes, "fixed cell count for every entry");
    bind(rel, cmd_relate);

    auto* ps = app.add_subcommand("pstar", "separated cycle pair search");
    system(ps);
    grid(ps);
    ps->add_option("--x", o.x)->required();
    ps->add_option("--y", o.y)->required();
    ps->add_option("--r", o.r)->required();
    ps->add_option("--horizon", o.horizon, "also report the omega-limit of the product orbit");
    bind(ps, cmd_pstar);

    auto* dc1 = app.add_subcommand("dc1", "block schedule, xi orbits and certificates");
    dc1->require_subcommand(1);
    auto dc1_common = [&](CLI::App* sub, bool levels) {
        system(sub);
        sub->add_option("--z", o.z, "default (0) on shifts");
        sub->add_option("--w", o.w, "default (1) on shifts");
        sub->add_option("--r", o.r, "separation radius")->required();
        if (levels) sub->add_option("--nmax", o.nmax, "number of levels");
    };
    auto* gat = dc1->add_subcommand("gather", "per-level cycles and chains");
    dc1_common(gat, true);
    bind(gat, cmd_gather);
    auto* sch = dc1->add_subcommand("schedule", "repetition counts m_n, b_n, c_n");
    dc1_common(sch, true);
    bind(sch, cmd_schedule);
    auto* xi = dc1->add_subcommand("build-xi", "the pseudo-orbit xi(u) as JSON lines");
    dc1_common(xi, true);
    xi->add_option("--u", o.u)->required();
    bind(xi, cmd_build_xi);
    for (auto [name, handler, help] : {std::tuple{"stats", Handler(cmd_stats), "closeness/separation profile (CSV)"},
                                       std::tuple{"certify", Handler(cmd_certify), "finite-scale certificate (JSON)"}}) {
        auto* sub = dc1->add_subcommand(name, help);
        dc1_common(sub, false);
        sub->add_option("--u", o.u)->required();
        sub->add_option("--v", o.v)->required();
        sub->add_option("--delta", o.closeness, "closeness threshold (default 1/2)");
        if (std::string(name) == "stats") sub->add_flag("--plot", o.plot, "also emit a gnuplot script");
        bind(sub, handler);
    }
    auto* fac = dc1->add_subcommand("factor", "chains for the factor map onto the 2-shift");
    system(fac);
    fac->add_option("--x", o.x)->required();
    fac->add_option("--y", o.y)->required();
    fac->add_option("--eps", o.eps);
    fac->add_option("--sample", o.sample, "binary string to push through the factor");
    bind(fac, cmd_factor);
    auto* near = dc1->add_subcommand("near", "certified pair close to an entropy pair");
    system(near);
    near->add_option("--x", o.x)->required();
    near->add_option("--y", o.y)->required();
    near->add_option("--eps", o.eps)->required();
    near->add_option("--nmax", o.nmax);
    bind(near, cmd_near);

    auto* tr = app.add_subcommand("track", "tracking averages of a pseudo-orbit (CSV)");
    system(tr);
    tr->add_option("--po", o.po, "pseudo-orbit, JSON lines")->required();
    tr->add_option("--horizon", o.horizon);
    tr->add_option("--y", o.y, "tracking point (default: read-off shadow on shifts)");
    bind(tr, cmd_track);

    auto* cl = app.add_subcommand("classify", "proximal / distal / Li-Yorke evidence");
    system(cl);
    cl->add_option("--x", o.x)->required();
    cl->add_option("--y", o.y)->required();
    cl->add_option("--horizon", o.horizon)->required();
    cl->add_option("--low", o.low);
    cl->add_option("--high", o.high);
    bind(cl, cmd_classify);

    auto* th = app.add_subcommand("thick", "longest run of a bit sequence");
    th->add_option("--bits", o.bits, "file of 0/1 characters")->required();
    th->add_option("--horizon", o.horizon);
    bind(th, cmd_thick);

    auto* rep = app.add_subcommand("replay", "re-run a stored manifest and diff its outputs");
    rep->add_option("hash", o.replay)->required();

    std::ostringstream out, err;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        result.status = app.exit(e, out, err);
        if (result.status != 0) result.status = 2;
        result.out = out.str();
        result.err = err.str();
        return result;
    }

    if (rep->parsed()) return replay(o.replay);

    Session session(o);
    const Output produced = chosen(o, session);
    result.artifacts = produced.artifacts;
    std::ostringstream summary;
    for (const auto& [k, v] : produced.summary) summary << k << ": " << v << '\n';

    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw InputError("cannot write '" + o.out + "'");
        f << result.artifacts.front().content;
        for (std::size_t i = 1; i < result.artifacts.size(); ++i) {
            const std::string extra = o.out + "." + result.artifacts[i].name.substr(result.artifacts[i].name.rfind('.') + 1);
            std::ofstream g(extra, std::ios::binary);
            g << result.artifacts[i].content;
            summary << "wrote: " << extra << '\n';
        }
        summary << "wrote: " << o.out << '\n';
    } else {
        out << result.artifacts.front().content;
    }
    if (o.persist) {
        result.store_hash = persist(make_manifest(args), result.artifacts, o.out);
        summary << "stored: " << result.store_hash << '\n';
    }
    if (o.out.empty()) {
        err << summary.str();
    } else {
        out << summary.str();
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

RunResult replay(const std::string& hash) {
    const StoredRun stored = load_stored(hash);
    RunResult fresh = execute(stored.command);
    RunResult result;
    result.status = fresh.status;
    std::string diff;
    if (fresh.status != 0) {
        diff = "re-execution failed: " + fresh.err;
    } else if (fresh.artifacts.size() != stored.artifacts.size()) {
        diff = "artifact count differs\n";
    } else {
        for (std::size_t i = 0; i < stored.artifacts.size(); ++i)
            diff += line_diff(stored.artifacts[i].name, stored.artifacts[i].content, fresh.artifacts[i].content);
    }
    result.artifacts = fresh.artifacts;
    if (diff.empty()) {
        result.out = "replay " + hash + ": identical (" + std::to_string(stored.artifacts.size()) + " artifacts)\n";
    } else {
        result.status = 1;
        result.out = diff;
        result.err = "replay " + hash + ": outputs differ\n";
    }
    return result;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    try {
        return execute(args);
    } catch (const Error& e) {
        RunResult r;
        r.status = 1;
        r.err = std::string("error: ") + e.what() + "\n";
        return r;
    } catch (const std::exception& e) {
        RunResult r;
        r.status = 1;
        r.err = std::string("error: ") + e.what() + "\n";
        return r;
    }
}

}  // namespace dc1lab::cli
