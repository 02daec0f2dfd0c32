#include "dc1lab/config.hpp"

#include "dc1lab/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>

namespace dc1lab {

namespace {

YAML::Node require(const YAML::Node& node, const std::string& key, const std::string& where) {
    const YAML::Node child = node[key];
    if (!child) throw ValidationError("missing '" + key + "' in " + where);
    return child;
}

Rational rational_field(const YAML::Node& node, const std::string& what) {
    try {
        return parse_rational(node.as<std::string>());
    } catch (const InputError& e) {
        throw ValidationError(what + ": " + e.what());
    }
}

IntervalMap parse_interval(const YAML::Node& params) {
    IntervalMap m;
    for (const auto& b : require(params, "breakpoints", "parameters")) m.breakpoints.push_back(rational_field(b, "breakpoint"));
    for (const auto& p : require(params, "pieces", "parameters")) {
        m.pieces.push_back(LinearPiece{rational_field(require(p, "slope", "piece"), "slope"),
                                       rational_field(require(p, "intercept", "piece"), "intercept")});
    }
    return m;
}

CircleAffine parse_circle(const YAML::Node& params) {
    CircleAffine c;
    c.multiplier = require(params, "multiplier", "parameters").as<long long>();
    c.shift = params["shift"] ? rational_field(params["shift"], "shift") : Rational(0);
    return c;
}

ShiftOfFiniteType parse_sft(const YAML::Node& params) {
    ShiftOfFiniteType s;
    s.alphabet = require(params, "alphabet", "parameters").as<std::size_t>();
    for (const auto& row : require(params, "adjacency", "parameters")) {
        std::vector<std::uint8_t> r;
        for (const auto& e : row) r.push_back(static_cast<std::uint8_t>(e.as<int>()));
        s.adjacency.push_back(std::move(r));
    }
    s.depth = params["depth"] ? params["depth"].as<std::size_t>() : 1;
    return s;
}

}  // namespace

SystemSpec parse_system_config(const std::string& text) {
    SystemSpec spec;
    try {
        const YAML::Node root = YAML::Load(text);
        if (!root.IsMap()) throw ValidationError("system config must be a mapping");
        const std::string kind = require(root, "kind", "config").as<std::string>();
        const YAML::Node params = require(root, "parameters", "config");
        if (kind == "interval-pw-linear") {
            spec.map = parse_interval(params);
        } else if (kind == "circle-affine") {
            spec.map = parse_circle(params);
        } else if (kind == "sft") {
            spec.map = parse_sft(params);
        } else {
            throw ValidationError("unknown system kind '" + kind + "'");
        }
        spec.name = root["name"] ? root["name"].as<std::string>() : kind;
        if (root["metric"] && root["metric"].as<std::string>() != spec.metric_name())
            throw ValidationError("metric '" + root["metric"].as<std::string>() + "' does not fit kind '" + kind +
                                  "' (expected '" + spec.metric_name() + "')");
    } catch (const YAML::Exception& e) {
        throw ValidationError(std::string("malformed system config: ") + e.what());
    }
    validate(spec);
    return spec;
}

SystemSpec load_system_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read system config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system_config(ss.str());
}

std::string dump_system_config(const SystemSpec& spec) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << spec.name;
    out << YAML::Key << "kind" << YAML::Value << to_string(spec.kind());
    out << YAML::Key << "metric" << YAML::Value << spec.metric_name();
    out << YAML::Key << "parameters" << YAML::Value << YAML::BeginMap;
    if (const auto* m = std::get_if<IntervalMap>(&spec.map)) {
        out << YAML::Key << "breakpoints" << YAML::Value << YAML::Flow << YAML::BeginSeq;
        for (const auto& b : m->breakpoints) out << YAML::DoubleQuoted << to_string(b);
        out << YAML::EndSeq << YAML::Key << "pieces" << YAML::Value << YAML::BeginSeq;
        for (const auto& p : m->pieces) {
            out << YAML::Flow << YAML::BeginMap << YAML::Key << "slope" << YAML::Value << YAML::DoubleQuoted
                << to_string(p.slope) << YAML::Key << "intercept" << YAML::Value << YAML::DoubleQuoted
                << to_string(p.intercept) << YAML::EndMap;
        }
        out << YAML::EndSeq;
    } else if (const auto* c = std::get_if<CircleAffine>(&spec.map)) {
        out << YAML::Key << "multiplier" << YAML::Value << c->multiplier;
        out << YAML::Key << "shift" << YAML::Value << YAML::DoubleQuoted << to_string(c->shift);
    } else {
        const auto& s = spec.sft();
        out << YAML::Key << "alphabet" << YAML::Value << s.alphabet;
        out << YAML::Key << "adjacency" << YAML::Value << YAML::BeginSeq;
        for (const auto& row : s.adjacency) {
            out << YAML::Flow << YAML::BeginSeq;
            for (auto e : row) out << static_cast<int>(e);
            out << YAML::EndSeq;
        }
        out << YAML::EndSeq;
        out << YAML::Key << "depth" << YAML::Value << s.depth;
    }
    out << YAML::EndMap << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

}  // namespace dc1lab
