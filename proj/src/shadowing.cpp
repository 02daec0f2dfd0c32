#include "dc1lab/shadowing.hpp"

#include "dc1lab/errors.hpp"
#include "dc1lab/kernels.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <string>

namespace dc1lab {

PseudoOrbit PseudoOrbit::from_points(const std::vector<Point>& points) {
    PseudoOrbit po;
    for (const Point& p : points) {
        auto it = std::find(po.palette.begin(), po.palette.end(), p);
        if (it == po.palette.end()) {
            if (po.palette.size() > std::numeric_limits<std::uint16_t>::max())
                throw InputError("too many distinct points in a pseudo-orbit");
            po.palette.push_back(p);
            it = po.palette.end() - 1;
        }
        po.entries.push_back(static_cast<std::uint16_t>(it - po.palette.begin()));
    }
    return po;
}

std::vector<Rational> defects(const SystemSpec& spec, const PseudoOrbit& po) {
    std::map<std::pair<std::uint16_t, std::uint16_t>, Rational> cache;
    std::vector<Point> images;
    images.reserve(po.palette.size());
    for (const Point& p : po.palette) images.push_back(evaluate(spec, p));
    std::vector<Rational> out;
    if (po.size() < 2) return out;
    out.reserve(po.size() - 1);
    for (std::size_t i = 0; i + 1 < po.size(); ++i) {
        const auto key = std::make_pair(po.entries[i], po.entries[i + 1]);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, distance(spec, images[key.first], po.palette[key.second])).first;
        out.push_back(it->second);
    }
    return out;
}

namespace {

std::vector<SymbolSeq> symbolic_palette(const PseudoOrbit& po) {
    std::vector<SymbolSeq> out;
    out.reserve(po.palette.size());
    for (const Point& p : po.palette) {
        const auto* s = std::get_if<SymbolSeq>(&p);
        if (s == nullptr) throw InputError("shift pseudo-orbits need symbol-sequence entries");
        out.push_back(*s);
    }
    return out;
}

}  // namespace

SymbolSeq shadow_sft(const ShiftOfFiniteType& sft, const PseudoOrbit& po, std::size_t depth) {
    if (po.size() == 0) throw InputError("empty pseudo-orbit");
    if (depth < 1) throw InputError("depth must be at least 1");
    const auto palette = symbolic_palette(po);
    std::vector<Word> heads;
    for (const auto& s : palette) {
        if (s.known_length() < depth) throw PreconditionError("entry shorter than the shadowing depth");
        heads.push_back(s.head(depth));
    }
    const std::size_t n = palette.size();
    std::vector<char> overlap(n * n, -1);
    auto fits = [&](std::uint16_t a, std::uint16_t b) {
        char& c = overlap[static_cast<std::size_t>(a) * n + b];
        if (c < 0) c = std::equal(heads[a].begin() + 1, heads[a].end(), heads[b].begin()) ? 1 : 0;
        return c == 1;
    };
    Word prefix;
    prefix.reserve(po.size() - 1);
    for (std::size_t i = 0; i + 1 < po.size(); ++i) {
        if (!fits(po.entries[i], po.entries[i + 1]))
            throw PreconditionError("entries " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                    " do not overlap on " + std::to_string(depth - 1) + " symbols");
        prefix.push_back(heads[po.entries[i]][0]);
    }
    const SymbolSeq& tail = palette[po.entries.back()];
    prefix.insert(prefix.end(), tail.prefix.begin(), tail.prefix.end());
    SymbolSeq y{std::move(prefix), tail.period};
    y.canonicalize();
    require_admissible(sft, y);
    return y;
}

namespace {

/// Exact distances along the orbit of y for interval and circle systems.
template <class F>
void walk_exact(const SystemSpec& spec, const Point& y, const PseudoOrbit& po, std::size_t n, F&& visit) {
    Point cur = y;
    for (std::size_t i = 0; i < n; ++i) {
        visit(i, distance(spec, cur, po[i]));
        if (i + 1 < n) cur = evaluate(spec, cur);
    }
}

std::vector<std::uint8_t> symbolic_tracking(const Point& y, const PseudoOrbit& po, std::size_t n) {
    const auto palette = symbolic_palette(po);
    return kernels::parallel::tracking_exponents(std::get<SymbolSeq>(y), std::span(po.entries).first(n), palette);
}

void require_horizon(const PseudoOrbit& po, std::size_t n) {
    if (n > po.size())
        throw InputError("horizon " + std::to_string(n) + " exceeds the pseudo-orbit length " +
                         std::to_string(po.size()));
}

}  // namespace

std::vector<double> tracking_average(const SystemSpec& spec, const Point& y, const PseudoOrbit& po, std::size_t n) {
    require_horizon(po, n);
    std::vector<double> eps(n);
    if (spec.is_sft()) {
        const auto e = symbolic_tracking(y, po, n);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            sum += std::ldexp(1.0, -static_cast<int>(e[i]));
            eps[i] = sum / static_cast<double>(i + 1);
        }
        return eps;
    }
    Rational sum(0);
    walk_exact(spec, y, po, n, [&](std::size_t i, const Rational& d) {
        sum += d;
        eps[i] = to_double(sum / static_cast<long long>(i + 1));
    });
    return eps;
}

std::vector<double> tracking_average_at(const SystemSpec& spec, const Point& y, const PseudoOrbit& po,
                                        std::span<const std::size_t> checkpoints) {
    if (checkpoints.empty()) return {};
    const std::size_t n = checkpoints.back();
    require_horizon(po, n);
    std::vector<double> out;
    if (spec.is_sft()) {
        const auto e = symbolic_tracking(y, po, n);
        for (const auto& h : kernels::parallel::histograms_at(e, checkpoints)) {
            const std::size_t c = out.size();
            out.push_back(kernels::dyadic_mass(h) / static_cast<double>(checkpoints[c]));
        }
        return out;
    }
    Rational sum(0);
    std::size_t next = 0;
    walk_exact(spec, y, po, n, [&](std::size_t i, const Rational& d) {
        sum += d;
        while (next < checkpoints.size() && checkpoints[next] == i + 1) {
            out.push_back(to_double(sum / static_cast<long long>(i + 1)));
            ++next;
        }
    });
    while (out.size() < checkpoints.size()) out.push_back(0.0);
    return out;
}

Rational max_tracking_distance(const SystemSpec& spec, const Point& y, const PseudoOrbit& po, std::size_t n) {
    require_horizon(po, n);
    if (n == 0) return Rational(0);
    if (spec.is_sft()) {
        const auto e = symbolic_tracking(y, po, n);
        return dyadic(*std::min_element(e.begin(), e.end()));
    }
    Rational worst(0);
    walk_exact(spec, y, po, n, [&](std::size_t, const Rational& d) { worst = std::max(worst, d); });
    return worst;
}

PseudoOrbit read_pseudo_orbit(const SystemSpec& spec, std::istream& in) {
    std::vector<Point> points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            points.push_back(parse_point(spec, j.at("point").get<std::string>()));
        } catch (const nlohmann::json::exception& e) {
            throw InputError("pseudo-orbit line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    PseudoOrbit po = PseudoOrbit::from_points(points);
    return po;
}

void write_pseudo_orbit(const PseudoOrbit& po, std::ostream& out) {
    std::vector<std::string> text;
    text.reserve(po.palette.size());
    for (const Point& p : po.palette) text.push_back(nlohmann::json{{"point", to_string(p)}}.dump());
    for (auto e : po.entries) out << text[e] << '\n';
}

}  // namespace dc1lab
