#include "dc1lab/decomposition.hpp"

#include "dc1lab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace dc1lab {

std::size_t CyclicComponent::size() const {
    std::size_t n = 0;
    for (const auto& c : classes) n += c.size();
    return n;
}

std::vector<VertexId> CyclicDecomposition::recurrent_vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < index.size(); ++v) {
        if (index[v]) out.push_back(v);
    }
    return out;
}

bool verify_chain(const ChainGraph& g, std::span<const VertexId> seq, bool closed) {
    if (seq.size() < 2) throw InputError("a chain needs at least two vertices");
    for (VertexId v : seq) g.require_vertex(v);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!g.has_edge(seq[i], seq[i + 1])) return false;
    }
    return !closed || seq.front() == seq.back();
}

std::vector<std::vector<VertexId>> strongly_connected_components(const ChainGraph& g) {
    // Iterative Tarjan.
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> call;
    std::vector<std::vector<VertexId>> comps;
    std::size_t counter = 0;

    for (VertexId root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call.emplace_back(root, 0);
        while (!call.empty()) {
            auto& [v, next] = call.back();
            if (next == 0 && index[v] == unvisited) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto succ = g.successors(v);
            if (next < succ.size()) {
                const VertexId w = succ[next++];
                if (index[w] == unvisited) {
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            const VertexId done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

namespace {

bool is_cyclic(const ChainGraph& g, const std::vector<VertexId>& comp) {
    return comp.size() > 1 || g.has_edge(comp.front(), comp.front());
}

}  // namespace

std::vector<VertexId> chain_recurrent_set(const ChainGraph& g) {
    std::vector<VertexId> out;
    for (const auto& comp : strongly_connected_components(g)) {
        if (is_cyclic(g, comp)) out.insert(out.end(), comp.begin(), comp.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

CyclicDecomposition cyclic_decomposition(const ChainGraph& g) {
    CyclicDecomposition dec;
    dec.index.assign(g.size(), std::nullopt);
    std::vector<std::size_t> comp_of(g.size(), static_cast<std::size_t>(-1));
    std::vector<std::size_t> level(g.size(), 0);

    for (const auto& comp : strongly_connected_components(g)) {
        if (!is_cyclic(g, comp)) continue;
        const std::size_t id = dec.components.size();
        for (VertexId v : comp) comp_of[v] = id;

        std::vector<char> seen(g.size(), 0);
        std::queue<VertexId> q;
        q.push(comp.front());
        seen[comp.front()] = 1;
        level[comp.front()] = 0;
        std::size_t period = 0;
        while (!q.empty()) {
            const VertexId u = q.front();
            q.pop();
            for (VertexId v : g.successors(u)) {
                if (comp_of[v] != id) continue;
                if (!seen[v]) {
                    seen[v] = 1;
                    level[v] = level[u] + 1;
                    q.push(v);
                } else {
                    const auto diff = static_cast<long long>(level[u]) + 1 - static_cast<long long>(level[v]);
                    period = std::gcd(period, static_cast<std::size_t>(diff < 0 ? -diff : diff));
                }
            }
        }
        CyclicComponent c;
        c.id = id;
        c.period = period == 0 ? 1 : period;
        c.classes.assign(c.period, {});
        for (VertexId v : comp) {
            const std::size_t j = level[v] % c.period;
            c.classes[j].push_back(v);
            dec.index[v] = ClassIndex{id, j};
        }
        dec.components.push_back(std::move(c));
    }
    return dec;
}

std::optional<Path> find_chain(const ChainGraph& g, VertexId u, VertexId v, std::size_t length) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (length < 1) throw InputError("chain length must be at least 1");
    // back[t][x]: x reaches v in exactly t steps.
    std::vector<std::vector<char>> back(length + 1, std::vector<char>(g.size(), 0));
    back[0][v] = 1;
    for (std::size_t t = 1; t <= length; ++t) {
        for (VertexId y = 0; y < g.size(); ++y) {
            if (!back[t - 1][y]) continue;
            for (VertexId x : g.predecessors(y)) back[t][x] = 1;
        }
    }
    if (!back[length][u]) return std::nullopt;
    Path path{u};
    VertexId cur = u;
    for (std::size_t s = 0; s < length; ++s) {
        for (VertexId w : g.successors(cur)) {
            if (back[length - s - 1][w]) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    return path;
}

std::vector<std::vector<char>> exact_step_reach(const ChainGraph& g, VertexId source, std::size_t steps) {
    g.require_vertex(source);
    std::vector<std::vector<char>> reach(steps + 1, std::vector<char>(g.size(), 0));
    reach[0][source] = 1;
    for (std::size_t t = 1; t <= steps; ++t) {
        for (VertexId x = 0; x < g.size(); ++x) {
            if (!reach[t - 1][x]) continue;
            for (VertexId y : g.successors(x)) reach[t][y] = 1;
        }
    }
    return reach;
}

namespace {

/// Thresholds from `u` to every vertex of its class, by stepping period-sized
/// moves inside the component until each target has a certified window.
std::vector<std::size_t> thresholds_from(const ChainGraph& g, const CyclicDecomposition& dec, VertexId u) {
    const ClassIndex ci = *dec.index[u];
    const CyclicComponent& comp = dec.components[ci.component];
    const std::vector<VertexId>& targets = comp.classes[ci.cls];
    const std::size_t window = g.size() + 1;
    const std::size_t s = comp.size();
    const std::size_t cap = (s - 1) * (s - 1) + 1 + window + 1;

    std::vector<char> cur(g.size(), 0), nxt(g.size(), 0);
    cur[u] = 1;
    std::vector<std::size_t> last_miss(targets.size(), 0);
    for (std::size_t n = 1; n <= cap; ++n) {
        for (std::size_t step = 0; step < comp.period; ++step) {
            std::fill(nxt.begin(), nxt.end(), 0);
            for (VertexId x = 0; x < g.size(); ++x) {
                if (!cur[x]) continue;
                for (VertexId y : g.successors(x)) {
                    if (dec.index[y] && dec.index[y]->component == ci.component) nxt[y] = 1;
                }
            }
            cur.swap(nxt);
        }
        bool settled = true;
        for (std::size_t k = 0; k < targets.size(); ++k) {
            if (!cur[targets[k]]) last_miss[k] = n;
            if (n < last_miss[k] + window) settled = false;
        }
        if (settled) break;
    }
    for (auto& m : last_miss) m += 1;
    return last_miss;
}

}  // namespace

std::size_t pair_threshold(const ChainGraph& g, const CyclicDecomposition& dec, VertexId u, VertexId v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (!dec.recurrent(u) || !dec.recurrent(v) || !(*dec.index[u] == *dec.index[v]))
        throw PreconditionError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                " do not share a class");
    const ClassIndex ci = *dec.index[u];
    const auto& targets = dec.components[ci.component].classes[ci.cls];
    const auto thresholds = thresholds_from(g, dec, u);
    const auto it = std::find(targets.begin(), targets.end(), v);
    return thresholds[static_cast<std::size_t>(it - targets.begin())];
}

std::map<std::pair<VertexId, VertexId>, std::size_t> reachability_threshold(const ChainGraph& g,
                                                                            const CyclicDecomposition& dec,
                                                                            std::size_t component) {
    if (component >= dec.components.size())
        throw InputError("unknown component " + std::to_string(component));
    std::map<std::pair<VertexId, VertexId>, std::size_t> out;
    for (const auto& cls : dec.components[component].classes) {
        for (VertexId u : cls) {
            const auto t = thresholds_from(g, dec, u);
            for (std::size_t k = 0; k < cls.size(); ++k) out[{u, cls[k]}] = t[k];
        }
    }
    return out;
}

}  // namespace dc1lab
