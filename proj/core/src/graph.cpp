#include "soficlab/graph.hpp"

#include "soficlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace soficlab {

Alphabet::Alphabet(std::vector<std::string> symbols) {
    for (auto& s : symbols) {
        if (index_.count(s)) throw ValidationError("duplicate alphabet symbol '" + s + "'");
        index_.emplace(s, static_cast<Symbol>(symbols_.size()));
        symbols_.push_back(std::move(s));
    }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Symbol Alphabet::index(std::string_view token) const {
    auto s = find(token);
    if (!s) throw ValidationError("symbol '" + std::string(token) + "' is not in the alphabet");
    return *s;
}

Symbol Alphabet::add(const std::string& token) {
    if (auto s = find(token)) return *s;
    index_.emplace(token, static_cast<Symbol>(symbols_.size()));
    symbols_.push_back(token);
    return static_cast<Symbol>(symbols_.size() - 1);
}

bool Alphabet::compact() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](const std::string& s) { return s.size() == 1; });
}

LabeledGraph::LabeledGraph(Alphabet alphabet, std::vector<std::string> vertices, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    const int n = vertex_count();
    out_.assign(static_cast<size_t>(n), {});
    in_.assign(static_cast<size_t>(n), {});
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[static_cast<size_t>(e)];
        if (ed.src < 0 || ed.src >= n || ed.dst < 0 || ed.dst >= n)
            throw ValidationError("edge " + std::to_string(e) + " references a missing vertex");
        if (ed.label < 0 || ed.label >= alphabet_.size())
            throw ValidationError("edge " + std::to_string(e) + " has a label outside the alphabet");
        out_[static_cast<size_t>(ed.src)].push_back(e);
        in_[static_cast<size_t>(ed.dst)].push_back(e);
    }
}

std::optional<int> LabeledGraph::find_vertex(std::string_view name) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[static_cast<size_t>(v)] == name) return v;
    return std::nullopt;
}

bool LabeledGraph::labels_distinct() const {
    std::vector<char> seen(static_cast<size_t>(alphabet_.size()), 0);
    for (const Edge& e : edges_) {
        if (seen[static_cast<size_t>(e.label)]) return false;
        seen[static_cast<size_t>(e.label)] = 1;
    }
    return true;
}

bool LabeledGraph::right_resolving() const {
    for (const auto& outs : out_) {
        std::vector<Symbol> labels;
        for (int e : outs) labels.push_back(edges_[static_cast<size_t>(e)].label);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
    }
    return true;
}

bool LabeledGraph::left_resolving() const {
    for (const auto& ins : in_) {
        std::vector<Symbol> labels;
        for (int e : ins) labels.push_back(edges_[static_cast<size_t>(e)].label);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
    }
    return true;
}

VertexSet LabeledGraph::all_vertices() const {
    VertexSet all(static_cast<size_t>(vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return all;
}

bool LabeledGraph::operator==(const LabeledGraph& other) const {
    if (!(alphabet_ == other.alphabet_) || vertices_ != other.vertices_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = other.edges_[i];
        if (a.src != b.src || a.dst != b.dst || a.label != b.label) return false;
    }
    return true;
}

VertexSet step_forward(const LabeledGraph& g, const VertexSet& from, Symbol a) {
    VertexSet out;
    for (int v : from)
        for (int e : g.out_edges(v))
            if (g.edge(e).label == a) out.push_back(g.edge(e).dst);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet step_backward(const LabeledGraph& g, const VertexSet& to, Symbol a) {
    VertexSet out;
    for (int v : to)
        for (int e : g.in_edges(v))
            if (g.edge(e).label == a) out.push_back(g.edge(e).src);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet run_forward(const LabeledGraph& g, VertexSet from, const Word& w) {
    for (Symbol a : w) {
        if (from.empty()) break;
        from = step_forward(g, from, a);
    }
    return from;
}

bool is_essential(const LabeledGraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.out_edges(v).empty() || g.in_edges(v).empty()) return false;
    return true;
}

namespace {

TrimResult induced(const LabeledGraph& g, const std::vector<char>& keep_v, const std::vector<char>& keep_e) {
    TrimResult r;
    std::vector<int> remap(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<std::string> names;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!keep_v[static_cast<size_t>(v)]) continue;
        remap[static_cast<size_t>(v)] = static_cast<int>(names.size());
        names.push_back(g.vertex_name(v));
        r.vertex_origin.push_back(v);
    }
    std::vector<Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (!keep_e[static_cast<size_t>(e)] || remap[static_cast<size_t>(ed.src)] < 0 ||
            remap[static_cast<size_t>(ed.dst)] < 0)
            continue;
        edges.push_back({remap[static_cast<size_t>(ed.src)], remap[static_cast<size_t>(ed.dst)], ed.label});
        r.edge_origin.push_back(e);
    }
    r.graph = LabeledGraph(g.alphabet(), std::move(names), std::move(edges));
    return r;
}

TrimResult trim_masks(const LabeledGraph& g, std::vector<char> keep_v, const std::vector<char>& keep_e) {
    const int n = g.vertex_count();
    std::vector<int> indeg(static_cast<size_t>(n), 0), outdeg(static_cast<size_t>(n), 0);
    auto live_edge = [&](int e) {
        const Edge& ed = g.edge(e);
        return keep_e[static_cast<size_t>(e)] && keep_v[static_cast<size_t>(ed.src)] && keep_v[static_cast<size_t>(ed.dst)];
    };
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!live_edge(e)) continue;
        ++outdeg[static_cast<size_t>(g.edge(e).src)];
        ++indeg[static_cast<size_t>(g.edge(e).dst)];
    }
    std::queue<int> dead;
    for (int v = 0; v < n; ++v)
        if (keep_v[static_cast<size_t>(v)] && (indeg[static_cast<size_t>(v)] == 0 || outdeg[static_cast<size_t>(v)] == 0))
            dead.push(v);
    while (!dead.empty()) {
        int v = dead.front();
        dead.pop();
        if (!keep_v[static_cast<size_t>(v)]) continue;
        for (int e : g.out_edges(v))
            if (live_edge(e)) {
                int w = g.edge(e).dst;
                if (w != v && --indeg[static_cast<size_t>(w)] == 0) dead.push(w);
            }
        for (int e : g.in_edges(v))
            if (live_edge(e)) {
                int w = g.edge(e).src;
                if (w != v && --outdeg[static_cast<size_t>(w)] == 0) dead.push(w);
            }
        keep_v[static_cast<size_t>(v)] = 0;
    }
    if (std::none_of(keep_v.begin(), keep_v.end(), [](char c) { return c != 0; }))
        throw EmptyShiftError("no essential subgraph remains");
    return induced(g, keep_v, keep_e);
}

} // namespace

TrimResult trim_with_map(const LabeledGraph& g) {
    return trim_masks(g, std::vector<char>(static_cast<size_t>(g.vertex_count()), 1),
                      std::vector<char>(static_cast<size_t>(g.edge_count()), 1));
}

LabeledGraph trim(const LabeledGraph& g) { return trim_with_map(g).graph; }

std::vector<Component> scc_decompose(const LabeledGraph& g) {
    // Iterative Tarjan; components come out sinks first, reversed at the end.
    const int n = g.vertex_count();
    std::vector<int> index(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0), comp(static_cast<size_t>(n), -1);
    std::vector<char> on_stack(static_cast<size_t>(n), 0);
    std::vector<int> stack;
    std::vector<Component> comps;
    int counter = 0;
    struct Frame { int v; size_t next; };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<size_t>(root)] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = counter++;
        stack.push_back(root);
        on_stack[static_cast<size_t>(root)] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& outs = g.out_edges(f.v);
            if (f.next < outs.size()) {
                int w = g.edge(outs[f.next++]).dst;
                if (index[static_cast<size_t>(w)] < 0) {
                    index[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = counter++;
                    stack.push_back(w);
                    on_stack[static_cast<size_t>(w)] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[static_cast<size_t>(w)]) {
                    low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], index[static_cast<size_t>(w)]);
                }
                continue;
            }
            int v = f.v;
            call.pop_back();
            if (!call.empty())
                low[static_cast<size_t>(call.back().v)] = std::min(low[static_cast<size_t>(call.back().v)], low[static_cast<size_t>(v)]);
            if (low[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
                Component c;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<size_t>(w)] = 0;
                    comp[static_cast<size_t>(w)] = static_cast<int>(comps.size());
                    c.vertices.push_back(w);
                } while (w != v);
                std::sort(c.vertices.begin(), c.vertices.end());
                comps.push_back(std::move(c));
            }
        }
    }
    for (const Edge& e : g.edges())
        if (comp[static_cast<size_t>(e.src)] == comp[static_cast<size_t>(e.dst)])
            comps[static_cast<size_t>(comp[static_cast<size_t>(e.src)])].cycle_bearing = true;
    std::reverse(comps.begin(), comps.end());
    return comps;
}

bool is_irreducible(const LabeledGraph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return false;
    auto comps = scc_decompose(g);
    return comps.size() == 1 && comps[0].cycle_bearing;
}

Layering cyclic_layering(const LabeledGraph& g) {
    if (!is_essential(g) || !is_irreducible(g)) throw NotIrreducibleError("graph is not essential and irreducible");
    Layering L;
    const int n = g.vertex_count();
    L.depth.assign(static_cast<size_t>(n), -1);
    std::queue<int> q;
    L.depth[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.out_edges(v)) {
            int w = g.edge(e).dst;
            if (L.depth[static_cast<size_t>(w)] < 0) {
                L.depth[static_cast<size_t>(w)] = L.depth[static_cast<size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    int p = 0;
    for (const Edge& e : g.edges())
        p = std::gcd(p, std::abs(L.depth[static_cast<size_t>(e.src)] + 1 - L.depth[static_cast<size_t>(e.dst)]));
    L.period = p;
    L.residue.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) L.residue[static_cast<size_t>(v)] = L.depth[static_cast<size_t>(v)] % p;
    return L;
}

int graph_period(const LabeledGraph& g) { return cyclic_layering(g).period; }

std::vector<int> HigherBlock::encode_cycle(const std::vector<int>& cycle) const {
    const int L = static_cast<int>(cycle.size());
    std::map<std::vector<int>, int> lookup;
    for (size_t e = 0; e < edge_paths.size(); ++e) lookup.emplace(edge_paths[e], static_cast<int>(e));
    std::vector<int> out;
    for (int i = 0; i < L; ++i) {
        std::vector<int> window;
        for (int j = -m; j <= m; ++j) window.push_back(cycle[static_cast<size_t>(((i + j) % L + L) % L)]);
        auto it = lookup.find(window);
        if (it == lookup.end()) throw ValidationError("cycle is not a path of the recoded graph");
        out.push_back(it->second);
    }
    return out;
}

HigherBlock higher_block(const LabeledGraph& g, int m) {
    if (m < 0) throw ValidationError("higher_block window must be non-negative");
    HigherBlock hb;
    hb.m = m;
    if (m == 0) {
        hb.graph = g;
        for (int e = 0; e < g.edge_count(); ++e) hb.edge_paths.push_back({e});
        hb.vertex_paths.assign(static_cast<size_t>(g.vertex_count()), {});
        return hb;
    }
    // All paths with `len` edges.
    auto paths_of_length = [&](int len) {
        std::vector<std::vector<int>> cur;
        for (int e = 0; e < g.edge_count(); ++e) cur.push_back({e});
        for (int k = 1; k < len; ++k) {
            std::vector<std::vector<int>> next;
            for (const auto& p : cur)
                for (int e : g.out_edges(g.edge(p.back()).dst)) {
                    auto q = p;
                    q.push_back(e);
                    next.push_back(std::move(q));
                }
            cur = std::move(next);
        }
        return cur;
    };
    auto vpaths = paths_of_length(2 * m);
    std::map<std::vector<int>, int> vindex;
    std::vector<std::string> names;
    for (size_t i = 0; i < vpaths.size(); ++i) {
        vindex.emplace(vpaths[i], static_cast<int>(i));
        std::string name;
        for (size_t k = 0; k < vpaths[i].size(); ++k) {
            if (k) name += ".";
            name += "e" + std::to_string(vpaths[i][k]);
        }
        names.push_back(name);
    }
    std::vector<Edge> edges;
    for (const auto& p : paths_of_length(2 * m + 1)) {
        std::vector<int> pre(p.begin(), p.end() - 1), suf(p.begin() + 1, p.end());
        edges.push_back({vindex.at(pre), vindex.at(suf), g.edge(p[static_cast<size_t>(m)]).label});
        hb.edge_paths.push_back(p);
    }
    hb.vertex_paths = std::move(vpaths);
    hb.graph = LabeledGraph(g.alphabet(), std::move(names), std::move(edges));
    return hb;
}

TrimResult restrict_with_map(const LabeledGraph& g, const VertexPredicate& keep_vertex, const EdgePredicate& keep_edge) {
    std::vector<char> kv(static_cast<size_t>(g.vertex_count())), ke(static_cast<size_t>(g.edge_count()));
    for (int v = 0; v < g.vertex_count(); ++v) kv[static_cast<size_t>(v)] = keep_vertex ? keep_vertex(v) : 1;
    for (int e = 0; e < g.edge_count(); ++e) ke[static_cast<size_t>(e)] = keep_edge ? keep_edge(e) : 1;
    return trim_masks(g, std::move(kv), ke);
}

LabeledGraph restrict_to_subgraph(const LabeledGraph& g, const VertexPredicate& keep_vertex, const EdgePredicate& keep_edge) {
    return restrict_with_map(g, keep_vertex, keep_edge).graph;
}

LabeledGraph reverse(const LabeledGraph& g) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.dst, e.src, e.label});
    return LabeledGraph(g.alphabet(), g.vertex_names(), std::move(edges));
}

LabeledGraph relabel(const LabeledGraph& g, const Alphabet& target, const std::vector<Symbol>& map) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.src, e.dst, map.at(static_cast<size_t>(e.label))});
    return LabeledGraph(target, g.vertex_names(), std::move(edges));
}

LabeledGraph over_alphabet(const LabeledGraph& g, const Alphabet& target) {
    std::vector<Symbol> map;
    for (const auto& s : g.alphabet().symbols()) {
        auto t = target.find(s);
        map.push_back(t ? *t : -1);
    }
    for (const Edge& e : g.edges())
        if (map[static_cast<size_t>(e.label)] < 0)
            throw ValidationError("label '" + g.alphabet().name(e.label) + "' missing from target alphabet");
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.src, e.dst, map[static_cast<size_t>(e.label)]});
    return LabeledGraph(target, g.vertex_names(), std::move(edges));
}

Alphabet used_alphabet(const LabeledGraph& g) {
    std::vector<char> used(static_cast<size_t>(g.alphabet().size()), 0);
    for (const Edge& e : g.edges()) used[static_cast<size_t>(e.label)] = 1;
    std::vector<std::string> syms;
    for (int s = 0; s < g.alphabet().size(); ++s)
        if (used[static_cast<size_t>(s)]) syms.push_back(g.alphabet().name(s));
    return Alphabet(std::move(syms));
}

} // namespace soficlab
