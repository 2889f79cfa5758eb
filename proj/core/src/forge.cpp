#include "soficlab/forge.hpp"

#include "soficlab/census.hpp"
#include "soficlab/entropy.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/io.hpp"
#include "soficlab/presentation.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace soficlab {

using nlohmann::json;

namespace {

// Some path labelled w, as edge ids.
std::optional<std::vector<int>> labeled_path(const LabeledGraph& g, const Word& w, std::optional<int> from = std::nullopt) {
    std::vector<std::map<int, int>> via(w.size() + 1); // vertex -> incoming edge
    if (from) via[0][*from] = -1;
    else
        for (int v = 0; v < g.vertex_count(); ++v) via[0][v] = -1;
    for (size_t i = 0; i < w.size(); ++i)
        for (const auto& [v, _] : via[i])
            for (int e : g.out_edges(v))
                if (g.edge(e).label == w[i]) via[i + 1].emplace(g.edge(e).dst, e);
    if (via[w.size()].empty()) return std::nullopt;
    std::vector<int> path;
    int v = via[w.size()].begin()->first;
    for (size_t i = w.size(); i > 0; --i) {
        int e = via[i].at(v);
        path.push_back(e);
        v = g.edge(e).src;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<std::vector<int>> closed_path(const LabeledGraph& g, int v, const Word& w) {
    std::vector<int> path;
    std::function<bool(int, size_t)> dfs = [&](int x, size_t i) {
        if (i == w.size()) return x == v;
        for (int e : g.out_edges(x)) {
            if (g.edge(e).label != w[i]) continue;
            path.push_back(e);
            if (dfs(g.edge(e).dst, i + 1)) return true;
            path.pop_back();
        }
        return false;
    };
    if (dfs(v, 0)) return path;
    return std::nullopt;
}

// Shortest path from `from` to `to` with at least `min_len` (0 or 1) edges.
std::optional<std::vector<int>> shortest_path(const LabeledGraph& g, int from, int to, int min_len) {
    if (min_len == 0 && from == to) return std::vector<int>{};
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -1);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    auto expand = [&](int x) {
        for (int e : g.out_edges(x)) {
            int d = g.edge(e).dst;
            if (seen[static_cast<size_t>(d)]) continue;
            seen[static_cast<size_t>(d)] = 1;
            parent[static_cast<size_t>(d)] = e;
            q.push(d);
        }
    };
    expand(from);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == to) {
            std::vector<int> path;
            int c = x;
            do {
                int e = parent[static_cast<size_t>(c)];
                path.push_back(e);
                c = g.edge(e).src;
            } while (c != from);
            std::reverse(path.begin(), path.end());
            return path;
        }
        if (x != from) expand(x);
    }
    return std::nullopt;
}

Word labels_of(const LabeledGraph& g, const std::vector<int>& path) {
    Word w;
    for (int e : path) w.push_back(g.edge(e).label);
    return w;
}

// Incrementally built graph whose edges remember the domain edge they copy.
struct Builder {
    const LabeledGraph& base;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    std::vector<int> origin;
    int vertex(const std::string& name) {
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
    }
    void edge(int s, int d, int base_edge) {
        edges.push_back({s, d, base.edge(base_edge).label});
        origin.push_back(base_edge);
    }
    // Runs `path` from s; new vertices in between, ends at `end` (or a new vertex when end < 0).
    int chain(int s, const std::vector<int>& path, int end, const std::string& prefix) {
        int cur = s;
        for (size_t i = 0; i < path.size(); ++i) {
            int nxt = (i + 1 == path.size() && end >= 0) ? end : vertex(prefix + std::to_string(names.size()));
            edge(cur, nxt, path[i]);
            cur = nxt;
        }
        return cur;
    }
    LabeledGraph graph() const { return LabeledGraph(base.alphabet(), names, edges); }
};

int origin_vertex(const LabeledGraph& domain, const SubSft& w, int x) {
    if (!w.graph.out_edges(x).empty()) return domain.edge(w.edge_origin[static_cast<size_t>(w.graph.out_edges(x)[0])]).src;
    return domain.edge(w.edge_origin[static_cast<size_t>(w.graph.in_edges(x)[0])]).dst;
}

json entropy_json(const EntropyEnclosure& e) { return {{"lower", e.lower_d()}, {"upper", e.upper_d()}}; }

} // namespace

ForgeResult forge_receptive_cover(const CoverSpec& pi, const PrimitiveWord& w) {
    const LabeledGraph& g = pi.graph;
    const ShiftHandle y = pi.codomain();
    const FischerCover& f = y.fischer();
    const ReceptivityResult rr = is_receptive(f, w.word);
    if (!rr.receptive) throw NotReceptiveError("w^inf is not receptive in the image shift");
    const ReceptivityWitness& wit = *rr.witness;

    const Word through = concat(concat(wit.m1, w.word), wit.m2);
    const auto path = labeled_path(g, through);
    if (!path) throw ValidationError("receptivity words are not presented by the cover graph");
    const int x = g.edge(path->front()).src;
    const int yv = g.edge(path->back()).dst;

    Builder b{g, g.vertex_names(), {}, {}};
    for (int e = 0; e < g.edge_count(); ++e) b.edge(g.edge(e).src, g.edge(e).dst, e);
    // Fresh edges copy the labels of the matching positions of `through`.
    auto fresh = [&](int s, int d, Symbol a) {
        b.edges.push_back({s, d, a});
        b.origin.push_back(-1);
    };
    int cur = x;
    for (size_t i = 0; i < wit.m1.size(); ++i) {
        int nxt = b.vertex("+s" + std::to_string(i + 1));
        fresh(cur, nxt, wit.m1[i]);
        cur = nxt;
    }
    const int r = cur;
    for (size_t i = 0; i < w.word.size(); ++i) {
        int nxt = i + 1 == w.word.size() ? r : b.vertex("+c" + std::to_string(i + 1));
        fresh(cur, nxt, w.word[i]);
        cur = nxt;
    }
    for (size_t i = 0; i < wit.m2.size(); ++i) {
        int nxt = i + 1 == wit.m2.size() ? yv : b.vertex("+t" + std::to_string(i + 1));
        fresh(cur, nxt, wit.m2[i]);
        cur = nxt;
    }

    ForgeResult res;
    res.graph = b.graph();
    const bool image_ok = shifts_equal(ShiftHandle::from_graph(res.graph), y);
    const VertexSet back = run_forward(res.graph, VertexSet{r}, w.word);
    const bool lift = std::binary_search(back.begin(), back.end(), r);
    const int p = graph_period(g), p2 = graph_period(res.graph);
    const bool period_claim = w.length() % p == 0;
    res.provenance = {{"construction", "receptive_cover"},
                      {"w", format_word(g.alphabet(), w.word)},
                      {"s", format_word(g.alphabet(), wit.m1)},
                      {"t", format_word(g.alphabet(), wit.m2)},
                      {"alpha_start", g.vertex_name(x)},
                      {"alpha_end", g.vertex_name(yv)},
                      {"new_vertex", res.graph.vertex_name(r)}};
    res.validation = {{"image_equal", image_ok},
                      {"periodic_lift", lift},
                      {"r_n", count_r(res.graph, w.length())},
                      {"period_before", p},
                      {"period_after", p2},
                      {"period_checked", period_claim}};
    if (!image_ok || !lift || (period_claim && p != p2)) throw ValidationError("forged receptive cover failed validation: " + res.validation.dump());
    return res;
}

namespace {

struct Petal {
    std::vector<int> edges;
};

bool unique_marker(const Word& marker, const Word& x) {
    Word s = concat(concat(marker, x), marker);
    const size_t m = marker.size();
    for (size_t i = 1; i + m <= s.size(); ++i) {
        if (i == m + x.size()) continue;
        if (std::equal(marker.begin(), marker.end(), s.begin() + static_cast<long>(i))) return false;
    }
    return true;
}

// Paths from `from` to `to` of length at most max_len whose label, between two
// copies of the marker, leaves the marker only at the two ends. One path per label.
std::vector<Petal> petals_up_to(const LabeledGraph& g, int from, int to, const Word& marker, int max_len, std::size_t cap) {
    std::vector<Petal> out;
    std::set<Word> seen;
    std::vector<int> path;
    Word text = marker;
    std::size_t visited = 0;
    std::function<void(int)> dfs = [&](int x) {
        if (++visited > 4'000'000) throw SearchBudgetExceeded("petal enumeration exceeded its budget");
        if (!path.empty() && x == to) {
            Word label(text.begin() + static_cast<long>(marker.size()), text.end());
            if (!seen.count(label) && unique_marker(marker, label)) {
                seen.insert(label);
                out.push_back({path});
                if (out.size() > cap) throw SearchBudgetExceeded("too many petals");
            }
        }
        if (static_cast<int>(path.size()) == max_len) return;
        for (int e : g.out_edges(x)) {
            text.push_back(g.edge(e).label);
            bool clash = text.size() > marker.size() &&
                         std::equal(marker.begin(), marker.end(), text.end() - static_cast<long>(marker.size()));
            if (!clash) {
                path.push_back(e);
                dfs(g.edge(e).dst);
                path.pop_back();
            }
            text.pop_back();
        }
    };
    dfs(from);
    return out;
}

// A path of length |ubar| whose label is not a rotation of ubar.
std::vector<int> padding_block(const LabeledGraph& g, const Word& ubar) {
    std::set<Word> rotations;
    for (size_t i = 0; i < ubar.size(); ++i) {
        Word r(ubar.begin() + static_cast<long>(i), ubar.end());
        r.insert(r.end(), ubar.begin(), ubar.begin() + static_cast<long>(i));
        rotations.insert(r);
    }
    std::vector<int> path;
    Word label;
    std::function<bool(int)> dfs = [&](int x) {
        if (path.size() == ubar.size()) return !rotations.count(label);
        for (int e : g.out_edges(x)) {
            path.push_back(e);
            label.push_back(g.edge(e).label);
            if (dfs(g.edge(e).dst)) return true;
            path.pop_back();
            label.pop_back();
        }
        return false;
    };
    for (int v = 0; v < g.vertex_count(); ++v)
        if (dfs(v)) return path;
    return {};
}

ForgeResult flower(const LabeledGraph& g, const std::vector<int>& marker_path, const std::vector<Petal>& petals) {
    Builder b{g, {}, {}, {}};
    const int hub = b.vertex("hub");
    const int hub_end = b.vertex("hub_end");
    b.chain(hub, marker_path, hub_end, "m");
    std::map<std::pair<int, int>, int> trie;
    for (const Petal& p : petals) {
        int node = hub_end;
        for (size_t i = 0; i + 1 < p.edges.size(); ++i) {
            auto key = std::make_pair(node, p.edges[i]);
            auto it = trie.find(key);
            if (it == trie.end()) {
                int nv = b.vertex("p" + std::to_string(b.names.size()));
                b.edge(node, nv, p.edges[i]);
                it = trie.emplace(key, nv).first;
            }
            node = it->second;
        }
        b.edge(node, hub, p.edges.back());
    }
    ForgeResult r;
    r.graph = b.graph();
    r.edge_origin = b.origin;
    r.hub = hub;
    r.hub_end = hub_end;
    return r;
}

} // namespace

ForgeResult extract_injective_sub(const CoverSpec& pi, const mpq_class& eps) {
    const LabeledGraph& g = pi.graph;
    const ShiftHandle y = pi.codomain();
    const EntropyEnclosure hy = entropy(y);
    if (hy.lower <= 0) throw ZeroEntropyError("the image shift has zero entropy");
    if (eps <= 0 || eps >= hy.lower) throw PreconditionError("eps must lie strictly between 0 and h(Y)");
    const int p = graph_period(g);

    SubSft whole = SubSft::whole(g);
    if (injective_on(pi, whole)) {
        ForgeResult r;
        r.graph = whole.graph;
        r.edge_origin = whole.edge_origin;
        r.hub = r.hub_end = 0;
        r.provenance = {{"construction", "injective_sub"}, {"fast_path", true}};
        r.validation = {{"injective", true}, {"entropy", entropy_json(entropy_of_graph(g))}, {"period", p}};
        return r;
    }

    // Base vertex on a shortest cycle u.
    int v0 = -1;
    std::vector<int> cycle;
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto c = shortest_path(g, v, v, 1);
        if (c && (v0 < 0 || c->size() < cycle.size())) {
            v0 = v;
            cycle = *c;
        }
    }
    const Word ubar = labels_of(g, cycle);
    const std::vector<int> pad = padding_block(g, ubar);
    if (pad.empty()) throw SearchBudgetExceeded("no block of length |u| off the orbit of u");
    const int s_vertex = g.edge(pad.front()).src, t_vertex = g.edge(pad.back()).dst;
    const auto b1 = shortest_path(g, t_vertex, v0, 0);
    const auto b2 = shortest_path(g, v0, s_vertex, 0);
    if (!b1 || !b2) throw PreconditionError("cover graph is not irreducible");

    const mpq_class target = hy.upper - eps;
    for (int n = 1; n <= 4; ++n) {
        // Marker a b1 u^(2n+2) b2 a: its ends are not rotations of the label of u.
        std::vector<int> marker_path = pad;
        marker_path.insert(marker_path.end(), b1->begin(), b1->end());
        for (int i = 0; i < 2 * n + 2; ++i) marker_path.insert(marker_path.end(), cycle.begin(), cycle.end());
        marker_path.insert(marker_path.end(), b2->begin(), b2->end());
        marker_path.insert(marker_path.end(), pad.begin(), pad.end());
        const Word marker = labels_of(g, marker_path);
        std::size_t last_count = 0;
        for (int len = 1; len <= 64; ++len) {
            std::vector<Petal> petals;
            try {
                petals = petals_up_to(g, t_vertex, s_vertex, marker, len, 6000);
            } catch (const SearchBudgetExceeded&) {
                break;
            }
            if (petals.empty() || petals.size() == last_count) continue;
            last_count = petals.size();
            ForgeResult r = flower(g, marker_path, petals);
            if (!is_irreducible(r.graph) || graph_period(r.graph) != p) continue;
            const EntropyEnclosure hw = entropy_of_graph(r.graph);
            if (hw.lower < target) continue;
            if (!injective_on(pi, r.sub())) continue;
            r.provenance = {{"construction", "injective_sub"},
                            {"base_vertex", g.vertex_name(v0)},
                            {"u", format_word(g.alphabet(), ubar)},
                            {"repetition_bound", n},
                            {"marker", format_word(g.alphabet(), marker)},
                            {"max_petal_length", len},
                            {"petals", petals.size()},
                            {"eps", eps.get_str()}};
            r.validation = {{"injective", true},
                            {"irreducible", true},
                            {"entropy_w", entropy_json(hw)},
                            {"entropy_y", entropy_json(hy)},
                            {"period", p}};
            return r;
        }
    }
    throw SearchBudgetExceeded("no injective sub-SFT within the escalation caps");
}

ForgeResult enlarge_with_orbit(const CoverSpec& pi, const SubSft& w, const std::vector<int>& cycle) {
    const LabeledGraph& g = pi.graph;
    if (cycle.empty()) throw PreconditionError("empty cycle");
    for (size_t i = 0; i < cycle.size(); ++i)
        if (g.edge(cycle[i]).dst != g.edge(cycle[(i + 1) % cycle.size()]).src) throw PreconditionError("edges do not form a cycle");
    const Word u = labels_of(g, cycle);
    if (!is_primitive(u)) throw PreconditionError("the label of the cycle has a smaller least period than the cycle");
    if (presents_periodic(w.graph, u)) throw PreconditionError("the label point already lies in pi(W)");
    if (w.graph.vertex_count() == 0) throw PreconditionError("empty sub-SFT");

    const int hub = w.hub >= 0 ? w.hub : 0;
    const int hub_end = w.hub_end >= 0 ? w.hub_end : hub;
    const int start = g.edge(cycle.front()).src;
    // The orbit goes in as one more petal, from the end of the marker back to
    // its start, so marker occurrences still cut every point into blocks.
    const auto in_path = shortest_path(g, origin_vertex(g, w, hub_end), start, 0);
    const auto out_path = shortest_path(g, start, origin_vertex(g, w, hub), 1);
    if (!in_path || !out_path) throw ValidationError("cycle is not reachable from the sub-SFT");

    for (int reps = 1; reps <= 8; ++reps) {
        Builder b{g, w.graph.vertex_names(), {}, {}};
        for (int e = 0; e < w.graph.edge_count(); ++e) {
            b.edges.push_back(w.graph.edge(e));
            b.origin.push_back(w.edge_origin[static_cast<size_t>(e)]);
        }
        std::vector<int> lead = *in_path;
        for (int i = 0; i < reps; ++i) lead.insert(lead.end(), cycle.begin(), cycle.end());
        const std::string tag = "o" + std::to_string(b.names.size()) + "_";
        const int s = b.chain(hub_end, lead, -1, tag);
        b.chain(s, cycle, s, tag);
        b.chain(s, *out_path, hub, tag);
        ForgeResult r;
        r.graph = b.graph();
        r.edge_origin = b.origin;
        r.hub = hub;
        r.hub_end = hub_end;
        if (!is_irreducible(r.graph) || !injective_on(pi, r.sub())) continue;
        r.provenance = {{"construction", "enlarge_with_orbit"},
                        {"u", format_word(g.alphabet(), u)},
                        {"R", reps},
                        {"I", in_path->size()},
                        {"J", out_path->size()}};
        r.validation = {{"injective", true}, {"irreducible", true}, {"orbit_present", presents_periodic(r.graph, u)}};
        return r;
    }
    throw ValidationError("no repetition count up to 8 keeps the enlarged sub-SFT injective");
}

ForgeResult grow_periodic_support(const CoverSpec& pi, const mpq_class& eps, int m_bound) {
    const LabeledGraph& g = pi.graph;
    ForgeResult cur = extract_injective_sub(pi, eps);
    const json base_provenance = cur.provenance;
    const int p = graph_period(g);
    json added = json::array();
    int iterations = 0;
    for (int n = 1; n <= m_bound; ++n) {
        const int m = n * p;
        std::vector<Word> words;
        for_each_lyndon_word(g, m, [&](const Word& x) { words.push_back(x); });
        for (const Word& x : words) {
            std::optional<std::vector<int>> cyc;
            for (int v = 0; v < g.vertex_count() && !cyc; ++v) cyc = closed_path(g, v, x);
            if (!cyc) continue;
            bool lifted = false;
            for (int v = 0; v < cur.graph.vertex_count() && !lifted; ++v) {
                VertexSet t = run_forward(cur.graph, VertexSet{v}, x);
                lifted = std::binary_search(t.begin(), t.end(), v);
            }
            if (lifted) continue;
            if (++iterations > 64) throw IterationBudgetExceeded("too many orbits to add");
            cur = enlarge_with_orbit(pi, cur.sub(), *cyc);
            added.push_back(format_word(g.alphabet(), x));
        }
    }
    json counts = json::array();
    bool matched = true;
    for (int n = 1; n <= m_bound; ++n) {
        const int m = n * p;
        const std::uint64_t q = sft_qn_oracle(cur.graph, m), r = count_r(g, m);
        counts.push_back({{"m", m}, {"q_w", q}, {"r", r}});
        matched = matched && q == r;
    }
    const bool injective = injective_on(pi, cur.sub());
    cur.provenance = {{"construction", "grow_periodic_support"}, {"base", base_provenance}, {"added_orbits", added}, {"M", m_bound}};
    cur.validation = {{"injective", injective}, {"counts", counts}, {"r_matching", matched},
                      {"entropy_w", entropy_json(entropy_of_graph(cur.graph))}};
    if (!injective || !matched) throw ValidationError("grown sub-SFT failed validation: " + cur.validation.dump());
    return cur;
}

} // namespace soficlab
