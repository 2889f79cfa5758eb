#include "soficlab/period.hpp"

#include "soficlab/census.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/io.hpp"
#include "soficlab/presentation.hpp"

#include <map>
#include <numeric>
#include <queue>

namespace soficlab {

using nlohmann::json;

PeriodReport period_of(const ShiftHandle& y, int n_max) {
    if (y.is_empty()) throw EmptyShiftError("period of the empty shift");
    PeriodReport r;
    r.n_max = n_max;
    r.per = graph_period(y.fischer().graph);
    r.p3_left = graph_period(left_fischer_cover(y).graph);
    const CensusTable t = census(y, n_max);
    for (const auto& row : t.rows) {
        if (row.rec) r.p4_empirical = std::gcd(r.p4_empirical, row.n);
        if (row.s) r.p5_empirical = std::gcd(r.p5_empirical, row.n);
        if (row.q) r.q_gcd = std::gcd(r.q_gcd, row.n);
    }
    r.consistent = r.per == r.p3_left && r.p4_empirical % r.per == 0 && r.p5_empirical % r.per == 0;
    return r;
}

CyclicPartition canonical_cyclic_partition(const LabeledGraph& g) {
    Layering L = cyclic_layering(g);
    return CyclicPartition{L.period, L.residue};
}

CyclicPartition canonical_cyclic_partition(const ShiftHandle& x) {
    if (x.kind() != ShiftKind::SftEdgeShift) throw ValidationError("canonical cyclic partition needs an edge shift");
    return canonical_cyclic_partition(x.presentation());
}

std::string block_symbol(const Alphabet& a, const Word& block) {
    std::string s;
    const bool compact = a.compact();
    for (size_t i = 0; i < block.size(); ++i) {
        if (i && !compact) s += ".";
        s += a.name(block[i]);
    }
    return s;
}

std::vector<ShiftHandle> cyclic_images(const CoverSpec& pi) {
    const LabeledGraph& g = pi.graph;
    const CyclicPartition part = canonical_cyclic_partition(g);
    const int p = part.p;
    std::vector<ShiftHandle> out;
    for (int cls = 0; cls < p; ++cls) {
        Alphabet blocks;
        std::vector<std::string> names;
        std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (part.classes[static_cast<size_t>(v)] == cls) {
                local[static_cast<size_t>(v)] = static_cast<int>(names.size());
                names.push_back(g.vertex_name(v));
            }
        std::vector<Edge> edges;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (local[static_cast<size_t>(v)] < 0) continue;
            // Paths of length p from v.
            std::vector<std::pair<int, Word>> frontier{{v, {}}};
            for (int step = 0; step < p; ++step) {
                std::vector<std::pair<int, Word>> next;
                for (const auto& [x, w] : frontier)
                    for (int e : g.out_edges(x)) {
                        Word nw = w;
                        nw.push_back(g.edge(e).label);
                        next.emplace_back(g.edge(e).dst, std::move(nw));
                    }
                frontier = std::move(next);
            }
            for (const auto& [x, w] : frontier)
                edges.push_back({local[static_cast<size_t>(v)], local[static_cast<size_t>(x)], blocks.add(block_symbol(g.alphabet(), w))});
        }
        out.push_back(ShiftHandle::from_graph(LabeledGraph(blocks, names, edges)));
    }
    return out;
}

namespace {

// Potential of each vertex along edges mod p over the weakly connected
// components; returns the gcd of imbalances per component.
std::vector<int> imbalance_gcds(const LabeledGraph& g, std::vector<int>& potential) {
    const int n = g.vertex_count();
    potential.assign(static_cast<size_t>(n), INT32_MIN);
    std::vector<int> comp(static_cast<size_t>(n), -1);
    std::vector<int> gcds;
    for (int root = 0; root < n; ++root) {
        if (comp[static_cast<size_t>(root)] >= 0) continue;
        const int c = static_cast<int>(gcds.size());
        gcds.push_back(0);
        std::queue<int> q;
        q.push(root);
        comp[static_cast<size_t>(root)] = c;
        potential[static_cast<size_t>(root)] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.out_edges(v)) {
                int w = g.edge(e).dst;
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = c;
                    potential[static_cast<size_t>(w)] = potential[static_cast<size_t>(v)] + 1;
                    q.push(w);
                }
            }
            for (int e : g.in_edges(v)) {
                int w = g.edge(e).src;
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = c;
                    potential[static_cast<size_t>(w)] = potential[static_cast<size_t>(v)] - 1;
                    q.push(w);
                }
            }
        }
    }
    for (const Edge& e : g.edges()) {
        int c = comp[static_cast<size_t>(e.src)];
        gcds[static_cast<size_t>(c)] = std::gcd(gcds[static_cast<size_t>(c)],
                                                std::abs(potential[static_cast<size_t>(e.src)] + 1 - potential[static_cast<size_t>(e.dst)]));
    }
    return gcds;
}

void blocks_of_length(const SubsetAutomaton& dfa, int len, std::vector<Word>& out) {
    std::vector<std::pair<int, Word>> frontier{{0, {}}};
    for (int step = 0; step < len; ++step) {
        std::vector<std::pair<int, Word>> next;
        for (const auto& [s, w] : frontier)
            for (Symbol a = 0; a < dfa.base.alphabet().size(); ++a) {
                int t = dfa.next(s, a);
                if (t < 0) continue;
                Word nw = w;
                nw.push_back(a);
                next.emplace_back(t, std::move(nw));
            }
        frontier = std::move(next);
        if (frontier.size() > 2'000'000) throw BudgetExceeded("block enumeration exceeded its budget");
    }
    for (auto& [s, w] : frontier) out.push_back(std::move(w));
}

} // namespace

Verdict3 is_p_periodic(const ShiftHandle& z, int p, int k_max, int n_max) {
    if (p < 1) throw ValidationError("p must be positive");
    if (z.is_empty()) return Verdict3::yes({{"kind", "TRIVIAL"}, {"reason", "empty shift"}});
    if (p == 1) return Verdict3::yes({{"kind", "TRIVIAL"}});
    const LabeledGraph& g = z.presentation();

    if (z.kind() == ShiftKind::SftEdgeShift) {
        std::vector<int> potential;
        auto gcds = imbalance_gcds(g, potential);
        json cert{{"kind", "SFT_EXACT"}, {"p", p}, {"component_gcds", gcds}};
        for (int gc : gcds)
            if (gc % p != 0) return Verdict3::no(cert);
        json residues = json::object();
        for (int v = 0; v < g.vertex_count(); ++v)
            residues[g.vertex_name(v)] = ((potential[static_cast<size_t>(v)] % p) + p) % p;
        cert["residues"] = residues;
        return Verdict3::yes(cert);
    }

    // Period obstruction: a periodic point whose least period p does not divide.
    const SubsetAutomaton dfa = determinize(g);
    for (int m = 1; m <= n_max; ++m) {
        if (m % p == 0) continue;
        std::optional<Word> found;
        for_each_lyndon_word(g, m, [&](const Word& w) {
            if (!found && presents_periodic(g, w)) found = w;
        });
        if (found)
            return Verdict3::no({{"kind", "PERIOD_OBSTRUCTION"}, {"word", format_word(g.alphabet(), *found)}, {"least_period", m}, {"p", p}}, n_max);
    }

    for (int k = 0; k <= k_max; ++k) {
        const int len = 2 * k + 1;
        std::vector<Word> edges_words;
        blocks_of_length(dfa, len + 1, edges_words);
        std::map<Word, int> index;
        std::vector<std::string> names;
        std::vector<Edge> edges;
        Alphabet one({"x"});
        auto vertex = [&](const Word& w) {
            auto [it, fresh] = index.emplace(w, static_cast<int>(names.size()));
            if (fresh) names.push_back(format_word(g.alphabet(), w));
            return it->second;
        };
        for (const Word& w : edges_words) {
            int a = vertex(Word(w.begin(), w.end() - 1));
            int b = vertex(Word(w.begin() + 1, w.end()));
            edges.push_back({a, b, 0});
        }
        LabeledGraph bg(one, names, edges);
        std::vector<int> potential;
        auto gcds = imbalance_gcds(bg, potential);
        bool ok = true;
        for (int gc : gcds) ok = ok && gc % p == 0;
        if (!ok) continue;
        json coloring = json::object();
        for (int v = 0; v < bg.vertex_count(); ++v)
            coloring[bg.vertex_name(v)] = ((potential[static_cast<size_t>(v)] % p) + p) % p;
        return Verdict3::yes({{"kind", "WINDOW_COLORING"}, {"k", k}, {"p", p}, {"coloring", coloring}}, n_max);
    }
    return Verdict3::unknown("no period obstruction up to n_max and no window coloring up to k_max=" + std::to_string(k_max), n_max);
}

} // namespace soficlab
