#include "soficlab/census.hpp"

#include "soficlab/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <queue>

namespace soficlab {

namespace {

using Row = boost::dynamic_bitset<>;
using Relation = std::vector<Row>;

void lyndon_dfs(const SubsetAutomaton& dfa, int n, const std::function<void(const Word&)>& visit) {
    if (n <= 0) return;
    Word w;
    std::vector<int> states{0};
    const int k = dfa.base.alphabet().size();
    std::vector<Symbol> next_symbol{0};
    while (!next_symbol.empty()) {
        Symbol& a = next_symbol.back();
        if (static_cast<int>(w.size()) == n || a >= k) {
            if (static_cast<int>(w.size()) == n && is_lyndon(w)) visit(w);
            next_symbol.pop_back();
            states.pop_back();
            if (!w.empty()) w.pop_back();
            continue;
        }
        Symbol cur = a++;
        int t = dfa.next(states.back(), cur);
        if (t < 0) continue;
        w.push_back(cur);
        states.push_back(t);
        next_symbol.push_back(0);
    }
}

BigInt language_size(const SubsetAutomaton& dfa, int n) {
    std::vector<BigInt> count(static_cast<size_t>(dfa.state_count()), 0);
    count[0] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(count.size(), 0);
        for (size_t s = 0; s < count.size(); ++s) {
            if (count[s] == 0) continue;
            for (int t : dfa.transitions[s])
                if (t >= 0) next[static_cast<size_t>(t)] += count[s];
        }
        count = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : count) total += c;
    return total;
}

void check_budget(const SubsetAutomaton& dfa, int n_max, std::uint64_t budget) {
    if (language_size(dfa, n_max) > BigInt(budget))
        throw BudgetExceeded("|B_" + std::to_string(n_max) + "| exceeds the enumeration budget of " + std::to_string(budget));
}

// Shortest magic word per Fischer vertex, in BFS discovery order.
std::vector<std::pair<int, Word>> magic_words_by_vertex(const FischerCover& f) {
    const LabeledGraph& g = f.graph;
    std::map<VertexSet, Word> seen;
    std::queue<VertexSet> q;
    std::vector<std::pair<int, Word>> out;
    std::vector<char> found(static_cast<size_t>(g.vertex_count()), 0);
    const VertexSet all = g.all_vertices();
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
        VertexSet t = step_forward(g, all, a);
        if (t.empty() || seen.count(t)) continue;
        seen.emplace(t, Word{a});
        q.push(t);
    }
    while (!q.empty()) {
        VertexSet s = q.front();
        q.pop();
        const Word w = seen.at(s);
        if (s.size() == 1 && !found[static_cast<size_t>(s[0])]) {
            found[static_cast<size_t>(s[0])] = 1;
            out.emplace_back(s[0], w);
        }
        for (Symbol a = 0; a < g.alphabet().size(); ++a) {
            VertexSet t = step_forward(g, s, a);
            if (t.empty() || seen.count(t)) continue;
            Word wt = w;
            wt.push_back(a);
            seen.emplace(t, std::move(wt));
            q.push(std::move(t));
        }
    }
    return out;
}

} // namespace

std::vector<int> word_map(const FischerCover& f, const Word& w) {
    std::vector<int> m(static_cast<size_t>(f.graph.vertex_count()));
    for (int v = 0; v < f.graph.vertex_count(); ++v) m[static_cast<size_t>(v)] = f.run(v, w);
    return m;
}

bool contains_periodic(const FischerCover& f, const Word& w) {
    if (w.empty()) return false;
    const auto m = word_map(f, w);
    const int n = f.graph.vertex_count();
    for (int v = 0; v < n; ++v) {
        int x = v;
        for (int i = 0; i < n && x >= 0; ++i) x = m[static_cast<size_t>(x)];
        if (x >= 0) return true;
    }
    return false;
}

bool contains_periodic(const ShiftHandle& y, const PrimitiveWord& w) {
    if (y.is_empty()) return false;
    return contains_periodic(y.fischer(), w.word);
}

bool periodic_synchronizing(const FischerCover& f, const Word& w) {
    if (w.empty()) return false;
    VertexSet s = f.graph.all_vertices();
    while (true) {
        VertexSet t = run_forward(f.graph, s, w);
        if (t == s || t.empty()) {
            s = std::move(t);
            break;
        }
        s = std::move(t);
    }
    return s.size() == 1;
}

ReceptivityResult is_receptive(const FischerCover& f, const Word& w, std::size_t cap) {
    ReceptivityResult res;
    if (!contains_periodic(f, w)) return res;
    const int n = f.graph.vertex_count();
    const auto m = word_map(f, w);

    // Cycles of the functional graph of f_w.
    std::vector<std::vector<int>> cycles;
    std::vector<int> color(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> path;
        int x = v;
        while (x >= 0 && color[static_cast<size_t>(x)] == 0) {
            color[static_cast<size_t>(x)] = 1;
            path.push_back(x);
            x = m[static_cast<size_t>(x)];
        }
        if (x >= 0 && color[static_cast<size_t>(x)] == 1) {
            auto it = std::find(path.begin(), path.end(), x);
            cycles.emplace_back(it, path.end());
        }
        for (int p : path) color[static_cast<size_t>(p)] = 2;
    }

    const SubsetAutomaton dfa = determinize(f.graph);
    const int k = f.graph.alphabet().size();
    std::size_t explored = 0;
    for (const auto& cyc : cycles) {
        // Product search: cycle coordinates stay alive, subset coordinate collapses.
        using Key = std::vector<int>;
        std::map<Key, std::pair<Key, Symbol>> parent;
        std::queue<Key> q;
        Key start = cyc;
        start.push_back(0);
        Key goal;
        for (Symbol a = 0; a < k && goal.empty(); ++a) {
            Key nk;
            bool alive = true;
            for (int c : cyc) {
                int t = f.next(c, a);
                if (t < 0) { alive = false; break; }
                nk.push_back(t);
            }
            if (!alive) continue;
            nk.push_back(dfa.next(0, a));
            if (parent.count(nk)) continue;
            parent.emplace(nk, std::make_pair(Key{}, a));
            q.push(nk);
        }
        while (!q.empty()) {
            Key key = q.front();
            q.pop();
            if (++explored > cap) throw BudgetExceeded("receptivity search exceeded its state cap");
            if (dfa.states[static_cast<size_t>(key.back())].size() == 1) {
                goal = key;
                break;
            }
            for (Symbol a = 0; a < k; ++a) {
                Key nk;
                bool alive = true;
                for (size_t i = 0; i + 1 < key.size(); ++i) {
                    int t = f.next(key[i], a);
                    if (t < 0) { alive = false; break; }
                    nk.push_back(t);
                }
                if (!alive) continue;
                nk.push_back(dfa.next(key.back(), a));
                if (parent.count(nk)) continue;
                parent.emplace(nk, std::make_pair(key, a));
                q.push(std::move(nk));
            }
        }
        if (goal.empty()) continue;

        ReceptivityWitness wit;
        for (Key cur = goal;;) {
            const auto& p = parent.at(cur);
            wit.m2.push_back(p.second);
            if (p.first.empty()) break;
            cur = p.first;
        }
        std::reverse(wit.m2.begin(), wit.m2.end());

        for (const auto& [v, mw] : magic_words_by_vertex(f)) {
            int x = v;
            int pre = 0;
            while (x >= 0 && pre <= n && std::find(cyc.begin(), cyc.end(), x) == cyc.end()) {
                x = m[static_cast<size_t>(x)];
                ++pre;
            }
            if (x < 0 || pre > n) continue;
            wit.collapse_vertex = v;
            wit.preperiod = pre;
            wit.m1 = mw;
            for (int i = 0; i < pre; ++i) wit.m1.insert(wit.m1.end(), w.begin(), w.end());
            auto it = std::find(cyc.begin(), cyc.end(), x);
            wit.cycle.assign(it, cyc.end());
            wit.cycle.insert(wit.cycle.end(), cyc.begin(), it);
            break;
        }
        if (wit.collapse_vertex < 0) throw NotIrreducibleError("no magic word reaches the f_w cycle");
        res.receptive = true;
        res.witness = std::move(wit);
        return res;
    }
    return res;
}

ReceptivityResult is_receptive(const ShiftHandle& y, const PrimitiveWord& w, std::size_t cap) {
    if (y.is_empty()) return {};
    return is_receptive(y.fischer(), w.word, cap);
}

BigInt language_size(const LabeledGraph& g, int n) { return language_size(determinize(g), n); }

void for_each_lyndon_word(const LabeledGraph& g, int n, const std::function<void(const Word&)>& visit) {
    lyndon_dfs(determinize(g), n, visit);
}

namespace {

enum Counts : unsigned { kQ = 1, kS = 2, kRec = 4 };

CensusTable census_impl(const ShiftHandle& y, int n_max, std::uint64_t budget, unsigned which, int only_n = 0) {
    CensusTable t;
    t.n_max = n_max;
    if (n_max < 1) throw ValidationError("n_max must be at least 1");
    if (y.is_empty()) {
        for (int n = 1; n <= n_max; ++n) t.rows.push_back({n, 0, 0, 0, std::nullopt});
        return t;
    }
    if (which == kQ && !y.irreducible_presentation()) {
        // Reducible presentations: only point counts, read off the presentation.
        const SubsetAutomaton dfa = determinize(y.presentation());
        check_budget(dfa, n_max, budget);
        for (int n = 1; n <= n_max; ++n) {
            CensusRow row;
            row.n = n;
            if (!only_n || n == only_n)
                lyndon_dfs(dfa, n, [&](const Word& w) {
                    if (presents_periodic(y.presentation(), w)) row.q += static_cast<std::uint64_t>(n);
                });
            t.rows.push_back(row);
        }
        return t;
    }
    const FischerCover& f = y.fischer();
    const SubsetAutomaton dfa = determinize(f.graph);
    check_budget(dfa, n_max, budget);
    for (int n = 1; n <= n_max; ++n) {
        CensusRow row;
        row.n = n;
        if (only_n && n != only_n) {
            t.rows.push_back(row);
            continue;
        }
        lyndon_dfs(dfa, n, [&](const Word& w) {
            if (!contains_periodic(f, w)) return;
            const auto un = static_cast<std::uint64_t>(n);
            row.q += un;
            bool sync = false;
            if (which & (kS | kRec)) {
                sync = periodic_synchronizing(f, w);
                if (sync) row.s += un;
            }
            if (which & kRec) {
                if (sync || is_receptive(f, w).receptive) row.rec += un;
            }
        });
        t.rows.push_back(row);
    }
    return t;
}

} // namespace

CensusTable census(const ShiftHandle& y, int n_max, std::uint64_t budget) {
    return census_impl(y, n_max, budget, kQ | kS | kRec);
}

std::uint64_t count_q(const ShiftHandle& y, int n, std::uint64_t budget) {
    return census_impl(y, n, budget, kQ, n).at(n).q;
}

std::uint64_t count_s(const ShiftHandle& y, int n, std::uint64_t budget) {
    return census_impl(y, n, budget, kQ | kS, n).at(n).s;
}

std::uint64_t count_rec(const ShiftHandle& y, int n, std::uint64_t budget) {
    return census_impl(y, n, budget, kQ | kS | kRec, n).at(n).rec;
}

std::uint64_t count_r(const LabeledGraph& cover, int n, std::uint64_t budget) {
    const SubsetAutomaton dfa = determinize(cover);
    check_budget(dfa, n, budget);
    const size_t V = static_cast<size_t>(cover.vertex_count());
    const int k = cover.alphabet().size();
    std::vector<Relation> step(static_cast<size_t>(k), Relation(V, Row(V)));
    for (const Edge& e : cover.edges()) step[static_cast<size_t>(e.label)][static_cast<size_t>(e.src)].set(static_cast<size_t>(e.dst));

    std::uint64_t total = 0;
    Word w;
    std::vector<Relation> rel;
    Relation id(V, Row(V));
    for (size_t i = 0; i < V; ++i) id[i].set(i);
    rel.push_back(id);
    std::vector<Symbol> next{0};
    while (!next.empty()) {
        Symbol& a = next.back();
        if (static_cast<int>(w.size()) == n || a >= k) {
            if (static_cast<int>(w.size()) == n && is_lyndon(w)) {
                const Relation& r = rel.back();
                for (size_t i = 0; i < V; ++i)
                    if (r[i].test(i)) {
                        total += static_cast<std::uint64_t>(n);
                        break;
                    }
            }
            next.pop_back();
            rel.pop_back();
            if (!w.empty()) w.pop_back();
            continue;
        }
        Symbol cur = a++;
        const Relation& r = rel.back();
        const Relation& s = step[static_cast<size_t>(cur)];
        Relation nr(V, Row(V));
        bool any = false;
        for (size_t i = 0; i < V; ++i) {
            for (size_t j = r[i].find_first(); j != Row::npos; j = r[i].find_next(j)) nr[i] |= s[j];
            any = any || nr[i].any();
        }
        if (!any) continue;
        w.push_back(cur);
        rel.push_back(std::move(nr));
        next.push_back(0);
    }
    return total;
}

CensusTable cover_census(const CoverSpec& pi, int n_max, std::uint64_t budget) {
    CensusTable t = census(pi.codomain(), n_max, budget);
    for (auto& row : t.rows) row.r = count_r(pi.graph, row.n, budget);
    return t;
}

BigInt trace_of_power(const LabeledGraph& g, int d) {
    const size_t V = static_cast<size_t>(g.vertex_count());
    using Matrix = std::vector<std::vector<BigInt>>;
    Matrix a(V, std::vector<BigInt>(V, 0));
    for (const Edge& e : g.edges()) a[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)] += 1;
    Matrix p(V, std::vector<BigInt>(V, 0));
    for (size_t i = 0; i < V; ++i) p[i][i] = 1;
    for (int step = 0; step < d; ++step) {
        Matrix q(V, std::vector<BigInt>(V, 0));
        for (size_t i = 0; i < V; ++i)
            for (size_t l = 0; l < V; ++l) {
                if (p[i][l] == 0) continue;
                for (size_t j = 0; j < V; ++j)
                    if (a[l][j] != 0) q[i][j] += p[i][l] * a[l][j];
            }
        p = std::move(q);
    }
    BigInt tr = 0;
    for (size_t i = 0; i < V; ++i) tr += p[i][i];
    return tr;
}

namespace {

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

} // namespace

std::uint64_t sft_qn_oracle(const LabeledGraph& g, int n) {
    BigInt q = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = moebius(n / d);
        if (mu == 0) continue;
        q += mu * trace_of_power(g, d);
    }
    return q.convert_to<std::uint64_t>();
}

std::uint64_t sft_qn_oracle(const ShiftHandle& x, int n) {
    if (x.is_empty()) return 0;
    if (x.kind() != ShiftKind::SftEdgeShift) throw ValidationError("sft_qn_oracle needs an edge shift (distinct labels)");
    return sft_qn_oracle(x.presentation(), n);
}

BigInt count_repetition_free_paths(const LabeledGraph& g, int v1, int v2, int j, int n, const Word& ubar, std::uint64_t budget) {
    if (ubar.empty()) throw ValidationError("ubar must be non-empty");
    const Word pattern = power(ubar, 2 * n);
    const int k = g.alphabet().size();
    const int P = static_cast<int>(pattern.size());
    // KMP automaton for the forbidden factor.
    std::vector<int> fail(static_cast<size_t>(P + 1), 0);
    for (int i = 1, len = 0; i < P; ++i) {
        while (len > 0 && pattern[static_cast<size_t>(i)] != pattern[static_cast<size_t>(len)]) len = fail[static_cast<size_t>(len)];
        if (pattern[static_cast<size_t>(i)] == pattern[static_cast<size_t>(len)]) ++len;
        fail[static_cast<size_t>(i + 1)] = len;
    }
    auto kmp = [&](int state, Symbol a) {
        if (state == P) state = fail[static_cast<size_t>(P)];
        while (state > 0 && pattern[static_cast<size_t>(state)] != a) state = fail[static_cast<size_t>(state)];
        if (pattern[static_cast<size_t>(state)] == a) ++state;
        return state;
    };
    std::map<std::pair<VertexSet, int>, BigInt> layer;
    layer[{VertexSet{v1}, 0}] = 1;
    for (int step = 0; step < j; ++step) {
        std::map<std::pair<VertexSet, int>, BigInt> next;
        for (const auto& [key, count] : layer)
            for (Symbol a = 0; a < k; ++a) {
                VertexSet t = step_forward(g, key.first, a);
                if (t.empty()) continue;
                int ks = kmp(key.second, a);
                if (ks == P) continue;
                next[{std::move(t), ks}] += count;
            }
        if (next.size() > budget) throw BudgetExceeded("repetition-free path count exceeded its state budget");
        layer = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [key, count] : layer)
        if (std::binary_search(key.first.begin(), key.first.end(), v2)) total += count;
    return total;
}

bool presents_periodic(const LabeledGraph& g, const Word& w) {
    if (w.empty() || g.vertex_count() == 0) return false;
    const size_t V = static_cast<size_t>(g.vertex_count());
    std::vector<std::vector<int>> succ(V);
    for (size_t v = 0; v < V; ++v) succ[v] = run_forward(g, VertexSet{static_cast<int>(v)}, w);
    std::vector<Edge> edges;
    for (size_t v = 0; v < V; ++v)
        for (int t : succ[v]) edges.push_back({static_cast<int>(v), t, 0});
    LabeledGraph rel(Alphabet({"x"}), std::vector<std::string>(V), edges);
    for (const auto& c : scc_decompose(rel))
        if (c.cycle_bearing) return true;
    return false;
}

} // namespace soficlab
