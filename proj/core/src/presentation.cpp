#include "soficlab/presentation.hpp"

#include "soficlab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace soficlab {

namespace {
constexpr size_t kMaxSubsetStates = 2'000'000;
}

int SubsetAutomaton::run(int state, const Word& w) const {
    for (Symbol a : w) {
        if (state < 0) return -1;
        state = next(state, a);
    }
    return state;
}

int FischerCover::run(int v, const Word& w) const {
    for (Symbol a : w) {
        if (v < 0) return -1;
        v = next(v, a);
    }
    return v;
}

SubsetAutomaton determinize(const LabeledGraph& g, VertexSet seed) {
    SubsetAutomaton A;
    A.base = g;
    if (seed.empty()) seed = g.all_vertices();
    std::map<VertexSet, int> index;
    const int k = g.alphabet().size();
    index.emplace(seed, 0);
    A.states.push_back(seed);
    for (size_t i = 0; i < A.states.size(); ++i) {
        std::vector<int> row(static_cast<size_t>(k), -1);
        for (Symbol a = 0; a < k; ++a) {
            VertexSet next = step_forward(g, A.states[i], a);
            if (next.empty()) continue;
            auto [it, fresh] = index.emplace(next, static_cast<int>(A.states.size()));
            if (fresh) {
                if (A.states.size() >= kMaxSubsetStates) throw BudgetExceeded("subset construction exceeded its state budget");
                A.states.push_back(std::move(next));
            }
            row[static_cast<size_t>(a)] = it->second;
        }
        A.transitions.push_back(std::move(row));
    }
    return A;
}

std::vector<int> follower_classes(const std::vector<std::vector<int>>& trans) {
    const size_t n = trans.size();
    std::vector<int> cls(n, 0);
    // Initial split: which symbols are defined.
    {
        std::map<std::vector<char>, int> sig;
        for (size_t s = 0; s < n; ++s) {
            std::vector<char> d;
            for (int t : trans[s]) d.push_back(t >= 0);
            auto [it, fresh] = sig.emplace(d, static_cast<int>(sig.size()));
            cls[s] = it->second;
        }
    }
    size_t count = 0;
    while (true) {
        std::map<std::vector<int>, int> sig;
        std::vector<int> next(n);
        for (size_t s = 0; s < n; ++s) {
            std::vector<int> key{cls[s]};
            for (int t : trans[s]) key.push_back(t >= 0 ? cls[static_cast<size_t>(t)] : -1);
            auto [it, fresh] = sig.emplace(std::move(key), static_cast<int>(sig.size()));
            next[s] = it->second;
        }
        cls = std::move(next);
        if (sig.size() == count) break;
        count = sig.size();
    }
    // Renumber by least member.
    std::vector<int> out(n);
    std::vector<int> order(n, -1);
    int fresh = 0;
    for (size_t s = 0; s < n; ++s) {
        int& o = order[static_cast<size_t>(cls[s])];
        if (o < 0) o = fresh++;
        out[s] = o;
    }
    return out;
}

namespace {

std::string subset_name(const LabeledGraph& g, const VertexSet& s) {
    std::string name = "{";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) name += ",";
        name += g.vertex_name(s[i]);
    }
    return name + "}";
}

} // namespace

FischerCover fischer_cover_of(const LabeledGraph& input) {
    const LabeledGraph g = trim(input);
    const SubsetAutomaton dfa = determinize(g);
    const std::vector<int> cls = follower_classes(dfa.transitions);
    const int nclasses = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
    const int k = g.alphabet().size();

    // Quotient automaton, one representative state per class.
    std::vector<int> rep(static_cast<size_t>(nclasses), -1);
    for (int s = 0; s < dfa.state_count(); ++s)
        if (rep[static_cast<size_t>(cls[static_cast<size_t>(s)])] < 0) rep[static_cast<size_t>(cls[static_cast<size_t>(s)])] = s;
    std::vector<std::vector<int>> qtrans(static_cast<size_t>(nclasses), std::vector<int>(static_cast<size_t>(k), -1));
    std::vector<Edge> qedges;
    for (int c = 0; c < nclasses; ++c)
        for (Symbol a = 0; a < k; ++a) {
            int t = dfa.next(rep[static_cast<size_t>(c)], a);
            if (t >= 0) {
                qtrans[static_cast<size_t>(c)][static_cast<size_t>(a)] = cls[static_cast<size_t>(t)];
                qedges.push_back({c, cls[static_cast<size_t>(t)], a});
            }
        }
    LabeledGraph quotient(g.alphabet(), std::vector<std::string>(static_cast<size_t>(nclasses)), qedges);
    auto comps = scc_decompose(quotient);
    std::vector<int> comp_of(static_cast<size_t>(nclasses));
    for (size_t i = 0; i < comps.size(); ++i)
        for (int v : comps[i].vertices) comp_of[static_cast<size_t>(v)] = static_cast<int>(i);
    std::vector<char> terminal(comps.size(), 1);
    for (const Edge& e : qedges)
        if (comp_of[static_cast<size_t>(e.src)] != comp_of[static_cast<size_t>(e.dst)]) terminal[static_cast<size_t>(comp_of[static_cast<size_t>(e.src)])] = 0;
    std::vector<int> terminals;
    for (size_t i = 0; i < comps.size(); ++i)
        if (terminal[i]) terminals.push_back(static_cast<int>(i));
    if (terminals.size() != 1 || !comps[static_cast<size_t>(terminals[0])].cycle_bearing)
        throw NotIrreducibleError("presentation does not define an irreducible shift");
    const auto& members = comps[static_cast<size_t>(terminals[0])].vertices;

    std::vector<int> local(static_cast<size_t>(nclasses), -1);
    for (size_t i = 0; i < members.size(); ++i) local[static_cast<size_t>(members[i])] = static_cast<int>(i);

    FischerCover F;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    for (int c : members) names.push_back(subset_name(g, dfa.states[static_cast<size_t>(rep[static_cast<size_t>(c)])]));
    F.delta.assign(members.size(), std::vector<int>(static_cast<size_t>(k), -1));
    for (size_t i = 0; i < members.size(); ++i)
        for (Symbol a = 0; a < k; ++a) {
            int t = qtrans[static_cast<size_t>(members[i])][static_cast<size_t>(a)];
            if (t < 0) continue;
            F.delta[i][static_cast<size_t>(a)] = local[static_cast<size_t>(t)];
            edges.push_back({static_cast<int>(i), local[static_cast<size_t>(t)], a});
        }
    F.graph = LabeledGraph(g.alphabet(), std::move(names), std::move(edges));

    if (!is_irreducible(g)) {
        // Every word of the presentation must be readable in the terminal component.
        std::set<std::pair<int, VertexSet>> seen;
        std::queue<std::pair<int, VertexSet>> q;
        q.push({0, F.graph.all_vertices()});
        seen.insert(q.front());
        while (!q.empty()) {
            auto [s, sub] = q.front();
            q.pop();
            for (Symbol a = 0; a < k; ++a) {
                int t = dfa.next(s, a);
                if (t < 0) continue;
                VertexSet nsub = step_forward(F.graph, sub, a);
                if (nsub.empty()) throw NotIrreducibleError("presentation does not define an irreducible shift");
                std::pair<int, VertexSet> key{t, std::move(nsub)};
                if (seen.insert(key).second) q.push(std::move(key));
            }
        }
    }
    return F;
}

const FischerCover& fischer_cover(const ShiftHandle& y) { return y.fischer(); }

FischerCover left_fischer_cover(const ShiftHandle& y) {
    if (y.is_empty()) throw EmptyShiftError("the empty shift has no Fischer cover");
    FischerCover r = fischer_cover_of(reverse(y.presentation()));
    r.graph = reverse(r.graph);
    return r;
}

MagicTest is_magic(const LabeledGraph& g, const Word& w) {
    VertexSet s = run_forward(g, g.all_vertices(), w);
    return {s.size() == 1, !s.empty()};
}

MagicTest is_magic(const FischerCover& f, const Word& w) { return is_magic(f.graph, w); }

MagicTest is_magic(const SubsetAutomaton& a, const Word& w) { return is_magic(a.base, w); }

bool is_synchronizing(const ShiftHandle& y, const Word& w) { return is_magic(y.fischer(), w).magic; }

CanonicalForm canonical_form(const LabeledGraph& g) {
    if (!g.right_resolving()) throw ValidationError("canonical form needs a right-resolving graph");
    CanonicalForm best;
    Alphabet used = used_alphabet(g);
    std::vector<std::string> names = used.symbols();
    std::sort(names.begin(), names.end());
    std::vector<Symbol> order;
    for (const auto& s : names) order.push_back(g.alphabet().index(s));
    const int n = g.vertex_count();
    bool have = false;
    for (int start = 0; start < n; ++start) {
        std::vector<int> pos(static_cast<size_t>(n), -1);
        std::vector<int> queue{start};
        pos[static_cast<size_t>(start)] = 0;
        std::vector<int> code;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (Symbol a : order) {
                int t = -1;
                for (int e : g.out_edges(v))
                    if (g.edge(e).label == a) t = g.edge(e).dst;
                if (t >= 0 && pos[static_cast<size_t>(t)] < 0) {
                    pos[static_cast<size_t>(t)] = static_cast<int>(queue.size());
                    queue.push_back(t);
                }
                code.push_back(t < 0 ? -1 : pos[static_cast<size_t>(t)]);
            }
        }
        if (static_cast<int>(queue.size()) != n) code.push_back(-2 - static_cast<int>(queue.size()));
        if (!have || code < best.code) {
            best.code = std::move(code);
            have = true;
        }
    }
    best.symbols = std::move(names);
    best.code.insert(best.code.begin(), n);
    return best;
}

bool isomorphic_right_resolving(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic_left_resolving(const LabeledGraph& a, const LabeledGraph& b) {
    return isomorphic_right_resolving(reverse(a), reverse(b));
}

bool shifts_equal(const ShiftHandle& a, const ShiftHandle& b) {
    if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
    return isomorphic_right_resolving(a.fischer().graph, b.fischer().graph);
}

namespace {

// BFS over subsets reached from the full vertex set by non-empty words.
template <class Accept>
std::pair<Word, VertexSet> bfs_subsets(const LabeledGraph& g, Accept accept) {
    std::map<VertexSet, std::pair<VertexSet, Symbol>> parent;
    std::queue<VertexSet> q;
    const VertexSet all = g.all_vertices();
    for (Symbol a = 0; a < g.alphabet().size(); ++a) {
        VertexSet t = step_forward(g, all, a);
        if (t.empty() || parent.count(t)) continue;
        parent.emplace(t, std::make_pair(VertexSet{}, a));
        q.push(std::move(t));
    }
    while (!q.empty()) {
        VertexSet s = q.front();
        q.pop();
        if (accept(s)) {
            Word w;
            VertexSet cur = s;
            while (true) {
                const auto& p = parent.at(cur);
                w.push_back(p.second);
                if (p.first.empty()) break;
                cur = p.first;
            }
            std::reverse(w.begin(), w.end());
            return {w, s};
        }
        for (Symbol a = 0; a < g.alphabet().size(); ++a) {
            VertexSet t = step_forward(g, s, a);
            if (t.empty() || parent.count(t)) continue;
            parent.emplace(t, std::make_pair(s, a));
            q.push(std::move(t));
        }
    }
    return {{}, {}};
}

} // namespace

Word magic_word_to(const FischerCover& f, int target) {
    auto [w, s] = bfs_subsets(f.graph, [&](const VertexSet& s) { return s.size() == 1 && s[0] == target; });
    if (s.empty()) throw NotIrreducibleError("no magic word collapses onto vertex " + f.graph.vertex_name(target));
    return w;
}

std::pair<Word, int> shortest_magic_word(const FischerCover& f) {
    auto [w, s] = bfs_subsets(f.graph, [](const VertexSet& s) { return s.size() == 1; });
    if (s.empty()) throw NotIrreducibleError("Fischer cover has no magic word");
    return {w, s[0]};
}

} // namespace soficlab
