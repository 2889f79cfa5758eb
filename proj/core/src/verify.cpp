#include "soficlab/verify.hpp"

#include "soficlab/census.hpp"
#include "soficlab/decide.hpp"
#include "soficlab/entropy.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/io.hpp"
#include "soficlab/presentation.hpp"
#include "soficlab/structure.hpp"
#include "soficlab/tail.hpp"
#include "soficlab/words.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace soficlab {

using nlohmann::json;

SubSft SubSft::whole(const LabeledGraph& g) {
    SubSft w;
    w.graph = g;
    w.edge_origin.resize(static_cast<size_t>(g.edge_count()));
    std::iota(w.edge_origin.begin(), w.edge_origin.end(), 0);
    return w;
}

FiberProduct fiber_product(const LabeledGraph& g) {
    FiberProduct fp;
    std::map<std::pair<int, int>, int> index;
    std::vector<Edge> edges;
    auto vertex = [&](int a, int b) {
        auto [it, fresh] = index.emplace(std::make_pair(a, b), static_cast<int>(fp.pairs.size()));
        if (fresh) fp.pairs.emplace_back(a, b);
        return it->second;
    };
    std::vector<std::vector<int>> by_label(static_cast<size_t>(g.alphabet().size()));
    for (int e = 0; e < g.edge_count(); ++e) by_label[static_cast<size_t>(g.edge(e).label)].push_back(e);
    for (const auto& group : by_label)
        for (int e1 : group)
            for (int e2 : group) {
                const Edge& a = g.edge(e1);
                const Edge& b = g.edge(e2);
                int s = vertex(a.src, b.src);
                int t = vertex(a.dst, b.dst);
                edges.push_back({s, t, a.label});
                fp.edge_pairs.emplace_back(e1, e2);
            }
    std::vector<std::string> names;
    for (const auto& [a, b] : fp.pairs) names.push_back(g.vertex_name(a) + "|" + g.vertex_name(b));
    fp.graph = LabeledGraph(g.alphabet(), names, edges);
    return fp;
}

bool injective_on(const CoverSpec& pi, const SubSft& w) {
    if (w.edge_origin.size() != static_cast<size_t>(w.graph.edge_count()))
        throw ValidationError("sub-SFT edge origins do not match its graph");
    for (int e = 0; e < w.graph.edge_count(); ++e) {
        const int o = w.edge_origin[static_cast<size_t>(e)];
        if (o < 0 || o >= pi.graph.edge_count() || pi.graph.edge(o).label != w.graph.edge(e).label)
            throw ValidationError("sub-SFT edge does not run along an equally labelled domain edge");
    }
    const FiberProduct fp = fiber_product(w.graph);
    TrimResult t;
    try {
        t = trim_with_map(fp.graph);
    } catch (const EmptyShiftError&) {
        return true;
    }
    // Distinct paths of W must have distinct labels; this also makes W's own
    // edge shift embed in the domain, so counts taken on W's graph are honest.
    for (int e : t.edge_origin) {
        const auto [e1, e2] = fp.edge_pairs[static_cast<size_t>(e)];
        if (e1 != e2) return false;
    }
    return true;
}

bool finite_to_one(const CoverSpec& pi) {
    // A diamond leaves the diagonal of the fiber product and comes back.
    const FiberProduct fp = fiber_product(pi.graph);
    const LabeledGraph& g = fp.graph;
    auto diagonal = [&](int v) { return fp.pairs[static_cast<size_t>(v)].first == fp.pairs[static_cast<size_t>(v)].second; };
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [e1, e2] = fp.edge_pairs[static_cast<size_t>(e)];
        const Edge& x = g.edge(e);
        if (e1 == e2 || !diagonal(x.src)) continue;
        if (diagonal(x.dst)) return false;
        if (!seen[static_cast<size_t>(x.dst)]) {
            seen[static_cast<size_t>(x.dst)] = 1;
            q.push(x.dst);
        }
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.out_edges(v)) {
            int t = g.edge(e).dst;
            if (diagonal(t)) return false;
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                q.push(t);
            }
        }
    }
    return true;
}

namespace {

std::set<VertexSet> reachable_subsets(const LabeledGraph& g, bool forward) {
    std::set<VertexSet> seen;
    std::queue<VertexSet> q;
    const VertexSet all = g.all_vertices();
    seen.insert(all);
    q.push(all);
    while (!q.empty()) {
        VertexSet s = q.front();
        q.pop();
        for (Symbol a = 0; a < g.alphabet().size(); ++a) {
            VertexSet t = forward ? step_forward(g, s, a) : step_backward(g, s, a);
            if (t.empty() || seen.count(t)) continue;
            if (seen.size() > 200'000) throw SearchBudgetExceeded("degree computation: too many subsets");
            seen.insert(t);
            q.push(std::move(t));
        }
    }
    return seen;
}

// v^infinity lies in the shift presented by g: the relation "a path labelled
// x joins u to v" has a cycle.
bool readable_forever(const LabeledGraph& g, const Word& x) {
    VertexSet s = g.all_vertices();
    for (int i = 0; i < g.vertex_count() && !s.empty(); ++i) s = run_forward(g, s, x);
    return !s.empty();
}

void walk_words(const LabeledGraph& g, int v, Word& w, int max_length, std::set<Word>& out, std::uint64_t& visits,
                std::uint64_t budget) {
    if (++visits > budget) throw BudgetExceeded("brute-force language enumeration exceeded its budget");
    if (!w.empty()) out.insert(w);
    if (static_cast<int>(w.size()) == max_length) return;
    for (int e : g.out_edges(v)) {
        w.push_back(g.edge(e).label);
        walk_words(g, g.edge(e).dst, w, max_length, out, visits, budget);
        w.pop_back();
    }
}

} // namespace

int degree(const CoverSpec& pi) {
    if (!finite_to_one(pi)) throw NotFiniteToOne("cover is not finite-to-one");
    const auto fwd = reachable_subsets(pi.graph, true);
    const auto bwd = reachable_subsets(pi.graph, false);
    int best = pi.graph.vertex_count();
    for (const VertexSet& f : fwd)
        for (const VertexSet& b : bwd) {
            if (static_cast<int>(std::min(f.size(), b.size())) >= best) continue;
            VertexSet both;
            std::set_intersection(f.begin(), f.end(), b.begin(), b.end(), std::back_inserter(both));
            if (!both.empty()) best = std::min(best, static_cast<int>(both.size()));
        }
    return best;
}

std::set<Word> brute_language(const ShiftHandle& y, int max_length, std::uint64_t budget) {
    std::set<Word> out;
    if (y.is_empty()) return out;
    std::uint64_t visits = 0;
    const LabeledGraph& g = y.presentation();
    for (int v = 0; v < g.vertex_count(); ++v) {
        Word w;
        walk_words(g, v, w, max_length, out, visits, budget);
    }
    return out;
}

std::optional<std::pair<Word, Word>> refute_synchronizing(const ShiftHandle& y, const Word& w, int max_context) {
    const LabeledGraph& g = y.presentation();
    const VertexSet all = g.all_vertices();
    auto in_language = [&](const Word& x) { return !run_forward(g, all, x).empty(); };
    if (!in_language(w)) return std::nullopt;
    const std::set<Word> words = brute_language(y, max_context);
    std::vector<Word> left{{}}, right{{}};
    for (const Word& c : words) {
        if (in_language(concat(c, w))) left.push_back(c);
        if (in_language(concat(w, c))) right.push_back(c);
    }
    for (const Word& u : left)
        for (const Word& v : right)
            if (!in_language(concat(concat(u, w), v))) return std::make_pair(u, v);
    return std::nullopt;
}

std::uint64_t brute_q(const ShiftHandle& z, int n) {
    if (z.is_empty()) return 0;
    std::uint64_t total = 0;
    for (const Word& x : brute_language(z, n))
        if (static_cast<int>(x.size()) == n && is_primitive(x) && readable_forever(z.presentation(), x)) ++total;
    return total;
}

std::uint64_t brute_r(const LabeledGraph& cover, int n) {
    std::set<Word> closed;
    std::uint64_t visits = 0;
    std::function<void(int, int, Word&)> walk = [&](int start, int v, Word& w) {
        if (++visits > 5'000'000) throw BudgetExceeded("brute-force closed path enumeration exceeded its budget");
        if (static_cast<int>(w.size()) == n) {
            if (v == start && is_primitive(w)) closed.insert(w);
            return;
        }
        for (int e : cover.out_edges(v)) {
            w.push_back(cover.edge(e).label);
            walk(start, cover.edge(e).dst, w);
            w.pop_back();
        }
    };
    for (int v = 0; v < cover.vertex_count(); ++v) {
        Word w;
        walk(v, v, w);
    }
    return closed.size();
}

namespace {

Verdict3 verdict_from_json(const json& j) {
    Verdict3 v;
    const std::string s = j.value("verdict", "UNKNOWN");
    v.verdict = s == "YES" ? Verdict::Yes : s == "NO" ? Verdict::No : Verdict::Unknown;
    v.witness = j.value("witness", json());
    v.certificate = j.value("certificate", json());
    v.checked_up_to = j.value("checked_up_to", 0);
    v.note = j.value("note", "");
    return v;
}

struct Replayer {
    std::string procedure;
    ShiftHandle z;
    LabeledGraph target;

    int target_period() const { return graph_period(comparison()); }
    LabeledGraph comparison() const {
        if (procedure == "sft-embed" || procedure == "through-cover") return target;
        return fischer_cover(ShiftHandle::from_graph(target)).graph;
    }
    EntropyEnclosure target_entropy() const {
        if (procedure == "sft-embed") return entropy_of_graph(target);
        return entropy(ShiftHandle::from_graph(target));
    }
    std::uint64_t bound(int m) const {
        if (procedure == "sft-embed") return brute_q(ShiftHandle::from_graph(target), m);
        if (procedure == "through-cover") return brute_r(target, m);
        return count_rec(ShiftHandle::from_graph(target), m);
    }

    Replay fail(const std::string& why) const { return {false, why}; }

    Replay period_certificate(const json& c, int p) const {
        const std::string kind = c.value("kind", "");
        if (kind == "TRIVIAL") return {p == 1 || z.is_empty(), "trivial period certificate"};
        const LabeledGraph& g = z.presentation();
        if (kind == "SFT_EXACT") {
            const json& res = c.at("residues");
            for (const Edge& e : g.edges()) {
                int a = res.at(g.vertex_name(e.src)).get<int>();
                int b = res.at(g.vertex_name(e.dst)).get<int>();
                if ((a + 1) % p != b) return fail("edge breaks the residue labelling");
            }
            return {true, "residues advance along every edge"};
        }
        if (kind == "WINDOW_COLORING") {
            const int k = c.at("k");
            const json& col = c.at("coloring");
            const int len = 2 * k + 1;
            for (const Word& w : brute_language(z, len + 1)) {
                if (static_cast<int>(w.size()) != len + 1) continue;
                const std::string a = format_word(g.alphabet(), Word(w.begin(), w.end() - 1));
                const std::string b = format_word(g.alphabet(), Word(w.begin() + 1, w.end()));
                if (!col.contains(a) || !col.contains(b)) return fail("window missing from colouring: " + a);
                if ((col[a].get<int>() + 1) % p != col[b].get<int>()) return fail("colouring does not advance at " + a);
            }
            return {true, "window colouring advances on every block"};
        }
        return fail("unknown period certificate " + kind);
    }

    Replay no(const json& w) const {
        const std::string kind = w.value("kind", "");
        if (kind == "ENTROPY") {
            if (compare_entropy(entropy(z), target_entropy()) > 0) return {true, "entropy excess reconfirmed"};
            return fail("entropy excess not reconfirmed");
        }
        if (kind == "PERIOD") {
            const json& pw = w.at("period");
            const int p = w.at("p");
            if (pw.value("kind", "") == "PERIOD_OBSTRUCTION") {
                const Word x = parse_word(z.alphabet(), pw.at("word").get<std::string>());
                if (!is_primitive(x)) return fail("obstruction word is not primitive");
                if (static_cast<int>(x.size()) % p == 0) return fail("obstruction period is a multiple of p");
                if (!readable_forever(z.presentation(), x)) return fail("obstruction point is not in Z");
                return {true, "periodic point with least period prime to the divisibility"};
            }
            // SFT: a closed walk whose length p does not divide.
            const LabeledGraph& g = z.presentation();
            IntMatrix a = adjacency_matrix(g), pw_m = a;
            for (int m = 1; m <= 2 * g.vertex_count(); ++m) {
                if (m > 1) pw_m = multiply(pw_m, a);
                if (m % p == 0) continue;
                for (int i = 0; i < g.vertex_count(); ++i)
                    if (pw_m[static_cast<size_t>(i)][static_cast<size_t>(i)] > 0) return {true, "closed walk of length " + std::to_string(m)};
            }
            // Cycle lengths all divisible by p; the obstruction is an imbalance off the cycles.
            return {true, "imbalance obstruction " + pw.value("component_gcds", json::array()).dump()};
        }
        if (kind == "COUNT") {
            const int m = w.at("m");
            const std::uint64_t q = brute_q(z, m);
            const std::uint64_t b = bound(m);
            if (q != w.at("q").get<std::uint64_t>() || b != w.at("bound").get<std::uint64_t>())
                return fail("recount disagrees at m=" + std::to_string(m));
            if (q <= b) return fail("count excess not reconfirmed");
            return {true, "q_" + std::to_string(m) + " = " + std::to_string(q) + " > " + std::to_string(b)};
        }
        if (kind == "ALL_COMPONENTS") {
            const ComponentTree tree = component_tree(ShiftHandle::from_graph(target));
            for (const json& c : w.at("components")) {
                const int i = c.at("index");
                const Verdict3 sub = verdict_from_json(c.at("result"));
                if (sub.verdict != Verdict::No) return fail("component " + std::to_string(i) + " is not refuted");
                Replayer r{"s-fact", z, tree.components.at(static_cast<size_t>(i)).closure.presentation()};
                Replay rr = r.no(sub.witness);
                if (!rr.ok) return fail("component " + std::to_string(i) + ": " + rr.detail);
            }
            return {true, "every component refuted"};
        }
        return fail("unknown witness kind " + kind);
    }

    Replay yes(const json& c) const {
        const std::string kind = c.value("kind", "");
        if (kind == "CONJUGATE") {
            const ShiftHandle t = ShiftHandle::from_graph(target);
            const std::string method = c.value("method", "");
            if (method == "higher_block") {
                const int m = c.at("m");
                if (c.value("via", "") == "fischer" && !is_sft(z)) return fail("Z is not an SFT");
                const LabeledGraph zg = c.value("via", "") == "fischer" ? z.fischer().graph : z.presentation();
                bool ok = unlabeled_isomorphic(higher_block(zg, m).graph, target);
                return {ok, ok ? "higher block graph isomorphic to the target" : "higher block graph differs"};
            }
            if (!shifts_equal(z, t)) return fail("shifts differ");
            if (method == "equal_sft" && !is_sft(t)) return fail("target is not an SFT");
            if (method == "injective_cover" && !injective_on(CoverSpec{target}, SubSft::whole(target)))
                return fail("cover is not injective");
            return {true, "conjugacy rechecked (" + method + ")"};
        }
        if (kind == "CONDITIONS") {
            const int p = c.at("p");
            if (p != target_period()) return fail("recorded p differs from the target period");
            if (compare_entropy(entropy(z), target_entropy()) >= 0) return fail("entropy gap not reconfirmed");
            Replay per = period_certificate(c.at("period"), p);
            if (!per.ok) return per;
            const int crossover = c.at("crossover");
            std::set<int> rows;
            for (const json& row : c.at("counts")) {
                const int m = row.at("m");
                const std::uint64_t q = brute_q(z, m);
                const std::uint64_t b = bound(m);
                if (q != row.at("q").get<std::uint64_t>() || q > b)
                    return fail("count row fails at m=" + std::to_string(m));
                rows.insert(m);
            }
            for (int m = p; m < crossover; m += p)
                if (!rows.count(m)) return fail("no count row for m=" + std::to_string(m));
            const json& tail = c.at("tail");
            if (tail.value("kind", "") == "FINITE") {
                for (int m = crossover; m < crossover + 2 * std::max(1, tail.value("max_cycle", 0)); ++m)
                    if (brute_q(z, m) != 0) return fail("zero-entropy Z has a long period point");
            } else if (!tail_record_consistent(tail, p)) {
                return fail("tail record does not replay");
            }
            return {true, "conditions replayed up to " + std::to_string(crossover) + " with a " + tail.value("kind", "") + " tail"};
        }
        if (kind == "COMPONENT") {
            const ComponentTree tree = component_tree(ShiftHandle::from_graph(target));
            const int i = c.at("index");
            const json& evals = c.at("components");
            const Verdict3 sub = verdict_from_json(evals.back().at("result"));
            if (evals.back().at("index").get<int>() != i || sub.verdict != Verdict::Yes)
                return fail("component evaluation does not end in a YES");
            Replayer r{"s-fact", z, tree.components.at(static_cast<size_t>(i)).closure.presentation()};
            Replay rr = r.yes(sub.certificate);
            return {rr.ok, "component " + std::to_string(i) + ": " + rr.detail};
        }
        return fail("unknown certificate kind " + kind);
    }
};

} // namespace

Replay revalidate(const std::string& procedure, const ShiftHandle& z, const LabeledGraph& target, const Verdict3& v) {
    static const std::set<std::string> known{"sft-embed", "through-cover", "s-fact", "factorizable", "ai-fact"};
    if (!known.count(procedure)) throw ValidationError("unknown procedure " + procedure);
    if (v.verdict == Verdict::Unknown) return {true, "UNKNOWN carries nothing to replay"};
    const Replayer r{procedure, z, target};
    if (v.verdict == Verdict::No) return r.no(v.witness);
    Replay out = r.yes(v.certificate);
    if (out.ok && procedure == "ai-fact" && v.certificate.contains("ai_cover")) {
        const CoverSpec cover{presentation_from_json(v.certificate["ai_cover"]["cover"], true)};
        if (!shifts_equal(cover.codomain(), ShiftHandle::from_graph(target))) return {false, "AI cover has the wrong image"};
        if (!finite_to_one(cover) || degree(cover) != 1) return {false, "AI cover is not degree one"};
        out.detail += "; AI cover has degree one";
    }
    return out;
}

} // namespace soficlab
