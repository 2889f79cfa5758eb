#include "soficlab/decide.hpp"

#include "soficlab/census.hpp"
#include "soficlab/entropy.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/forge.hpp"
#include "soficlab/io.hpp"
#include "soficlab/period.hpp"
#include "soficlab/presentation.hpp"
#include "soficlab/structure.hpp"
#include "soficlab/tail.hpp"
#include "soficlab/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace soficlab {

using nlohmann::json;

namespace {

json enclosure_json(const EntropyEnclosure& e) {
    return {{"lower", e.lower_d()}, {"upper", e.upper_d()}, {"lower_exact", e.lower.get_str()}, {"upper_exact", e.upper.get_str()}};
}

// What Z's periodic points are compared against.
struct Target {
    std::string bound_kind; // "q", "r" or "rec"
    std::function<std::uint64_t(int)> count;
    int p = 1;
    LabeledGraph comparison;
    EntropyEnclosure h;
};

// Period, counts, entropy and tail, evaluated three-valued.
Verdict3 evaluate_conditions(const ShiftHandle& z, const Target& t, int n_max) {
    const EntropyEnclosure hz = entropy(z);
    const int cmp = compare_entropy(hz, t.h);
    if (cmp > 0)
        return Verdict3::no({{"kind", "ENTROPY"}, {"z", enclosure_json(hz)}, {"target", enclosure_json(t.h)}}, n_max);

    const Verdict3 period = is_p_periodic(z, t.p, 3, n_max);
    if (period.verdict == Verdict::No)
        return Verdict3::no({{"kind", "PERIOD"}, {"p", t.p}, {"period", period.witness}}, n_max);

    json counts = json::array();
    auto check_range = [&](int from, int to) -> std::optional<Verdict3> {
        for (int m = from; m <= to; m += t.p) {
            const std::uint64_t q = count_q(z, m);
            const std::uint64_t b = t.count(m);
            if (q > b)
                return Verdict3::no({{"kind", "COUNT"}, {"m", m}, {"n", m / t.p}, {"q", q}, {"bound", b}, {"bound_kind", t.bound_kind}}, n_max);
            counts.push_back({{"m", m}, {"q", q}, {"bound", b}});
        }
        return std::nullopt;
    };
    if (auto bad = check_range(t.p, n_max)) return *bad;

    if (cmp == 0) {
        Verdict3 v = Verdict3::unknown("equal-entropy branch: entropies not separated and no conjugacy witness", n_max);
        v.certificate = {{"counts", counts}, {"bound_kind", t.bound_kind}};
        return v;
    }
    if (period.verdict == Verdict::Unknown) {
        Verdict3 v = Verdict3::unknown("p-periodicity undecided: " + period.note, n_max);
        v.certificate = {{"counts", counts}, {"bound_kind", t.bound_kind}};
        return v;
    }
    const auto tail = tail_certificate(z, t.comparison, t.p);
    if (!tail) {
        Verdict3 v = Verdict3::unknown("no tail certificate within the crossover budget", n_max);
        v.certificate = {{"counts", counts}, {"bound_kind", t.bound_kind}};
        return v;
    }
    const int first = (n_max / t.p + 1) * t.p;
    if (auto bad = check_range(first, tail->crossover - 1)) return *bad;
    json cert{{"kind", "CONDITIONS"},
              {"p", t.p},
              {"period", period.certificate},
              {"counts", counts},
              {"bound_kind", t.bound_kind},
              {"entropy", {{"z", enclosure_json(hz)}, {"target", enclosure_json(t.h)}}},
              {"tail", tail->record},
              {"crossover", tail->crossover}};
    return Verdict3::yes(cert, std::max(n_max, tail->crossover - 1));
}

Target rec_target(const ShiftHandle& y) {
    Target t;
    t.bound_kind = "rec";
    t.count = [y](int m) { return count_rec(y, m); };
    t.comparison = y.fischer().graph;
    t.p = graph_period(t.comparison);
    t.h = entropy(y);
    return t;
}

Verdict3 s_factorizable_on(const ShiftHandle& z, const ShiftHandle& y, int n_max) {
    if (shifts_equal(z, y) && is_sft(y))
        return Verdict3::yes({{"kind", "CONJUGATE"}, {"method", "equal_sft"}}, n_max);
    return evaluate_conditions(z, rec_target(y), n_max);
}

} // namespace

bool is_sft(const ShiftHandle& y) { return !y.is_empty() && derived_shift(y).is_empty(); }

bool unlabeled_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count() || n > 8) return false;
    auto count = [](const LabeledGraph& g) {
        std::vector<std::vector<int>> m(static_cast<size_t>(g.vertex_count()), std::vector<int>(static_cast<size_t>(g.vertex_count()), 0));
        for (const Edge& e : g.edges()) ++m[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)];
        return m;
    };
    const auto ma = count(a), mb = count(b);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                ok = ma[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
                     mb[static_cast<size_t>(perm[static_cast<size_t>(i)])][static_cast<size_t>(perm[static_cast<size_t>(j)])];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Verdict3 decide_embed_irreducible_sft(const ShiftHandle& z, const ShiftHandle& w, int n_max) {
    if (w.is_empty() || w.kind() != ShiftKind::SftEdgeShift) throw ValidationError("target must be an edge shift");
    if (!is_irreducible(w.presentation())) throw NotIrreducibleError("target edge shift is reducible");
    if (shifts_equal(z, w)) return Verdict3::yes({{"kind", "CONJUGATE"}, {"method", "shifts_equal"}}, n_max);
    // An SFT Z is conjugate to the edge shift of its Fischer graph.
    std::optional<LabeledGraph> zg;
    std::string via;
    if (!z.is_empty() && z.kind() == ShiftKind::SftEdgeShift) {
        zg = z.presentation();
        via = "presentation";
    } else if (!z.is_empty() && z.irreducible_presentation() && is_sft(z)) {
        zg = z.fischer().graph;
        via = "fischer";
    }
    if (zg)
        for (int m = 0; m <= 2; ++m) {
            if (zg->edge_count() > 64) break;
            if (unlabeled_isomorphic(higher_block(*zg, m).graph, w.presentation()))
                return Verdict3::yes({{"kind", "CONJUGATE"}, {"method", "higher_block"}, {"m", m}, {"via", via}}, n_max);
        }
    Target t;
    t.bound_kind = "q";
    const LabeledGraph wg = w.presentation();
    t.count = [wg](int m) { return sft_qn_oracle(wg, m); };
    t.comparison = wg;
    t.p = graph_period(wg);
    t.h = entropy_of_graph(wg);
    return evaluate_conditions(z, t, n_max);
}

Verdict3 decide_embed_through_cover(const ShiftHandle& z, const CoverSpec& pi, int n_max) {
    if (!is_irreducible(pi.graph)) throw NotIrreducibleError("cover graph is reducible");
    const ShiftHandle y = pi.codomain();
    if (shifts_equal(z, y) && injective_on(pi, SubSft::whole(pi.graph)))
        return Verdict3::yes({{"kind", "CONJUGATE"}, {"method", "injective_cover"}}, n_max);
    Target t;
    t.bound_kind = "r";
    const LabeledGraph g = pi.graph;
    t.count = [g](int m) { return count_r(g, m); };
    t.comparison = g;
    t.p = graph_period(g);
    t.h = entropy(y);
    return evaluate_conditions(z, t, n_max);
}

Verdict3 decide_s_factorizable(const ShiftHandle& z, const ShiftHandle& y, int n_max) {
    if (y.is_empty()) throw EmptyShiftError("target shift is empty");
    y.fischer();
    return s_factorizable_on(z, y, n_max);
}

Verdict3 decide_factorizable(const ShiftHandle& z, const ShiftHandle& y, int n_max) {
    if (y.is_empty()) throw EmptyShiftError("target shift is empty");
    y.fischer();
    const ComponentTree tree = component_tree(y);
    std::vector<int> candidates;
    bool fast = false;
    const ShiftHandle& d = tree.components[0].derived;
    if (!d.is_empty() && compare_entropy(entropy(z), entropy(d)) > 0) fast = true;
    for (size_t i = 0; i < tree.components.size(); ++i)
        if (!fast || i == 0) candidates.push_back(static_cast<int>(i));

    json evaluations = json::array();
    bool all_no = true;
    for (int i : candidates) {
        const ComponentNode& c = tree.components[static_cast<size_t>(i)];
        Verdict3 v = s_factorizable_on(z, c.closure, n_max);
        evaluations.push_back({{"index", i}, {"level", c.level}, {"result", v.to_json()}});
        if (v.verdict == Verdict::Yes) {
            json cert{{"kind", "COMPONENT"}, {"index", i}, {"level", c.level}, {"components", evaluations}, {"fast_path", fast}};
            return Verdict3::yes(cert, v.checked_up_to);
        }
        all_no = all_no && v.verdict == Verdict::No;
    }
    if (all_no) return Verdict3::no({{"kind", "ALL_COMPONENTS"}, {"components", evaluations}, {"fast_path", fast}}, n_max);
    Verdict3 v = Verdict3::unknown("no component certified and not all refuted", n_max);
    v.certificate = {{"components", evaluations}, {"fast_path", fast}};
    return v;
}

Verdict3 decide_ai_factorizable(const ShiftHandle& z, const ShiftHandle& y, int n_max) {
    if (y.is_empty()) throw EmptyShiftError("target shift is empty");
    if (compare_entropy(entropy(z), entropy(y)) >= 0)
        throw PreconditionError("AI-factorizability needs a certified entropy gap h(Z) < h(Y)");
    Verdict3 v = decide_s_factorizable(z, y, n_max);
    if (v.verdict != Verdict::Yes) return v;

    // Fischer cover if it already lifts every counted point, else one AI surgery.
    const FischerCover& f = y.fischer();
    std::optional<int> deficit;
    if (v.certificate.contains("counts"))
        for (const auto& row : v.certificate["counts"]) {
            const int m = row["m"];
            if (row["q"].get<std::uint64_t>() > count_r(f.graph, m)) {
                deficit = m;
                break;
            }
        }
    json ai;
    CoverSpec cover{f.graph};
    if (!deficit) {
        ai["construction"] = "fischer";
    } else {
        std::optional<Word> xi;
        for_each_lyndon_word(f.graph, *deficit, [&](const Word& w) {
            if (!xi && is_receptive(f, w).receptive && !presents_periodic(f.graph, w)) xi = w;
        });
        if (xi) {
            cover = ai_sft_cover(y, PrimitiveWord::from(*xi));
            ai["construction"] = "ai_sft_cover";
            ai["xi"] = format_word(y.alphabet(), *xi);
        } else {
            ai["construction"] = "fischer";
        }
    }
    ai["cover"] = presentation_to_json(cover.graph);
    ai["finite_to_one"] = finite_to_one(cover);
    ai["degree"] = ai["finite_to_one"].get<bool>() ? degree(cover) : 0;
    v.certificate["ai_cover"] = ai;
    return v;
}

} // namespace soficlab
