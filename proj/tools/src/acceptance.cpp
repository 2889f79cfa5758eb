#include "acceptance.hpp"

#include <soficlab/soficlab.hpp>

#include <chrono>
#include <fstream>
#include <cmath>
#include <sstream>

namespace soficlab::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

ShiftHandle fixture_shift(const std::string& dir, const std::string& name) {
    return ShiftHandle::from_graph(load_fixture(dir, name));
}

Word word(const ShiftHandle& y, const std::string& text) { return parse_word(y.alphabet(), text); }

CriterionResult fischer_fidelity(const std::string& dir) {
    const auto start = Clock::now();
    const LabeledGraph g1 = load_fixture(dir, "g1");
    const LabeledGraph g2 = load_fixture(dir, "g2");
    // Read the same vertex-labelled graph with source labels: a presentation
    // of the same shift that is not right-resolving.
    nlohmann::json doc = nlohmann::json::parse(std::ifstream(dir + "/g1.json"));
    doc["label_convention"] = "source";
    const LabeledGraph g1_source = presentation_from_json(doc);
    const ShiftHandle y = ShiftHandle::from_graph(g1_source);

    const bool right = isomorphic_right_resolving(fischer_cover_of(g1_source).graph, g1) &&
                       isomorphic_right_resolving(fischer_cover_of(g1).graph, g1);
    const bool left = isomorphic_left_resolving(left_fischer_cover(y).graph, g2);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream d;
    d << "right=" << right << " left=" << left << " time=" << secs << "s";
    return {1, "Fischer idempotence and example fidelity", right && left && secs < kFischerTimeLimit, d.str()};
}

CriterionResult periods(const std::string& dir) {
    const PeriodReport ex = period_of(fixture_shift(dir, "ex_5_4"));
    const PeriodReport even = period_of(fixture_shift(dir, "even"));
    const PeriodReport aab = period_of(fixture_shift(dir, "aab"));
    std::ostringstream d;
    d << "ex_5_4 per=" << ex.per << " even per=" << even.per << " aab per=" << aab.per << " q_gcd=" << aab.q_gcd;
    return {2, "Periods", ex.per == 2 && even.per == 1 && aab.per == 2 && aab.q_gcd == 1, d.str()};
}

CriterionResult receptivity(const std::string& dir) {
    const ShiftHandle even = fixture_shift(dir, "even");
    const ShiftHandle y = fixture_shift(dir, "g1");
    const bool one = is_receptive(even, PrimitiveWord::from(word(even, "1"))).receptive;
    const bool zero = is_receptive(even, PrimitiveWord::from(word(even, "0"))).receptive;
    const ReceptivityResult a = is_receptive(y, PrimitiveWord::from(word(y, "a")));
    bool replay = a.receptive && a.witness;
    if (replay) {
        const FischerCover& f = y.fischer();
        replay = is_magic(f, a.witness->m1).magic && is_magic(f, a.witness->m2).magic;
        const LabeledGraph& g = y.presentation();
        for (int k = 1; k <= 10 && replay; ++k) {
            const Word w = concat(concat(a.witness->m1, power(word(y, "a"), k)), a.witness->m2);
            replay = !run_forward(g, g.all_vertices(), w).empty();
        }
    }
    std::ostringstream d;
    d << "even/1=" << one << " even/0=" << zero << " Y/a=" << a.receptive << " replay=" << replay;
    return {3, "Receptivity", one && !zero && a.receptive && replay, d.str()};
}

CriterionResult census_chain(const std::string& dir) {
    int checked = 0;
    for (const std::string& name : corpus_names()) {
        const ShiftHandle y = fixture_shift(dir, name);
        const CensusTable t = census(y, 8);
        const LabeledGraph& fg = y.fischer().graph;
        for (const CensusRow& row : t.rows) {
            const std::uint64_t r = count_r(fg, row.n);
            ++checked;
            if (!(row.s <= row.rec && row.rec <= row.q && row.s <= r))
                return {4, "Census chain", false, name + " fails at n=" + std::to_string(row.n)};
        }
    }
    return {4, "Census chain", true, std::to_string(checked) + " rows over " + std::to_string(corpus_names().size()) + " shifts"};
}

CriterionResult growth(const std::string& dir) {
    const ShiftHandle even = fixture_shift(dir, "even");
    const std::uint64_t r = count_r(even.fischer().graph, 18);
    const EntropyEnclosure h = entropy(even);
    const double rate = std::log(static_cast<double>(r)) / 18.0;
    std::ostringstream d;
    d << "r_18=" << r << " rate=" << rate << " h_mid=" << h.midpoint();
    return {5, "Growth rate of r_n", std::abs(rate - h.midpoint()) <= kGrowthTolerance, d.str()};
}

CriterionResult derived_structure(const std::string& dir) {
    const ShiftHandle even = fixture_shift(dir, "even");
    const ShiftHandle point0 = fixture_shift(dir, "point0");
    const ShiftHandle d = derived_shift(even);
    const bool derived_ok = !d.is_empty() && shifts_equal(d, point0);
    const ComponentTree tree = component_tree(even);
    bool tree_ok = tree.depth == 1 && tree.components.size() == 2 && shifts_equal(tree.components[0].closure, even) &&
                   shifts_equal(tree.components[1].closure, point0);
    int located = 0;
    bool unique = true;
    for (int n = 1; n <= 6; ++n)
        for_each_lyndon_word(even.presentation(), n, [&](const Word& w) {
            if (!presents_periodic(even.presentation(), w)) return;
            std::vector<std::string> names;
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i) {
                names.push_back("c" + std::to_string(i));
                edges.push_back({i, (i + 1) % n, w[static_cast<size_t>(i)]});
            }
            const ShiftHandle orbit = ShiftHandle::from_graph(LabeledGraph(even.alphabet(), names, edges));
            int hits = 0, where = -1;
            for (size_t c = 0; c < tree.components.size(); ++c) {
                const ComponentNode& node = tree.components[c];
                if (!language_contained(orbit, node.closure)) continue;
                if (!node.derived.is_empty() && language_contained(orbit, node.derived)) continue;
                ++hits;
                where = static_cast<int>(c);
            }
            unique = unique && hits == 1 && locate_component(orbit, tree) == where;
            ++located;
        });
    std::ostringstream s;
    s << "derived={0^inf}:" << derived_ok << " depth=" << tree.depth << " components=" << tree.components.size()
      << " points=" << located << " unique=" << unique;
    return {6, "Derived structure", derived_ok && tree_ok && unique, s.str()};
}

CriterionResult final_example(const std::string& dir) {
    const ShiftHandle z = fixture_shift(dir, "point0");
    const ShiftHandle y = fixture_shift(dir, "golden_even");
    const Verdict3 s = decide_s_factorizable(z, y);
    const Verdict3 f = decide_factorizable(z, y);
    const bool s_ok = s.verdict == Verdict::No && s.witness.value("kind", "") == "COUNT" && s.witness.value("n", 0) == 1 &&
                      s.witness.value("q", 0) == 1 && s.witness.value("bound", -1) == 0;
    const bool f_ok = f.verdict == Verdict::Yes && f.certificate.value("kind", "") == "COMPONENT" && f.certificate.value("level", -1) == 1;
    std::ostringstream d;
    d << "s-fact=" << to_string(s.verdict) << " factorizable=" << to_string(f.verdict)
      << " level=" << f.certificate.value("level", -1);
    return {7, "Decision on the final example", s_ok && f_ok, d.str()};
}

CriterionResult receptive_cover(const std::string& dir) {
    const ShiftHandle even = fixture_shift(dir, "even");
    const CoverSpec pi{even.fischer().graph};
    const ForgeResult r = forge_receptive_cover(pi, PrimitiveWord::from(word(even, "1")));
    const bool image = shifts_equal(ShiftHandle::from_graph(r.graph), even);
    const std::uint64_t r1 = count_r(r.graph, 1);
    const bool period = graph_period(r.graph) == graph_period(pi.graph);
    std::ostringstream d;
    d << "image_equal=" << image << " r_1=" << r1 << " period_kept=" << period;
    return {8, "Receptive cover surgery", image && r1 >= 1 && period, d.str()};
}

CriterionResult ai_cover(const std::string& dir) {
    const ShiftHandle y = fixture_shift(dir, "g1");
    const PrimitiveWord a = PrimitiveWord::from(word(y, "a"));
    const ForgeResult hat = forge_ai_cover(y, a);
    const CoverSpec cover = ai_sft_cover(y, a);
    const bool irreducible = is_irreducible(cover.graph);
    const int deg = degree(cover);
    bool fixed = false;
    for (const Edge& e : cover.graph.edges()) fixed = fixed || (e.src == e.dst && e.label == a.word[0]);
    const bool unique = hat.validation.value("unique_lifts_up_to_5", false);
    const bool image = shifts_equal(cover.codomain(), y);
    std::ostringstream d;
    d << "irreducible=" << irreducible << " degree=" << deg << " fixed_lift=" << fixed << " unique_lifts=" << unique
      << " image_equal=" << image << " vertices=" << cover.graph.vertex_count();
    return {9, "Almost invertible cover", irreducible && deg == 1 && fixed && unique && image, d.str()};
}

CriterionResult injective_sub(const std::string& dir) {
    const ShiftHandle even = fixture_shift(dir, "even");
    const CoverSpec pi{even.fischer().graph};
    const mpq_class eps(3, 10);
    const ForgeResult w = extract_injective_sub(pi, eps);
    const bool injective = injective_on(pi, w.sub());
    const EntropyEnclosure hw = entropy_of_graph(w.graph);
    const EntropyEnclosure hy = entropy(even);
    const bool large = hw.lower_d() >= hy.upper_d() - 0.3 - kEnclosureSlack;
    std::ostringstream d;
    d << "injective=" << injective << " h(W)>=" << hw.lower_d() << " h(even)<=" << hy.upper_d()
      << " vertices=" << w.graph.vertex_count();
    return {10, "Injective sub-SFT of large entropy", injective && large, d.str()};
}

CriterionResult oracle_equivalence(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 50; ++i) {
        const LabeledGraph g = random_irreducible_graph(rng, 6, 4, 0, true);
        const ShiftHandle x = ShiftHandle::from_graph(g);
        for (int n = 1; n <= 12; ++n)
            if (sft_qn_oracle(g, n) != count_q(x, n))
                return {11, "Oracle equivalence", false, "graph " + std::to_string(i) + " differs at n=" + std::to_string(n)};
    }
    return {11, "Oracle equivalence", true, "50 graphs, n<=12"};
}

CriterionResult soundness(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    int yes = 0, no = 0, unknown = 0, errors = 0;
    std::string bad;
    const char* procedures[] = {"s-fact", "factorizable", "through-cover", "sft-embed", "ai-fact"};
    for (int i = 0; i < 25; ++i) {
        const std::string proc = procedures[i % 5];
        const bool edge_target = proc == "sft-embed";
        const LabeledGraph tg = random_irreducible_graph(rng, edge_target ? 3 : 4, 3, 2, edge_target);
        const LabeledGraph zg = random_irreducible_graph(rng, 3, static_cast<int>(rng() % 2), 2, false);
        try {
            const ShiftHandle z = ShiftHandle::from_graph(edge_target ? zg : over_alphabet(zg, tg.alphabet()));
            const ShiftHandle t = ShiftHandle::from_graph(tg);
            Verdict3 v;
            if (proc == "s-fact") v = decide_s_factorizable(z, t);
            else if (proc == "factorizable") v = decide_factorizable(z, t);
            else if (proc == "through-cover") v = decide_embed_through_cover(z, CoverSpec::from_graph(tg));
            else if (proc == "sft-embed") v = decide_embed_irreducible_sft(z, t);
            else v = decide_ai_factorizable(z, t);
            if (v.verdict == Verdict::Unknown) {
                ++unknown;
                continue;
            }
            (v.verdict == Verdict::Yes ? yes : no) += 1;
            const Replay r = revalidate(proc, z, tg, v);
            if (!r.ok && bad.empty()) bad = "pair " + std::to_string(i) + " (" + proc + "): " + r.detail;
        } catch (const PreconditionError&) {
            ++unknown;
        } catch (const Error& e) {
            ++errors;
            if (bad.empty()) bad = "pair " + std::to_string(i) + " (" + proc + ") raised " + e.kind() + ": " + e.what();
        }
    }
    std::ostringstream d;
    d << "YES=" << yes << " NO=" << no << " UNKNOWN=" << unknown << " errors=" << errors;
    if (!bad.empty()) d << "; " << bad;
    return {12, "Verdict soundness audit", bad.empty(), d.str()};
}

} // namespace

const std::vector<std::string>& corpus_names() {
    static const std::vector<std::string> names{"even", "golden", "golden_edge", "golden_even", "ex_5_4", "aab", "g1",
                                                "g2", "point0", "orbit01", "full2", "two_cycle00", "cycle3_edge"};
    return names;
}

LabeledGraph load_fixture(const std::string& corpus_dir, const std::string& name) {
    return load_presentation(corpus_dir + "/" + name + ".json");
}

LabeledGraph random_irreducible_graph(std::mt19937_64& rng, int max_vertices, int extra_edges, int alphabet,
                                      bool distinct_labels) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices));
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    // At most one extra edge per vertex keeps |B_n| within the census budget.
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(extra_edges, n) + 1));
    for (int i = 0; i < extra; ++i)
        arcs.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)), static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
    std::vector<std::string> names, symbols;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<Edge> edges;
    if (distinct_labels) {
        for (size_t e = 0; e < arcs.size(); ++e) symbols.push_back("e" + std::to_string(e));
        for (size_t e = 0; e < arcs.size(); ++e) edges.push_back({arcs[e].first, arcs[e].second, static_cast<Symbol>(e)});
    } else {
        for (int a = 0; a < alphabet; ++a) symbols.push_back(std::to_string(a));
        for (const auto& [s, t] : arcs) edges.push_back({s, t, static_cast<Symbol>(rng() % static_cast<std::uint64_t>(alphabet))});
    }
    return LabeledGraph(Alphabet(symbols), names, edges);
}

CriterionResult run_one(int id, const std::string& dir, std::uint64_t seed) {
    const auto start = Clock::now();
    CriterionResult r;
    try {
        switch (id) {
        case 1: r = fischer_fidelity(dir); break;
        case 2: r = periods(dir); break;
        case 3: r = receptivity(dir); break;
        case 4: r = census_chain(dir); break;
        case 5: r = growth(dir); break;
        case 6: r = derived_structure(dir); break;
        case 7: r = final_example(dir); break;
        case 8: r = receptive_cover(dir); break;
        case 9: r = ai_cover(dir); break;
        case 10: r = injective_sub(dir); break;
        case 11: r = oracle_equivalence(seed); break;
        case 12: r = soundness(seed); break;
        default: throw ValidationError("no criterion " + std::to_string(id));
        }
    } catch (const Error& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string(e.kind()) + ": " + e.what()};
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> run_all(const std::string& dir, std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 12; ++id) out.push_back(run_one(id, dir, seed));
    return out;
}

} // namespace soficlab::acceptance
