#include "soficlab/census.hpp"
#include "soficlab/entropy.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/forge.hpp"
#include "soficlab/io.hpp"
#include "soficlab/presentation.hpp"

#include <map>
#include <queue>

namespace soficlab {

using nlohmann::json;

namespace {

// Positions of a matcher for Sigma* u w^+ v; a state is the set of live
// positions. Position 0 is the Sigma* loop and always live.
struct PatternMatcher {
    Word u, w, v;
    int after_u() const { return static_cast<int>(u.size()); }
    int block_end() const { return after_u() + static_cast<int>(w.size()); }
    int final_pos() const { return block_end() + static_cast<int>(v.size()); }

    std::vector<int> step(const std::vector<int>& live, Symbol a) const {
        std::vector<int> out{0};
        const int U = after_u(), B = block_end();
        auto push = [&](int x) {
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        };
        for (int x : live) {
            if (x < U) {
                if (u[static_cast<size_t>(x)] == a) push(x + 1);
            } else if (x < B) {
                if (w[static_cast<size_t>(x - U)] == a) push(x + 1);
            }
            if (x == B) {
                if (w[0] == a) push(U + 1);
                if (v[0] == a) push(B + 1);
            } else if (x > B && x < final_pos()) {
                if (v[static_cast<size_t>(x - B)] == a) push(x + 1);
            }
        }
        // U itself moves into the first block on w_0.
        std::sort(out.begin(), out.end());
        return out;
    }
    bool done(const std::vector<int>& live) const {
        return std::find(live.begin(), live.end(), final_pos()) != live.end();
    }
};

// Mode 0: plain symbols (f = Fischer vertex). Mode 1: i symbols of the current
// hat block read (1..n). Mode 2: j symbols of v read after the hats.
struct HatState {
    int mode = 0;
    int index = 0;
    std::vector<int> live;
    bool operator<(const HatState& o) const {
        return std::tie(mode, index, live) < std::tie(o.mode, o.index, o.live);
    }
};

struct HatAttempt {
    Word u, v;
};

LabeledGraph build_hatted(const FischerCover& f, const Word& w, const Word& u, const Word& v, const Alphabet& hat_alpha,
                          int collapse_after_v) {
    const PatternMatcher pm{u, w, v};
    const int n = static_cast<int>(w.size());
    const int k = f.graph.alphabet().size();
    std::map<HatState, int> index;
    std::vector<HatState> states;
    std::vector<Edge> edges;
    std::queue<int> q;
    auto id = [&](const HatState& s) {
        auto [it, fresh] = index.emplace(s, static_cast<int>(states.size()));
        if (fresh) {
            states.push_back(s);
            q.push(it->second);
            if (states.size() > 400'000) throw SearchBudgetExceeded("hatted presentation too large");
        }
        return it->second;
    };
    for (int x = 0; x < f.graph.vertex_count(); ++x) id({0, x, {0}});
    auto strip = [&](std::vector<int> live) {
        live.erase(std::remove(live.begin(), live.end(), pm.final_pos()), live.end());
        return live;
    };
    while (!q.empty()) {
        const int sid = q.front();
        q.pop();
        const HatState s = states[static_cast<size_t>(sid)];
        if (s.mode == 0) {
            for (Symbol a = 0; a < k; ++a) {
                int t = f.next(s.index, a);
                if (t < 0) continue;
                auto live = pm.step(s.live, a);
                if (pm.done(live)) continue; // unhatted u w^k v
                edges.push_back({sid, id({0, t, live}), a});
            }
            if (std::find(s.live.begin(), s.live.end(), pm.after_u()) != s.live.end()) {
                auto live = pm.step(s.live, w[0]);
                if (!pm.done(live)) edges.push_back({sid, id({1, 1, live}), k});
            }
        } else if (s.mode == 1) {
            if (s.index < n) {
                auto live = pm.step(s.live, w[static_cast<size_t>(s.index)]);
                if (!pm.done(live)) edges.push_back({sid, id({1, s.index + 1, live}), k + s.index});
            } else {
                auto live = pm.step(s.live, w[0]);
                if (!pm.done(live)) edges.push_back({sid, id({1, 1, live}), k});
                live = pm.step(s.live, v[0]);
                if (v.size() == 1) {
                    if (pm.done(live)) edges.push_back({sid, id({0, collapse_after_v, strip(live)}), v[0]});
                } else if (!pm.done(live)) {
                    edges.push_back({sid, id({2, 1, live}), v[0]});
                }
            }
        } else {
            const Symbol a = v[static_cast<size_t>(s.index)];
            auto live = pm.step(s.live, a);
            if (s.index + 1 == static_cast<int>(v.size())) {
                if (pm.done(live)) edges.push_back({sid, id({0, collapse_after_v, strip(live)}), a});
            } else if (!pm.done(live)) {
                edges.push_back({sid, id({2, s.index + 1, live}), a});
            }
        }
    }
    std::vector<std::string> names;
    for (const auto& s : states) {
        std::string name = std::string(s.mode == 0 ? "Y" : s.mode == 1 ? "H" : "X") + std::to_string(s.index) + ":";
        for (size_t i = 0; i < s.live.size(); ++i) name += (i ? "," : "") + std::to_string(s.live[i]);
        names.push_back(name);
    }
    return trim(LabeledGraph(hat_alpha, names, edges));
}

// Prefix/suffix extensions of the receptivity words, shortest first.
std::vector<HatAttempt> attempts(const FischerCover& f, const Word& m1, const Word& m2) {
    std::vector<HatAttempt> out{{m1, m2}};
    const int k = f.graph.alphabet().size();
    const VertexSet all = f.graph.all_vertices();
    std::vector<Word> us{m1}, vs{m2};
    for (int round = 0; round < 2; ++round) {
        std::vector<Word> nu, nv;
        for (const Word& u : us)
            for (Symbol a = 0; a < k; ++a) {
                Word x = concat(Word{a}, u);
                if (!run_forward(f.graph, all, x).empty()) nu.push_back(x);
            }
        for (const Word& v : vs)
            for (Symbol a = 0; a < k; ++a) {
                Word x = concat(v, Word{a});
                if (!run_forward(f.graph, all, x).empty()) nv.push_back(x);
            }
        for (const Word& u : nu) out.push_back({u, m2});
        for (const Word& v : nv) out.push_back({m1, v});
        for (const Word& u : nu)
            for (const Word& v : nv) out.push_back({u, v});
        us = std::move(nu);
        vs = std::move(nv);
    }
    return out;
}

} // namespace

ForgeResult forge_ai_cover(const ShiftHandle& y, const PrimitiveWord& xi) {
    const FischerCover& f = y.fischer();
    if (entropy(y).lower <= 0) throw ZeroEntropyError("the AI cover construction needs positive entropy");
    const ReceptivityResult rr = is_receptive(f, xi.word);
    if (!rr.receptive) throw NotReceptiveError("xi is not receptive");
    const Word& w = xi.word;
    const int n = xi.length();
    const int k = y.alphabet().size();

    Alphabet hat_alpha = y.alphabet();
    std::vector<Symbol> collapse;
    for (Symbol a = 0; a < k; ++a) collapse.push_back(a);
    Word hat_word;
    for (int i = 0; i < n; ++i) {
        hat_word.push_back(hat_alpha.add(std::string(kReservedPrefix) + "w" + std::to_string(i)));
        collapse.push_back(w[static_cast<size_t>(i)]);
    }

    json last;
    for (const HatAttempt& at : attempts(f, rr.witness->m1, rr.witness->m2)) {
        const VertexSet after_v = run_forward(f.graph, f.graph.all_vertices(), at.v);
        if (after_v.size() != 1) continue;
        LabeledGraph hat;
        try {
            hat = build_hatted(f, w, at.u, at.v, hat_alpha, after_v[0]);
        } catch (const EmptyShiftError&) {
            continue;
        }
        json val;
        const ShiftHandle yhat = ShiftHandle::from_graph(hat);
        val["image_equal"] = shifts_equal(ShiftHandle::from_graph(relabel(hat, y.alphabet(), collapse)), y);
        bool sync = false, degree_one = false, unique = true;
        try {
            const FischerCover& fh = yhat.fischer();
            sync = periodic_synchronizing(fh, hat_word);
            CoverSpec sft{relabel(fh.graph, y.alphabet(), collapse)};
            degree_one = finite_to_one(sft) && degree(sft) == 1;
        } catch (const NotIrreducibleError&) {
            val["irreducible"] = false;
        }
        val["hat_point_synchronizing"] = sync;
        val["degree_one"] = degree_one;
        // Other periodic points up to length 5 have exactly one hatted lift.
        json multi = json::array();
        const Word canon = least_rotation(w);
        for (int m = 1; m <= 5 && unique; ++m)
            for_each_lyndon_word(f.graph, m, [&](const Word& x) {
                if (!unique || x == canon || !contains_periodic(f, x)) return;
                std::vector<Word> lifts{{}};
                for (Symbol a : x) {
                    std::vector<Word> next;
                    for (const Word& l : lifts) {
                        next.push_back(concat(l, Word{a}));
                        for (int i = 0; i < n; ++i)
                            if (w[static_cast<size_t>(i)] == a) next.push_back(concat(l, Word{hat_word[static_cast<size_t>(i)]}));
                    }
                    lifts = std::move(next);
                }
                int count = 0;
                for (const Word& l : lifts) count += presents_periodic(hat, l) ? 1 : 0;
                if (count != 1) {
                    unique = false;
                    multi.push_back({{"point", format_word(y.alphabet(), x)}, {"preimages", count}});
                }
            });
        val["unique_lifts_up_to_5"] = unique;
        if (!multi.empty()) val["violations"] = multi;
        last = val;
        if (!val["image_equal"].get<bool>() || !sync || !degree_one || !unique) continue;

        ForgeResult r;
        r.graph = hat;
        r.collapse = collapse;
        r.provenance = {{"construction", "ai_cover"},
                        {"xi", format_word(y.alphabet(), w)},
                        {"u", format_word(y.alphabet(), at.u)},
                        {"v", format_word(y.alphabet(), at.v)},
                        {"hat_word", format_word(hat_alpha, hat_word)}};
        r.validation = val;
        return r;
    }
    throw ValidationError("AI cover construction failed validation: " + last.dump());
}

CoverSpec ai_sft_cover(const ShiftHandle& y, const PrimitiveWord& xi) {
    const ForgeResult hat = forge_ai_cover(y, xi);
    const FischerCover fh = fischer_cover_of(hat.graph);
    LabeledGraph g = relabel(fh.graph, y.alphabet(), hat.collapse);
    CoverSpec cover = CoverSpec::from_graph(g);
    bool lift = false;
    for (int v = 0; v < g.vertex_count() && !lift; ++v) {
        VertexSet t = run_forward(g, VertexSet{v}, xi.word);
        lift = std::binary_search(t.begin(), t.end(), v);
    }
    if (!lift) throw ValidationError("xi has no lift of the same least period in the SFT cover");
    if (degree(cover) != 1) throw ValidationError("SFT cover is not almost invertible");
    return cover;
}

} // namespace soficlab
