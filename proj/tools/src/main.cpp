#include "acceptance.hpp"

#include <soficlab/soficlab.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace soficlab;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

enum Exit { kOk = 0, kNo = 1, kUnknown = 2, kError = 3, kUsage = 64 };

std::string sha256_of_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

struct Options {
    int n_max = 10;
    int k_max = 3;
    std::string tol = "1/1000000000";
    std::uint64_t budget = kDefaultEnumerationBudget;
    std::uint64_t seed = acceptance::kDefaultSeed;
    std::string format = "json";
    bool timing = false;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json body = json::object();
    int exit_code = kOk;

    ShiftHandle shift(const std::string& path) { return ShiftHandle::from_graph(graph(path)); }
    LabeledGraph graph(const std::string& path) {
        LabeledGraph g = load_presentation(path);
        inputs[path] = sha256_of_file(path);
        return g;
    }
    void verdict(const Verdict3& v) {
        body["result"] = v.to_json();
        exit_code = v.verdict == Verdict::Yes ? kOk : v.verdict == Verdict::No ? kNo : kUnknown;
    }
};

json enclosure(const EntropyEnclosure& e) {
    return {{"lower", e.lower_d()}, {"upper", e.upper_d()}, {"zero", e.zero_entropy}};
}

json census_json(const CensusTable& t) {
    json rows = json::array();
    for (const CensusRow& r : t.rows) {
        json row{{"n", r.n}, {"q", r.q}, {"s", r.s}, {"rec", r.rec}};
        if (r.r) row["r"] = *r.r;
        rows.push_back(row);
    }
    return rows;
}

json tree_json(const ComponentTree& t) {
    json comps = json::array();
    for (size_t i = 0; i < t.components.size(); ++i) {
        const ComponentNode& c = t.components[i];
        json node{{"index", i}, {"level", c.level}, {"parent", c.parent}, {"closure", presentation_to_json(c.closure.presentation())},
                  {"entropy", enclosure(entropy(c.closure))}};
        node["derived_empty"] = c.derived.is_empty();
        comps.push_back(node);
    }
    return {{"depth", t.depth}, {"components", comps}};
}

json forge_json(const ForgeResult& r) {
    json j{{"graph", presentation_to_json(r.graph)}, {"provenance", r.provenance}, {"validation", r.validation}};
    if (!r.edge_origin.empty()) j["edge_origin"] = r.edge_origin;
    return j;
}

PrimitiveWord primitive(const ShiftHandle& y, const std::string& text) {
    return PrimitiveWord::from(parse_word(y.alphabet(), text));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"soficlab: sofic shift toolkit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--nmax", opt.n_max, "largest period or word length examined")->check(CLI::PositiveNumber);
    app.add_option("--kmax", opt.k_max, "largest window radius for p-periodicity")->check(CLI::NonNegativeNumber);
    app.add_option("--tol", opt.tol, "entropy enclosure width, as a rational");
    app.add_option("--budget", opt.budget, "enumeration budget (words)");
    app.add_option("--seed", opt.seed, "seed for randomized corpora");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "dot"}));
    app.add_flag("--timing", opt.timing, "add runtime_ms to the report (breaks byte-identical output)");

    Report rep;
    std::string f1, f2, f3, w, proc, kind;
    int p = 1;
    std::string eps = "3/10";
    int m_bound = 6;
    bool left = false, with_cover = false;
    std::string corpus_dir = SOFICLAB_CORPUS_DIR;

    auto* fischer = app.add_subcommand("fischer", "Fischer cover of a presentation");
    fischer->add_option("file", f1)->required();
    fischer->add_flag("--left", left, "left Fischer cover");

    auto* cen = app.add_subcommand("census", "periodic point census");
    cen->add_option("file", f1)->required();
    cen->add_flag("--cover", with_cover, "also count r_n of the file read as a cover");

    auto* rec = app.add_subcommand("receptive", "receptivity of w^infinity");
    rec->add_option("file", f1)->required();
    rec->add_option("word", w)->required();

    auto* per = app.add_subcommand("period", "period of an irreducible sofic shift");
    per->add_option("file", f1)->required();

    auto* pp = app.add_subcommand("p-periodic", "p-periodicity of a shift");
    pp->add_option("file", f1)->required();
    pp->add_option("p", p)->required()->check(CLI::PositiveNumber);

    auto* comp = app.add_subcommand("components", "irreducible component tree");
    comp->add_option("file", f1)->required();

    auto* dec = app.add_subcommand("decide", "decide an embedding question");
    dec->add_option("procedure", proc)->required()->check(CLI::IsMember({"sft-embed", "through-cover", "s-fact", "factorizable", "ai-fact"}));
    dec->add_option("z", f1)->required();
    dec->add_option("target", f2)->required();

    auto* forge = app.add_subcommand("forge", "build covers and sub-SFTs");
    forge->add_option("kind", kind)->required()->check(CLI::IsMember({"receptive-cover", "ai-cover", "ai-sft-cover", "injective-sub", "enlarge", "grow"}));
    forge->add_option("file", f1)->required();
    forge->add_option("word", w);
    forge->add_option("--eps", eps, "entropy slack, as a rational");
    forge->add_option("--mbound", m_bound, "period bound for grow");

    auto* ver = app.add_subcommand("verify", "independent checks");
    ver->add_option("kind", kind)->required()->check(CLI::IsMember({"injective", "degree", "sync", "replay"}));
    ver->add_option("file", f1)->required();
    ver->add_option("args", f2, "word (sync) or procedure (replay)");
    ver->add_option("target", f3, "replay: Z file, then target file and report");
    std::string f4, f5;
    ver->add_option("more", f4);
    ver->add_option("report", f5);

    auto* corpus = app.add_subcommand("corpus", "replay the acceptance criteria");
    corpus->add_option("--dir", corpus_dir, "fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const auto start = std::chrono::steady_clock::now();
    std::string dot;
    try {
        const mpq_class tol(opt.tol);
        if (*fischer) {
            rep.command = "fischer";
            const ShiftHandle y = rep.shift(f1);
            const LabeledGraph g = left ? left_fischer_cover(y).graph : y.fischer().graph;
            rep.body["cover"] = presentation_to_json(g);
            rep.body["side"] = left ? "left" : "right";
            rep.body["period"] = graph_period(g);
            dot = to_dot(g, left ? "LeftFischer" : "Fischer");
        } else if (*cen) {
            rep.command = "census";
            const LabeledGraph g = rep.graph(f1);
            const ShiftHandle y = ShiftHandle::from_graph(g);
            const CensusTable t = with_cover ? cover_census(CoverSpec::from_graph(g), opt.n_max, opt.budget)
                                             : census(y, opt.n_max, opt.budget);
            rep.body["n_max"] = opt.n_max;
            rep.body["rows"] = census_json(t);
            rep.body["entropy"] = enclosure(entropy(y, tol));
        } else if (*rec) {
            rep.command = "receptive";
            const ShiftHandle y = rep.shift(f1);
            const ReceptivityResult r = is_receptive(y, primitive(y, w));
            rep.body["word"] = w;
            rep.body["receptive"] = r.receptive;
            if (r.witness) {
                const Alphabet& a = y.alphabet();
                rep.body["witness"] = {{"m1", format_word(a, r.witness->m1)},
                                       {"m2", format_word(a, r.witness->m2)},
                                       {"collapse_vertex", y.fischer().graph.vertex_name(r.witness->collapse_vertex)},
                                       {"preperiod", r.witness->preperiod}};
            }
            rep.exit_code = r.receptive ? kOk : kNo;
        } else if (*per) {
            rep.command = "period";
            const PeriodReport r = period_of(rep.shift(f1), opt.n_max);
            rep.body = {{"per", r.per}, {"p3_left", r.p3_left}, {"p4_empirical", r.p4_empirical}, {"p5_empirical", r.p5_empirical},
                        {"q_gcd", r.q_gcd}, {"n_max", r.n_max}, {"consistent", r.consistent}};
        } else if (*pp) {
            rep.command = "p-periodic";
            rep.verdict(is_p_periodic(rep.shift(f1), p, opt.k_max, opt.n_max));
        } else if (*comp) {
            rep.command = "components";
            rep.body = tree_json(component_tree(rep.shift(f1)));
        } else if (*dec) {
            rep.command = "decide " + proc;
            const ShiftHandle z = rep.shift(f1);
            const LabeledGraph tg = rep.graph(f2);
            const ShiftHandle t = ShiftHandle::from_graph(tg);
            Verdict3 v;
            if (proc == "sft-embed") v = decide_embed_irreducible_sft(z, t, opt.n_max);
            else if (proc == "through-cover") v = decide_embed_through_cover(z, CoverSpec::from_graph(tg), opt.n_max);
            else if (proc == "s-fact") v = decide_s_factorizable(z, t, opt.n_max);
            else if (proc == "factorizable") v = decide_factorizable(z, t, opt.n_max);
            else v = decide_ai_factorizable(z, t, opt.n_max);
            rep.verdict(v);
        } else if (*forge) {
            rep.command = "forge " + kind;
            const LabeledGraph g = rep.graph(f1);
            const ShiftHandle y = ShiftHandle::from_graph(g);
            const mpq_class e(eps);
            auto need_word = [&] {
                if (w.empty()) throw ValidationError("forge " + kind + " needs a word");
                return primitive(y, w);
            };
            ForgeResult r;
            if (kind == "receptive-cover") r = forge_receptive_cover(CoverSpec::from_graph(g), need_word());
            else if (kind == "ai-cover") r = forge_ai_cover(y, need_word());
            else if (kind == "ai-sft-cover") {
                const CoverSpec c = ai_sft_cover(y, need_word());
                r.graph = c.graph;
                r.provenance = {{"construction", "ai_sft_cover"}, {"xi", w}};
                r.validation = {{"degree", degree(c)}};
            } else if (kind == "injective-sub") r = extract_injective_sub(CoverSpec::from_graph(g), e);
            else if (kind == "grow") r = grow_periodic_support(CoverSpec::from_graph(g), e, m_bound);
            else {
                const CoverSpec pi = CoverSpec::from_graph(g);
                const PrimitiveWord u = need_word();
                const ForgeResult base = extract_injective_sub(pi, e);
                std::vector<int> cycle;
                // Closed path labelled u, found vertex by vertex.
                for (int v0 = 0; v0 < g.vertex_count() && cycle.empty(); ++v0) {
                    std::vector<int> path;
                    int v = v0;
                    for (Symbol a : u.word) {
                        int next = -1;
                        for (int ed : g.out_edges(v))
                            if (g.edge(ed).label == a) {
                                next = ed;
                                break;
                            }
                        if (next < 0) break;
                        path.push_back(next);
                        v = g.edge(next).dst;
                    }
                    if (static_cast<int>(path.size()) == u.length() && v == v0) cycle = path;
                }
                if (cycle.empty()) throw ValidationError("no closed path labelled " + w + " found by greedy search");
                r = enlarge_with_orbit(pi, base.sub(), cycle);
            }
            rep.body = forge_json(r);
            dot = to_dot(r.graph, "Forged");
        } else if (*ver) {
            rep.command = "verify " + kind;
            if (kind == "injective") {
                const CoverSpec pi = CoverSpec::from_graph(rep.graph(f1));
                rep.body["injective"] = injective_on(pi, SubSft::whole(pi.graph));
                rep.body["finite_to_one"] = finite_to_one(pi);
                rep.exit_code = rep.body["injective"].get<bool>() ? kOk : kNo;
            } else if (kind == "degree") {
                const CoverSpec pi = CoverSpec::from_graph(rep.graph(f1));
                const bool fto = finite_to_one(pi);
                rep.body["finite_to_one"] = fto;
                if (fto) rep.body["degree"] = degree(pi);
                rep.exit_code = fto ? kOk : kNo;
            } else if (kind == "sync") {
                const ShiftHandle y = rep.shift(f1);
                const Word x = parse_word(y.alphabet(), f2);
                const auto refuted = refute_synchronizing(y, x, opt.k_max + 2);
                rep.body["word"] = f2;
                rep.body["synchronizing"] = is_synchronizing(y, x);
                if (refuted) rep.body["refutation"] = {{"left", format_word(y.alphabet(), refuted->first)}, {"right", format_word(y.alphabet(), refuted->second)}};
                rep.exit_code = refuted ? kNo : kOk;
            } else {
                // verify replay <procedure> <z> <target> <report>
                const std::string procedure = f1;
                const ShiftHandle z = rep.shift(f2);
                const LabeledGraph tg = rep.graph(f3);
                std::ifstream in(f4);
                if (!in) throw SchemaError("cannot open report '" + f4 + "'");
                json doc = json::parse(in);
                const json& res = doc.contains("result") ? doc["result"] : doc;
                Verdict3 v;
                const std::string s = res.value("verdict", "UNKNOWN");
                v.verdict = s == "YES" ? Verdict::Yes : s == "NO" ? Verdict::No : Verdict::Unknown;
                v.witness = res.value("witness", json());
                v.certificate = res.value("certificate", json());
                const Replay r = revalidate(procedure, z, tg, v);
                rep.body = {{"ok", r.ok}, {"detail", r.detail}};
                rep.exit_code = r.ok ? kOk : kNo;
            }
        } else if (*corpus) {
            rep.command = "corpus";
            json rows = json::array();
            bool all = true;
            for (const auto& c : acceptance::run_all(corpus_dir, opt.seed)) {
                std::cerr << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << c.detail << ")\n";
                rows.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                all = all && c.pass;
            }
            rep.body = {{"criteria", rows}, {"all_pass", all}};
            rep.exit_code = all ? kOk : kNo;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
        json err{{"schema_version", kSchemaVersion}, {"command", rep.command}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }

    if (opt.format == "dot") {
        if (dot.empty()) {
            std::cerr << "--format dot applies to fischer and forge only\n";
            return kUsage;
        }
        std::cout << dot;
        return rep.exit_code;
    }
    json out = rep.body;
    out["schema_version"] = kSchemaVersion;
    out["command"] = rep.command;
    out["inputs"] = rep.inputs;
    out["tool_version"] = kToolVersion;
    if (opt.timing)
        out["runtime_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << out.dump(2) << "\n";
    return rep.exit_code;
}
