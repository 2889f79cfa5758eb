#include "soficlab/tail.hpp"

#include "soficlab/entropy.hpp"
#include "soficlab/errors.hpp"
#include "soficlab/presentation.hpp"
#include "soficlab/words.hpp"

#include <cmath>
#include <map>
#include <queue>

namespace soficlab {

namespace {

double ln(const mpq_class& x) {
    // get_d would overflow for very large values; split off a power of two.
    mpz_class num = x.get_num(), den = x.get_den();
    long shift = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    mpq_class scaled = x;
    if (shift > 0) scaled /= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(shift));
    else if (shift < 0) scaled *= mpq_class(mpz_class(1) << static_cast<mp_bitcnt_t>(-shift));
    return std::log(scaled.get_d()) + static_cast<double>(shift) * std::log(2.0);
}

double log_sum(double a, double b) {
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

std::string str(const mpq_class& q) { return q.get_str(); }

// log of the lower bound minus log of twice the competing terms, at m.
double margin(const nlohmann::json& r, int m) {
    const int mlen = r["magic_length"], pc = r["block_period"], k0 = r["k0"];
    const double steps = static_cast<double>((m - mlen) / pc - 2 * k0);
    const double lower = r["log_k"].get<double>() + steps * r["log_mu"].get<double>();
    const double zt = r["log_z_const"].get<double>() + m * r["log_z_rate"].get<double>();
    const double yt = r["log_y_const"].get<double>() + std::log(m / 2.0) + (m / 2.0) * r["log_y_rate"].get<double>();
    return lower - std::log(2.0) - log_sum(zt, yt);
}

bool slopes_ok(const nlohmann::json& r, int n) {
    const double up = r["log_mu"].get<double>() / r["block_period"].get<int>();
    const double s = up - std::max(r["log_z_rate"].get<double>(), r["log_y_rate"].get<double>() / 2);
    return s > 2.0 / n;
}

} // namespace

GrowthUpper path_growth_upper(const LabeledGraph& g) {
    IntMatrix a = adjacency_matrix(g);
    const bool irreducible = is_irreducible(g) && g.vertex_count() > 0;
    mpz_class scale = irreducible ? 1 : 1000;
    if (!irreducible)
        for (auto& row : a)
            for (auto& x : row) x = x * scale + 1;
    PerronBounds pb = perron_bounds(a);
    mpq_class sum = 0, mn = pb.right[0];
    for (const auto& x : pb.right) {
        sum += x;
        if (x < mn) mn = x;
    }
    return {sum / mn, pb.upper / scale};
}

std::optional<TailCertificate> tail_certificate(const ShiftHandle& z, const LabeledGraph& cmp, int p, int max_crossover) {
    if (z.is_empty()) return TailCertificate{1, {{"kind", "FINITE"}, {"max_cycle", 0}}};
    const LabeledGraph& zg = z.presentation();
    bool zero = true;
    int max_cycle = 0;
    for (const auto& comp : scc_decompose(zg)) {
        if (!comp.cycle_bearing) continue;
        int edges = 0;
        for (const Edge& e : zg.edges()) {
            bool s = false, d = false;
            for (int v : comp.vertices) {
                s = s || v == e.src;
                d = d || v == e.dst;
            }
            if (s && d) ++edges;
        }
        if (edges != static_cast<int>(comp.vertices.size())) zero = false;
        max_cycle = std::max(max_cycle, static_cast<int>(comp.vertices.size()));
    }
    if (zero) return TailCertificate{max_cycle + 1, {{"kind", "FINITE"}, {"max_cycle", max_cycle}}};

    // Magic word M of the comparison graph, closed at its collapse vertex.
    const SubsetAutomaton d = determinize(cmp);
    const int k = cmp.alphabet().size();
    auto bfs_path = [&](int from, auto accept) -> std::optional<std::pair<int, Word>> {
        std::vector<std::pair<int, Symbol>> parent(static_cast<size_t>(d.state_count()), {-2, -1});
        std::queue<int> q;
        q.push(from);
        parent[static_cast<size_t>(from)] = {-1, -1};
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            if (accept(s)) {
                Word w;
                for (int c = s; parent[static_cast<size_t>(c)].first >= 0; c = parent[static_cast<size_t>(c)].first)
                    w.push_back(parent[static_cast<size_t>(c)].second);
                std::reverse(w.begin(), w.end());
                return std::make_pair(s, w);
            }
            for (Symbol a = 0; a < k; ++a) {
                int t = d.next(s, a);
                if (t >= 0 && parent[static_cast<size_t>(t)].first == -2) {
                    parent[static_cast<size_t>(t)] = {s, a};
                    q.push(t);
                }
            }
        }
        return std::nullopt;
    };
    auto single = bfs_path(0, [&](int s) { return d.states[static_cast<size_t>(s)].size() == 1; });
    if (!single) return std::nullopt;
    const int sv = single->first;
    Word m0 = single->second;
    for (Symbol a = 0; a < k && m0.empty(); ++a)
        if (d.next(sv, a) >= 0) m0.push_back(a);
    auto back = bfs_path(sv, [&](int s) { return d.run(s, m0) == sv; });
    if (!back) return std::nullopt;
    Word magic = concat(back->second, m0);

    // Strongly connected piece of the subset automaton around {v}.
    std::vector<Edge> dedges;
    for (int s = 0; s < d.state_count(); ++s)
        for (Symbol a = 0; a < k; ++a)
            if (d.next(s, a) >= 0) dedges.push_back({s, d.next(s, a), a});
    LabeledGraph dg(cmp.alphabet(), std::vector<std::string>(static_cast<size_t>(d.state_count())), dedges);
    std::vector<int> members;
    for (const auto& comp : scc_decompose(dg))
        for (int v : comp.vertices)
            if (v == sv) members = comp.vertices;
    std::vector<char> in(static_cast<size_t>(d.state_count()), 0);
    for (int v : members) in[static_cast<size_t>(v)] = 1;
    TrimResult piece = restrict_with_map(dg, [&](int v) { return in[static_cast<size_t>(v)] != 0; }, [](int) { return true; });
    int local_v = -1;
    for (size_t i = 0; i < piece.vertex_origin.size(); ++i)
        if (piece.vertex_origin[i] == sv) local_v = static_cast<int>(i);
    if (local_v < 0) return std::nullopt;
    const Layering layers = cyclic_layering(piece.graph);
    const int pc = layers.period;
    if (p % pc != 0) return std::nullopt;

    const IntMatrix ac = adjacency_matrix(piece.graph);
    std::vector<int> cls;
    int local_in_cls = -1;
    for (int v = 0; v < piece.graph.vertex_count(); ++v)
        if (layers.residue[static_cast<size_t>(v)] == layers.residue[static_cast<size_t>(local_v)]) {
            if (v == local_v) local_in_cls = static_cast<int>(cls.size());
            cls.push_back(v);
        }
    const IntMatrix b = submatrix(matrix_power(ac, pc), cls);
    const size_t nb = b.size();
    IntMatrix bk = b;
    int k0 = 1;
    auto positive = [](const IntMatrix& m) {
        for (const auto& row : m)
            for (const auto& x : row)
                if (x == 0) return false;
        return true;
    };
    const int k0_cap = static_cast<int>(nb * nb) + 2;
    while (!positive(bk)) {
        if (++k0 > k0_cap) return std::nullopt;
        bk = multiply(bk, b);
    }
    const PerronBounds pb = perron_bounds(b);
    if (pb.lower <= 1) return std::nullopt;
    mpz_class arow = bk[static_cast<size_t>(local_in_cls)][0], bcol = bk[0][static_cast<size_t>(local_in_cls)];
    for (size_t i = 0; i < nb; ++i) {
        arow = std::min(arow, mpz_class(bk[static_cast<size_t>(local_in_cls)][i]));
        bcol = std::min(bcol, mpz_class(bk[i][static_cast<size_t>(local_in_cls)]));
    }
    mpq_class rsum = 0, rmax = pb.right[0];
    for (const auto& x : pb.right) {
        rsum += x;
        if (x > rmax) rmax = x;
    }
    const mpq_class kconst = mpq_class(arow * bcol) * rsum / rmax;

    const GrowthUpper zu = path_growth_upper(zg);
    const GrowthUpper yu = path_growth_upper(cmp);
    if (yu.rate < 1) return std::nullopt;

    nlohmann::json r{{"kind", "GROWTH"},
                     {"magic_length", static_cast<int>(magic.size())},
                     {"block_period", pc},
                     {"k0", k0},
                     {"k_const", str(kconst)},
                     {"mu_lower", str(pb.lower)},
                     {"z_const", str(zu.c)},
                     {"z_rate", str(zu.rate)},
                     {"y_const", str(yu.c)},
                     {"y_rate", str(yu.rate)},
                     {"log_k", ln(kconst)},
                     {"log_mu", ln(pb.lower)},
                     {"log_z_const", ln(zu.c)},
                     {"log_z_rate", ln(zu.rate)},
                     {"log_y_const", ln(yu.c)},
                     {"log_y_rate", ln(yu.rate)}};
    for (int m = p; m <= max_crossover; m += p) {
        if ((m - static_cast<int>(magic.size())) < 2 * k0 * pc) continue;
        if (!slopes_ok(r, m)) continue;
        if (margin(r, m) < 0.05) continue;
        r["crossover"] = m;
        return TailCertificate{m, r};
    }
    return std::nullopt;
}

bool tail_record_consistent(const nlohmann::json& r, int p) {
    if (r.value("kind", "") != "GROWTH") return false;
    const int n = r["crossover"];
    if (n % p != 0 || !slopes_ok(r, n)) return false;
    for (int m = n; m <= n + 8 * p; m += p)
        if (margin(r, m) < 0) return false;
    return true;
}

} // namespace soficlab
