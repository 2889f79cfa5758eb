#include "soficlab/entropy.hpp"

#include "soficlab/errors.hpp"
#include "soficlab/presentation.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

namespace soficlab {

IntMatrix adjacency_matrix(const LabeledGraph& g) {
    const size_t n = static_cast<size_t>(g.vertex_count());
    IntMatrix a(n, std::vector<mpz_class>(n, 0));
    for (const Edge& e : g.edges()) a[static_cast<size_t>(e.src)][static_cast<size_t>(e.dst)] += 1;
    return a;
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& index) {
    IntMatrix s(index.size(), std::vector<mpz_class>(index.size(), 0));
    for (size_t i = 0; i < index.size(); ++i)
        for (size_t j = 0; j < index.size(); ++j) s[i][j] = a[static_cast<size_t>(index[i])][static_cast<size_t>(index[j])];
    return s;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IntMatrix c(n, std::vector<mpz_class>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (size_t j = 0; j < m; ++j)
                if (b[l][j] != 0) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

IntMatrix matrix_power(const IntMatrix& a, int e) {
    const size_t n = a.size();
    IntMatrix r(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    IntMatrix base = a;
    while (e > 0) {
        if (e & 1) r = multiply(r, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return r;
}

namespace {

using SparseRows = std::vector<std::vector<std::pair<size_t, double>>>;

// Power iteration on (A + I) scaled to row sums, which is primitive for
// irreducible A, so it converges to the Perron vector of A.
std::vector<double> perron_vector(const SparseRows& a, int iterations) {
    const size_t n = a.size();
    std::vector<double> x(n, 1.0), y(n);
    for (int it = 0; it < iterations; ++it) {
        double norm = 0;
        for (size_t i = 0; i < n; ++i) {
            double s = x[i];
            for (const auto& [j, v] : a[i]) s += v * x[j];
            y[i] = s;
            norm = std::max(norm, s);
        }
        double delta = 0;
        for (size_t i = 0; i < n; ++i) {
            double v = y[i] / norm;
            delta = std::max(delta, std::abs(v - x[i]));
            x[i] = v;
        }
        if (delta < 1e-17) break;
    }
    for (double& v : x) v = std::max(v, 1e-300);
    return x;
}

std::pair<mpq_class, mpq_class> cw_bounds(const IntMatrix& a, const std::vector<mpq_class>& x, bool transpose) {
    const size_t n = a.size();
    mpq_class lo, hi;
    for (size_t i = 0; i < n; ++i) {
        mpq_class s = 0;
        for (size_t j = 0; j < n; ++j) {
            const mpz_class& aij = transpose ? a[j][i] : a[i][j];
            if (aij != 0) s += aij * x[j];
        }
        mpq_class r = s / x[i];
        if (i == 0 || r < lo) lo = r;
        if (i == 0 || r > hi) hi = r;
    }
    return {lo, hi};
}

} // namespace

PerronBounds perron_bounds(const IntMatrix& a) {
    const size_t n = a.size();
    if (n == 0) throw ValidationError("empty matrix");
    SparseRows ad(n), at(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != 0) {
                ad[i].emplace_back(j, a[i][j].get_d());
                at[j].emplace_back(i, a[i][j].get_d());
            }
    PerronBounds pb;
    for (int iterations : {5000, 200000}) {
        auto xr = perron_vector(ad, iterations);
        auto xl = perron_vector(at, iterations);
        pb.right.assign(xr.begin(), xr.end());
        pb.left.assign(xl.begin(), xl.end());
        std::tie(pb.lower, pb.upper) = cw_bounds(a, pb.right, false);
        pb.left_lower = cw_bounds(a, pb.left, true).first;
        mpq_class rel = (pb.upper - pb.lower) / pb.upper;
        if (rel < mpq_class("1/1000000000000")) break;
    }
    return pb;
}

std::pair<mpq_class, mpq_class> log_enclosure(const mpq_class& x) {
    if (x <= 0) throw ValidationError("log of a non-positive number");
    mpfr_t v, lo, hi;
    mpfr_inits2(256, v, lo, hi, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo, v, MPFR_RNDD);
    mpfr_set_q(v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi, v, MPFR_RNDU);
    mpq_class l, h;
    mpfr_get_q(l.get_mpq_t(), lo);
    mpfr_get_q(h.get_mpq_t(), hi);
    mpfr_clears(v, lo, hi, static_cast<mpfr_ptr>(nullptr));
    return {l, h};
}

EntropyEnclosure entropy_of_graph(const LabeledGraph& g, const mpq_class& tol) {
    EntropyEnclosure best;
    bool any = false;
    const IntMatrix a = adjacency_matrix(g);
    for (const auto& comp : scc_decompose(g)) {
        if (!comp.cycle_bearing) continue;
        IntMatrix s = submatrix(a, comp.vertices);
        EntropyEnclosure e;
        // A single cycle has lambda = 1 exactly.
        bool cycle = true;
        for (const auto& row : s) {
            mpz_class sum = 0;
            for (const auto& v : row) sum += v;
            if (sum != 1) cycle = false;
        }
        if (cycle) {
            e.lower = e.upper = 0;
            e.zero_entropy = true;
        } else {
            PerronBounds pb = perron_bounds(s);
            mpq_class lo = pb.lower < 1 ? mpq_class(1) : pb.lower;
            e.lower = log_enclosure(lo).first;
            e.upper = log_enclosure(pb.upper).second;
            if (e.lower < 0) e.lower = 0;
            if (e.width() > tol)
                throw BudgetExceeded("entropy enclosure did not reach the requested width");
        }
        best.lower = any ? std::max(best.lower, e.lower) : e.lower;
        best.upper = any ? std::max(best.upper, e.upper) : e.upper;
        any = true;
    }
    if (!any) {
        best.empty = true;
        best.zero_entropy = true;
        best.lower = best.upper = 0;
        return best;
    }
    best.zero_entropy = best.upper == 0;
    return best;
}

EntropyEnclosure entropy(const ShiftHandle& y, const mpq_class& tol) {
    if (y.is_empty()) {
        EntropyEnclosure e;
        e.empty = true;
        e.zero_entropy = true;
        return e;
    }
    if (y.irreducible_presentation()) return entropy_of_graph(y.fischer().graph, tol);
    const SubsetAutomaton dfa = determinize(y.presentation());
    std::vector<Edge> edges;
    for (int s = 0; s < dfa.state_count(); ++s)
        for (Symbol a = 0; a < y.alphabet().size(); ++a)
            if (dfa.next(s, a) >= 0) edges.push_back({s, dfa.next(s, a), a});
    LabeledGraph g(y.alphabet(), std::vector<std::string>(static_cast<size_t>(dfa.state_count())), std::move(edges));
    return entropy_of_graph(g, tol);
}

int compare_entropy(const EntropyEnclosure& a, const EntropyEnclosure& b) {
    if (a.upper < b.lower) return -1;
    if (a.lower > b.upper) return 1;
    return 0;
}

} // namespace soficlab
