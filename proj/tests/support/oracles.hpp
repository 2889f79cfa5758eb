#pragma once

// Slow, obviously-correct reference computations. Nothing here calls into the
// census, presentation or entropy code of the library.

#include <soficlab/graph.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using soficlab::Edge;
using soficlab::LabeledGraph;
using soficlab::Symbol;
using soficlab::Word;

inline std::set<int> step(const LabeledGraph& g, const std::set<int>& from, Symbol a) {
    std::set<int> out;
    for (const Edge& e : g.edges())
        if (e.label == a && from.count(e.src)) out.insert(e.dst);
    return out;
}

inline std::set<int> all(const LabeledGraph& g) {
    std::set<int> s;
    for (int v = 0; v < g.vertex_count(); ++v) s.insert(v);
    return s;
}

inline bool readable(const LabeledGraph& g, const Word& w) {
    std::set<int> s = all(g);
    for (Symbol a : w) s = step(g, s, a);
    return !s.empty();
}

// x^infinity is a point: reading x V+1 times from everywhere leaves something.
inline bool periodic_point(const LabeledGraph& g, const Word& x) {
    std::set<int> s = all(g);
    for (int i = 0; i <= g.vertex_count() && !s.empty(); ++i)
        for (Symbol a : x) s = step(g, s, a);
    return !s.empty();
}

inline bool primitive(const Word& x) {
    const size_t n = x.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool same = true;
        for (size_t i = 0; i < n && same; ++i) same = x[i] == x[(i + d) % n];
        if (same) return false;
    }
    return true;
}

// Every word over the alphabet, lexicographic.
inline std::vector<Word> all_words(int k, int n) {
    std::vector<Word> out{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<Word> next;
        for (const Word& w : out)
            for (Symbol a = 0; a < k; ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

// Points of least period n.
inline std::uint64_t least_period_points(const LabeledGraph& g, int n) {
    std::uint64_t c = 0;
    for (const Word& x : all_words(g.alphabet().size(), n))
        if (primitive(x) && periodic_point(g, x)) ++c;
    return c;
}

inline std::uint64_t language_count(const LabeledGraph& g, int n) {
    std::uint64_t c = 0;
    for (const Word& x : all_words(g.alphabet().size(), n))
        if (readable(g, x)) ++c;
    return c;
}

// Follower words of v up to length L.
inline std::set<Word> followers(const LabeledGraph& g, int v, int len) {
    std::set<Word> out;
    for (int n = 0; n <= len; ++n)
        for (const Word& x : all_words(g.alphabet().size(), n)) {
            std::set<int> s{v};
            for (Symbol a : x) s = step(g, s, a);
            if (!s.empty()) out.insert(x);
        }
    return out;
}

// gcd of lengths of closed walks up to 2V (the period of an irreducible graph).
inline int cycle_gcd(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0)), p;
    for (const Edge& e : g.edges()) a[e.src][e.dst] = 1;
    p = a;
    int gc = 0;
    for (int len = 1; len <= 2 * n; ++len) {
        for (int i = 0; i < n; ++i)
            if (p[i][i] > 0) gc = std::gcd(gc, len);
        std::vector<std::vector<double>> q(n, std::vector<double>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (p[i][l] > 0)
                    for (int j = 0; j < n; ++j)
                        if (a[l][j] > 0) q[i][j] = 1;
        p = q;
    }
    return gc;
}

// log of the spectral radius by plain power iteration on A + I (double).
inline double log_spectral_radius(const LabeledGraph& g) {
    const int n = g.vertex_count();
    std::vector<double> x(n, 1.0);
    double lambda = 0;
    for (int it = 0; it < 20000; ++it) {
        std::vector<double> y(x);
        for (const Edge& e : g.edges()) y[e.src] += x[e.dst];
        double m = 0;
        for (double v : y) m = std::max(m, v);
        for (double& v : y) v /= m;
        lambda = m - 1;
        x = y;
    }
    return std::log(lambda);
}

// Small random irreducible presentation over {0..k-1}.
inline LabeledGraph random_presentation(std::mt19937_64& rng, int max_vertices, int k) {
    const int n = 1 + static_cast<int>(rng() % max_vertices);
    std::vector<std::string> names, symbols;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    for (int a = 0; a < k; ++a) symbols.push_back(std::string(1, static_cast<char>('a' + a)));
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, static_cast<Symbol>(rng() % k)});
    const int extra = static_cast<int>(rng() % (n + 1));
    for (int i = 0; i < extra; ++i)
        edges.push_back({static_cast<int>(rng() % n), static_cast<int>(rng() % n), static_cast<Symbol>(rng() % k)});
    return LabeledGraph(soficlab::Alphabet(symbols), names, edges);
}

} // namespace oracle
