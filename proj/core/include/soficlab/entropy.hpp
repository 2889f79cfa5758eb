#pragma once

#include "soficlab/graph.hpp"
#include "soficlab/shift.hpp"

#include <gmpxx.h>

#include <vector>

namespace soficlab {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix adjacency_matrix(const LabeledGraph& g);
IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& index);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix matrix_power(const IntMatrix& a, int e);

// Collatz–Wielandt enclosure of the Perron root of an irreducible
// non-negative matrix, with the positive vectors that certify it:
//   A*right >= lower*right, A*right <= upper*right,
//   left^T*A >= left_lower*left^T.
struct PerronBounds {
    mpq_class lower;
    mpq_class upper;
    std::vector<mpq_class> right;
    std::vector<mpq_class> left;
    mpq_class left_lower;
};
PerronBounds perron_bounds(const IntMatrix& a);

struct EntropyEnclosure {
    mpq_class lower; // lower bound on log(lambda)
    mpq_class upper;
    bool zero_entropy = false;
    bool empty = false;

    double lower_d() const { return lower.get_d(); }
    double upper_d() const { return upper.get_d(); }
    double midpoint() const { return (lower_d() + upper_d()) / 2; }
    mpq_class width() const { return upper - lower; }
};

inline const mpq_class kDefaultEntropyTol{1, 1000000000};

// Entropy of the edge shift of g: max over cycle-bearing components.
EntropyEnclosure entropy_of_graph(const LabeledGraph& g, const mpq_class& tol = kDefaultEntropyTol);
// h(Y) from the Fischer cover, or from the determinised presentation when Y is
// reducible.
EntropyEnclosure entropy(const ShiftHandle& y, const mpq_class& tol = kDefaultEntropyTol);

// -1 when a < b is certified, +1 when a > b, 0 when the enclosures overlap.
int compare_entropy(const EntropyEnclosure& a, const EntropyEnclosure& b);

// Rational enclosure of log(x) for rational x > 0 (directed rounding).
std::pair<mpq_class, mpq_class> log_enclosure(const mpq_class& x);

} // namespace soficlab
