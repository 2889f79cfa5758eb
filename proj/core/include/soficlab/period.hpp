#pragma once

#include "soficlab/shift.hpp"
#include "soficlab/verdict.hpp"

#include <vector>

namespace soficlab {

struct PeriodReport {
    int per = 0;          // graph period of the right Fischer cover
    int p3_left = 0;      // graph period of the left Fischer cover
    int p4_empirical = 0; // gcd of least periods of receptive points up to n_max (0: none found)
    int p5_empirical = 0; // same for synchronizing points
    int q_gcd = 0;        // gcd of least periods of all periodic points up to n_max
    int n_max = 0;
    bool consistent = false;
};

PeriodReport period_of(const ShiftHandle& y, int n_max = 12);

struct CyclicPartition {
    int p = 1;
    std::vector<int> classes; // vertex -> residue
};

CyclicPartition canonical_cyclic_partition(const LabeledGraph& g);
CyclicPartition canonical_cyclic_partition(const ShiftHandle& x);

// For each cyclic class i of the cover's domain, the sofic shift (over
// p-blocks) of label sequences of paths starting in class i, read p symbols at
// a time. Returned in cyclic order.
std::vector<ShiftHandle> cyclic_images(const CoverSpec& pi);
// Alphabet symbol for a p-block.
std::string block_symbol(const Alphabet& a, const Word& block);

// Certificates: {"kind": "TRIVIAL" | "SFT_EXACT" | "WINDOW_COLORING" | "PERIOD_OBSTRUCTION", ...}.
Verdict3 is_p_periodic(const ShiftHandle& z, int p, int k_max = 3, int n_max = 10);

} // namespace soficlab
