#pragma once

#include "soficlab/graph.hpp"
#include "soficlab/presentation.hpp"
#include "soficlab/shift.hpp"
#include "soficlab/words.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace soficlab {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;
inline constexpr std::size_t kDefaultReceptiveCap = 1'000'000;

struct CensusRow {
    int n = 0;
    std::uint64_t q = 0;
    std::uint64_t s = 0;
    std::uint64_t rec = 0;
    std::optional<std::uint64_t> r;
};

struct CensusTable {
    int n_max = 0;
    std::vector<CensusRow> rows; // rows[n-1]

    const CensusRow& at(int n) const { return rows.at(static_cast<size_t>(n - 1)); }
};

struct ReceptivityWitness {
    Word m1; // magic; already includes the w-preperiod
    Word m2; // magic; readable from every vertex of the cycle
    int collapse_vertex = -1;
    std::vector<int> cycle; // Fischer vertices visited by f_w, starting where m1 lands
    int preperiod = 0;
};

struct ReceptivityResult {
    bool receptive = false;
    std::optional<ReceptivityWitness> witness;
};

// f_w on Fischer vertices: image of each vertex after reading w, or -1.
std::vector<int> word_map(const FischerCover& f, const Word& w);

bool contains_periodic(const FischerCover& f, const Word& w);
bool contains_periodic(const ShiftHandle& y, const PrimitiveWord& w);
// Some power of w is synchronizing (w^infinity is a synchronizing point).
bool periodic_synchronizing(const FischerCover& f, const Word& w);

ReceptivityResult is_receptive(const FischerCover& f, const Word& w, std::size_t cap = kDefaultReceptiveCap);
ReceptivityResult is_receptive(const ShiftHandle& y, const PrimitiveWord& w, std::size_t cap = kDefaultReceptiveCap);

// Number of words of length n in the language presented by g.
BigInt language_size(const LabeledGraph& g, int n);

// Calls visit(w) for every Lyndon word w of length n in the language of g
// (every least-rotation representative of a point of least period n).
void for_each_lyndon_word(const LabeledGraph& g, int n, const std::function<void(const Word&)>& visit);

// Throws BudgetExceeded if |B_{n_max}| > budget.
CensusTable census(const ShiftHandle& y, int n_max = 12, std::uint64_t budget = kDefaultEnumerationBudget);
// r_n of the cover, plus q, s, rec of its image.
CensusTable cover_census(const CoverSpec& pi, int n_max = 12, std::uint64_t budget = kDefaultEnumerationBudget);
// r_n alone: primitive words w of length n labelling a closed path of length n.
std::uint64_t count_r(const LabeledGraph& cover, int n, std::uint64_t budget = kDefaultEnumerationBudget);
std::uint64_t count_q(const ShiftHandle& y, int n, std::uint64_t budget = kDefaultEnumerationBudget);
std::uint64_t count_rec(const ShiftHandle& y, int n, std::uint64_t budget = kDefaultEnumerationBudget);
std::uint64_t count_s(const ShiftHandle& y, int n, std::uint64_t budget = kDefaultEnumerationBudget);

// Moebius inversion of traces of the adjacency matrix of an edge shift.
BigInt trace_of_power(const LabeledGraph& g, int d);
std::uint64_t sft_qn_oracle(const ShiftHandle& x, int n);
std::uint64_t sft_qn_oracle(const LabeledGraph& g, int n);

// Distinct label words of paths of length j from v1 to v2 that avoid ubar^(2n).
BigInt count_repetition_free_paths(const LabeledGraph& g, int v1, int v2, int j, int n, const Word& ubar,
                                   std::uint64_t budget = kDefaultEnumerationBudget);

// Whether w^infinity is presented by g (some closed path is labelled by a power of w).
bool presents_periodic(const LabeledGraph& g, const Word& w);

} // namespace soficlab
