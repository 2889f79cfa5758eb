#pragma once

#include "soficlab/shift.hpp"
#include "soficlab/verdict.hpp"

namespace soficlab {

inline constexpr int kDefaultDecideNMax = 10;

// Witness kinds (NO): ENTROPY, PERIOD, COUNT, ALL_COMPONENTS.
// Certificate kinds (YES): CONJUGATE, CONDITIONS, COMPONENT.
Verdict3 decide_embed_irreducible_sft(const ShiftHandle& z, const ShiftHandle& w, int n_max = kDefaultDecideNMax);
Verdict3 decide_embed_through_cover(const ShiftHandle& z, const CoverSpec& pi, int n_max = kDefaultDecideNMax);
Verdict3 decide_s_factorizable(const ShiftHandle& z, const ShiftHandle& y, int n_max = kDefaultDecideNMax);
Verdict3 decide_factorizable(const ShiftHandle& z, const ShiftHandle& y, int n_max = kDefaultDecideNMax);
// Throws PreconditionError unless h(Z) < h(Y) is certified.
Verdict3 decide_ai_factorizable(const ShiftHandle& z, const ShiftHandle& y, int n_max = kDefaultDecideNMax);

// Y is an SFT: its derived shift is empty.
bool is_sft(const ShiftHandle& y);

// Unlabelled isomorphism of two small multigraphs (brute force over vertex
// permutations, up to 8 vertices).
bool unlabeled_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

} // namespace soficlab
