#pragma once

#include "soficlab/shift.hpp"
#include "soficlab/verify.hpp"
#include "soficlab/words.hpp"

#include <gmpxx.h>
#include <nlohmann/json.hpp>
#include <vector>

namespace soficlab {

struct ForgeResult {
    // Forged cover graph, the presentation of the hatted shift, or the graph of
    // a sub-SFT, depending on the construction.
    LabeledGraph graph;
    std::vector<int> edge_origin;  // sub-SFTs: the domain edge under each edge
    int hub = -1;                  // sub-SFTs: where marker blocks start and end
    int hub_end = -1;
    std::vector<Symbol> collapse;  // hatted shifts: symbol -> symbol of Y
    nlohmann::json provenance;
    nlohmann::json validation;

    SubSft sub() const { return SubSft{graph, edge_origin, hub, hub_end}; }
};

// Adds a w-cycle entered by the receptivity words. Throws NotReceptiveError.
ForgeResult forge_receptive_cover(const CoverSpec& pi, const PrimitiveWord& w);

// Hatted shift in which xi lifts to a synchronizing point; hat symbols carry
// the reserved prefix. Throws NotReceptiveError, ZeroEntropyError.
ForgeResult forge_ai_cover(const ShiftHandle& y, const PrimitiveWord& xi);
// Fischer cover of the hatted shift read through the collapse.
CoverSpec ai_sft_cover(const ShiftHandle& y, const PrimitiveWord& xi);

// Sub-SFT W of the domain with pi injective on W and h(W) >= h(Y) - eps.
ForgeResult extract_injective_sub(const CoverSpec& pi, const mpq_class& eps);
// Adds the periodic orbit of a domain cycle (edge ids, in order) to W.
ForgeResult enlarge_with_orbit(const CoverSpec& pi, const SubSft& w, const std::vector<int>& cycle);
ForgeResult grow_periodic_support(const CoverSpec& pi, const mpq_class& eps, int m_bound);

} // namespace soficlab
