#pragma once

#include "soficlab/graph.hpp"
#include "soficlab/shift.hpp"

#include <gmpxx.h>
#include <nlohmann/json.hpp>
#include <optional>

namespace soficlab {

// Number of paths of length m in g is at most c * rate^m.
struct GrowthUpper {
    mpq_class c;
    mpq_class rate;
};
GrowthUpper path_growth_upper(const LabeledGraph& g);

// For every multiple m of p with m >= crossover, q_m(Z) is smaller than the
// number of points of least period m whose period word is a magic word of
// `comparison` labelling a closed path. That count lower-bounds s_m, rec_m
// and r_m, whichever the caller compares against. Counts below the crossover
// are the caller's job.
struct TailCertificate {
    int crossover = 0;
    nlohmann::json record;
};
std::optional<TailCertificate> tail_certificate(const ShiftHandle& z, const LabeledGraph& comparison, int p,
                                                int max_crossover = 40);

// Replays a GROWTH record numerically; FINITE records are checked by the caller.
bool tail_record_consistent(const nlohmann::json& record, int p);

} // namespace soficlab
