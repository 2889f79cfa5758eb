#pragma once

#include "soficlab/graph.hpp"
#include "soficlab/shift.hpp"
#include "soficlab/verdict.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace soficlab {

// A sub-SFT of a cover's domain: its own graph (edges labelled as in the
// cover) and, for each of its edges, the domain edge it runs along.
struct SubSft {
    LabeledGraph graph;
    std::vector<int> edge_origin;
    int hub = -1;     // optional attachment points for enlarge_with_orbit
    int hub_end = -1;
    // The whole domain.
    static SubSft whole(const LabeledGraph& g);
};

// Pairs of vertices joined by pairs of equally labelled edges.
struct FiberProduct {
    LabeledGraph graph; // vertex i stands for pairs[i]
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::pair<int, int>> edge_pairs;
};
FiberProduct fiber_product(const LabeledGraph& g);

// pi is injective on the image of W, and W embeds in the domain: distinct
// bi-infinite paths of W carry distinct labels.
bool injective_on(const CoverSpec& pi, const SubSft& w);
// No two distinct equally labelled paths share both endpoints.
bool finite_to_one(const CoverSpec& pi);
// Throws NotFiniteToOne.
int degree(const CoverSpec& pi);

std::set<Word> brute_language(const ShiftHandle& y, int max_length, std::uint64_t budget = 5'000'000);
std::optional<std::pair<Word, Word>> refute_synchronizing(const ShiftHandle& y, const Word& w, int max_context);

// Recounts by walking every path; kept apart from the census code.
std::uint64_t brute_q(const ShiftHandle& z, int n);
std::uint64_t brute_r(const LabeledGraph& cover, int n);

struct Replay {
    bool ok = false;
    std::string detail;
};

// Re-validates a verdict of one of the decision procedures: "sft-embed",
// "through-cover", "s-fact", "factorizable", "ai-fact". The target is the
// SFT, the cover graph, or Y, as the procedure expects.
Replay revalidate(const std::string& procedure, const ShiftHandle& z, const LabeledGraph& target, const Verdict3& v);

} // namespace soficlab
