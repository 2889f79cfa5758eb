#pragma once

#include <soficlab/graph.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace soficlab::acceptance {

inline constexpr std::uint64_t kDefaultSeed = 20250214;
inline constexpr double kGrowthTolerance = 0.15;
inline constexpr double kEnclosureSlack = 1e-9;
inline constexpr double kFischerTimeLimit = 1.0;

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// Fixture names of corpus/*.json used by the census criterion.
const std::vector<std::string>& corpus_names();
LabeledGraph load_fixture(const std::string& corpus_dir, const std::string& name);

// Irreducible graph: a Hamiltonian cycle plus up to min(extra_edges, n)
// random extra edges. With
// distinct_labels every edge gets its own symbol (an edge shift).
LabeledGraph random_irreducible_graph(std::mt19937_64& rng, int max_vertices, int extra_edges, int alphabet,
                                      bool distinct_labels);

std::vector<CriterionResult> run_all(const std::string& corpus_dir, std::uint64_t seed = kDefaultSeed);
CriterionResult run_one(int id, const std::string& corpus_dir, std::uint64_t seed = kDefaultSeed);

} // namespace soficlab::acceptance
