#pragma once

#include "soficlab/graph.hpp"
#include "soficlab/shift.hpp"

#include <string>
#include <vector>

namespace soficlab {

struct SubsetAutomaton {
    LabeledGraph base;
    std::vector<VertexSet> states;           // states[0] is the seed set
    std::vector<std::vector<int>> transitions; // [state][symbol] -> state or -1

    int state_count() const { return static_cast<int>(states.size()); }
    int next(int state, Symbol a) const { return transitions[static_cast<size_t>(state)][static_cast<size_t>(a)]; }
    // Runs w from `state`; -1 once a transition is undefined.
    int run(int state, const Word& w) const;
};

// Subset construction seeded at `seed` (all vertices when empty), keeping
// every reachable non-empty subset.
SubsetAutomaton determinize(const LabeledGraph& g, VertexSet seed = {});

// Moore refinement of a partial DFA in which every state accepts: returns the
// class of each state, classes numbered by their least member.
std::vector<int> follower_classes(const std::vector<std::vector<int>>& transitions);

struct FischerCover {
    LabeledGraph graph;
    std::vector<std::vector<int>> delta; // [vertex][symbol] -> vertex or -1

    int next(int v, Symbol a) const { return delta[static_cast<size_t>(v)][static_cast<size_t>(a)]; }
    int run(int v, const Word& w) const;
};

// Fischer cover of the shift presented by g. The graph may be reducible as
// long as the shift it presents is irreducible.
FischerCover fischer_cover_of(const LabeledGraph& g);
const FischerCover& fischer_cover(const ShiftHandle& y);
// Left Fischer cover. `delta` holds predecessor transitions: delta[v][a] is the
// source of the unique a-labelled edge into v.
FischerCover left_fischer_cover(const ShiftHandle& y);

struct MagicTest {
    bool magic = false;
    bool in_language = false;
};
// delta(V, w) is a single vertex.
MagicTest is_magic(const LabeledGraph& g, const Word& w);
MagicTest is_magic(const FischerCover& f, const Word& w);
MagicTest is_magic(const SubsetAutomaton& a, const Word& w);
bool is_synchronizing(const ShiftHandle& y, const Word& w);

// Canonical form of an irreducible right-resolving graph, invariant under
// relabelled vertex order. Symbols are compared by name.
struct CanonicalForm {
    std::vector<std::string> symbols;
    std::vector<int> code;
    bool operator==(const CanonicalForm&) const = default;
};
CanonicalForm canonical_form(const LabeledGraph& g);
bool isomorphic_right_resolving(const LabeledGraph& a, const LabeledGraph& b);
bool isomorphic_left_resolving(const LabeledGraph& a, const LabeledGraph& b);

bool shifts_equal(const ShiftHandle& a, const ShiftHandle& b);

// Some word w with delta(V, w) = {target} in the Fischer cover, shortest first.
Word magic_word_to(const FischerCover& f, int target);
// Shortest magic word of the cover, with its collapse vertex.
std::pair<Word, int> shortest_magic_word(const FischerCover& f);

} // namespace soficlab
