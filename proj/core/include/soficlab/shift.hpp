#pragma once

#include "soficlab/graph.hpp"

#include <memory>
#include <mutex>

namespace soficlab {

struct FischerCover;

enum class ShiftKind { Sofic, SftEdgeShift };

// A sofic shift given by an essential presentation. Copies share the cached
// Fischer cover, which is computed at most once.
class ShiftHandle {
public:
    ShiftHandle();

    // Trims the presentation; throws EmptyShiftError if nothing is left.
    static ShiftHandle from_graph(const LabeledGraph& g);
    static ShiftHandle empty(const Alphabet& alphabet);

    bool is_empty() const { return state_->empty; }
    const LabeledGraph& presentation() const { return state_->graph; }
    const Alphabet& alphabet() const { return state_->graph.alphabet(); }
    ShiftKind kind() const { return state_->kind; }
    // The presentation graph is irreducible.
    bool irreducible_presentation() const { return state_->irreducible; }

    // Right Fischer cover; throws NotIrreducibleError for reducible shifts.
    const FischerCover& fischer() const;

private:
    struct State {
        LabeledGraph graph;
        ShiftKind kind = ShiftKind::Sofic;
        bool empty = false;
        bool irreducible = false;
        std::once_flag once;
        std::shared_ptr<const FischerCover> cover;
    };
    std::shared_ptr<State> state_;
};

// A 1-block cover: the edge shift of `graph` mapped onto the label shift.
struct CoverSpec {
    LabeledGraph graph;

    // Throws NotIrreducibleError if the graph is not essential and irreducible.
    static CoverSpec from_graph(const LabeledGraph& g);
    ShiftHandle codomain() const { return ShiftHandle::from_graph(graph); }
};

} // namespace soficlab
