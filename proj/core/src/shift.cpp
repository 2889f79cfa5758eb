#include "soficlab/shift.hpp"

#include "soficlab/errors.hpp"
#include "soficlab/presentation.hpp"

namespace soficlab {

ShiftHandle::ShiftHandle() : state_(std::make_shared<State>()) { state_->empty = true; }

ShiftHandle ShiftHandle::from_graph(const LabeledGraph& g) {
    ShiftHandle h;
    h.state_ = std::make_shared<State>();
    h.state_->graph = trim(g);
    h.state_->kind = h.state_->graph.labels_distinct() ? ShiftKind::SftEdgeShift : ShiftKind::Sofic;
    h.state_->irreducible = is_irreducible(h.state_->graph);
    return h;
}

ShiftHandle ShiftHandle::empty(const Alphabet& alphabet) {
    ShiftHandle h;
    h.state_->graph = LabeledGraph(alphabet, {}, {});
    return h;
}

const FischerCover& ShiftHandle::fischer() const {
    if (state_->empty) throw EmptyShiftError("the empty shift has no Fischer cover");
    std::call_once(state_->once, [this] {
        state_->cover = std::make_shared<const FischerCover>(fischer_cover_of(state_->graph));
    });
    return *state_->cover;
}

CoverSpec CoverSpec::from_graph(const LabeledGraph& g) {
    if (!is_essential(g) || !is_irreducible(g)) throw NotIrreducibleError("cover graph must be essential and irreducible");
    return CoverSpec{g};
}

} // namespace soficlab
