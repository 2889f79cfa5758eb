#pragma once

#include "soficlab/shift.hpp"

#include <vector>

namespace soficlab {

// Points of an irreducible Y that contain no synchronizing word. Empty handle
// when there are none.
ShiftHandle derived_shift(const ShiftHandle& y);

// One irreducible shift per cycle-bearing component of the presentation,
// with equal shifts merged.
std::vector<ShiftHandle> closure_of_periodic(const ShiftHandle& s);

struct ComponentNode {
    int level = 0;
    ShiftHandle closure;
    int parent = -1;
    ShiftHandle derived; // derived shift of `closure`, possibly empty
};

struct ComponentTree {
    ShiftHandle root;
    std::vector<ComponentNode> components; // components[0] is the root
    int depth = 0;
};

// Throws DepthBudgetExceeded past depth_max.
ComponentTree component_tree(const ShiftHandle& y, int depth_max = 16);

// B(u) is contained in B(v); alphabets are matched by symbol name.
bool language_contained(const ShiftHandle& u, const ShiftHandle& v);
// Some word of B(u) is synchronizing for the irreducible shift v.
bool meets_synchronizing(const ShiftHandle& u, const ShiftHandle& v);

// Index into tree.components. Throws NotContainedError.
int locate_component(const ShiftHandle& u, const ComponentTree& tree);

} // namespace soficlab
