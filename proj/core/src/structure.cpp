#include "soficlab/structure.hpp"

#include "soficlab/errors.hpp"
#include "soficlab/presentation.hpp"

#include <map>
#include <queue>
#include <set>

namespace soficlab {

ShiftHandle derived_shift(const ShiftHandle& y) {
    if (y.is_empty()) return y;
    const FischerCover& f = y.fischer();
    const SubsetAutomaton dfa = determinize(f.graph);
    std::vector<int> local(static_cast<size_t>(dfa.state_count()), -1);
    std::vector<std::string> names;
    for (int s = 0; s < dfa.state_count(); ++s)
        if (dfa.states[static_cast<size_t>(s)].size() >= 2) {
            local[static_cast<size_t>(s)] = static_cast<int>(names.size());
            std::string name = "{";
            for (size_t i = 0; i < dfa.states[static_cast<size_t>(s)].size(); ++i)
                name += (i ? "," : "") + f.graph.vertex_name(dfa.states[static_cast<size_t>(s)][i]);
            names.push_back(name + "}");
        }
    std::vector<Edge> edges;
    for (int s = 0; s < dfa.state_count(); ++s) {
        if (local[static_cast<size_t>(s)] < 0) continue;
        for (Symbol a = 0; a < y.alphabet().size(); ++a) {
            int t = dfa.next(s, a);
            if (t >= 0 && local[static_cast<size_t>(t)] >= 0)
                edges.push_back({local[static_cast<size_t>(s)], local[static_cast<size_t>(t)], a});
        }
    }
    LabeledGraph g(y.alphabet(), names, edges);
    try {
        return ShiftHandle::from_graph(g);
    } catch (const EmptyShiftError&) {
        return ShiftHandle::empty(y.alphabet());
    }
}

std::vector<ShiftHandle> closure_of_periodic(const ShiftHandle& s) {
    std::vector<ShiftHandle> out;
    if (s.is_empty()) return out;
    const LabeledGraph& g = s.presentation();
    for (const auto& comp : scc_decompose(g)) {
        if (!comp.cycle_bearing) continue;
        std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : comp.vertices) in[static_cast<size_t>(v)] = 1;
        LabeledGraph piece = restrict_to_subgraph(
            g, [&](int v) { return in[static_cast<size_t>(v)] != 0; }, [](int) { return true; });
        ShiftHandle h = ShiftHandle::from_graph(piece);
        bool dup = false;
        for (const auto& o : out) dup = dup || shifts_equal(o, h);
        if (!dup) out.push_back(h);
    }
    return out;
}

namespace {

void grow(ComponentTree& tree, int node, int depth_max) {
    ShiftHandle d = derived_shift(tree.components[static_cast<size_t>(node)].closure);
    tree.components[static_cast<size_t>(node)].derived = d;
    if (d.is_empty()) return;
    const int level = tree.components[static_cast<size_t>(node)].level + 1;
    if (level > depth_max) throw DepthBudgetExceeded("component tree deeper than " + std::to_string(depth_max));
    for (const ShiftHandle& piece : closure_of_periodic(d)) {
        bool dup = false;
        for (const auto& c : tree.components)
            if (c.level == level && shifts_equal(c.closure, piece)) dup = true;
        if (dup) continue;
        tree.components.push_back({level, piece, node, {}});
        tree.depth = std::max(tree.depth, level);
        grow(tree, static_cast<int>(tree.components.size()) - 1, depth_max);
    }
}

std::vector<Symbol> name_map(const Alphabet& from, const Alphabet& to) {
    std::vector<Symbol> m(static_cast<size_t>(from.size()), -1);
    for (Symbol a = 0; a < from.size(); ++a)
        if (auto b = to.find(from.name(a))) m[static_cast<size_t>(a)] = *b;
    return m;
}

// BFS over (state of u's language automaton, subset of v's graph reached from
// all its vertices). `visit` returns true to stop.
template <class Visit>
bool joint_search(const ShiftHandle& u, const LabeledGraph& vg, Visit visit) {
    const SubsetAutomaton du = determinize(u.presentation());
    const auto map = name_map(u.alphabet(), vg.alphabet());
    std::set<std::pair<int, VertexSet>> seen;
    std::queue<std::pair<int, VertexSet>> q;
    q.push({0, vg.all_vertices()});
    seen.insert(q.front());
    while (!q.empty()) {
        auto [s, sub] = q.front();
        q.pop();
        for (Symbol a = 0; a < u.alphabet().size(); ++a) {
            int t = du.next(s, a);
            if (t < 0) continue;
            VertexSet nsub;
            if (map[static_cast<size_t>(a)] >= 0) nsub = step_forward(vg, sub, map[static_cast<size_t>(a)]);
            if (visit(nsub)) return true;
            if (nsub.empty()) continue;
            std::pair<int, VertexSet> key{t, std::move(nsub)};
            if (seen.insert(key).second) q.push(std::move(key));
        }
    }
    return false;
}

} // namespace

ComponentTree component_tree(const ShiftHandle& y, int depth_max) {
    if (y.is_empty()) throw EmptyShiftError("component tree of the empty shift");
    ComponentTree tree;
    tree.root = y;
    tree.components.push_back({0, y, -1, {}});
    grow(tree, 0, depth_max);
    return tree;
}

bool language_contained(const ShiftHandle& u, const ShiftHandle& v) {
    if (u.is_empty()) return true;
    if (v.is_empty()) return false;
    return !joint_search(u, v.presentation(), [](const VertexSet& s) { return s.empty(); });
}

bool meets_synchronizing(const ShiftHandle& u, const ShiftHandle& v) {
    if (u.is_empty() || v.is_empty()) return false;
    return joint_search(u, v.fischer().graph, [](const VertexSet& s) { return s.size() == 1; });
}

int locate_component(const ShiftHandle& u, const ComponentTree& tree) {
    if (u.is_empty()) throw NotContainedError("the empty shift lies in no component");
    if (!language_contained(u, tree.root)) throw NotContainedError("shift is not contained in the tree root");
    int node = 0;
    while (true) {
        const ComponentNode& c = tree.components[static_cast<size_t>(node)];
        if (meets_synchronizing(u, c.closure)) return node;
        int next = -1;
        for (size_t i = 0; i < tree.components.size() && next < 0; ++i)
            if (tree.components[i].parent == node && language_contained(u, tree.components[i].closure))
                next = static_cast<int>(i);
        if (next < 0) throw NotContainedError("no component below level " + std::to_string(c.level) + " contains the shift");
        node = next;
    }
}

} // namespace soficlab
