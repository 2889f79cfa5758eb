#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace soficlab {

using Symbol = int;
using Word = std::vector<Symbol>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(Symbol s) const { return symbols_.at(static_cast<size_t>(s)); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Symbol> find(std::string_view token) const;
    Symbol index(std::string_view token) const; // throws ValidationError
    // Appends a symbol, or returns the existing index.
    Symbol add(const std::string& token);

    // True when every symbol is a single character, so words can be written
    // without separators.
    bool compact() const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Symbol> index_;
};

struct Edge {
    int src = 0;
    int dst = 0;
    Symbol label = 0;
};

class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(Alphabet alphabet, std::vector<std::string> vertices, std::vector<Edge> edges);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<std::string>& vertex_names() const { return vertices_; }
    const std::string& vertex_name(int v) const { return vertices_.at(static_cast<size_t>(v)); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<size_t>(e)); }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& out_edges(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_edges(int v) const { return in_[static_cast<size_t>(v)]; }
    std::optional<int> find_vertex(std::string_view name) const;

    // Labels are pairwise distinct, i.e. the graph presents its own edge shift.
    bool labels_distinct() const;
    bool right_resolving() const;
    bool left_resolving() const;

    VertexSet all_vertices() const;

    bool operator==(const LabeledGraph& other) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// delta(S, a) = { dst(e) : label(e) = a, src(e) in S }.
VertexSet step_forward(const LabeledGraph& g, const VertexSet& from, Symbol a);
// Vertices that start some a-labelled edge into `to`.
VertexSet step_backward(const LabeledGraph& g, const VertexSet& to, Symbol a);
VertexSet run_forward(const LabeledGraph& g, VertexSet from, const Word& w);

struct TrimResult {
    LabeledGraph graph;
    std::vector<int> vertex_origin; // new vertex -> old vertex
    std::vector<int> edge_origin;   // new edge -> old edge
};

bool is_essential(const LabeledGraph& g);
// Maximal essential subgraph; throws EmptyShiftError when nothing survives.
TrimResult trim_with_map(const LabeledGraph& g);
LabeledGraph trim(const LabeledGraph& g);

struct Component {
    std::vector<int> vertices;
    bool cycle_bearing = false;
};
// Strongly connected components, sources first.
std::vector<Component> scc_decompose(const LabeledGraph& g);
bool is_irreducible(const LabeledGraph& g);

struct Layering {
    int period = 1;
    std::vector<int> depth;   // BFS depth from the root (vertex 0)
    std::vector<int> residue; // depth mod period
};
// Throws NotIrreducibleError unless g is essential and irreducible.
Layering cyclic_layering(const LabeledGraph& g);
int graph_period(const LabeledGraph& g);

struct HigherBlock {
    LabeledGraph graph;
    int m = 0;
    // For each new edge, the 2m+1 original edges x_{[-m,m]}; the label is that of
    // the centre edge, so the new edge maps to edge_paths[e][m].
    std::vector<std::vector<int>> edge_paths;
    // For each new vertex, the 2m original edges it stands for (empty when m = 0).
    std::vector<std::vector<int>> vertex_paths;

    int centre_edge(int new_edge) const { return edge_paths[static_cast<size_t>(new_edge)][static_cast<size_t>(m)]; }
    // Recode a periodic edge sequence of g (given by one period) into new edges.
    std::vector<int> encode_cycle(const std::vector<int>& cycle) const;
};
HigherBlock higher_block(const LabeledGraph& g, int m);

using VertexPredicate = std::function<bool(int)>;
using EdgePredicate = std::function<bool(int)>;
// Induced labelled subgraph on kept vertices/edges, trimmed.
TrimResult restrict_with_map(const LabeledGraph& g, const VertexPredicate& keep_vertex,
                             const EdgePredicate& keep_edge);
LabeledGraph restrict_to_subgraph(const LabeledGraph& g, const VertexPredicate& keep_vertex,
                                  const EdgePredicate& keep_edge);

LabeledGraph reverse(const LabeledGraph& g);
// Replaces labels via `relabel`, which maps old symbols to symbols of `target`.
LabeledGraph relabel(const LabeledGraph& g, const Alphabet& target, const std::vector<Symbol>& relabel);
LabeledGraph over_alphabet(const LabeledGraph& g, const Alphabet& target);
// Alphabet containing only the symbols that occur as labels, in g's order.
Alphabet used_alphabet(const LabeledGraph& g);

} // namespace soficlab
