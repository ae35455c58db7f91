#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace closedgraphs {

/// Index of a vertex inside a Graph. Indices follow the sorted order of the
/// vertex names, so comparing indices is comparing names.
using Vertex = std::size_t;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph over named vertices with no loops and no isolated
/// vertices. Immutable after construction.
class Graph {
public:
    using NamedEdge = std::pair<std::string, std::string>;

    /// Builds the graph spanned by `edges`. Duplicate and reversed edges
    /// collapse. Throws InputError on a loop or an empty edge list.
    explicit Graph(const std::vector<NamedEdge>& edges);

    std::size_t size() const { return names_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Vertex v) const { return names_.at(v); }

    std::optional<Vertex> find(std::string_view name) const;
    /// Like find(), but throws InputError for an unknown name.
    Vertex index_of(std::string_view name) const;

    bool adjacent(Vertex u, Vertex v) const { return adj_[u * names_.size() + v] != 0; }
    const VertexSet& neighbors(Vertex v) const { return neighbors_.at(v); }

    /// Edges as index pairs (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Induced subgraph on `vertices`. The result must be free of isolated
    /// vertices (true for unions of components).
    Graph induced(const VertexSet& vertices) const;

    std::vector<std::string> names_of(const VertexSet& vertices) const;
    VertexSet indices_of(const std::vector<std::string>& names) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.names_ == b.names_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::string> names_;
    std::vector<char> adj_;
    std::vector<VertexSet> neighbors_;
    std::size_t edge_count_ = 0;
};

/// Parses the edge-list text format: one "u v" pair per line, blank lines and
/// lines starting with '#' ignored.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::filesystem::path& path);

/// Bijection from the vertex names of a graph onto 1..n.
class Labelling {
public:
    Labelling() = default;

    /// `order[k]` receives label k + 1. Throws InputError on repeated names.
    static Labelling from_order(std::vector<std::string> order);
    /// Labels the vertices of `g` in ascending name order.
    static Labelling identity(const Graph& g);

    std::size_t size() const { return order_.size(); }
    /// Throws InputError when `name` is not labelled.
    int label_of(std::string_view name) const;
    const std::string& name_at(int label) const { return order_.at(static_cast<std::size_t>(label - 1)); }
    const std::vector<std::string>& order() const { return order_; }

    /// True iff the domain is exactly V(g).
    bool covers_exactly(const Graph& g) const;
    /// Labels indexed by vertex of `g`. Throws InputError unless covers_exactly(g).
    std::vector<int> labels_for(const Graph& g) const;

    /// Appends `other` with its labels shifted past ours.
    Labelling concatenated(const Labelling& other) const;

    friend bool operator==(const Labelling& a, const Labelling& b) { return a.order_ == b.order_; }

private:
    std::vector<std::string> order_;
    std::map<std::string, int, std::less<>> label_;
};

struct NeighborhoodSplit {
    VertexSet below;
    VertexSet above;
};

NeighborhoodSplit split_neighborhood(const Graph& g, const Labelling& lab, Vertex j);
NeighborhoodSplit split_neighborhood(const Graph& g, const Labelling& lab, std::string_view j);

/// Throws InputError when a member of `s` is out of range.
bool is_clique(const Graph& g, const VertexSet& s);

/// Two non-adjacent neighbours of `center` lying on the same side of it.
struct ClosednessWitness {
    Vertex center;
    Vertex first;
    Vertex second;
    bool above;  // both neighbours carry larger labels than the center
};

struct ClosednessCheck {
    bool closed = true;
    std::optional<ClosednessWitness> witness;
};

/// Closedness with respect to a labelling, via cliqueness of the lower and
/// upper neighbourhoods of every vertex.
ClosednessCheck is_closed_wrt(const Graph& g, const Labelling& lab);

/// Closedness with respect to a labelling, checked edge pair by edge pair:
/// for edges {i,j}, {k,l} with i<j, k<l, i=k forces {j,l} and j=l forces {i,k}.
bool is_closed_wrt_edge_pairs(const Graph& g, const Labelling& lab);

struct Claw {
    Vertex center;
    std::array<Vertex, 3> leaves;
};

/// First vertex (in index order) with three pairwise non-adjacent
/// neighbours, leaves chosen lexicographically smallest.
std::optional<Claw> find_induced_claw(const Graph& g);

/// Components ordered by their smallest vertex name.
std::vector<Graph> connected_components(const Graph& g);
std::vector<VertexSet> component_vertex_sets(const Graph& g);

}  // namespace closedgraphs
