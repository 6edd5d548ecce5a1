#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace relgraph {

using Vertex = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<Vertex, Vertex>;

VertexSet make_set(std::size_t universe, std::initializer_list<Vertex> members = {});
VertexSet make_set(std::size_t universe, std::span<const Vertex> members);
std::vector<Vertex> members(const VertexSet& set);
VertexSet full_set(std::size_t universe);

// Finite undirected graph on vertices 0..n-1. Loops are stored as (v, v) in
// the same adjacency rows. Values are immutable once constructed.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order);

    // Builds from an edge list; duplicates collapse, (v, v) is a loop.
    static Graph from_edges(std::size_t order, std::span<const Edge> edges,
                            std::vector<std::string> labels = {});
    static Graph from_edges(std::size_t order, std::initializer_list<Edge> edges);
    // Builds from adjacency rows; throws unless rows are symmetric and in range.
    static Graph from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).test(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
    VertexSet closed_neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return rows_.at(v).count(); }

    bool has_loop(Vertex v) const { return rows_.at(v).test(v); }
    bool has_loops() const;
    bool is_simple() const { return !has_loops(); }
    // Degree zero and no loop.
    bool is_isolated(Vertex v) const { return rows_.at(v).none(); }

    // Sorted (u <= v) list, each undirected edge once.
    std::vector<Edge> edges() const;

    // External names, empty when the graph was not built from labelled input.
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::string label(Vertex v) const;
    Graph with_labels(std::vector<std::string> labels) const;

    // Equality is vertex count plus edge set; labels are presentation only.
    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

// Equivalence classes over 0..n-1, each class sorted, classes ordered by
// their smallest member.
class Partition {
public:
    Partition(std::size_t universe, std::vector<std::vector<Vertex>> classes);

    std::size_t universe() const noexcept { return class_of_.size(); }
    std::size_t size() const noexcept { return classes_.size(); }
    const std::vector<std::vector<Vertex>>& classes() const noexcept { return classes_; }
    std::size_t class_of(Vertex v) const { return class_of_.at(v); }
    bool is_discrete() const noexcept { return classes_.size() == class_of_.size(); }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::vector<Vertex>> classes_;
    std::vector<std::size_t> class_of_;
};

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
// All-pairs BFS distances; `unreachable` marks disconnected pairs.
std::vector<std::vector<std::size_t>> distances(const Graph& g);
std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t radius(const Graph& g);
std::size_t diameter(const Graph& g);

// Complement of a simple graph; throws on loops.
Graph complement(const Graph& g);
// Induced subgraph on `keep` renumbered in ascending order. Labels carry the
// original names (or original indices when `g` is unlabelled).
Graph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph disjoint_union(const Graph& a, const Graph& b);
// Irreflexive part: same graph with every loop removed.
Graph without_loops(const Graph& g);
std::vector<Vertex> isolated_vertices(const Graph& g);

// Exact chromatic number of a loop-free graph; throws on loops.
std::size_t chromatic_number(const Graph& g);

// Named families. path(k) is P_k, the path of length k on k + 1 vertices.
Graph path(std::size_t length);
Graph cycle(std::size_t length);
Graph complete(std::size_t order);
Graph empty_graph(std::size_t order);
Graph complete_bipartite(std::size_t left, std::size_t right);

} // namespace relgraph
