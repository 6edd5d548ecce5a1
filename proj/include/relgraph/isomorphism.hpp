#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relgraph/graph.hpp"

namespace relgraph {

// Vertex bijection f with u~v in G iff f(u)~f(v) in H, or nullopt. Vertices of
// G are placed in ascending order, each onto the lowest admissible vertex of
// H, so the returned map is reproducible.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h);
bool is_isomorphic(const Graph& g, const Graph& h);

// Largest order handled by canonical_form.
inline constexpr std::size_t canonical_limit = 10;

struct CanonicalForm {
    // Adjacency bits of pairs (i, j), i <= j, under `order`, taken column by
    // column (j ascending) with the first pair most significant.
    std::uint64_t code = 0;
    // order[i] is the vertex of the input placed at position i.
    std::vector<Vertex> order;
};

// Minimum code over all vertex orders compatible with colour refinement.
// Two graphs of equal order are isomorphic iff their codes agree.
CanonicalForm canonical_form(const Graph& g);
// The graph relabelled by canonical_form(g).order.
Graph canonical_graph(const Graph& g);

// Every graph on exactly `order` vertices up to isomorphism, in canonical
// relabelling, sorted by canonical code. Loops are included when
// `with_loops` is set.
std::vector<Graph> graphs_of_order(std::size_t order, bool with_loops = false);
// graphs_of_order for 1..max_order concatenated.
std::vector<Graph> graphs_up_to(std::size_t max_order, bool with_loops = false);

} // namespace relgraph
