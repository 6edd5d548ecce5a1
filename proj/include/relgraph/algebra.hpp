#pragma once

#include <optional>
#include <vector>

#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

// R = I_A ∘ R_D ∘ R_C with an intermediate universe B that has one element per
// pair of R.
struct Decomposition {
    VertexSet domain;          // A = domain(R)
    std::vector<Pair> carrier; // carrier[b] is the pair of R that b stands for
    Relation restrict;         // I_A on the source universe
    Relation into;             // R_D: x -> every b whose pair starts at x
    Relation collapse;         // R_C: b -> second coordinate of its pair
};

Decomposition decompose(const Relation& r);

// Same relation with its source universe cut down to `keep`, renumbered in
// ascending order.
Relation restrict_domain(const Relation& r, const VertexSet& keep);

struct HallReport {
    bool satisfied = false;
    // Filled when satisfied: an injective map inside R defined on every source
    // vertex, as a relation and as a vertex table.
    std::optional<Relation> monomorphism;
    std::vector<Vertex> matching;
    // Filled when not satisfied: S with |S| > |R(S)|.
    std::optional<VertexSet> violating;
};

// Maximum bipartite matching by augmenting paths over the whole source
// universe. On failure the violating set is every source vertex reachable
// by an alternating path from the first unmatched one, which has exactly one
// element more than its image.
HallReport hall_check(const Relation& r);

struct HallSplit {
    VertexSet violating; // S
    Relation first;      // R1: V_G -> V_G'
    Graph reduced;       // G' = G * R1
    Relation second;     // R2: V_G' -> target universe of R
};

// Factors R = R1 ∘ R2 through a smaller graph. The vertices of G' are V \ S in
// ascending order followed by R(S) in ascending order; labels record which.
// Throws hall_satisfied when R has no violating set.
HallSplit nohall_split(const Graph& g, const Relation& r);
// Same construction for a caller-chosen S; throws precondition unless
// |S| > |R(S)|.
HallSplit nohall_split(const Graph& g, const Relation& r, const VertexSet& violating);

// (G * R) * R^+ == G. False whenever either composition is undefined.
bool is_reversible(const Graph& g, const Relation& r);
// Neighbourhood test: R has full domain and any two sources sharing an image
// vertex have equal open neighbourhoods.
bool reversibility_criterion(const Graph& g, const Relation& r);

} // namespace relgraph
