#pragma once

#include <optional>
#include <vector>

#include "relgraph/equivalence.hpp"
#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"
#include "relgraph/solver.hpp"

namespace relgraph {

// No two distinct vertices with N(x) ⊆ N(y).
bool property_n(const Graph& g);
// No vertex whose neighbourhood is the union of a nonempty family of other
// vertices' neighbourhoods. Testing the family of all contained
// neighbourhoods suffices.
bool property_n_star(const Graph& g);

// Relations here are over the vertex indices of g in both coordinates.
// Retraction: R has full domain, lands in `sub`, contains (x, x) for x in
// `sub`, and G * R = G[sub].
bool is_retraction(const Graph& g, const VertexSet& sub, const Relation& r);
// Coretraction: R starts in `sub`, contains (x, x) for x in `sub`, and
// G[sub] * R = G.
bool is_coretraction(const Graph& g, const VertexSet& sub, const Relation& r);

inline constexpr std::size_t graph_core_cap = 10;

struct GraphCore {
    Graph core;
    std::vector<Vertex> kept;
    // Retraction as a vertex map onto `kept` (identity there) and as a
    // relation over the vertex indices of g.
    std::vector<Vertex> map;
    Relation retraction;
};

// Smallest induced subgraph G retracts onto, trying vertex sets by size then
// lexicographically. A graph with a loop retracts onto its first looped
// vertex. Throws cap_exceeded above `cap` vertices.
GraphCore graph_core(const Graph& g, std::size_t cap = graph_core_cap);

// Cocore by repeated deletion of vertices whose neighbourhood is the union of
// the neighbourhoods it contains. from_core is the coretraction
// (core * from_core = g); to_core is not set.
CoreResult cocore(const Graph& g, DeletionMode mode = DeletionMode::fixpoint);

// Minimal coretract by exhaustive search over induced subgraphs, smallest
// first. Throws cap_exceeded above `cap` vertices.
Graph cocore_oracle(const Graph& g, std::size_t cap = oracle_cap);

// Every solution of G * R = G is an automorphism exactly when G has
// property N; this answers from the predicate alone.
bool all_self_relations_are_automorphisms(const Graph& g);

inline constexpr std::size_t self_relation_cap = 6;

struct SelfRelationAudit {
    bool all_automorphisms = true;
    std::size_t solutions = 0; // visited before stopping
    std::optional<Relation> counterexample;
    bool complete = true;
};

// Walks Rel(G, G) with the solver and stops at the first solution that is not
// an automorphism.
SelfRelationAudit audit_self_relations(const Graph& g, DomainConstraint domain = DomainConstraint::any,
                                       std::size_t cap = self_relation_cap);

} // namespace relgraph
