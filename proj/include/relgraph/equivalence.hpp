#pragma once

#include <optional>
#include <vector>

#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

// Quotient by equal open neighbourhoods. `collapse` sends each vertex to its
// class; thin * collapse^+ reproduces the source.
struct ThinQuotient {
    Graph source;
    Partition partition;
    Graph thin;
    Relation collapse;
};

ThinQuotient thin_quotient(const Graph& g);
bool is_thin(const Graph& g);

enum class EquivalenceKind { strong, weak };

// strong: G * forward = H, H * backward = G, backward = forward^+.
// weak: G * forward = H, H * backward = G, unrelated relations.
struct EquivalenceWitness {
    EquivalenceKind kind = EquivalenceKind::strong;
    Relation forward;
    Relation backward;
};

// Re-applies both relations and checks the claimed graphs come out exactly.
bool witness_holds(const EquivalenceWitness& w, const Graph& g, const Graph& h);

std::optional<EquivalenceWitness> strongly_equivalent(const Graph& g, const Graph& h);
std::optional<EquivalenceWitness> weakly_equivalent(const Graph& g, const Graph& h);

// How the deletion loops of the R-core and cocore algorithms read
// neighbourhoods.
//   fixpoint: neighbourhoods restricted to the surviving vertices, passes
//             repeated until nothing changes.
//   literal:  one ascending pass, comparisons against the original
//             neighbourhoods of the vertices still present.
enum class DeletionMode { fixpoint, literal };

// Induced subgraph on `kept` together with relations in both directions:
// g * to_core = core and core * from_core = g. `to_core` is empty for cocores,
// which only guarantee the second direction.
struct CoreResult {
    Graph core;
    std::vector<Vertex> kept;
    std::optional<Relation> to_core;
    Relation from_core;
};

CoreResult rcore(const Graph& g, DeletionMode mode = DeletionMode::fixpoint);

inline constexpr std::size_t oracle_cap = 7;

// Smallest graph weakly equivalent to g by exhaustive search over all graphs
// of order at most |V_G|, in canonical labelling. Throws cap_exceeded above
// `cap` vertices.
Graph rcore_oracle(const Graph& g, std::size_t cap = oracle_cap);

} // namespace relgraph
