#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

enum class Mode { strong, weak };
enum class DomainConstraint { any, full };
enum class Enumeration { exists, all, minimal, maximal };

const char* to_string(Mode mode) noexcept;
const char* to_string(DomainConstraint domain) noexcept;
const char* to_string(Enumeration enumeration) noexcept;

struct Limits {
    std::uint64_t node_budget = 100'000'000;
    std::chrono::milliseconds time_budget{60'000};
    unsigned workers = 1;
};

// Built-in limits overridden by RELGRAPH_NODE_BUDGET and
// RELGRAPH_TIME_BUDGET_MS when those are set to positive integers.
Limits default_limits();

// Largest source graph the search accepts (columns are 64-bit masks).
inline constexpr std::size_t solver_vertex_limit = 64;

struct SolveQuery {
    Graph g;
    Graph h;
    Mode mode = Mode::strong;
    DomainConstraint domain = DomainConstraint::any;
    Enumeration enumeration = Enumeration::all;
    Limits limits = default_limits();
    // Pairs (x, b) every reported solution must contain.
    std::vector<Pair> required;
    // Solve connected components of H separately and recombine.
    bool split_components = true;
    // Consult structural certificates and complete-graph shortcuts first.
    bool use_certificates = true;
};

enum class CertificateKind { components, chromatic, complete_char, path_char, distance, radius, exhausted };

const char* to_string(CertificateKind kind) noexcept;

// Why an instance has no solution. `lhs`/`rhs` are the two evaluated sides of
// the violated inequality; `detail` states it in words.
struct Certificate {
    CertificateKind kind = CertificateKind::exhausted;
    long long lhs = 0;
    long long rhs = 0;
    std::string detail;
};

struct SolutionSet {
    // Canonical order (operator<=> on Relation); each re-validated.
    std::vector<Relation> solutions;
    // Indices into `solutions`; filled for minimal/maximal queries and only
    // authoritative when `complete`.
    std::vector<std::size_t> minimal;
    std::vector<std::size_t> maximal;
    bool complete = true;
    std::uint64_t nodes = 0;
};

struct SolveResult {
    SolutionSet set;
    // Present exactly when the search is complete and found nothing.
    std::optional<Certificate> certificate;
};

// Throws has_loops for weak queries with a looped G, cap_exceeded beyond
// solver_vertex_limit, universe_mismatch for out-of-range required pairs.
SolveResult solve(const SolveQuery& q);

struct SearchStatus {
    bool complete = true; // false if the budget ran out
    bool stopped = false; // the visitor asked to stop
    std::uint64_t nodes = 0;
};

// Raw search: calls `visit` on each solution in search order until it
// returns false. No certificates, single worker.
SearchStatus for_each_solution(const SolveQuery& q, const std::function<bool(const Relation&)>& visit);

// First violated structural invariant that rules out every solution, if any.
std::optional<Certificate> certify(const Graph& g, const Graph& h, Mode mode, DomainConstraint domain);
// Recomputes the invariant named by `c` on (g, h); true iff it still fails.
bool recheck(const Certificate& c, const Graph& g, const Graph& h, Mode mode, DomainConstraint domain);

// Decision and witness for a complete source graph K_k without search.
// nullopt when g is not complete (or h has loops in strong mode).
struct CompleteDecision {
    bool solvable = false;
    std::optional<Relation> witness;
};
std::optional<CompleteDecision> decide_complete_source(const Graph& g, const Graph& h, Mode mode,
                                                       DomainConstraint domain);

// Residual instance left after pinning S to D: both graphs with the closed
// neighbourhoods of the pinned sets removed. `*_vertices` map residual
// vertices back to the originals. Every solution R of the original instance
// that agrees with `partial` on S x D restricts to a solution of the residual.
// The converse fails: K2 with S = D = {1} leaves two empty residuals, yet
// {(1, 1)} alone does not solve K2 * R = K2. Use the residual to prune, not
// to assemble solutions.
struct Residual {
    Graph g;
    Graph h;
    std::vector<Vertex> g_vertices;
    std::vector<Vertex> h_vertices;
};

// Throws precondition unless `partial` lies in S x D, has full domain on S,
// realises G[S] * partial = H[D], and the H residual has no isolated vertex.
Residual subgraph_reduce(const Graph& g, const Graph& h, const VertexSet& s, const VertexSet& d,
                         const Relation& partial);

// G + H: Hom(G, H) is nonempty iff (G + H) * R = H for some full-domain R.
Graph reduce_hom_to_fulrel(const Graph& g, const Graph& h);
// Every vertex of G replaced by |V_H| copies with the same neighbourhood:
// a full-domain R with G * R = H exists iff the result has a homomorphism to
// H that is onto both the vertices and the edges of H.
Graph reduce_fulrel_to_shom(const Graph& g, const Graph& h);

} // namespace relgraph
