#include "relgraph/retract.hpp"

#include <string>

#include "deletion.hpp"
#include "relgraph/algebra.hpp"
#include "relgraph/composition.hpp"
#include "relgraph/error.hpp"

namespace relgraph {

bool property_n(const Graph& g)
{
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < g.order(); ++y)
            if (x != y && g.neighbors(x).is_subset_of(g.neighbors(y)))
                return false;
    return true;
}

bool property_n_star(const Graph& g)
{
    for (Vertex x = 0; x < g.order(); ++x) {
        const auto& nx = g.neighbors(x);
        VertexSet u(g.order());
        bool any = false;
        for (Vertex y = 0; y < g.order(); ++y) {
            if (y != x && g.neighbors(y).is_subset_of(nx)) {
                u |= g.neighbors(y);
                any = true;
            }
        }
        if (any && u == nx)
            return false;
    }
    return true;
}

namespace {

bool contains_identity_on(const Relation& r, const VertexSet& sub)
{
    for (auto x = sub.find_first(); x != VertexSet::npos; x = sub.find_next(x))
        if (!r.contains(x, x))
            return false;
    return true;
}

bool square_over(const Graph& g, const VertexSet& sub, const Relation& r)
{
    return sub.size() == g.order() && r.domain_size() == g.order() && r.image_size() == g.order();
}

} // namespace

bool is_retraction(const Graph& g, const VertexSet& sub, const Relation& r)
{
    if (!square_over(g, sub, r) || !r.has_full_domain() || !r.image().is_subset_of(sub) ||
        !contains_identity_on(r, sub))
        return false;
    // Drop the unused target columns so the image universe is sub itself.
    const auto narrowed = transpose(restrict_domain(transpose(r), sub));
    return apply_strong(g, narrowed) == induced_subgraph(g, sub);
}

bool is_coretraction(const Graph& g, const VertexSet& sub, const Relation& r)
{
    if (!square_over(g, sub, r) || !r.domain().is_subset_of(sub) || !contains_identity_on(r, sub) ||
        !r.has_full_image())
        return false;
    return apply_strong(induced_subgraph(g, sub), restrict_domain(r, sub)) == g;
}

namespace {

// Homomorphism G -> G[W] fixing W pointwise; vertices outside W are placed
// in ascending order onto the lowest admissible vertex of W.
struct RetractionSearch {
    const Graph& g;
    const VertexSet& w;
    std::vector<Vertex> outside;
    std::vector<Vertex> map;
    std::vector<bool> placed;

    bool extend(std::size_t i)
    {
        if (i == outside.size())
            return true;
        const auto x = outside[i];
        for (auto t = w.find_first(); t != VertexSet::npos; t = w.find_next(t)) {
            bool ok = true;
            const auto& nb = g.neighbors(x);
            for (auto y = nb.find_first(); y != VertexSet::npos && ok; y = nb.find_next(y)) {
                if (y == x)
                    ok = g.adjacent(t, t);
                else if (placed[y])
                    ok = g.adjacent(t, map[y]);
            }
            if (!ok)
                continue;
            map[x] = t;
            placed[x] = true;
            if (extend(i + 1))
                return true;
            placed[x] = false;
        }
        return false;
    }
};

bool next_combination(std::vector<Vertex>& c, std::size_t n)
{
    const auto k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (auto j = i + 1; j < k; ++j)
                c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

GraphCore finish_core(const Graph& g, std::vector<Vertex> kept, std::vector<Vertex> map)
{
    GraphCore out;
    const auto keep = make_set(g.order(), kept);
    out.core = induced_subgraph(g, keep);
    out.kept = std::move(kept);
    out.map = std::move(map);
    out.retraction = Relation::from_function(out.map, g.order());
    return out;
}

} // namespace

GraphCore graph_core(const Graph& g, std::size_t cap)
{
    const auto n = g.order();
    if (n > cap)
        throw Error(ErrorKind::cap_exceeded, "graph core search is limited to " + std::to_string(cap) + " vertices");
    if (n == 0)
        return finish_core(g, {}, {});
    for (Vertex o = 0; o < n; ++o)
        if (g.has_loop(o))
            return finish_core(g, {o}, std::vector<Vertex>(n, o));

    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Vertex> subset(k);
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = i;
        do {
            const auto w = make_set(n, subset);
            RetractionSearch s{g, w, members(~w), std::vector<Vertex>(n), std::vector<bool>(n, false)};
            for (auto x : subset) {
                s.map[x] = x;
                s.placed[x] = true;
            }
            if (s.extend(0))
                return finish_core(g, subset, s.map);
        } while (next_combination(subset, n));
    }
    throw std::logic_error("graph core search exhausted without the trivial retraction");
}

CoreResult cocore(const Graph& g, DeletionMode mode)
{
    return detail::run_deletion(g, mode, false);
}

Graph cocore_oracle(const Graph& g, std::size_t cap)
{
    const auto n = g.order();
    if (n > cap)
        throw Error(ErrorKind::cap_exceeded, "cocore oracle is limited to " + std::to_string(cap) + " vertices");
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<Vertex> subset(k);
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = i;
        do {
            const auto sub = induced_subgraph(g, subset);
            SolveQuery q;
            q.g = sub;
            q.h = g;
            q.enumeration = Enumeration::exists;
            for (std::size_t i = 0; i < k; ++i)
                q.required.emplace_back(i, subset[i]);
            auto r = solve(q);
            if (!r.set.complete)
                throw Error(ErrorKind::cap_exceeded, "cocore oracle search ran out of budget");
            if (!r.set.solutions.empty())
                return cocore_oracle(sub, cap);
        } while (next_combination(subset, n));
    }
    return g;
}

bool all_self_relations_are_automorphisms(const Graph& g)
{
    return property_n(g);
}

SelfRelationAudit audit_self_relations(const Graph& g, DomainConstraint domain, std::size_t cap)
{
    if (g.order() > cap)
        throw Error(ErrorKind::cap_exceeded, "Rel(G, G) enumeration is limited to " + std::to_string(cap) +
                                                 " vertices");
    SelfRelationAudit audit;
    SolveQuery q;
    q.g = g;
    q.h = g;
    q.domain = domain;
    auto status = for_each_solution(q, [&](const Relation& r) {
        ++audit.solutions;
        bool automorphism = r.is_functional() && r.has_full_domain() && r.is_injective();
        if (automorphism) {
            for (auto [x, y] : g.edges()) {
                const auto fx = r.image_of(x).find_first();
                const auto fy = r.image_of(y).find_first();
                automorphism = automorphism && g.adjacent(fx, fy);
            }
            automorphism = automorphism && g.edge_count() == apply_strong(g, r).edge_count();
        }
        if (!automorphism) {
            audit.all_automorphisms = false;
            audit.counterexample = r;
            return false;
        }
        return true;
    });
    audit.complete = status.complete;
    return audit;
}

} // namespace relgraph
