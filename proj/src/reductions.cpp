#include <string>

#include "relgraph/algebra.hpp"
#include "relgraph/composition.hpp"
#include "relgraph/error.hpp"
#include "relgraph/solver.hpp"

namespace relgraph {

namespace {

VertexSet outside_closed_neighbourhoods(const Graph& g, const VertexSet& s)
{
    VertexSet covered(g.order());
    for (auto x = s.find_first(); x != VertexSet::npos; x = s.find_next(x))
        covered |= g.closed_neighbors(x);
    return ~covered;
}

Relation restrict_image(const Relation& r, const VertexSet& keep)
{
    const auto targets = members(keep);
    std::vector<VertexSet> rows(r.domain_size(), VertexSet(targets.size()));
    for (Vertex x = 0; x < r.domain_size(); ++x)
        for (std::size_t i = 0; i < targets.size(); ++i)
            if (r.contains(x, targets[i]))
                rows[x].set(i);
    return Relation::from_rows(targets.size(), std::move(rows));
}

} // namespace

Residual subgraph_reduce(const Graph& g, const Graph& h, const VertexSet& s, const VertexSet& d,
                         const Relation& partial)
{
    if (s.size() != g.order() || d.size() != h.order() || partial.domain_size() != g.order() ||
        partial.image_size() != h.order())
        throw Error(ErrorKind::universe_mismatch, "subgraph_reduce: universes differ from the graphs");
    for (Vertex x = 0; x < g.order(); ++x) {
        const auto& row = partial.image_of(x);
        if (s.test(x) && row.none())
            throw Error(ErrorKind::precondition, "pinned vertex " + std::to_string(x) + " has no image");
        if (row.any() && (!s.test(x) || !row.is_subset_of(d)))
            throw Error(ErrorKind::precondition, "partial relation leaves S x D at source " + std::to_string(x));
    }
    const auto inner = restrict_image(restrict_domain(partial, s), d);
    if (!inner.has_full_image())
        throw Error(ErrorKind::precondition, "partial relation does not reach every vertex of D");
    if (!(apply_strong(induced_subgraph(g, s), inner) == induced_subgraph(h, d)))
        throw Error(ErrorKind::precondition, "G[S] * partial differs from H[D]");

    Residual out;
    const auto keep_g = outside_closed_neighbourhoods(g, s);
    const auto keep_h = outside_closed_neighbourhoods(h, d);
    out.g = induced_subgraph(g, keep_g);
    out.h = induced_subgraph(h, keep_h);
    out.g_vertices = members(keep_g);
    out.h_vertices = members(keep_h);
    if (auto iso = isolated_vertices(out.h); !iso.empty())
        throw Error(ErrorKind::precondition,
                    "H residual has isolated vertex " + std::to_string(out.h_vertices[iso.front()]));
    return out;
}

Graph reduce_hom_to_fulrel(const Graph& g, const Graph& h)
{
    return disjoint_union(g, h);
}

Graph reduce_fulrel_to_shom(const Graph& g, const Graph& h)
{
    const auto copies = h.order();
    const auto n = g.order() * copies;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (Vertex x = 0; x < g.order(); ++x)
        for (std::size_t i = 0; i < copies; ++i)
            labels.push_back(g.label(x) + "." + std::to_string(i));
    for (auto [x, y] : g.edges())
        for (std::size_t i = 0; i < copies; ++i)
            for (std::size_t j = 0; j < copies; ++j)
                edges.emplace_back(x * copies + i, y * copies + j);
    return Graph::from_edges(n, edges, std::move(labels));
}

} // namespace relgraph
