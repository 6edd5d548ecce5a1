#include "relgraph/composition.hpp"

#include <string>

#include "relgraph/error.hpp"

namespace relgraph {

namespace {

void check_universes(std::size_t order, const Relation& r)
{
    if (r.domain_size() != order)
        throw Error(ErrorKind::universe_mismatch, "relation domain universe has " + std::to_string(r.domain_size()) +
                                                      " elements, graph has " + std::to_string(order) + " vertices");
}

void check_image(const Relation& r)
{
    const auto img = r.image();
    if (!img.all()) {
        auto missing = (~img).find_first();
        throw Error(ErrorKind::image_not_full, "target vertex " + std::to_string(missing) + " has no preimage");
    }
}

} // namespace

Graph apply_strong(const Graph& g, const Relation& r)
{
    check_universes(g.order(), r);
    check_image(r);
    const auto n = g.order();
    const auto m = r.image_size();
    // reach[x] = R(N(x)): every target adjacent to something x maps to.
    std::vector<VertexSet> reach(n, VertexSet(m));
    for (Vertex x = 0; x < n; ++x) {
        const auto& nb = g.neighbors(x);
        for (auto y = nb.find_first(); y != VertexSet::npos; y = nb.find_next(y))
            reach[x] |= r.image_of(y);
    }
    std::vector<VertexSet> rows(m, VertexSet(m));
    for (Vertex x = 0; x < n; ++x) {
        const auto& img = r.image_of(x);
        for (auto u = img.find_first(); u != VertexSet::npos; u = img.find_next(u))
            rows[u] |= reach[x];
    }
    return Graph::from_rows(std::move(rows));
}

Graph apply_weak(const Graph& g, const Relation& r)
{
    if (g.has_loops())
        throw Error(ErrorKind::has_loops, "weak composition needs a simple source graph");
    return without_loops(apply_strong(g, r));
}

WeightedGraph::WeightedGraph(std::size_t order) : w_(order, std::vector<Weight>(order)) {}

WeightedGraph WeightedGraph::from_graph(const Graph& g)
{
    WeightedGraph out(g.order());
    for (auto [u, v] : g.edges())
        out.set_weight(u, v, Weight(1));
    return out;
}

void WeightedGraph::set_weight(Vertex u, Vertex v, Weight w)
{
    w_.at(u).at(v) = w;
    w_.at(v).at(u) = w;
}

Graph WeightedGraph::support() const
{
    const auto n = order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (w_[u][v].numerator() > 0)
                rows[u].set(v);
    return Graph::from_rows(std::move(rows));
}

WeightedGraph apply_weighted(const WeightedGraph& g, const Relation& r)
{
    check_universes(g.order(), r);
    const auto m = r.image_size();
    WeightedGraph out(m);
    const auto pairs = r.pairs();
    for (auto [x, u] : pairs)
        for (auto [y, v] : pairs) {
            const auto& w = g.weight(x, y);
            // Boost 1.74 rational vs int comparisons recurse forever under
            // C++20 rewritten operators, so test the numerator instead.
            if (w.numerator() != 0)
                out.w_[u][v] += w;
        }
    return out;
}

} // namespace relgraph
