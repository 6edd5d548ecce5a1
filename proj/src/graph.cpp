#include "relgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "relgraph/error.hpp"

namespace relgraph {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::universe_mismatch: return "universe-mismatch";
    case ErrorKind::image_not_full: return "image-not-full";
    case ErrorKind::has_loops: return "has-loops";
    case ErrorKind::hall_satisfied: return "hall-satisfied";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::precondition: return "precondition-violated";
    case ErrorKind::parse: return "parse-error";
    }
    return "unknown";
}

VertexSet make_set(std::size_t universe, std::initializer_list<Vertex> list)
{
    return make_set(universe, std::span<const Vertex>(list.begin(), list.size()));
}

VertexSet make_set(std::size_t universe, std::span<const Vertex> list)
{
    VertexSet set(universe);
    for (Vertex v : list) {
        if (v >= universe)
            throw Error(ErrorKind::universe_mismatch,
                        "vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe));
        set.set(v);
    }
    return set;
}

std::vector<Vertex> members(const VertexSet& set)
{
    std::vector<Vertex> out;
    out.reserve(set.count());
    for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v))
        out.push_back(v);
    return out;
}

VertexSet full_set(std::size_t universe)
{
    VertexSet set(universe);
    set.set();
    return set;
}

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges, std::vector<std::string> labels)
{
    std::vector<VertexSet> rows(order, VertexSet(order));
    for (auto [u, v] : edges) {
        if (u >= order || v >= order)
            throw Error(ErrorKind::universe_mismatch, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                          ") outside vertex range [0," + std::to_string(order) + ")");
        rows[u].set(v);
        rows[v].set(u);
    }
    return from_rows(std::move(rows), std::move(labels));
}

Graph Graph::from_edges(std::size_t order, std::initializer_list<Edge> edges)
{
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels)
{
    const auto n = rows.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (rows[u].size() != n)
            throw Error(ErrorKind::universe_mismatch, "adjacency row " + std::to_string(u) + " has wrong width");
        for (std::size_t v = 0; v < u; ++v)
            if (rows[u].test(v) != rows[v].test(u))
                throw Error(ErrorKind::precondition,
                            "asymmetric adjacency at (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    if (!labels.empty() && labels.size() != n)
        throw Error(ErrorKind::universe_mismatch, "label table size differs from vertex count");
    Graph g;
    g.rows_ = std::move(rows);
    g.labels_ = std::move(labels);
    return g;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    std::size_t loops = 0;
    for (std::size_t v = 0; v < rows_.size(); ++v) {
        twice += rows_[v].count();
        loops += rows_[v].test(v) ? 1 : 0;
    }
    return (twice + loops) / 2;
}

VertexSet Graph::closed_neighbors(Vertex v) const
{
    auto set = rows_.at(v);
    set.set(v);
    return set;
}

bool Graph::has_loops() const
{
    for (std::size_t v = 0; v < rows_.size(); ++v)
        if (rows_[v].test(v))
            return true;
    return false;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (std::size_t u = 0; u < rows_.size(); ++u)
        for (auto v = rows_[u].find_first(); v != VertexSet::npos; v = rows_[u].find_next(v))
            if (v >= u)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const
{
    if (v >= rows_.size())
        throw Error(ErrorKind::universe_mismatch, "vertex " + std::to_string(v) + " out of range");
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    return from_rows(rows_, std::move(labels));
}

Partition::Partition(std::size_t universe, std::vector<std::vector<Vertex>> classes)
    : class_of_(universe, universe)
{
    for (auto& c : classes) {
        if (c.empty())
            throw Error(ErrorKind::precondition, "partition class is empty");
        std::sort(c.begin(), c.end());
    }
    std::sort(classes.begin(), classes.end());
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) {
            if (v >= universe)
                throw Error(ErrorKind::universe_mismatch, "partition member outside universe");
            if (class_of_[v] != universe)
                throw Error(ErrorKind::precondition, "partition classes overlap at " + std::to_string(v));
            class_of_[v] = i;
        }
    for (std::size_t v = 0; v < universe; ++v)
        if (class_of_[v] == universe)
            throw Error(ErrorKind::precondition, "partition misses vertex " + std::to_string(v));
    classes_ = std::move(classes);
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    const auto n = g.order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const auto& nb = g.neighbors(comp[head]);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v))
                if (!seen[v]) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return g.order() > 0 && components(g).size() == 1;
}

std::vector<std::vector<std::size_t>> distances(const Graph& g)
{
    const auto n = g.order();
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, unreachable));
    for (Vertex s = 0; s < n; ++s) {
        auto& row = dist[s];
        row[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            const auto& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != VertexSet::npos; v = nb.find_next(v))
                if (row[v] == unreachable) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
        }
    }
    return dist;
}

std::size_t eccentricity(const Graph& g, Vertex v)
{
    auto d = distances(g);
    return *std::max_element(d.at(v).begin(), d.at(v).end());
}

std::size_t radius(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    auto d = distances(g);
    std::size_t best = unreachable;
    for (const auto& row : d)
        best = std::min(best, *std::max_element(row.begin(), row.end()));
    return best;
}

std::size_t diameter(const Graph& g)
{
    std::size_t best = 0;
    for (const auto& row : distances(g))
        for (auto x : row)
            best = std::max(best, x);
    return best;
}

Graph complement(const Graph& g)
{
    if (g.has_loops())
        throw Error(ErrorKind::has_loops, "complement is defined for simple graphs only");
    const auto n = g.order();
    std::vector<VertexSet> rows(n);
    for (Vertex v = 0; v < n; ++v) {
        rows[v] = ~g.neighbors(v);
        rows[v].reset(v);
    }
    return Graph::from_rows(std::move(rows), g.labels());
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    if (keep.size() != g.order())
        throw Error(ErrorKind::universe_mismatch, "induced subgraph: vertex set universe differs from graph order");
    auto list = members(keep);
    return induced_subgraph(g, list);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep)
{
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const auto k = sorted.size();
    std::vector<VertexSet> rows(k, VertexSet(k));
    std::vector<std::string> labels;
    labels.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (sorted[i] >= g.order())
            throw Error(ErrorKind::universe_mismatch, "induced subgraph vertex out of range");
        labels.push_back(g.label(sorted[i]));
        for (std::size_t j = 0; j < k; ++j)
            if (g.adjacent(sorted[i], sorted[j]))
                rows[i].set(j);
    }
    return Graph::from_rows(std::move(rows), std::move(labels));
}

Graph disjoint_union(const Graph& a, const Graph& b)
{
    const auto n = a.order() + b.order();
    std::vector<Edge> edges;
    for (auto [u, v] : a.edges())
        edges.emplace_back(u, v);
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    std::vector<std::string> labels;
    if (!a.labels().empty() || !b.labels().empty()) {
        for (Vertex v = 0; v < a.order(); ++v)
            labels.push_back(a.label(v));
        for (Vertex v = 0; v < b.order(); ++v)
            labels.push_back(b.label(v));
    }
    return Graph::from_edges(n, edges, std::move(labels));
}

Graph without_loops(const Graph& g)
{
    std::vector<VertexSet> rows(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        rows[v] = g.neighbors(v);
        rows[v].reset(v);
    }
    return Graph::from_rows(std::move(rows), g.labels());
}

std::vector<Vertex> isolated_vertices(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.is_isolated(v))
            out.push_back(v);
    return out;
}

namespace {

// Smallest-last ordering reversed, so dense cores are coloured first.
std::vector<Vertex> degeneracy_order(const Graph& g)
{
    const auto n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    for (Vertex v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = n;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || deg[v] < deg[pick]))
                pick = v;
        removed[pick] = true;
        order.push_back(pick);
        const auto& nb = g.neighbors(pick);
        for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w))
            if (!removed[w])
                --deg[w];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

} // namespace

std::size_t chromatic_number(const Graph& g)
{
    if (g.has_loops())
        throw Error(ErrorKind::has_loops, "chromatic number is undefined for graphs with loops");
    const auto n = g.order();
    if (n == 0)
        return 0;
    const auto order = degeneracy_order(g);
    std::vector<std::size_t> colour(n, n);

    // greedy bound first, then branch and bound below it
    std::size_t best = 0;
    for (Vertex v : order) {
        std::vector<bool> used(n + 1, false);
        const auto& nb = g.neighbors(v);
        for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w))
            if (colour[w] < n)
                used[colour[w]] = true;
        std::size_t c = 0;
        while (used[c])
            ++c;
        colour[v] = c;
        best = std::max(best, c + 1);
    }
    std::fill(colour.begin(), colour.end(), n);

    std::function<void(std::size_t, std::size_t)> search = [&](std::size_t i, std::size_t used_colours) {
        if (used_colours >= best)
            return;
        if (i == n) {
            best = used_colours;
            return;
        }
        const auto v = order[i];
        const auto& nb = g.neighbors(v);
        auto clashes = [&](std::size_t c) {
            for (auto w = nb.find_first(); w != VertexSet::npos; w = nb.find_next(w))
                if (colour[w] == c)
                    return true;
            return false;
        };
        for (std::size_t c = 0; c < used_colours; ++c)
            if (!clashes(c)) {
                colour[v] = c;
                search(i + 1, used_colours);
                colour[v] = n;
            }
        if (used_colours + 1 < best) {
            colour[v] = used_colours;
            search(i + 1, used_colours + 1);
            colour[v] = n;
        }
    };
    search(0, 0);
    return best;
}

Graph path(std::size_t length)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < length; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(length + 1, edges);
}

Graph cycle(std::size_t length)
{
    if (length < 3)
        throw Error(ErrorKind::precondition, "cycles need at least three vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < length; ++v)
        edges.emplace_back(v, (v + 1) % length);
    return Graph::from_edges(length, edges);
}

Graph complete(std::size_t order)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(order, edges);
}

Graph empty_graph(std::size_t order)
{
    return Graph(order);
}

Graph complete_bipartite(std::size_t left, std::size_t right)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < left; ++u)
        for (Vertex v = 0; v < right; ++v)
            edges.emplace_back(u, left + v);
    return Graph::from_edges(left + right, edges);
}

} // namespace relgraph
