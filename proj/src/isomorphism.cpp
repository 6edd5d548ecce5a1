#include "relgraph/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "relgraph/error.hpp"

namespace relgraph {

namespace {

struct Matcher {
    const Graph& g;
    const Graph& h;
    std::vector<Vertex> map;
    VertexSet used;

    bool extend(Vertex x)
    {
        if (x == g.order())
            return true;
        for (Vertex y = 0; y < h.order(); ++y) {
            if (used.test(y) || g.degree(x) != h.degree(y) || g.has_loop(x) != h.has_loop(y))
                continue;
            bool ok = true;
            for (Vertex p = 0; p < x && ok; ++p)
                ok = g.adjacent(x, p) == h.adjacent(y, map[p]);
            if (!ok)
                continue;
            map[x] = y;
            used.set(y);
            if (extend(x + 1))
                return true;
            used.reset(y);
        }
        return false;
    }
};

std::vector<std::size_t> degree_profile(const Graph& g)
{
    std::vector<std::size_t> out;
    for (Vertex v = 0; v < g.order(); ++v)
        out.push_back(2 * g.degree(v) + (g.has_loop(v) ? 1 : 0));
    std::sort(out.begin(), out.end());
    return out;
}

// Stable colour refinement; colour ids are ranks of isomorphism-invariant
// signatures, so equal graphs up to relabelling get equal colour classes.
std::vector<std::size_t> refine_colours(const Graph& g)
{
    const auto n = g.order();
    std::vector<std::size_t> colour(n);
    {
        std::vector<std::pair<bool, std::size_t>> keys(n);
        for (Vertex v = 0; v < n; ++v)
            keys[v] = {g.has_loop(v), g.degree(v)};
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin();
    }
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            const auto& nb = g.neighbors(v);
            for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
                sig[v].second.push_back(colour[u]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (Vertex v = 0; v < n; ++v)
            colour[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
        if (sorted.size() == classes)
            return colour;
        classes = sorted.size();
    }
}

struct Canoniser {
    const Graph& g;
    std::size_t n;
    std::size_t total_bits;
    std::vector<std::vector<Vertex>> cells{};
    std::vector<std::size_t> cell_at{}; // cell index for each position
    std::vector<Vertex> order{};
    VertexSet placed{};
    std::uint64_t best = 0;
    std::vector<Vertex> best_order{};
    bool have_best = false;

    // Bits of the code fixed once positions 0..j are placed.
    static std::size_t bits_through(std::size_t j) { return (j + 1) * (j + 2) / 2; }

    void search(std::size_t pos, std::uint64_t prefix)
    {
        if (pos == n) {
            if (!have_best || prefix < best) {
                best = prefix;
                best_order = order;
                have_best = true;
            }
            return;
        }
        for (auto v : cells[cell_at[pos]]) {
            if (placed.test(v))
                continue;
            std::uint64_t next = prefix;
            for (std::size_t i = 0; i < pos; ++i)
                next = (next << 1) | (g.adjacent(order[i], v) ? 1u : 0u);
            next = (next << 1) | (g.has_loop(v) ? 1u : 0u);
            if (have_best) {
                const auto shift = total_bits - bits_through(pos);
                const auto best_prefix = best >> shift;
                if (next > best_prefix)
                    continue;
            }
            order[pos] = v;
            placed.set(v);
            search(pos + 1, next);
            placed.reset(v);
        }
    }
};

} // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h)
{
    if (g.order() != h.order() || g.edge_count() != h.edge_count() || degree_profile(g) != degree_profile(h))
        return std::nullopt;
    Matcher m{g, h, std::vector<Vertex>(g.order()), VertexSet(h.order())};
    if (!m.extend(0))
        return std::nullopt;
    return m.map;
}

bool is_isomorphic(const Graph& g, const Graph& h)
{
    return find_isomorphism(g, h).has_value();
}

CanonicalForm canonical_form(const Graph& g)
{
    const auto n = g.order();
    if (n > canonical_limit)
        throw Error(ErrorKind::cap_exceeded, "canonical form supports at most " + std::to_string(canonical_limit) +
                                                 " vertices");
    const auto colour = refine_colours(g);
    const auto ncolours = n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    Canoniser c{g, n, n * (n + 1) / 2};
    c.cells.resize(ncolours);
    c.order.resize(n);
    c.placed.resize(n);
    for (Vertex v = 0; v < n; ++v)
        c.cells[colour[v]].push_back(v);
    for (std::size_t k = 0; k < ncolours; ++k)
        c.cell_at.insert(c.cell_at.end(), c.cells[k].size(), k);
    c.search(0, 0);
    return {c.best, c.best_order};
}

Graph canonical_graph(const Graph& g)
{
    const auto form = canonical_form(g);
    const auto n = g.order();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (g.adjacent(form.order[i], form.order[j]))
                rows[i].set(j);
    return Graph::from_rows(std::move(rows));
}

std::vector<Graph> graphs_of_order(std::size_t order, bool with_loops)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, bool>, std::vector<Graph>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({order, with_loops}); it != cache.end())
            return it->second;
    }
    std::vector<Graph> out;
    if (order == 0) {
        out.emplace_back(0);
    } else {
        if (order > canonical_limit)
            throw Error(ErrorKind::cap_exceeded, "graph generation supports at most " +
                                                     std::to_string(canonical_limit) + " vertices");
        std::map<std::uint64_t, Graph> found;
        const auto smaller = graphs_of_order(order - 1, with_loops);
        const auto v = order - 1;
        for (const auto& base : smaller) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v); ++mask) {
                for (int loop = 0; loop <= (with_loops ? 1 : 0); ++loop) {
                    std::vector<Edge> edges = base.edges();
                    for (Vertex u = 0; u < v; ++u)
                        if (mask >> u & 1)
                            edges.emplace_back(u, v);
                    if (loop)
                        edges.emplace_back(v, v);
                    auto g = Graph::from_edges(order, edges);
                    auto code = canonical_form(g).code;
                    if (!found.count(code))
                        found.emplace(code, canonical_graph(g));
                }
            }
        }
        for (auto& [code, g] : found)
            out.push_back(std::move(g));
    }
    std::lock_guard lock(mutex);
    cache.emplace(std::pair{order, with_loops}, out);
    return out;
}

std::vector<Graph> graphs_up_to(std::size_t max_order, bool with_loops)
{
    std::vector<Graph> out;
    for (std::size_t k = 1; k <= max_order; ++k) {
        auto part = graphs_of_order(k, with_loops);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace relgraph
