#include "relgraph/equivalence.hpp"

#include <map>
#include <string>

#include "deletion.hpp"
#include "relgraph/composition.hpp"
#include "relgraph/error.hpp"
#include "relgraph/isomorphism.hpp"
#include "relgraph/solver.hpp"

namespace relgraph {

ThinQuotient thin_quotient(const Graph& g)
{
    const auto n = g.order();
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::size_t> class_of(n);
    std::map<std::vector<Vertex>, std::size_t> seen;
    for (Vertex v = 0; v < n; ++v) {
        auto key = members(g.neighbors(v));
        auto [it, fresh] = seen.emplace(std::move(key), classes.size());
        if (fresh)
            classes.emplace_back();
        classes[it->second].push_back(v);
        class_of[v] = it->second;
    }
    const auto k = classes.size();
    std::vector<VertexSet> rows(k, VertexSet(k));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
        const auto rep = classes[i].front();
        for (std::size_t j = 0; j < k; ++j)
            if (g.adjacent(rep, classes[j].front()))
                rows[i].set(j);
        std::string label = "{";
        for (std::size_t t = 0; t < classes[i].size(); ++t)
            label += (t ? "," : "") + g.label(classes[i][t]);
        labels.push_back(label + "}");
    }
    std::vector<Vertex> f(class_of.begin(), class_of.end());
    return ThinQuotient{g, Partition(n, classes), Graph::from_rows(std::move(rows), std::move(labels)),
                        Relation::from_function(f, k)};
}

bool is_thin(const Graph& g)
{
    return thin_quotient(g).partition.is_discrete();
}

bool witness_holds(const EquivalenceWitness& w, const Graph& g, const Graph& h)
{
    if (w.forward.domain_size() != g.order() || w.forward.image_size() != h.order() ||
        w.backward.domain_size() != h.order() || w.backward.image_size() != g.order())
        return false;
    if (!w.forward.has_full_image() || !w.backward.has_full_image())
        return false;
    if (w.kind == EquivalenceKind::strong && !(w.backward == transpose(w.forward)))
        return false;
    return apply_strong(g, w.forward) == h && apply_strong(h, w.backward) == g;
}

namespace {

Relation bijection(const std::vector<Vertex>& f)
{
    return Relation::from_function(f, f.size());
}

} // namespace

std::optional<EquivalenceWitness> strongly_equivalent(const Graph& g, const Graph& h)
{
    const auto tg = thin_quotient(g);
    const auto th = thin_quotient(h);
    auto iso = find_isomorphism(tg.thin, th.thin);
    if (!iso)
        return std::nullopt;
    EquivalenceWitness w;
    w.kind = EquivalenceKind::strong;
    w.forward = compose(compose(tg.collapse, bijection(*iso)), transpose(th.collapse));
    w.backward = transpose(w.forward);
    if (!witness_holds(w, g, h))
        throw std::logic_error("strong equivalence witness failed re-validation");
    return w;
}

std::optional<EquivalenceWitness> weakly_equivalent(const Graph& g, const Graph& h)
{
    const auto cg = rcore(g);
    const auto ch = rcore(h);
    auto iso = find_isomorphism(cg.core, ch.core);
    if (!iso)
        return std::nullopt;
    const auto f = bijection(*iso);
    EquivalenceWitness w;
    w.kind = EquivalenceKind::weak;
    w.forward = compose(compose(*cg.to_core, f), ch.from_core);
    w.backward = compose(compose(*ch.to_core, transpose(f)), cg.from_core);
    if (!witness_holds(w, g, h))
        throw std::logic_error("weak equivalence witness failed re-validation");
    return w;
}

CoreResult rcore(const Graph& g, DeletionMode mode)
{
    return detail::run_deletion(g, mode, true);
}

Graph rcore_oracle(const Graph& g, std::size_t cap)
{
    const auto n = g.order();
    if (n > cap)
        throw Error(ErrorKind::cap_exceeded, "R-core oracle is limited to " + std::to_string(cap) + " vertices");
    if (n == 0)
        return g;
    // Full-domain relations keep loop-free graphs loop-free in both
    // directions, so looped candidates only matter when g has loops.
    const bool loops = g.has_loops();
    auto related = [](const Graph& a, const Graph& b) {
        SolveQuery q;
        q.g = a;
        q.h = b;
        q.domain = DomainConstraint::full;
        q.enumeration = Enumeration::exists;
        auto r = solve(q);
        if (!r.set.complete)
            throw Error(ErrorKind::cap_exceeded, "R-core oracle search ran out of budget");
        return !r.set.solutions.empty();
    };
    for (std::size_t k = 1; k <= n; ++k)
        for (const auto& candidate : graphs_of_order(k, loops))
            if (related(g, candidate) && related(candidate, g))
                return candidate;
    throw std::logic_error("R-core oracle found no candidate; g itself should qualify");
}

} // namespace relgraph
