#include "deletion.hpp"

#include "relgraph/algebra.hpp"

namespace relgraph::detail {

namespace {

// Identity on `present` minus `gone`, as an n x n relation.
std::vector<VertexSet> identity_rows(const VertexSet& present, Vertex gone)
{
    const auto n = present.size();
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (auto x = present.find_first(); x != VertexSet::npos; x = present.find_next(x))
        if (x != gone)
            rows[x].set(x);
    return rows;
}

} // namespace

CoreResult run_deletion(const Graph& g, DeletionMode mode, bool need_cover)
{
    const auto n = g.order();
    VertexSet present = full_set(n);
    VertexSet active(n);
    for (Vertex v = 0; v < n; ++v)
        if (!g.is_isolated(v))
            active.set(v);

    Relation to = Relation::identity(n);
    Relation from = Relation::identity(n);

    auto current = [&](Vertex v) { return g.neighbors(v) & active; };
    auto tested = [&](Vertex v) { return mode == DeletionMode::fixpoint ? current(v) : g.neighbors(v); };

    auto try_delete = [&](Vertex v) {
        const auto nv = tested(v);
        VertexSet w(n);
        bool found = false;
        for (auto j = active.find_first(); j != VertexSet::npos; j = active.find_next(j)) {
            if (j == v)
                continue;
            const auto nj = tested(j);
            if (nj.is_subset_of(nv))
                w |= nj;
            if (nv.is_subset_of(nj))
                found = true;
        }
        if (w != nv || (need_cover && !found))
            return false;

        // Witness steps read the current graph; the literal test implies the
        // same equalities after intersecting with the surviving set.
        const auto cv = current(v);
        auto back = identity_rows(present, v);
        Vertex cover = v;
        for (auto j = active.find_first(); j != VertexSet::npos; j = active.find_next(j)) {
            if (j == v)
                continue;
            const auto cj = current(j);
            if (cj.is_subset_of(cv))
                back[j].set(v);
            if (cover == v && cv.is_subset_of(cj))
                cover = j;
        }
        from = compose(Relation::from_rows(n, std::move(back)), from);
        if (need_cover) {
            auto fwd = identity_rows(present, v);
            fwd[v].set(cover);
            to = compose(to, Relation::from_rows(n, std::move(fwd)));
        }
        active.reset(v);
        present.reset(v);
        return true;
    };

    if (mode == DeletionMode::fixpoint) {
        for (bool changed = true; changed;) {
            changed = false;
            for (auto v = active.find_first(); v != VertexSet::npos; v = active.find_next(v))
                if (try_delete(v))
                    changed = true;
        }
    } else {
        const auto order = members(active);
        for (auto v : order)
            try_delete(v);
    }

    const auto isolated = isolated_vertices(g);
    if (isolated.size() > 1) {
        const auto keep = isolated.front();
        auto fwd = identity_rows(present, n);
        auto back = identity_rows(present, n);
        for (auto i : isolated) {
            fwd[i].reset();
            fwd[i].set(keep);
            back[keep].set(i);
            if (i != keep) {
                back[i].reset();
                present.reset(i);
            }
        }
        to = compose(to, Relation::from_rows(n, std::move(fwd)));
        from = compose(Relation::from_rows(n, std::move(back)), from);
    }

    CoreResult out;
    out.kept = members(present);
    out.core = induced_subgraph(g, present);
    const auto k = out.kept.size();
    std::vector<VertexSet> project(n, VertexSet(k));
    for (std::size_t i = 0; i < k; ++i)
        project[out.kept[i]].set(i);
    if (need_cover)
        out.to_core = compose(to, Relation::from_rows(k, std::move(project)));
    out.from_core = restrict_domain(from, present);
    return out;
}

} // namespace relgraph::detail
