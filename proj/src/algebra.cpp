#include "relgraph/algebra.hpp"

#include <string>

#include "relgraph/composition.hpp"
#include "relgraph/error.hpp"

namespace relgraph {

Decomposition decompose(const Relation& r)
{
    Decomposition d;
    d.domain = r.domain();
    d.carrier = r.pairs();
    const auto b = d.carrier.size();
    d.restrict = Relation::identity_on(d.domain);
    std::vector<Pair> into_pairs;
    std::vector<Pair> collapse_pairs;
    for (std::size_t k = 0; k < b; ++k) {
        into_pairs.emplace_back(d.carrier[k].first, k);
        collapse_pairs.emplace_back(k, d.carrier[k].second);
    }
    d.into = Relation::from_pairs(r.domain_size(), b, into_pairs);
    d.collapse = Relation::from_pairs(b, r.image_size(), collapse_pairs);
    return d;
}

Relation restrict_domain(const Relation& r, const VertexSet& keep)
{
    if (keep.size() != r.domain_size())
        throw Error(ErrorKind::universe_mismatch, "restrict_domain: subset universe differs from relation domain");
    std::vector<VertexSet> rows;
    for (auto x = keep.find_first(); x != VertexSet::npos; x = keep.find_next(x))
        rows.push_back(r.image_of(x));
    return Relation::from_rows(r.image_size(), std::move(rows));
}

namespace {

constexpr Vertex none = static_cast<Vertex>(-1);

struct Matching {
    const Relation& r;
    std::vector<Vertex> left;  // left[x] = matched target or none
    std::vector<Vertex> right; // right[b] = matched source or none
    VertexSet seen;

    bool augment(Vertex x)
    {
        const auto& row = r.image_of(x);
        for (auto b = row.find_first(); b != VertexSet::npos; b = row.find_next(b)) {
            if (seen.test(b))
                continue;
            seen.set(b);
            if (right[b] == none || augment(right[b])) {
                left[x] = b;
                right[b] = x;
                return true;
            }
        }
        return false;
    }
};

} // namespace

HallReport hall_check(const Relation& r)
{
    const auto n = r.domain_size();
    const auto m = r.image_size();
    Matching mt{r, std::vector<Vertex>(n, none), std::vector<Vertex>(m, none), VertexSet(m)};
    Vertex first_free = none;
    for (Vertex x = 0; x < n; ++x) {
        mt.seen.reset();
        if (!mt.augment(x) && first_free == none)
            first_free = x;
    }
    HallReport report;
    if (first_free == none) {
        report.satisfied = true;
        report.matching = mt.left;
        report.monomorphism = Relation::from_function(mt.left, m);
        return report;
    }
    // Alternating search: from a source follow any relation pair, from a
    // target follow its matching edge back. Every reached target is matched
    // (otherwise the path would augment), so |R(S)| = |S| - 1.
    VertexSet s(n);
    VertexSet t(m);
    std::vector<Vertex> stack{first_free};
    s.set(first_free);
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        const auto& row = r.image_of(x);
        for (auto b = row.find_first(); b != VertexSet::npos; b = row.find_next(b)) {
            if (t.test(b))
                continue;
            t.set(b);
            auto y = mt.right[b];
            if (y != none && !s.test(y)) {
                s.set(y);
                stack.push_back(y);
            }
        }
    }
    report.violating = s;
    return report;
}

HallSplit nohall_split(const Graph& g, const Relation& r)
{
    auto report = hall_check(r);
    if (report.satisfied)
        throw Error(ErrorKind::hall_satisfied, "relation satisfies the Hall condition; no shrinking split exists");
    return nohall_split(g, r, *report.violating);
}

HallSplit nohall_split(const Graph& g, const Relation& r, const VertexSet& violating)
{
    const auto n = g.order();
    if (r.domain_size() != n || violating.size() != n)
        throw Error(ErrorKind::universe_mismatch, "nohall_split: universes differ from graph order");
    const auto image_s = r.image_of(violating);
    if (violating.count() <= image_s.count())
        throw Error(ErrorKind::precondition, "nohall_split: |S| = " + std::to_string(violating.count()) +
                                                 " does not exceed |R(S)| = " + std::to_string(image_s.count()));
    const auto outside = members(~violating);
    const auto targets = members(image_s);
    const auto k = outside.size() + targets.size();
    std::vector<std::string> labels;
    std::vector<Vertex> slot_of_source(n, none);
    std::vector<Vertex> slot_of_target(r.image_size(), none);
    for (auto x : outside) {
        slot_of_source[x] = labels.size();
        labels.push_back(g.label(x));
    }
    for (auto b : targets) {
        slot_of_target[b] = labels.size();
        labels.push_back("image:" + std::to_string(b));
    }

    std::vector<VertexSet> first_rows(n, VertexSet(k));
    for (Vertex x = 0; x < n; ++x) {
        if (violating.test(x)) {
            const auto& row = r.image_of(x);
            for (auto b = row.find_first(); b != VertexSet::npos; b = row.find_next(b))
                first_rows[x].set(slot_of_target[b]);
        } else {
            first_rows[x].set(slot_of_source[x]);
        }
    }
    std::vector<VertexSet> second_rows(k, VertexSet(r.image_size()));
    for (auto x : outside)
        second_rows[slot_of_source[x]] = r.image_of(x);
    for (auto b : targets)
        second_rows[slot_of_target[b]].set(b);

    HallSplit split{violating, Relation::from_rows(k, std::move(first_rows)), Graph(),
                    Relation::from_rows(r.image_size(), std::move(second_rows))};
    split.reduced = apply_strong(g, split.first).with_labels(std::move(labels));
    return split;
}

bool is_reversible(const Graph& g, const Relation& r)
{
    if (r.domain_size() != g.order() || !r.has_full_image() || !r.has_full_domain())
        return false;
    return apply_strong(apply_strong(g, r), transpose(r)) == g;
}

bool reversibility_criterion(const Graph& g, const Relation& r)
{
    if (r.domain_size() != g.order() || !r.has_full_domain())
        return false;
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = x + 1; y < g.order(); ++y)
            if (r.image_of(x).intersects(r.image_of(y)) && g.neighbors(x) != g.neighbors(y))
                return false;
    return true;
}

} // namespace relgraph
