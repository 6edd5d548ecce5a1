#include "relgraph/relation.hpp"

#include <algorithm>
#include <string>

#include "relgraph/error.hpp"

namespace relgraph {

Relation::Relation(std::size_t domain_size, std::size_t image_size)
    : image_size_(image_size), rows_(domain_size, VertexSet(image_size))
{
}

Relation Relation::from_pairs(std::size_t domain_size, std::size_t image_size, std::span<const Pair> pairs)
{
    Relation r(domain_size, image_size);
    for (auto [x, b] : pairs) {
        if (x >= domain_size || b >= image_size)
            throw Error(ErrorKind::universe_mismatch, "pair (" + std::to_string(x) + "," + std::to_string(b) +
                                                          ") outside universes " + std::to_string(domain_size) +
                                                          "x" + std::to_string(image_size));
        r.rows_[x].set(b);
    }
    return r;
}

Relation Relation::from_pairs(std::size_t domain_size, std::size_t image_size, std::initializer_list<Pair> pairs)
{
    return from_pairs(domain_size, image_size, std::span<const Pair>(pairs.begin(), pairs.size()));
}

Relation Relation::from_rows(std::size_t image_size, std::vector<VertexSet> rows)
{
    for (const auto& row : rows)
        if (row.size() != image_size)
            throw Error(ErrorKind::universe_mismatch, "relation row width differs from image universe");
    Relation r;
    r.image_size_ = image_size;
    r.rows_ = std::move(rows);
    return r;
}

Relation Relation::from_function(std::span<const Vertex> f, std::size_t image_size)
{
    Relation r(f.size(), image_size);
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (f[x] >= image_size)
            throw Error(ErrorKind::universe_mismatch, "function value outside image universe");
        r.rows_[x].set(f[x]);
    }
    return r;
}

Relation Relation::identity(std::size_t n)
{
    Relation r(n, n);
    for (std::size_t x = 0; x < n; ++x)
        r.rows_[x].set(x);
    return r;
}

Relation Relation::identity_on(const VertexSet& subset)
{
    Relation r(subset.size(), subset.size());
    for (auto x = subset.find_first(); x != VertexSet::npos; x = subset.find_next(x))
        r.rows_[x].set(x);
    return r;
}

std::size_t Relation::size() const
{
    std::size_t total = 0;
    for (const auto& row : rows_)
        total += row.count();
    return total;
}

VertexSet Relation::image_of(const VertexSet& sources) const
{
    if (sources.size() != rows_.size())
        throw Error(ErrorKind::universe_mismatch, "source set universe differs from relation domain");
    VertexSet out(image_size_);
    for (auto x = sources.find_first(); x != VertexSet::npos; x = sources.find_next(x))
        out |= rows_[x];
    return out;
}

VertexSet Relation::preimage_of(Vertex b) const
{
    if (b >= image_size_)
        throw Error(ErrorKind::universe_mismatch, "target outside image universe");
    VertexSet out(rows_.size());
    for (std::size_t x = 0; x < rows_.size(); ++x)
        if (rows_[x].test(b))
            out.set(x);
    return out;
}

VertexSet Relation::domain() const
{
    VertexSet out(rows_.size());
    for (std::size_t x = 0; x < rows_.size(); ++x)
        if (rows_[x].any())
            out.set(x);
    return out;
}

VertexSet Relation::image() const
{
    VertexSet out(image_size_);
    for (const auto& row : rows_)
        out |= row;
    return out;
}

bool Relation::has_full_domain() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const VertexSet& row) { return row.any(); });
}

bool Relation::has_full_image() const
{
    return image().all();
}

bool Relation::is_functional() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const VertexSet& row) { return row.count() <= 1; });
}

bool Relation::is_injective() const
{
    VertexSet seen(image_size_);
    for (const auto& row : rows_) {
        if (row.intersects(seen))
            return false;
        seen |= row;
    }
    return true;
}

std::vector<Pair> Relation::pairs() const
{
    std::vector<Pair> out;
    for (std::size_t x = 0; x < rows_.size(); ++x)
        for (auto b = rows_[x].find_first(); b != VertexSet::npos; b = rows_[x].find_next(b))
            out.emplace_back(x, b);
    return out;
}

bool Relation::is_subset_of(const Relation& other) const
{
    if (other.image_size_ != image_size_ || other.rows_.size() != rows_.size())
        throw Error(ErrorKind::universe_mismatch, "inclusion test between relations on different universes");
    for (std::size_t x = 0; x < rows_.size(); ++x)
        if (!rows_[x].is_subset_of(other.rows_[x]))
            return false;
    return true;
}

std::strong_ordering operator<=>(const Relation& a, const Relation& b)
{
    if (auto c = a.domain_size() <=> b.domain_size(); c != 0)
        return c;
    if (auto c = a.image_size_ <=> b.image_size_; c != 0)
        return c;
    const auto pa = a.pairs();
    const auto pb = b.pairs();
    return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
}

Relation transpose(const Relation& r)
{
    std::vector<VertexSet> rows(r.image_size(), VertexSet(r.domain_size()));
    for (std::size_t x = 0; x < r.domain_size(); ++x) {
        const auto& row = r.image_of(x);
        for (auto b = row.find_first(); b != VertexSet::npos; b = row.find_next(b))
            rows[b].set(x);
    }
    return Relation::from_rows(r.domain_size(), std::move(rows));
}

Relation compose(const Relation& r, const Relation& s)
{
    if (r.image_size() != s.domain_size())
        throw Error(ErrorKind::universe_mismatch, "compose: intermediate universes differ (" +
                                                      std::to_string(r.image_size()) + " vs " +
                                                      std::to_string(s.domain_size()) + ")");
    std::vector<VertexSet> rows(r.domain_size(), VertexSet(s.image_size()));
    for (std::size_t x = 0; x < r.domain_size(); ++x) {
        const auto& mid = r.image_of(x);
        for (auto y = mid.find_first(); y != VertexSet::npos; y = mid.find_next(y))
            rows[x] |= s.image_of(y);
    }
    return Relation::from_rows(s.image_size(), std::move(rows));
}

Relation set_union(const Relation& a, const Relation& b)
{
    if (a.domain_size() != b.domain_size() || a.image_size() != b.image_size())
        throw Error(ErrorKind::universe_mismatch, "union of relations on different universes");
    auto rows = a.rows();
    for (std::size_t x = 0; x < rows.size(); ++x)
        rows[x] |= b.image_of(x);
    return Relation::from_rows(a.image_size(), std::move(rows));
}

} // namespace relgraph
