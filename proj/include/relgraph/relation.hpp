#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "relgraph/graph.hpp"

namespace relgraph {

using Pair = std::pair<Vertex, Vertex>;

// Binary relation R ⊆ X × Y between two finite universes, stored as the image
// row R(x) of every source element.
class Relation {
public:
    Relation() = default;
    Relation(std::size_t domain_size, std::size_t image_size);

    static Relation from_pairs(std::size_t domain_size, std::size_t image_size, std::span<const Pair> pairs);
    static Relation from_pairs(std::size_t domain_size, std::size_t image_size, std::initializer_list<Pair> pairs);
    static Relation from_rows(std::size_t image_size, std::vector<VertexSet> rows);
    // Graph of a map x -> f[x].
    static Relation from_function(std::span<const Vertex> f, std::size_t image_size);
    static Relation identity(std::size_t n);
    // Identity restricted to `subset`, as a relation on the full universe.
    static Relation identity_on(const VertexSet& subset);

    std::size_t domain_size() const noexcept { return rows_.size(); }
    std::size_t image_size() const noexcept { return image_size_; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    bool contains(Vertex x, Vertex b) const { return rows_.at(x).test(b); }
    // R(x)
    const VertexSet& image_of(Vertex x) const { return rows_.at(x); }
    // R(S) = union of R(x) for x in S
    VertexSet image_of(const VertexSet& sources) const;
    // R^{-1}(b)
    VertexSet preimage_of(Vertex b) const;
    VertexSet domain() const;
    VertexSet image() const;

    bool has_full_domain() const;
    bool has_full_image() const;
    bool is_functional() const;
    bool is_injective() const;

    // Lexicographically sorted pair list.
    std::vector<Pair> pairs() const;
    const std::vector<VertexSet>& rows() const noexcept { return rows_; }

    bool is_subset_of(const Relation& other) const;

    friend bool operator==(const Relation& a, const Relation& b)
    {
        return a.image_size_ == b.image_size_ && a.rows_ == b.rows_;
    }
    // Canonical order: universes first, then lexicographic by sorted pair list.
    friend std::strong_ordering operator<=>(const Relation& a, const Relation& b);

private:
    std::size_t image_size_ = 0;
    std::vector<VertexSet> rows_;
};

// R^+: (b, x) for every (x, b) in R.
Relation transpose(const Relation& r);
// R ∘ S in diagrammatic order: (x, z) iff some y has (x, y) ∈ R and (y, z) ∈ S.
Relation compose(const Relation& r, const Relation& s);
Relation set_union(const Relation& a, const Relation& b);

} // namespace relgraph
