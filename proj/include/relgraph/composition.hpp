#pragma once

#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"

namespace relgraph {

// G * R: vertex set is the image universe of R, (u, v) is an edge iff some
// edge (x, y) of G has (x, u) and (y, v) in R. Throws unless every target
// vertex has a preimage.
Graph apply_strong(const Graph& g, const Relation& r);

// Irreflexive part of G * R. G must be simple.
Graph apply_weak(const Graph& g, const Relation& r);

using Weight = boost::rational<std::int64_t>;

// Symmetric weight matrix; zero means no edge, a nonzero diagonal entry is a
// weighted loop.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t order);
    // Unit weights on the edges of g.
    static WeightedGraph from_graph(const Graph& g);

    std::size_t order() const noexcept { return w_.size(); }
    const Weight& weight(Vertex u, Vertex v) const { return w_.at(u).at(v); }
    // Sets both (u, v) and (v, u).
    void set_weight(Vertex u, Vertex v, Weight w);

    // Edge wherever the weight is positive.
    Graph support() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    friend WeightedGraph apply_weighted(const WeightedGraph&, const Relation&);

    std::vector<std::vector<Weight>> w_;
};

// w'(u, v) = sum of w(x, y) over (x, u), (y, v) in R.
WeightedGraph apply_weighted(const WeightedGraph& g, const Relation& r);

} // namespace relgraph
