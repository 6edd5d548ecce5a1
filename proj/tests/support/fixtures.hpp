#pragma once

// Small named instances shared by the unit tests and the acceptance binary.
// Vertex names from the worked examples are mapped to indices in the order
// they are listed.

#include <vector>

#include "relgraph/graph.hpp"
#include "relgraph/relation.hpp"

namespace fixtures {

using namespace relgraph;

// Weakly but not strongly equivalent pair on vertices 1..7; H drops vertex 3.
inline Graph weak_pair_g()
{
    return Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {5, 6}},
                             {"1", "2", "3", "4", "5", "6", "7"});
}

inline Graph weak_pair_h()
{
    return Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {4, 5}}, {"1", "2", "4", "5", "6", "7"});
}

// 3 -> 2, everything else to itself.
inline Relation weak_pair_r()
{
    return Relation::from_pairs(7, 6, {{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 3}, {5, 4}, {6, 5}});
}

// 5 -> {5, 3}, 7 -> {7, 3}, everything else to itself.
inline Relation weak_pair_s()
{
    return Relation::from_pairs(6, 7, {{0, 0}, {1, 1}, {2, 3}, {3, 4}, {3, 2}, {4, 5}, {5, 6}, {5, 2}});
}

// K3 on x, y, z: {(x,1),(z,1),(y,2)} and {(1,x'),(1,z'),(2,y')}.
inline Relation k3_weak_r()
{
    return Relation::from_pairs(3, 2, {{0, 0}, {2, 0}, {1, 1}});
}

inline Relation k3_weak_s()
{
    return Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
}

// C3 on u, v, w onto K2 on x, y: {(u,x),(v,y)}.
inline Relation c3_to_k2()
{
    return Relation::from_pairs(3, 2, {{0, 0}, {1, 1}});
}

// P1 on x, y onto P2 = u - v - w: {(x,u),(x,w),(y,v)}.
inline Relation p1_to_p2()
{
    return Relation::from_pairs(2, 3, {{0, 0}, {0, 2}, {1, 1}});
}

// C4 folded onto K2 along its two thinness classes.
inline Relation c4_collapse()
{
    return Relation::from_pairs(4, 2, {{0, 0}, {2, 0}, {1, 1}, {3, 1}});
}

} // namespace fixtures
