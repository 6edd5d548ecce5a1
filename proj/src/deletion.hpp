#pragma once

#include "relgraph/equivalence.hpp"

namespace relgraph::detail {

// Shared engine of the R-core and cocore algorithms. A vertex v is deleted
// when its neighbourhood is the union of the neighbourhoods it contains and,
// with `need_cover`, some other neighbourhood contains it. Isolated vertices
// are set aside first and collapsed onto the lowest one at the end.
CoreResult run_deletion(const Graph& g, DeletionMode mode, bool need_cover);

} // namespace relgraph::detail
