#pragma once

#include "crp/model.hpp"

namespace crp {

/// Shifting transform for acyclic programs. Each regular rule with
/// head {l₁..l_k} becomes k rules in place: the i-th keeps head {l_i}
/// and the original body and gains `not l_j` for every j ≠ i, in head
/// order. Cr-rules pass through. The result is nondisjunctive, has the
/// same dependency graph, and the same answer sets. Cyclic input is
/// rejected.
Program shift(const Program& p);

}  // namespace crp
