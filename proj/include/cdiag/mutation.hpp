#pragma once

#include <vector>

#include "cdiag/diagram.hpp"

namespace cdiag {

struct MutationStep {
    int vertex = 0;

    friend bool operator==(const MutationStep&, const MutationStep&) = default;
};

// Mutation at vertex k: reverses all edges at k and updates every pair of
// neighbors i, j with i -> k -> j.  Throws OutOfRange on k, WeightOverflow
// when an updated weight leaves the 64-bit range, and InternalNonSquare if
// a product that must be a perfect square is not (cannot happen for valid
// diagrams).
Diagram mutate(const Diagram& d, int k);

Diagram mutate_seq(const Diagram& d, const std::vector<MutationStep>& steps);

} // namespace cdiag
