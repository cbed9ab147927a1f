#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cdiag/canon.hpp"
#include "cdiag/diagram.hpp"
#include "cdiag/mutation.hpp"

namespace cdiag {

struct ExplorationLimits {
    std::size_t max_members = 1'000'000;
    // Members with an edge weight >= max_weight are recorded but never
    // expanded; 0 means no weight cap.
    Weight max_weight = 4;
};

struct ClassSummary {
    CanonicalForm seed;
    std::vector<CanonicalForm> members; // sorted
    Weight max_weight_seen = 0;
    bool truncated = false;

    std::size_t size() const { return members.size(); }
    bool contains(const CanonicalForm& f) const;
};

enum class VerdictKind { finite, infinite, inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::inconclusive;
    // finite or inconclusive: what was explored.
    std::optional<ClassSummary> summary;
    // infinite: mutations taking the input to a member with an edge weight
    // >= 4, and that edge.
    std::vector<MutationStep> witness;
    Edge offending_edge;
};

// Breadth-first closure of d under mutation, members keyed by canonical
// form.  Deterministic for fixed limits regardless of worker threads.
ClassSummary enumerate_class(const Diagram& d, const ExplorationLimits& lim = {});

// Whether every diagram mutation-equivalent to d has all weights <= 3.
// The witness of an infinite verdict replays with mutate_seq on d itself;
// the search expands heavier members first, so the witness is found
// quickly but is not necessarily a shortest path.
Verdict decide_2finite(const Diagram& d, const ExplorationLimits& lim = {});

// True/false when membership of d2 in the class of d1 is settled within
// the limits, nullopt when the search was cut off.  Different vertex
// counts give false.
std::optional<bool> is_mut_equivalent(const Diagram& d1, const Diagram& d2, const ExplorationLimits& lim = {});

struct FiniteTypeResult {
    enum class Kind { type, not_finite, inconclusive } kind = Kind::inconclusive;
    std::string label; // set when kind == type
};

// Finds the finite type of a connected diagram by locating a member of its
// class with a finite-type shape.  Throws PreconditionViolated when d is
// not connected.
FiniteTypeResult classify_finite_type(const Diagram& d, const ExplorationLimits& lim = {});

struct ExtendedRepResult {
    enum class Kind { found, not_found, inconclusive } kind = Kind::inconclusive;
    std::string label;
    std::vector<MutationStep> path; // mutations taking d to the matched member
};

// Searches the class of d for a member of affine shape.
ExtendedRepResult find_extended_dynkin_rep(const Diagram& d, const ExplorationLimits& lim = {});

// Searches the class of d for a member of finite-type shape; same result
// layout as find_extended_dynkin_rep.
ExtendedRepResult find_dynkin_rep(const Diagram& d, const ExplorationLimits& lim = {});

} // namespace cdiag
