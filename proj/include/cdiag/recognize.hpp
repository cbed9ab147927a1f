#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdiag/catalog.hpp"
#include "cdiag/diagram.hpp"
#include "cdiag/explore.hpp"

namespace cdiag {

// How the verdict was reached: a structural screen (heavy edge or
// non-oriented cycle, settled by the shape of a subdiagram), the basic-move
// invariant route for simply-laced inputs, or mutation exploration.
enum class RecognitionMethod { subdiagram_scan, bm_fast, bfs };

const char* recognition_method_name(RecognitionMethod m);

// Mutation route from the input to a member whose shape has a name.
struct Reduction {
    std::string label;              // finite-type or affine label reached
    std::vector<MutationStep> path; // mutations applied to the input, in order
};

struct RecognitionReport {
    VerdictKind verdict = VerdictKind::inconclusive;
    RecognitionMethod method = RecognitionMethod::bfs;
    // Vertices of the input spanning a minimal 2-infinite subdiagram.
    // Present on an infinite verdict unless the witness search itself hit
    // the exploration limits.
    std::optional<VertexSet> witness;
    // Catalog identity of the witness subdiagram, when it matches.
    std::optional<CatalogEntry> witness_entry;
    std::optional<Reduction> reduction; // filled only when requested
};

struct RecognizeOptions {
    ExplorationLimits limits{};
    bool want_reduction = false;
    // Extra catalog entries (a generated exceptional catalog, say) consulted
    // when labeling witnesses.
    std::vector<CatalogEntry> extra_catalog{};
};

// Decides 2-finiteness of a connected diagram, choosing the cheapest sound
// route, and explains an infinite verdict with a minimal witness.  Throws
// NotConnected on a disconnected input.
RecognitionReport recognize(const Diagram& d, const RecognizeOptions& opt = {});

// Smallest connected induced subdiagram that is minimal 2-infinite, by
// vertex count, ties broken by canonical form and then vertex order;
// nullopt iff d is 2-finite.  Throws LimitExceeded when a needed decision
// is cut off by lim.
std::optional<VertexSet> find_minimal_witness(const Diagram& d, const ExplorationLimits& lim = {});

// Whether d is 2-infinite while every connected component of every
// single-vertex deletion is 2-finite.  Throws LimitExceeded when a
// decision is cut off.
bool is_minimal_2infinite(const Diagram& d, const ExplorationLimits& lim = {});

// Purely structural test matching the A-type mutation classes among
// connected simply-laced diagrams: true iff d has no non-oriented chordless
// cycle, no chordless cycle of length at least 4, no induced four-vertex
// star, and no two triangles sharing an edge.  Throws PreconditionViolated
// unless d is connected and simply-laced.
bool is_type_A_by_patterns(const Diagram& d);

} // namespace cdiag
