#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdiag/canon.hpp"
#include "cdiag/diagram.hpp"
#include "cdiag/explore.hpp"

namespace cdiag {

// Families of arbitrarily large diagrams that are 2-infinite while every
// proper subdiagram is 2-finite.  Junction triangles tie an attachment
// vertex to both endpoints of one distinguished cycle edge, which lets
// the triangle and the cycle carry coherent oriented orientations.
enum class SeriesFamily {
    a_cycle,      // non-oriented weightless cycle, rank >= 2
    b_path,       // two weight-1 leaves, path, terminal weight-2 edge; rank >= 3
    b_cycle_path, // oriented cycle + junction path ending in a weight-2 edge
    b_cycle,      // oriented cycle + apex tied to one cycle edge by weight-2 edges
    c_path,       // path with weight-2 edges at both ends, rank >= 2
    d_path,       // two weight-1 leaves at each end of a path, rank >= 4
    d_cycle_path, // two-leaf fork, path, junction onto an oriented cycle
    d_cycle,      // oriented cycle + two apexes tied to the same cycle edge
    d_two_cycles, // two disjoint oriented cycles joined by a junction path
    i_pair,       // single edge of weight a >= 4
};

// Parameters: `rank` names the subscript for the four plain shapes
// (a_cycle, b_path, c_path, d_path); m/r/s size the junction families
// (m >= 1 path vertices, r and s >= 3 cycle lengths); `a` is the pair
// weight of i_pair.  Unused fields stay zero.
struct SeriesParams {
    SeriesFamily family = SeriesFamily::a_cycle;
    int rank = 0;
    int m = 0;
    int r = 0;
    int s = 0;
    Weight a = 0;

    friend bool operator==(const SeriesParams&, const SeriesParams&) = default;
};

// Orientation of the edges that are not forced: cycle edges always form
// oriented cycles (the a_cycle family instead keeps its cycle
// non-oriented), and the rest follow the seed.  Seed 0 is the fixed
// low-to-high layout; any other seed flips a pseudorandom subset.
struct OrientationSpec {
    std::uint64_t seed = 0;
};

int series_vertex_count(const SeriesParams& p);
std::string series_label(const SeriesParams& p);

// Builds the series member.  Throws BadParams outside the family bounds.
Diagram make_series(const SeriesParams& p, const OrientationSpec& spec = {});

// The small fixtures whose every cycle is non-oriented: a 4-cycle with
// opposite weight-2 edges and triangles weighted (2,2,1) and (3,3,1).
// All non-oriented orientations are returned, one per isomorphism class,
// ordered by canonical form within each shape.
std::vector<Diagram> table2_entries();

// The seven five-vertex fixtures of the weighted exceptional family:
// the weight-2 path and its six one-cycle and two-cycle relatives.
std::vector<Diagram> table3_f4_fixtures();

struct EntryKind {
    enum class Tag { series, fixture, generated };
    Tag tag = Tag::fixture;
    SeriesParams series{}; // tag == series
    int table = 0;         // tag == fixture
    int base_rank = 0;     // tag == generated: rank of the deleted-vertex base

    friend bool operator==(const EntryKind&, const EntryKind&) = default;
};

struct CatalogEntry {
    std::string label;
    EntryKind kind;
    CanonicalForm form;          // directed canonical form
    CanonicalForm skeleton_form; // underlying weighted graph

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

// Labeled entries for table2_entries and table3_f4_fixtures.
std::vector<CatalogEntry> fixture_entries();

// All minimal 2-infinite diagrams obtained by adjoining one vertex, tied
// by weight-1 edges to a non-empty vertex subset, to any member of the
// mutation class of E6, E7 or E8.  Candidates whose skeleton fails the
// basic-move test for minimality are discarded before orientations are
// enumerated; surviving diagrams are deduplicated by canonical form and
// labeled per underlying-graph group.  Throws BadParams unless base_rank
// is 6..8 and LimitExceeded when lim truncates the base class.
std::vector<CatalogEntry> generate_exceptional(int base_rank, const ExplorationLimits& lim = {});

// All minimal 2-infinite diagrams on n vertices built by extending a
// connected 2-finite diagram on n-1 vertices with one vertex whose new
// edges carry weights 1..weight_cap in either direction.  Every minimal
// 2-infinite diagram on >= 3 vertices arises this way, and weights above
// 3 cannot occur in one (a heavier edge would itself be a proper
// 2-infinite subdiagram).  n == 2 returns the boundary witness I2(4).
// Decisions use mutation exploration under lim; LimitExceeded when a
// decision is cut off.
std::vector<CatalogEntry> generate_minimal_by_extension(int n, Weight weight_cap = 3,
                                                        const ExplorationLimits& lim = {});

// Recognizes series members by shape, then the fixtures and the
// three-vertex weighted diagrams by canonical form; nullopt otherwise.
// The overload also consults `extra` (a loaded catalog, for instance).
// Throws NotConnected on a disconnected input.
std::optional<CatalogEntry> match_entry(const Diagram& d);
std::optional<CatalogEntry> match_entry(const Diagram& d, const std::vector<CatalogEntry>& extra);

// Line-oriented text file: a "catalog-format 1" header, then one entry
// per line as label TAB kind TAB hex form, sorted by label.  Loading
// recomputes skeleton forms.  Throws IoError on file trouble and
// FormatError (with the line number) on malformed content.
void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path);
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Number of distinct underlying weighted graphs among the entries.
std::size_t skeleton_group_count(const std::vector<CatalogEntry>& entries);

} // namespace cdiag
