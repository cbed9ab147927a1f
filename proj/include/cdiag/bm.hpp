#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdiag/diagram.hpp"

namespace cdiag {

// Subset of vertices read as a vector over F2.
struct F2Vector {
    int n = 0;
    std::uint32_t bits = 0;

    bool get(int i) const { return bits >> i & 1; }
    friend bool operator==(const F2Vector&, const F2Vector&) = default;
};

// Undirected graph as a symmetric F2 adjacency matrix with zero diagonal;
// doubles as the alternating form Omega on the vertex span.
struct BmGraph {
    int n = 0;
    std::vector<std::uint32_t> rows;

    bool edge(int i, int j) const { return rows[i] >> j & 1; }
    int edge_count() const;
    friend bool operator==(const BmGraph&, const BmGraph&) = default;
};

// Validates vertices and builds the symmetric adjacency.  Throws
// OutOfRange, SelfLoop, DuplicateEdge, or BadParams (n < 1 or n > 25).
BmGraph bm_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Graph with an edge wherever d has an edge of odd weight.
BmGraph odd_weight_skeleton(const Diagram& d);

// Plain underlying graph of d.
BmGraph skeleton_graph(const Diagram& d);

bool bm_connected(const BmGraph& g);

// Omega(a, b) over F2.  Throws LengthMismatch when sizes differ from g.
int omega_eval(const BmGraph& g, const F2Vector& a, const F2Vector& b);

// The quadratic form refining Omega: Q(v) = |v| + #edges inside v mod 2,
// so Q(i) = 1 on every vertex and Q(u+v) = Q(u) + Q(v) + Omega(u, v).
int q_eval(const BmGraph& g, const F2Vector& v);

// Basis of the radical V0 = { v : Omega(v, .) = 0 }, deterministic.
std::vector<F2Vector> radical_basis(const BmGraph& g);

// Basis of V00 = V0 intersected with the kernel of Q.  Q restricted to V0
// is linear, so dim V00 is dim V0 or dim V0 - 1.
std::vector<F2Vector> v00_basis(const BmGraph& g);

// Arf invariant of Q, defined only when V0 = V00; throws ArfUndefined
// otherwise.
int arf(const BmGraph& g);

struct BmInvariants {
    int n = 0;
    int dim_v0 = 0;
    int dim_v00 = 0;
    std::optional<int> arf; // present exactly when V0 = V00

    friend bool operator==(const BmInvariants&, const BmInvariants&) = default;
};

BmInvariants bm_invariants(const BmGraph& g);

// Replaces basis vector c by c + a; c and a must be adjacent
// (PreconditionViolated otherwise).  Involutive.
BmGraph basic_move(const BmGraph& g, int c, int a);

// Canonical key of g up to relabeling; supports n <= 11 (UnsupportedSize
// beyond).
std::uint64_t bm_canonical_key(const BmGraph& g);

// Whether b is reachable from a by basic moves.  Completed reachability
// orbits are cached, so repeated queries against the same classes are
// cheap.  nullopt when the orbit search exceeds max_states.
std::optional<bool> bm_equivalent(const BmGraph& a, const BmGraph& b, std::size_t max_states = 5'000'000);

enum class BmClassAnswer { yes, no, needs_fallback };

// Invariant test for BM-equivalence to some Dynkin graph (A, D or E
// shape) on 6, 7 or 8 vertices; UnsupportedSize otherwise, NotConnected
// for disconnected input.  needs_fallback is possible only on 8 vertices
// when the invariants coincide with those of D8 (dim V0 = dim V00 = 2,
// Arf 0), where only reachability separates instead: D8 shares those
// values with the one-vertex extensions of D7 that are 2-infinite.
BmClassAnswer dynkin_bm_class_by_invariants(const BmGraph& g);

// BM-equivalence of a connected graph on at most 9 vertices to a Dynkin
// graph, settled by the invariant test where it applies and by cached
// reachability orbits elsewhere.
bool bm_dynkin_graph(const BmGraph& g);

// Fast 2-finiteness test for a connected simply-laced diagram without
// non-oriented cycles (PreconditionViolated otherwise).  Definitive for
// at most 9 vertices; nullopt when the orbit search is cut off beyond
// that.
std::optional<bool> is_2finite_via_bm(const Diagram& d);

} // namespace cdiag
