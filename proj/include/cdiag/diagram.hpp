#pragma once

#include <cstdint>
#include <vector>

#include "cdiag/errors.hpp"

namespace cdiag {

using Weight = std::int64_t;
using VertexSet = std::vector<int>;

struct Edge {
    int tail = 0;
    int head = 0;
    Weight weight = 1;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Square integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<Weight> a;

    IntMatrix() = default;
    explicit IntMatrix(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

    Weight& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    Weight at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

// Directed graph on vertices 0..n-1 with positive integer edge weights.
// At most one edge per unordered pair, no loops, and the weight product
// around any cycle of the underlying graph is a perfect square.
class Diagram {
public:
    int size() const { return n_; }

    // Weight of the edge i -> j, or 0 if there is none.
    Weight weight(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }

    bool has_edge(int i, int j) const { return weight(i, j) > 0; }
    bool adjacent(int i, int j) const { return has_edge(i, j) || has_edge(j, i); }

    // Weight of the underlying undirected edge {i, j}, or 0 if none.
    Weight pair_weight(int i, int j) const {
        Weight w = weight(i, j);
        return w > 0 ? w : weight(j, i);
    }

    // Edges sorted by (tail, head).
    std::vector<Edge> edges() const;

    int edge_count() const;
    Weight max_weight() const;

    // True when every edge has weight 1.
    bool simply_laced() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

    friend Diagram new_diagram(int n, const std::vector<Edge>& edges);
    friend Diagram mutate(const Diagram& d, int k);

private:
    int n_ = 0;
    std::vector<Weight> w_;
};

// Validates and builds a diagram. Throws DuplicateEdge, SelfLoop,
// NonPositiveWeight, OutOfRange, CycleNotSquare, or BadParams (n < 1).
Diagram new_diagram(int n, const std::vector<Edge>& edges);

// Restriction to the given vertices, which are relabeled 0..k-1 in the
// order given. Throws OutOfRange on bad or repeated vertices.
Diagram induced_subdiagram(const Diagram& d, const VertexSet& vertices);

// True when some chordless cycle of the underlying graph is not oriented
// cyclically.
bool has_non_oriented_cycle(const Diagram& d);

// Chordless cycles of the underlying graph, each listed in traversal order.
std::vector<VertexSet> chordless_cycles(const Diagram& d);

// True when the cycle (in traversal order) has all edges pointing the same
// way around.
bool cycle_is_oriented(const Diagram& d, const VertexSet& cycle);

// Diagram of a skew-symmetrizable integer matrix: edge i -> j with weight
// |b_ij * b_ji| for each positive entry b_ij. Throws NotSkewSymmetrizable.
Diagram diagram_of_matrix(const IntMatrix& b);

// True when d_i * b_ij = -d_j * b_ji for some positive integers d_i.
bool is_skew_symmetrizable(const IntMatrix& b);

// Vertex sets of the connected components of the underlying graph, each
// sorted, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const Diagram& d);

bool is_connected(const Diagram& d);

// Squarefree part of a positive integer.
Weight squarefree_part(Weight x);

} // namespace cdiag
