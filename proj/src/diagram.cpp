#include "cdiag/diagram.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>

namespace cdiag {

std::vector<Edge> Diagram::edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (weight(i, j) > 0) out.push_back({i, j, weight(i, j)});
    return out;
}

int Diagram::edge_count() const {
    int m = 0;
    for (Weight w : w_)
        if (w > 0) ++m;
    return m;
}

Weight Diagram::max_weight() const {
    Weight m = 0;
    for (Weight w : w_) m = std::max(m, w);
    return m;
}

bool Diagram::simply_laced() const {
    for (Weight w : w_)
        if (w > 1) return false;
    return true;
}

Weight squarefree_part(Weight x) {
    Weight sf = 1;
    for (Weight p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
        if (x % p) continue;
        int e = 0;
        while (x % p == 0) {
            x /= p;
            ++e;
        }
        if (e & 1) sf *= p;
    }
    return sf * x;
}

namespace {

// Squarefree part of the product of two squarefree numbers.
Weight sf_mul(Weight a, Weight b) {
    Weight g = std::gcd(a, b);
    return (a / g) * (b / g);
}

} // namespace

Diagram new_diagram(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw error(errc::bad_params, "diagram needs at least one vertex, got " + std::to_string(n));

    Diagram d;
    d.n_ = n;
    d.w_.assign(static_cast<std::size_t>(n) * n, 0);

    for (const Edge& e : edges) {
        if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
            throw error(errc::out_of_range, "edge (" + std::to_string(e.tail) + ", " + std::to_string(e.head) +
                                                ") outside 0.." + std::to_string(n - 1));
        if (e.tail == e.head) throw error(errc::self_loop, "loop at vertex " + std::to_string(e.tail));
        if (e.weight <= 0)
            throw error(errc::non_positive_weight, "weight " + std::to_string(e.weight) + " on edge (" +
                                                       std::to_string(e.tail) + ", " + std::to_string(e.head) + ")");
        if (d.w_[static_cast<std::size_t>(e.tail) * n + e.head] > 0 ||
            d.w_[static_cast<std::size_t>(e.head) * n + e.tail] > 0)
            throw error(errc::duplicate_edge,
                        "pair {" + std::to_string(e.tail) + ", " + std::to_string(e.head) + "} given twice");
        d.w_[static_cast<std::size_t>(e.tail) * n + e.head] = e.weight;
    }

    // Cycle weight products are squares iff every fundamental cycle of a
    // spanning forest has one.  Assign each vertex the squarefree part of
    // its tree-path weight product from the root; a non-tree edge {u, v, w}
    // closes a square cycle iff sf(val_u * val_v * w) == 1.
    std::vector<Weight> val(n, 0);
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (val[root]) continue;
        val[root] = 1;
        parent[root] = root;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                Weight w = d.pair_weight(u, v);
                if (w == 0) continue;
                if (!val[v]) {
                    val[v] = sf_mul(val[u], squarefree_part(w));
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u] && u < v) {
                    if (sf_mul(sf_mul(val[u], val[v]), squarefree_part(w)) != 1)
                        throw error(errc::cycle_not_square, "cycle through edge {" + std::to_string(u) + ", " +
                                                                std::to_string(v) + "} has non-square weight product");
                }
            }
        }
    }
    return d;
}

Diagram induced_subdiagram(const Diagram& d, const VertexSet& vertices) {
    int n = d.size();
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= n) throw error(errc::out_of_range, "vertex " + std::to_string(v));
        if (pos[v] != -1) throw error(errc::out_of_range, "vertex " + std::to_string(v) + " repeated");
        pos[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (int u : vertices)
        for (int v : vertices)
            if (d.has_edge(u, v)) edges.push_back({pos[u], pos[v], d.weight(u, v)});
    return new_diagram(static_cast<int>(vertices.size()), edges);
}

std::vector<VertexSet> chordless_cycles(const Diagram& d) {
    int n = d.size();
    if (n > 25) throw error(errc::size_limit, "chordless cycle scan limited to 25 vertices");
    std::vector<VertexSet> cycles;
    if (n < 3) return cycles;

    std::vector<std::uint32_t> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && d.adjacent(i, j)) adj[i] |= 1u << j;

    // A vertex subset induces a chordless cycle iff the induced subgraph is
    // connected with every degree exactly 2.
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int k = std::popcount(s);
        if (k < 3) continue;
        bool deg_ok = true;
        for (int v = 0; v < n && deg_ok; ++v)
            if (s >> v & 1)
                if (std::popcount(adj[v] & s) != 2) deg_ok = false;
        if (!deg_ok) continue;

        int start = std::countr_zero(s);
        std::uint32_t seen = 1u << start;
        VertexSet order{start};
        int cur = start;
        while (true) {
            std::uint32_t next_mask = adj[cur] & s & ~seen;
            if (!next_mask) break;
            int next = std::countr_zero(next_mask);
            seen |= 1u << next;
            order.push_back(next);
            cur = next;
        }
        if (std::popcount(seen) == k) cycles.push_back(order);
    }
    return cycles;
}

bool cycle_is_oriented(const Diagram& d, const VertexSet& cycle) {
    int L = static_cast<int>(cycle.size());
    int forward = 0;
    for (int i = 0; i < L; ++i)
        if (d.has_edge(cycle[i], cycle[(i + 1) % L])) ++forward;
    return forward == L || forward == 0;
}

bool has_non_oriented_cycle(const Diagram& d) {
    for (const VertexSet& c : chordless_cycles(d))
        if (!cycle_is_oriented(d, c)) return true;
    return false;
}

bool is_skew_symmetrizable(const IntMatrix& b) {
    int n = b.n;
    if (n < 1 || static_cast<std::size_t>(n) * n != b.a.size()) return false;
    for (int i = 0; i < n; ++i) {
        if (b.at(i, i) != 0) return false;
        for (int j = i + 1; j < n; ++j) {
            Weight x = b.at(i, j), y = b.at(j, i);
            if ((x == 0) != (y == 0)) return false;
            if (x != 0 && ((x > 0) == (y > 0))) return false;
        }
    }

    // d_i * b_ij = -d_j * b_ji fixes every ratio d_i / d_j along edges of the
    // support graph; propagate from a root and check closure.
    std::vector<Weight> num(n, 0), den(n, 0);
    auto reduce = [](Weight& p, Weight& q) {
        Weight g = std::gcd(p, q);
        p /= g;
        q /= g;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root]) continue;
        num[root] = den[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v) {
                if (b.at(u, v) == 0) continue;
                // d_v = d_u * |b_uv| / |b_vu|
                Weight p = num[u] * std::abs(b.at(u, v));
                Weight r = den[u] * std::abs(b.at(v, u));
                reduce(p, r);
                if (!num[v]) {
                    num[v] = p;
                    den[v] = r;
                    q.push(v);
                } else if (num[v] != p || den[v] != r) {
                    return false;
                }
            }
        }
    }
    return true;
}

Diagram diagram_of_matrix(const IntMatrix& b) {
    if (!is_skew_symmetrizable(b)) throw error(errc::not_skew_symmetrizable, "matrix has no positive symmetrizer");
    std::vector<Edge> edges;
    for (int i = 0; i < b.n; ++i)
        for (int j = 0; j < b.n; ++j)
            if (b.at(i, j) > 0) edges.push_back({i, j, b.at(i, j) * -b.at(j, i)});
    return new_diagram(b.n, edges);
}

std::vector<VertexSet> connected_components(const Diagram& d) {
    int n = d.size();
    std::vector<VertexSet> comps;
    std::vector<bool> seen(n, false);
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v = 0; v < n; ++v)
                if (!seen[v] && d.adjacent(u, v)) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Diagram& d) { return connected_components(d).size() == 1; }

} // namespace cdiag
