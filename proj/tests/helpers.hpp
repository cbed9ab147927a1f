#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cdiag/bm.hpp"
#include "cdiag/canon.hpp"
#include "cdiag/diagram.hpp"

namespace testutil {

using namespace cdiag;

// Connected diagram built from a random spanning tree plus extra edges
// whose weights complete each new cycle to a square product.  Valid by
// construction; new_diagram re-checks anyway.
inline Diagram random_diagram(std::mt19937& rng, int n, double extra_edge_prob = 0.3, Weight max_tree_weight = 3) {
    std::uniform_int_distribution<Weight> wd(1, max_tree_weight);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<Edge> edges;
    std::vector<Weight> cls(n, 1); // squarefree class of the tree path to 0
    auto sf_mul = [](Weight a, Weight b) {
        Weight g = std::gcd(a, b);
        return (a / g) * (b / g);
    };
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pd(0, v - 1);
        int u = pd(rng);
        Weight w = wd(rng);
        cls[v] = sf_mul(cls[u], squarefree_part(w));
        if (coin(rng))
            edges.push_back({u, v, w});
        else
            edges.push_back({v, u, w});
    }
    std::uniform_real_distribution<double> pr(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool adjacent = false;
            for (const Edge& e : edges)
                if ((e.tail == u && e.head == v) || (e.tail == v && e.head == u)) adjacent = true;
            if (adjacent || pr(rng) > extra_edge_prob) continue;
            Weight w = sf_mul(cls[u], cls[v]); // smallest weight closing a square cycle
            if (w > 4) continue;
            if (w == 1 && coin(rng)) w = 4;
            if (coin(rng))
                edges.push_back({u, v, w});
            else
                edges.push_back({v, u, w});
        }
    return new_diagram(n, edges);
}

// Random connected graph on n vertices with a random orientation.
inline Diagram random_simply_laced(std::mt19937& rng, int n, double edge_prob = 0.4) {
    std::uniform_real_distribution<double> pr(0.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (pr(rng) > edge_prob) continue;
                if (coin(rng))
                    edges.push_back({u, v, 1});
                else
                    edges.push_back({v, u, 1});
            }
        Diagram d = new_diagram(n, edges);
        if (is_connected(d)) return d;
    }
}

inline Diagram relabel(const Diagram& d, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : d.edges()) edges.push_back({perm[e.tail], perm[e.head], e.weight});
    return new_diagram(d.size(), edges);
}

inline Diagram random_relabel(std::mt19937& rng, const Diagram& d) {
    std::vector<int> perm(d.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(d, perm);
}

// Reference canonicalization: the minimum sorted triple list over all n!
// relabelings.
inline std::vector<Edge> brute_min_triples(const Diagram& d, bool directed) {
    int n = d.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Edge> best;
    bool have = false;
    do {
        std::vector<Edge> cur;
        for (const Edge& e : d.edges()) {
            int t = perm[e.tail], h = perm[e.head];
            if (!directed && t > h) std::swap(t, h);
            cur.push_back({t, h, e.weight});
        }
        std::sort(cur.begin(), cur.end());
        if (!have || cur < best) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// All graphs on n vertices up to isomorphism (connected or not), grown a
// vertex at a time and deduplicated by canonical key.
inline std::vector<BmGraph> all_graphs(int n) {
    std::vector<BmGraph> cur{bm_graph(1, {})};
    for (int k = 2; k <= n; ++k) {
        std::vector<BmGraph> next;
        std::vector<std::uint64_t> seen;
        for (const BmGraph& g : cur) {
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                BmGraph h;
                h.n = k;
                h.rows = g.rows;
                h.rows.push_back(mask);
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1) h.rows[v] |= 1u << (k - 1);
                std::uint64_t key = bm_canonical_key(h);
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    next.push_back(std::move(h));
                }
            }
        }
        cur = std::move(next);
    }
    return cur;
}

inline std::vector<BmGraph> connected_graphs(int n) {
    std::vector<BmGraph> out;
    for (const BmGraph& g : all_graphs(n))
        if (bm_connected(g)) out.push_back(g);
    return out;
}

// All orientations of g in which every chordless cycle is cyclic, as
// simply-laced diagrams; deduplicates up to isomorphism when dedup is set.
inline std::vector<Diagram> cyclic_orientations(const BmGraph& g, bool dedup) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.edge(i, j)) edges.emplace_back(i, j);
    int m = static_cast<int>(edges.size());

    std::vector<Edge> ref;
    for (auto [u, v] : edges) ref.push_back({u, v, 1});
    std::vector<VertexSet> cycles = chordless_cycles(new_diagram(g.n, ref));

    std::vector<Diagram> out;
    std::vector<CanonicalForm> forms;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> cur;
        for (int e = 0; e < m; ++e) {
            auto [u, v] = edges[e];
            if (mask >> e & 1)
                cur.push_back({v, u, 1});
            else
                cur.push_back({u, v, 1});
        }
        Diagram d = new_diagram(g.n, cur);
        bool ok = true;
        for (const VertexSet& c : cycles)
            if (!cycle_is_oriented(d, c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        if (dedup) {
            CanonicalForm f = canonical_form(d);
            if (std::find(forms.begin(), forms.end(), f) != forms.end()) continue;
            forms.push_back(std::move(f));
        }
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace testutil
