#include "cdiag/bm.hpp"


#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cdiag {

namespace {

void check_vector(const BmGraph& g, const F2Vector& v, const char* what) {
    if (v.n != g.n)
        throw error(errc::length_mismatch,
                    std::string(what) + " has " + std::to_string(v.n) + " coordinates, graph has " + std::to_string(g.n));
}

} // namespace

int BmGraph::edge_count() const {
    int total = 0;
    for (std::uint32_t r : rows) total += std::popcount(r);
    return total / 2;
}

BmGraph bm_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1 || n > 25) throw error(errc::bad_params, "graph size " + std::to_string(n));
    BmGraph g;
    g.n = n;
    g.rows.assign(n, 0);
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw error(errc::out_of_range, "edge {" + std::to_string(i) + ", " + std::to_string(j) + "}");
        if (i == j) throw error(errc::self_loop, "loop at vertex " + std::to_string(i));
        if (g.edge(i, j)) throw error(errc::duplicate_edge, "edge {" + std::to_string(i) + ", " + std::to_string(j) + "}");
        g.rows[i] |= 1u << j;
        g.rows[j] |= 1u << i;
    }
    return g;
}

BmGraph odd_weight_skeleton(const Diagram& d) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : d.edges())
        if (e.weight & 1) edges.emplace_back(e.tail, e.head);
    return bm_graph(d.size(), edges);
}

BmGraph skeleton_graph(const Diagram& d) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : d.edges()) edges.emplace_back(e.tail, e.head);
    return bm_graph(d.size(), edges);
}

bool bm_connected(const BmGraph& g) {
    std::uint32_t seen = 1, grow = 1;
    while (grow) {
        std::uint32_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if (grow >> v & 1) next |= g.rows[v];
        grow = next & ~seen;
        seen |= next;
    }
    return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

int omega_eval(const BmGraph& g, const F2Vector& a, const F2Vector& b) {
    check_vector(g, a, "left vector");
    check_vector(g, b, "right vector");
    int parity = 0;
    for (int i = 0; i < g.n; ++i)
        if (a.bits >> i & 1) parity ^= std::popcount(g.rows[i] & b.bits) & 1;
    return parity;
}

int q_eval(const BmGraph& g, const F2Vector& v) {
    check_vector(g, v, "vector");
    int edges_inside = 0;
    for (int i = 0; i < g.n; ++i)
        if (v.bits >> i & 1) edges_inside += std::popcount(g.rows[i] & v.bits);
    return (std::popcount(v.bits) + edges_inside / 2) & 1;
}

std::vector<F2Vector> radical_basis(const BmGraph& g) {
    int n = g.n;
    std::vector<std::uint32_t> m = g.rows;

    // Reduced echelon form; kernel vectors come from the non-pivot columns.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int row = -1;
        for (int r = rank; r < n; ++r)
            if (m[r] >> col & 1) {
                row = r;
                break;
            }
        if (row < 0) continue;
        std::swap(m[rank], m[row]);
        for (int r = 0; r < n; ++r)
            if (r != rank && (m[r] >> col & 1)) m[r] ^= m[rank];
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<F2Vector> basis;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        F2Vector v{n, 1u << free};
        for (int r = 0; r < rank; ++r)
            if (m[r] >> free & 1) v.bits |= 1u << pivot_col[r];
        basis.push_back(v);
    }
    return basis;
}

std::vector<F2Vector> v00_basis(const BmGraph& g) {
    std::vector<F2Vector> v0 = radical_basis(g);
    int pivot = -1;
    for (std::size_t i = 0; i < v0.size(); ++i)
        if (q_eval(g, v0[i])) {
            pivot = static_cast<int>(i);
            break;
        }
    if (pivot < 0) return v0;

    // Q is linear on the radical (Omega vanishes there), so its kernel is a
    // hyperplane of V0 once some basis vector has Q = 1.
    std::vector<F2Vector> out;
    for (std::size_t i = 0; i < v0.size(); ++i) {
        if (static_cast<int>(i) == pivot) continue;
        F2Vector v = v0[i];
        if (q_eval(g, v)) v.bits ^= v0[pivot].bits;
        out.push_back(v);
    }
    return out;
}

int arf(const BmGraph& g) {
    for (const F2Vector& v : radical_basis(g))
        if (q_eval(g, v)) throw error(errc::arf_undefined, "Q does not vanish on the radical");

    std::vector<F2Vector> work;
    for (int i = 0; i < g.n; ++i) work.push_back({g.n, 1u << i});
    int total = 0;
    while (true) {
        int ei = -1, fi = -1;
        for (std::size_t i = 0; i < work.size() && ei < 0; ++i)
            for (std::size_t j = i + 1; j < work.size(); ++j)
                if (omega_eval(g, work[i], work[j])) {
                    ei = static_cast<int>(i);
                    fi = static_cast<int>(j);
                    break;
                }
        if (ei < 0) break;
        F2Vector e = work[ei], f = work[fi];
        work.erase(work.begin() + fi);
        work.erase(work.begin() + ei);
        for (F2Vector& z : work) {
            if (omega_eval(g, z, f)) z.bits ^= e.bits;
            if (omega_eval(g, z, e)) z.bits ^= f.bits;
        }
        total ^= q_eval(g, e) & q_eval(g, f);
    }
    return total;
}

BmInvariants bm_invariants(const BmGraph& g) {
    BmInvariants inv;
    inv.n = g.n;
    inv.dim_v0 = static_cast<int>(radical_basis(g).size());
    inv.dim_v00 = static_cast<int>(v00_basis(g).size());
    if (inv.dim_v0 == inv.dim_v00) inv.arf = arf(g);
    return inv;
}

BmGraph basic_move(const BmGraph& g, int c, int a) {
    if (c < 0 || c >= g.n || a < 0 || a >= g.n)
        throw error(errc::out_of_range, "vertices {" + std::to_string(c) + ", " + std::to_string(a) + "}");
    if (!g.edge(c, a))
        throw error(errc::precondition_violated,
                    "vertices " + std::to_string(c) + " and " + std::to_string(a) + " are not adjacent");
    BmGraph out = g;
    std::uint32_t row = g.rows[c] ^ g.rows[a];
    row &= ~(1u << c);
    row |= 1u << a;
    out.rows[c] = row;
    for (int x = 0; x < g.n; ++x) {
        if (x == c) continue;
        if (row >> x & 1)
            out.rows[x] |= 1u << c;
        else
            out.rows[x] &= ~(1u << c);
    }
    return out;
}

namespace {

// Maximizes the upper-triangle bit string read column by column: assigning
// label j appends j adjacency bits to labels 0..j-1, so a partial
// assignment fixes an exact prefix of the key and strictly smaller
// prefixes are cut.  Branches that tie are collapsed whenever two
// candidates are twins (same neighborhoods off each other): swapping twins
// is an automorphism, so their subtrees produce the same strings.  That
// keeps highly symmetric graphs, complete ones in particular, from
// exploding the tie exploration.
struct KeyCanonicalizer {
    const BmGraph& g;
    int n;
    std::vector<int> ord;
    std::vector<bool> used;
    std::uint64_t best = 0;
    bool have_best = false;
    int total_bits;

    explicit KeyCanonicalizer(const BmGraph& graph)
        : g(graph), n(graph.n), ord(graph.n, -1), used(graph.n, false), total_bits(graph.n * (graph.n - 1) / 2) {}

    bool twins(int u, int v) const {
        std::uint32_t mask = ~(1u << u | 1u << v);
        return (g.rows[u] & mask) == (g.rows[v] & mask);
    }

    void search(int depth, std::uint64_t prefix, int bits_used) {
        if (depth == n) {
            std::uint64_t key = prefix << (total_bits - bits_used);
            if (!have_best || key > best) {
                best = key;
                have_best = true;
            }
            return;
        }
        std::vector<std::pair<std::uint32_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint32_t append = 0;
            for (int i = 0; i < depth; ++i) append = append << 1 | (g.edge(v, ord[i]) ? 1u : 0u);
            cands.emplace_back(append, v);
        }
        std::sort(cands.begin(), cands.end(), std::greater<>());
        std::vector<int> tried;
        for (auto [append, v] : cands) {
            std::uint64_t p = (prefix << depth) | append;
            int nb = bits_used + depth;
            if (have_best && nb > 0 && p < (best >> (total_bits - nb))) continue;
            bool redundant = false;
            for (int u : tried)
                if (twins(u, v)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            tried.push_back(v);
            ord[depth] = v;
            used[v] = true;
            search(depth + 1, p, nb);
            used[v] = false;
        }
    }
};

} // namespace

std::uint64_t bm_canonical_key(const BmGraph& g) {
    if (g.n > 11) throw error(errc::unsupported_size, "canonical key supports up to 11 vertices");
    KeyCanonicalizer km(g);
    km.search(0, 0, 0);
    return (static_cast<std::uint64_t>(g.n) << 56) | km.best;
}

namespace {

struct OrbitCache {
    std::mutex mu;
    std::unordered_map<std::uint64_t, int> orbit_of; // completed orbits only
    int next_id = 0;
};

OrbitCache& cache() {
    static OrbitCache c;
    return c;
}

// Breadth-first orbit of `start` under basic moves.  Returns true as soon
// as `target_key` appears; on exhaustion registers the orbit and returns
// false; nullopt when max_states is hit.
std::optional<bool> orbit_search(const BmGraph& start, std::uint64_t target_key, std::size_t max_states) {
    std::uint64_t start_key = bm_canonical_key(start);
    if (start_key == target_key) return true;

    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto a = cache().orbit_of.find(start_key);
        if (a != cache().orbit_of.end()) {
            auto b = cache().orbit_of.find(target_key);
            return b != cache().orbit_of.end() && a->second == b->second;
        }
        auto b = cache().orbit_of.find(target_key);
        if (b != cache().orbit_of.end()) return false; // complete orbit lacking start_key
    }

    std::unordered_set<std::uint64_t> seen{start_key};
    std::deque<BmGraph> queue{start};
    while (!queue.empty()) {
        BmGraph cur = queue.front();
        queue.pop_front();
        for (int c = 0; c < cur.n; ++c)
            for (int a = 0; a < cur.n; ++a) {
                if (a == c || !cur.edge(c, a)) continue;
                BmGraph nxt = basic_move(cur, c, a);
                std::uint64_t key = bm_canonical_key(nxt);
                if (!seen.insert(key).second) continue;
                if (key == target_key) return true;
                if (seen.size() > max_states) return std::nullopt;
                queue.push_back(std::move(nxt));
            }
    }

    std::lock_guard<std::mutex> lock(cache().mu);
    if (!cache().orbit_of.count(start_key)) {
        int id = cache().next_id++;
        for (std::uint64_t k : seen) cache().orbit_of.emplace(k, id);
    }
    return false;
}

BmGraph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return bm_graph(n, e);
}

BmGraph d_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 3, n - 1);
    return bm_graph(n, e);
}

BmGraph e_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(2, n - 1);
    return bm_graph(n, e);
}

std::vector<BmGraph> dynkin_graphs(int n) {
    std::vector<BmGraph> out;
    out.push_back(path_graph(n));
    if (n >= 4) out.push_back(d_graph(n));
    if (n >= 6 && n <= 8) out.push_back(e_graph(n));
    return out;
}

} // namespace

std::optional<bool> bm_equivalent(const BmGraph& a, const BmGraph& b, std::size_t max_states) {
    if (a.n != b.n)
        throw error(errc::length_mismatch,
                    "graphs have " + std::to_string(a.n) + " and " + std::to_string(b.n) + " vertices");
    // Differing invariants settle the negative case without touching the
    // orbit, which would otherwise have to be enumerated in full.
    if (bm_invariants(a) != bm_invariants(b)) return false;
    return orbit_search(a, bm_canonical_key(b), max_states);
}

BmClassAnswer dynkin_bm_class_by_invariants(const BmGraph& g) {
    if (g.n < 6 || g.n > 8)
        throw error(errc::unsupported_size, "invariant test covers 6..8 vertices, got " + std::to_string(g.n));
    if (!bm_connected(g)) throw error(errc::not_connected, "invariant test needs a connected graph");
    BmInvariants inv = bm_invariants(g);
    switch (g.n) {
    case 6:
        if (inv.dim_v0 == 0) return BmClassAnswer::yes;
        if (inv.dim_v0 == 2 && inv.dim_v00 == 1) return BmClassAnswer::yes;
        return BmClassAnswer::no;
    case 7:
        if (inv.dim_v0 != 1) return BmClassAnswer::no;
        if (inv.dim_v00 == 0) return BmClassAnswer::yes;
        return inv.arf && *inv.arf == 0 ? BmClassAnswer::yes : BmClassAnswer::no;
    default:
        if (inv.dim_v0 == 0) return *inv.arf == 0 ? BmClassAnswer::yes : BmClassAnswer::no;
        // D8 is the only 8-vertex Dynkin graph with a nonzero radical; its
        // invariants (dim V0 = dim V00 = 2, Arf 0) are shared by
        // 2-infinite graphs, so matches fall back to reachability.
        if (inv.dim_v0 == 2 && inv.dim_v00 == 2 && inv.arf && *inv.arf == 0)
            return BmClassAnswer::needs_fallback;
        return BmClassAnswer::no;
    }
}

bool bm_dynkin_graph(const BmGraph& g) {
    if (g.n > 9) throw error(errc::unsupported_size, "settled only up to 9 vertices");
    if (!bm_connected(g)) throw error(errc::not_connected, "needs a connected graph");
    if (g.n <= 2) return true;
    if (g.n >= 6 && g.n <= 8) {
        switch (dynkin_bm_class_by_invariants(g)) {
        case BmClassAnswer::yes: return true;
        case BmClassAnswer::no: return false;
        case BmClassAnswer::needs_fallback: break;
        }
        return *bm_equivalent(d_graph(8), g);
    }
    // Search from the known side: Dynkin orbits are small (a few hundred
    // states at 9 vertices), while an arbitrary graph's orbit can be many
    // times larger.  A negative answer then costs one exhaustion of the
    // small orbit, which the cache also retains for later queries.
    for (const BmGraph& target : dynkin_graphs(g.n))
        if (*bm_equivalent(target, g)) return true;
    return false;
}

std::optional<bool> is_2finite_via_bm(const Diagram& d) {
    if (!is_connected(d)) throw error(errc::precondition_violated, "diagram is not connected");
    if (!d.simply_laced()) throw error(errc::precondition_violated, "diagram is not simply laced");
    if (has_non_oriented_cycle(d)) throw error(errc::precondition_violated, "diagram has a non-oriented chordless cycle");
    BmGraph g = skeleton_graph(d);
    if (g.n <= 9) return bm_dynkin_graph(g);
    bool any_inconclusive = false;
    for (const BmGraph& target : dynkin_graphs(g.n)) {
        std::optional<bool> r = bm_equivalent(target, g);
        if (r && *r) return true;
        if (!r) any_inconclusive = true;
    }
    if (any_inconclusive) return std::nullopt;
    return false;
}

} // namespace cdiag
