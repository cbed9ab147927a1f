#include "cdiag/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>

#include "cdiag/bm.hpp"
#include "cdiag/dynkin.hpp"
#include "cdiag/errors.hpp"
#include "cdiag/parallel.hpp"

namespace cdiag {

namespace {

int form_limit(const Diagram& d) { return std::max(d.size(), kDefaultSizeLimit); }

CanonicalForm canon(const Diagram& d) { return canonical_form(d, form_limit(d)); }
CanonicalForm skel(const Diagram& d) { return skeleton_form(d, form_limit(d)); }

void require(bool ok, const char* what) {
    if (!ok) throw error(errc::bad_params, what);
}

} // namespace

int series_vertex_count(const SeriesParams& p) {
    switch (p.family) {
    case SeriesFamily::a_cycle:
    case SeriesFamily::b_path:
    case SeriesFamily::c_path:
    case SeriesFamily::d_path: return p.rank + 1;
    case SeriesFamily::b_cycle_path: return p.m + p.r + 1;
    case SeriesFamily::b_cycle: return p.r + 1;
    case SeriesFamily::d_cycle_path: return p.m + p.r + 2;
    case SeriesFamily::d_cycle: return p.r + 2;
    case SeriesFamily::d_two_cycles: return p.m + p.r + p.s;
    case SeriesFamily::i_pair: return 2;
    }
    throw error(errc::bad_params, "unknown series family");
}

std::string series_label(const SeriesParams& p) {
    auto sub = [](int rank) { return std::to_string(rank) + "(1)"; };
    switch (p.family) {
    case SeriesFamily::a_cycle: return "A" + sub(p.rank);
    case SeriesFamily::b_path: return "B" + sub(p.rank);
    case SeriesFamily::c_path: return "C" + sub(p.rank);
    case SeriesFamily::d_path: return "D" + sub(p.rank);
    case SeriesFamily::b_cycle_path:
        return "B" + sub(p.m + p.r) + "(" + std::to_string(p.m) + "," + std::to_string(p.r) + ")";
    case SeriesFamily::b_cycle: return "B" + sub(p.r) + "(" + std::to_string(p.r) + ")";
    case SeriesFamily::d_cycle_path:
        return "D" + sub(p.m + p.r + 1) + "(" + std::to_string(p.m) + "," + std::to_string(p.r) + ")";
    case SeriesFamily::d_cycle: return "D" + sub(p.r + 1) + "(" + std::to_string(p.r) + ")";
    case SeriesFamily::d_two_cycles:
        return "D" + sub(p.m + p.r + p.s - 1) + "(" + std::to_string(p.m) + "," +
               std::to_string(p.r) + "," + std::to_string(p.s) + ")";
    case SeriesFamily::i_pair: return "I2(" + std::to_string(p.a) + ")";
    }
    throw error(errc::bad_params, "unknown series family");
}

namespace {

void validate_series(const SeriesParams& p) {
    switch (p.family) {
    case SeriesFamily::a_cycle: require(p.rank >= 2, "a_cycle needs rank >= 2"); return;
    case SeriesFamily::b_path: require(p.rank >= 3, "b_path needs rank >= 3"); return;
    case SeriesFamily::c_path: require(p.rank >= 2, "c_path needs rank >= 2"); return;
    case SeriesFamily::d_path: require(p.rank >= 4, "d_path needs rank >= 4"); return;
    case SeriesFamily::b_cycle_path:
        require(p.m >= 1 && p.r >= 3, "b_cycle_path needs m >= 1 and r >= 3");
        return;
    case SeriesFamily::b_cycle: require(p.r >= 3, "b_cycle needs r >= 3"); return;
    case SeriesFamily::d_cycle_path:
        require(p.m >= 1 && p.r >= 3, "d_cycle_path needs m >= 1 and r >= 3");
        return;
    case SeriesFamily::d_cycle: require(p.r >= 3, "d_cycle needs r >= 3"); return;
    case SeriesFamily::d_two_cycles:
        require(p.m >= 1 && p.r >= 3 && p.s >= 3, "d_two_cycles needs m >= 1 and r, s >= 3");
        return;
    case SeriesFamily::i_pair: require(p.a >= 4, "i_pair needs a >= 4"); return;
    }
    throw error(errc::bad_params, "unknown series family");
}

} // namespace

Diagram make_series(const SeriesParams& p, const OrientationSpec& spec) {
    validate_series(p);
    const int v = series_vertex_count(p);
    std::mt19937_64 rng(spec.seed);
    std::vector<Edge> edges;
    // Free edges default to the listed direction; a nonzero seed flips a
    // pseudorandom subset.  Cycle and junction edges are never free.
    auto free_edge = [&](int a, int b, Weight w) {
        if (spec.seed != 0 && (rng() & 1)) std::swap(a, b);
        edges.push_back({a, b, w});
    };
    // Oriented cycle on vertices first..first+len-1.
    auto cycle = [&](int first, int len) {
        for (int i = 0; i < len; ++i)
            edges.push_back({first + i, first + (i + 1) % len, 1});
    };
    // Apex u tied to the endpoints of the cycle edge x1 -> x2 so that the
    // junction triangle is oriented: x2 -> u -> x1.
    auto junction = [&](int x1, int x2, int u, Weight w) {
        edges.push_back({x2, u, w});
        edges.push_back({u, x1, w});
    };

    switch (p.family) {
    case SeriesFamily::a_cycle: {
        // The cycle must not be oriented; default layout reverses the
        // closing edge, seeded layouts flip an edge when the draw came
        // out cyclic.
        std::vector<std::pair<int, int>> dirs(v);
        int forward = 0;
        for (int i = 0; i < v; ++i) {
            int a = i, b = (i + 1) % v;
            bool flip = spec.seed == 0 ? i == v - 1 : (rng() & 1) != 0;
            dirs[i] = flip ? std::pair{b, a} : std::pair{a, b};
            forward += !flip;
        }
        if (forward == 0 || forward == v) std::swap(dirs[0].first, dirs[0].second);
        for (auto [a, b] : dirs) edges.push_back({a, b, 1});
        break;
    }
    case SeriesFamily::b_path:
        free_edge(0, 2, 1);
        free_edge(1, 2, 1);
        for (int i = 2; i < p.rank; ++i) free_edge(i, i + 1, i + 1 == p.rank ? 2 : 1);
        break;
    case SeriesFamily::c_path:
        for (int i = 0; i < p.rank; ++i) free_edge(i, i + 1, i == 0 || i == p.rank - 1 ? 2 : 1);
        break;
    case SeriesFamily::d_path:
        free_edge(0, 2, 1);
        free_edge(1, 2, 1);
        for (int i = 2; i < p.rank - 2; ++i) free_edge(i, i + 1, 1);
        free_edge(p.rank - 2, p.rank - 1, 1);
        free_edge(p.rank - 2, p.rank, 1);
        break;
    case SeriesFamily::b_cycle_path:
        cycle(0, p.r);
        junction(0, 1, p.r, 1);
        for (int i = p.r; i < p.r + p.m; ++i) free_edge(i, i + 1, i + 1 == p.r + p.m ? 2 : 1);
        break;
    case SeriesFamily::b_cycle:
        cycle(0, p.r);
        junction(0, 1, p.r, 2);
        break;
    case SeriesFamily::d_cycle_path:
        cycle(0, p.r);
        junction(0, 1, p.r, 1);
        for (int i = p.r; i + 1 < p.r + p.m; ++i) free_edge(i, i + 1, 1);
        free_edge(p.r + p.m - 1, p.r + p.m, 1);
        free_edge(p.r + p.m - 1, p.r + p.m + 1, 1);
        break;
    case SeriesFamily::d_cycle:
        cycle(0, p.r);
        junction(0, 1, p.r, 1);
        junction(0, 1, p.r + 1, 1);
        break;
    case SeriesFamily::d_two_cycles:
        cycle(0, p.r);
        cycle(p.r, p.s);
        junction(0, 1, p.r + p.s, 1);
        junction(p.r, p.r + 1, p.r + p.s + p.m - 1, 1);
        for (int i = p.r + p.s; i + 1 < p.r + p.s + p.m; ++i) free_edge(i, i + 1, 1);
        break;
    case SeriesFamily::i_pair:
        free_edge(0, 1, p.a);
        break;
    }
    return new_diagram(v, edges);
}

namespace {

// Every orientation of the layout whose distinguished cycle is not
// oriented, one per isomorphism class, ordered by canonical form.
std::vector<Diagram> non_oriented_orientations(int n, const std::vector<Edge>& layout,
                                               const VertexSet& cyc) {
    std::map<CanonicalForm, Diagram> seen;
    const int e = static_cast<int>(layout.size());
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        std::vector<Edge> edges = layout;
        for (int i = 0; i < e; ++i)
            if (mask >> i & 1) std::swap(edges[i].tail, edges[i].head);
        Diagram d = new_diagram(n, edges);
        if (cycle_is_oriented(d, cyc)) continue;
        seen.emplace(canonical_form(d), std::move(d));
    }
    std::vector<Diagram> out;
    out.reserve(seen.size());
    for (auto& [f, d] : seen) out.push_back(std::move(d));
    return out;
}

struct Table2Group {
    std::string label_base;
    std::vector<Diagram> members;
};

std::vector<Table2Group> table2_groups() {
    std::vector<Table2Group> out;
    out.push_back({"NO4(2,1,2,1)",
                   non_oriented_orientations(
                       4, {{0, 1, 2}, {1, 2, 1}, {2, 3, 2}, {3, 0, 1}}, {0, 1, 2, 3})});
    out.push_back({"NO3(2,2,1)",
                   non_oriented_orientations(3, {{0, 1, 2}, {1, 2, 2}, {2, 0, 1}}, {0, 1, 2})});
    out.push_back({"NO3(3,3,1)",
                   non_oriented_orientations(3, {{0, 1, 3}, {1, 2, 3}, {2, 0, 1}}, {0, 1, 2})});
    return out;
}

struct NamedFixture {
    std::string label;
    Diagram diagram;
};

std::vector<NamedFixture> f4_fixtures() {
    // Vertex order a1, a2, b1, b2, c1 except where noted; every cycle is
    // oriented and every cycle weight product is a square.
    std::vector<NamedFixture> out;
    out.push_back({"F4(1)",
                   new_diagram(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}})});
    out.push_back({"F4(1)(3^1;1;2^1)_1",
                   new_diagram(5, {{0, 2, 1}, {2, 1, 1}, {1, 0, 1}, {2, 3, 2}, {3, 4, 1}})});
    out.push_back({"F4(1)(3^1;1;2^1)_2",
                   new_diagram(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 2, 2}})});
    out.push_back({"F4(1)(3^2;0)",
                   new_diagram(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {2, 3, 2}, {3, 4, 1}, {4, 2, 2}})});
    out.push_back({"F4(1)(3^1;1;1^2)",
                   new_diagram(5, {{0, 1, 1}, {1, 2, 2}, {2, 4, 2}, {4, 1, 1}, {2, 3, 1}})});
    // b1, a2, a1, c1, b2: two triangles sharing the weight-2 edge b1-b2
    // plus a pendant vertex at a2.
    out.push_back({"F4(1)(3^2;0;1^1)",
                   new_diagram(5, {{0, 1, 1}, {1, 4, 2}, {4, 0, 2}, {0, 3, 2}, {3, 4, 1}, {1, 2, 1}})});
    out.push_back({"F4(1)(4^1;3^1)",
                   new_diagram(5, {{2, 0, 1}, {0, 1, 1}, {1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {4, 1, 2}})});
    return out;
}

} // namespace

std::vector<Diagram> table2_entries() {
    std::vector<Diagram> out;
    for (auto& g : table2_groups())
        for (auto& d : g.members) out.push_back(std::move(d));
    return out;
}

std::vector<Diagram> table3_f4_fixtures() {
    std::vector<Diagram> out;
    for (auto& f : f4_fixtures()) out.push_back(std::move(f.diagram));
    return out;
}

std::vector<CatalogEntry> fixture_entries() {
    std::vector<CatalogEntry> out;
    for (const auto& g : table2_groups()) {
        int i = 0;
        for (const Diagram& d : g.members) {
            CatalogEntry e;
            e.label = g.label_base + "_" + std::to_string(++i);
            e.kind = EntryKind{.tag = EntryKind::Tag::fixture, .table = 2};
            e.form = canon(d);
            e.skeleton_form = skel(d);
            out.push_back(std::move(e));
        }
    }
    for (const auto& f : f4_fixtures()) {
        CatalogEntry e;
        e.label = f.label;
        e.kind = EntryKind{.tag = EntryKind::Tag::fixture, .table = 3};
        e.form = canon(f.diagram);
        e.skeleton_form = skel(f.diagram);
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

// Underlying-graph shape statistics used to name generated entries.
struct GraphStats {
    std::vector<int> cycle_lengths; // descending
    int lone_triangles = 0;         // triangles vertex-disjoint from all other cycles
    std::vector<int> branch_sizes;  // components after removing cycle vertices
    std::vector<int> high_degrees;  // degrees >= 4
};

GraphStats graph_stats(const Diagram& d) {
    GraphStats s;
    auto cycles = chordless_cycles(d);
    std::vector<char> on_cycle(d.size(), 0);
    for (const auto& c : cycles) {
        s.cycle_lengths.push_back(static_cast<int>(c.size()));
        for (int v : c) on_cycle[v] = 1;
    }
    std::sort(s.cycle_lengths.rbegin(), s.cycle_lengths.rend());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (cycles[i].size() != 3) continue;
        bool lone = true;
        for (std::size_t j = 0; j < cycles.size() && lone; ++j) {
            if (j == i) continue;
            for (int v : cycles[j])
                if (std::find(cycles[i].begin(), cycles[i].end(), v) != cycles[i].end()) {
                    lone = false;
                    break;
                }
        }
        s.lone_triangles += lone;
    }
    VertexSet rest;
    for (int v = 0; v < d.size(); ++v)
        if (!on_cycle[v]) rest.push_back(v);
    if (!rest.empty()) {
        Diagram off = induced_subdiagram(d, rest);
        for (const auto& comp : connected_components(off))
            s.branch_sizes.push_back(static_cast<int>(comp.size()));
        std::sort(s.branch_sizes.rbegin(), s.branch_sizes.rend());
    }
    for (int v = 0; v < d.size(); ++v) {
        int deg = 0;
        for (int u = 0; u < d.size(); ++u) deg += u != v && d.adjacent(u, v);
        if (deg >= 4) s.high_degrees.push_back(deg);
    }
    std::sort(s.high_degrees.rbegin(), s.high_degrees.rend());
    return s;
}

// "4^1,3^2" for {4,3,3}; empty input gives "-".
std::string multiset_str(const std::vector<int>& values) {
    if (values.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < values.size();) {
        std::size_t j = i;
        while (j < values.size() && values[j] == values[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(values[i]) + "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string stats_fields(const GraphStats& s) {
    std::string out = multiset_str(s.cycle_lengths) + ";" + std::to_string(s.lone_triangles);
    if (!s.branch_sizes.empty() || !s.high_degrees.empty()) out += ";" + multiset_str(s.branch_sizes);
    if (!s.high_degrees.empty()) out += ";" + multiset_str(s.high_degrees);
    return out;
}

// Entries assembled from deduplicated forms grouped by underlying graph.
// Groups are ordered by skeleton form and labeled by `base_label` on a
// representative; equal labels get "_i" subscripts and groups with
// several orientations suffix "/j" per entry.
std::vector<CatalogEntry>
pack_groups(const std::map<CanonicalForm, std::vector<CanonicalForm>>& groups, const EntryKind& kind,
            const std::function<std::string(const Diagram&)>& base_label) {
    std::vector<std::string> labels;
    labels.reserve(groups.size());
    std::map<std::string, int> total, seen;
    for (const auto& [skelf, forms] : groups) {
        labels.push_back(base_label(diagram_of_form(forms.front())));
        ++total[labels.back()];
    }
    std::vector<CatalogEntry> out;
    std::size_t gi = 0;
    for (const auto& [skelf, forms] : groups) {
        std::string label = labels[gi++];
        if (total[label] > 1) label += "_" + std::to_string(++seen[label]);
        int j = 0;
        for (const CanonicalForm& f : forms) {
            CatalogEntry e;
            e.label = forms.size() > 1 ? label + "/" + std::to_string(++j) : label;
            e.kind = kind;
            e.form = f;
            e.skeleton_form = skelf;
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<BmGraph> bm_deletion_components(const BmGraph& g, int removed) {
    std::vector<char> visited(g.n, 0);
    visited[removed] = 1;
    std::vector<BmGraph> out;
    for (int start = 0; start < g.n; ++start) {
        if (visited[start]) continue;
        std::vector<int> comp{start};
        visited[start] = 1;
        for (std::size_t q = 0; q < comp.size(); ++q)
            for (int u = 0; u < g.n; ++u)
                if (!visited[u] && g.edge(comp[q], u)) {
                    visited[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (g.edge(comp[i], comp[j])) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
        out.push_back(bm_graph(static_cast<int>(comp.size()), edges));
    }
    return out;
}

// A connected weightless graph, viewed as any of its cycle-oriented
// orientations, is minimal 2-infinite exactly when the graph itself is
// not basic-move equivalent to a Dynkin graph while every component of
// every single-vertex deletion is.
bool skeleton_is_minimal_2infinite(const BmGraph& g) {
    if (bm_dynkin_graph(g)) return false;
    for (int v = 0; v < g.n; ++v)
        for (const BmGraph& comp : bm_deletion_components(g, v))
            if (!bm_dynkin_graph(comp)) return false;
    return true;
}

} // namespace

std::vector<CatalogEntry> generate_exceptional(int base_rank, const ExplorationLimits& lim) {
    require(base_rank >= 6 && base_rank <= 8, "base rank must be 6, 7 or 8");
    ClassSummary cls = enumerate_class(dynkin('E', base_rank), lim);
    if (cls.truncated) throw error(errc::limit_exceeded, "base class enumeration truncated");
    std::vector<Diagram> members;
    members.reserve(cls.members.size());
    for (const CanonicalForm& f : cls.members) members.push_back(diagram_of_form(f));

    const int n = base_rank;
    std::mutex memo_mu;
    std::unordered_map<std::uint64_t, bool> minimal_memo;
    std::mutex out_mu;
    std::map<CanonicalForm, CanonicalForm> found; // directed form -> skeleton form

    parallel_ranges(members.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t mi = lo; mi < hi; ++mi) {
            const Diagram& base = members[mi];
            const BmGraph base_skel = skeleton_graph(base);
            const std::vector<Edge> base_edges = base.edges();
            for (std::uint32_t attach = 1; attach < (1u << n); ++attach) {
                BmGraph s;
                s.n = n + 1;
                s.rows = base_skel.rows;
                s.rows.push_back(attach);
                for (int i = 0; i < n; ++i)
                    if (attach >> i & 1) s.rows[i] |= 1u << n;
                const std::uint64_t key = bm_canonical_key(s);
                bool minimal = false, known = false;
                {
                    std::lock_guard lock(memo_mu);
                    auto it = minimal_memo.find(key);
                    if (it != minimal_memo.end()) {
                        minimal = it->second;
                        known = true;
                    }
                }
                if (!known) {
                    minimal = skeleton_is_minimal_2infinite(s);
                    std::lock_guard lock(memo_mu);
                    minimal_memo.emplace(key, minimal);
                }
                if (!minimal) continue;
                std::vector<int> xs;
                for (int i = 0; i < n; ++i)
                    if (attach >> i & 1) xs.push_back(i);
                const int deg = static_cast<int>(xs.size());
                for (std::uint32_t o = 0; o < (1u << deg); ++o) {
                    std::vector<Edge> edges = base_edges;
                    for (int j = 0; j < deg; ++j)
                        edges.push_back(o >> j & 1 ? Edge{xs[j], n, 1} : Edge{n, xs[j], 1});
                    Diagram cand = new_diagram(n + 1, edges);
                    if (has_non_oriented_cycle(cand)) continue;
                    CanonicalForm f = canon(cand);
                    CanonicalForm sf = skel(cand);
                    std::lock_guard lock(out_mu);
                    found.emplace(std::move(f), std::move(sf));
                }
            }
        }
    });

    std::map<CanonicalForm, std::vector<CanonicalForm>> groups;
    for (const auto& [form, skelf] : found) groups[skelf].push_back(form);
    EntryKind kind{.tag = EntryKind::Tag::generated, .base_rank = base_rank};
    return pack_groups(groups, kind, [&](const Diagram& rep) {
        if (auto label = extended_dynkin_label(rep)) return *label;
        return "E" + std::to_string(base_rank) + "(1)(" + stats_fields(graph_stats(rep)) + ")";
    });
}

namespace {

// 2-infinite with every component of every single-vertex deletion
// 2-finite, decided by mutation exploration.
bool minimal_by_exploration(const Diagram& d, const ExplorationLimits& lim) {
    Verdict v = decide_2finite(d, lim);
    if (v.kind == VerdictKind::inconclusive)
        throw error(errc::limit_exceeded, "2-finiteness decision cut off");
    if (v.kind != VerdictKind::infinite) return false;
    for (int removed = 0; removed < d.size(); ++removed) {
        VertexSet rest;
        for (int u = 0; u < d.size(); ++u)
            if (u != removed) rest.push_back(u);
        Diagram sub = induced_subdiagram(d, rest);
        for (const auto& comp : connected_components(sub)) {
            if (comp.size() < 2) continue;
            Verdict sv = decide_2finite(induced_subdiagram(sub, comp), lim);
            if (sv.kind == VerdictKind::inconclusive)
                throw error(errc::limit_exceeded, "2-finiteness decision cut off");
            if (sv.kind == VerdictKind::infinite) return false;
        }
    }
    return true;
}

std::vector<Diagram> finite_class_reps(int rank, const ExplorationLimits& lim) {
    std::vector<Diagram> seeds;
    seeds.push_back(dynkin('A', rank));
    if (rank >= 2) seeds.push_back(dynkin('B', rank));
    if (rank >= 4) seeds.push_back(dynkin('D', rank));
    if (rank >= 6 && rank <= 8) seeds.push_back(dynkin('E', rank));
    if (rank == 4) seeds.push_back(dynkin('F', rank));
    if (rank == 2) seeds.push_back(dynkin('G', rank));
    std::vector<Diagram> out;
    for (const Diagram& seed : seeds) {
        ClassSummary cls = enumerate_class(seed, lim);
        if (cls.truncated) throw error(errc::limit_exceeded, "base class enumeration truncated");
        for (const CanonicalForm& f : cls.members) out.push_back(diagram_of_form(f));
    }
    return out;
}

std::string weight_list(const Diagram& d) {
    std::vector<Weight> ws;
    for (const Edge& e : d.edges()) ws.push_back(e.weight);
    std::sort(ws.rbegin(), ws.rend());
    std::string out;
    for (Weight w : ws) {
        if (!out.empty()) out += ",";
        out += std::to_string(w);
    }
    return out;
}

} // namespace

std::vector<CatalogEntry> generate_minimal_by_extension(int n, Weight weight_cap,
                                                        const ExplorationLimits& lim) {
    require(n >= 2, "need at least two vertices");
    require(weight_cap >= 1 && weight_cap <= 3, "weight cap must be 1..3");
    if (n == 2) {
        SeriesParams p{.family = SeriesFamily::i_pair, .a = 4};
        Diagram d = make_series(p);
        CatalogEntry e;
        e.label = series_label(p);
        e.kind = EntryKind{.tag = EntryKind::Tag::series, .series = p};
        e.form = canon(d);
        e.skeleton_form = skel(d);
        return {e};
    }

    const int rank = n - 1;
    const std::vector<Diagram> bases = finite_class_reps(rank, lim);
    // Per former vertex: no edge, or an edge to the new vertex with a
    // weight in 1..weight_cap and either direction.
    const int options = 1 + 2 * static_cast<int>(weight_cap);
    std::mutex out_mu;
    std::map<CanonicalForm, CanonicalForm> found;

    parallel_ranges(bases.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t bi = lo; bi < hi; ++bi) {
            const Diagram& base = bases[bi];
            const std::vector<Edge> base_edges = base.edges();
            std::vector<int> code(rank, 0);
            for (;;) {
                int pos = 0;
                while (pos < rank && code[pos] == options - 1) code[pos++] = 0;
                if (pos == rank) break;
                ++code[pos];
                std::vector<Edge> edges = base_edges;
                for (int v = 0; v < rank; ++v) {
                    if (code[v] == 0) continue;
                    Weight w = (code[v] - 1) / 2 + 1;
                    if (code[v] % 2)
                        edges.push_back({rank, v, w});
                    else
                        edges.push_back({v, rank, w});
                }
                try {
                    Diagram cand = new_diagram(n, edges);
                    if (!minimal_by_exploration(cand, lim)) continue;
                    CanonicalForm f = canon(cand);
                    CanonicalForm sf = skel(cand);
                    std::lock_guard lock(out_mu);
                    found.emplace(std::move(f), std::move(sf));
                } catch (const error& e) {
                    if (e.code() == errc::limit_exceeded) throw;
                    // anything else: the candidate is not a valid diagram
                }
            }
        }
    });

    std::map<CanonicalForm, std::vector<CanonicalForm>> groups;
    for (const auto& [form, skelf] : found) groups[skelf].push_back(form);
    EntryKind kind{.tag = EntryKind::Tag::generated, .base_rank = rank};
    return pack_groups(groups, kind, [&](const Diagram& rep) {
        if (auto label = extended_dynkin_label(rep)) return *label;
        return "M" + std::to_string(n) + "(" + stats_fields(graph_stats(rep)) + ";w" +
               weight_list(rep) + ")";
    });
}

namespace {

bool skeletons_match(const Diagram& d, const SeriesParams& p) {
    try {
        Diagram model = make_series(p);
        if (model.size() != d.size()) return false;
        return skel(model) == skel(d);
    } catch (const error&) {
        return false;
    }
}

std::optional<SeriesParams> series_match(const Diagram& d) {
    const int v = d.size();
    if (v < 2) return std::nullopt;
    if (v == 2) {
        Weight w = d.pair_weight(0, 1);
        if (w >= 4) return SeriesParams{.family = SeriesFamily::i_pair, .a = w};
        return std::nullopt;
    }
    const auto cycles = chordless_cycles(d);
    if (cycles.empty()) {
        for (SeriesFamily f : {SeriesFamily::b_path, SeriesFamily::c_path, SeriesFamily::d_path}) {
            SeriesParams p{.family = f, .rank = v - 1};
            if (skeletons_match(d, p)) return p;
        }
        return std::nullopt;
    }
    if (cycles.size() == 1) {
        SeriesParams p{.family = SeriesFamily::a_cycle, .rank = v - 1};
        if (!skeletons_match(d, p)) return std::nullopt;
        if (cycle_is_oriented(d, cycles[0])) return std::nullopt;
        return p;
    }
    // Junction families: every chordless cycle must be oriented.
    for (const auto& c : cycles)
        if (!cycle_is_oriented(d, c)) return std::nullopt;
    std::vector<int> lens;
    for (const auto& c : cycles) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end());
    if (cycles.size() == 2) {
        std::vector<int> candidates(lens.begin(), lens.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (int r : candidates) {
            SeriesParams bc{.family = SeriesFamily::b_cycle, .r = r};
            if (v == r + 1 && skeletons_match(d, bc)) return bc;
            SeriesParams bcp{.family = SeriesFamily::b_cycle_path, .m = v - r - 1, .r = r};
            if (skeletons_match(d, bcp)) return bcp;
            SeriesParams dcp{.family = SeriesFamily::d_cycle_path, .m = v - r - 2, .r = r};
            if (skeletons_match(d, dcp)) return dcp;
        }
        return std::nullopt;
    }
    if (cycles.size() == 3) {
        SeriesParams p{.family = SeriesFamily::d_cycle, .r = v - 2};
        if (skeletons_match(d, p)) return p;
        return std::nullopt;
    }
    if (cycles.size() == 4) {
        for (std::size_t i = 0; i < lens.size(); ++i)
            for (std::size_t j = i + 1; j < lens.size(); ++j) {
                int r = lens[i], s = lens[j];
                SeriesParams p{.family = SeriesFamily::d_two_cycles,
                               .m = v - r - s,
                               .r = r,
                               .s = s};
                if (skeletons_match(d, p)) return p;
            }
        return std::nullopt;
    }
    return std::nullopt;
}

// Every orientation of a five-vertex fixture skeleton that keeps all
// chordless cycles oriented is again minimal 2-infinite (all lie in the
// same mutation class), so matching must cover them all, not only the one
// orientation the fixture list prints.
std::vector<CatalogEntry> f4_orientation_entries() {
    std::vector<CatalogEntry> out;
    std::vector<CatalogEntry> fixtures = fixture_entries();
    for (const CatalogEntry& fe : fixtures) {
        if (fe.kind.table != 3) continue;
        Diagram base = diagram_of_form(fe.form);
        std::vector<Edge> edges = base.edges();
        int m = static_cast<int>(edges.size());
        std::vector<CanonicalForm> seen{fe.form};
        int next_variant = 2;
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            std::vector<Edge> cur;
            for (int e = 0; e < m; ++e) {
                Edge ed = edges[e];
                if (mask >> e & 1) std::swap(ed.tail, ed.head);
                cur.push_back(ed);
            }
            Diagram cand = new_diagram(base.size(), cur);
            if (has_non_oriented_cycle(cand)) continue;
            CanonicalForm f = canonical_form(cand);
            if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
            seen.push_back(f);
            CatalogEntry e = fe;
            e.label = fe.label + "/" + std::to_string(next_variant++);
            e.form = std::move(f);
            out.push_back(std::move(e));
        }
    }
    return out;
}

const std::map<CanonicalForm, CatalogEntry>& builtin_form_table() {
    static const std::map<CanonicalForm, CatalogEntry> table = [] {
        std::map<CanonicalForm, CatalogEntry> t;
        for (const CatalogEntry& e : fixture_entries()) t.emplace(e.form, e);
        for (const CatalogEntry& e : f4_orientation_entries()) t.emplace(e.form, e);
        for (const CatalogEntry& e : generate_minimal_by_extension(3)) t.emplace(e.form, e);
        return t;
    }();
    return table;
}

} // namespace

std::optional<CatalogEntry> match_entry(const Diagram& d, const std::vector<CatalogEntry>& extra) {
    if (!is_connected(d)) throw error(errc::not_connected, "matching needs a connected diagram");
    if (auto p = series_match(d)) {
        CatalogEntry e;
        e.label = series_label(*p);
        e.kind = EntryKind{.tag = EntryKind::Tag::series, .series = *p};
        e.form = canon(d);
        e.skeleton_form = skel(d);
        return e;
    }
    const CanonicalForm f = canon(d);
    const auto& table = builtin_form_table();
    if (auto it = table.find(f); it != table.end()) return it->second;
    for (const CatalogEntry& e : extra)
        if (e.form == f) return e;
    return std::nullopt;
}

std::optional<CatalogEntry> match_entry(const Diagram& d) { return match_entry(d, {}); }

namespace {

const char* family_name(SeriesFamily f) {
    switch (f) {
    case SeriesFamily::a_cycle: return "a_cycle";
    case SeriesFamily::b_path: return "b_path";
    case SeriesFamily::b_cycle_path: return "b_cycle_path";
    case SeriesFamily::b_cycle: return "b_cycle";
    case SeriesFamily::c_path: return "c_path";
    case SeriesFamily::d_path: return "d_path";
    case SeriesFamily::d_cycle_path: return "d_cycle_path";
    case SeriesFamily::d_cycle: return "d_cycle";
    case SeriesFamily::d_two_cycles: return "d_two_cycles";
    case SeriesFamily::i_pair: return "i_pair";
    }
    throw error(errc::bad_params, "unknown series family");
}

std::optional<SeriesFamily> family_of_name(const std::string& name) {
    for (SeriesFamily f :
         {SeriesFamily::a_cycle, SeriesFamily::b_path, SeriesFamily::b_cycle_path,
          SeriesFamily::b_cycle, SeriesFamily::c_path, SeriesFamily::d_path,
          SeriesFamily::d_cycle_path, SeriesFamily::d_cycle, SeriesFamily::d_two_cycles,
          SeriesFamily::i_pair})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

std::string kind_string(const EntryKind& k) {
    std::ostringstream out;
    switch (k.tag) {
    case EntryKind::Tag::series:
        out << "series " << family_name(k.series.family) << " " << k.series.rank << " "
            << k.series.m << " " << k.series.r << " " << k.series.s << " " << k.series.a;
        break;
    case EntryKind::Tag::fixture: out << "fixture " << k.table; break;
    case EntryKind::Tag::generated: out << "generated " << k.base_rank; break;
    }
    return out.str();
}

EntryKind parse_kind(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    in >> tag;
    EntryKind k;
    if (tag == "series") {
        std::string fam;
        in >> fam >> k.series.rank >> k.series.m >> k.series.r >> k.series.s >> k.series.a;
        auto f = family_of_name(fam);
        if (!f || !in || !(in >> std::ws).eof()) throw error(errc::format_error, "bad series kind");
        k.tag = EntryKind::Tag::series;
        k.series.family = *f;
        return k;
    }
    if (tag == "fixture") {
        in >> k.table;
        if (!in || !(in >> std::ws).eof()) throw error(errc::format_error, "bad fixture kind");
        k.tag = EntryKind::Tag::fixture;
        return k;
    }
    if (tag == "generated") {
        in >> k.base_rank;
        if (!in || !(in >> std::ws).eof()) throw error(errc::format_error, "bad generated kind");
        k.tag = EntryKind::Tag::generated;
        return k;
    }
    throw error(errc::format_error, "unknown entry kind");
}

constexpr const char* kCatalogHeader = "catalog-format 1";

} // namespace

void save_catalog(const std::vector<CatalogEntry>& entries, const std::string& path) {
    std::vector<const CatalogEntry*> sorted;
    sorted.reserve(entries.size());
    for (const CatalogEntry& e : entries) sorted.push_back(&e);
    std::sort(sorted.begin(), sorted.end(),
              [](const CatalogEntry* a, const CatalogEntry* b) { return a->label < b->label; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i]->label == sorted[i - 1]->label)
            throw error(errc::bad_params, "duplicate label: " + sorted[i]->label);
    std::ofstream out(path);
    if (!out) throw error(errc::io_error, "cannot open " + path + " for writing");
    out << kCatalogHeader << "\n";
    for (const CatalogEntry* e : sorted)
        out << e->label << "\t" << kind_string(e->kind) << "\t" << form_to_hex(e->form) << "\n";
    out.flush();
    if (!out) throw error(errc::io_error, "write to " + path + " failed");
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::io_error, "cannot open " + path);
    auto fail = [](int line_no, const std::string& what) {
        throw error(errc::format_error, "line " + std::to_string(line_no) + ": " + what);
    };
    std::string line;
    if (!std::getline(in, line) || line != kCatalogHeader) fail(1, "missing catalog header");
    std::vector<CatalogEntry> out;
    std::set<std::string> labels;
    for (int line_no = 2; std::getline(in, line); ++line_no) {
        if (line.empty()) fail(line_no, "empty line");
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
            fail(line_no, "expected 3 tab-separated fields");
        CatalogEntry e;
        e.label = line.substr(0, t1);
        if (e.label.empty()) fail(line_no, "empty label");
        if (!labels.insert(e.label).second) fail(line_no, "duplicate label " + e.label);
        try {
            e.kind = parse_kind(line.substr(t1 + 1, t2 - t1 - 1));
            e.form = form_from_hex(line.substr(t2 + 1));
            Diagram d = diagram_of_form(e.form);
            e.skeleton_form = skel(d);
        } catch (const error& err) {
            fail(line_no, err.what());
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::size_t skeleton_group_count(const std::vector<CatalogEntry>& entries) {
    std::set<CanonicalForm> skeletons;
    for (const CatalogEntry& e : entries) skeletons.insert(e.skeleton_form);
    return skeletons.size();
}

} // namespace cdiag
