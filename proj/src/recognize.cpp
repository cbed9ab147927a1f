#include "cdiag/recognize.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cdiag/bm.hpp"
#include "cdiag/canon.hpp"
#include "cdiag/dynkin.hpp"
#include "cdiag/errors.hpp"
#include "cdiag/parallel.hpp"

namespace cdiag {

namespace {

bool simply_laced(const Diagram& d) {
    for (const Edge& e : d.edges())
        if (e.weight != 1) return false;
    return true;
}

bool has_heavy_edge(const Diagram& d) {
    for (const Edge& e : d.edges())
        if (e.weight >= 4) return true;
    return false;
}

// Shared decision cache for the witness scan; many subsets induce
// isomorphic subdiagrams.
struct DecisionCache {
    std::map<CanonicalForm, bool> infinite;
    std::mutex mu;
};

// Whether sub (connected) is 2-infinite, settling by shape when possible
// and by exploration otherwise.  Throws LimitExceeded on a cut-off.
bool subdiagram_is_2infinite(const Diagram& sub, const ExplorationLimits& lim,
                             const std::vector<CatalogEntry>& extra, DecisionCache& cache) {
    if (has_heavy_edge(sub)) return true;
    CanonicalForm form = canonical_form(sub);
    {
        std::scoped_lock lock(cache.mu);
        auto it = cache.infinite.find(form);
        if (it != cache.infinite.end()) return it->second;
    }
    bool result;
    if (dynkin_label(sub))
        result = false; // finite-type shape
    else if (extended_dynkin_label(sub) || has_non_oriented_cycle(sub))
        result = true; // affine shape, or a cycle no 2-finite diagram carries
    else if (match_entry(sub, extra))
        result = true; // catalog entries are 2-infinite
    else {
        Verdict v = decide_2finite(sub, lim);
        if (v.kind == VerdictKind::inconclusive)
            throw error(errc::limit_exceeded, "subdiagram decision cut off by limits");
        result = v.kind == VerdictKind::infinite;
    }
    std::scoped_lock lock(cache.mu);
    cache.infinite.emplace(std::move(form), result);
    return result;
}

std::optional<VertexSet> witness_impl(const Diagram& d, const ExplorationLimits& lim,
                                      const std::vector<CatalogEntry>& extra) {
    int n = d.size();
    if (n > kDefaultSizeLimit)
        throw error(errc::unsupported_size, "witness scan supports at most " +
                                                std::to_string(kDefaultSizeLimit) + " vertices");

    // Skip the top-level exploration when a screen already proves the
    // diagram 2-infinite; otherwise a finite verdict ends the search.
    if (!has_heavy_edge(d) && !has_non_oriented_cycle(d)) {
        Verdict v = decide_2finite(d, lim);
        if (v.kind == VerdictKind::inconclusive)
            throw error(errc::limit_exceeded, "witness search cut off at the full diagram");
        if (v.kind == VerdictKind::finite) return std::nullopt;
    }

    // Connected vertex subsets bucketed by size.
    std::vector<std::vector<VertexSet>> by_size(n + 1);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        VertexSet vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        if (vs.size() < 2) continue;
        if (is_connected(induced_subdiagram(d, vs))) by_size[vs.size()].push_back(std::move(vs));
    }

    // Scan sizes upward.  When the first 2-infinite subset appears at size
    // s, it is automatically minimal: its proper connected subdiagrams are
    // connected subsets of d of smaller size, all just found 2-finite.
    DecisionCache cache;
    for (int s = 2; s <= n; ++s) {
        const std::vector<VertexSet>& subs = by_size[s];
        std::vector<char> infinite(subs.size(), 0);
        parallel_ranges(subs.size(), [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i)
                infinite[i] =
                    subdiagram_is_2infinite(induced_subdiagram(d, subs[i]), lim, extra, cache);
        });
        const VertexSet* best = nullptr;
        CanonicalForm best_form;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (!infinite[i]) continue;
            CanonicalForm f = canonical_form(induced_subdiagram(d, subs[i]));
            if (!best || f < best_form || (f == best_form && subs[i] < *best)) {
                best = &subs[i];
                best_form = std::move(f);
            }
        }
        if (best) return *best;
    }
    throw std::logic_error("2-infinite diagram with no 2-infinite subset");
}

} // namespace

const char* recognition_method_name(RecognitionMethod m) {
    switch (m) {
    case RecognitionMethod::subdiagram_scan: return "subdiagram-scan";
    case RecognitionMethod::bm_fast: return "bm-fast";
    case RecognitionMethod::bfs: return "bfs";
    }
    return "unknown";
}

RecognitionReport recognize(const Diagram& d, const RecognizeOptions& opt) {
    if (!is_connected(d)) throw error(errc::not_connected, "recognition needs a connected diagram");

    RecognitionReport rep;
    if (has_heavy_edge(d) || has_non_oriented_cycle(d)) {
        // A weight >= 4 edge is an I2(a) witness; a non-oriented chordless
        // cycle never occurs in a 2-finite diagram.
        rep.verdict = VerdictKind::infinite;
        rep.method = RecognitionMethod::subdiagram_scan;
    } else {
        std::optional<bool> via_bm;
        if (simply_laced(d)) via_bm = is_2finite_via_bm(d);
        if (via_bm) {
            rep.verdict = *via_bm ? VerdictKind::finite : VerdictKind::infinite;
            rep.method = RecognitionMethod::bm_fast;
        } else {
            rep.verdict = decide_2finite(d, opt.limits).kind;
            rep.method = RecognitionMethod::bfs;
        }
    }

    if (rep.verdict == VerdictKind::infinite) {
        try {
            rep.witness = witness_impl(d, opt.limits, opt.extra_catalog);
        } catch (const error& e) {
            if (e.code() != errc::limit_exceeded && e.code() != errc::unsupported_size) throw;
        }
        if (rep.witness)
            rep.witness_entry = match_entry(induced_subdiagram(d, *rep.witness), opt.extra_catalog);
    }

    if (opt.want_reduction && rep.verdict != VerdictKind::inconclusive) {
        ExtendedRepResult r = rep.verdict == VerdictKind::finite
                                  ? find_dynkin_rep(d, opt.limits)
                                  : find_extended_dynkin_rep(d, opt.limits);
        if (r.kind == ExtendedRepResult::Kind::found)
            rep.reduction = Reduction{r.label, std::move(r.path)};
    }
    return rep;
}

std::optional<VertexSet> find_minimal_witness(const Diagram& d, const ExplorationLimits& lim) {
    return witness_impl(d, lim, {});
}

bool is_minimal_2infinite(const Diagram& d, const ExplorationLimits& lim) {
    Verdict whole = decide_2finite(d, lim);
    if (whole.kind == VerdictKind::inconclusive)
        throw error(errc::limit_exceeded, "minimality check cut off by limits");
    if (whole.kind != VerdictKind::infinite) return false;
    for (int v = 0; v < d.size(); ++v) {
        VertexSet rest;
        for (int u = 0; u < d.size(); ++u)
            if (u != v) rest.push_back(u);
        Diagram sub = induced_subdiagram(d, rest);
        for (const VertexSet& comp : connected_components(sub)) {
            if (comp.size() < 2) continue;
            Verdict c = decide_2finite(induced_subdiagram(sub, comp), lim);
            if (c.kind == VerdictKind::inconclusive)
                throw error(errc::limit_exceeded, "minimality check cut off by limits");
            if (c.kind == VerdictKind::infinite) return false;
        }
    }
    return true;
}

bool is_type_A_by_patterns(const Diagram& d) {
    if (!is_connected(d))
        throw error(errc::precondition_violated, "pattern test needs a connected diagram");
    if (!simply_laced(d))
        throw error(errc::precondition_violated, "pattern test needs a simply-laced diagram");

    for (const VertexSet& c : chordless_cycles(d))
        if (c.size() >= 4 || !cycle_is_oriented(d, c)) return false;

    int n = d.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const Edge& e : d.edges()) adj[e.tail][e.head] = adj[e.head][e.tail] = 1;

    // Induced four-vertex star: a vertex with three pairwise non-adjacent
    // neighbors.
    for (int v = 0; v < n; ++v) {
        VertexSet nb;
        for (int u = 0; u < n; ++u)
            if (adj[v][u]) nb.push_back(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!adj[nb[i]][nb[j]] && !adj[nb[i]][nb[k]] && !adj[nb[j]][nb[k]]) return false;
    }

    // Two triangles sharing an edge: an edge with two common neighbors.
    for (const Edge& e : d.edges()) {
        int common = 0;
        for (int w = 0; w < n; ++w)
            if (adj[e.tail][w] && adj[e.head][w]) ++common;
        if (common >= 2) return false;
    }
    return true;
}

} // namespace cdiag
