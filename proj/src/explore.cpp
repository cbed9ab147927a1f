#include "cdiag/explore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>

#include "cdiag/dynkin.hpp"
#include "cdiag/parallel.hpp"

namespace cdiag {

namespace {

struct BfsState {
    std::vector<CanonicalForm> forms; // insertion order
    std::vector<std::pair<int, int>> parent; // (parent index, mutated vertex), (-1, -1) for the seed
    std::unordered_map<std::string, int> index;
    Weight max_w = 0;
    bool truncated = false;
    int stop_idx = -1;
    bool stopped_on_weight = false;
    bool stopped_on_match = false;
};

using MatchFn = std::function<bool(const Diagram&, const CanonicalForm&)>;

// Deterministic closure under mutation.  Explores concrete diagrams so
// recorded steps replay on the seed's own labeling; members are
// deduplicated by canonical form.  Expansion is layered breadth-first,
// except that a weight-stop search runs weight-first (see below); both
// expand batches in parallel and merge in a fixed order, so the outcome
// never depends on the worker count.
BfsState run_bfs(const Diagram& seed, const ExplorationLimits& lim, bool stop_on_weight, const MatchFn& match) {
    BfsState st;
    CanonicalForm f0 = canonical_form(seed);
    st.index.emplace(f0.bytes, 0);
    st.forms.push_back(std::move(f0));
    st.parent.emplace_back(-1, -1);
    st.max_w = seed.max_weight();

    if (match && match(seed, st.forms[0])) {
        st.stop_idx = 0;
        st.stopped_on_match = true;
        return st;
    }
    bool seed_heavy = lim.max_weight > 0 && seed.max_weight() >= lim.max_weight;
    if (seed_heavy && stop_on_weight) {
        st.stop_idx = 0;
        st.stopped_on_weight = true;
        return st;
    }

    struct Child {
        int k;
        Diagram d;
        CanonicalForm form;
        bool overflow = false;
    };
    auto expand = [&](const std::vector<std::pair<int, Diagram>>& batch) {
        std::vector<std::vector<Child>> children(batch.size());
        parallel_ranges(batch.size(), [&](std::size_t b, std::size_t e) {
            for (std::size_t i = b; i < e; ++i) {
                int n = batch[i].second.size();
                children[i].reserve(n);
                for (int k = 0; k < n; ++k) {
                    Child c;
                    c.k = k;
                    try {
                        c.d = mutate(batch[i].second, k);
                        c.form = canonical_form(c.d);
                    } catch (const error& err) {
                        if (err.code() != errc::weight_overflow) throw;
                        c.overflow = true;
                    }
                    children[i].push_back(std::move(c));
                }
            }
        });
        return children;
    };

    if (stop_on_weight) {
        // Weight-first expansion: the heaviest known member expands next,
        // ties broken by canonical bytes, in fixed-size batches so the
        // outcome stays independent of the worker count.  A weight cap is
        // reached far sooner than in layered order, so the recorded witness
        // replays on the seed but is not necessarily shortest.
        constexpr std::size_t kBatch = 16;
        std::map<std::pair<Weight, std::string>, std::pair<int, Diagram>> open;
        open.emplace(std::pair<Weight, std::string>{-seed.max_weight(), st.forms[0].bytes},
                     std::pair<int, Diagram>{0, seed});
        while (!open.empty()) {
            std::vector<std::pair<int, Diagram>> batch;
            while (!open.empty() && batch.size() < kBatch) {
                batch.push_back(std::move(open.begin()->second));
                open.erase(open.begin());
            }
            std::vector<std::vector<Child>> children = expand(batch);
            for (std::size_t i = 0; i < batch.size(); ++i) {
                for (Child& c : children[i]) {
                    if (c.overflow) {
                        st.truncated = true;
                        continue;
                    }
                    auto [it, fresh] = st.index.try_emplace(c.form.bytes, static_cast<int>(st.forms.size()));
                    if (!fresh) continue;
                    if (st.forms.size() >= lim.max_members) {
                        st.index.erase(it);
                        st.truncated = true;
                        return st;
                    }
                    int idx = it->second;
                    st.forms.push_back(c.form);
                    st.parent.emplace_back(batch[i].first, c.k);
                    Weight w = c.d.max_weight();
                    st.max_w = std::max(st.max_w, w);
                    if (match && match(c.d, st.forms[idx])) {
                        st.stop_idx = idx;
                        st.stopped_on_match = true;
                        return st;
                    }
                    if (lim.max_weight > 0 && w >= lim.max_weight) {
                        st.truncated = true;
                        st.stop_idx = idx;
                        st.stopped_on_weight = true;
                        return st;
                    }
                    open.emplace(std::pair<Weight, std::string>{-w, st.forms[idx].bytes},
                                 std::pair<int, Diagram>{idx, std::move(c.d)});
                }
            }
        }
        return st;
    }

    std::vector<std::pair<int, Diagram>> frontier;
    if (seed_heavy)
        st.truncated = true;
    else
        frontier.emplace_back(0, seed);

    while (!frontier.empty()) {
        std::vector<std::vector<Child>> children = expand(frontier);

        std::vector<std::pair<int, Diagram>> next;
        bool stopped = false;
        for (std::size_t i = 0; i < frontier.size() && !stopped; ++i) {
            for (Child& c : children[i]) {
                if (c.overflow) {
                    st.truncated = true;
                    continue;
                }
                auto [it, fresh] = st.index.try_emplace(c.form.bytes, static_cast<int>(st.forms.size()));
                if (!fresh) continue;
                if (st.forms.size() >= lim.max_members) {
                    st.index.erase(it);
                    st.truncated = true;
                    stopped = true;
                    break;
                }
                int idx = it->second;
                st.forms.push_back(c.form);
                st.parent.emplace_back(frontier[i].first, c.k);
                st.max_w = std::max(st.max_w, c.d.max_weight());

                if (match && match(c.d, st.forms[idx])) {
                    st.stop_idx = idx;
                    st.stopped_on_match = true;
                    stopped = true;
                    break;
                }
                bool heavy = lim.max_weight > 0 && c.d.max_weight() >= lim.max_weight;
                if (heavy) {
                    st.truncated = true; // recorded but never expanded
                    continue;
                }
                next.emplace_back(idx, std::move(c.d));
            }
        }
        if (stopped) break;
        std::sort(next.begin(), next.end(),
                  [&](const auto& a, const auto& b) { return st.forms[a.first].bytes < st.forms[b.first].bytes; });
        frontier = std::move(next);
    }
    return st;
}

std::vector<MutationStep> path_to(const BfsState& st, int idx) {
    std::vector<MutationStep> steps;
    for (int cur = idx; st.parent[cur].first >= 0; cur = st.parent[cur].first)
        steps.push_back({st.parent[cur].second});
    std::reverse(steps.begin(), steps.end());
    return steps;
}

ClassSummary summary_of(const Diagram& seed, BfsState&& st) {
    ClassSummary s;
    s.seed = canonical_form(seed);
    s.members = std::move(st.forms);
    std::sort(s.members.begin(), s.members.end());
    s.max_weight_seen = st.max_w;
    s.truncated = st.truncated;
    return s;
}

} // namespace

bool ClassSummary::contains(const CanonicalForm& f) const {
    return std::binary_search(members.begin(), members.end(), f);
}

ClassSummary enumerate_class(const Diagram& d, const ExplorationLimits& lim) {
    return summary_of(d, run_bfs(d, lim, false, nullptr));
}

Verdict decide_2finite(const Diagram& d, const ExplorationLimits& lim) {
    BfsState st = run_bfs(d, lim, true, nullptr);
    Verdict v;
    if (st.stopped_on_weight) {
        v.kind = VerdictKind::infinite;
        v.witness = path_to(st, st.stop_idx);
        Diagram end = mutate_seq(d, v.witness);
        for (const Edge& e : end.edges())
            if (e.weight >= 4) {
                v.offending_edge = e;
                break;
            }
        return v;
    }
    v.kind = st.truncated ? VerdictKind::inconclusive : VerdictKind::finite;
    v.summary = summary_of(d, std::move(st));
    return v;
}

std::optional<bool> is_mut_equivalent(const Diagram& d1, const Diagram& d2, const ExplorationLimits& lim) {
    if (d1.size() != d2.size()) return false;
    CanonicalForm target = canonical_form(d2);
    BfsState st = run_bfs(d1, lim, false,
                          [&](const Diagram&, const CanonicalForm& f) { return f == target; });
    if (st.stopped_on_match) return true;
    if (st.truncated) return std::nullopt;
    return false;
}

FiniteTypeResult classify_finite_type(const Diagram& d, const ExplorationLimits& lim) {
    if (!is_connected(d)) throw error(errc::precondition_violated, "classification needs a connected diagram");
    Verdict v = decide_2finite(d, lim);
    FiniteTypeResult r;
    if (v.kind == VerdictKind::infinite) {
        r.kind = FiniteTypeResult::Kind::not_finite;
        return r;
    }
    if (v.kind == VerdictKind::inconclusive) return r;
    for (const CanonicalForm& f : v.summary->members) {
        if (auto label = dynkin_label(diagram_of_form(f))) {
            r.kind = FiniteTypeResult::Kind::type;
            r.label = *label;
            return r;
        }
    }
    throw std::logic_error("complete weight-bounded class has no finite-type member");
}

namespace {

ExtendedRepResult find_labeled_rep(const Diagram& d, const ExplorationLimits& lim,
                                   std::optional<std::string> (*labeler)(const Diagram&)) {
    std::string found;
    BfsState st = run_bfs(d, lim, false, [&](const Diagram& m, const CanonicalForm&) {
        auto label = labeler(m);
        if (!label) return false;
        found = *label;
        return true;
    });
    ExtendedRepResult r;
    if (st.stopped_on_match) {
        r.kind = ExtendedRepResult::Kind::found;
        r.label = found;
        r.path = path_to(st, st.stop_idx);
        return r;
    }
    r.kind = st.truncated ? ExtendedRepResult::Kind::inconclusive : ExtendedRepResult::Kind::not_found;
    return r;
}

} // namespace

ExtendedRepResult find_extended_dynkin_rep(const Diagram& d, const ExplorationLimits& lim) {
    return find_labeled_rep(d, lim, extended_dynkin_label);
}

ExtendedRepResult find_dynkin_rep(const Diagram& d, const ExplorationLimits& lim) {
    return find_labeled_rep(d, lim, dynkin_label);
}

} // namespace cdiag
