#include "cdiag/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <tuple>

namespace cdiag {

namespace {

struct Triple {
    int t, h;
    Weight w;

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Finds the relabeling minimizing the sorted triple list by assigning new
// labels 0, 1, ... one vertex at a time.  A partial assignment already
// determines a prefix of the final list: the rows of every new label whose
// vertex has all its neighbors assigned, plus the assigned part of the
// first row that does not (missing entries get labels larger than any
// assigned one, so they sort after the known part of their row).
// Comparing that prefix against the incumbent prunes the search.
//
// Branching is restricted to vertices adjacent to the labeled set whenever
// any such vertex exists.  An optimal labeling always has this property:
// if label k went to a vertex with no edge into labels 0..k-1 while some
// unlabeled vertex u had one, relabeling u to k (shifting labels k..old(u)-1
// up by one) changes no triple inside 0..k-1 and replaces the first changed
// triple by one with a strictly smaller entry, so the original labeling was
// not minimal.  This cuts the search on path-like diagrams from factorial
// to near-linear.
class Minimizer {
public:
    Minimizer(const Diagram& d, bool directed) : d_(d), n_(d.size()), directed_(directed) {
        adj_.resize(n_);
        nbrs_.resize(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                if (i == j) continue;
                if (directed_ ? d.has_edge(i, j) : d.adjacent(i, j)) adj_[i].push_back(j);
                if (d.adjacent(i, j)) nbrs_[i].push_back(j);
            }
        labeled_nbrs_.assign(n_, 0);

        // Candidate order: vertices with equal local statistics are tried
        // adjacently, which makes the first leaf a good incumbent.
        std::vector<std::tuple<int, Weight, int, Weight, int>> key(n_);
        for (int v = 0; v < n_; ++v) {
            int out_deg = 0, in_deg = 0;
            Weight out_w = 0, in_w = 0;
            for (int u = 0; u < n_; ++u) {
                if (d.has_edge(v, u)) ++out_deg, out_w += d.weight(v, u);
                if (d.has_edge(u, v)) ++in_deg, in_w += d.weight(u, v);
            }
            if (directed_)
                key[v] = {-out_deg, out_w, -in_deg, in_w, v};
            else
                key[v] = {-(out_deg + in_deg), out_w + in_w, 0, 0, v};
        }
        order_.resize(n_);
        for (int v = 0; v < n_; ++v) order_[v] = v;
        std::sort(order_.begin(), order_.end(), [&](int a, int b) { return key[a] < key[b]; });

        label_.assign(n_, -1);
        ord_.assign(n_, -1);
    }

    std::vector<Triple> run() {
        search(0);
        return best_;
    }

private:
    void row_triples(int t, std::vector<Triple>& out) const {
        out.clear();
        for (int u : adj_[ord_[t]]) {
            int lu = label_[u];
            if (lu < 0) continue;
            if (!directed_ && lu < t) continue;
            out.push_back({t, lu, d_.pair_weight(ord_[t], u)});
        }
        std::sort(out.begin(), out.end());
    }

    bool row_complete(int t) const {
        for (int u : adj_[ord_[t]])
            if (label_[u] < 0) return false;
        return true;
    }

    // -1: prefix is strictly below the incumbent, 0: equal so far, 1: above.
    int compare_prefix(int depth) const {
        std::size_t pos = 0;
        std::vector<Triple> row;
        for (int t = 0; t < depth; ++t) {
            row_triples(t, row);
            for (const Triple& tr : row) {
                if (pos >= best_.size()) return 1;
                if (tr != best_[pos]) return tr < best_[pos] ? -1 : 1;
                ++pos;
            }
            if (!row_complete(t)) return 0;
        }
        return 0;
    }

    void search(int depth) {
        if (depth == n_) {
            std::vector<Triple> full;
            std::vector<Triple> row;
            for (int t = 0; t < n_; ++t) {
                row_triples(t, row);
                full.insert(full.end(), row.begin(), row.end());
            }
            if (!have_best_ || full < best_) {
                best_ = std::move(full);
                have_best_ = true;
            }
            return;
        }
        bool frontier_only = false;
        for (int v : order_)
            if (label_[v] < 0 && labeled_nbrs_[v] > 0) {
                frontier_only = true;
                break;
            }
        for (int v : order_) {
            if (label_[v] >= 0) continue;
            if (frontier_only && labeled_nbrs_[v] == 0) continue;
            label_[v] = depth;
            ord_[depth] = v;
            for (int u : nbrs_[v]) ++labeled_nbrs_[u];
            if (!have_best_ || compare_prefix(depth + 1) <= 0) search(depth + 1);
            for (int u : nbrs_[v]) --labeled_nbrs_[u];
            label_[v] = -1;
            ord_[depth] = -1;
        }
    }

    const Diagram& d_;
    int n_;
    bool directed_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<int> labeled_nbrs_;
    std::vector<int> order_;
    std::vector<int> label_;
    std::vector<int> ord_;
    std::vector<Triple> best_;
    bool have_best_ = false;
};

void put_varint(std::string& out, std::uint64_t x) {
    while (x >= 0x80) {
        out.push_back(static_cast<char>((x & 0x7f) | 0x80));
        x >>= 7;
    }
    out.push_back(static_cast<char>(x));
}

bool get_varint(const std::string& s, std::size_t& pos, std::uint64_t& x) {
    x = 0;
    int shift = 0;
    while (pos < s.size()) {
        std::uint8_t b = static_cast<std::uint8_t>(s[pos++]);
        if (shift >= 63 && b > 1) return false;
        x |= static_cast<std::uint64_t>(b & 0x7f) << shift;
        if (!(b & 0x80)) return true;
        shift += 7;
    }
    return false;
}

constexpr char kDirectedTag = 0x01;
constexpr char kSkeletonTag = 0x02;

CanonicalForm encode(int n, const std::vector<Triple>& triples, bool directed) {
    CanonicalForm f;
    f.bytes.push_back(directed ? kDirectedTag : kSkeletonTag);
    put_varint(f.bytes, static_cast<std::uint64_t>(n));
    put_varint(f.bytes, triples.size());
    for (const Triple& t : triples) {
        put_varint(f.bytes, static_cast<std::uint64_t>(t.t));
        put_varint(f.bytes, static_cast<std::uint64_t>(t.h));
        put_varint(f.bytes, static_cast<std::uint64_t>(t.w));
    }
    return f;
}

CanonicalForm form_of(const Diagram& d, bool directed, int size_limit) {
    if (d.size() > size_limit)
        throw error(errc::size_limit, "diagram has " + std::to_string(d.size()) + " vertices, limit " +
                                          std::to_string(size_limit));
    Minimizer m(d, directed);
    return encode(d.size(), m.run(), directed);
}

} // namespace

CanonicalForm canonical_form(const Diagram& d, int size_limit) { return form_of(d, true, size_limit); }

CanonicalForm skeleton_form(const Diagram& d, int size_limit) { return form_of(d, false, size_limit); }

bool are_isomorphic(const Diagram& a, const Diagram& b, int size_limit) {
    if (a.size() != b.size()) return false;
    return canonical_form(a, size_limit) == canonical_form(b, size_limit);
}

FormContent form_content(const CanonicalForm& f) {
    const std::string& s = f.bytes;
    if (s.empty() || (s[0] != kDirectedTag && s[0] != kSkeletonTag))
        throw error(errc::format_error, "unknown form tag");
    FormContent c;
    c.directed = s[0] == kDirectedTag;
    std::size_t pos = 1;
    std::uint64_t n = 0, m = 0;
    if (!get_varint(s, pos, n) || !get_varint(s, pos, m) || n == 0 || n > 1000)
        throw error(errc::format_error, "bad form header");
    c.n = static_cast<int>(n);
    for (std::uint64_t i = 0; i < m; ++i) {
        std::uint64_t t, h, w;
        if (!get_varint(s, pos, t) || !get_varint(s, pos, h) || !get_varint(s, pos, w))
            throw error(errc::format_error, "truncated form");
        c.triples.push_back({static_cast<int>(t), static_cast<int>(h), static_cast<Weight>(w)});
    }
    if (pos != s.size()) throw error(errc::format_error, "trailing bytes in form");
    return c;
}

Diagram diagram_of_form(const CanonicalForm& f) {
    FormContent c = form_content(f);
    if (!c.directed) throw error(errc::format_error, "not a directed form");
    return new_diagram(c.n, c.triples);
}

std::string form_to_hex(const CanonicalForm& f) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(f.bytes.size() * 2);
    for (char c : f.bytes) {
        std::uint8_t b = static_cast<std::uint8_t>(c);
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CanonicalForm form_from_hex(const std::string& hex) {
    if (hex.size() % 2) throw error(errc::format_error, "odd hex length");
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    CanonicalForm f;
    f.bytes.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = val(hex[i]), lo = val(hex[i + 1]);
        if (hi < 0 || lo < 0) throw error(errc::format_error, "bad hex digit");
        f.bytes.push_back(static_cast<char>(hi << 4 | lo));
    }
    return f;
}

} // namespace cdiag
