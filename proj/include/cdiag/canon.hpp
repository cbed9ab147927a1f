#pragma once

#include <compare>
#include <string>

#include "cdiag/diagram.hpp"

namespace cdiag {

// Byte encoding of a diagram up to relabeling: the representative whose
// sorted edge-triple list (tail, head, weight) is lexicographically
// smallest over all relabelings.  Skeleton forms do the same for the
// underlying weighted undirected graph.  Forms are totally ordered and
// compare equal exactly for isomorphic inputs of the same kind.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kDefaultSizeLimit = 16;

// Throws SizeLimit when d has more than size_limit vertices.
CanonicalForm canonical_form(const Diagram& d, int size_limit = kDefaultSizeLimit);

// Form of the underlying weighted undirected graph.
CanonicalForm skeleton_form(const Diagram& d, int size_limit = kDefaultSizeLimit);

bool are_isomorphic(const Diagram& a, const Diagram& b, int size_limit = kDefaultSizeLimit);

struct FormContent {
    int n = 0;
    bool directed = true;
    std::vector<Edge> triples; // skeleton forms satisfy tail < head
};

// Decodes either kind of form.  Throws FormatError on malformed bytes.
FormContent form_content(const CanonicalForm& f);

// Rebuilds the representative diagram of a directed form.  Throws
// FormatError on malformed bytes or a skeleton form.
Diagram diagram_of_form(const CanonicalForm& f);

std::string form_to_hex(const CanonicalForm& f);
CanonicalForm form_from_hex(const std::string& hex);

} // namespace cdiag
