#include "cdiag/mutation.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace cdiag {

namespace {

using i128 = __int128;

constexpr Weight kMaxWeight = std::numeric_limits<Weight>::max();

// Exact integer square root; throws InternalNonSquare unless x is a square.
i128 exact_sqrt(i128 x) {
    if (x == 0) return 0;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    if (r * r != x) throw error(errc::internal_non_square, "product of triangle weights is not a perfect square");
    return r;
}

} // namespace

Diagram mutate(const Diagram& d, int k) {
    int n = d.size();
    if (k < 0 || k >= n) throw error(errc::out_of_range, "mutation vertex " + std::to_string(k));

    Diagram out = d;
    auto& w = out.w_;
    auto set = [&](int i, int j, Weight v) { w[static_cast<std::size_t>(i) * n + j] = v; };

    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        Weight in = d.weight(i, k), outw = d.weight(k, i);
        set(i, k, outw);
        set(k, i, in);
    }

    for (int i = 0; i < n; ++i) {
        if (i == k || !d.has_edge(i, k)) continue;
        for (int j = 0; j < n; ++j) {
            if (j == k || j == i || !d.has_edge(k, j)) continue;
            // i -> k -> j with weights a, b; c is the current {i, j} weight.
            i128 a = d.weight(i, k), b = d.weight(k, j);
            i128 ab = a * b;
            if (ab > kMaxWeight)
                throw error(errc::weight_overflow, "weight product at vertex " + std::to_string(k) + " exceeds 64 bits");
            Weight c = d.pair_weight(i, j);
            bool cyclic = d.has_edge(j, i);
            i128 r2 = exact_sqrt(ab * c);
            i128 nw = cyclic ? ab + c - 2 * r2 : ab + c + 2 * r2;
            if (nw > kMaxWeight)
                throw error(errc::weight_overflow, "updated weight for pair {" + std::to_string(i) + ", " +
                                                       std::to_string(j) + "} exceeds 64 bits");
            set(i, j, 0);
            set(j, i, 0);
            if (nw == 0) continue;
            if (!cyclic || ab > c)
                set(i, j, static_cast<Weight>(nw));
            else
                set(j, i, static_cast<Weight>(nw));
        }
    }
    return out;
}

Diagram mutate_seq(const Diagram& d, const std::vector<MutationStep>& steps) {
    Diagram cur = d;
    for (const MutationStep& s : steps) cur = mutate(cur, s.vertex);
    return cur;
}

} // namespace cdiag
