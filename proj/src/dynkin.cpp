#include "cdiag/dynkin.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "cdiag/canon.hpp"

namespace cdiag {

namespace {

std::vector<Edge> path_edges(int from, int count) {
    std::vector<Edge> e;
    for (int i = 0; i < count - 1; ++i) e.push_back({from + i, from + i + 1, 1});
    return e;
}

Diagram path_with_weights(const std::vector<Weight>& ws) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < ws.size(); ++i) e.push_back({static_cast<int>(i), static_cast<int>(i) + 1, ws[i]});
    return new_diagram(static_cast<int>(ws.size()) + 1, e);
}

Diagram cycle_diagram(int len) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < len; ++i) e.push_back({i, i + 1, 1});
    e.push_back({0, len - 1, 1});
    return new_diagram(len, e);
}

// Path 0..len-1 with an extra leaf attached to `branch`.
Diagram branched_path(int len, int branch) {
    std::vector<Edge> e = path_edges(0, len);
    e.push_back({branch, len, 1});
    return new_diagram(len + 1, e);
}

// Leaves 0, 1 on vertex 2, then a path 2..n-1; the final edge carries
// `last`.
Diagram forked_path(int n, Weight last) {
    std::vector<Edge> e{{0, 2, 1}, {1, 2, 1}};
    for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1, i + 2 == n ? last : 1});
    return new_diagram(n, e);
}

// Leaves at both ends of a path on n vertices total.
Diagram double_forked_path(int n) {
    std::vector<Edge> e{{0, 2, 1}, {1, 2, 1}, {n - 2, n - 3, 1}, {n - 1, n - 3, 1}};
    for (int i = 2; i < n - 3; ++i) e.push_back({i, i + 1, 1});
    return new_diagram(n, e);
}

using ShapeTable = std::vector<std::pair<std::string, CanonicalForm>>;

const ShapeTable& dynkin_shapes(int v) {
    static std::map<int, ShapeTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;

    ShapeTable t;
    auto add = [&](std::string label, const Diagram& d) { t.emplace_back(std::move(label), skeleton_form(d)); };
    add("A" + std::to_string(v), dynkin('A', v));
    if (v >= 2) add("B" + std::to_string(v), dynkin('B', v));
    if (v >= 4) add("D" + std::to_string(v), dynkin('D', v));
    if (v >= 6 && v <= 8) add("E" + std::to_string(v), dynkin('E', v));
    if (v == 4) add("F4", dynkin('F', 4));
    if (v == 2) add("G2", dynkin('G', 2));
    return cache.emplace(v, std::move(t)).first->second;
}

const ShapeTable& extended_shapes(int v) {
    static std::map<int, ShapeTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(v);
    if (it != cache.end()) return it->second;

    ShapeTable t;
    int n = v - 1;
    auto add = [&](std::string label, const Diagram& d) { t.emplace_back(std::move(label), skeleton_form(d)); };
    if (v >= 3) add("A" + std::to_string(n) + "(1)", affine_diagram('A', n));
    if (v >= 4) add("B" + std::to_string(n) + "(1)", affine_diagram('B', n));
    if (v >= 3) add("C" + std::to_string(n) + "(1)", affine_diagram('C', n));
    if (v >= 5) add("D" + std::to_string(n) + "(1)", affine_diagram('D', n));
    if (v >= 7 && v <= 9) add("E" + std::to_string(n) + "(1)", affine_diagram('E', n));
    if (v == 5) add("F4(1)", affine_diagram('F', 4));
    if (v == 3)
        for (Weight a = 1; a <= 3; ++a)
            add("G2(1)(" + std::to_string(a) + ")", affine_diagram('G', 2, a));
    return cache.emplace(v, std::move(t)).first->second;
}

} // namespace

Diagram dynkin(char family, int rank) {
    switch (family) {
    case 'A':
        if (rank < 1) throw error(errc::bad_params, "A rank >= 1");
        return rank == 1 ? new_diagram(1, {}) : path_with_weights(std::vector<Weight>(rank - 1, 1));
    case 'B': {
        if (rank < 2) throw error(errc::bad_params, "B rank >= 2");
        std::vector<Weight> ws(rank - 1, 1);
        ws.back() = 2;
        return path_with_weights(ws);
    }
    case 'D':
        if (rank < 4) throw error(errc::bad_params, "D rank >= 4");
        return branched_path(rank - 1, rank - 3);
    case 'E':
        if (rank < 6 || rank > 8) throw error(errc::bad_params, "E rank 6..8");
        return branched_path(rank - 1, 2);
    case 'F':
        if (rank != 4) throw error(errc::bad_params, "F rank 4");
        return path_with_weights({1, 2, 1});
    case 'G':
        if (rank != 2) throw error(errc::bad_params, "G rank 2");
        return path_with_weights({3});
    default:
        throw error(errc::bad_params, std::string("unknown family '") + family + "'");
    }
}

Diagram affine_diagram(char family, int rank, Weight param) {
    switch (family) {
    case 'A':
        if (rank < 2) throw error(errc::bad_params, "A(1) rank >= 2");
        return cycle_diagram(rank + 1);
    case 'B':
        if (rank < 3) throw error(errc::bad_params, "B(1) rank >= 3");
        return forked_path(rank + 1, 2);
    case 'C': {
        if (rank < 2) throw error(errc::bad_params, "C(1) rank >= 2");
        std::vector<Weight> ws(rank, 1);
        ws.front() = 2;
        ws.back() = 2;
        return path_with_weights(ws);
    }
    case 'D':
        if (rank < 4) throw error(errc::bad_params, "D(1) rank >= 4");
        return double_forked_path(rank + 1);
    case 'E':
        switch (rank) {
        case 6: {
            std::vector<Edge> e = path_edges(0, 5);
            e.push_back({2, 5, 1});
            e.push_back({5, 6, 1});
            return new_diagram(7, e);
        }
        case 7:
            return branched_path(7, 3);
        case 8:
            return branched_path(8, 2);
        default:
            throw error(errc::bad_params, "E(1) rank 6..8");
        }
    case 'F':
        if (rank != 4) throw error(errc::bad_params, "F(1) rank 4");
        return path_with_weights({1, 2, 1, 1});
    case 'G':
        if (rank != 2 || param < 1 || param > 3) throw error(errc::bad_params, "G(1) rank 2, param 1..3");
        return path_with_weights({3, param});
    case 'I':
        if (rank != 2 || param < 4) throw error(errc::bad_params, "I rank 2, param >= 4");
        return new_diagram(2, {{0, 1, param}});
    default:
        throw error(errc::bad_params, std::string("unknown affine family '") + family + "'");
    }
}

std::optional<std::string> dynkin_label(const Diagram& d) {
    CanonicalForm f = skeleton_form(d);
    for (const auto& [label, shape] : dynkin_shapes(d.size()))
        if (shape == f) return label;
    return std::nullopt;
}

std::optional<std::string> extended_dynkin_label(const Diagram& d) {
    if (d.size() == 2) {
        Weight a = d.pair_weight(0, 1);
        if (a >= 4) return "I2(" + std::to_string(a) + ")";
        return std::nullopt;
    }
    CanonicalForm f = skeleton_form(d);
    for (const auto& [label, shape] : extended_shapes(d.size())) {
        if (shape != f) continue;
        if (label[0] == 'A' && !has_non_oriented_cycle(d)) continue;
        return label;
    }
    return std::nullopt;
}

} // namespace cdiag
