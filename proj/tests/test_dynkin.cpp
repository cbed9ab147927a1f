#include "doctest.h"

#include "cdiag/canon.hpp"
#include "cdiag/dynkin.hpp"
#include "helpers.hpp"

#include <random>

using namespace cdiag;

namespace {

Diagram random_reorient(std::mt19937& rng, const Diagram& d) {
    std::bernoulli_distribution flip(0.5);
    std::vector<Edge> edges;
    for (const Edge& e : d.edges())
        edges.push_back(flip(rng) ? Edge{e.head, e.tail, e.weight} : e);
    return new_diagram(d.size(), edges);
}

} // namespace

TEST_CASE("finite family shapes") {
    CHECK(dynkin('A', 1).size() == 1);
    CHECK(dynkin('A', 3).edge_count() == 2);

    Diagram b3 = dynkin('B', 3);
    CHECK(b3.pair_weight(1, 2) == 2);
    CHECK(b3.pair_weight(0, 1) == 1);

    Diagram d4 = dynkin('D', 4);
    int deg3 = 0;
    for (int v = 0; v < 4; ++v) {
        int deg = 0;
        for (int u = 0; u < 4; ++u) deg += d4.adjacent(v, u);
        deg3 += deg == 3;
    }
    CHECK(deg3 == 1); // star

    CHECK(dynkin('E', 8).size() == 8);
    CHECK(dynkin('F', 4).max_weight() == 2);
    CHECK(dynkin('G', 2).max_weight() == 3);

    CHECK_THROWS_AS(dynkin('A', 0), const error&);
    CHECK_THROWS_AS(dynkin('B', 1), const error&);
    CHECK_THROWS_AS(dynkin('C', 3), const error&); // no finite C family here
    CHECK_THROWS_AS(dynkin('D', 3), const error&);
    CHECK_THROWS_AS(dynkin('E', 9), const error&);
    CHECK_THROWS_AS(dynkin('F', 5), const error&);
    CHECK_THROWS_AS(dynkin('G', 3), const error&);
    CHECK_THROWS_AS(dynkin('X', 2), const error&);
}

TEST_CASE("finite labels round trip under relabeling and reorientation") {
    std::mt19937 rng(21);
    std::vector<std::pair<char, int>> cases;
    for (int r = 1; r <= 8; ++r) cases.push_back({'A', r});
    for (int r = 2; r <= 8; ++r) cases.push_back({'B', r});
    for (int r = 4; r <= 8; ++r) cases.push_back({'D', r});
    for (int r = 6; r <= 8; ++r) cases.push_back({'E', r});
    cases.push_back({'F', 4});
    cases.push_back({'G', 2});

    for (auto [f, r] : cases) {
        Diagram d = dynkin(f, r);
        std::string want = std::string(1, f) + std::to_string(r);
        CHECK(dynkin_label(d) == want);
        Diagram scrambled = testutil::random_relabel(rng, random_reorient(rng, d));
        CHECK(dynkin_label(scrambled) == want);
        CHECK(!extended_dynkin_label(d).has_value());
    }
}

TEST_CASE("near-miss shapes get no finite label") {
    CHECK(!dynkin_label(new_diagram(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}})).has_value());
    CHECK(!dynkin_label(new_diagram(3, {{0, 1, 2}, {1, 2, 2}})).has_value());
    CHECK(dynkin_label(new_diagram(2, {{1, 0, 2}})) == "B2");
    CHECK(!dynkin_label(new_diagram(2, {{0, 1, 4}})).has_value());
}

TEST_CASE("affine family shapes and labels") {
    std::mt19937 rng(22);
    std::vector<std::tuple<char, int, Weight, std::string>> cases;
    for (int r = 2; r <= 8; ++r) cases.push_back({'A', r, 1, "A" + std::to_string(r) + "(1)"});
    for (int r = 3; r <= 8; ++r) cases.push_back({'B', r, 1, "B" + std::to_string(r) + "(1)"});
    for (int r = 2; r <= 8; ++r) cases.push_back({'C', r, 1, "C" + std::to_string(r) + "(1)"});
    for (int r = 4; r <= 8; ++r) cases.push_back({'D', r, 1, "D" + std::to_string(r) + "(1)"});
    for (int r = 6; r <= 8; ++r) cases.push_back({'E', r, 1, "E" + std::to_string(r) + "(1)"});
    cases.push_back({'F', 4, 1, "F4(1)"});
    for (Weight a = 1; a <= 3; ++a) cases.push_back({'G', 2, a, "G2(1)(" + std::to_string(a) + ")"});
    for (Weight a = 4; a <= 6; ++a) cases.push_back({'I', 2, a, "I2(" + std::to_string(a) + ")"});

    for (const auto& [f, r, p, want] : cases) {
        Diagram d = affine_diagram(f, r, p);
        CHECK(d.size() == (f == 'I' ? 2 : r + 1));
        CHECK(extended_dynkin_label(d) == want);
        Diagram scrambled = testutil::random_relabel(rng, d);
        CHECK(extended_dynkin_label(scrambled) == want);
        CHECK(!dynkin_label(d).has_value());
    }

    CHECK_THROWS_AS(affine_diagram('A', 1), const error&);
    CHECK_THROWS_AS(affine_diagram('B', 2), const error&);
    CHECK_THROWS_AS(affine_diagram('C', 1), const error&);
    CHECK_THROWS_AS(affine_diagram('D', 3), const error&);
    CHECK_THROWS_AS(affine_diagram('E', 5), const error&);
    CHECK_THROWS_AS(affine_diagram('G', 2, 4), const error&);
    CHECK_THROWS_AS(affine_diagram('I', 2, 3), const error&);
}

TEST_CASE("weight-1 cycles only count as affine A when non-oriented") {
    Diagram oriented = new_diagram(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
    CHECK(!extended_dynkin_label(oriented).has_value());

    Diagram non_oriented = new_diagram(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    CHECK(extended_dynkin_label(non_oriented) == "A3(1)");

    // Orientation does not matter for the other families.
    std::mt19937 rng(23);
    Diagram c4 = random_reorient(rng, affine_diagram('C', 4));
    CHECK(extended_dynkin_label(c4) == "C4(1)");
}

TEST_CASE("finite and affine shape tables stay disjoint") {
    for (int v = 2; v <= 9; ++v) {
        std::vector<std::pair<char, int>> fams = {{'A', v}, {'B', v}, {'D', v}, {'E', v}, {'F', v}, {'G', v}};
        for (auto [f, r] : fams) {
            Diagram d = [&]() -> Diagram {
                try {
                    return dynkin(f, r);
                } catch (const error&) {
                    return new_diagram(1, {});
                }
            }();
            if (d.size() != v) continue;
            CHECK(!extended_dynkin_label(d).has_value());
        }
    }
}
