#include "doctest.h"

#include "cdiag/mutation.hpp"
#include "helpers.hpp"

using namespace cdiag;

TEST_CASE("mutation reverses edges at the mutated vertex") {
    Diagram d = new_diagram(2, {{0, 1, 5}});
    Diagram m = mutate(d, 0);
    CHECK(m.weight(1, 0) == 5);
    CHECK(m.weight(0, 1) == 0);
    CHECK(mutate(m, 0) == d);

    CHECK_THROWS_AS(mutate(d, 2), const error&);
    CHECK_THROWS_AS(mutate(d, -1), const error&);
}

TEST_CASE("mutating an oriented triangle drops the opposite edge") {
    Diagram tri = new_diagram(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    Diagram m = mutate(tri, 0);
    CHECK(m.weight(1, 0) == 1);
    CHECK(m.weight(0, 2) == 1);
    CHECK(m.pair_weight(1, 2) == 0);
    CHECK(mutate(m, 0) == tri);
}

TEST_CASE("mutating a path creates an oriented triangle") {
    Diagram path = new_diagram(3, {{0, 1, 2}, {1, 2, 2}});
    Diagram m = mutate(path, 1);
    CHECK(m.weight(1, 0) == 2);
    CHECK(m.weight(2, 1) == 2);
    CHECK(m.weight(0, 2) == 4); // new edge, weight 2*2, oriented with the 2-path
    CHECK(mutate(m, 1) == path);
}

TEST_CASE("weight-3 triangle mutates to the weight-3 path") {
    Diagram tri = new_diagram(3, {{0, 1, 3}, {1, 2, 1}, {2, 0, 3}});
    Diagram m = mutate(tri, 1);
    CHECK(m.pair_weight(0, 2) == 0);
    CHECK(m.weight(1, 0) == 3);
    CHECK(m.weight(2, 1) == 1);
}

TEST_CASE("non-cyclic updates add weights") {
    // 0 -> 1 -> 2 with existing 0 -> 2: weights add up along the 2-path.
    Diagram d = new_diagram(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 1}});
    Diagram m = mutate(d, 1);
    // c' = 2*2 + 1 + 2*sqrt(4) = 9, direction kept.
    CHECK(m.weight(0, 2) == 9);
    CHECK(mutate(m, 1) == d);
}

TEST_CASE("mutation is an involution on random diagrams") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 7;
        Diagram d = testutil::random_diagram(rng, n);
        std::uniform_int_distribution<int> kd(0, n - 1);
        int k = kd(rng);
        Diagram m = mutate(d, k);
        CHECK_NOTHROW(new_diagram(n, m.edges()));
        CHECK(mutate(m, k) == d);
        CHECK(mutate_seq(d, {{k}, {k}}) == d);
    }
}

TEST_CASE("mutation preserves the underlying graph off the star of k and cycles stay square") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + trial % 6;
        Diagram d = testutil::random_diagram(rng, n, 0.5);
        for (int k = 0; k < n; ++k) {
            Diagram m = mutate(d, k);
            for (int i = 0; i < n; ++i) {
                if (i == k) continue;
                CHECK(m.pair_weight(i, k) == d.pair_weight(i, k));
                for (int j = 0; j < n; ++j) {
                    if (j == k || j == i) continue;
                    bool through_k = (d.has_edge(i, k) && d.has_edge(k, j)) || (d.has_edge(j, k) && d.has_edge(k, i));
                    if (!through_k) CHECK(m.weight(i, j) == d.weight(i, j));
                }
            }
        }
    }
}

TEST_CASE("overflowing weight products fail loudly") {
    Weight big = Weight{1} << 32;
    Diagram d = new_diagram(3, {{0, 1, big}, {1, 2, big}});
    CHECK_THROWS_AS(mutate(d, 1), const error&);
    try {
        mutate(d, 1);
    } catch (const error& e) {
        CHECK(e.code() == errc::weight_overflow);
    }
}
