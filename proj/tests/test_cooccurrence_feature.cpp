#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hop/cooccurrence.hpp"
#include "hop/error.hpp"
#include "hop/feature.hpp"
#include "hop/neighborhood.hpp"
#include "hop/rng.hpp"
#include "oracle_helpers.hpp"

using namespace hop;

TEST_CASE("record_arrivals applies the dimension weight to every pair") {
    CoOccurrenceStore store;
    store.record({make_simplex({1, 2, 3})}, 0);
    CHECK(store.weight(1, 2) == 2);
    CHECK(store.weight(2, 3) == 2);
    CHECK(store.weight(1, 3) == 2);
    CHECK(store.weight(3, 1) == 2);  // unordered

    store.record({make_simplex({1, 2})}, 1);
    CHECK(store.weight(1, 2) == 3);

    SUBCASE("vertex arrivals contribute nothing") {
        CoOccurrenceStore s2;
        s2.record({make_simplex({7})}, 0);
        CHECK(s2.num_pairs() == 0);
    }
    SUBCASE("out-of-order slices are rejected") {
        CHECK_THROWS_AS(store.record({}, 5), Error);
    }
}

TEST_CASE("score sums pair weights against the candidate") {
    CoOccurrenceStore empty;
    CHECK(score(empty, make_simplex({1, 2}), 3) == 0);

    CoOccurrenceStore store;
    store.record({make_simplex({1, 2, 3})}, 0);
    CHECK(score(store, make_simplex({1, 2}), 3) == 4);
    CHECK_THROWS_AS(score(store, make_simplex({1, 2}), 2), Error);

    // additivity over a disjoint vertex split of the simplex
    store.record({make_simplex({2, 3, 4, 5})}, 1);
    const VertexId v = 9;
    store.record({make_simplex({1, 9}), make_simplex({4, 9, 5})}, 2);
    const Count whole = score(store, make_simplex({1, 2, 4}), v);
    const Count parts = score(store, make_simplex({1}), v) + score(store, make_simplex({2}), v) +
                        score(store, make_simplex({4}), v);
    CHECK(whole == parts);
}

TEST_CASE("store replay is deterministic and monotone; matches the log oracle") {
    Rng rng(41);
    for (int round = 0; round < 25; ++round) {
        // random arrival groups over <= 9 vertices
        std::vector<std::vector<oracle::Verts>> groups;
        const int T = 2 + static_cast<int>(rng.uniform(3));
        for (int t = 0; t < T; ++t) {
            std::vector<oracle::Verts> group;
            const int n = static_cast<int>(rng.uniform(6));
            for (int i = 0; i < n; ++i) {
                oracle::Verts s;
                const int size = 1 + static_cast<int>(rng.uniform(4));
                for (int j = 0; j < size; ++j) {
                    s.push_back(static_cast<VertexId>(rng.uniform(9)));
                }
                group.push_back(oracle::sorted(s));
            }
            groups.push_back(group);
        }

        const oracle::Filt brute = oracle::Filt::from_arrival_groups(groups);
        const Filtration f = oracle::to_hop(groups);
        const Filtration again = oracle::to_hop(groups);

        for (int t = 0; t < T; ++t) {
            const auto& snap = f.snapshots[static_cast<std::size_t>(t)];
            for (VertexId v : snap.vertex_set()) {
                for (const Simplex& m : snap.maximal()) {
                    if (m.contains_vertex(v)) continue;
                    const Count got = score(f.cooccurrence[static_cast<std::size_t>(t)], m, v);
                    CHECK(got == oracle::score(brute, t, m.vertices(), v));
                    CHECK(got == score(again.cooccurrence[static_cast<std::size_t>(t)], m, v));
                    if (t > 0) {
                        CHECK(got >= score(f.cooccurrence[static_cast<std::size_t>(t) - 1], m, v));
                    }
                }
            }
        }
    }
}

TEST_CASE("score matches the log oracle on a 500-arrival history") {
    Rng rng(600);
    std::vector<std::vector<oracle::Verts>> groups(5);
    for (auto& group : groups) {
        for (int i = 0; i < 100; ++i) {
            oracle::Verts s;
            const int size = 1 + static_cast<int>(rng.uniform(4));
            for (int j = 0; j < size; ++j) s.push_back(static_cast<VertexId>(rng.uniform(12)));
            group.push_back(oracle::sorted(s));
        }
    }
    const oracle::Filt brute = oracle::Filt::from_arrival_groups(groups);
    const Filtration f = oracle::to_hop(groups);
    const auto& snap = f.snapshots.back();
    int checked = 0;
    for (const Simplex& m : snap.maximal()) {
        for (VertexId v : snap.vertex_set()) {
            if (m.contains_vertex(v)) continue;
            CHECK(score(f.cooccurrence.back(), m, v) ==
                  oracle::score(brute, 4, m.vertices(), v));
            if (++checked >= 60) break;
        }
        if (checked >= 60) break;
    }
    CHECK(checked == 60);
}

TEST_CASE("l1_distance is a metric on equal-length vectors") {
    CHECK(l1_distance({1, 2, 0}, {1, 0, 1}) == 3);
    CHECK(l1_distance({4, 4}, {4, 4}) == 0);
    CHECK_THROWS_AS(l1_distance({1}, {1, 2}), Error);

    Rng rng(5);
    auto random_vec = [&rng] {
        FeatureVector v(4);
        for (auto& x : v) x = static_cast<Count>(rng.uniform(6));
        return v;
    };
    for (int i = 0; i < 200; ++i) {
        const auto a = random_vec(), b = random_vec(), c = random_vec();
        CHECK(l1_distance(a, b) == l1_distance(b, a));
        CHECK(l1_distance(a, b) >= 0);
        CHECK((l1_distance(a, b) == 0) == (a == b));
        CHECK(l1_distance(a, c) <= l1_distance(a, b) + l1_distance(b, c));
    }
}

TEST_CASE("extract composes the neighborhood feature and the score") {
    // two filled triangles with spokes and no co-occurrence history: score is 0
    ComplexSnapshot c;
    for (auto verts : {std::vector<VertexId>{9, 6, 10}, {9, 10, 13}, {9, 5}, {9, 8}, {10, 7},
                       {10, 11}, {10, 14}, {10, 15}}) {
        c.insert(make_simplex(verts));
    }
    CoOccurrenceStore empty;
    const auto F = extract(c, empty, make_simplex({9, 10}), 7, 1, 3);
    CHECK(F == FeatureVector{1, 10, 11, 2, 0});

    CHECK_THROWS_AS(extract(c, empty, make_simplex({9, 10}), 9, 1, 3), Error);   // member
    CHECK_THROWS_AS(extract(c, empty, make_simplex({9, 10}), 12, 1, 3), Error);  // outside ball
}

TEST_CASE("extract is deterministic and equals the oracle composition") {
    Rng rng(17);
    for (int round = 0; round < 20; ++round) {
        std::vector<std::vector<oracle::Verts>> groups(2);
        for (auto& group : groups) {
            const int n = 2 + static_cast<int>(rng.uniform(4));
            for (int i = 0; i < n; ++i) {
                oracle::Verts s;
                const int size = 1 + static_cast<int>(rng.uniform(4));
                for (int j = 0; j < size; ++j) s.push_back(static_cast<VertexId>(rng.uniform(8)));
                group.push_back(oracle::sorted(s));
            }
        }
        const oracle::Filt brute = oracle::Filt::from_arrival_groups(groups);
        const Filtration f = oracle::to_hop(groups);

        const int t = 1;
        const auto& snap = f.snapshots[t];
        for (const Simplex& sigma : snap.maximal()) {
            const auto ball = k_ball_simplex(snap, sigma, 1);
            for (VertexId v : ball.members) {
                if (sigma.contains_vertex(v)) continue;
                const auto got = extract(snap, f.cooccurrence[t], sigma, v, 1, 4);
                const auto ref = oracle::feature(brute, t, sigma.vertices(), v, 1, 4);
                CHECK(oracle::to_feature(got) == ref);
                CHECK(got == extract(snap, f.cooccurrence[t], sigma, v, 1, 4));
            }
        }
    }
}
