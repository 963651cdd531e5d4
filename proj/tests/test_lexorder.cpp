// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>

#include "decmin/generators.hpp"
#include "decmin/lexorder.hpp"

using namespace decmin;

TEST_SUITE_BEGIN("lexorder");

namespace {

IntVec random_vec(SplitMix64& rng, int n, long lo, long hi) {
    IntVec v(n);
    for (int i = 0; i < n; ++i)
        v[i] = Int(lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))));
    return v;
}

}  // namespace

TEST_CASE("dec_sort rearranges descending") {
    CHECK(dec_sort({2, 5, 2, 1, 3}) == IntVec{5, 3, 2, 2, 1});
    CHECK(dec_sort({1, 5, 2, 4, 1}) == IntVec{5, 4, 2, 1, 1});
    CHECK(dec_sort({7}) == IntVec{7});
}

TEST_CASE("dec_compare on the worked pairs") {
    CHECK(dec_compare({2, 5, 2, 1, 3}, {1, 5, 2, 4, 1}) == DecOrdering::LessDec);
    CHECK(dec_compare({1, 2}, {2, 1}) == DecOrdering::EqualDec);
    CHECK(dec_compare({0, 0}, {0, 0}) == DecOrdering::EqualDec);
    CHECK_THROWS_AS(dec_compare({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("decmin_set on the worked sets") {
    const PointSet s = PointSet::of(
        4, {{2, 1, 1, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {1, 2, 0, 1}, {2, 2, 0, 0}});
    const PointSet dm = decmin_set(s);
    CHECK(dm == PointSet::of(4, {{2, 1, 1, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {1, 2, 0, 1}}));

    const PointSet tie = PointSet::of(2, {{1, 2}, {2, 1}});
    CHECK(decmin_set(tie) == tie);

    const PointSet single = PointSet::of(3, {{4, 0, 2}});
    CHECK(decmin_set(single) == single);

    CHECK_THROWS_AS(decmin_set(PointSet{}), std::invalid_argument);
}

TEST_CASE("totality and antisymmetry of the dec order") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(5));
        const IntVec x = random_vec(rng, n, -4, 4);
        const IntVec y = random_vec(rng, n, -4, 4);
        const DecOrdering xy = dec_compare(x, y);
        const DecOrdering yx = dec_compare(y, x);
        if (xy == DecOrdering::EqualDec) {
            CHECK(yx == DecOrdering::EqualDec);
            CHECK(dec_sort(x) == dec_sort(y));
        } else {
            CHECK(((xy == DecOrdering::LessDec && yx == DecOrdering::GreaterDec) ||
                   (xy == DecOrdering::GreaterDec && yx == DecOrdering::LessDec)));
        }
    }
}

TEST_CASE("transitivity of the dec order") {
    SplitMix64 rng(8);
    auto leq = [](const IntVec& a, const IntVec& b) {
        return dec_compare(a, b) != DecOrdering::GreaterDec;
    };
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(4));
        const IntVec x = random_vec(rng, n, -3, 3);
        const IntVec y = random_vec(rng, n, -3, 3);
        const IntVec z = random_vec(rng, n, -3, 3);
        if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
    }
}

TEST_CASE("decmin_set is a minimal, mutually equal subset") {
    SplitMix64 rng(9);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(4));
        std::vector<IntVec> pts;
        const int count = 1 + static_cast<int>(rng.below(20));
        for (int k = 0; k < count; ++k) pts.push_back(random_vec(rng, n, -3, 3));
        const PointSet s = PointSet::of(n, std::move(pts));
        const PointSet dm = decmin_set(s);
        REQUIRE(!dm.empty());
        for (const IntVec& m : dm.points) {
            CHECK(s.contains(m));
            CHECK(dec_compare(m, dm.points.front()) == DecOrdering::EqualDec);
            for (const IntVec& y : s.points)
                CHECK(dec_compare(m, y) != DecOrdering::GreaterDec);
        }
    }
}

TEST_CASE("relabeling coordinates commutes with decmin_set") {
    SplitMix64 rng(10);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 2 + static_cast<int>(rng.below(3));
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);

        std::vector<IntVec> pts;
        const int count = 1 + static_cast<int>(rng.below(15));
        for (int k = 0; k < count; ++k) pts.push_back(random_vec(rng, n, -3, 3));
        const PointSet s = PointSet::of(n, pts);

        auto apply = [&](const IntVec& v) {
            IntVec w(n);
            for (int i = 0; i < n; ++i) w[perm[i]] = v[i];
            return w;
        };
        std::vector<IntVec> relabeled;
        for (const IntVec& p : s.points) relabeled.push_back(apply(p));
        const PointSet sp = PointSet::of(n, std::move(relabeled));

        std::vector<IntVec> expected;
        for (const IntVec& m : decmin_set(s).points) expected.push_back(apply(m));
        CHECK(decmin_set(sp) == PointSet::of(n, std::move(expected)));
    }
}

TEST_SUITE_END();
