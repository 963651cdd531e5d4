// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "decmin/types.hpp"

namespace decmin {

/// splitmix64: the 64-bit mixing generator all instance generation draws
/// from. Fixed here (and in the README) so any reimplementation reproduces
/// identical instances from identical seeds.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

/// A submodular set function on {0..n-1} tabulated by bitmask; values[mask]
/// is f of the subset encoded by mask, values[0] must be 0.
struct SubmodularTable {
    int n = 0;
    IntVec values;  // size 2^n

    static SubmodularTable of(int n, IntVec values);

    const Int& value(std::uint32_t mask) const { return values[mask]; }

    /// Exhaustive pairwise check of f(A) + f(B) >= f(A|B) + f(A&B).
    bool is_submodular() const;
};

/// Pseudo-random nonempty subset of {0,1}^n; integrally convex by
/// construction. A draw landing on the empty set is replaced by one point
/// derived from the same stream.
PointSet gen_cube_subset(int n, const Rat& density, std::uint64_t seed);

/// Integer points of the base polyhedron of f: x(A) <= f(A) for proper A,
/// x(N) = f(N). Requires a submodular table; the output is M-convex.
PointSet gen_base_polyhedron(const SubmodularTable& f);

struct M2Instance {
    PointSet intersection;
    PointSet side1;
    PointSet side2;
    SubmodularTable f1;
    SubmodularTable f2;
};

/// Intersection of two base-polyhedron point sets, parents retained for the
/// structural checks that need them. Throws when the intersection is empty.
M2Instance gen_m2_intersection(const SubmodularTable& f1, const SubmodularTable& f2);

/// {x : lo <= x <= hi, x_i - x_j <= gamma_ij}; difference-constraint sets
/// are integrally convex. Throws when the result is empty.
PointSet gen_difference_bounded(int n, const IntVec& lo, const IntVec& hi,
                                const std::vector<std::vector<Int>>& gamma);

/// Distinct uniform points of [-radius, radius]^n. No convexity promise;
/// serves as the negative-test source.
PointSet gen_random_candidate(int n, long radius, long count, std::uint64_t seed);

/// Random submodular tables for test campaigns: weighted truncations
/// f(A) = min(cap, sum of w_i over A) and partition-matroid ranks.
SubmodularTable gen_truncation_table(int n, std::uint64_t seed);
SubmodularTable gen_partition_rank_table(int n, std::uint64_t seed);

}  // namespace decmin
