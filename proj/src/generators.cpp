// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/generators.hpp"

#include <algorithm>

namespace decmin {

namespace {

// Exact Bernoulli(density) draw from one 64-bit word: accept u iff
// u * den < num * 2^64.
bool bernoulli(SplitMix64& rng, const Rat& density) {
    const Int u(static_cast<unsigned long>(rng.next()));
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 64);
    return u * density.get_den() < density.get_num() * scale;
}

}  // namespace

SubmodularTable SubmodularTable::of(int n, IntVec values) {
    if (n < 1 || n > 20) throw std::invalid_argument("SubmodularTable: dimension out of range");
    if (values.size() != (std::size_t{1} << n))
        throw std::invalid_argument("SubmodularTable: expected 2^n values");
    if (values[0] != 0) throw std::invalid_argument("SubmodularTable: f(empty) must be 0");
    SubmodularTable t;
    t.n = n;
    t.values = std::move(values);
    if (!t.is_submodular()) throw std::invalid_argument("SubmodularTable: not submodular");
    return t;
}

bool SubmodularTable::is_submodular() const {
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t a = 0; a <= full; ++a)
        for (std::uint32_t b = a + 1; b <= full; ++b)
            if (values[a] + values[b] < values[a | b] + values[a & b]) return false;
    return true;
}

PointSet gen_cube_subset(int n, const Rat& density, std::uint64_t seed) {
    if (n < 1 || n > 20) throw std::invalid_argument("gen_cube_subset: dimension out of range");
    if (density <= 0 || density > 1)
        throw std::invalid_argument("gen_cube_subset: density must lie in (0, 1]");
    SplitMix64 rng(seed);
    std::vector<IntVec> pts;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!bernoulli(rng, density)) continue;
        IntVec p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1;
        pts.push_back(std::move(p));
    }
    if (pts.empty()) {
        const std::uint32_t mask = static_cast<std::uint32_t>(rng.below(1u << n));
        IntVec p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1;
        pts.push_back(std::move(p));
    }
    return PointSet::of(n, std::move(pts));
}

PointSet gen_base_polyhedron(const SubmodularTable& f) {
    const int n = f.n;
    const std::uint32_t full = (1u << n) - 1;
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        hi[i] = f.value(1u << i);
        lo[i] = f.value(full) - f.value(full & ~(1u << i));
        if (lo[i] > hi[i]) throw std::invalid_argument("gen_base_polyhedron: empty base polyhedron");
    }
    std::vector<IntVec> pts;
    for (IntVec x : Box(lo, hi).lattice_points()) {
        bool ok = true;
        for (std::uint32_t mask = 1; mask <= full && ok; ++mask) {
            Int sum = 0;
            for (int i = 0; i < n; ++i)
                if ((mask >> i) & 1) sum += x[i];
            ok = (mask == full) ? sum == f.value(mask) : sum <= f.value(mask);
        }
        if (ok) pts.push_back(std::move(x));
    }
    if (pts.empty()) throw std::invalid_argument("gen_base_polyhedron: no integer points");
    return PointSet::of(n, std::move(pts));
}

M2Instance gen_m2_intersection(const SubmodularTable& f1, const SubmodularTable& f2) {
    if (f1.n != f2.n) throw std::invalid_argument("gen_m2_intersection: ground sets differ");
    M2Instance inst;
    inst.f1 = f1;
    inst.f2 = f2;
    inst.side1 = gen_base_polyhedron(f1);
    inst.side2 = gen_base_polyhedron(f2);
    std::vector<IntVec> pts;
    for (const IntVec& p : inst.side1.points)
        if (inst.side2.contains(p)) pts.push_back(p);
    if (pts.empty()) throw std::invalid_argument("gen_m2_intersection: empty intersection");
    inst.intersection = PointSet::of(f1.n, std::move(pts));
    return inst;
}

PointSet gen_difference_bounded(int n, const IntVec& lo, const IntVec& hi,
                                const std::vector<std::vector<Int>>& gamma) {
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
        throw std::invalid_argument("gen_difference_bounded: bound length mismatch");
    if (static_cast<int>(gamma.size()) != n)
        throw std::invalid_argument("gen_difference_bounded: gamma must be n x n");
    for (const auto& row : gamma) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("gen_difference_bounded: gamma must be n x n");
        for (const Int& g : row)
            if (g < 0) throw std::invalid_argument("gen_difference_bounded: gamma must be nonnegative");
    }
    std::vector<IntVec> pts;
    for (IntVec x : Box(lo, hi).lattice_points()) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (i != j) ok = x[i] - x[j] <= gamma[i][j];
        if (ok) pts.push_back(std::move(x));
    }
    if (pts.empty()) throw std::invalid_argument("gen_difference_bounded: empty result");
    return PointSet::of(n, std::move(pts));
}

PointSet gen_random_candidate(int n, long radius, long count, std::uint64_t seed) {
    if (n < 1 || radius < 0 || count < 1)
        throw std::invalid_argument("gen_random_candidate: bad parameters");
    const std::uint64_t side = static_cast<std::uint64_t>(2 * radius + 1);
    std::uint64_t grid = 1;
    for (int i = 0; i < n; ++i) {
        if (grid > (std::uint64_t{1} << 40) / side)
            throw std::invalid_argument("gen_random_candidate: grid too large");
        grid *= side;
    }
    if (static_cast<std::uint64_t>(count) > grid)
        throw std::invalid_argument("gen_random_candidate: count exceeds grid size");

    SplitMix64 rng(seed);
    std::vector<IntVec> pts;
    while (pts.size() < static_cast<std::size_t>(count)) {
        IntVec p(n);
        for (int i = 0; i < n; ++i)
            p[i] = Int(static_cast<long>(rng.below(side))) - radius;
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    return PointSet::of(n, std::move(pts));
}

SubmodularTable gen_truncation_table(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<long> w(n);
    long total = 0;
    for (int i = 0; i < n; ++i) {
        w[i] = 1 + static_cast<long>(rng.below(3));
        total += w[i];
    }
    const long cap = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(total)));
    IntVec values(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long sum = 0;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) sum += w[i];
        values[mask] = std::min(sum, cap);
    }
    return SubmodularTable::of(n, std::move(values));
}

SubmodularTable gen_partition_rank_table(int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const int blocks = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<int> block_of(n);
    for (int i = 0; i < n; ++i) block_of[i] = static_cast<int>(rng.below(blocks));
    std::vector<long> caps(blocks);
    for (int b = 0; b < blocks; ++b) caps[b] = 1 + static_cast<long>(rng.below(2));
    IntVec values(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long rank = 0;
        for (int b = 0; b < blocks; ++b) {
            long hit = 0;
            for (int i = 0; i < n; ++i)
                if (block_of[i] == b && ((mask >> i) & 1)) ++hit;
            rank += std::min(hit, caps[b]);
        }
        values[mask] = rank;
    }
    return SubmodularTable::of(n, std::move(values));
}

}  // namespace decmin
