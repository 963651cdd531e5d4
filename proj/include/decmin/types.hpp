// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decmin/rational.hpp"

namespace decmin {

/// Strict lexicographic order on integer vectors of equal length.
inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// A finite set of integer lattice points in fixed ambient dimension n.
/// Canonical form: points deduplicated and sorted lexicographically, so two
/// equal sets compare equal structurally and serialize identically.
struct PointSet {
    int n = 0;
    std::vector<IntVec> points;

    PointSet() = default;

    /// Canonicalizing constructor: validates row lengths, sorts, dedupes.
    static PointSet of(int n, std::vector<IntVec> pts) {
        if (n < 1) throw std::invalid_argument("PointSet: dimension must be >= 1");
        for (const IntVec& p : pts)
            if (static_cast<int>(p.size()) != n)
                throw std::invalid_argument("PointSet: point length does not match n");
        std::sort(pts.begin(), pts.end(), lex_less);
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        PointSet s;
        s.n = n;
        s.points = std::move(pts);
        return s;
    }

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }

    bool contains(const IntVec& p) const {
        return std::binary_search(points.begin(), points.end(), p, lex_less);
    }

    bool operator==(const PointSet& other) const = default;
};

/// Integral box [lo, hi] with lo <= hi componentwise.
struct Box {
    IntVec lo;
    IntVec hi;

    Box() = default;
    Box(IntVec lo_, IntVec hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (lo.size() != hi.size()) throw std::invalid_argument("Box: corner length mismatch");
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i]) throw std::invalid_argument("Box: lo exceeds hi in coordinate " + std::to_string(i + 1));
    }

    int dim() const { return static_cast<int>(lo.size()); }

    bool contains(const IntVec& p) const {
        if (p.size() != lo.size()) return false;
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (p[i] < lo[i] || p[i] > hi[i]) return false;
        return true;
    }

    /// Componentwise widths hi - lo.
    IntVec width() const {
        IntVec w(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) w[i] = hi[i] - lo[i];
        return w;
    }

    bool unit_width() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (hi[i] - lo[i] > 1) return false;
        return true;
    }

    /// All integer points of the box in lexicographic order.
    std::vector<IntVec> lattice_points() const {
        std::vector<IntVec> out;
        IntVec cur = lo;
        while (true) {
            out.push_back(cur);
            int i = dim() - 1;
            while (i >= 0 && cur[i] == hi[i]) {
                cur[i] = lo[i];
                --i;
            }
            if (i < 0) break;
            cur[i] += 1;
        }
        return out;
    }

    bool operator==(const Box& other) const = default;
};

/// Price certificate for the structural identity decmin(S) = F cap B.
/// Indices in n0/n1 are 0-based in memory; serialization uses 1-based.
struct Certificate {
    std::string method;  // "face" or "fenchel"
    Int base;            // the c of phi(k) = c^k
    RatVec price;        // p*
    Rat beta;            // min_{x in S} <p*, x>
    Box box;
    std::vector<int> n0;
    std::vector<int> n1;
    PointSet face_members;
};

/// Size guards for the enumeration-heavy analysis operations.
struct Limits {
    int max_n = 8;
    std::size_t max_points = 10000;
    std::size_t max_enumeration = 4000000;  // lattice/subset enumeration budget
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

/// Ambient-dimension guard shared by the analysis entry points.
inline void check_analysis_limits(const PointSet& s, const Limits& limits) {
    if (s.empty()) throw std::invalid_argument("analysis operation on empty point set");
    if (s.n > limits.max_n)
        throw std::invalid_argument("dimension " + std::to_string(s.n) + " exceeds cap " +
                                    std::to_string(limits.max_n));
    if (s.size() > limits.max_points)
        throw std::invalid_argument("point count exceeds cap");
}

}  // namespace decmin
