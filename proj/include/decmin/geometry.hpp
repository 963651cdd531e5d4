// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>

#include "decmin/types.hpp"

namespace decmin {

/// Integral neighborhood N(x): integer points z with |x_i - z_i| < 1 in
/// every coordinate. Strict inequality pins integer coordinates exactly.
PointSet integral_neighborhood(const RatVec& x);

struct HoleFreeResult {
    bool hole_free = false;
    std::optional<IntVec> witness;  // an integer point of conv(S) \ S
};

/// Decides conv(S) cap Z^n = S by enumerating the bounding box and testing
/// hull membership of every lattice point.
HoleFreeResult is_hole_free(const PointSet& s, const Limits& limits = default_limits());

struct PrefilterResult {
    bool pass = false;
    std::optional<std::pair<IntVec, IntVec>> witness;  // a pair whose midpoint escapes
};

/// Necessary condition for integral convexity: (u+v)/2 must lie in the local
/// hull conv(S cap N((u+v)/2)) for every pair u, v in S. A failing pair is a
/// certified non-IC witness.
PrefilterResult midpoint_prefilter(const PointSet& s);

struct ICWitness {
    RatVec point;  // in conv(S) but outside its local hull
    Box cell;      // the unit cell whose check failed
};

struct ICVerdict {
    bool integrally_convex = false;
    std::optional<ICWitness> witness;
};

/// Exact decision of integral convexity by the unit-cell oracle: S is
/// integrally convex iff conv(S) cap C is contained in conv(S cap C) for
/// every unit cell C, and it suffices to test the vertices of conv(S) cap C.
/// Exponential in n; guarded by the limits.
ICVerdict is_integrally_convex(const PointSet& s, const Limits& limits = default_limits());

/// Maximum pairwise L-infinity distance.
Int linf_diameter(const PointSet& s);

/// Exact outer description of conv(S): affine-hull equalities plus facet
/// inequalities <h, x> >= c with primitive integer normals, found by
/// exhaustive hyperplane search over point subsets.
struct ConvexHullDesc {
    int n = 0;
    int dim = 0;  // affine dimension of conv(S)
    std::vector<RatVec> eq_normals;
    RatVec eq_rhs;
    std::vector<RatVec> ineq_normals;
    RatVec ineq_rhs;
};

ConvexHullDesc facet_description(const PointSet& s, const Limits& limits = default_limits());

}  // namespace decmin
