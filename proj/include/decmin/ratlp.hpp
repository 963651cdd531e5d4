// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "decmin/types.hpp"

namespace decmin {

/// System of linear inequalities C q >= d over free rational variables.
/// Empty row lists and zero-column systems are both allowed.
struct IneqSystem {
    int num_vars = 0;
    std::vector<RatVec> rows;  // each of length num_vars
    RatVec rhs;

    IneqSystem() = default;
    IneqSystem(int num_vars_, std::vector<RatVec> rows_, RatVec rhs_)
        : num_vars(num_vars_), rows(std::move(rows_)), rhs(std::move(rhs_)) {
        if (rows.size() != rhs.size()) throw std::invalid_argument("IneqSystem: row/rhs mismatch");
        for (const RatVec& r : rows)
            if (static_cast<int>(r.size()) != num_vars)
                throw std::invalid_argument("IneqSystem: row length mismatch");
    }
};

/// Exactly one branch is populated: a solution q of Cq >= d, or a Farkas
/// vector r with r^T C = 0, r >= 0, r^T 1 = 1, r^T d > 0. Both branches are
/// re-verified arithmetically before being handed out.
struct FeasibilityOutcome {
    bool feasible = false;
    RatVec solution;  // length num_vars when feasible
    RatVec farkas;    // length rows when infeasible
    long pivots = 0;
};

FeasibilityOutcome solve_feasibility(const IneqSystem& sys);

/// Convex hull membership with an exact witness either way: barycentric
/// weights on the points of P, or a strictly separating functional h with
/// <h, z> >= bound for all z in P and <h, x> < bound.
struct HullResult {
    bool inside = false;
    RatVec weights;    // aligned with P.points when inside
    RatVec separator;  // h when outside
    Rat bound;         // the separating level
};

HullResult hull_membership(const RatVec& x, const PointSet& p);

// ---------------------------------------------------------------------------
// General phase-1 machinery (shared by the wrappers above and by geometry).
// ---------------------------------------------------------------------------

enum class Rel { Le, Eq, Ge };

/// Rows a.x REL b over variables that are individually free or nonnegative.
struct LinearSystem {
    int num_vars = 0;
    std::vector<RatVec> rows;
    std::vector<Rel> rels;
    RatVec rhs;
    std::vector<bool> nonneg;  // per variable; false = free

    void add_row(RatVec row, Rel rel, Rat b) {
        rows.push_back(std::move(row));
        rels.push_back(rel);
        rhs.push_back(std::move(b));
    }
};

/// Result of exact phase-1: a feasible point, or row multipliers w proving
/// infeasibility (w^T A dominated by 0 on the variable cone, w^T b > 0,
/// with w_i >= 0 on Ge rows and w_i <= 0 on Le rows).
struct Phase1Result {
    bool feasible = false;
    RatVec point;
    RatVec row_multipliers;
    long pivots = 0;
};

/// Dense simplex over exact rationals with Bland's anti-cycling rule.
Phase1Result phase1_solve(const LinearSystem& sys);

}  // namespace decmin
