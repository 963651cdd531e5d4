// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <tuple>

#include "decmin/types.hpp"

namespace decmin {

/// A family of subsets of the ground set {0..ground-1}; members are sorted
/// index lists, pairwise distinct.
struct SetFamily {
    int ground = 0;
    std::vector<std::vector<int>> members;

    static SetFamily of(int ground, std::vector<std::vector<int>> members);
    bool contains(const std::vector<int>& member) const;
    bool operator==(const SetFamily& other) const = default;
};

struct MConvexResult {
    bool m_convex = false;
    // (x, y, i): exchanging coordinate i of x toward y never lands in S.
    std::optional<std::tuple<IntVec, IntVec, int>> witness;
};

/// Equal component sums plus the exchange axiom: for x, y in S and x_i > y_i
/// there is j with x_j < y_j and x - e_i + e_j in S.
MConvexResult is_m_convex(const PointSet& s);

struct BasisAxiomResult {
    bool holds = false;
    // (A, B, i): no j in B \ A repairs A - i.
    std::optional<std::tuple<std::vector<int>, std::vector<int>, int>> witness;
};

/// Matroid basis axiom: equal cardinalities and one-element exchanges stay
/// inside the family.
BasisAxiomResult matroid_basis_axiom(const SetFamily& f);

struct DecminStructure {
    IntVec z;          // componentwise minimum of the dec-min set
    SetFamily family;  // supports of the dec-min elements shifted by z
    bool matroidal = false;
};

/// Matroidal shape of the dec-min set of an M-convex input: dec-min elements
/// are z + indicator vectors of a family that must satisfy the basis axiom.
DecminStructure decmin_structure_m(const PointSet& s);

/// For T inside {0,1}^n and a positive convex combination hitting 1/2 on
/// every coordinate of U, some member of T meets U in at most |U|/2
/// coordinates; returns the first such member. Preconditions are checked
/// exactly.
IntVec cube_lemma_witness(const PointSet& t, const std::vector<int>& u, const RatVec& lambda);

}  // namespace decmin
