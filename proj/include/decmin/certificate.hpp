// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "decmin/potential.hpp"
#include "decmin/ratlp.hpp"
#include "decmin/types.hpp"

namespace decmin {

/// Thrown when the dec-min set spans more than a unit box, which happens
/// exactly when the input is not integrally convex (the N0/N1 partition is
/// then undefined and the certificate pipeline refuses).
struct DiameterError : std::domain_error {
    Int diameter;
    explicit DiameterError(Int d)
        : std::domain_error("dec-min set has L-infinity diameter " + d.get_str() +
                            " > 1; certificate construction requires an integrally convex input"),
          diameter(std::move(d)) {}
};

/// Thrown when the price-perturbation system has no solution; carries the
/// Farkas vector proving it. Cannot occur for integrally convex inputs.
struct InfeasibleError : std::runtime_error {
    RatVec farkas;
    explicit InfeasibleError(RatVec r)
        : std::runtime_error("price system infeasible; Farkas certificate attached"),
          farkas(std::move(r)) {}
};

/// Thrown when a constructed certificate fails its own a-posteriori checks,
/// which is only reachable for pathological non-integrally-convex inputs
/// that slip past the diameter gate.
struct PostconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BoxPartition {
    Box box;              // B°, the smallest integral box containing the set
    std::vector<int> n0;  // coordinates where the box is flat
    std::vector<int> n1;  // coordinates of width one
};

/// Smallest integral box around M with its flat/unit coordinate partition.
/// Requires linf_diameter(M) <= 1; throws DiameterError otherwise.
BoxPartition smallest_box(const PointSet& m);

/// The enlarged box B: flat coordinates widen by one on both sides, unit
/// coordinates keep their range.
Box enlarged_box(const Box& box, const std::vector<int>& n0, const std::vector<int>& n1);

/// Base price p_i = phi(a_i + 1) - phi(a_i); each single-coordinate argmin of
/// phi(k) - p_i k is then exactly {a_i, a_i + 1}.
RatVec base_price(const PowerPotential& pot, const IntVec& a);

/// The assembled perturbation system: anchor x° in decmin(S), the offenders
/// y^k = (S cap B) \ decmin(S), and rows c^k = (y^k - x°) restricted to N0
/// with d_k = <p, x° - y^k>. Offenders are listed in increasing dec-order
/// (ties broken lexicographically) and the rows of the system align with
/// that listing.
struct FarkasSystemBundle {
    IntVec anchor;
    std::vector<IntVec> offenders;
    IneqSystem sys;
    std::vector<int> n0;
    std::vector<int> n1;
    RatVec price;    // the base price p
    Box inner_box;   // B°
    Box outer_box;   // B
};

FarkasSystemBundle farkas_system(const PointSet& s, const PowerPotential& pot,
                                 const IntVec& anchor);

/// Farkas-based certificate: solves Cq >= d, perturbs the base price on N0,
/// and checks a posteriori that the dec-min set is exactly the cheapest face
/// intersected with B°. The anchor defaults to the lexicographically
/// smallest dec-min element.
Certificate certify_face(const PointSet& s, const PowerPotential& pot);
Certificate certify_face(const PointSet& s, const PowerPotential& pot, const IntVec& anchor);

/// Fenchel-style certificate: fixes the price on N1, confines it to the
/// closed difference interval on N0, and constrains the anchor against all
/// of S \ decmin(S). The certificate box is the product of the
/// per-coordinate argmin intervals recomputed from the solved price.
Certificate certify_fenchel(const PointSet& s, const PowerPotential& pot);

struct VerifyReport {
    bool face_is_level_set = false;    // face_members = {x in S : <p*, x> = beta}
    bool beta_is_minimum = false;      // beta = min_{x in S} <p*, x>
    bool structural_identity = false;  // decmin(S) = face_members cap box
    bool box_unit_width = false;
    std::optional<bool> fenchel_identity;  // only for method = fenchel

    bool all_pass() const {
        return face_is_level_set && beta_is_minimum && structural_identity && box_unit_width &&
               fenchel_identity.value_or(true);
    }
};

/// Independent re-check of a certificate against the instance, recomputing
/// the dec-min set from scratch.
VerifyReport verify_certificate(const PointSet& s, const Certificate& cert);

struct DualityGap {
    Rat primal;  // min Phi over S
    Rat dual;    // theta_S(p) - sum of coordinate conjugates
    Rat gap;     // primal - dual, nonnegative by weak duality
};

/// Exact primal/dual pair at a price vector with all entries positive.
DualityGap duality_gap(const PointSet& s, const PowerPotential& pot, const RatVec& p);

}  // namespace decmin
