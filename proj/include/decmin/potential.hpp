// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "decmin/types.hpp"

namespace decmin {

/// Thrown by phi_conjugate when the price is nonpositive: the supremum of
/// p*k - c^k over the integers is then infinite (k -> -infinity).
struct UnboundedConjugateError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Symmetric separable potential Phi(x) = sum_i phi(x_i) with phi(k) = c^k.
/// The rapid-increase condition phi(k+1) >= n*phi(k) > 0 holds exactly when
/// c >= n; smaller bases stay constructible but are flagged non-rapid.
struct PowerPotential {
    Int base;
    int n;

    PowerPotential(Int base_, int n_) : base(std::move(base_)), n(n_) {
        if (base < 2) throw std::invalid_argument("PowerPotential: base must be >= 2");
        if (n < 1) throw std::invalid_argument("PowerPotential: dimension must be >= 1");
    }

    bool rapid() const { return base >= n; }
};

/// c^k as an exact rational; negative k yields 1/c^|k|.
Rat phi_pow(const PowerPotential& pot, long k);

/// The forward difference phi(k) - phi(k-1) = c^(k-1) * (c - 1).
Rat phi_diff(const PowerPotential& pot, long k);

/// Phi(x) = sum_i c^(x_i). Throws on length mismatch.
Rat phi_rap_value(const PowerPotential& pot, const IntVec& x);

/// The integer interval {k : phi(k)-phi(k-1) <= price <= phi(k+1)-phi(k)},
/// i.e. the minimizers of phi(k) - price*k. One point in general, two when
/// the price hits a difference exactly. Requires price > 0.
Box shifted_argmin_interval(const PowerPotential& pot, const Rat& price);

struct ConjugateValue {
    Rat value;   // max_k (price*k - c^k)
    Int arg_lo;  // attaining interval
    Int arg_hi;
};

/// Per-coordinate conjugate of phi at a positive price. Throws
/// UnboundedConjugateError when price <= 0.
ConjugateValue phi_conjugate(const PowerPotential& pot, const Rat& price);

/// argmin of Phi over S; equals decmin_set(S) whenever the potential is
/// rapidly increasing, which this operation insists on.
PointSet decmin_via_potential(const PointSet& s, const PowerPotential& pot);

}  // namespace decmin
