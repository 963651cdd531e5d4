// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/potential.hpp"

#include <cstdlib>

namespace decmin {

Rat phi_pow(const PowerPotential& pot, long k) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), pot.base.get_mpz_t(), static_cast<unsigned long>(std::labs(k)));
    if (k >= 0) return Rat(p);
    return make_rat(1, p);
}

Rat phi_diff(const PowerPotential& pot, long k) {
    return phi_pow(pot, k) - phi_pow(pot, k - 1);
}

Rat phi_rap_value(const PowerPotential& pot, const IntVec& x) {
    if (static_cast<int>(x.size()) != pot.n)
        throw std::invalid_argument("phi_rap_value: length mismatch");
    Rat s = 0;
    for (const Int& c : x) s += phi_pow(pot, to_long(c));
    return s;
}

Box shifted_argmin_interval(const PowerPotential& pot, const Rat& price) {
    if (price <= 0)
        throw std::domain_error("shifted_argmin_interval: price must be positive");
    // The differences phi(k)-phi(k-1) strictly increase, vanish toward
    // k -> -infinity and blow up toward +infinity, so an integer walk from
    // k = 0 locates max{k : diff(k) <= price} exactly, no logarithms needed.
    long k = 0;
    long guard = 0;
    while (phi_diff(pot, k + 1) <= price) {
        ++k;
        if (++guard > 100000) throw std::logic_error("shifted_argmin_interval: walk did not terminate");
    }
    while (phi_diff(pot, k) > price) {
        --k;
        if (++guard > 100000) throw std::logic_error("shifted_argmin_interval: walk did not terminate");
    }
    if (phi_diff(pot, k) == price) return Box({Int(k - 1)}, {Int(k)});
    return Box({Int(k)}, {Int(k)});
}

ConjugateValue phi_conjugate(const PowerPotential& pot, const Rat& price) {
    if (price <= 0)
        throw UnboundedConjugateError("phi_conjugate: unbounded for nonpositive price");
    // max_k (price*k - phi(k)) is attained exactly on the minimizer interval
    // of phi(k) - price*k.
    Box arg = shifted_argmin_interval(pot, price);
    const long k = to_long(arg.lo[0]);
    ConjugateValue out;
    out.value = price * Rat(k) - phi_pow(pot, k);
    out.arg_lo = arg.lo[0];
    out.arg_hi = arg.hi[0];
    return out;
}

PointSet decmin_via_potential(const PointSet& s, const PowerPotential& pot) {
    if (s.empty()) throw std::invalid_argument("decmin_via_potential: empty set");
    if (s.n != pot.n) throw std::invalid_argument("decmin_via_potential: dimension mismatch");
    if (!pot.rapid())
        throw std::domain_error("decmin_via_potential: base below rapid-increase threshold");
    Rat best = phi_rap_value(pot, s.points.front());
    std::vector<IntVec> attainers{s.points.front()};
    for (std::size_t k = 1; k < s.points.size(); ++k) {
        Rat cur = phi_rap_value(pot, s.points[k]);
        if (cur < best) {
            best = std::move(cur);
            attainers.assign(1, s.points[k]);
        } else if (cur == best) {
            attainers.push_back(s.points[k]);
        }
    }
    return PointSet::of(s.n, std::move(attainers));
}

}  // namespace decmin
