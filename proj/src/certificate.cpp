// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/certificate.hpp"

#include <algorithm>

#include "decmin/geometry.hpp"
#include "decmin/lexorder.hpp"

namespace decmin {

namespace {

PointSet linear_argmin(const PointSet& s, const RatVec& price, Rat* min_out = nullptr) {
    Rat best = dot(price, s.points.front());
    std::vector<IntVec> attainers{s.points.front()};
    for (std::size_t k = 1; k < s.points.size(); ++k) {
        Rat cur = dot(price, s.points[k]);
        if (cur < best) {
            best = std::move(cur);
            attainers.assign(1, s.points[k]);
        } else if (cur == best) {
            attainers.push_back(s.points[k]);
        }
    }
    if (min_out) *min_out = best;
    return PointSet::of(s.n, std::move(attainers));
}

PointSet intersect_with_box(const PointSet& s, const Box& box) {
    std::vector<IntVec> pts;
    for (const IntVec& p : s.points)
        if (box.contains(p)) pts.push_back(p);
    PointSet out;
    out.n = s.n;
    out.points = std::move(pts);
    return out;
}

// Offender listing order: increasing dec-order, lexicographic tie-break.
bool offender_less(const IntVec& a, const IntVec& b) {
    const DecOrdering c = dec_compare(a, b);
    if (c != DecOrdering::EqualDec) return c == DecOrdering::LessDec;
    return lex_less(a, b);
}

// Shared tail of both certification routes: solve, build p*, assemble.
Certificate assemble(const PointSet& s, const PowerPotential& pot, const char* method,
                     const FarkasSystemBundle& bundle, const IneqSystem& sys) {
    FeasibilityOutcome lp = solve_feasibility(sys);
    if (!lp.feasible) throw InfeasibleError(std::move(lp.farkas));

    Certificate cert;
    cert.method = method;
    cert.base = pot.base;
    cert.price = bundle.price;
    for (std::size_t k = 0; k < bundle.n0.size(); ++k)
        cert.price[bundle.n0[k]] += lp.solution[k];
    cert.n0 = bundle.n0;
    cert.n1 = bundle.n1;

    Rat minimum;
    cert.face_members = linear_argmin(s, cert.price, &minimum);
    cert.beta = dot(cert.price, bundle.anchor);
    if (cert.beta != minimum)
        throw PostconditionError("certificate: anchor does not minimize the perturbed price over S");
    return cert;
}

}  // namespace

BoxPartition smallest_box(const PointSet& m) {
    if (m.empty()) throw std::invalid_argument("smallest_box: empty set");
    const Int diameter = linf_diameter(m);
    if (diameter > 1) throw DiameterError(diameter);
    IntVec lo = m.points.front(), hi = m.points.front();
    for (const IntVec& p : m.points)
        for (int i = 0; i < m.n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    BoxPartition out;
    for (int i = 0; i < m.n; ++i)
        (hi[i] == lo[i] ? out.n0 : out.n1).push_back(i);
    out.box = Box(std::move(lo), std::move(hi));
    return out;
}

Box enlarged_box(const Box& box, const std::vector<int>& n0, const std::vector<int>& n1) {
    if (n0.size() + n1.size() != box.lo.size())
        throw std::invalid_argument("enlarged_box: partition size mismatch");
    IntVec lo = box.lo, hi = box.hi;
    for (int i : n1)
        if (hi[i] != lo[i] + 1) throw std::invalid_argument("enlarged_box: N1 coordinate not unit");
    for (int i : n0) {
        if (hi[i] != lo[i]) throw std::invalid_argument("enlarged_box: N0 coordinate not flat");
        lo[i] -= 1;
        hi[i] += 1;
    }
    return Box(std::move(lo), std::move(hi));
}

RatVec base_price(const PowerPotential& pot, const IntVec& a) {
    if (static_cast<int>(a.size()) != pot.n)
        throw std::invalid_argument("base_price: length mismatch");
    RatVec p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) p[i] = phi_diff(pot, to_long(a[i]) + 1);
    return p;
}

FarkasSystemBundle farkas_system(const PointSet& s, const PowerPotential& pot,
                                 const IntVec& anchor) {
    if (s.n != pot.n) throw std::invalid_argument("farkas_system: dimension mismatch");
    const PointSet dm = decmin_set(s);
    if (!dm.contains(anchor))
        throw std::invalid_argument("farkas_system: anchor is not a dec-min element");

    FarkasSystemBundle bundle;
    bundle.anchor = anchor;
    BoxPartition bp = smallest_box(dm);
    bundle.n0 = std::move(bp.n0);
    bundle.n1 = std::move(bp.n1);
    bundle.outer_box = enlarged_box(bp.box, bundle.n0, bundle.n1);
    bundle.inner_box = std::move(bp.box);
    bundle.price = base_price(pot, bundle.inner_box.lo);

    for (const IntVec& y : s.points)
        if (bundle.outer_box.contains(y) && !dm.contains(y)) bundle.offenders.push_back(y);
    std::sort(bundle.offenders.begin(), bundle.offenders.end(), offender_less);

    std::vector<RatVec> rows;
    RatVec rhs;
    for (const IntVec& y : bundle.offenders) {
        RatVec row(bundle.n0.size());
        for (std::size_t k = 0; k < bundle.n0.size(); ++k)
            row[k] = Rat(y[bundle.n0[k]] - anchor[bundle.n0[k]]);
        rows.push_back(std::move(row));
        Rat d = 0;
        for (int i = 0; i < s.n; ++i) d += bundle.price[i] * Rat(anchor[i] - y[i]);
        rhs.push_back(std::move(d));
    }
    bundle.sys = IneqSystem(static_cast<int>(bundle.n0.size()), std::move(rows), std::move(rhs));
    return bundle;
}

Certificate certify_face(const PointSet& s, const PowerPotential& pot) {
    if (s.empty()) throw std::invalid_argument("certify_face: empty set");
    return certify_face(s, pot, decmin_set(s).points.front());
}

Certificate certify_face(const PointSet& s, const PowerPotential& pot, const IntVec& anchor) {
    const FarkasSystemBundle bundle = farkas_system(s, pot, anchor);
    Certificate cert = assemble(s, pot, "face", bundle, bundle.sys);
    cert.box = bundle.inner_box;

    // Claims beyond the offender set: dec-min must coincide with the cheap
    // face inside B°. Holds by the theorem for integrally convex inputs.
    if (intersect_with_box(cert.face_members, cert.box) != decmin_set(s))
        throw PostconditionError("certify_face: face does not cut out the dec-min set");
    return cert;
}

Certificate certify_fenchel(const PointSet& s, const PowerPotential& pot) {
    if (s.empty()) throw std::invalid_argument("certify_fenchel: empty set");
    const PointSet dm = decmin_set(s);
    FarkasSystemBundle bundle = farkas_system(s, pot, dm.points.front());

    // Offenders widen to all of S \ decmin(S), and the N0 offsets are boxed
    // inside [phi(a_i)-phi(a_i-1) - p_i, 0] so the anchor stays a global
    // minimizer of the shifted potential.
    const int m = static_cast<int>(bundle.n0.size());
    std::vector<RatVec> rows;
    RatVec rhs;
    for (const IntVec& y : s.points) {
        if (dm.contains(y)) continue;
        RatVec row(m);
        for (int k = 0; k < m; ++k)
            row[k] = Rat(y[bundle.n0[k]] - bundle.anchor[bundle.n0[k]]);
        rows.push_back(std::move(row));
        Rat d = 0;
        for (int i = 0; i < s.n; ++i) d += bundle.price[i] * Rat(bundle.anchor[i] - y[i]);
        rhs.push_back(std::move(d));
    }
    for (int k = 0; k < m; ++k) {
        const long a = to_long(bundle.inner_box.lo[bundle.n0[k]]);
        RatVec row(m, Rat(0));
        row[k] = 1;  // q_k >= phi_diff(a) - phi_diff(a+1)
        rows.push_back(row);
        rhs.push_back(phi_diff(pot, a) - phi_diff(pot, a + 1));
        row[k] = -1;  // q_k <= 0
        rows.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }
    IneqSystem sys(m, std::move(rows), std::move(rhs));

    Certificate cert = assemble(s, pot, "fenchel", bundle, sys);

    // The certificate box is the argmin box of the shifted potential at the
    // solved price, recomputed coordinate by coordinate.
    IntVec lo(s.n), hi(s.n);
    for (int i = 0; i < s.n; ++i) {
        const Box interval = shifted_argmin_interval(pot, cert.price[i]);
        lo[i] = interval.lo[0];
        hi[i] = interval.hi[0];
    }
    cert.box = Box(std::move(lo), std::move(hi));

    if (intersect_with_box(cert.face_members, cert.box) != dm)
        throw PostconditionError("certify_fenchel: argmin identity fails");
    return cert;
}

VerifyReport verify_certificate(const PointSet& s, const Certificate& cert) {
    if (static_cast<int>(cert.price.size()) != s.n)
        throw std::invalid_argument("verify_certificate: dimension mismatch");
    VerifyReport report;

    Rat minimum;
    linear_argmin(s, cert.price, &minimum);
    report.beta_is_minimum = (minimum == cert.beta);
    std::vector<IntVec> level_pts;
    for (const IntVec& x : s.points)
        if (dot(cert.price, x) == cert.beta) level_pts.push_back(x);
    report.face_is_level_set = (PointSet::of(s.n, std::move(level_pts)) == cert.face_members);

    const PointSet dm = decmin_set(s);
    report.structural_identity = (intersect_with_box(cert.face_members, cert.box) == dm);
    report.box_unit_width = cert.box.unit_width();

    if (cert.method == "fenchel") {
        bool ok = true;
        for (int i = 0; i < s.n && ok; ++i) ok = cert.price[i] > 0;
        if (ok) {
            PowerPotential pot(cert.base, s.n);
            IntVec lo(s.n), hi(s.n);
            for (int i = 0; i < s.n; ++i) {
                const Box interval = shifted_argmin_interval(pot, cert.price[i]);
                lo[i] = interval.lo[0];
                hi[i] = interval.hi[0];
            }
            ok = (intersect_with_box(cert.face_members, Box(std::move(lo), std::move(hi))) == dm);
        }
        report.fenchel_identity = ok;
    }
    return report;
}

DualityGap duality_gap(const PointSet& s, const PowerPotential& pot, const RatVec& p) {
    if (s.empty()) throw std::invalid_argument("duality_gap: empty set");
    if (static_cast<int>(p.size()) != pot.n || s.n != pot.n)
        throw std::invalid_argument("duality_gap: dimension mismatch");
    for (const Rat& pi : p)
        if (pi <= 0) throw std::domain_error("duality_gap: price entries must be positive");

    DualityGap out;
    out.primal = phi_rap_value(pot, s.points.front());
    Rat theta = dot(p, s.points.front());
    for (std::size_t k = 1; k < s.points.size(); ++k) {
        out.primal = std::min(out.primal, phi_rap_value(pot, s.points[k]));
        theta = std::min(theta, dot(p, s.points[k]));
    }
    Rat conjugate_sum = 0;
    for (const Rat& pi : p) conjugate_sum += phi_conjugate(pot, pi).value;
    out.dual = theta - conjugate_sum;
    out.gap = out.primal - out.dual;
    return out;
}

}  // namespace decmin
