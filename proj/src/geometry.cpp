// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "decmin/linalg.hpp"
#include "decmin/ratlp.hpp"

namespace decmin {

namespace {

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

// Visit every k-subset of {0..m-1}.
template <typename F>
void for_each_subset(int m, int k, F&& visit) {
    if (k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::size_t binomial_capped(std::size_t m, std::size_t k, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > cap) return cap + 1;
        r = r * (m - i) / (i + 1);
    }
    return r;
}

PointSet subset_in_cell(const PointSet& s, const IntVec& corner) {
    std::vector<IntVec> pts;
    for (const IntVec& p : s.points) {
        bool in = true;
        for (std::size_t i = 0; i < p.size() && in; ++i)
            in = p[i] >= corner[i] && p[i] <= corner[i] + 1;
        if (in) pts.push_back(p);
    }
    PointSet out;
    out.n = s.n;
    out.points = std::move(pts);  // already lex-sorted, no duplicates
    return out;
}

bool rat_vec_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

// All vertices of conv(S) cap [corner, corner+1], from the outer description:
// equalities stay active, and every (dim)-subset of the inequality rows is
// solved as a square system, keeping feasible unique solutions.
std::vector<RatVec> cell_vertices(const ConvexHullDesc& desc, const IntVec& corner,
                                  const Limits& limits) {
    const int n = desc.n;
    std::vector<RatVec> ineq_rows;
    RatVec ineq_rhs;
    // Facets that cannot touch the closed cell are irrelevant for vertex
    // activity (they are still enforced in the feasibility filter below).
    std::vector<RatVec> filter_rows;
    RatVec filter_rhs;
    for (std::size_t f = 0; f < desc.ineq_normals.size(); ++f) {
        const RatVec& h = desc.ineq_normals[f];
        Rat lo = 0, hi = 0;
        for (int i = 0; i < n; ++i) {
            const Rat at_lo = h[i] * Rat(corner[i]);
            const Rat at_hi = h[i] * Rat(corner[i] + 1);
            lo += std::min(at_lo, at_hi);
            hi += std::max(at_lo, at_hi);
        }
        filter_rows.push_back(h);
        filter_rhs.push_back(desc.ineq_rhs[f]);
        if (lo <= desc.ineq_rhs[f] && desc.ineq_rhs[f] <= hi) {
            ineq_rows.push_back(h);
            ineq_rhs.push_back(desc.ineq_rhs[f]);
        }
    }
    for (int i = 0; i < n; ++i) {
        RatVec lo_row(n, Rat(0)), hi_row(n, Rat(0));
        lo_row[i] = 1;   // x_i >= corner_i
        hi_row[i] = -1;  // -x_i >= -(corner_i + 1)
        ineq_rows.push_back(lo_row);
        ineq_rhs.push_back(Rat(corner[i]));
        ineq_rows.push_back(hi_row);
        ineq_rhs.push_back(Rat(-(corner[i] + 1)));
    }

    const int k = desc.dim;  // = n - #equalities
    if (binomial_capped(ineq_rows.size(), static_cast<std::size_t>(k), limits.max_enumeration) >
        limits.max_enumeration)
        throw std::invalid_argument("is_integrally_convex: cell enumeration exceeds budget");

    std::set<std::vector<std::pair<Int, Int>>> seen;  // num/den key
    std::vector<RatVec> verts;
    auto try_candidate = [&](const RatVec& x) {
        for (int i = 0; i < n; ++i)
            if (x[i] < Rat(corner[i]) || x[i] > Rat(corner[i] + 1)) return;
        for (std::size_t f = 0; f < filter_rows.size(); ++f)
            if (dot(filter_rows[f], x) < filter_rhs[f]) return;
        std::vector<std::pair<Int, Int>> key;
        key.reserve(x.size());
        for (const Rat& c : x) key.emplace_back(c.get_num(), c.get_den());
        if (seen.insert(std::move(key)).second) verts.push_back(x);
    };

    if (k == 0) {
        auto x = linalg::solve_square(desc.eq_normals, desc.eq_rhs);
        if (x) try_candidate(*x);
    } else {
        for_each_subset(static_cast<int>(ineq_rows.size()), k, [&](const std::vector<int>& idx) {
            linalg::Matrix m = desc.eq_normals;
            RatVec rhs = desc.eq_rhs;
            for (int i : idx) {
                m.push_back(ineq_rows[i]);
                rhs.push_back(ineq_rhs[i]);
            }
            auto x = linalg::solve_square(std::move(m), std::move(rhs));
            if (x) try_candidate(*x);
        });
    }
    std::sort(verts.begin(), verts.end(), rat_vec_less);
    return verts;
}

// Phase-1 feasibility of conv(S) cap [corner, corner+1].
bool cell_nonempty(const ConvexHullDesc& desc, const IntVec& corner) {
    LinearSystem ls;
    ls.num_vars = desc.n;
    ls.nonneg.assign(desc.n, false);
    for (std::size_t i = 0; i < desc.eq_normals.size(); ++i)
        ls.add_row(desc.eq_normals[i], Rel::Eq, desc.eq_rhs[i]);
    for (std::size_t i = 0; i < desc.ineq_normals.size(); ++i)
        ls.add_row(desc.ineq_normals[i], Rel::Ge, desc.ineq_rhs[i]);
    for (int i = 0; i < desc.n; ++i) {
        RatVec row(desc.n, Rat(0));
        row[i] = 1;
        ls.add_row(row, Rel::Ge, Rat(corner[i]));
        row[i] = -1;
        ls.add_row(std::move(row), Rel::Ge, Rat(-(corner[i] + 1)));
    }
    return phase1_solve(ls).feasible;
}

// Confirms the ICVerdict witness invariant: the point lies in conv(S) but
// not in the local hull conv(S cap N(point)).
void certify_ic_witness(const PointSet& s, const RatVec& point) {
    if (!hull_membership(point, s).inside)
        throw std::logic_error("is_integrally_convex: witness escaped conv(S)");
    PointSet local;
    local.n = s.n;
    for (const IntVec& z : integral_neighborhood(point).points)
        if (s.contains(z)) local.points.push_back(z);
    if (!local.empty() && hull_membership(point, local).inside)
        throw std::logic_error("is_integrally_convex: witness lies in its local hull");
}

}  // namespace

PointSet integral_neighborhood(const RatVec& x) {
    const int n = static_cast<int>(x.size());
    if (n < 1) throw std::invalid_argument("integral_neighborhood: empty vector");
    IntVec lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = rat_floor(x[i]);
        hi[i] = rat_ceil(x[i]);
    }
    return PointSet::of(n, Box(std::move(lo), std::move(hi)).lattice_points());
}

HoleFreeResult is_hole_free(const PointSet& s, const Limits& limits) {
    check_analysis_limits(s, limits);
    IntVec lo = s.points.front(), hi = s.points.front();
    for (const IntVec& p : s.points)
        for (int i = 0; i < s.n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    Int volume = 1;
    for (int i = 0; i < s.n; ++i) volume *= hi[i] - lo[i] + 1;
    if (volume > static_cast<long>(limits.max_enumeration))
        throw std::invalid_argument("is_hole_free: bounding box exceeds enumeration budget");

    for (const IntVec& z : Box(lo, hi).lattice_points()) {
        if (s.contains(z)) continue;
        if (hull_membership(to_rat_vec(z), s).inside) return {false, z};
    }
    return {true, std::nullopt};
}

PrefilterResult midpoint_prefilter(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("midpoint_prefilter: empty set");
    for (std::size_t a = 0; a < s.points.size(); ++a) {
        for (std::size_t b = a + 1; b < s.points.size(); ++b) {
            const IntVec& u = s.points[a];
            const IntVec& v = s.points[b];
            RatVec mid(s.n);
            for (int i = 0; i < s.n; ++i) mid[i] = make_rat(u[i] + v[i], 2);
            PointSet local;
            local.n = s.n;
            for (const IntVec& z : integral_neighborhood(mid).points)
                if (s.contains(z)) local.points.push_back(z);
            if (local.empty() || !hull_membership(mid, local).inside)
                return {false, std::make_pair(u, v)};
        }
    }
    return {true, std::nullopt};
}

ConvexHullDesc facet_description(const PointSet& s, const Limits& limits) {
    check_analysis_limits(s, limits);
    const int n = s.n;
    const IntVec& origin = s.points.front();

    linalg::Matrix diffs;
    for (std::size_t i = 1; i < s.points.size(); ++i) {
        RatVec d(n);
        for (int j = 0; j < n; ++j) d[j] = Rat(s.points[i][j] - origin[j]);
        diffs.push_back(std::move(d));
    }

    ConvexHullDesc desc;
    desc.n = n;
    desc.dim = diffs.empty() ? 0 : linalg::rank(diffs);

    // Affine hull as two-sided constraints: one equality per nullspace
    // direction of the difference matrix.
    for (const RatVec& h : linalg::nullspace(diffs, n)) {
        RatVec hp = linalg::primitive(h);
        desc.eq_rhs.push_back(dot(hp, origin));
        desc.eq_normals.push_back(std::move(hp));
    }

    if (desc.dim == 0) return desc;

    // Basis of the hull directions, for expressing candidate facet normals
    // inside the affine hull.
    linalg::Matrix basis;
    for (const RatVec& d : diffs) {
        linalg::Matrix probe = basis;
        probe.push_back(d);
        if (linalg::rank(probe) > static_cast<int>(basis.size())) basis.push_back(d);
        if (static_cast<int>(basis.size()) == desc.dim) break;
    }

    if (binomial_capped(s.size(), static_cast<std::size_t>(desc.dim), limits.max_enumeration) >
        limits.max_enumeration)
        throw std::invalid_argument("facet_description: subset enumeration exceeds budget");

    const int d = desc.dim;
    std::set<std::vector<std::pair<Int, Int>>> tested;  // hyperplanes already classified
    for_each_subset(static_cast<int>(s.size()), d, [&](const std::vector<int>& idx) {
        // Normal h = sum mu_k basis_k orthogonal to the subset's differences.
        linalg::Matrix m;
        for (int j = 1; j < d; ++j) {
            RatVec row(d);
            for (int k = 0; k < d; ++k) {
                Rat acc = 0;
                for (int c = 0; c < n; ++c)
                    acc += Rat(s.points[idx[j]][c] - s.points[idx[0]][c]) * basis[k][c];
                row[k] = acc;
            }
            m.push_back(std::move(row));
        }
        auto null = linalg::nullspace(m, d);
        if (null.size() != 1) return;  // subset not affinely independent
        RatVec h(n, Rat(0));
        for (int k = 0; k < d; ++k)
            for (int c = 0; c < n; ++c) h[c] += null[0][k] * basis[k][c];
        Rat level = dot(h, s.points[idx[0]]);

        RatVec combined = h;
        combined.push_back(level);
        combined = linalg::primitive(combined);
        bool all_zero = true;
        for (const Rat& v : combined) all_zero = all_zero && v == 0;
        if (all_zero) return;
        // One orientation-independent key per hyperplane.
        RatVec key = combined;
        for (const Rat& v : key)
            if (v != 0) {
                if (v < 0)
                    for (Rat& w : key) w = -w;
                break;
            }
        std::vector<std::pair<Int, Int>> key_ints;
        for (const Rat& v : key) key_ints.emplace_back(v.get_num(), v.get_den());
        if (!tested.insert(std::move(key_ints)).second) return;

        h.assign(combined.begin(), combined.end() - 1);
        level = combined.back();
        bool below = false, above = false;
        for (const IntVec& p : s.points) {
            const Rat val = dot(h, p);
            below = below || val < level;
            above = above || val > level;
            if (below && above) return;  // not a supporting hyperplane
        }
        if (below) {  // orient so every point satisfies <h, x> >= level
            for (Rat& v : h) v = -v;
            level = -level;
        }
        desc.ineq_normals.push_back(std::move(h));
        desc.ineq_rhs.push_back(std::move(level));
    });
    return desc;
}

ICVerdict is_integrally_convex(const PointSet& s, const Limits& limits) {
    check_analysis_limits(s, limits);
    ConvexHullDesc desc = facet_description(s, limits);

    IntVec lo = s.points.front(), hi = s.points.front();
    for (const IntVec& p : s.points)
        for (int i = 0; i < s.n; ++i) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    IntVec cells_hi(s.n);
    for (int i = 0; i < s.n; ++i) cells_hi[i] = std::max(lo[i], Int(hi[i] - 1));

    for (const IntVec& corner : Box(lo, cells_hi).lattice_points()) {
        if (!cell_nonempty(desc, corner)) continue;
        const PointSet cell_points = subset_in_cell(s, corner);
        for (const RatVec& v : cell_vertices(desc, corner, limits)) {
            if (!cell_points.empty() && hull_membership(v, cell_points).inside) continue;
            certify_ic_witness(s, v);
            IntVec cell_top(s.n);
            for (int i = 0; i < s.n; ++i) cell_top[i] = corner[i] + 1;
            return {false, ICWitness{v, Box(corner, cell_top)}};
        }
    }
    return {true, std::nullopt};
}

Int linf_diameter(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("linf_diameter: empty set");
    Int best = 0;
    for (std::size_t a = 0; a < s.points.size(); ++a)
        for (std::size_t b = a + 1; b < s.points.size(); ++b)
            for (int i = 0; i < s.n; ++i) {
                Int d = s.points[a][i] - s.points[b][i];
                if (d < 0) d = -d;
                best = std::max(best, d);
            }
    return best;
}

}  // namespace decmin
