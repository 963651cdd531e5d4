// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/ratlp.hpp"

namespace decmin {

namespace {

constexpr long kPivotBudget = 1000000;

// Exact phase-1 tableau. Free variables are split into nonnegative pairs,
// every row gets an artificial variable, and rows are sign-flipped so the
// right-hand side starts nonnegative. Minimizing the artificial sum with
// Bland's rule terminates finitely; at optimum either the artificials are
// all zero (feasible) or the duals of the artificial columns certify
// infeasibility.
struct Tableau {
    int num_rows;
    int num_cols;          // structural + slack + artificial
    int first_artificial;  // column index of artificial 0
    std::vector<RatVec> t;
    RatVec b;
    RatVec obj;  // reduced costs of the phase-1 objective
    Rat objval;
    std::vector<int> basis;
    std::vector<int> flip;  // per-row sign applied to reach b >= 0
    long pivots = 0;

    explicit Tableau(const LinearSystem& sys) : num_rows(static_cast<int>(sys.rows.size())) {
        std::vector<int> pos_col(sys.num_vars), neg_col(sys.num_vars, -1);
        int col = 0;
        for (int j = 0; j < sys.num_vars; ++j) {
            pos_col[j] = col++;
            if (!sys.nonneg[j]) neg_col[j] = col++;
        }
        std::vector<int> slack_col(num_rows, -1);
        for (int i = 0; i < num_rows; ++i)
            if (sys.rels[i] != Rel::Eq) slack_col[i] = col++;
        first_artificial = col;
        num_cols = col + num_rows;

        t.assign(num_rows, RatVec(num_cols, Rat(0)));
        b.resize(num_rows);
        flip.assign(num_rows, 1);
        for (int i = 0; i < num_rows; ++i) {
            for (int j = 0; j < sys.num_vars; ++j) {
                t[i][pos_col[j]] = sys.rows[i][j];
                if (neg_col[j] >= 0) t[i][neg_col[j]] = -sys.rows[i][j];
            }
            if (slack_col[i] >= 0) t[i][slack_col[i]] = (sys.rels[i] == Rel::Le) ? 1 : -1;
            b[i] = sys.rhs[i];
            if (b[i] < 0) {
                flip[i] = -1;
                for (Rat& v : t[i]) v = -v;
                b[i] = -b[i];
            }
            t[i][first_artificial + i] = 1;
        }

        obj.assign(num_cols, Rat(0));
        objval = 0;
        for (int c = 0; c < first_artificial; ++c)
            for (int i = 0; i < num_rows; ++i) obj[c] -= t[i][c];
        for (int i = 0; i < num_rows; ++i) objval += b[i];
        basis.resize(num_rows);
        for (int i = 0; i < num_rows; ++i) basis[i] = first_artificial + i;
        this->pos_col = std::move(pos_col);
        this->neg_col = std::move(neg_col);
    }

    std::vector<int> pos_col, neg_col;

    void pivot(int row, int col) {
        const Rat piv = t[row][col];
        for (Rat& v : t[row]) v /= piv;
        b[row] /= piv;
        for (int r = 0; r < num_rows; ++r) {
            if (r == row || t[r][col] == 0) continue;
            const Rat factor = t[r][col];
            for (int c = 0; c < num_cols; ++c) t[r][c] -= factor * t[row][c];
            b[r] -= factor * b[row];
        }
        const Rat factor = obj[col];
        objval += factor * b[row];
        for (int c = 0; c < num_cols; ++c) obj[c] -= factor * t[row][c];
        basis[row] = col;
    }

    void run() {
        while (true) {
            int enter = -1;
            for (int c = 0; c < num_cols; ++c)
                if (obj[c] < 0) {
                    enter = c;
                    break;
                }
            if (enter < 0) return;
            int leave = -1;
            Rat best;
            for (int i = 0; i < num_rows; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = b[i] / t[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave < 0) throw std::logic_error("phase1: unbounded artificial objective");
            pivot(leave, enter);
            if (++pivots > kPivotBudget) throw std::logic_error("phase1: pivot budget exhausted");
        }
    }
};

void verify_point(const LinearSystem& sys, const RatVec& x) {
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        const Rat lhs = dot(sys.rows[i], x);
        const bool ok = sys.rels[i] == Rel::Le   ? lhs <= sys.rhs[i]
                        : sys.rels[i] == Rel::Ge ? lhs >= sys.rhs[i]
                                                 : lhs == sys.rhs[i];
        if (!ok) throw std::logic_error("phase1: produced point violates row " + std::to_string(i));
    }
    for (int j = 0; j < sys.num_vars; ++j)
        if (sys.nonneg[j] && x[j] < 0)
            throw std::logic_error("phase1: produced point violates nonnegativity");
}

void verify_multipliers(const LinearSystem& sys, const RatVec& w) {
    Rat total = 0;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rels[i] == Rel::Ge && w[i] < 0)
            throw std::logic_error("phase1: multiplier sign violates Ge row");
        if (sys.rels[i] == Rel::Le && w[i] > 0)
            throw std::logic_error("phase1: multiplier sign violates Le row");
        total += w[i] * sys.rhs[i];
    }
    for (int j = 0; j < sys.num_vars; ++j) {
        Rat combo = 0;
        for (std::size_t i = 0; i < sys.rows.size(); ++i) combo += w[i] * sys.rows[i][j];
        if (sys.nonneg[j] ? combo > 0 : combo != 0)
            throw std::logic_error("phase1: multiplier combination not dominated");
    }
    if (total <= 0) throw std::logic_error("phase1: multipliers do not certify infeasibility");
}

}  // namespace

Phase1Result phase1_solve(const LinearSystem& sys) {
    if (sys.rows.size() != sys.rels.size() || sys.rows.size() != sys.rhs.size())
        throw std::invalid_argument("phase1_solve: inconsistent row data");
    if (static_cast<int>(sys.nonneg.size()) != sys.num_vars)
        throw std::invalid_argument("phase1_solve: nonneg mask length mismatch");
    for (const RatVec& row : sys.rows)
        if (static_cast<int>(row.size()) != sys.num_vars)
            throw std::invalid_argument("phase1_solve: row length mismatch");

    Tableau tab(sys);
    tab.run();

    Phase1Result out;
    out.pivots = tab.pivots;
    if (tab.objval == 0) {
        RatVec cols(tab.num_cols, Rat(0));
        for (int i = 0; i < tab.num_rows; ++i) cols[tab.basis[i]] = tab.b[i];
        out.point.assign(sys.num_vars, Rat(0));
        for (int j = 0; j < sys.num_vars; ++j) {
            out.point[j] = cols[tab.pos_col[j]];
            if (tab.neg_col[j] >= 0) out.point[j] -= cols[tab.neg_col[j]];
        }
        verify_point(sys, out.point);
        out.feasible = true;
        return out;
    }

    // Dual prices of the artificial columns: y_i = c_B B^-1 e_i = 1 - cbar_i,
    // mapped back through the row sign flips.
    out.row_multipliers.resize(tab.num_rows);
    for (int i = 0; i < tab.num_rows; ++i) {
        Rat y = Rat(1) - tab.obj[tab.first_artificial + i];
        out.row_multipliers[i] = Rat(tab.flip[i]) * y;
    }
    verify_multipliers(sys, out.row_multipliers);
    out.feasible = false;
    return out;
}

FeasibilityOutcome solve_feasibility(const IneqSystem& sys) {
    LinearSystem ls;
    ls.num_vars = sys.num_vars;
    ls.nonneg.assign(sys.num_vars, false);
    for (std::size_t i = 0; i < sys.rows.size(); ++i) ls.add_row(sys.rows[i], Rel::Ge, sys.rhs[i]);

    Phase1Result res = phase1_solve(ls);
    FeasibilityOutcome out;
    out.pivots = res.pivots;
    if (res.feasible) {
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            if (dot(sys.rows[i], res.point) < sys.rhs[i])
                throw std::logic_error("solve_feasibility: solution fails verification");
        out.feasible = true;
        out.solution = std::move(res.point);
        return out;
    }

    // Normalize the multipliers to r^T 1 = 1 and re-verify all four Farkas
    // conditions on the normalized vector.
    Rat total = 0;
    for (const Rat& w : res.row_multipliers) total += w;
    if (total <= 0) throw std::logic_error("solve_feasibility: degenerate Farkas normalization");
    RatVec r = std::move(res.row_multipliers);
    for (Rat& v : r) v /= total;
    Rat rd = 0, rsum = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0) throw std::logic_error("solve_feasibility: negative Farkas multiplier");
        rd += r[i] * sys.rhs[i];
        rsum += r[i];
    }
    for (int j = 0; j < sys.num_vars; ++j) {
        Rat combo = 0;
        for (std::size_t i = 0; i < r.size(); ++i) combo += r[i] * sys.rows[i][j];
        if (combo != 0) throw std::logic_error("solve_feasibility: Farkas vector not in left kernel");
    }
    if (rsum != 1 || rd <= 0) throw std::logic_error("solve_feasibility: Farkas conditions fail");
    out.feasible = false;
    out.farkas = std::move(r);
    return out;
}

HullResult hull_membership(const RatVec& x, const PointSet& p) {
    if (p.empty()) throw std::invalid_argument("hull_membership: empty point set");
    if (static_cast<int>(x.size()) != p.n)
        throw std::invalid_argument("hull_membership: dimension mismatch");

    const int k = static_cast<int>(p.size());
    LinearSystem ls;
    ls.num_vars = k;
    ls.nonneg.assign(k, true);
    for (int i = 0; i < p.n; ++i) {
        RatVec row(k);
        for (int j = 0; j < k; ++j) row[j] = Rat(p.points[j][i]);
        ls.add_row(std::move(row), Rel::Eq, x[i]);
    }
    ls.add_row(RatVec(k, Rat(1)), Rel::Eq, Rat(1));

    Phase1Result res = phase1_solve(ls);
    HullResult out;
    if (res.feasible) {
        Rat sum = 0;
        RatVec combo(p.n, Rat(0));
        for (int j = 0; j < k; ++j) {
            if (res.point[j] < 0) throw std::logic_error("hull_membership: negative weight");
            sum += res.point[j];
            for (int i = 0; i < p.n; ++i) combo[i] += res.point[j] * Rat(p.points[j][i]);
        }
        if (sum != 1 || combo != x) throw std::logic_error("hull_membership: weights fail verification");
        out.inside = true;
        out.weights = std::move(res.point);
        return out;
    }

    // Infeasibility multipliers (w, g) satisfy <w, z> + g <= 0 on P and
    // <w, x> + g > 0; then h = -w strictly separates x from P at level g.
    out.separator.assign(p.n, Rat(0));
    for (int i = 0; i < p.n; ++i) out.separator[i] = -res.row_multipliers[i];
    out.bound = res.row_multipliers[p.n];
    for (const IntVec& z : p.points)
        if (dot(out.separator, z) < out.bound)
            throw std::logic_error("hull_membership: separator fails on a hull point");
    if (dot(out.separator, x) >= out.bound)
        throw std::logic_error("hull_membership: separator fails on the query point");
    out.inside = false;
    return out;
}

}  // namespace decmin
