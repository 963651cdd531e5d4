// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/structures.hpp"

#include <algorithm>

#include "decmin/lexorder.hpp"

namespace decmin {

SetFamily SetFamily::of(int ground, std::vector<std::vector<int>> members) {
    if (ground < 0) throw std::invalid_argument("SetFamily: negative ground set");
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        if (std::adjacent_find(m.begin(), m.end()) != m.end())
            throw std::invalid_argument("SetFamily: repeated element in a member");
        for (int i : m)
            if (i < 0 || i >= ground) throw std::invalid_argument("SetFamily: element out of range");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    SetFamily f;
    f.ground = ground;
    f.members = std::move(members);
    return f;
}

bool SetFamily::contains(const std::vector<int>& member) const {
    return std::binary_search(members.begin(), members.end(), member);
}

MConvexResult is_m_convex(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("is_m_convex: empty set");
    Int sum0 = 0;
    for (const Int& c : s.points.front()) sum0 += c;
    for (const IntVec& p : s.points) {
        Int sum = 0;
        for (const Int& c : p) sum += c;
        if (sum != sum0) return {false, std::make_tuple(s.points.front(), p, -1)};
    }
    for (const IntVec& x : s.points)
        for (const IntVec& y : s.points)
            for (int i = 0; i < s.n; ++i) {
                if (x[i] <= y[i]) continue;
                bool repaired = false;
                for (int j = 0; j < s.n && !repaired; ++j) {
                    if (x[j] >= y[j]) continue;
                    IntVec moved = x;
                    moved[i] -= 1;
                    moved[j] += 1;
                    repaired = s.contains(moved);
                }
                if (!repaired) return {false, std::make_tuple(x, y, i)};
            }
    return {true, std::nullopt};
}

BasisAxiomResult matroid_basis_axiom(const SetFamily& f) {
    if (f.members.empty()) throw std::invalid_argument("matroid_basis_axiom: empty family");
    const std::size_t card = f.members.front().size();
    for (const auto& m : f.members)
        if (m.size() != card)
            return {false, std::make_tuple(f.members.front(), m, -1)};
    for (const auto& a : f.members)
        for (const auto& b : f.members)
            for (int i : a) {
                if (std::binary_search(b.begin(), b.end(), i)) continue;
                bool repaired = false;
                for (int j : b) {
                    if (std::binary_search(a.begin(), a.end(), j)) continue;
                    std::vector<int> moved;
                    for (int e : a)
                        if (e != i) moved.push_back(e);
                    moved.push_back(j);
                    std::sort(moved.begin(), moved.end());
                    if (f.contains(moved)) {
                        repaired = true;
                        break;
                    }
                }
                if (!repaired) return {false, std::make_tuple(a, b, i)};
            }
    return {true, std::nullopt};
}

DecminStructure decmin_structure_m(const PointSet& s) {
    const MConvexResult mc = is_m_convex(s);
    if (!mc.m_convex) throw std::invalid_argument("decmin_structure_m: input is not M-convex");
    const PointSet dm = decmin_set(s);

    DecminStructure out;
    out.z = dm.points.front();
    for (const IntVec& m : dm.points)
        for (int i = 0; i < s.n; ++i) out.z[i] = std::min(out.z[i], m[i]);

    std::vector<std::vector<int>> supports;
    for (const IntVec& m : dm.points) {
        std::vector<int> supp;
        for (int i = 0; i < s.n; ++i) {
            const Int d = m[i] - out.z[i];
            if (d == 1)
                supp.push_back(i);
            else if (d != 0)
                throw std::logic_error("decmin_structure_m: dec-min set escapes z + {0,1}^n");
        }
        supports.push_back(std::move(supp));
    }
    out.family = SetFamily::of(s.n, std::move(supports));
    out.matroidal = matroid_basis_axiom(out.family).holds;
    return out;
}

IntVec cube_lemma_witness(const PointSet& t, const std::vector<int>& u, const RatVec& lambda) {
    if (t.empty()) throw std::invalid_argument("cube_lemma_witness: empty set");
    if (lambda.size() != t.size())
        throw std::invalid_argument("cube_lemma_witness: weight count mismatch");
    for (const IntVec& z : t.points)
        for (const Int& c : z)
            if (c < 0 || c > 1) throw std::invalid_argument("cube_lemma_witness: point outside {0,1}^n");
    Rat total = 0;
    for (const Rat& l : lambda) {
        if (l <= 0) throw std::invalid_argument("cube_lemma_witness: weights must be positive");
        total += l;
    }
    if (total != 1) throw std::invalid_argument("cube_lemma_witness: weights must sum to one");
    for (int i : u) {
        if (i < 0 || i >= t.n) throw std::invalid_argument("cube_lemma_witness: index out of range");
        Rat coord = 0;
        for (std::size_t k = 0; k < t.size(); ++k) coord += lambda[k] * Rat(t.points[k][i]);
        if (coord != make_rat(1, 2))
            throw std::invalid_argument("cube_lemma_witness: combination is not 1/2 on U");
    }

    const std::size_t bound = u.size() / 2;
    for (const IntVec& z : t.points) {
        std::size_t meet = 0;
        for (int i : u)
            if (z[i] == 1) ++meet;
        if (meet <= bound) return z;
    }
    // Unreachable when the preconditions hold: the average support size over
    // U is exactly |U|/2.
    throw std::logic_error("cube_lemma_witness: no witness found");
}

}  // namespace decmin
