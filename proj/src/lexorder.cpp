// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/lexorder.hpp"

#include <algorithm>

namespace decmin {

IntVec dec_sort(const IntVec& x) {
    IntVec out = x;
    std::sort(out.begin(), out.end(), [](const Int& a, const Int& b) { return a > b; });
    return out;
}

DecOrdering dec_compare(const IntVec& x, const IntVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dec_compare: length mismatch");
    const IntVec xs = dec_sort(x);
    const IntVec ys = dec_sort(y);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < ys[i]) return DecOrdering::LessDec;
        if (xs[i] > ys[i]) return DecOrdering::GreaterDec;
    }
    return DecOrdering::EqualDec;
}

PointSet decmin_set(const PointSet& s) {
    if (s.empty()) throw std::invalid_argument("decmin_set: empty set");
    IntVec best = dec_sort(s.points.front());
    std::vector<IntVec> attainers{s.points.front()};
    for (std::size_t k = 1; k < s.points.size(); ++k) {
        IntVec cur = dec_sort(s.points[k]);
        if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end())) {
            best = std::move(cur);
            attainers.assign(1, s.points[k]);
        } else if (cur == best) {
            attainers.push_back(s.points[k]);
        }
    }
    return PointSet::of(s.n, std::move(attainers));
}

}  // namespace decmin
