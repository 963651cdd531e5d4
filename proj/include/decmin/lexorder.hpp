// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "decmin/types.hpp"

namespace decmin {

/// Outcome of comparing two vectors in the decreasing order: sort both
/// descending, then compare lexicographically.
enum class DecOrdering { LessDec, EqualDec, GreaterDec };

/// The descending rearrangement of x, e.g. (2,5,2,1,3) -> (5,3,2,2,1).
IntVec dec_sort(const IntVec& x);

/// Total preorder induced by comparing descending rearrangements; EqualDec
/// exactly when the rearrangements coincide. Throws on length mismatch.
DecOrdering dec_compare(const IntVec& x, const IntVec& y);

/// All decreasingly minimal elements of S. Single scan keeping the current
/// best descending rearrangement and its attainers.
PointSet decmin_set(const PointSet& s);

}  // namespace decmin
