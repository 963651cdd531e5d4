// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "decmin/types.hpp"

namespace decmin {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse an instance document {"n": ..., "points": [[...], ...]} into a
/// canonicalized PointSet. Throws ParseError on malformed input.
PointSet parse_instance(const std::string& text);

/// Deterministic instance serialization; parse_instance(emit_instance(s)) == s.
std::string emit_instance(const PointSet& s);

/// Deterministic certificate serialization: keys sorted, rationals rendered
/// "num/den", indices 1-based, LF line endings.
std::string emit_certificate(const Certificate& cert);

Certificate parse_certificate(const std::string& text);

}  // namespace decmin
