// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include "decmin/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>

namespace decmin {

using nlohmann::json;

namespace {

// JSON numbers ride on int64 in the parser; coordinates beyond that range
// are rejected rather than silently truncated.
Int int_from_json(const json& v, const char* what) {
    if (!v.is_number_integer())
        throw ParseError(std::string(what) + ": expected an integer");
    return Int(static_cast<long>(v.get<std::int64_t>()));
}

std::int64_t int_to_json(const Int& v, const char* what) {
    if (!v.fits_slong_p())
        throw ParseError(std::string(what) + ": coordinate out of serializable range");
    return v.get_si();
}

json vec_to_json(const IntVec& v, const char* what) {
    json arr = json::array();
    for (const Int& c : v) arr.push_back(int_to_json(c, what));
    return arr;
}

IntVec vec_from_json(const json& arr, int n, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array");
    if (n >= 0 && static_cast<int>(arr.size()) != n)
        throw ParseError(std::string(what) + ": row length does not match n");
    IntVec out;
    out.reserve(arr.size());
    for (const json& c : arr) out.push_back(int_from_json(c, what));
    return out;
}

json points_to_json(const PointSet& s, const char* what) {
    json arr = json::array();
    for (const IntVec& p : s.points) arr.push_back(vec_to_json(p, what));
    return arr;
}

PointSet points_from_json(const json& arr, int n, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an array of points");
    std::vector<IntVec> pts;
    for (const json& row : arr) pts.push_back(vec_from_json(row, n, what));
    return PointSet::of(n, std::move(pts));
}

// 0-based in memory, 1-based on the wire.
json indices_to_json(const std::vector<int>& idx) {
    json arr = json::array();
    for (int i : idx) arr.push_back(i + 1);
    return arr;
}

std::vector<int> indices_from_json(const json& arr, int n, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": expected an index array");
    std::vector<int> out;
    for (const json& v : arr) {
        if (!v.is_number_integer()) throw ParseError(std::string(what) + ": non-integer index");
        long i = v.get<long>();
        if (i < 1 || i > n) throw ParseError(std::string(what) + ": index out of range");
        out.push_back(static_cast<int>(i - 1));
    }
    if (!std::is_sorted(out.begin(), out.end()) ||
        std::adjacent_find(out.begin(), out.end()) != out.end())
        throw ParseError(std::string(what) + ": indices must be strictly increasing");
    return out;
}

void check_certificate(const Certificate& c) {
    const int n = static_cast<int>(c.price.size());
    if (c.method != "face" && c.method != "fenchel")
        throw ParseError("certificate: method must be face or fenchel");
    if (c.base < 2) throw ParseError("certificate: base must be >= 2");
    if (c.box.dim() != n || c.face_members.n != n)
        throw ParseError("certificate: inconsistent dimensions");
    if (!c.box.unit_width()) throw ParseError("certificate: box is not unit-width");
    std::vector<bool> seen(n, false);
    for (const auto* idx : {&c.n0, &c.n1})
        for (int i : *idx) {
            if (i < 0 || i >= n || seen[i]) throw ParseError("certificate: n0/n1 is not a partition");
            seen[i] = true;
        }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw ParseError("certificate: n0/n1 is not a partition");
    for (const IntVec& x : c.face_members.points)
        if (dot(c.price, x) != c.beta)
            throw ParseError("certificate: face member off the beta level set");
}

}  // namespace

PointSet parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("points"))
        throw ParseError("instance: expected object with keys n and points");
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 1)
        throw ParseError("instance: n must be a positive integer");
    const int n = static_cast<int>(doc["n"].get<long>());
    PointSet s = points_from_json(doc["points"], n, "instance point");
    if (s.empty()) throw ParseError("instance: empty point list");
    return s;
}

std::string emit_instance(const PointSet& s) {
    json doc;
    doc["n"] = s.n;
    doc["points"] = points_to_json(s, "instance point");
    return doc.dump() + "\n";
}

std::string emit_certificate(const Certificate& cert) {
    check_certificate(cert);
    json doc;
    doc["method"] = cert.method;
    doc["base"] = int_to_json(cert.base, "certificate base");
    json price = json::array();
    for (const Rat& p : cert.price) price.push_back(rat_to_string(p));
    doc["price"] = price;
    doc["beta"] = rat_to_string(cert.beta);
    doc["box"] = {{"lo", vec_to_json(cert.box.lo, "box corner")},
                  {"hi", vec_to_json(cert.box.hi, "box corner")}};
    doc["n0"] = indices_to_json(cert.n0);
    doc["n1"] = indices_to_json(cert.n1);
    doc["face_members"] = points_to_json(cert.face_members, "face member");
    return doc.dump() + "\n";
}

Certificate parse_certificate(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: invalid JSON: ") + e.what());
    }
    for (const char* key : {"method", "base", "price", "beta", "box", "n0", "n1", "face_members"})
        if (!doc.is_object() || !doc.contains(key))
            throw ParseError(std::string("certificate: missing key ") + key);

    Certificate c;
    if (!doc["method"].is_string()) throw ParseError("certificate: method must be a string");
    c.method = doc["method"].get<std::string>();
    c.base = int_from_json(doc["base"], "certificate base");
    if (!doc["price"].is_array() || doc["price"].empty())
        throw ParseError("certificate: price must be a nonempty array");
    for (const json& p : doc["price"]) {
        if (!p.is_string()) throw ParseError("certificate: price entries must be strings");
        c.price.push_back(rat_from_string(p.get<std::string>()));
    }
    const int n = static_cast<int>(c.price.size());
    if (!doc["beta"].is_string()) throw ParseError("certificate: beta must be a string");
    c.beta = rat_from_string(doc["beta"].get<std::string>());
    const json& box = doc["box"];
    if (!box.is_object() || !box.contains("lo") || !box.contains("hi"))
        throw ParseError("certificate: box must carry lo and hi");
    c.box = Box(vec_from_json(box["lo"], n, "box corner"), vec_from_json(box["hi"], n, "box corner"));
    c.n0 = indices_from_json(doc["n0"], n, "n0");
    c.n1 = indices_from_json(doc["n1"], n, "n1");
    c.face_members = points_from_json(doc["face_members"], n, "face member");
    check_certificate(c);
    return c;
}

}  // namespace decmin
