// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "decmin/generators.hpp"
#include "decmin/io.hpp"

using namespace decmin;

TEST_SUITE_BEGIN("core");

TEST_CASE("parse_instance canonicalizes the paper sets") {
    const PointSet s = parse_instance(R"({"n":4,"points":[[2,1,0,0],[0,0,1,2]]})");
    CHECK(s.n == 4);
    CHECK(s.size() == 2);
    CHECK(s.points[0] == IntVec{0, 0, 1, 2});
    CHECK(s.points[1] == IntVec{2, 1, 0, 0});

    const PointSet dedup = parse_instance(R"({"n":1,"points":[[0],[0]]})");
    CHECK(dedup.size() == 1);
    CHECK(dedup.points[0] == IntVec{0});

    const PointSet two = parse_instance(R"({"n":2,"points":[[1,2],[2,1]]})");
    CHECK(two.size() == 2);
}

TEST_CASE("parse_instance rejects malformed documents") {
    CHECK_THROWS_AS(parse_instance("{"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"points":[[1,2],[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"points":[[1,2.5]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":2,"points":[]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":3,"points":[[1,2]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"points":[[1,2]]})"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"n":0,"points":[[]]})"), ParseError);
}

TEST_CASE("instance round-trip and idempotent canonicalization") {
    const char* docs[] = {
        R"({"n":4,"points":[[2,1,0,0],[0,0,1,2],[2,1,0,0]]})",
        R"({"n":2,"points":[[5,-3],[0,0],[5,-3],[1,1]]})",
        R"({"n":1,"points":[[7]]})",
    };
    for (const char* doc : docs) {
        const PointSet once = parse_instance(doc);
        const PointSet twice = parse_instance(emit_instance(once));
        CHECK(once == twice);
        CHECK(emit_instance(once) == emit_instance(twice));
    }
}

TEST_CASE("randomized instances round-trip byte-exactly") {
    SplitMix64 rng(20250801);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 1 + static_cast<int>(rng.below(5));
        const int count = 1 + static_cast<int>(rng.below(12));
        std::vector<IntVec> pts;
        for (int k = 0; k < count; ++k) {
            IntVec p(n);
            for (int i = 0; i < n; ++i) p[i] = Int(static_cast<long>(rng.below(9))) - 4;
            pts.push_back(std::move(p));
        }
        const PointSet s = PointSet::of(n, std::move(pts));
        const std::string doc = emit_instance(s);
        CHECK(parse_instance(doc) == s);
        CHECK(emit_instance(parse_instance(doc)) == doc);
    }
}

TEST_CASE("certificate JSON format") {
    Certificate cert;
    cert.method = "fenchel";
    cert.base = 10;
    cert.price = {Rat(90), Rat(90), Rat(9), Rat(9)};
    cert.beta = Rat(279);
    cert.box = Box({1, 1, 0, 0}, {2, 2, 1, 1});
    cert.n0 = {};
    cert.n1 = {0, 1, 2, 3};
    cert.face_members = PointSet::of(
        4, {{2, 1, 1, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {1, 2, 0, 1}});

    const std::string doc = emit_certificate(cert);
    CHECK(doc.find("\"price\":[\"90/1\",\"90/1\",\"9/1\",\"9/1\"]") != std::string::npos);
    CHECK(doc.find("\"n0\":[]") != std::string::npos);
    CHECK(doc.find("\"n1\":[1,2,3,4]") != std::string::npos);
    CHECK(doc.back() == '\n');

    const Certificate back = parse_certificate(doc);
    CHECK(emit_certificate(back) == doc);
    CHECK(back.price == cert.price);
    CHECK(back.box == cert.box);
    CHECK(back.face_members == cert.face_members);

    Rat beta198(198);
    CHECK(rat_to_string(beta198) == "198/1");
}

TEST_CASE("certificate invariants are enforced on emit") {
    Certificate cert;
    cert.method = "face";
    cert.base = 10;
    cert.price = {Rat(1), Rat(1)};
    cert.beta = Rat(2);
    cert.box = Box({0, 0}, {1, 1});
    cert.n0 = {0};
    cert.n1 = {1};
    cert.face_members = PointSet::of(2, {{1, 1}});
    CHECK_NOTHROW(emit_certificate(cert));

    Certificate bad = cert;
    bad.beta = Rat(3);  // face member off the level set
    CHECK_THROWS_AS(emit_certificate(bad), ParseError);
    bad = cert;
    bad.n1 = {};  // not a partition
    CHECK_THROWS_AS(emit_certificate(bad), ParseError);
}

TEST_CASE("exact rational algebra identities") {
    SplitMix64 rng(42);
    auto draw = [&]() {
        const long num = static_cast<long>(rng.below(2001)) - 1000;
        const long den = 1 + static_cast<long>(rng.below(60));
        return make_rat(num, den);
    };
    for (int iter = 0; iter < 10000; ++iter) {
        const Rat a = draw(), b = draw(), c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        const Rat sum = a + b;
        Int g;
        mpz_gcd(g.get_mpz_t(), sum.get_num().get_mpz_t(), sum.get_den().get_mpz_t());
        CHECK(g == 1);
        CHECK(sum.get_den() > 0);
    }
}

TEST_CASE("rational string round-trip") {
    CHECK(rat_to_string(make_rat(-81, 1)) == "-81/1");
    CHECK(rat_to_string(make_rat(2, -4)) == "-1/2");
    CHECK(rat_from_string("90/1") == Rat(90));
    CHECK(rat_from_string("-9/3") == make_rat(-3, 1));
    CHECK_THROWS(rat_from_string("1/0"));
    CHECK_THROWS(rat_from_string("abc"));
}

TEST_SUITE_END();
