// Part of the decmin project, under the Apache License v2.0.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface: dec-min computation, integral convexity checks,
// certificate construction/verification, instance generation, and the three
// built-in regression examples.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "decmin/certificate.hpp"
#include "decmin/generators.hpp"
#include "decmin/geometry.hpp"
#include "decmin/io.hpp"
#include "decmin/lexorder.hpp"
#include "decmin/structures.hpp"

#include <json.hpp>

using namespace decmin;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Limits limits_from_env() {
    Limits limits;
    if (const char* cap = std::getenv("DECMIN_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end == cap || *end != '\0' || v < 1)
            throw UsageError("DECMIN_MAX_N must be a positive integer");
        limits.max_n = static_cast<int>(v);
    }
    return limits;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << text;
}

PointSet load_instance(const std::string& path) { return parse_instance(slurp(path)); }

IntVec parse_int_list(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw UsageError("empty entry in integer list '" + text + "'");
        out.emplace_back(item);
    }
    if (out.empty()) throw UsageError("empty integer list");
    return out;
}

std::vector<std::vector<Int>> parse_int_matrix(const std::string& text) {
    std::vector<std::vector<Int>> out;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        IntVec r = parse_int_list(row);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

void print_points(const PointSet& s) {
    for (const IntVec& p : s.points) std::cout << vec_to_string(p) << "\n";
}

std::string indices_one_based(const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i] + 1);
    }
    return s + "}";
}

// --- subcommand bodies ------------------------------------------------------

int run_decmin(const std::string& file) {
    const PointSet s = load_instance(file);
    const PointSet dm = decmin_set(s);
    std::cout << "points: " << s.size() << "\n";
    std::cout << "dec-min count: " << dm.size() << "\n";
    print_points(dm);
    std::cout << "sorted descending: " << vec_to_string(dec_sort(dm.points.front())) << "\n";
    std::cout << "linf diameter: " << linf_diameter(dm).get_str() << "\n";
    return 0;
}

int run_check_ic(const std::string& file, bool exact, const Limits& limits) {
    const PointSet s = load_instance(file);
    const PrefilterResult pre = midpoint_prefilter(s);
    if (pre.pass) {
        std::cout << "midpoint prefilter: pass\n";
    } else {
        std::cout << "midpoint prefilter: fail\n";
        std::cout << "witness pair: " << vec_to_string(pre.witness->first) << " "
                  << vec_to_string(pre.witness->second) << "\n";
    }
    if (exact || s.n <= 4) {
        const ICVerdict verdict = is_integrally_convex(s, limits);
        std::cout << "integrally convex: " << (verdict.integrally_convex ? "yes" : "no") << "\n";
        if (!verdict.integrally_convex) {
            std::cout << "witness point: " << vec_to_string(verdict.witness->point) << "\n";
            std::cout << "witness cell: [" << vec_to_string(verdict.witness->cell.lo) << ", "
                      << vec_to_string(verdict.witness->cell.hi) << "]\n";
        }
    } else {
        std::cout << "exact oracle: skipped (n > 4; pass --exact to force)\n";
    }
    return 0;
}

int run_certify(const std::string& file, long base, const std::string& method,
                const std::string& out_path) {
    const PointSet s = load_instance(file);
    const PowerPotential pot(base > 0 ? Int(base) : Int(std::max(s.n, 2)), s.n);
    Certificate cert;
    try {
        cert = (method == "face") ? certify_face(s, pot) : certify_fenchel(s, pot);
    } catch (const DiameterError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const InfeasibleError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        std::cerr << "farkas: " << vec_to_string(e.farkas) << "\n";
        return 1;
    }
    const std::string doc = emit_certificate(cert);
    if (out_path.empty())
        std::cout << doc;
    else
        spill(out_path, doc);
    return 0;
}

int run_verify(const std::string& file, const std::string& cert_path) {
    const PointSet s = load_instance(file);
    const Certificate cert = parse_certificate(slurp(cert_path));
    const VerifyReport report = verify_certificate(s, cert);
    auto line = [](const char* name, bool ok) {
        std::cout << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    };
    line("face-is-level-set", report.face_is_level_set);
    line("beta-is-minimum", report.beta_is_minimum);
    line("structural-identity", report.structural_identity);
    line("box-unit-width", report.box_unit_width);
    if (report.fenchel_identity) line("fenchel-identity", *report.fenchel_identity);
    line("overall", report.all_pass());
    return report.all_pass() ? 0 : 1;
}

struct GenOptions {
    std::string kind;
    int n = 0;
    std::string density = "1/2";
    std::uint64_t seed = 0;
    long radius = 2;
    long count = 8;
    std::string f, f2, lo, hi, gamma;
};

SubmodularTable table_from_csv(const std::string& csv, const char* what) {
    if (csv.empty()) throw UsageError(std::string("missing submodular table ") + what);
    const IntVec vals = parse_int_list(csv);
    int n = 0;
    while ((std::size_t{1} << n) < vals.size()) ++n;
    if ((std::size_t{1} << n) != vals.size())
        throw UsageError("submodular table length must be a power of two");
    return SubmodularTable::of(n, vals);
}

int run_gen(GenOptions opt, const std::string& spec_path, const std::string& out_path) {
    if (!spec_path.empty()) {
        const nlohmann::json spec = nlohmann::json::parse(slurp(spec_path));
        auto fetch_str = [&spec](const char* key, std::string& slot) {
            if (spec.contains(key))
                slot = spec[key].is_string() ? spec[key].get<std::string>() : spec[key].dump();
        };
        auto fetch_csv = [&spec](const char* key, std::string& slot, char sep) {
            if (!spec.contains(key)) return;
            std::string s;
            for (const auto& item : spec[key]) {
                if (!s.empty()) s += sep;
                if (item.is_array()) {
                    std::string row;
                    for (const auto& v : item) {
                        if (!row.empty()) row += ',';
                        row += v.dump();
                    }
                    s += row;
                } else {
                    s += item.dump();
                }
            }
            slot = s;
        };
        fetch_str("kind", opt.kind);
        fetch_str("density", opt.density);
        if (spec.contains("n")) opt.n = spec["n"].get<int>();
        if (spec.contains("seed")) opt.seed = spec["seed"].get<std::uint64_t>();
        if (spec.contains("radius")) opt.radius = spec["radius"].get<long>();
        if (spec.contains("count")) opt.count = spec["count"].get<long>();
        fetch_csv("f", opt.f, ',');
        fetch_csv("f2", opt.f2, ',');
        fetch_csv("lo", opt.lo, ',');
        fetch_csv("hi", opt.hi, ',');
        fetch_csv("gamma", opt.gamma, ';');
    }

    PointSet out;
    if (opt.kind == "cube") {
        out = gen_cube_subset(opt.n, rat_from_string(opt.density), opt.seed);
    } else if (opt.kind == "basepoly") {
        out = gen_base_polyhedron(table_from_csv(opt.f, "--f"));
    } else if (opt.kind == "m2") {
        out = gen_m2_intersection(table_from_csv(opt.f, "--f"), table_from_csv(opt.f2, "--f2"))
                  .intersection;
    } else if (opt.kind == "diffbound") {
        if (opt.lo.empty() || opt.hi.empty() || opt.gamma.empty())
            throw UsageError("diffbound needs --lo, --hi and --gamma");
        const IntVec lo = parse_int_list(opt.lo);
        out = gen_difference_bounded(static_cast<int>(lo.size()), lo, parse_int_list(opt.hi),
                                     parse_int_matrix(opt.gamma));
    } else if (opt.kind == "random") {
        out = gen_random_candidate(opt.n, opt.radius, opt.count, opt.seed);
    } else {
        throw UsageError("unknown generator kind: " + opt.kind);
    }

    const std::string doc = emit_instance(out);
    if (out_path.empty())
        std::cout << doc;
    else
        spill(out_path, doc);
    return 0;
}

// --- demo: the three built-in regression examples ---------------------------

struct DemoCheck {
    bool ok = true;

    template <typename A, typename B>
    void eq(const char* label, const A& got, const B& expect) {
        if (got == expect) return;
        ok = false;
        std::cout << "MISMATCH at " << label << "\n";
    }
    void require(const char* label, bool cond) {
        if (cond) return;
        ok = false;
        std::cout << "MISMATCH at " << label << "\n";
    }
};

int demo_14() {
    DemoCheck check;
    const PointSet s = PointSet::of(4, {{2, 1, 0, 0}, {0, 0, 1, 2}});
    std::cout << "S = {(2,1,0,0), (0,0,1,2)}\n";

    const PointSet dm = decmin_set(s);
    check.eq("decmin = S", dm, s);
    std::cout << "dec-min elements: both\n";
    const Int diameter = linf_diameter(dm);
    std::cout << "linf diameter: " << diameter.get_str() << "\n";
    check.eq("diameter", diameter, Int(2));

    check.require("hole-free", is_hole_free(s).hole_free);
    std::cout << "hole-free: yes (the hull is an integral segment)\n";

    const ICVerdict verdict = is_integrally_convex(s);
    check.require("not integrally convex", !verdict.integrally_convex);
    std::cout << "integrally convex: no\n";
    std::cout << "witness point: " << vec_to_string(verdict.witness->point) << "\n";

    bool refused = false;
    try {
        certify_face(s, PowerPotential(10, 4));
    } catch (const DiameterError&) {
        refused = true;
    }
    check.require("certificate pipeline refuses", refused);
    std::cout << "certificate pipeline: refused (diameter > 1)\n";
    return check.ok ? 0 : 1;
}

int demo_32() {
    DemoCheck check;
    const PointSet s = PointSet::of(
        4, {{2, 1, 1, 0}, {2, 1, 0, 1}, {1, 2, 1, 0}, {1, 2, 0, 1}, {2, 2, 0, 0}});
    const PowerPotential pot(10, 4);
    std::cout << "S = the five point example, phi(k) = 10^k\n";

    const Rat low = phi_rap_value(pot, {2, 1, 1, 0});
    const Rat high = phi_rap_value(pot, {2, 2, 0, 0});
    std::cout << "Phi(2,1,1,0) = " << rat_to_string(low) << "\n";
    std::cout << "Phi(2,2,0,0) = " << rat_to_string(high) << "\n";
    check.eq("Phi low", low, Rat(121));
    check.eq("Phi high", high, Rat(202));

    const PointSet dm = decmin_set(s);
    check.eq("four dec-min points", dm.size(), std::size_t{4});
    check.eq("potential route agrees", decmin_via_potential(s, pot), dm);
    std::cout << "dec-min count: " << dm.size() << "\n";

    check.require("integrally convex", is_integrally_convex(s).integrally_convex);
    check.require("M-convex", is_m_convex(s).m_convex);
    std::cout << "integrally convex: yes (M-convex)\n";

    const Certificate fenchel = certify_fenchel(s, pot);
    std::cout << "fenchel price: " << vec_to_string(fenchel.price) << "\n";
    check.eq("unique price", fenchel.price, RatVec{Rat(90), Rat(90), Rat(9), Rat(9)});
    check.eq("argmin box", fenchel.box, Box({1, 1, 0, 0}, {2, 2, 1, 1}));
    std::cout << "argmin box: [" << vec_to_string(fenchel.box.lo) << ", "
              << vec_to_string(fenchel.box.hi) << "]\n";
    check.eq("face members", fenchel.face_members, dm);
    check.require("fenchel verifies", verify_certificate(s, fenchel).all_pass());

    const Certificate face = certify_face(s, pot);
    check.eq("face route price", face.price, fenchel.price);
    check.require("face verifies", verify_certificate(s, face).all_pass());

    const DualityGap gap = duality_gap(s, pot, fenchel.price);
    std::cout << "duality gap at price: " << rat_to_string(gap.gap) << "\n";
    check.eq("gap", gap.gap, Rat(0));

    const DecminStructure st = decmin_structure_m(s);
    std::cout << "z = " << vec_to_string(st.z) << "\n";
    std::cout << "basis family:";
    for (const auto& member : st.family.members) std::cout << " " << indices_one_based(member);
    std::cout << "\n";
    check.eq("z", st.z, IntVec{1, 1, 0, 0});
    check.eq("family", st.family, SetFamily::of(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    check.require("matroidal", st.matroidal);
    return check.ok ? 0 : 1;
}

int demo_49() {
    DemoCheck check;
    const std::vector<IntVec> listed = {{2, 0, 0, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 2}};
    const PointSet s = PointSet::of(4, listed);
    const PowerPotential pot(10, 4);
    std::cout << "S = the parallelogram example, phi(k) = 10^k\n";

    const RatVec phis_expected = {Rat(103), Rat(31), Rat(31), Rat(121)};
    for (std::size_t k = 0; k < listed.size(); ++k) {
        const Rat v = phi_rap_value(pot, listed[k]);
        std::cout << "Phi" << vec_to_string(listed[k]) << " = " << rat_to_string(v) << "\n";
        check.eq("Phi value", v, phis_expected[k]);
    }

    const PointSet dm = decmin_set(s);
    check.eq("dec-min", dm, PointSet::of(4, {{1, 1, 0, 1}, {1, 0, 1, 1}}));

    const FarkasSystemBundle bundle = farkas_system(s, pot, {1, 1, 0, 1});
    std::cout << "inner box = [" << vec_to_string(bundle.inner_box.lo) << ", "
              << vec_to_string(bundle.inner_box.hi) << "]\n";
    std::cout << "N0 = " << indices_one_based(bundle.n0) << ", N1 = "
              << indices_one_based(bundle.n1) << "\n";
    std::cout << "outer box = [" << vec_to_string(bundle.outer_box.lo) << ", "
              << vec_to_string(bundle.outer_box.hi) << "]\n";
    check.eq("inner box", bundle.inner_box, Box({1, 0, 0, 1}, {1, 1, 1, 1}));
    check.eq("N0", bundle.n0, std::vector<int>{0, 3});
    check.eq("N1", bundle.n1, std::vector<int>{1, 2});
    check.eq("outer box", bundle.outer_box, Box({0, 0, 0, 0}, {2, 1, 1, 2}));

    std::cout << "p = " << vec_to_string(bundle.price) << "\n";
    check.eq("base price", bundle.price, RatVec{Rat(90), Rat(9), Rat(9), Rat(90)});

    const RatVec shifted_expected = {Rat(-77), Rat(-158), Rat(-158), Rat(-77)};
    for (std::size_t k = 0; k < listed.size(); ++k) {
        const Rat v = phi_rap_value(pot, listed[k]) - dot(bundle.price, listed[k]);
        std::cout << "Phi[-p]" << vec_to_string(listed[k]) << " = " << rat_to_string(v) << "\n";
        check.eq("shifted Phi value", v, shifted_expected[k]);
    }

    std::cout << "C rows: " << vec_to_string(bundle.sys.rows[0]) << " "
              << vec_to_string(bundle.sys.rows[1]) << "\n";
    std::cout << "d = " << vec_to_string(bundle.sys.rhs) << "\n";
    check.eq("C row 1", bundle.sys.rows[0], RatVec{Rat(1), Rat(-1)});
    check.eq("C row 2", bundle.sys.rows[1], RatVec{Rat(-1), Rat(1)});
    check.eq("d", bundle.sys.rhs, RatVec{Rat(9), Rat(-9)});

    const FeasibilityOutcome lp = solve_feasibility(bundle.sys);
    check.require("system solvable", lp.feasible);
    std::cout << "q = " << vec_to_string(lp.solution) << "\n";
    check.eq("q1 - q2", Rat(lp.solution[0] - lp.solution[1]), Rat(9));

    const Certificate cert = certify_face(s, pot);
    std::cout << "p* = " << vec_to_string(cert.price) << "\n";
    for (const IntVec& x : s.points)
        check.eq("common inner product", dot(cert.price, x), cert.beta);
    std::cout << "common inner product: " << rat_to_string(cert.beta) << "\n";
    check.eq("face is all of S", cert.face_members, s);
    check.require("verifies", verify_certificate(s, cert).all_pass());
    std::cout << "verify: pass (decmin = F cap inner box)\n";
    return check.ok ? 0 : 1;
}

int run_demo(const std::string& which) {
    if (which == "1.4") return demo_14();
    if (which == "3.2") return demo_32();
    if (which == "4.9") return demo_49();
    throw UsageError("unknown example: " + which + " (expected 1.4, 3.2 or 4.9)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dec-min computation and certificates on integer point sets"};
    app.require_subcommand(1);

    std::string file, cert_path, out_path, method = "face", example, spec_path;
    bool exact = false;
    long base = 0;
    GenOptions gen;

    auto* cmd_decmin = app.add_subcommand("decmin", "print the dec-min elements of an instance");
    cmd_decmin->add_option("file", file)->required();

    auto* cmd_check = app.add_subcommand("check-ic", "integral convexity check with witnesses");
    cmd_check->add_option("file", file)->required();
    cmd_check->add_flag("--exact", exact, "force the exponential cell oracle above n = 4");

    auto* cmd_certify = app.add_subcommand("certify", "construct a structural certificate");
    cmd_certify->add_option("file", file)->required();
    cmd_certify->add_option("--base", base, "potential base (default max(n, 2))");
    cmd_certify->add_option("--method", method)->check(CLI::IsMember({"face", "fenchel"}));
    cmd_certify->add_option("-o,--output", out_path, "certificate file (default stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "verify a certificate against an instance");
    cmd_verify->add_option("file", file)->required();
    cmd_verify->add_option("--cert", cert_path)->required();

    auto* cmd_gen = app.add_subcommand("gen", "generate an instance");
    cmd_gen->add_option("--kind", gen.kind, "cube|basepoly|m2|diffbound|random");
    cmd_gen->add_option("--n", gen.n);
    cmd_gen->add_option("--density", gen.density, "rational in (0,1], e.g. 1/2");
    cmd_gen->add_option("--seed", gen.seed);
    cmd_gen->add_option("--radius", gen.radius);
    cmd_gen->add_option("--count", gen.count);
    cmd_gen->add_option("--f", gen.f, "submodular table by bitmask, e.g. 0,2,2,3");
    cmd_gen->add_option("--f2", gen.f2);
    cmd_gen->add_option("--lo", gen.lo);
    cmd_gen->add_option("--hi", gen.hi);
    cmd_gen->add_option("--gamma", gen.gamma, "rows separated by ';', e.g. 0,1;1,0");
    cmd_gen->add_option("--spec", spec_path, "JSON document with the same parameters");
    cmd_gen->add_option("-o,--output", out_path, "instance file (default stdout)");

    auto* cmd_demo = app.add_subcommand("demo", "reproduce a built-in example and assert it");
    cmd_demo->add_option("--example", example)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const Limits limits = limits_from_env();
        if (cmd_decmin->parsed()) return run_decmin(file);
        if (cmd_check->parsed()) return run_check_ic(file, exact, limits);
        if (cmd_certify->parsed()) return run_certify(file, base, method, out_path);
        if (cmd_verify->parsed()) return run_verify(file, cert_path);
        if (cmd_gen->parsed()) return run_gen(gen, spec_path, out_path);
        if (cmd_demo->parsed()) return run_demo(example);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
