#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "toric/json_io.hpp"

namespace {

using toric::CoverSpec;
using toric::Fan;
using toric::FanPtr;
using toric::Int;
using toric::IntVec;
using toric::Json;
using toric::QDivisor;
using toric::Rat;
using toric::RatVec;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << toric::canonical_dump(j);
    } else {
        toric::write_json_file(out_path, j);
    }
}

// Descriptors: p1 | p2 | p3 | pn:k | hirzebruch:n | product:a,b |
// blowup | blowup:2 (one resp. two fixed points of the plane).
FanPtr fan_from_descriptor(const std::string& desc) {
    auto num_after = [&](std::size_t colon) -> long {
        try {
            return std::stol(desc.substr(colon + 1));
        } catch (const std::exception&) {
            throw toric::ValidationError("fan descriptor \"" + desc +
                                         "\": expected a number after ':'");
        }
    };
    if (desc == "p1") return toric::projective_space(1);
    if (desc == "p2") return toric::projective_space(2);
    if (desc == "p3") return toric::projective_space(3);
    if (desc.rfind("pn:", 0) == 0) {
        long n = num_after(2);
        if (n < 1 || n > 8) {
            throw toric::ValidationError("fan descriptor: pn:k needs 1 <= k <= 8");
        }
        return toric::projective_space(static_cast<int>(n));
    }
    if (desc.rfind("hirzebruch:", 0) == 0) {
        long n = num_after(10);
        if (n < 0 || n > 64) {
            throw toric::ValidationError("fan descriptor: hirzebruch:n needs 0 <= n <= 64");
        }
        return toric::hirzebruch(static_cast<int>(n));
    }
    if (desc.rfind("product:", 0) == 0) {
        std::string rest = desc.substr(8);
        std::size_t comma = rest.find(',');
        if (comma == std::string::npos) {
            throw toric::ValidationError("fan descriptor: product:a,b needs two factors");
        }
        FanPtr a = fan_from_descriptor(rest.substr(0, comma));
        FanPtr b = fan_from_descriptor(rest.substr(comma + 1));
        return toric::product(a, b);
    }
    if (desc == "blowup" || desc == "blowup:1" || desc == "blowup:2") {
        FanPtr f = toric::star_subdivision(toric::projective_space(2),
                                           IntVec{Int(1), Int(1)});
        if (desc == "blowup:2") {
            f = toric::star_subdivision(f, IntVec{Int(-1), Int(0)});
        }
        return f;
    }
    throw toric::ValidationError("unknown fan descriptor \"" + desc + "\"");
}

Json h_to_json(const std::vector<long>& h) {
    Json j = Json::array();
    for (long v : h) j.push_back(v);
    return j;
}

Json table_to_json(const toric::CohomologyTable& t) {
    Json j;
    j["char"] = toric::int_to_json(t.characteristic);
    j["h"] = h_to_json(t.h);
    Json weights = Json::array();
    for (const auto& [u, h] : t.per_weight) {
        Json row;
        row["h"] = h_to_json(h);
        row["u"] = toric::int_vec_to_json(u);
        weights.push_back(row);
    }
    j["weights"] = weights;
    return j;
}

Json kv_report_to_json(const toric::KvVanishingReport& r, const QDivisor& h) {
    Json j;
    j["char"] = toric::int_to_json(r.p);
    j["claimed_range_pass"] = r.claimed_pass;
    j["claimed_threshold"] = r.claimed_threshold;
    j["divisor"] = toric::rat_vec_to_json(h.coeffs());
    j["h"] = h_to_json(r.h_canonical);
    j["h_char0"] = h_to_json(r.h_canonical_char0);
    j["h_log"] = h_to_json(r.h_log);
    j["h_log_char0"] = h_to_json(r.h_log_char0);
    j["log_claimed_range_pass"] = r.log_claimed_pass;
    j["characteristic_sensitive"] = r.characteristic_sensitive;
    j["observed_vanishing"] = r.observed_vanishing;
    return j;
}

Json witt_table_json(const Int& p) {
    Json j;
    j["p"] = toric::int_to_json(p);
    std::vector<toric::WittScalar> elems;
    for (Int a0 = 0; a0 < p; ++a0) {
        for (Int a1 = 0; a1 < p; ++a1) elems.emplace_back(p, a0, a1);
    }
    auto index_of = [&](const toric::WittScalar& w) -> std::int64_t {
        return (w.a0() * p + w.a1()).convert_to<std::int64_t>();
    };
    Json jelems = Json::array();
    for (const auto& w : elems) {
        jelems.push_back(Json::array({toric::int_to_json(w.a0()),
                                      toric::int_to_json(w.a1())}));
    }
    j["elements"] = jelems;
    Json add = Json::array(), mul = Json::array(), neg = Json::array();
    for (const auto& x : elems) {
        Json arow = Json::array(), mrow = Json::array();
        for (const auto& y : elems) {
            arow.push_back(index_of(toric::witt_add(x, y)));
            mrow.push_back(index_of(toric::witt_mul(x, y)));
        }
        add.push_back(arow);
        mul.push_back(mrow);
        neg.push_back(index_of(toric::witt_neg(x)));
    }
    j["add"] = add;
    j["mul"] = mul;
    j["neg"] = neg;
    j["one"] = index_of(toric::WittScalar::one(p));
    j["zero"] = index_of(toric::WittScalar::zero(p));
    return j;
}

Json certificate_to_json(const toric::LiftCertificate& c, std::uint64_t seed,
                         const std::vector<QDivisor>& family) {
    Json j;
    j["p"] = toric::int_to_json(c.p);
    j["picard_lift_ok"] = c.picard_lift_ok;
    j["section_surjectivity_ok"] = c.section_surjectivity_ok;
    j["seed"] = seed;
    j["valid"] = c.valid();
    Json gens = Json::array();
    for (const RatVec& g : c.generator_lifts) gens.push_back(toric::rat_vec_to_json(g));
    j["generator_lifts"] = gens;
    Json fam = Json::array();
    for (const QDivisor& d : family) fam.push_back(toric::rat_vec_to_json(d.coeffs()));
    j["family"] = fam;
    Json sizes = Json::array();
    for (const auto& w : c.section_witnesses) sizes.push_back(w.basis.size());
    j["witness_basis_sizes"] = sizes;
    return j;
}

Json int_list_json(const std::vector<Int>& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(toric::int_to_json(x));
    return j;
}

Json cover_analysis_json(const CoverSpec& spec) {
    const bool branch_smooth = toric::smooth_branch_check(spec);
    toric::CoverReport rep = toric::cover_invariants(spec);

    Json j;
    j["N"] = toric::int_to_json(spec.n);
    j["p"] = toric::int_to_json(spec.p);
    j["branch_smooth"] = branch_smooth;
    j["chi"] = toric::int_to_json(rep.chi);
    j["h0"] = toric::int_to_json(rep.h0);
    if (rep.has_genus) j["genus"] = toric::int_to_json(rep.genus);

    if (spec.curve_base) {
        j["summand_degrees"] = int_list_json(rep.summand_degrees);
    } else {
        Json summands = Json::array();
        for (const QDivisor& d : rep.summands) {
            summands.push_back(toric::rat_vec_to_json(d.coeffs()));
        }
        j["summands"] = summands;
    }
    Json hs = Json::array();
    for (const auto& h : rep.summand_h) hs.push_back(int_list_json(h));
    j["summand_h"] = hs;

    Json ram = Json::array();
    for (const auto& rc : toric::ramification_profile(spec)) {
        Json row;
        row["component"] = rc.component;
        row["e"] = toric::int_to_json(rc.e);
        row["multiplicity"] = toric::int_to_json(rc.multiplicity);
        ram.push_back(row);
    }
    j["ramification"] = ram;

    if (branch_smooth) {
        toric::CanonicalCover canonical = toric::canonical_and_general_type(spec);
        j["canonical_pullback"] = spec.curve_base
                                      ? Json()
                                      : toric::rat_vec_to_json(canonical.pullback_coeffs);
        j["canonical_ramification"] =
            toric::rat_vec_to_json(canonical.ramification_coeffs);
        j["derived_extension"] = canonical.derived_extension;
        j["general_type"] = canonical.general_type;
        if (canonical.has_degree) {
            j["canonical_degree"] = toric::rat_to_json(canonical.degree);
        }
    } else {
        j["canonical_pullback"] = Json();
        j["general_type"] = Json();
    }
    return j;
}

Json cover_lift_json(const toric::CoverLiftReport& rep) {
    Json j;
    j["p"] = toric::int_to_json(rep.p);
    j["base_lift_ok"] = rep.base_lift_ok;
    j["canonical_section_lifts"] = rep.canonical_section_lifts;
    j["l_lift"] = toric::rat_vec_to_json(rep.l_lift_coeffs);
    j["ok"] = rep.ok;
    j["section_basis_size"] = rep.section_witness.basis.size();
    Json summands = Json::array();
    for (const QDivisor& d : rep.summand_lifts) {
        summands.push_back(toric::rat_vec_to_json(d.coeffs()));
    }
    j["summand_lifts"] = summands;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torlift: exact arithmetic on toric fans, divisors, "
                 "cohomology, length-two Witt lifts, and cyclic covers"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string out_path;

    // fan
    CLI::App* fan = app.add_subcommand("fan", "build and validate fans");
    fan->require_subcommand(1);

    std::string fan_desc;
    CLI::App* fan_new = fan->add_subcommand("new", "write a canonical fan file");
    fan_new->add_option("descriptor", fan_desc,
                        "p1|p2|p3|pn:k|hirzebruch:n|product:a,b|blowup|blowup:2")
        ->required();
    fan_new->add_option("-o,--out", out_path, "output file (default stdout)");
    fan_new->callback([&]() {
        emit(toric::fan_to_json(*fan_from_descriptor(fan_desc)), out_path);
    });

    std::string fan_file;
    CLI::App* fan_check = fan->add_subcommand("check", "validate a fan file");
    fan_check->add_option("file", fan_file, "fan JSON file")->required();
    fan_check->add_option("-o,--out", out_path, "output file (default stdout)");
    fan_check->callback([&]() {
        FanPtr f = toric::load_fan_file(fan_file);
        Json j;
        j["ok"] = true;
        j["rank"] = f->ambient_rank();
        j["ray_count"] = f->ray_count();
        j["max_cone_count"] = f->max_cone_count();
        j["smooth"] = toric::is_smooth(*f);
        j["paired_walls"] = toric::has_paired_walls(*f);
        try {
            j["complete"] = toric::is_complete(*f);
        } catch (const toric::HypothesisError&) {
            j["complete"] = Json();  // rank above the supported bound
        }
        emit(j, out_path);
    });

    // div
    CLI::App* div = app.add_subcommand("div", "divisor calculus");
    div->require_subcommand(1);
    std::string div_file;

    CLI::App* div_round = div->add_subcommand("round", "rounding calculus of the divisor");
    CLI::App* div_cg = div->add_subcommand("classgroup", "class group of the divisor's fan");
    CLI::App* div_ample = div->add_subcommand("ample", "Cartier, nef, ample flags");
    CLI::App* div_poly = div->add_subcommand("polytope", "section polytope");
    CLI::App* div_h0 = div->add_subcommand("h0", "global sections");
    for (CLI::App* sub : {div_round, div_cg, div_ample, div_poly, div_h0}) {
        sub->add_option("file", div_file, "divisor JSON file")->required();
        sub->add_option("-o,--out", out_path, "output file (default stdout)");
    }
    div_round->callback([&]() {
        QDivisor d = toric::load_divisor_file(div_file);
        Json j;
        j["ceil"] = toric::rat_vec_to_json(toric::round_up(d).coeffs());
        j["floor"] = toric::rat_vec_to_json(toric::round_down(d).coeffs());
        j["frac"] = toric::rat_vec_to_json(toric::frac(d).coeffs());
        j["upper_frac"] = toric::rat_vec_to_json(toric::upper_frac(d).coeffs());
        emit(j, out_path);
    });
    div_cg->callback([&]() {
        QDivisor d = toric::load_divisor_file(div_file);
        toric::ClassGroup cg = toric::class_group(*d.fan());
        toric::DivisorClass cls = toric::divisor_class(cg, d);
        Json j;
        j["free_rank"] = cg.free_rank;
        j["torsion"] = toric::int_vec_to_json(cg.torsion);
        Json rows = Json::array();
        for (const IntVec& row : cg.class_map) rows.push_back(toric::int_vec_to_json(row));
        j["class_map"] = rows;
        j["class_free"] = toric::rat_vec_to_json(cls.free_part);
        j["class_torsion"] = toric::int_vec_to_json(cls.torsion_part);
        emit(j, out_path);
    });
    div_ample->callback([&]() {
        QDivisor d = toric::load_divisor_file(div_file);
        Json j;
        j["ample"] = toric::is_ample(d);
        j["cartier"] = toric::is_cartier(d);
        j["nef"] = toric::is_nef(d);
        emit(j, out_path);
    });
    div_poly->callback([&]() {
        QDivisor d = toric::load_divisor_file(div_file);
        toric::Polytope p = toric::section_polytope(d);
        Json j;
        Json normals = Json::array();
        for (const IntVec& n : p.normals) normals.push_back(toric::int_vec_to_json(n));
        j["normals"] = normals;
        j["rhs"] = toric::rat_vec_to_json(p.rhs);
        Json verts = Json::array();
        for (const RatVec& v : p.vertices) verts.push_back(toric::rat_vec_to_json(v));
        j["vertices"] = verts;
        emit(j, out_path);
    });
    div_h0->callback([&]() {
        QDivisor d = toric::load_divisor_file(div_file);
        std::vector<IntVec> basis = toric::h0_basis(d);
        Json j;
        Json b = Json::array();
        for (const IntVec& u : basis) b.push_back(toric::int_vec_to_json(u));
        j["basis"] = b;
        j["h0"] = basis.size();
        emit(j, out_path);
    });

    // coh
    CLI::App* coh = app.add_subcommand("coh", "sheaf cohomology tables");
    coh->require_subcommand(1);
    std::string coh_file;
    std::int64_t coh_char = 0;
    CLI::App* coh_table = coh->add_subcommand("table", "full cohomology table");
    coh_table->add_option("file", coh_file, "divisor JSON file")->required();
    coh_table->add_option("--char", coh_char, "characteristic: 0 or a prime (default 0)");
    coh_table->add_option("-o,--out", out_path, "output file (default stdout)");
    coh_table->callback([&]() {
        QDivisor d = toric::load_divisor_file(coh_file);
        Int c(coh_char);
        if (c != 0 && !toric::is_prime(c)) {
            throw toric::ValidationError("coh table: --char must be 0 or a prime");
        }
        emit(table_to_json(toric::cohomology_table(d, c)), out_path);
    });

    // vanish
    CLI::App* vanish = app.add_subcommand("vanish", "vanishing-range checks");
    vanish->require_subcommand(1);
    std::string kv_fan_file, kv_h_file;
    std::int64_t kv_p = 0;
    CLI::App* kv = vanish->add_subcommand(
        "kv", "vanishing for an ample fractional divisor; exit 0 iff the "
              "claimed range holds");
    kv->add_option("fan", kv_fan_file, "fan JSON file")->required();
    kv->add_option("divisor", kv_h_file, "ample divisor JSON file")->required();
    kv->add_option("--p", kv_p, "characteristic")->required();
    kv->add_option("-o,--out", out_path, "output file (default stdout)");
    kv->callback([&]() {
        FanPtr f = toric::load_fan_file(kv_fan_file);
        QDivisor h = toric::load_divisor_file(kv_h_file, f);
        toric::KvVanishingReport rep = toric::verify_kv_vanishing(h, Int(kv_p));
        emit(kv_report_to_json(rep, h), out_path);
        exit_code = rep.claimed_pass ? 0 : 1;
    });

    // witt
    CLI::App* witt = app.add_subcommand("witt", "length-two Witt vectors");
    witt->require_subcommand(1);
    std::int64_t witt_p = 0;
    CLI::App* witt_table = witt->add_subcommand("table", "operation tables of W_2(F_p)");
    witt_table->add_option("--p", witt_p, "prime, at most 13")->required();
    witt_table->add_option("-o,--out", out_path, "output file (default stdout)");
    witt_table->callback([&]() {
        Int p(witt_p);
        if (!toric::is_prime(p)) {
            throw toric::ValidationError("witt table: p must be prime");
        }
        if (p > 13) {
            throw toric::ValidationError("witt table: p must be at most 13");
        }
        emit(witt_table_json(p), out_path);
    });

    // lift
    CLI::App* lift = app.add_subcommand("lift", "strong-liftability certificates");
    lift->require_subcommand(1);
    std::string lift_fan_file;
    std::int64_t lift_p = 0;
    std::uint64_t lift_seed = 0;
    int lift_count = 20;
    CLI::App* certify = lift->add_subcommand("certify", "certificate for a smooth fan");
    certify->add_option("fan", lift_fan_file, "fan JSON file")->required();
    certify->add_option("--p", lift_p, "characteristic")->required();
    certify->add_option("--seed", lift_seed, "family generator seed (default 0)");
    certify->add_option("--count", lift_count, "family size (default 20)");
    certify->add_option("-o,--out", out_path, "output file (default stdout)");
    certify->callback([&]() {
        FanPtr f = toric::load_fan_file(lift_fan_file);
        std::vector<QDivisor> family =
            toric::default_effective_family(f, lift_count, lift_seed);
        toric::LiftCertificate cert =
            toric::strong_lifting_certificate(f, Int(lift_p), family);
        emit(certificate_to_json(cert, lift_seed, family), out_path);
    });

    // cover
    CLI::App* cover = app.add_subcommand("cover", "cyclic covers");
    cover->require_subcommand(1);
    std::string cover_file;
    CLI::App* cover_analyze = cover->add_subcommand("analyze", "pushforward invariants");
    CLI::App* cover_lift = cover->add_subcommand("lift", "lifting data for the cover");
    for (CLI::App* sub : {cover_analyze, cover_lift}) {
        sub->add_option("spec", cover_file, "cover spec JSON file")->required();
        sub->add_option("-o,--out", out_path, "output file (default stdout)");
    }
    cover_analyze->callback([&]() {
        CoverSpec spec = toric::load_cover_spec_file(cover_file);
        Json j = cover_analysis_json(spec);
        emit(j, out_path);
        std::cerr << "cover: N=" << spec.n.str()
                  << (spec.curve_base ? " over P1" : " over a fan base")
                  << ", chi(O_Y)=" << j["chi"].get<std::int64_t>()
                  << ", h0(O_Y)=" << j["h0"].get<std::int64_t>();
        if (j.contains("genus")) {
            std::cerr << ", genus=" << j["genus"].get<std::int64_t>();
        }
        std::cerr << ", branch "
                  << (j["branch_smooth"].get<bool>() ? "smooth" : "singular");
        if (j["general_type"].is_boolean()) {
            std::cerr << ", general type: "
                      << (j["general_type"].get<bool>() ? "yes" : "no");
        }
        std::cerr << "\n";
    });
    cover_lift->callback([&]() {
        CoverSpec spec = toric::load_cover_spec_file(cover_file);
        toric::CoverLiftReport rep = toric::lift_cover(spec);
        emit(cover_lift_json(rep), out_path);
        if (!rep.ok) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const toric::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const toric::HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return exit_code;
}
