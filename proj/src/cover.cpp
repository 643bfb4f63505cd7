#include "toric/cover.hpp"

#include <algorithm>

namespace toric {

namespace {

void require_toric_base(const CoverSpec& s, const char* op) {
    if (s.curve_base || !s.base_fan) {
        throw HypothesisError(std::string(op) + ": base is not a toric fan");
    }
}

// Euler characteristic of a cohomology vector.
Int alternating_sum(const std::vector<Int>& h) {
    Int chi = 0;
    int sign = 1;
    for (const Int& v : h) {
        chi += sign * v;
        sign = -sign;
    }
    return chi;
}

std::vector<Int> curve_line_bundle_h(const Int& e) {
    // On P^1: h^0 = max(0, e+1), h^1 = max(0, -e-1).
    Int h0v = e + 1 > 0 ? e + 1 : Int(0);
    Int h1v = -e - 1 > 0 ? -e - 1 : Int(0);
    return {h0v, h1v};
}

}  // namespace

CoverSpec CoverSpec::make(FanPtr base, RatVec l, Int n, RatVec d, Int p) {
    CoverSpec s;
    s.base_fan = std::move(base);
    s.curve_base = false;
    s.l_coeffs = std::move(l);
    s.n = std::move(n);
    s.d_coeffs = std::move(d);
    s.p = std::move(p);
    validate_cover_spec(s);
    return s;
}

CoverSpec CoverSpec::make_curve(Int l_degree, Int n, std::vector<Int> d_mults,
                                Int p) {
    CoverSpec s;
    s.curve_base = true;
    s.l_coeffs = {Rat(l_degree)};
    s.n = std::move(n);
    s.d_coeffs.reserve(d_mults.size());
    for (const Int& m : d_mults) s.d_coeffs.emplace_back(m);
    s.p = std::move(p);
    validate_cover_spec(s);
    return s;
}

void validate_cover_spec(const CoverSpec& s) {
    if (!is_prime(s.p)) {
        throw ValidationError("cover: p = " + s.p.str() + " is not prime");
    }
    if (s.n < 1) {
        throw ValidationError("cover: N must be a positive integer");
    }
    if (gcd(s.n, s.p) != 1) {
        throw HypothesisError("cover: N not prime to p");
    }
    for (const Rat& c : s.d_coeffs) {
        if (denominator(c) != 1) {
            throw ValidationError("cover: D must be integral");
        }
        if (c < 0) {
            throw ValidationError("cover: D must be effective");
        }
    }
    for (const Rat& c : s.l_coeffs) {
        if (denominator(c) != 1) {
            throw ValidationError("cover: L must be integral");
        }
    }

    if (s.curve_base) {
        if (s.l_coeffs.size() != 1) {
            throw ValidationError("cover: curve base takes a single degree for L");
        }
        Rat total = 0;
        for (const Rat& c : s.d_coeffs) total += c;
        if (Rat(s.n) * s.l_coeffs[0] != total) {
            throw ValidationError("cover: class mismatch, N deg L != deg D");
        }
        return;
    }

    if (!s.base_fan) {
        throw ValidationError("cover: missing base fan");
    }
    const std::size_t rays = s.base_fan->ray_count();
    if (s.l_coeffs.size() != rays || s.d_coeffs.size() != rays) {
        throw ValidationError("cover: coefficient count does not match the ray count");
    }
    QDivisor l(s.base_fan, s.l_coeffs);
    QDivisor d(s.base_fan, s.d_coeffs);
    QDivisor diff = Rat(s.n) * l + Rat(-1) * d;
    ClassGroup cg = class_group(*s.base_fan);
    DivisorClass cls = divisor_class(cg, diff);
    bool zero = true;
    for (const Int& t : cls.torsion_part) zero = zero && t == 0;
    for (const Rat& f : cls.free_part) zero = zero && f == 0;
    if (!zero) {
        throw ValidationError("cover: class mismatch, N[L] != [D]");
    }
}

std::vector<QDivisor> cover_summands(const CoverSpec& s) {
    validate_cover_spec(s);
    require_toric_base(s, "cover_summands");
    QDivisor l(s.base_fan, s.l_coeffs);
    QDivisor d(s.base_fan, s.d_coeffs);
    std::vector<QDivisor> out;
    out.reserve(static_cast<std::size_t>(s.n));
    for (Int i = 0; i < s.n; ++i) {
        QDivisor twist = round_down(make_rat(i, s.n) * d);
        out.push_back(Rat(-i) * l + twist);
    }
    return out;
}

std::vector<Int> curve_summand_degrees(const CoverSpec& s) {
    validate_cover_spec(s);
    if (!s.curve_base) {
        throw HypothesisError("curve_summand_degrees: base is not a curve");
    }
    Int deg_l = numerator(s.l_coeffs[0]);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(s.n));
    for (Int i = 0; i < s.n; ++i) {
        Int deg = -i * deg_l;
        for (const Rat& c : s.d_coeffs) {
            deg += floor_rat(make_rat(i * numerator(c), s.n));
        }
        out.push_back(deg);
    }
    return out;
}

bool smooth_branch_check(const CoverSpec& s) {
    validate_cover_spec(s);
    if (s.curve_base) return true;  // distinct marked points
    const Fan& f = *s.base_fan;
    // On a surface every invariant curve is smooth; in higher dimension the
    // components are smooth when the ambient fan is, so the reduced branch
    // is smooth exactly when no two of its rays span a cone together.
    if (f.ambient_rank() > 2 && !is_smooth(f)) {
        throw HypothesisError(
            "smooth_branch_check: singular base of dimension above two");
    }
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < s.d_coeffs.size(); ++i) {
        if (s.d_coeffs[i] != 0) support.push_back(i);
    }
    for (const auto& cone : f.max_cones()) {
        int hits = 0;
        for (int r : cone) {
            if (std::find(support.begin(), support.end(),
                          static_cast<std::size_t>(r)) != support.end()) {
                ++hits;
            }
        }
        if (hits >= 2) return false;
    }
    return true;
}

std::vector<RamificationComponent> ramification_profile(const CoverSpec& s) {
    validate_cover_spec(s);
    std::vector<RamificationComponent> out;
    for (std::size_t i = 0; i < s.d_coeffs.size(); ++i) {
        if (s.d_coeffs[i] == 0) continue;
        RamificationComponent rc;
        rc.component = i;
        rc.multiplicity = numerator(s.d_coeffs[i]);
        rc.e = s.n / gcd(s.n, rc.multiplicity);
        out.push_back(rc);
    }
    return out;
}

CoverReport cover_invariants(const CoverSpec& s) {
    validate_cover_spec(s);
    CoverReport rep;

    if (s.curve_base) {
        rep.summand_degrees = curve_summand_degrees(s);
        for (const Int& e : rep.summand_degrees) {
            rep.summand_h.push_back(curve_line_bundle_h(e));
        }
        rep.has_genus = true;
    } else {
        const Fan& f = *s.base_fan;
        if (f.ambient_rank() > 2) {
            throw HypothesisError("cover_invariants: unsupported base dimension");
        }
        if (!is_smooth(f)) {
            throw HypothesisError("cover_invariants: base fan is not smooth");
        }
        if (!is_complete(f)) {
            throw HypothesisError("cover_invariants: base fan is not complete");
        }
        rep.summands = cover_summands(s);
        for (const QDivisor& d : rep.summands) {
            CohomologyTable t = cohomology_table(d, s.p);
            std::vector<Int> h;
            h.reserve(t.h.size());
            for (long v : t.h) h.emplace_back(v);
            rep.summand_h.push_back(std::move(h));
        }
        rep.has_genus = f.ambient_rank() == 1;
    }

    for (const auto& h : rep.summand_h) {
        rep.chi += alternating_sum(h);
        rep.h0 += h[0];
        if (rep.has_genus && h.size() >= 2) rep.genus += h[1];
    }
    return rep;
}

CanonicalCover canonical_and_general_type(const CoverSpec& s) {
    validate_cover_spec(s);
    if (!smooth_branch_check(s)) {
        throw HypothesisError("canonical_and_general_type: branch locus is singular");
    }
    std::vector<RamificationComponent> ram = ramification_profile(s);
    bool reduced = true;
    for (const auto& rc : ram) reduced = reduced && rc.multiplicity == 1;

    CanonicalCover out;
    out.curve_base = s.curve_base;
    out.derived_extension = !reduced;
    Rat hurwitz_factor = make_rat(s.n - 1, s.n);

    if (s.curve_base) {
        Rat deg_d = 0;
        for (const Rat& c : s.d_coeffs) deg_d += c;
        out.degree = Rat(-2) + hurwitz_factor * deg_d;
        out.has_degree = true;
        Rat ram_degree = -2;
        for (const auto& rc : ram) ram_degree += Rat(1) - make_rat(1, rc.e);
        out.ramification_coeffs = {ram_degree};
        out.general_type = out.degree > 0;
        return out;
    }

    QDivisor k = canonical_divisor(s.base_fan);
    QDivisor d(s.base_fan, s.d_coeffs);
    QDivisor hurwitz = k + hurwitz_factor * d;
    out.pullback_coeffs = hurwitz.coeffs();

    RatVec ram_coeffs = k.coeffs();
    for (const auto& rc : ram) {
        ram_coeffs[rc.component] += Rat(1) - make_rat(1, rc.e);
    }
    out.ramification_coeffs = ram_coeffs;

    ClassGroup cg = class_group(*s.base_fan);
    if (cg.free_rank == 1 && cg.torsion.empty()) {
        DivisorClass cls = divisor_class(cg, hurwitz);
        out.degree = cls.free_part[0];
        out.has_degree = true;
    }
    out.general_type = is_ample(hurwitz);
    return out;
}

CoverLiftReport lift_cover(const CoverSpec& s) {
    validate_cover_spec(s);
    require_toric_base(s, "lift_cover");
    if (!is_smooth(*s.base_fan)) {
        throw HypothesisError("lift_cover: base fan is not smooth");
    }
    if (!smooth_branch_check(s)) {
        throw HypothesisError("lift_cover: branch locus is singular");
    }

    CoverLiftReport rep;
    rep.p = s.p;
    // The fan's combinatorial data is characteristic-free, so the base
    // lifts by reuse; the same holds for the invariant coefficients of L.
    rep.base_lift_ok = true;
    rep.l_lift_coeffs = s.l_coeffs;

    QDivisor d(s.base_fan, s.d_coeffs);
    rep.section_witness = verify_section_surjectivity(d, s.p);
    IntVec zero(static_cast<std::size_t>(s.base_fan->ambient_rank()), Int(0));
    rep.canonical_section_lifts =
        std::find(rep.section_witness.basis.begin(),
                  rep.section_witness.basis.end(),
                  zero) != rep.section_witness.basis.end();
    rep.summand_lifts = cover_summands(s);
    rep.ok = rep.base_lift_ok && rep.section_witness.surjective &&
             rep.canonical_section_lifts;
    return rep;
}

}  // namespace toric
