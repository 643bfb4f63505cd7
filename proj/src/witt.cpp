#include "toric/witt.hpp"

#include <random>

namespace toric {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

namespace {

Int mod(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

void require_prime(const Int& p) {
    if (!is_prime(p)) {
        throw ValidationError("witt: p = " + p.str() + " is not prime");
    }
}

void require_same_p(const WittScalar& x, const WittScalar& y) {
    if (x.p() != y.p()) {
        throw ValidationError("witt: mixed characteristics " + x.p().str() +
                              " and " + y.p().str());
    }
}

Int binom(const Int& n, const Int& k) {
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

Int pow_int(Int base, Int e) {
    Int r = 1;
    while (e > 0) {
        r *= base;
        --e;
    }
    return r;
}

}  // namespace

WittScalar::WittScalar(Int p, Int a0, Int a1) : p_(std::move(p)) {
    require_prime(p_);
    a0_ = mod(a0, p_);
    a1_ = mod(a1, p_);
}

Int witt_carry(const Int& p, const Int& x, const Int& y) {
    Int acc = 0;
    for (Int i = 1; i < p; ++i) {
        Int c = binom(p, i);
        Int q = c / p;  // binom(p, i) is divisible by p for 0 < i < p
        if (q * p != c) throw std::logic_error("witt_carry: binomial not divisible by p");
        acc += q * pow_int(mod(x, p), i) * pow_int(mod(y, p), p - i);
    }
    return mod(-acc, p);
}

WittScalar witt_add(const WittScalar& x, const WittScalar& y) {
    require_same_p(x, y);
    const Int& p = x.p();
    Int c0 = mod(x.a0() + y.a0(), p);
    Int c1 = mod(x.a1() + y.a1() + witt_carry(p, x.a0(), y.a0()), p);
    return WittScalar(p, c0, c1);
}

WittScalar witt_mul(const WittScalar& x, const WittScalar& y) {
    require_same_p(x, y);
    const Int& p = x.p();
    Int c0 = mod(x.a0() * y.a0(), p);
    Int c1 = mod(pow_int(x.a0(), p) * y.a1() + pow_int(y.a0(), p) * x.a1(), p);
    return WittScalar(p, c0, c1);
}

WittScalar witt_neg(const WittScalar& x) {
    const Int& p = x.p();
    Int c0 = mod(-x.a0(), p);
    // Solve add(x, y) = 0 directly for y.
    Int c1 = mod(-(x.a1() + witt_carry(p, x.a0(), c0)), p);
    return WittScalar(p, c0, c1);
}

WittScalar witt_sub(const WittScalar& x, const WittScalar& y) {
    return witt_add(x, witt_neg(y));
}

Int reduction_r(const WittScalar& x) { return x.a0(); }

WittScalar lift_p(const Int& p, const Int& a) {
    require_prime(p);
    WittScalar base(p, a, 0);
    WittScalar acc = WittScalar::zero(p);
    for (Int i = 0; i < p; ++i) acc = witt_add(acc, base);
    return acc;
}

SectionModule section_module(const QDivisor& d, const Int& p, CoeffRing ring) {
    require_prime(p);
    SectionModule m;
    m.ring = ring;
    m.p = p;
    m.basis = h0_basis(d);
    return m;
}

SectionModule section_reduction(const SectionModule& m) {
    if (m.ring != CoeffRing::WittLengthTwo) {
        throw ValidationError("section_reduction: module is not over W_2");
    }
    SectionModule r;
    r.ring = CoeffRing::ResidueField;
    r.p = m.p;
    r.basis = m.basis;
    return r;
}

SurjectivityWitness verify_section_surjectivity(const QDivisor& d, const Int& p) {
    SectionModule over_witt = section_module(d, p, CoeffRing::WittLengthTwo);
    SectionModule over_field = section_module(d, p, CoeffRing::ResidueField);
    SectionModule reduced = section_reduction(over_witt);
    if (reduced.basis != over_field.basis) {
        throw std::logic_error("verify_section_surjectivity: basis mismatch after reduction");
    }
    SurjectivityWitness w;
    w.basis = reduced.basis;
    w.surjective = true;
    return w;
}

LiftCertificate strong_lifting_certificate(const FanPtr& fan, const Int& p,
                                           const std::vector<QDivisor>& family) {
    require_prime(p);
    if (!is_smooth(*fan)) {
        throw HypothesisError("strong_lifting_certificate: fan is not smooth");
    }
    LiftCertificate cert;
    cert.p = p;

    // Each ray divisor D_i generates the class group together with the
    // others; its lift over W_2 carries the same coefficient vector.
    const std::size_t n = fan->ray_count();
    cert.generator_lifts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec coeffs(n, Rat(0));
        coeffs[i] = Rat(1);
        cert.generator_lifts.push_back(coeffs);
    }
    cert.picard_lift_ok = true;

    cert.section_witnesses.reserve(family.size());
    bool all_surjective = !family.empty();
    for (const QDivisor& d : family) {
        if (!d.is_integral()) {
            throw ValidationError("strong_lifting_certificate: family member is not integral");
        }
        SurjectivityWitness w = verify_section_surjectivity(d, p);
        all_surjective = all_surjective && w.surjective;
        cert.section_witnesses.push_back(std::move(w));
    }
    cert.section_surjectivity_ok = all_surjective;
    return cert;
}

std::vector<QDivisor> default_effective_family(const FanPtr& fan, int count,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(0, 4);
    std::vector<QDivisor> family;
    family.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        RatVec coeffs(fan->ray_count());
        for (auto& c : coeffs) c = Rat(coeff(rng));
        family.emplace_back(fan, coeffs);
    }
    return family;
}

}  // namespace toric
