#ifndef TORIC_WITT_HPP
#define TORIC_WITT_HPP

#include "toric/cohomology.hpp"

namespace toric {

bool is_prime(const Int& p);

// Length-two Witt vector over F_p.
class WittScalar {
  public:
    WittScalar(Int p, Int a0, Int a1);

    static WittScalar zero(const Int& p) { return WittScalar(p, 0, 0); }
    static WittScalar one(const Int& p) { return WittScalar(p, 1, 0); }

    const Int& p() const { return p_; }
    const Int& a0() const { return a0_; }
    const Int& a1() const { return a1_; }

    bool operator==(const WittScalar& o) const {
        return p_ == o.p_ && a0_ == o.a0_ && a1_ == o.a1_;
    }
    bool operator!=(const WittScalar& o) const { return !(*this == o); }

  private:
    Int p_, a0_, a1_;
};

// Carry polynomial C(x,y) = -sum_{i=1}^{p-1} (1/p) binom(p,i) x^i y^{p-i},
// evaluated mod p with exact integer binomial division.
Int witt_carry(const Int& p, const Int& x, const Int& y);

WittScalar witt_add(const WittScalar& x, const WittScalar& y);
WittScalar witt_mul(const WittScalar& x, const WittScalar& y);
WittScalar witt_neg(const WittScalar& x);
WittScalar witt_sub(const WittScalar& x, const WittScalar& y);

// Reduction W_2(k) -> k and the multiplication-by-p section k -> W_2(k);
// lift_p(a) is computed as the p-fold sum of (a, 0), so the exactness of
// ker(reduction) = image(lift_p) is a theorem about the arithmetic, not a
// definition.
Int reduction_r(const WittScalar& x);
WittScalar lift_p(const Int& p, const Int& a);

enum class CoeffRing { ResidueField, WittLengthTwo };

// The free module on the monomial basis P_D cap M, over k or W_2(k).
struct SectionModule {
    CoeffRing ring = CoeffRing::ResidueField;
    Int p = 0;
    std::vector<IntVec> basis;
};

SectionModule section_module(const QDivisor& d, const Int& p, CoeffRing ring);
SectionModule section_reduction(const SectionModule& m);

// Surjectivity of H^0 over W_2 onto H^0 over k, witnessed by the shared
// monomial basis (each monomial's preimage is itself with Teichmueller
// coefficient). Structural; a mismatch aborts as an implementation defect.
struct SurjectivityWitness {
    std::vector<IntVec> basis;
    bool surjective = false;
};

SurjectivityWitness verify_section_surjectivity(const QDivisor& d, const Int& p);

// Strong-liftability certificate: (i) every class-group generator (the ray
// divisors) lifts with identical coefficient data over W_2, (ii) section
// reduction is surjective on a family of effective divisor classes.
struct LiftCertificate {
    Int p = 0;
    bool picard_lift_ok = false;
    bool section_surjectivity_ok = false;
    std::vector<RatVec> generator_lifts;  // coefficient data of the lifts
    std::vector<SurjectivityWitness> section_witnesses;
    bool valid() const { return picard_lift_ok && section_surjectivity_ok; }
};

LiftCertificate strong_lifting_certificate(const FanPtr& fan, const Int& p,
                                           const std::vector<QDivisor>& family);

// Deterministic random family of effective integral divisors.
std::vector<QDivisor> default_effective_family(const FanPtr& fan, int count,
                                               std::uint64_t seed);

}  // namespace toric

#endif
