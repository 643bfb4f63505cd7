#ifndef TORIC_COVER_HPP
#define TORIC_COVER_HPP

#include "toric/witt.hpp"

namespace toric {

// Degree-N cyclic cover data: a base (toric fan, or P^1 with marked
// invariant points), an invariant representative L of the N-th root class,
// and the effective integral branch divisor D with N[L] = [D].
struct CoverSpec {
    FanPtr base_fan;     // null when curve_base
    bool curve_base = false;
    RatVec l_coeffs;     // per ray; curve base: single entry, deg L
    Int n = 1;           // cover degree N
    RatVec d_coeffs;     // per ray; curve base: multiplicity per marked point
    Int p = 2;

    static CoverSpec make(FanPtr base, RatVec l, Int n, RatVec d, Int p);
    static CoverSpec make_curve(Int l_degree, Int n, std::vector<Int> d_mults,
                                Int p);
};

// Checks: p prime, N >= 1, gcd(N, p) = 1, L and D integral, D effective,
// and N[L] = [D] in the class group (degree match on a curve base).
void validate_cover_spec(const CoverSpec& s);

// The pushforward algebra splits as the direct sum of the line bundles
// O(-i L + [i D / N]), i = 0..N-1.
std::vector<QDivisor> cover_summands(const CoverSpec& s);

// Curve base: the summand degrees -i deg L + sum_j [i a_j / N].
std::vector<Int> curve_summand_degrees(const CoverSpec& s);

// True when the reduced branch locus is a disjoint union of smooth
// invariant divisors: no two support rays of D_red lie in a common cone.
// Marked points on a curve base are distinct by construction; above
// dimension two the ambient fan must be smooth for the criterion to apply.
bool smooth_branch_check(const CoverSpec& s);

struct RamificationComponent {
    std::size_t component = 0;  // ray index, or marked-point index
    Int multiplicity = 0;       // coefficient of the component in D
    Int e = 1;                  // ramification index N / gcd(N, multiplicity)
};

std::vector<RamificationComponent> ramification_profile(const CoverSpec& s);

struct CoverReport {
    std::vector<QDivisor> summands;    // toric base
    std::vector<Int> summand_degrees;  // curve base
    std::vector<std::vector<Int>> summand_h;
    Int chi = 0;  // chi(O_Y) = sum of summand Euler characteristics
    Int h0 = 0;   // h^0(O_Y): number of connected components
    bool has_genus = false;
    Int genus = 0;
};

// Invariants of the cover through the pushforward: per-summand cohomology,
// chi(O_Y), connectedness count, genus when Y is a curve.
CoverReport cover_invariants(const CoverSpec& s);

// K_Y as the pullback of a Q-divisor on the base. For reduced D this is
// K_X + ((N-1)/N) D; for non-reduced D that same expression is kept at the
// class level (D is linearly equivalent to the reduced member the formula
// refers to), while the ramification profile gives the divisor
// K_X + sum_j (1 - 1/e_j) D_j,red of the invariant cover itself, reported
// alongside and flagged as a derived extension.
struct CanonicalCover {
    bool curve_base = false;
    RatVec pullback_coeffs;       // K_X + ((N-1)/N) D (toric base)
    RatVec ramification_coeffs;   // K_X + sum (1 - 1/e_j) D_j,red
    bool derived_extension = false;  // D non-reduced: profile variant differs
    bool has_degree = false;
    Rat degree;                   // rank-one class group or curve base
    bool general_type = false;    // ampleness (positivity) of the pullback class
};

CanonicalCover canonical_and_general_type(const CoverSpec& s);

// Lifting data for the cover over W_2: the base lifts with identical
// combinatorial data, L lifts with the same coefficients, the section
// cutting D lifts (surjectivity witness containing the weight 0 of the
// canonical section), and each summand lifts with the same coefficients.
struct CoverLiftReport {
    Int p = 2;
    bool base_lift_ok = false;
    RatVec l_lift_coeffs;
    SurjectivityWitness section_witness;
    bool canonical_section_lifts = false;  // weight 0 present in the witness
    std::vector<QDivisor> summand_lifts;
    bool ok = false;
};

CoverLiftReport lift_cover(const CoverSpec& s);

}  // namespace toric

#endif
