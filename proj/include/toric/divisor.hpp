#ifndef TORIC_DIVISOR_HPP
#define TORIC_DIVISOR_HPP

#include "toric/fan.hpp"

namespace toric {

// Torus-invariant Q-divisor: one rational coefficient per fan ray.
class QDivisor {
  public:
    QDivisor(FanPtr fan, RatVec coeffs);

    const FanPtr& fan() const { return fan_; }
    const RatVec& coeffs() const { return coeffs_; }
    const Rat& coeff(int i) const { return coeffs_[i]; }

    bool is_integral() const;
    bool is_effective() const;

    bool operator==(const QDivisor& other) const {
        return *fan_ == *other.fan_ && coeffs_ == other.coeffs_;
    }

  private:
    FanPtr fan_;
    RatVec coeffs_;
};

QDivisor operator+(const QDivisor& a, const QDivisor& b);
QDivisor operator-(const QDivisor& a, const QDivisor& b);
QDivisor operator*(const Rat& s, const QDivisor& d);

// Coefficientwise rounding calculus.
QDivisor round_down(const QDivisor& d);   // [D]
QDivisor round_up(const QDivisor& d);     // "ceil": -[-D]
QDivisor frac(const QDivisor& d);         // <D> = D - [D]
QDivisor upper_frac(const QDivisor& d);   // {D} = ceil(D) - D

// div(chi^u): coefficient <u, v_i> at each ray.
QDivisor principal_divisor(const FanPtr& fan, const IntVec& u);

// K = -sum of all invariant prime divisors.
QDivisor canonical_divisor(const FanPtr& fan);

// Sum of coefficients; the degree of a divisor on a curve (rank-1) fan.
Rat degree_rank1(const QDivisor& d);

struct ClassGroup {
    int free_rank = 0;
    IntVec torsion;      // invariant factors > 1
    IntMat class_map;    // torsion rows first, then free rows
};

struct DivisorClass {
    IntVec torsion_part;  // residues mod the matching torsion factors
    RatVec free_part;

    bool operator==(const DivisorClass& o) const {
        return torsion_part == o.torsion_part && free_part == o.free_part;
    }
};

// Cokernel of M -> Div_T(X), u -> (<u, v_i>)_i, via Smith normal form.
ClassGroup class_group(const Fan& f);

DivisorClass divisor_class(const ClassGroup& cg, const QDivisor& d);

bool is_cartier(const QDivisor& d);  // for Q-divisors: the denominator-cleared multiple
bool is_nef(const QDivisor& d);
bool is_ample(const QDivisor& d);

// The linear functional u with <u, v_i> = -a_i on the rays of max cone k.
RatVec support_functional(const QDivisor& d, int k);

struct Polytope {
    std::vector<IntVec> normals;   // inequality <u, normal> >= rhs
    RatVec rhs;
    std::vector<RatVec> vertices;  // exact, sorted, deduplicated
};

// P_D = {u : <u, v_i> >= -a_i for every ray}; requires a complete fan so the
// polyhedron is bounded.
Polytope section_polytope(const QDivisor& d);

// All integer points of the polytope, sorted lexicographically.
std::vector<IntVec> lattice_points(const Polytope& p);

// Intersection number of two Q-divisors on a smooth complete surface fan.
Rat surface_intersection(const QDivisor& a, const QDivisor& b);

// Pullback along a toric refinement: coefficient at source ray w is
// -phi_D(w) for the support function phi_D of D on the target fan.
QDivisor pullback(const ToricMorphismData& mor, const QDivisor& d);

// ceil(f*H) - f*ceil(H); supported on exceptional rays, where its
// coefficient is -[sum_j b_j q_ji] for the upper-fractional parts b_j of H
// and exceptional multiplicities q_ji. Both facts are asserted exactly.
QDivisor round_up_defect(const ToricMorphismData& mor, const QDivisor& h);

// Source rays absent from the target fan.
std::vector<int> exceptional_rays(const ToricMorphismData& mor);

}  // namespace toric

#endif
