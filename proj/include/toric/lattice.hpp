#ifndef TORIC_LATTICE_HPP
#define TORIC_LATTICE_HPP

#include "toric/numeric.hpp"

namespace toric {

using LatticeVector = IntVec;

Int gcd_vec(const IntVec& v);

// v divided by the gcd of its entries; rejects the zero vector.
IntVec primitive(const IntVec& v);

bool is_primitive(const IntVec& v);

struct SnfResult {
    IntVec diagonal;          // invariant factors d_1 | d_2 | ..., all >= 0
    IntMat left_transform;    // unimodular, rows x rows
    IntMat right_transform;   // unimodular, cols x cols
};

// left_transform * A * right_transform = diag(diagonal), padded with zeros.
SnfResult smith_normal_form(const IntMat& a);

// Small dense helpers used by SNF consumers and tests.
IntMat mat_identity(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

// A finitely generated rational polyhedral cone, stored by its generator
// list. Generators are primitive and irredundant. Strong convexity is a
// queryable property rather than a constructor invariant because dual cones
// of low-dimensional cones are legitimately non-pointed (their generator
// lists then carry +l and -l for each lineality direction).
class Cone {
  public:
    Cone() : ambient_rank_(0) {}

    // Validates: correct length, nonzero, primitive (rejected, not
    // normalized), no duplicates, no generator in the cone of the others.
    static Cone from_rays(int ambient_rank, std::vector<IntVec> rays);

    // Skips the irredundancy check; for internal algorithms whose output is
    // already pruned.
    static Cone unchecked(int ambient_rank, std::vector<IntVec> rays);

    int ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    std::size_t ray_count() const { return rays_.size(); }

  private:
    int ambient_rank_;
    std::vector<IntVec> rays_;
};

// Membership x in cone(gens), exact, via Caratheodory: search independent
// subsets of the generators and solve the Gram system.
bool in_cone(const std::vector<IntVec>& gens, const IntVec& x);
bool in_cone(const std::vector<IntVec>& gens, const RatVec& x);
bool cone_contains(const Cone& c, const IntVec& x);
bool cone_contains(const Cone& c, const RatVec& x);

// {u : <u,v> >= 0 for every generator v}, via the double description method.
Cone dual_cone(const Cone& c);

// Intersection as dual of the sum of the duals.
Cone intersect_cones(const Cone& a, const Cone& b);

// True iff f is a face of c: f = c ∩ u^perp for some u in the dual of c.
bool is_face_of(const Cone& f, const Cone& c);

// Same generator set up to order (both sides assumed irredundant).
bool same_cone(const Cone& a, const Cone& b);

bool is_strongly_convex(const Cone& c);

// Generators linearly independent.
bool is_simplicial(const Cone& c);

// Generators extend to a lattice basis: simplicial with all elementary
// divisors 1.
bool is_smooth_cone(const Cone& c);

// Dimension of the linear span of the generators.
int cone_dim(const Cone& c);

}  // namespace toric

#endif
