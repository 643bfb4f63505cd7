#ifndef TORIC_COHOMOLOGY_HPP
#define TORIC_COHOMOLOGY_HPP

#include <map>

#include "toric/divisor.hpp"

namespace toric {

// Lattice points of the section polytope: the monomial basis of H^0.
std::vector<IntVec> h0_basis(const QDivisor& d);
long h0(const QDivisor& d);

// The combinatorial data computing the weight-u piece of H^i(X, O(D)):
// N_u = {rays with <u, v> < -a}, and the subcomplex of the fan nerve they
// span. dim H^i(X,O(D))_u = dim of reduced cohomology of the complex in
// degree i-1.
struct WeightComplex {
    IntVec weight;
    std::vector<int> negative_rays;
    // faces_by_dim[k] = faces with k+1 vertices (ray indices, sorted)
    std::vector<std::vector<std::vector<int>>> faces_by_dim;
};

WeightComplex weight_complex(const QDivisor& d, const IntVec& u);

// Reduced-cohomology dimensions of the weight complex in degrees -1..d-1,
// reported as contributions to H^0..H^d. Characteristic 0 and p come from
// the same integer Smith normal forms.
struct WeightDims {
    std::vector<long> char0;
    std::vector<long> charp;
};

WeightDims weight_dims(const WeightComplex& wc, int ambient_rank, const Int& p);

struct CohomologyTable {
    Int characteristic;  // 0 or p
    std::vector<long> h;  // h^0..h^d
    std::map<IntVec, std::vector<long>> per_weight;  // nonzero weights only
};

struct CohomologyPair {
    CohomologyTable char0;
    CohomologyTable charp;
};

// Weights enumerated over the integer points of the padded bounding box of
// the vertices of the arrangement {<u, v_i> = -a_i}.
std::vector<IntVec> candidate_weights(const QDivisor& d, int padding);

CohomologyPair cohomology_tables(const QDivisor& d, const Int& p,
                                 int padding = 1);
CohomologyTable cohomology_table(const QDivisor& d, const Int& characteristic,
                                 int padding = 1);

// Independent verification oracle: the Cech complex of the max-cone cover.
struct CechCover {
    int cone_count = 0;
    // per nonempty subset of max cones: the subset and the indices of the
    // fan rays lying in the intersection of its cones
    std::vector<std::pair<std::vector<int>, std::vector<int>>> strata;
};

CechCover make_cech_cover(const Fan& f);

// Per-degree dimensions (0..d) of the weight-u piece via the Cech complex.
std::vector<long> cech_weight_dims(const CechCover& cover, const QDivisor& d,
                                   const IntVec& u, const Int& characteristic);
std::vector<long> cech_oracle(const QDivisor& d, const IntVec& u,
                              const Int& characteristic);

struct KvVanishingReport {
    Int p;
    std::vector<long> h_canonical;        // h^i(K + ceil H), char p
    std::vector<long> h_canonical_char0;
    std::vector<long> h_log;              // h^i(-ceil H), char p
    std::vector<long> h_log_char0;
    int claimed_threshold;                // vanishing claimed for i > threshold
    bool claimed_pass;
    bool log_claimed_pass;                // h^i(-ceil H) = 0 for i < inf(d,p)
    std::vector<int> observed_vanishing;  // all i with h^i(K + ceil H) = 0
    bool characteristic_sensitive;        // char-p dims differ from char-0
};

// Checks the vanishing ranges for an ample Q-divisor H: the canonical form
// H^i(K + ceil H) = 0 for i > d - inf(d,p), and the log form reduced to
// H^i(-ceil H) = 0 for i < inf(d,p) (log sheaves of the full boundary are
// free, so every twist reduces to the structure-sheaf case).
KvVanishingReport verify_kv_vanishing(const QDivisor& h, const Int& p);

}  // namespace toric

#endif
