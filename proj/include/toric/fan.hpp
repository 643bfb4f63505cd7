#ifndef TORIC_FAN_HPP
#define TORIC_FAN_HPP

#include <memory>
#include <string>

#include "toric/lattice.hpp"

namespace toric {

class Fan;
using FanPtr = std::shared_ptr<const Fan>;

struct FanValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Report-style validation of raw fan data; never throws on bad geometry.
FanValidationReport validate_fan(int ambient_rank,
                                 const std::vector<IntVec>& rays,
                                 const std::vector<std::vector<int>>& max_cones);

// A fan: ordered primitive rays plus maximal cones as ray-index sets.
// Instances only exist in validated form; construction canonicalizes
// (indices sorted within a cone, cones sorted lexicographically).
class Fan {
  public:
    static FanPtr make(int ambient_rank, std::vector<IntVec> rays,
                       std::vector<std::vector<int>> max_cones);

    int ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
    int max_cone_count() const { return static_cast<int>(max_cones_.size()); }

    // The cone object of max cone k.
    const Cone& cone(int k) const { return cones_[k]; }

    // Index of the ray equal to v, or -1.
    int ray_index(const IntVec& v) const;

    bool operator==(const Fan& other) const {
        return ambient_rank_ == other.ambient_rank_ && rays_ == other.rays_ &&
               max_cones_ == other.max_cones_;
    }

  private:
    Fan() = default;
    int ambient_rank_ = 0;
    std::vector<IntVec> rays_;
    std::vector<std::vector<int>> max_cones_;
    std::vector<Cone> cones_;
};

// A shared codimension-1 face between two maximal cones.
struct Wall {
    std::vector<int> facet_rays;  // sorted ray indices spanning the wall
    int cone_a = -1;
    int cone_b = -1;
};

// All facets of all max cones, paired up. Throws HypothesisError if some
// facet is shared by more than two max cones (not a fan we handle) and
// reports unpaired facets via the returned flag.
struct WallStructure {
    std::vector<Wall> walls;        // facets shared by exactly two cones
    bool all_paired = false;        // no boundary facets and all full-dim
};

WallStructure fan_walls(const Fan& f);

bool is_smooth(const Fan& f);

// Wall-pairing criterion plus a sampled coverage certificate; rank <= 3 only.
bool is_complete(const Fan& f);

// The wall-pairing part of the completeness certificate alone; any rank.
// Used to enforce "complete fan" preconditions where rank > 3.
bool has_paired_walls(const Fan& f);

FanPtr projective_space(int n);
FanPtr hirzebruch(int n);
FanPtr product(const FanPtr& f, const FanPtr& g);

// Insert a new ray through the interior of the unique max cone containing
// it and star-subdivide that cone.
FanPtr star_subdivision(const FanPtr& f, const IntVec& ray);

// Index of some max cone containing x, or -1.
int find_max_cone(const Fan& f, const IntVec& x);
int find_max_cone(const Fan& f, const RatVec& x);

// A toric morphism given by a refinement of fans (source refines target).
struct ToricMorphismData {
    FanPtr source;
    FanPtr target;
};

// Validates the refinement property: every source max cone is contained in
// some target max cone, and every target ray occurs among the source rays.
ToricMorphismData toric_morphism(FanPtr source, FanPtr target);

}  // namespace toric

#endif
