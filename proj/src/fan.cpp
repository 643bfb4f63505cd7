#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace toric {

namespace {

bool all_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<IntVec> gather_rays(const std::vector<IntVec>& rays,
                                const std::vector<int>& idx) {
    std::vector<IntVec> out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(rays[i]);
    return out;
}

}  // namespace

FanValidationReport validate_fan(int ambient_rank,
                                 const std::vector<IntVec>& rays,
                                 const std::vector<std::vector<int>>& max_cones) {
    FanValidationReport rep;
    auto fail = [&](std::string msg) { rep.violations.push_back(std::move(msg)); };

    if (ambient_rank < 1) {
        fail("rank must be positive");
        return rep;
    }
    bool rays_ok = true;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (static_cast<int>(rays[i].size()) != ambient_rank) {
            fail("ray " + std::to_string(i) + " has wrong length");
            rays_ok = false;
            continue;
        }
        if (all_zero(rays[i])) {
            fail("ray " + std::to_string(i) + " is zero");
            rays_ok = false;
            continue;
        }
        if (!is_primitive(rays[i])) {
            fail("ray " + std::to_string(i) + " is not primitive");
            rays_ok = false;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (static_cast<int>(rays[j].size()) == ambient_rank &&
                rays[j] == rays[i])
                fail("ray " + std::to_string(i) + " duplicates ray " +
                     std::to_string(j));
    }
    if (max_cones.empty())
        fail("no maximal cones");
    bool idx_ok = true;
    for (std::size_t k = 0; k < max_cones.size(); ++k) {
        if (max_cones[k].empty()) {
            fail("max cone " + std::to_string(k) + " is empty");
            idx_ok = false;
            continue;
        }
        for (int i : max_cones[k])
            if (i < 0 || i >= static_cast<int>(rays.size())) {
                fail("max cone " + std::to_string(k) + " has ray index out of range");
                idx_ok = false;
            }
        std::vector<int> sorted = max_cones[k];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            fail("max cone " + std::to_string(k) + " repeats a ray index");
            idx_ok = false;
        }
    }
    if (!rays_ok || !idx_ok)
        return rep;  // geometric checks need sane indices and rays

    for (std::size_t k = 0; k < max_cones.size(); ++k) {
        std::vector<int> a = max_cones[k];
        for (std::size_t l = 0; l < k; ++l) {
            std::vector<int> b = max_cones[l];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a == b)
                fail("max cone " + std::to_string(k) + " duplicates cone " +
                     std::to_string(l));
        }
    }

    std::vector<Cone> cones;
    bool cones_ok = true;
    for (std::size_t k = 0; k < max_cones.size(); ++k) {
        try {
            Cone c = Cone::from_rays(ambient_rank, gather_rays(rays, max_cones[k]));
            if (!is_strongly_convex(c)) {
                fail("max cone " + std::to_string(k) + " is not strongly convex");
                cones_ok = false;
            }
            cones.push_back(std::move(c));
        } catch (const ValidationError& e) {
            fail("max cone " + std::to_string(k) + ": " + e.what());
            cones_ok = false;
            cones.push_back(Cone());
        }
    }

    std::vector<bool> used(rays.size(), false);
    for (const auto& mc : max_cones)
        for (int i : mc)
            used[i] = true;
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (!used[i])
            fail("ray " + std::to_string(i) + " appears in no max cone");

    if (!cones_ok)
        return rep;

    for (std::size_t k = 0; k < cones.size(); ++k)
        for (std::size_t l = 0; l < k; ++l) {
            Cone inter = intersect_cones(cones[k], cones[l]);
            if (!is_face_of(inter, cones[k]) || !is_face_of(inter, cones[l])) {
                fail("face intersection violation between max cones " +
                     std::to_string(l) + " and " + std::to_string(k));
                continue;
            }
            if (same_cone(inter, cones[k]) || same_cone(inter, cones[l]))
                fail("max cone " + std::to_string(l) + " and max cone " +
                     std::to_string(k) + " are nested");
        }

    return rep;
}

FanPtr Fan::make(int ambient_rank, std::vector<IntVec> rays,
                 std::vector<std::vector<int>> max_cones) {
    for (auto& mc : max_cones)
        std::sort(mc.begin(), mc.end());
    std::sort(max_cones.begin(), max_cones.end());

    FanValidationReport rep = validate_fan(ambient_rank, rays, max_cones);
    if (!rep.ok()) {
        std::string msg = "invalid fan:";
        for (const auto& v : rep.violations)
            msg += "\n  " + v;
        throw ValidationError(msg);
    }
    auto fan = std::shared_ptr<Fan>(new Fan());
    fan->ambient_rank_ = ambient_rank;
    fan->rays_ = std::move(rays);
    fan->max_cones_ = std::move(max_cones);
    for (const auto& mc : fan->max_cones_)
        fan->cones_.push_back(
            Cone::from_rays(ambient_rank, gather_rays(fan->rays_, mc)));
    return fan;
}

int Fan::ray_index(const IntVec& v) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == v)
            return static_cast<int>(i);
    return -1;
}

WallStructure fan_walls(const Fan& f) {
    WallStructure ws;
    ws.all_paired = true;
    const int d = f.ambient_rank();
    std::map<std::vector<int>, std::vector<int>> facet_owner;
    for (int k = 0; k < f.max_cone_count(); ++k) {
        const Cone& c = f.cone(k);
        if (cone_dim(c) != d) {
            ws.all_paired = false;
            continue;
        }
        Cone dc = dual_cone(c);
        for (const IntVec& w : dc.rays()) {
            std::vector<int> facet;
            for (int i : f.max_cones()[k])
                if (dot(w, f.rays()[i]) == 0)
                    facet.push_back(i);
            std::sort(facet.begin(), facet.end());
            facet_owner[facet].push_back(k);
        }
    }
    for (auto& [facet, owners] : facet_owner) {
        std::sort(owners.begin(), owners.end());
        owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
        if (owners.size() == 2) {
            Wall w;
            w.facet_rays = facet;
            w.cone_a = owners[0];
            w.cone_b = owners[1];
            ws.walls.push_back(std::move(w));
        } else {
            ws.all_paired = false;
        }
    }
    return ws;
}

bool is_smooth(const Fan& f) {
    for (int k = 0; k < f.max_cone_count(); ++k)
        if (!is_smooth_cone(f.cone(k)))
            return false;
    return true;
}

bool has_paired_walls(const Fan& f) {
    return fan_walls(f).all_paired;
}

namespace {

// All primitive integer vectors with coordinates in [-radius, radius].
std::vector<IntVec> primitive_ball(int d, int radius) {
    std::vector<IntVec> out;
    IntVec v(d, Int(0));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == d) {
            if (!all_zero(v) && is_primitive(v))
                out.push_back(v);
            return;
        }
        for (int x = -radius; x <= radius; ++x) {
            v[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

int find_max_cone(const Fan& f, const IntVec& x) {
    for (int k = 0; k < f.max_cone_count(); ++k)
        if (cone_contains(f.cone(k), x))
            return k;
    return -1;
}

int find_max_cone(const Fan& f, const RatVec& x) {
    for (int k = 0; k < f.max_cone_count(); ++k)
        if (cone_contains(f.cone(k), x))
            return k;
    return -1;
}

bool is_complete(const Fan& f) {
    const int d = f.ambient_rank();
    if (d > 3)
        throw HypothesisError("is_complete: unsupported rank " + std::to_string(d));
    if (!has_paired_walls(f))
        return false;
    const int radius = (d == 3) ? 2 : 3;
    for (const IntVec& v : primitive_ball(d, radius))
        if (find_max_cone(f, v) < 0)
            return false;
    return true;
}

FanPtr projective_space(int n) {
    if (n < 1)
        throw ValidationError("projective_space: n must be >= 1");
    std::vector<IntVec> rays;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    rays.push_back(IntVec(n, Int(-1)));
    std::vector<std::vector<int>> cones;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= n; ++i)
            if (i != skip)
                c.push_back(i);
        cones.push_back(std::move(c));
    }
    return Fan::make(n, std::move(rays), std::move(cones));
}

FanPtr hirzebruch(int n) {
    if (n < 0)
        throw ValidationError("hirzebruch: n must be >= 0");
    std::vector<IntVec> rays = {
        {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(n)}, {Int(0), Int(-1)}};
    std::vector<std::vector<int>> cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return Fan::make(2, std::move(rays), std::move(cones));
}

FanPtr product(const FanPtr& f, const FanPtr& g) {
    const int df = f->ambient_rank();
    const int dg = g->ambient_rank();
    std::vector<IntVec> rays;
    for (const IntVec& r : f->rays()) {
        IntVec v = r;
        v.resize(df + dg, Int(0));
        rays.push_back(std::move(v));
    }
    for (const IntVec& r : g->rays()) {
        IntVec v(df, Int(0));
        v.insert(v.end(), r.begin(), r.end());
        rays.push_back(std::move(v));
    }
    std::vector<std::vector<int>> cones;
    for (const auto& a : f->max_cones())
        for (const auto& b : g->max_cones()) {
            std::vector<int> c = a;
            for (int i : b)
                c.push_back(i + f->ray_count());
            cones.push_back(std::move(c));
        }
    return Fan::make(df + dg, std::move(rays), std::move(cones));
}

FanPtr star_subdivision(const FanPtr& f, const IntVec& ray) {
    const int d = f->ambient_rank();
    if (static_cast<int>(ray.size()) != d)
        throw ValidationError("star_subdivision: ray has wrong length");
    if (all_zero(ray))
        throw ValidationError("star_subdivision: zero ray");
    if (!is_primitive(ray))
        throw ValidationError("star_subdivision: ray is not primitive");
    if (f->ray_index(ray) >= 0)
        throw ValidationError("star_subdivision: ray already in fan");

    std::vector<int> containing;
    for (int k = 0; k < f->max_cone_count(); ++k)
        if (cone_contains(f->cone(k), ray))
            containing.push_back(k);
    if (containing.empty())
        throw ValidationError("star_subdivision: ray outside the fan support");
    if (containing.size() > 1)
        throw ValidationError("star_subdivision: ray lies on a wall");

    const int k = containing[0];
    const Cone& sigma = f->cone(k);
    Cone ds = dual_cone(sigma);
    for (const IntVec& w : ds.rays())
        if (dot(w, ray) == 0)
            throw ValidationError(
                "star_subdivision: ray lies on a proper face of its cone");

    std::vector<IntVec> rays = f->rays();
    rays.push_back(ray);
    const int new_idx = static_cast<int>(rays.size()) - 1;

    std::vector<std::vector<int>> cones;
    for (int l = 0; l < f->max_cone_count(); ++l)
        if (l != k)
            cones.push_back(f->max_cones()[l]);
    // one new cone per facet of the subdivided cone
    for (const IntVec& w : ds.rays()) {
        std::vector<int> c;
        for (int i : f->max_cones()[k])
            if (dot(w, f->rays()[i]) == 0)
                c.push_back(i);
        c.push_back(new_idx);
        cones.push_back(std::move(c));
    }
    return Fan::make(d, std::move(rays), std::move(cones));
}

ToricMorphismData toric_morphism(FanPtr source, FanPtr target) {
    if (!source || !target)
        throw ValidationError("toric_morphism: null fan");
    if (source->ambient_rank() != target->ambient_rank())
        throw ValidationError("toric_morphism: rank mismatch");
    for (const IntVec& r : target->rays())
        if (source->ray_index(r) < 0)
            throw ValidationError(
                "toric_morphism: target ray missing from source (not a refinement)");
    for (int k = 0; k < source->max_cone_count(); ++k) {
        bool contained = false;
        for (int l = 0; l < target->max_cone_count() && !contained; ++l) {
            contained = true;
            for (const IntVec& r : source->cone(k).rays())
                if (!cone_contains(target->cone(l), r)) {
                    contained = false;
                    break;
                }
        }
        if (!contained)
            throw ValidationError(
                "toric_morphism: source cone not contained in any target cone "
                "(not a refinement)");
    }
    ToricMorphismData m;
    m.source = std::move(source);
    m.target = std::move(target);
    return m;
}

}  // namespace toric
