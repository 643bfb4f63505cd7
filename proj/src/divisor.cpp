#include "toric/divisor.hpp"

#include <algorithm>
#include <functional>

namespace toric {

namespace {

// Completeness enforcement for operations that require a complete fan. The
// sampled-coverage certificate only exists for rank <= 3; above that the
// wall-pairing criterion alone is used.
void require_complete(const Fan& f, const char* op) {
    bool ok = (f.ambient_rank() <= 3) ? is_complete(f) : has_paired_walls(f);
    if (!ok)
        throw HypothesisError(std::string(op) + ": fan is not complete");
}

void require_smooth(const Fan& f, const char* op) {
    if (!is_smooth(f))
        throw HypothesisError(std::string(op) + ": fan is not smooth");
}

void require_same_fan(const QDivisor& a, const QDivisor& b) {
    if (!(*a.fan() == *b.fan()))
        throw ValidationError("divisors live on different fans");
}

}  // namespace

QDivisor::QDivisor(FanPtr fan, RatVec coeffs) : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
    if (!fan_)
        throw ValidationError("divisor: null fan");
    if (static_cast<int>(coeffs_.size()) != fan_->ray_count())
        throw ValidationError("divisor: coefficient count differs from ray count");
}

bool QDivisor::is_integral() const {
    for (const Rat& c : coeffs_)
        if (rat_den(c) != 1)
            return false;
    return true;
}

bool QDivisor::is_effective() const {
    for (const Rat& c : coeffs_)
        if (c < 0)
            return false;
    return true;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
    require_same_fan(a, b);
    RatVec c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeff(static_cast<int>(i));
    return QDivisor(a.fan(), std::move(c));
}

QDivisor operator-(const QDivisor& a, const QDivisor& b) {
    require_same_fan(a, b);
    RatVec c(a.coeffs());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b.coeff(static_cast<int>(i));
    return QDivisor(a.fan(), std::move(c));
}

QDivisor operator*(const Rat& s, const QDivisor& d) {
    RatVec c(d.coeffs());
    for (Rat& x : c)
        x *= s;
    return QDivisor(d.fan(), std::move(c));
}

QDivisor round_down(const QDivisor& d) {
    RatVec c(d.coeffs());
    for (Rat& x : c)
        x = Rat(floor_rat(x));
    return QDivisor(d.fan(), std::move(c));
}

QDivisor round_up(const QDivisor& d) {
    RatVec c(d.coeffs());
    for (Rat& x : c)
        x = Rat(ceil_rat(x));
    return QDivisor(d.fan(), std::move(c));
}

QDivisor frac(const QDivisor& d) {
    RatVec c(d.coeffs());
    for (Rat& x : c)
        x = frac_rat(x);
    return QDivisor(d.fan(), std::move(c));
}

QDivisor upper_frac(const QDivisor& d) {
    RatVec c(d.coeffs());
    for (Rat& x : c)
        x = upper_frac_rat(x);
    return QDivisor(d.fan(), std::move(c));
}

QDivisor principal_divisor(const FanPtr& fan, const IntVec& u) {
    if (static_cast<int>(u.size()) != fan->ambient_rank())
        throw ValidationError("principal_divisor: wrong dual vector length");
    RatVec c;
    c.reserve(fan->ray_count());
    for (const IntVec& v : fan->rays())
        c.push_back(Rat(dot(u, v)));
    return QDivisor(fan, std::move(c));
}

QDivisor canonical_divisor(const FanPtr& fan) {
    return QDivisor(fan, RatVec(fan->ray_count(), Rat(-1)));
}

Rat degree_rank1(const QDivisor& d) {
    if (d.fan()->ambient_rank() != 1)
        throw HypothesisError("degree_rank1: fan rank is not 1");
    Rat s = 0;
    for (const Rat& c : d.coeffs())
        s += c;
    return s;
}

ClassGroup class_group(const Fan& f) {
    const int n = f.ray_count();
    const int d = f.ambient_rank();
    IntMat r(n, IntVec(d));
    for (int i = 0; i < n; ++i)
        r[i] = f.rays()[i];
    if (rank_int(r) != d)
        throw HypothesisError("class_group: rays do not span the lattice");

    SnfResult snf = smith_normal_form(r);
    ClassGroup cg;
    const IntMat& u = snf.left_transform;
    for (int i = 0; i < d; ++i) {
        if (snf.diagonal[i] == 0)
            throw std::logic_error("class_group: unexpected zero invariant factor");
        if (snf.diagonal[i] > 1) {
            cg.torsion.push_back(snf.diagonal[i]);
            cg.class_map.push_back(u[i]);
        }
    }
    for (int i = d; i < n; ++i) {
        IntVec row = u[i];
        for (const Int& x : row) {
            if (x > 0) break;
            if (x < 0) {
                for (Int& y : row) y = -y;
                break;
            }
        }
        cg.class_map.push_back(std::move(row));
    }
    cg.free_rank = n - d;
    return cg;
}

DivisorClass divisor_class(const ClassGroup& cg, const QDivisor& d) {
    DivisorClass out;
    const int t = static_cast<int>(cg.torsion.size());
    for (int i = 0; i < t; ++i) {
        Rat v = dot_rat(d.coeffs(), cg.class_map[i]);
        if (rat_den(v) != 1)
            throw HypothesisError(
                "divisor_class: torsion part needs an integral divisor");
        Int m = cg.torsion[i];
        Int res = rat_num(v) % m;
        if (res < 0)
            res += m;
        out.torsion_part.push_back(res);
    }
    for (std::size_t i = t; i < cg.class_map.size(); ++i)
        out.free_part.push_back(dot_rat(d.coeffs(), cg.class_map[i]));
    return out;
}

RatVec support_functional(const QDivisor& d, int k) {
    const Fan& f = *d.fan();
    const std::vector<int>& idx = f.max_cones()[k];
    const int dim = f.ambient_rank();
    if (static_cast<int>(idx.size()) != dim)
        throw HypothesisError(
            "support_functional: max cone is not full-dimensional simplicial");
    RatMat a(dim, RatVec(dim));
    RatVec b(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j)
            a[i][j] = Rat(f.rays()[idx[i]][j]);
        b[i] = -d.coeff(idx[i]);
    }
    RatVec u;
    if (!solve_square(std::move(a), std::move(b), u))
        throw HypothesisError("support_functional: degenerate max cone");
    return u;
}

bool is_cartier(const QDivisor& d) {
    // Needs no smoothness or completeness: support_functional rejects fans
    // whose max cones are not full-dimensional simplicial, and that is the
    // only hypothesis the per-cone integrality test uses.
    const Fan& f = *d.fan();
    Int n = 1;
    for (const Rat& c : d.coeffs())
        n = lcm(n, rat_den(c));
    QDivisor cleared = Rat(n) * d;
    for (int k = 0; k < f.max_cone_count(); ++k) {
        RatVec u = support_functional(cleared, k);
        for (const Rat& x : u)
            if (rat_den(x) != 1)
                return false;
    }
    return true;
}

namespace {

// Wall-crossing convexity of the support function: for each wall, compare
// the linear functional of one side against the opposite cone's off-wall
// ray. Strict inequality everywhere = ample, weak = nef.
bool wall_convexity(const QDivisor& d, bool strict) {
    const Fan& f = *d.fan();
    WallStructure ws = fan_walls(f);
    if (!ws.all_paired)
        throw HypothesisError("wall_convexity: fan is not complete");
    for (const Wall& w : ws.walls) {
        RatVec u = support_functional(d, w.cone_a);
        for (int i : f.max_cones()[w.cone_b]) {
            if (std::find(w.facet_rays.begin(), w.facet_rays.end(), i) !=
                w.facet_rays.end())
                continue;
            Rat val = dot_rat(u, f.rays()[i]);
            if (strict ? (val <= -d.coeff(i)) : (val < -d.coeff(i)))
                return false;
        }
    }
    return true;
}

}  // namespace

bool is_nef(const QDivisor& d) {
    require_smooth(*d.fan(), "is_nef");
    require_complete(*d.fan(), "is_nef");
    return wall_convexity(d, false);
}

bool is_ample(const QDivisor& d) {
    require_smooth(*d.fan(), "is_ample");
    require_complete(*d.fan(), "is_ample");
    return wall_convexity(d, true);
}

Polytope section_polytope(const QDivisor& d) {
    const Fan& f = *d.fan();
    require_complete(f, "section_polytope");
    const int dim = f.ambient_rank();
    const int n = f.ray_count();

    Polytope p;
    for (int i = 0; i < n; ++i) {
        p.normals.push_back(f.rays()[i]);
        p.rhs.push_back(-d.coeff(i));
    }

    // vertices: solutions of full-rank d-subsets of tight inequalities that
    // satisfy the whole system
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(idx.size()) == dim) {
            RatMat a(dim, RatVec(dim));
            RatVec b(dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j)
                    a[i][j] = Rat(p.normals[idx[i]][j]);
                b[i] = p.rhs[idx[i]];
            }
            RatVec u;
            if (solve_square(std::move(a), std::move(b), u)) {
                bool feasible = true;
                for (int i = 0; i < n && feasible; ++i)
                    if (dot_rat(u, p.normals[i]) < p.rhs[i])
                        feasible = false;
                if (feasible)
                    p.vertices.push_back(std::move(u));
            }
            return;
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);

    std::sort(p.vertices.begin(), p.vertices.end());
    p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()),
                     p.vertices.end());
    return p;
}

std::vector<IntVec> lattice_points(const Polytope& p) {
    std::vector<IntVec> out;
    if (p.vertices.empty())
        return out;
    const int dim = static_cast<int>(p.vertices[0].size());
    IntVec lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
        for (const RatVec& v : p.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = floor_rat(mn);
        hi[j] = ceil_rat(mx);
    }
    IntVec u(dim);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == dim) {
            for (std::size_t i = 0; i < p.normals.size(); ++i)
                if (Rat(dot(u, p.normals[i])) < p.rhs[i])
                    return;
            out.push_back(u);
            return;
        }
        for (Int x = lo[pos]; x <= hi[pos]; ++x) {
            u[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Counterclockwise order of the rays of a complete surface fan.
std::vector<int> cyclic_ray_order(const Fan& f) {
    std::vector<int> order(f.ray_count());
    for (int i = 0; i < f.ray_count(); ++i)
        order[i] = i;
    auto half = [&](const IntVec& v) {
        // 0 for the open upper half plane plus positive x-axis, 1 below
        if (v[1] > 0 || (v[1] == 0 && v[0] > 0))
            return 0;
        return 1;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const IntVec& va = f.rays()[a];
        const IntVec& vb = f.rays()[b];
        int ha = half(va), hb = half(vb);
        if (ha != hb)
            return ha < hb;
        Int cross = va[0] * vb[1] - va[1] * vb[0];
        return cross > 0;
    });
    return order;
}

}  // namespace

Rat surface_intersection(const QDivisor& a, const QDivisor& b) {
    require_same_fan(a, b);
    const Fan& f = *a.fan();
    if (f.ambient_rank() != 2)
        throw HypothesisError("surface_intersection: fan rank is not 2");
    require_smooth(f, "surface_intersection");
    require_complete(f, "surface_intersection");

    const int n = f.ray_count();
    std::vector<int> order = cyclic_ray_order(f);

    // self intersections from the wall relations v_{i-1} + v_{i+1} = c_i v_i
    RatMat pairing(n, RatVec(n, Rat(0)));
    for (int pos = 0; pos < n; ++pos) {
        int i = order[pos];
        int prev = order[(pos + n - 1) % n];
        int next = order[(pos + 1) % n];
        const IntVec& vi = f.rays()[i];
        IntVec s = {f.rays()[prev][0] + f.rays()[next][0],
                    f.rays()[prev][1] + f.rays()[next][1]};
        int nz = (vi[0] != 0) ? 0 : 1;
        if (s[nz] % vi[nz] != 0)
            throw HypothesisError("surface_intersection: wall relation failed");
        Int c = s[nz] / vi[nz];
        if (s[1 - nz] != c * vi[1 - nz])
            throw HypothesisError("surface_intersection: wall relation failed");
        pairing[i][i] = Rat(-c);
        pairing[i][next] = 1;
        pairing[next][i] = 1;
    }

    Rat total = 0;
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (int j = 0; j < n; ++j)
            total += a.coeff(i) * b.coeff(j) * pairing[i][j];
    }
    return total;
}

QDivisor pullback(const ToricMorphismData& mor, const QDivisor& d) {
    if (!(*d.fan() == *mor.target))
        throw ValidationError("pullback: divisor does not live on the target fan");
    const Fan& src = *mor.source;
    const Fan& tgt = *mor.target;
    RatVec c;
    c.reserve(src.ray_count());
    for (const IntVec& w : src.rays()) {
        int k = find_max_cone(tgt, w);
        if (k < 0)
            throw ValidationError("pullback: source ray outside target support");
        QDivisor dt(mor.target, d.coeffs());
        RatVec u = support_functional(dt, k);
        c.push_back(-dot_rat(u, w));
    }
    return QDivisor(mor.source, std::move(c));
}

std::vector<int> exceptional_rays(const ToricMorphismData& mor) {
    std::vector<int> out;
    for (int i = 0; i < mor.source->ray_count(); ++i)
        if (mor.target->ray_index(mor.source->rays()[i]) < 0)
            out.push_back(i);
    return out;
}

QDivisor round_up_defect(const ToricMorphismData& mor, const QDivisor& h) {
    QDivisor fh = pullback(mor, h);
    QDivisor defect = round_up(fh) - pullback(mor, round_up(h));

    // the divisor must be supported on the exceptional rays, with the
    // predicted coefficients -[sum_j b_j q_ji]
    std::vector<int> exc = exceptional_rays(mor);
    QDivisor b = upper_frac(h);
    std::vector<std::pair<int, QDivisor>> fractional_pulls;
    for (int j = 0; j < mor.target->ray_count(); ++j) {
        if (b.coeff(j) == 0)
            continue;
        RatVec unit(mor.target->ray_count(), Rat(0));
        unit[j] = 1;
        fractional_pulls.emplace_back(
            j, pullback(mor, QDivisor(mor.target, std::move(unit))));
    }
    for (int i = 0; i < mor.source->ray_count(); ++i) {
        bool exceptional =
            std::find(exc.begin(), exc.end(), i) != exc.end();
        if (!exceptional) {
            if (defect.coeff(i) != 0)
                throw std::logic_error(
                    "round_up_defect: nonzero coefficient on a strict transform");
            continue;
        }
        Rat sum = 0;
        for (const auto& [j, fdj] : fractional_pulls)
            sum += b.coeff(j) * fdj.coeff(i);
        if (defect.coeff(i) != Rat(-floor_rat(sum)))
            throw std::logic_error("round_up_defect: identity violated");
    }
    return defect;
}

}  // namespace toric
