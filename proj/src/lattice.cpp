#include "toric/lattice.hpp"

#include <algorithm>
#include <functional>

namespace toric {

Int gcd_vec(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v)
        g = gcd(g, x);
    return g;  // 0 for the zero vector
}

IntVec primitive(const IntVec& v) {
    Int g = gcd_vec(v);
    if (g == 0)
        throw ValidationError("primitive: zero vector");
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i] / g;
    return out;
}

bool is_primitive(const IntVec& v) { return gcd_vec(v) == 1; }

IntMat mat_identity(int n) {
    IntMat m(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int m = k ? static_cast<int>(b[0].size()) : 0;
    IntMat out(n, IntVec(m, Int(0)));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != k)
            throw ValidationError("mat_mul: shape mismatch");
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0)
                continue;
            for (int l = 0; l < m; ++l)
                out[i][l] += a[i][j] * b[j][l];
        }
    }
    return out;
}

SnfResult smith_normal_form(const IntMat& a) {
    int m = static_cast<int>(a.size());
    if (m == 0)
        throw ValidationError("smith_normal_form: empty matrix");
    int n = static_cast<int>(a[0].size());
    if (n == 0)
        throw ValidationError("smith_normal_form: empty matrix");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            throw ValidationError("smith_normal_form: ragged matrix");

    IntMat s = a;
    IntMat u = mat_identity(m);
    IntMat v = mat_identity(n);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        std::swap(s[i], s[j]);
        std::swap(u[i], u[j]);
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < m; ++r) std::swap(s[r][i], s[r][j]);
        for (int r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
    };
    // row_i -= q * row_t
    auto row_op = [&](int i, int t, const Int& q) {
        for (int j = 0; j < n; ++j) s[i][j] -= q * s[t][j];
        for (int j = 0; j < m; ++j) u[i][j] -= q * u[t][j];
    };
    // col_j -= q * col_t
    auto col_op = [&](int j, int t, const Int& q) {
        for (int r = 0; r < m; ++r) s[r][j] -= q * s[r][t];
        for (int r = 0; r < n; ++r) v[r][j] -= q * v[r][t];
    };
    // row_t += row_i
    auto row_add = [&](int t, int i) {
        for (int j = 0; j < n; ++j) s[t][j] += s[i][j];
        for (int j = 0; j < m; ++j) u[t][j] += u[i][j];
    };

    int limit = std::min(m, n);
    for (int t = 0; t < limit; ++t) {
        // locate any nonzero entry in the trailing block
        bool any = false;
        for (int i = t; i < m && !any; ++i)
            for (int j = t; j < n && !any; ++j)
                if (s[i][j] != 0) any = true;
        if (!any)
            break;

        while (true) {
            // move the minimal-magnitude nonzero entry to the pivot slot
            int bi = -1, bj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (s[i][j] != 0 &&
                        (bi < 0 || abs(s[i][j]) < abs(s[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            swap_rows(t, bi);
            swap_cols(t, bj);
            const Int p = s[t][t];

            bool again = false;
            for (int i = t + 1; i < m; ++i)
                if (s[i][t] % p != 0) {
                    row_op(i, t, s[i][t] / p);
                    again = true;
                }
            for (int j = t + 1; j < n; ++j)
                if (s[t][j] % p != 0) {
                    col_op(j, t, s[t][j] / p);
                    again = true;
                }
            if (again)
                continue;  // smaller remainders exist, repick the pivot

            for (int i = t + 1; i < m; ++i)
                if (s[i][t] != 0) row_op(i, t, s[i][t] / p);
            for (int j = t + 1; j < n; ++j)
                if (s[t][j] != 0) col_op(j, t, s[t][j] / p);

            // enforce d_t | everything left in the block
            bool fixed = false;
            for (int i = t + 1; i < m && !fixed; ++i)
                for (int j = t + 1; j < n && !fixed; ++j)
                    if (s[i][j] % p != 0) {
                        row_add(t, i);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
    }

    for (int t = 0; t < limit; ++t)
        if (s[t][t] < 0) {
            for (int j = 0; j < n; ++j) s[t][j] = -s[t][j];
            for (int j = 0; j < m; ++j) u[t][j] = -u[t][j];
        }

    SnfResult res;
    res.diagonal.resize(limit);
    for (int t = 0; t < limit; ++t)
        res.diagonal[t] = s[t][t];
    res.left_transform = std::move(u);
    res.right_transform = std::move(v);
    return res;
}

namespace {

bool all_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -v[i];
    return out;
}

// Does x lie in the cone of the rows of gens restricted to subset idx?
// Requires the subset rows to be linearly independent.
bool subset_covers(const std::vector<IntVec>& gens, const std::vector<int>& idx,
                   const IntVec& x) {
    int k = static_cast<int>(idx.size());
    int d = static_cast<int>(x.size());
    // Gram system (S S^T) lambda = S x
    RatMat gram(k, RatVec(k));
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j)
            gram[i][j] = Rat(dot(gens[idx[i]], gens[idx[j]]));
        rhs[i] = Rat(dot(gens[idx[i]], x));
    }
    RatVec lambda;
    if (!solve_square(std::move(gram), std::move(rhs), lambda))
        return false;  // dependent subset
    for (const Rat& l : lambda)
        if (l < 0) return false;
    // verify S^T lambda = x (x must actually lie in the span)
    for (int c = 0; c < d; ++c) {
        Rat acc = 0;
        for (int i = 0; i < k; ++i)
            acc += lambda[i] * Rat(gens[idx[i]][c]);
        if (acc != Rat(x[c]))
            return false;
    }
    return true;
}

}  // namespace

bool in_cone(const std::vector<IntVec>& gens, const IntVec& x) {
    if (all_zero(x))
        return true;
    if (gens.empty())
        return false;
    int rg = rank_int(gens);
    {
        IntMat with = gens;
        with.push_back(x);
        if (rank_int(with) > rg)
            return false;  // not even in the span
    }
    int n = static_cast<int>(gens.size());
    int kmax = std::min(rg, n);
    std::vector<int> idx;
    std::function<bool(int, int)> search = [&](int start, int k) {
        if (k == 0)
            return subset_covers(gens, idx, x);
        for (int i = start; i <= n - k; ++i) {
            idx.push_back(i);
            if (search(i + 1, k - 1))
                return true;
            idx.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= kmax; ++k)
        if (search(0, k))
            return true;
    return false;
}

bool in_cone(const std::vector<IntVec>& gens, const RatVec& x) {
    Int l = 1;
    for (const Rat& q : x)
        l = lcm(l, rat_den(q));
    IntVec xi(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Rat scaled = x[i] * Rat(l);
        xi[i] = rat_num(scaled);
    }
    return in_cone(gens, xi);
}

bool cone_contains(const Cone& c, const IntVec& x) {
    if (static_cast<int>(x.size()) != c.ambient_rank())
        throw ValidationError("cone_contains: rank mismatch");
    return in_cone(c.rays(), x);
}

bool cone_contains(const Cone& c, const RatVec& x) {
    if (static_cast<int>(x.size()) != c.ambient_rank())
        throw ValidationError("cone_contains: rank mismatch");
    return in_cone(c.rays(), x);
}

namespace {

std::vector<IntVec> dedupe(std::vector<IntVec> gens) {
    std::vector<IntVec> out;
    for (auto& g : gens)
        if (std::find(out.begin(), out.end(), g) == out.end())
            out.push_back(std::move(g));
    return out;
}

// Remove generators that are non-negative combinations of the rest
// (including the fixed extra generators, which are never removed here).
std::vector<IntVec> prune_generators(std::vector<IntVec> gens,
                                     const std::vector<IntVec>& fixed_extra) {
    gens = dedupe(std::move(gens));
    std::size_t i = 0;
    while (i < gens.size()) {
        std::vector<IntVec> others = fixed_extra;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i)
                others.push_back(gens[j]);
        if (in_cone(others, gens[i]))
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return gens;
}

}  // namespace

Cone Cone::from_rays(int ambient_rank, std::vector<IntVec> rays) {
    if (ambient_rank < 1)
        throw ValidationError("cone: ambient rank must be positive");
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (static_cast<int>(rays[i].size()) != ambient_rank)
            throw ValidationError("cone: ray " + std::to_string(i) +
                                  " has wrong length");
        if (all_zero(rays[i]))
            throw ValidationError("cone: ray " + std::to_string(i) + " is zero");
        if (!is_primitive(rays[i]))
            throw ValidationError("cone: ray " + std::to_string(i) +
                                  " is not primitive");
        for (std::size_t j = 0; j < i; ++j)
            if (rays[j] == rays[i])
                throw ValidationError("cone: duplicate ray " + std::to_string(i));
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < rays.size(); ++j)
            if (j != i)
                others.push_back(rays[j]);
        if (in_cone(others, rays[i]))
            throw ValidationError("cone: ray " + std::to_string(i) +
                                  " is a redundant generator");
    }
    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.rays_ = std::move(rays);
    return c;
}

Cone Cone::unchecked(int ambient_rank, std::vector<IntVec> rays) {
    for (const auto& r : rays)
        if (static_cast<int>(r.size()) != ambient_rank)
            throw ValidationError("cone: ray has wrong length");
    Cone c;
    c.ambient_rank_ = ambient_rank;
    c.rays_ = std::move(rays);
    return c;
}

Cone dual_cone(const Cone& c) {
    const int d = c.ambient_rank();
    if (d < 1)
        throw ValidationError("dual_cone: invalid ambient rank");

    // state: dual so far = span(lin) + cone(rays)
    std::vector<IntVec> lin;
    for (int i = 0; i < d; ++i) {
        IntVec e(d, Int(0));
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<IntVec> rays;

    for (const IntVec& h : c.rays()) {
        int split = -1;
        for (std::size_t k = 0; k < lin.size(); ++k)
            if (dot(lin[k], h) != 0) {
                split = static_cast<int>(k);
                break;
            }
        if (split >= 0) {
            IntVec v0 = lin[split];
            Int s0 = dot(v0, h);
            if (s0 < 0) {
                v0 = negated(v0);
                s0 = -s0;
            }
            std::vector<IntVec> newlin;
            for (std::size_t k = 0; k < lin.size(); ++k) {
                if (static_cast<int>(k) == split)
                    continue;
                Int sk = dot(lin[k], h);
                IntVec w(d);
                for (int j = 0; j < d; ++j)
                    w[j] = s0 * lin[k][j] - sk * v0[j];
                if (!all_zero(w))
                    newlin.push_back(primitive(w));
            }
            std::vector<IntVec> newrays;
            for (const IntVec& r : rays) {
                Int sr = dot(r, h);
                IntVec w(d);
                for (int j = 0; j < d; ++j)
                    w[j] = s0 * r[j] - sr * v0[j];
                if (!all_zero(w))
                    newrays.push_back(primitive(w));
            }
            newrays.push_back(std::move(v0));
            lin = std::move(newlin);
            std::vector<IntVec> pm;
            for (const IntVec& l : lin) {
                pm.push_back(l);
                pm.push_back(negated(l));
            }
            rays = prune_generators(std::move(newrays), pm);
        } else {
            std::vector<IntVec> newrays;
            std::vector<std::size_t> pos, neg;
            for (std::size_t k = 0; k < rays.size(); ++k) {
                Int sk = dot(rays[k], h);
                if (sk >= 0)
                    newrays.push_back(rays[k]);
                if (sk > 0)
                    pos.push_back(k);
                else if (sk < 0)
                    neg.push_back(k);
            }
            for (std::size_t a : pos)
                for (std::size_t b : neg) {
                    Int sa = dot(rays[a], h);
                    Int sb = dot(rays[b], h);
                    IntVec w(d);
                    for (int j = 0; j < d; ++j)
                        w[j] = sa * rays[b][j] - sb * rays[a][j];
                    if (!all_zero(w))
                        newrays.push_back(primitive(w));
                }
            std::vector<IntVec> pm;
            for (const IntVec& l : lin) {
                pm.push_back(l);
                pm.push_back(negated(l));
            }
            rays = prune_generators(std::move(newrays), pm);
        }
    }

    std::vector<IntVec> gens = rays;
    for (const IntVec& l : lin) {
        gens.push_back(l);
        gens.push_back(negated(l));
    }
    gens = prune_generators(std::move(gens), {});
    return Cone::unchecked(d, std::move(gens));
}

Cone intersect_cones(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw ValidationError("intersect_cones: rank mismatch");
    Cone da = dual_cone(a);
    Cone db = dual_cone(b);
    std::vector<IntVec> gens = da.rays();
    for (const IntVec& r : db.rays())
        gens.push_back(r);
    gens = dedupe(std::move(gens));
    return dual_cone(Cone::unchecked(a.ambient_rank(), std::move(gens)));
}

bool is_face_of(const Cone& f, const Cone& c) {
    if (f.ambient_rank() != c.ambient_rank())
        throw ValidationError("is_face_of: rank mismatch");
    const int d = c.ambient_rank();
    for (const IntVec& g : f.rays())
        if (!in_cone(c.rays(), g))
            return false;
    Cone dc = dual_cone(c);
    // u = sum of the dual generators vanishing on all of f; the face of c
    // cut out by u is the smallest face containing f
    IntVec u(d, Int(0));
    for (const IntVec& w : dc.rays()) {
        bool vanishes = true;
        for (const IntVec& g : f.rays())
            if (dot(w, g) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes)
            for (int j = 0; j < d; ++j)
                u[j] += w[j];
    }
    for (const IntVec& r : c.rays())
        if (dot(u, r) == 0 && !in_cone(f.rays(), r))
            return false;
    return true;
}

bool same_cone(const Cone& a, const Cone& b) {
    if (a.ambient_rank() != b.ambient_rank())
        return false;
    for (const IntVec& r : a.rays())
        if (!in_cone(b.rays(), r))
            return false;
    for (const IntVec& r : b.rays())
        if (!in_cone(a.rays(), r))
            return false;
    return true;
}

bool is_strongly_convex(const Cone& c) {
    for (const IntVec& r : c.rays())
        if (in_cone(c.rays(), negated(r)))
            return false;
    return true;
}

bool is_simplicial(const Cone& c) {
    return rank_int(c.rays()) == static_cast<int>(c.ray_count());
}

bool is_smooth_cone(const Cone& c) {
    if (c.ray_count() == 0)
        return true;
    int k = static_cast<int>(c.ray_count());
    if (k > c.ambient_rank())
        return false;
    SnfResult snf = smith_normal_form(c.rays());
    if (static_cast<int>(snf.diagonal.size()) != k)
        return false;
    for (const Int& dgn : snf.diagonal)
        if (dgn != 1)
            return false;
    return true;
}

int cone_dim(const Cone& c) {
    if (c.ray_count() == 0)
        return 0;
    return rank_int(c.rays());
}

}  // namespace toric
