#include "toric/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>

namespace toric {

namespace {

void require_table_preconditions(const QDivisor& d, const char* op) {
    const Fan& f = *d.fan();
    if (f.ambient_rank() > 3)
        throw HypothesisError(std::string(op) + ": unsupported rank " +
                              std::to_string(f.ambient_rank()));
    if (!is_smooth(f))
        throw HypothesisError(std::string(op) + ": fan is not smooth");
    if (!is_complete(f))
        throw HypothesisError(std::string(op) + ": fan is not complete");
    if (!d.is_integral())
        throw HypothesisError(std::string(op) + ": divisor is not integral");
}

// rank over Q and over F_p of an integer matrix, from one SNF
std::pair<int, int> snf_ranks(const IntMat& m, const Int& p) {
    if (m.empty() || m[0].empty())
        return {0, 0};
    SnfResult snf = smith_normal_form(m);
    int rq = 0, rp = 0;
    for (const Int& x : snf.diagonal) {
        if (x != 0)
            ++rq;
        if (p != 0 && x % p != 0)
            ++rp;
    }
    return {rq, rp};
}

}  // namespace

long h0(const QDivisor& d) { return static_cast<long>(h0_basis(d).size()); }

std::vector<IntVec> h0_basis(const QDivisor& d) {
    if (!d.is_integral())
        throw HypothesisError("h0: divisor is not integral; round first");
    return lattice_points(section_polytope(d));
}

WeightComplex weight_complex(const QDivisor& d, const IntVec& u) {
    const Fan& f = *d.fan();
    WeightComplex wc;
    wc.weight = u;
    for (int i = 0; i < f.ray_count(); ++i)
        if (Rat(dot(u, f.rays()[i])) < -d.coeff(i))
            wc.negative_rays.push_back(i);

    // faces: subsets of N_u spanning a cone; on a simplicial fan this means
    // subsets of some max cone's ray set
    std::vector<std::vector<std::vector<int>>> faces;
    for (const auto& mc : f.max_cones()) {
        std::vector<int> t;
        for (int i : mc)
            if (std::binary_search(wc.negative_rays.begin(),
                                   wc.negative_rays.end(), i))
                t.push_back(i);
        const int k = static_cast<int>(t.size());
        for (int mask = 1; mask < (1 << k); ++mask) {
            std::vector<int> face;
            for (int b = 0; b < k; ++b)
                if (mask & (1 << b))
                    face.push_back(t[b]);
            const int dim = static_cast<int>(face.size()) - 1;
            if (dim >= static_cast<int>(faces.size()))
                faces.resize(dim + 1);
            faces[dim].push_back(std::move(face));
        }
    }
    for (auto& level : faces) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    wc.faces_by_dim = std::move(faces);
    return wc;
}

WeightDims weight_dims(const WeightComplex& wc, int ambient_rank, const Int& p) {
    const int top = static_cast<int>(wc.faces_by_dim.size());  // dims 0..top-1

    // boundary matrices of the augmented chain complex; b[k] maps k-faces to
    // (k-1)-faces, with b[0] the augmentation row
    std::vector<std::pair<int, int>> ranks(top + 1, {0, 0});
    std::vector<IntMat> boundary(top);
    if (top > 0) {
        boundary[0] = IntMat(1, IntVec(wc.faces_by_dim[0].size(), Int(1)));
        for (int k = 1; k < top; ++k) {
            const auto& rows = wc.faces_by_dim[k - 1];
            const auto& cols = wc.faces_by_dim[k];
            IntMat b(rows.size(), IntVec(cols.size(), Int(0)));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const std::vector<int>& face = cols[c];
                for (std::size_t j = 0; j < face.size(); ++j) {
                    std::vector<int> sub = face;
                    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                    auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                    b[static_cast<std::size_t>(it - rows.begin())][c] =
                        (j % 2 == 0) ? 1 : -1;
                }
            }
            boundary[k] = std::move(b);
        }
        for (int k = 0; k < top; ++k)
            ranks[k] = snf_ranks(boundary[k], p);
    }

    auto faces_at = [&](int k) -> long {
        if (k < 0)
            return 1;  // the empty face
        if (k >= top)
            return 0;
        return static_cast<long>(wc.faces_by_dim[k].size());
    };
    auto rank_at = [&](int k, bool charp) -> long {
        if (k < 0 || k >= top)
            return 0;
        return charp ? ranks[k].second : ranks[k].first;
    };

    WeightDims out;
    out.char0.assign(ambient_rank + 1, 0);
    out.charp.assign(ambient_rank + 1, 0);
    for (int i = 0; i <= ambient_rank; ++i) {
        const int k = i - 1;  // reduced homology degree
        out.char0[i] = faces_at(k) - rank_at(k, false) - rank_at(k + 1, false);
        out.charp[i] = faces_at(k) - rank_at(k, true) - rank_at(k + 1, true);
    }
    return out;
}

std::vector<IntVec> candidate_weights(const QDivisor& d, int padding) {
    const Fan& f = *d.fan();
    const int dim = f.ambient_rank();
    const int n = f.ray_count();

    std::vector<RatVec> vertices;
    std::vector<int> idx;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(idx.size()) == dim) {
            RatMat a(dim, RatVec(dim));
            RatVec b(dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = 0; j < dim; ++j)
                    a[i][j] = Rat(f.rays()[idx[i]][j]);
                b[i] = -d.coeff(idx[i]);
            }
            RatVec u;
            if (solve_square(std::move(a), std::move(b), u))
                vertices.push_back(std::move(u));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    if (vertices.empty())
        throw HypothesisError("candidate_weights: arrangement has no vertices");

    IntVec lo(dim), hi(dim);
    for (int j = 0; j < dim; ++j) {
        Rat mn = vertices[0][j], mx = vertices[0][j];
        for (const RatVec& v : vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = floor_rat(mn) - padding;
        hi[j] = ceil_rat(mx) + padding;
    }
    std::vector<IntVec> out;
    IntVec u(dim);
    std::function<void(int)> enumerate = [&](int pos) {
        if (pos == dim) {
            out.push_back(u);
            return;
        }
        for (Int x = lo[pos]; x <= hi[pos]; ++x) {
            u[pos] = x;
            enumerate(pos + 1);
        }
    };
    enumerate(0);
    return out;
}

namespace {

int thread_count() {
    const char* env = std::getenv("TORLIFT_THREADS");
    if (!env)
        return 1;
    int n = std::atoi(env);
    return n >= 1 ? n : 1;
}

}  // namespace

CohomologyPair cohomology_tables(const QDivisor& d, const Int& p, int padding) {
    require_table_preconditions(d, "cohomology_table");
    const int dim = d.fan()->ambient_rank();
    std::vector<IntVec> weights = candidate_weights(d, padding);

    std::vector<WeightDims> dims(weights.size());
    const int threads = thread_count();
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            dims[i] = weight_dims(weight_complex(d, weights[i]), dim, p);
    };
    if (threads <= 1 || weights.size() < 2) {
        work(0, weights.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (weights.size() + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(weights.size(), begin + chunk);
            if (begin < end)
                pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool)
            th.join();
    }

    CohomologyPair pair;
    pair.char0.characteristic = 0;
    pair.charp.characteristic = p;
    pair.char0.h.assign(dim + 1, 0);
    pair.charp.h.assign(dim + 1, 0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        bool nz0 = false, nzp = false;
        for (int j = 0; j <= dim; ++j) {
            pair.char0.h[j] += dims[i].char0[j];
            pair.charp.h[j] += dims[i].charp[j];
            nz0 = nz0 || dims[i].char0[j] != 0;
            nzp = nzp || dims[i].charp[j] != 0;
        }
        if (nz0)
            pair.char0.per_weight[weights[i]] = dims[i].char0;
        if (nzp)
            pair.charp.per_weight[weights[i]] = dims[i].charp;
    }
    return pair;
}

CohomologyTable cohomology_table(const QDivisor& d, const Int& characteristic,
                                 int padding) {
    if (characteristic == 0) {
        CohomologyPair pair = cohomology_tables(d, 2, padding);
        return pair.char0;
    }
    CohomologyPair pair = cohomology_tables(d, characteristic, padding);
    return pair.charp;
}

CechCover make_cech_cover(const Fan& f) {
    CechCover cover;
    cover.cone_count = f.max_cone_count();
    const int m = cover.cone_count;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> subset;
        for (int b = 0; b < m; ++b)
            if (mask & (1 << b))
                subset.push_back(b);
        Cone inter = f.cone(subset[0]);
        for (std::size_t j = 1; j < subset.size(); ++j)
            inter = intersect_cones(inter, f.cone(subset[j]));
        std::vector<int> rays_in;
        for (int i = 0; i < f.ray_count(); ++i)
            if (in_cone(inter.rays(), f.rays()[i]))
                rays_in.push_back(i);
        cover.strata.emplace_back(std::move(subset), std::move(rays_in));
    }
    return cover;
}

std::vector<long> cech_weight_dims(const CechCover& cover, const QDivisor& d,
                                   const IntVec& u, const Int& characteristic) {
    const Fan& f = *d.fan();
    const int dim = f.ambient_rank();

    // admissible strata per degree: subset S of size q+1 contributes to
    // degree q iff u is non-negative on every ray of the intersection cone
    std::vector<std::vector<std::vector<int>>> adm(cover.cone_count);
    for (const auto& [subset, rays_in] : cover.strata) {
        bool ok = true;
        for (int i : rays_in)
            if (Rat(dot(u, f.rays()[i])) < -d.coeff(i)) {
                ok = false;
                break;
            }
        if (ok)
            adm[subset.size() - 1].push_back(subset);
    }
    for (auto& level : adm)
        std::sort(level.begin(), level.end());

    // coboundary matrices d_q : degree q -> degree q+1 by deleting one cone
    // index from the larger subset
    std::vector<std::pair<int, int>> ranks(cover.cone_count, {0, 0});
    for (int q = 0; q + 1 < cover.cone_count; ++q) {
        const auto& rows = adm[q + 1];
        const auto& cols = adm[q];
        if (rows.empty() || cols.empty()) {
            ranks[q + 1] = {0, 0};
            continue;
        }
        IntMat m(rows.size(), IntVec(cols.size(), Int(0)));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const std::vector<int>& t = rows[r];
            for (std::size_t j = 0; j < t.size(); ++j) {
                std::vector<int> sub = t;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
                auto it = std::lower_bound(cols.begin(), cols.end(), sub);
                if (it != cols.end() && *it == sub)
                    m[r][static_cast<std::size_t>(it - cols.begin())] =
                        (j % 2 == 0) ? 1 : -1;
            }
        }
        ranks[q + 1] = snf_ranks(m, characteristic == 0 ? Int(2) : characteristic);
        if (characteristic == 0)
            ranks[q + 1].second = ranks[q + 1].first;
    }

    auto rank_at = [&](int q) -> long {
        if (q < 1 || q >= cover.cone_count)
            return 0;
        return characteristic == 0 ? ranks[q].first : ranks[q].second;
    };

    std::vector<long> h(dim + 1, 0);
    for (int q = 0; q < cover.cone_count; ++q) {
        long val = static_cast<long>(adm[q].size()) - rank_at(q) - rank_at(q + 1);
        if (q <= dim) {
            h[q] = val;
        } else if (val != 0) {
            throw std::logic_error(
                "cech_weight_dims: nonzero cohomology beyond the dimension");
        }
    }
    return h;
}

std::vector<long> cech_oracle(const QDivisor& d, const IntVec& u,
                              const Int& characteristic) {
    require_table_preconditions(d, "cech_oracle");
    CechCover cover = make_cech_cover(*d.fan());
    return cech_weight_dims(cover, d, u, characteristic);
}

KvVanishingReport verify_kv_vanishing(const QDivisor& h, const Int& p) {
    if (!is_ample(h))
        throw HypothesisError("verify_kv_vanishing: H is not ample");
    const int dim = h.fan()->ambient_rank();

    KvVanishingReport rep;
    rep.p = p;
    QDivisor kplus = canonical_divisor(h.fan()) + round_up(h);
    CohomologyPair a = cohomology_tables(kplus, p);
    rep.h_canonical = a.charp.h;
    rep.h_canonical_char0 = a.char0.h;

    QDivisor neg = Rat(-1) * round_up(h);
    CohomologyPair b = cohomology_tables(neg, p);
    rep.h_log = b.charp.h;
    rep.h_log_char0 = b.char0.h;

    const int inf_dp = static_cast<int>(std::min(Int(dim), p).convert_to<long>());
    rep.claimed_threshold = dim - inf_dp;
    rep.claimed_pass = true;
    for (int i = rep.claimed_threshold + 1; i <= dim; ++i)
        if (rep.h_canonical[i] != 0)
            rep.claimed_pass = false;
    rep.log_claimed_pass = true;
    for (int i = 0; i < inf_dp; ++i)
        if (rep.h_log[i] != 0)
            rep.log_claimed_pass = false;
    for (int i = 0; i <= dim; ++i)
        if (rep.h_canonical[i] == 0)
            rep.observed_vanishing.push_back(i);
    rep.characteristic_sensitive = rep.h_canonical != rep.h_canonical_char0 ||
                                   rep.h_log != rep.h_log_char0;
    return rep;
}

}  // namespace toric
