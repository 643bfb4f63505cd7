// Acceptance harness: one criterion per line, PASS/FAIL with elapsed time,
// nonzero exit when any criterion fails. Time budgets are enforced where a
// criterion carries one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toric/cover.hpp"

using namespace toric;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

IntVec iv(std::initializer_list<long> v) {
    IntVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

QDivisor unit_divisor(const FanPtr& f, int i) {
    RatVec c(f->ray_count(), Rat(0));
    c[i] = 1;
    return QDivisor(f, c);
}

QDivisor int_divisor(const FanPtr& f, const std::vector<long>& v) {
    RatVec c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return QDivisor(f, c);
}

std::vector<Int> ones(std::size_t k) { return std::vector<Int>(k, Int(1)); }

FanPtr blowup_fan(int centers) {
    FanPtr f = star_subdivision(projective_space(2), iv({1, 1}));
    if (centers == 2) f = star_subdivision(f, iv({-1, 0}));
    return f;
}

// The surface fixtures with a strictly ample seed divisor each.
struct SurfaceFixture {
    std::string name;
    FanPtr fan;
    std::vector<long> ample_seed;
};

std::vector<SurfaceFixture> surface_fixtures() {
    std::vector<SurfaceFixture> out;
    out.push_back({"p2", projective_space(2), {1, 0, 0}});
    out.push_back({"p1xp1", product(projective_space(1), projective_space(1)),
                   {1, 0, 1, 0}});
    for (int n = 0; n <= 4; ++n) {
        out.push_back({"f" + std::to_string(n), hirzebruch(n), {1, 0, 0, 1}});
    }
    out.push_back({"blowup1", blowup_fan(1), {1, 1, 1, 1}});
    out.push_back({"blowup2", blowup_fan(2), {1, 1, 1, 1, 1}});
    return out;
}

// Rejection-sampled ample Q-divisor: seed multiple plus a fractional
// perturbation with denominators at most 6.
QDivisor sample_ample(const SurfaceFixture& fx, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> den_num(-6, 6);
    long scale = 3;
    for (int attempt = 0; attempt < 2000; ++attempt) {
        if (attempt > 0 && attempt % 50 == 0) ++scale;
        RatVec c(fx.fan->ray_count());
        for (std::size_t i = 0; i < c.size(); ++i) {
            int d = den(rng);
            int n = den_num(rng) % (2 * d + 1);
            c[i] = Rat(scale * fx.ample_seed[i]) + make_rat(n, d);
        }
        QDivisor h(fx.fan, c);
        if (is_ample(h)) return h;
    }
    throw Failure("could not sample an ample divisor on " + fx.name);
}

std::vector<long> zeros(std::size_t n) { return std::vector<long>(n, 0); }

// --- criteria ---------------------------------------------------------

void ac_ruled_identities() {
    for (int n : {0, 2, 4}) {
        FanPtr f = hirzebruch(n);
        ClassGroup cg = class_group(*f);
        QDivisor fib = unit_divisor(f, 0);
        QDivisor e1 = unit_divisor(f, 1);
        QDivisor e2 = unit_divisor(f, 3);
        require(divisor_class(cg, e2) == divisor_class(cg, e1 + Rat(n) * fib),
                "section class relation failed at n = " + std::to_string(n));
        require(surface_intersection(e1, e1) == Rat(-n),
                "negative section self-intersection failed at n = " +
                    std::to_string(n));
        require(surface_intersection(e2, e2) == Rat(n),
                "positive section self-intersection failed at n = " +
                    std::to_string(n));
        require(surface_intersection(e1, e2) == Rat(0),
                "disjoint sections intersect at n = " + std::to_string(n));
    }
}

void ac_ruled_cover_pipeline() {
    FanPtr f2 = hirzebruch(2);
    RatVec l = {Rat(1), Rat(1), Rat(0), Rat(0)};
    RatVec d = {Rat(0), Rat(1), Rat(0), Rat(1)};
    CoverSpec s = CoverSpec::make(f2, l, Int(2), d, Int(3));

    ClassGroup cg = class_group(*f2);
    require(divisor_class(cg, Rat(2) * QDivisor(f2, l)) ==
                divisor_class(cg, QDivisor(f2, d)),
            "double root class does not match the branch class");
    require(smooth_branch_check(s), "branch locus is not smooth");
    CoverLiftReport rep = lift_cover(s);
    require(rep.base_lift_ok, "base lift failed");
    require(rep.section_witness.surjective, "section reduction not surjective");
    require(rep.canonical_section_lifts, "canonical section does not lift");
    require(rep.ok, "cover lift report is not valid");
}

void ac_projective_cover_degrees() {
    const long primes[] = {2, 3, 5, 7, 11, 13};
    for (int n = 1; n <= 4; ++n) {
        FanPtr pn = projective_space(n);
        for (long cover_deg = 1; cover_deg <= 12; ++cover_deg) {
            Int p = 0;
            for (long q : primes) {
                if (gcd(Int(cover_deg), Int(q)) == 1) {
                    p = q;
                    break;
                }
            }
            RatVec l(static_cast<std::size_t>(n) + 1, Rat(0));
            l[0] = 1;
            RatVec d(static_cast<std::size_t>(n) + 1, Rat(0));
            d[0] = cover_deg;
            CoverSpec s = CoverSpec::make(pn, l, Int(cover_deg), d, p);
            CanonicalCover cc = canonical_and_general_type(s);
            const std::string tag = " at n = " + std::to_string(n) +
                                    ", N = " + std::to_string(cover_deg);
            require(cc.has_degree, "no canonical degree" + tag);
            require(cc.degree == Rat(cover_deg - (n + 2)),
                    "canonical degree mismatch" + tag);
            require(cc.general_type == (cover_deg > n + 2),
                    "general-type flag mismatch" + tag);
        }
    }
}

void ac_vanishing_ranges() {
    for (const SurfaceFixture& fx : surface_fixtures()) {
        std::mt19937_64 rng(811 + fx.fan->ray_count());
        for (int trial = 0; trial < 50; ++trial) {
            QDivisor h = sample_ample(fx, rng);
            for (long p : {2L, 3L, 5L}) {
                KvVanishingReport rep = verify_kv_vanishing(h, Int(p));
                const std::string tag = " on " + fx.name + ", trial " +
                                        std::to_string(trial) + ", p = " +
                                        std::to_string(p);
                require(rep.claimed_pass, "claimed range failed" + tag);
                require(rep.log_claimed_pass, "log claimed range failed" + tag);
                for (int i = 1; i <= 2; ++i) {
                    require(rep.h_canonical[i] == 0 &&
                                rep.h_canonical_char0[i] == 0,
                            "h^" + std::to_string(i) +
                                "(K + ceil H) nonzero" + tag);
                }
                for (int i = 0; i < 2; ++i) {
                    require(rep.h_log[i] == 0 && rep.h_log_char0[i] == 0,
                            "h^" + std::to_string(i) + "(-ceil H) nonzero" +
                                tag);
                }
            }
        }
    }
}

void ac_cohomology_engine() {
    std::vector<FanPtr> fans = {projective_space(1), projective_space(2),
                                projective_space(3),
                                product(projective_space(1), projective_space(1)),
                                hirzebruch(0), hirzebruch(1), hirzebruch(2),
                                hirzebruch(3), hirzebruch(4), blowup_fan(1),
                                blowup_fan(2)};
    std::vector<CechCover> covers;
    covers.reserve(fans.size());
    for (const FanPtr& f : fans) covers.push_back(make_cech_cover(*f));

    std::mt19937_64 rng(20240614);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int inst = 0; inst < 200; ++inst) {
        const std::size_t which = static_cast<std::size_t>(inst) % fans.size();
        const FanPtr& f = fans[which];
        const int dim = f->ambient_rank();
        RatVec c(f->ray_count());
        for (auto& x : c) x = Rat(entry(rng));
        QDivisor d(f, c);
        const Int p = (inst % 2 == 0) ? 2 : 3;
        const std::string tag = " (instance " + std::to_string(inst) + ")";

        CohomologyPair pair = cohomology_tables(d, p);
        for (const IntVec& u : candidate_weights(d, 1)) {
            auto expected = [&](const CohomologyTable& t) {
                auto it = t.per_weight.find(u);
                return it == t.per_weight.end()
                           ? zeros(static_cast<std::size_t>(dim) + 1)
                           : it->second;
            };
            require(cech_weight_dims(covers[which], d, u, Int(0)) ==
                        expected(pair.char0),
                    "Cech disagrees with the weight complex in char 0" + tag);
            require(cech_weight_dims(covers[which], d, u, p) ==
                        expected(pair.charp),
                    "Cech disagrees with the weight complex in char p" + tag);
        }

        QDivisor kd = canonical_divisor(f) - d;
        CohomologyPair dual = cohomology_tables(kd, p);
        for (int i = 0; i <= dim; ++i) {
            require(pair.char0.h[i] == dual.char0.h[dim - i],
                    "Serre duality failed in char 0" + tag);
            require(pair.charp.h[i] == dual.charp.h[dim - i],
                    "Serre duality failed in char p" + tag);
        }

        if (dim == 2) {
            Int chi = oracles::euler(pair.char0.h);
            Rat rr = Rat(1) +
                     surface_intersection(d, d - canonical_divisor(f)) / 2;
            require(Rat(chi) == rr, "Riemann-Roch failed" + tag);
        }
    }
}

void ac_plane_sections() {
    FanPtr p2 = projective_space(2);
    for (long deg = 0; deg <= 8; ++deg) {
        QDivisor d = Rat(deg) * unit_divisor(p2, 2);
        long expected = (deg + 1) * (deg + 2) / 2;
        require(h0(d) == expected,
                "section count failed at degree " + std::to_string(deg));
        require(static_cast<long>(lattice_points(section_polytope(d)).size()) ==
                    expected,
                "polytope point count failed at degree " + std::to_string(deg));
    }
}

void ac_witt_ring() {
    for (long pl : {2L, 3L, 5L, 7L}) {
        const Int p(pl);
        const std::string tag = " at p = " + std::to_string(pl);
        std::vector<WittScalar> all;
        for (Int a0 = 0; a0 < p; ++a0)
            for (Int a1 = 0; a1 < p; ++a1) all.emplace_back(p, a0, a1);
        const WittScalar zero = WittScalar::zero(p);
        const WittScalar one = WittScalar::one(p);

        for (const WittScalar& x : all) {
            require(witt_add(x, zero) == x, "additive identity failed" + tag);
            require(witt_mul(x, one) == x, "multiplicative identity failed" + tag);
            require(witt_add(x, witt_neg(x)) == zero,
                    "additive inverse failed" + tag);
            for (const WittScalar& y : all) {
                require(witt_add(x, y) == witt_add(y, x),
                        "addition is not commutative" + tag);
                require(witt_mul(x, y) == witt_mul(y, x),
                        "multiplication is not commutative" + tag);
                for (const WittScalar& z : all) {
                    require(witt_add(witt_add(x, y), z) ==
                                witt_add(x, witt_add(y, z)),
                            "addition is not associative" + tag);
                    require(witt_mul(witt_mul(x, y), z) ==
                                witt_mul(x, witt_mul(y, z)),
                            "multiplication is not associative" + tag);
                    require(witt_mul(x, witt_add(y, z)) ==
                                witt_add(witt_mul(x, y), witt_mul(x, z)),
                            "distributivity failed" + tag);
                }
            }
        }

        // search for the isomorphism with Z/p^2: the additive orbit of one
        const long psq = pl * pl;
        std::vector<WittScalar> orbit;
        WittScalar cur = zero;
        for (long k = 0; k < psq; ++k) {
            for (const WittScalar& seen : orbit) {
                require(!(seen == cur), "additive orbit collapsed early" + tag);
            }
            orbit.push_back(cur);
            cur = witt_add(cur, one);
        }
        require(cur == zero, "additive order of one is not p^2" + tag);
        for (long a = 0; a < psq; ++a) {
            for (long b = 0; b < psq; ++b) {
                require(witt_mul(orbit[static_cast<std::size_t>(a)],
                                 orbit[static_cast<std::size_t>(b)]) ==
                            orbit[static_cast<std::size_t>((a * b) % psq)],
                        "orbit multiplication is not integer multiplication" +
                            tag);
            }
        }

        // exactness: the multiplication-by-p lift hits exactly the kernel of
        // the reduction, injectively
        std::vector<WittScalar> image;
        for (Int a = 0; a < p; ++a) {
            WittScalar lifted = lift_p(p, a);
            require(reduction_r(lifted) == 0,
                    "lift does not land in the kernel" + tag);
            for (const WittScalar& seen : image) {
                require(!(seen == lifted), "lift is not injective" + tag);
            }
            image.push_back(lifted);
        }
        for (const WittScalar& x : all) {
            bool in_kernel = reduction_r(x) == 0;
            bool in_image = false;
            for (const WittScalar& y : image) in_image = in_image || y == x;
            require(in_kernel == in_image,
                    "kernel of the reduction differs from the lift image" + tag);
        }
    }
}

void ac_lift_certificates() {
    std::vector<std::pair<std::string, FanPtr>> fans;
    fans.emplace_back("p2", projective_space(2));
    fans.emplace_back("p3", projective_space(3));
    for (int n = 0; n <= 4; ++n)
        fans.emplace_back("f" + std::to_string(n), hirzebruch(n));
    fans.emplace_back("blowup1", blowup_fan(1));
    fans.emplace_back("blowup2", blowup_fan(2));

    for (const auto& [name, fan] : fans) {
        std::vector<QDivisor> family = default_effective_family(fan, 20, 2026);
        for (long p : {2L, 3L, 5L}) {
            LiftCertificate cert =
                strong_lifting_certificate(fan, Int(p), family);
            const std::string tag = " on " + name + " at p = " +
                                    std::to_string(p);
            require(cert.picard_lift_ok, "generator lift failed" + tag);
            require(cert.section_surjectivity_ok,
                    "section surjectivity failed" + tag);
            require(cert.valid(), "certificate invalid" + tag);
            require(cert.generator_lifts.size() ==
                        static_cast<std::size_t>(fan->ray_count()),
                    "wrong generator count" + tag);
            require(cert.section_witnesses.size() == family.size(),
                    "wrong witness count" + tag);
        }
    }
}

void ac_pullback_rounding() {
    FanPtr p2 = projective_space(2);
    std::vector<ToricMorphismData> morphisms = {
        toric_morphism(blowup_fan(1), p2), toric_morphism(blowup_fan(2), p2)};

    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<int> small(-4, 4);

    for (int inst = 0; inst < 200; ++inst) {
        const ToricMorphismData& mor = morphisms[inst % 2];
        const std::string tag = " (instance " + std::to_string(inst) + ")";
        RatVec c(3);
        for (auto& x : c) x = make_rat(num(rng), den(rng));
        QDivisor h(p2, c);

        QDivisor defect = round_up_defect(mor, h);
        QDivisor lhs = round_up(pullback(mor, h));
        QDivisor rhs = pullback(mor, round_up(h)) + defect;
        require(lhs == rhs, "rounding identity failed" + tag);

        std::vector<int> exceptional = exceptional_rays(mor);
        QDivisor pulled_frac = pullback(mor, upper_frac(h));
        for (int i = 0; i < mor.source->ray_count(); ++i) {
            bool is_exc = false;
            for (int e : exceptional) is_exc = is_exc || e == i;
            if (is_exc) {
                require(defect.coeff(i) ==
                            Rat(-floor_rat(pulled_frac.coeff(i))),
                        "defect coefficient mismatch" + tag);
            } else {
                require(defect.coeff(i) == 0,
                        "defect supported off the exceptional locus" + tag);
            }
        }

        // integral pullbacks meet the exceptional curves trivially and
        // preserve intersection numbers
        RatVec ai(3), bi(3);
        for (auto& x : ai) x = Rat(small(rng));
        for (auto& x : bi) x = Rat(small(rng));
        QDivisor a(p2, ai), b(p2, bi);
        QDivisor pa = pullback(mor, a), pb = pullback(mor, b);
        for (int e : exceptional) {
            require(surface_intersection(pa, unit_divisor(mor.source, e)) == 0,
                    "pullback meets an exceptional curve" + tag);
        }
        require(surface_intersection(pa, pb) == surface_intersection(a, b),
                "intersection numbers not preserved" + tag);
    }
}

void ac_curve_cover_genus() {
    for (long b : {4L, 6L, 8L, 10L, 12L}) {
        CoverSpec s = CoverSpec::make_curve(Int(b / 2), Int(2),
                                            ones(static_cast<std::size_t>(b)),
                                            Int(3));
        CoverReport rep = cover_invariants(s);
        const std::string tag = " for the double cover with " +
                                std::to_string(b) + " branch points";
        require(rep.has_genus, "no genus" + tag);
        require(rep.genus ==
                    oracles::hurwitz_genus(Int(2),
                                           ones(static_cast<std::size_t>(b))),
                "genus differs from the Hurwitz count" + tag);
        require(rep.genus == b / 2 - 1, "genus has the wrong closed form" + tag);
        require(rep.h0 == 1, "cover is not connected" + tag);
    }
    for (long b : {3L, 6L, 9L, 12L}) {
        CoverSpec s = CoverSpec::make_curve(Int(b / 3), Int(3),
                                            ones(static_cast<std::size_t>(b)),
                                            Int(5));
        CoverReport rep = cover_invariants(s);
        const std::string tag = " for the triple cover with " +
                                std::to_string(b) + " branch points";
        require(rep.genus ==
                    oracles::hurwitz_genus(Int(3),
                                           ones(static_cast<std::size_t>(b))),
                "genus differs from the Hurwitz count" + tag);
        require(rep.genus == b - 2, "genus has the wrong closed form" + tag);
    }
}

struct Criterion {
    const char* id;
    const char* desc;
    long budget_ms;  // 0 = no stated budget
    std::function<void()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC-01", "ruled surface section classes and intersection numbers",
         1000, ac_ruled_identities},
        {"AC-02", "ruled surface double-cover pipeline at p = 3", 1000,
         ac_ruled_cover_pipeline},
        {"AC-03", "projective-space cover canonical degrees and type flags",
         1000, ac_projective_cover_degrees},
        {"AC-04", "vanishing ranges for sampled ample divisors, p in {2,3,5}",
         60000, ac_vanishing_ranges},
        {"AC-05", "Cech oracle agreement, Serre duality, Riemann-Roch", 120000,
         ac_cohomology_engine},
        {"AC-06", "plane section counts by polytope enumeration", 0,
         ac_plane_sections},
        {"AC-07", "Witt ring axioms, Z/p^2 isomorphism, exact reduction", 10000,
         ac_witt_ring},
        {"AC-08", "strong-liftability certificates across the fixture fans",
         30000, ac_lift_certificates},
        {"AC-09", "pullback rounding defect and intersection preservation",
         10000, ac_pullback_rounding},
        {"AC-10", "curve cyclic cover genus versus the Hurwitz count", 0,
         ac_curve_cover_genus},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string reason;
        try {
            c.run();
        } catch (const std::exception& e) {
            reason = e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        const long ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
                .count());
        if (reason.empty() && c.budget_ms > 0 && ms > c.budget_ms) {
            reason = "time budget exceeded (" + std::to_string(ms) + " ms > " +
                     std::to_string(c.budget_ms) + " ms)";
        }
        if (reason.empty()) {
            std::printf("%s  PASS  %6ld ms  %s\n", c.id, ms, c.desc);
        } else {
            std::printf("%s  FAIL  %6ld ms  %s :: %s\n", c.id, ms, c.desc,
                        reason.c_str());
            ++failed;
        }
        std::fflush(stdout);
    }
    if (failed == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    } else {
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed,
                    criteria.size());
    }
    return failed == 0 ? 0 : 1;
}
