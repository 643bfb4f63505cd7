#include "toric/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <limits>

namespace toric {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

std::string resolve_ref(const std::string& ref, const std::string& base_dir) {
    namespace fs = std::filesystem;
    fs::path p(ref);
    if (p.is_absolute() || fs::exists(p) || base_dir.empty()) return p.string();
    fs::path joined = fs::path(base_dir) / p;
    if (fs::exists(joined)) return joined.string();
    return p.string();
}

std::string dir_of(const std::string& path) {
    return std::filesystem::path(path).parent_path().string();
}

const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::int64_t expect_int64(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError(path + ": cannot open file for writing");
    out << canonical_dump(j);
    if (!out) throw ValidationError(path + ": write failed");
}

Json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) {
        throw ValidationError("integer exceeds the 64-bit serialization range");
    }
    return v.convert_to<std::int64_t>();
}

Int int_from_json(const Json& j, const std::string& where) {
    return Int(expect_int64(j, where));
}

Json rat_to_json(const Rat& q) {
    Json j;
    j["den"] = int_to_json(denominator(q));
    j["num"] = int_to_json(numerator(q));
    return j;
}

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
    if (!j.is_object()) fail(where, "expected an integer or a {den, num} object");
    if (!j.contains("num")) fail(where + "/num", "missing field");
    if (!j.contains("den")) fail(where + "/den", "missing field");
    Int num = int_from_json(j.at("num"), where + "/num");
    Int den = int_from_json(j.at("den"), where + "/den");
    if (den <= 0) fail(where + "/den", "denominator must be positive");
    return make_rat(num, den);
}

Json int_vec_to_json(const IntVec& v) {
    Json j = Json::array();
    for (const Int& x : v) j.push_back(int_to_json(x));
    return j;
}

Json rat_vec_to_json(const RatVec& v) {
    Json j = Json::array();
    for (const Rat& q : v) j.push_back(rat_to_json(q));
    return j;
}

RatVec rat_vec_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    RatVec out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(rat_from_json(j[i], where + "/" + std::to_string(i)));
    }
    return out;
}

Json fan_to_json(const Fan& f) {
    Json j;
    j["rank"] = f.ambient_rank();
    Json rays = Json::array();
    for (const IntVec& r : f.rays()) rays.push_back(int_vec_to_json(r));
    j["rays"] = rays;
    Json cones = Json::array();
    for (const auto& c : f.max_cones()) cones.push_back(c);
    j["max_cones"] = cones;
    return j;
}

FanPtr fan_from_json(const Json& j, const std::string& context) {
    if (!j.is_object()) fail(context, "expected a fan object");
    for (const char* field : {"rank", "rays", "max_cones"}) {
        if (!j.contains(field)) fail(context + "/" + field, "missing field");
    }
    std::int64_t rank = expect_int64(j.at("rank"), context + "/rank");
    if (rank < 1 || rank > 64) fail(context + "/rank", "rank out of range");

    const Json& jrays = expect_array(j.at("rays"), context + "/rays");
    std::vector<IntVec> rays;
    rays.reserve(jrays.size());
    for (std::size_t i = 0; i < jrays.size(); ++i) {
        const std::string where = context + "/rays/" + std::to_string(i);
        const Json& row = expect_array(jrays[i], where);
        IntVec v;
        v.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            v.push_back(int_from_json(row[k], where + "/" + std::to_string(k)));
        }
        rays.push_back(std::move(v));
    }

    const Json& jcones = expect_array(j.at("max_cones"), context + "/max_cones");
    std::vector<std::vector<int>> cones;
    cones.reserve(jcones.size());
    for (std::size_t i = 0; i < jcones.size(); ++i) {
        const std::string where = context + "/max_cones/" + std::to_string(i);
        const Json& row = expect_array(jcones[i], where);
        std::vector<int> c;
        c.reserve(row.size());
        for (std::size_t k = 0; k < row.size(); ++k) {
            std::int64_t idx = expect_int64(row[k], where + "/" + std::to_string(k));
            if (idx < 0 || idx >= static_cast<std::int64_t>(rays.size())) {
                fail(where + "/" + std::to_string(k), "ray index out of range");
            }
            c.push_back(static_cast<int>(idx));
        }
        cones.push_back(std::move(c));
    }

    try {
        return Fan::make(static_cast<int>(rank), std::move(rays), std::move(cones));
    } catch (const ValidationError& e) {
        throw ValidationError(context + ": " + e.what());
    }
}

FanPtr load_fan_file(const std::string& path) {
    return fan_from_json(read_json_file(path), path);
}

namespace {

// Shared handling of a "fan"/"base" entry holding a path or inline object.
FanPtr fan_entry(const Json& j, const std::string& where,
                 const std::string& base_dir) {
    if (j.is_string()) {
        return load_fan_file(resolve_ref(j.get<std::string>(), base_dir));
    }
    if (j.is_object()) return fan_from_json(j, where);
    fail(where, "expected a file path or an inline fan object");
}

}  // namespace

Json divisor_to_json(const QDivisor& d, const std::string& fan_ref) {
    Json j;
    j["coeffs"] = rat_vec_to_json(d.coeffs());
    if (fan_ref.empty()) {
        j["fan"] = fan_to_json(*d.fan());
    } else {
        j["fan"] = fan_ref;
    }
    return j;
}

QDivisor divisor_from_json(const Json& j, const std::string& context,
                           const std::string& base_dir, FanPtr fallback_fan) {
    if (!j.is_object()) fail(context, "expected a divisor object");
    if (!j.contains("coeffs")) fail(context + "/coeffs", "missing field");
    RatVec coeffs = rat_vec_from_json(j.at("coeffs"), context + "/coeffs");

    FanPtr fan;
    if (j.contains("fan")) {
        fan = fan_entry(j.at("fan"), context + "/fan", base_dir);
        if (fallback_fan && !(*fan == *fallback_fan)) {
            fail(context + "/fan", "fan does not match the one supplied on the command line");
        }
    } else if (fallback_fan) {
        fan = std::move(fallback_fan);
    } else {
        fail(context + "/fan", "missing field");
    }

    if (coeffs.size() != static_cast<std::size_t>(fan->ray_count())) {
        fail(context + "/coeffs", "coefficient count does not match the ray count");
    }
    return QDivisor(std::move(fan), std::move(coeffs));
}

QDivisor load_divisor_file(const std::string& path, FanPtr fallback_fan) {
    return divisor_from_json(read_json_file(path), path, dir_of(path),
                             std::move(fallback_fan));
}

Json cover_spec_to_json(const CoverSpec& s, const std::string& fan_ref) {
    Json j;
    if (s.curve_base) {
        j["base"] = Json{{"curve", "P1"}};
    } else if (fan_ref.empty()) {
        j["base"] = fan_to_json(*s.base_fan);
    } else {
        j["base"] = fan_ref;
    }
    j["L_coeffs"] = rat_vec_to_json(s.l_coeffs);
    j["N"] = int_to_json(s.n);
    j["D_coeffs"] = rat_vec_to_json(s.d_coeffs);
    j["p"] = int_to_json(s.p);
    return j;
}

CoverSpec cover_spec_from_json(const Json& j, const std::string& context,
                               const std::string& base_dir) {
    if (!j.is_object()) fail(context, "expected a cover spec object");
    for (const char* field : {"base", "L_coeffs", "N", "D_coeffs", "p"}) {
        if (!j.contains(field)) fail(context + "/" + field, "missing field");
    }
    Int n = int_from_json(j.at("N"), context + "/N");
    Int p = int_from_json(j.at("p"), context + "/p");
    RatVec l = rat_vec_from_json(j.at("L_coeffs"), context + "/L_coeffs");
    RatVec d = rat_vec_from_json(j.at("D_coeffs"), context + "/D_coeffs");

    const Json& base = j.at("base");
    const bool is_curve = base.is_object() && base.contains("curve");
    try {
        if (is_curve) {
            if (!base.at("curve").is_string() ||
                base.at("curve").get<std::string>() != "P1") {
                fail(context + "/base/curve", "only \"P1\" is supported");
            }
            if (l.size() != 1) {
                fail(context + "/L_coeffs", "curve base takes a single degree");
            }
            std::vector<Int> mults;
            mults.reserve(d.size());
            for (std::size_t i = 0; i < d.size(); ++i) {
                if (denominator(d[i]) != 1) {
                    fail(context + "/D_coeffs/" + std::to_string(i),
                         "expected an integer multiplicity");
                }
                mults.push_back(numerator(d[i]));
            }
            if (denominator(l[0]) != 1) {
                fail(context + "/L_coeffs/0", "expected an integer degree");
            }
            return CoverSpec::make_curve(numerator(l[0]), n, std::move(mults), p);
        }
        FanPtr fan = fan_entry(base, context + "/base", base_dir);
        return CoverSpec::make(std::move(fan), std::move(l), n, std::move(d), p);
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        if (msg.rfind(context, 0) == 0) throw;
        throw ValidationError(context + ": " + msg);
    }
}

CoverSpec load_cover_spec_file(const std::string& path) {
    return cover_spec_from_json(read_json_file(path), path, dir_of(path));
}

}  // namespace toric
