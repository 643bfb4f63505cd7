#ifndef TORIC_JSON_IO_HPP
#define TORIC_JSON_IO_HPP

#include "json.hpp"
#include "toric/cover.hpp"

namespace toric {

using Json = nlohmann::json;

// Canonical form: two-space indentation, alphabetically ordered keys,
// trailing newline. Re-serializing a parsed canonical file is byte-stable.
std::string canonical_dump(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Integers are serialized as JSON numbers and must fit in 64 bits.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j, const std::string& where);

// Rationals as {"den": d, "num": n} with d > 0 and gcd(n, d) = 1; plain
// integers are accepted on input.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j, const std::string& where);

Json int_vec_to_json(const IntVec& v);
Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j, const std::string& where);

// Fan files: {"max_cones": [[i,...],...], "rank": d, "rays": [[n,...],...]}
// with 0-based ray indices.
Json fan_to_json(const Fan& f);
FanPtr fan_from_json(const Json& j, const std::string& context);
FanPtr load_fan_file(const std::string& path);

// Divisor files: {"coeffs": [...], "fan": <file path or inline fan>}. The
// fan entry may be omitted when the caller supplies one; if both are
// present they must agree.
Json divisor_to_json(const QDivisor& d, const std::string& fan_ref);
QDivisor divisor_from_json(const Json& j, const std::string& context,
                           const std::string& base_dir, FanPtr fallback_fan);
QDivisor load_divisor_file(const std::string& path,
                           FanPtr fallback_fan = nullptr);

// Cover spec files: {"D_coeffs": [...], "L_coeffs": [...], "N": n,
// "base": <fan file, inline fan, or {"curve": "P1"}>, "p": p}.
Json cover_spec_to_json(const CoverSpec& s, const std::string& fan_ref);
CoverSpec cover_spec_from_json(const Json& j, const std::string& context,
                               const std::string& base_dir);
CoverSpec load_cover_spec_file(const std::string& path);

}  // namespace toric

#endif
