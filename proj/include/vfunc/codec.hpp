#ifndef VFUNC_CODEC_HPP
#define VFUNC_CODEC_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "vfunc/extension_algebra.hpp"
#include "vfunc/ramification.hpp"
#include "vfunc/vfunction.hpp"

namespace vfunc {

using json = nlohmann::json;

/// [[exponent, "c0,c1,..."], ...] with exponents strictly increasing.
json laurent_to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const json& j, const FieldPtr& field);

/// One LaurentPoly encoding per monomial: {"i,j": [[e, "c0,c1"], ...]}, zeros omitted.
json lelement_to_json(const LElement& x);

json vresult_to_json(const VResult& r);
json filtration_to_json(const Filtration& f);

/// Parsed but not yet validated job description.
struct JobSpec {
    FieldPtr field;
    FqElem a;
    LaurentPoly g1;
    LaurentPoly g2;
};

/// Parses "c0,c1,...,cn" into modulus coefficients.
std::vector<int> parse_modulus(const std::string& text);

/// Reads {"p", "n", "modulus"?, "a", "g1", "g2"}. Throws Error(ParseError) on
/// malformed input and Error(InvalidField) on a bad field description.
JobSpec parse_job(const json& j);
JobSpec parse_job_text(const std::string& text);

}  // namespace vfunc

#endif  // VFUNC_CODEC_HPP
