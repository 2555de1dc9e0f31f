#ifndef HYP3F2_RENDER_HPP_
#define HYP3F2_RENDER_HPP_

#include <string>

#include "json.hpp"

#include "hyp3f2/numeric.hpp"
#include "hyp3f2/symmetry.hpp"

namespace hyp3f2 {

using Json = nlohmann::json;

/// Array of {"coeff": "n/d", "exp": [e0..e4]} in ascending lexicographic order of exponents.
Json to_json(const Polynomial& p);
/// {"num": ..., "den": ...} with the denominator expanded.
Json to_json(const RationalFunction& r);
Json to_json(const SymbolicMatrix& m);
Json to_json(const ShiftVector& p);
/// {"p": [...], "q": [...], "u": {...}, "v": {...}}
Json to_json(const ThreeTermRelation& rel);
/// [{"companion": "y_i^{(nu)}", "residual": x}, ...]
Json to_json(const ResidualReport& r);

std::string latex(const Polynomial& p);
std::string latex(const RationalFunction& r);
std::string latex(const SymbolicMatrix& m);
/// h(a) = u h(a + p) + v h(a + q).
std::string latex(const ThreeTermRelation& rel);

std::string text(const SymbolicMatrix& m);
std::string text(const ThreeTermRelation& rel);
std::string text(const ResidualReport& r);

}  // namespace hyp3f2

#endif  // HYP3F2_RENDER_HPP_
