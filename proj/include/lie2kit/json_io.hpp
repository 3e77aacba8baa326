#ifndef LIE2KIT_JSON_IO_HPP
#define LIE2KIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "lie2kit/butterfly.hpp"
#include "lie2kit/floatmat.hpp"
#include "lie2kit/omni.hpp"
#include "lie2kit/report.hpp"

namespace lie2kit::io {

using json = nlohmann::json;

// Exact slots hold rationals as strings "p/q" (or "p"); a JSON number in an
// exact slot is a SchemaError, as is a malformed or zero-denominator
// literal. Float slots hold numbers only. Errors carry the path of the
// offending field.

json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const FloatMatrix& m);
json to_json(const TwoTermComplex& c);
json to_json(const BilinearMap& b);
json to_json(const TrilinearMap& t);
json to_json(const LieAlgebra& g);
json to_json(const Lie2Algebra& a);
json to_json(const CrossedModuleAlg& x);
json to_json(const RepUpToHomotopy& r);
json to_json(const Lie2Morphism& f);
json to_json(const SkewBracket& b);
json to_json(const Butterfly& b);
json to_json(const Report& rep);

Rational rational_from_json(const json& j, const std::string& path);
Vec vec_from_json(const json& j, const std::string& path);
Matrix matrix_from_json(const json& j, const std::string& path);
Matrix matrix_from_json(const json& j, int rows, int cols, const std::string& path);
FloatMatrix float_matrix_from_json(const json& j, const std::string& path);
TwoTermComplex complex_from_json(const json& j, const std::string& path);
BilinearMap bilinear_from_json(const json& j, const std::string& path);
TrilinearMap trilinear_from_json(const json& j, const std::string& path);
LieAlgebra lie_algebra_from_json(const json& j, const std::string& path);
Lie2Algebra lie2_from_json(const json& j, const std::string& path);
CrossedModuleAlg xmod_from_json(const json& j, const std::string& path);
RepUpToHomotopy rep_from_json(const json& j, const std::string& path);
Lie2Morphism morphism_from_json(const json& j, const std::string& path);
SkewBracket skew_bracket_from_json(const json& j, const std::string& path);

json load_file(const std::string& filename);
void save_file(const std::string& filename, const json& j);

} // namespace lie2kit::io

#endif
