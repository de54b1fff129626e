#pragma once

#include <string>

#include "json.hpp"
#include "suppvar/cohom.hpp"
#include "suppvar/iso.hpp"
#include "suppvar/resolution.hpp"
#include "suppvar/variety.hpp"

namespace suppvar {

using Json = nlohmann::json;

/// Scalars: a plain integer for prime fields, else e coefficients low to high.
Json scalar_to_json(const Field& F, Scalar s);
Scalar scalar_from_json(const Field& F, const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& f, const Json& j);

Json field_to_json(const Field& F);
FieldPtr field_from_json(const Json& j);

/// Throws ValidationError on any malformed or invalid input.
AlgebraPtr algebra_from_json(const Json& j);
Json algebra_to_json(const Algebra& a);

Json module_to_json(const ModuleRep& m);
/// The module's algebra_hash must match `a`.
ModuleRep module_from_json(const Json& j, const AlgebraPtr& a);

Json cocycle_to_json(const Cocycle& z, const Field& F);
Cocycle cocycle_from_json(const Json& j, KCohomology& h);

Json points_to_json(const Field& F, const PointSet& points);
Json hopf_report_to_json(const HopfReport& r);
Json variety_report(const ModuleRep& m, const RankVariety& rv, std::size_t steps);
Json resolution_report(const Resolution& r, std::uint64_t seed);
Json tpp_report_to_json(const Field& F, const TppReport& r);

Json read_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace suppvar
