#pragma once

#include <set>
#include <string>
#include <vector>

#include "suppvar/module.hpp"

namespace suppvar {

/// Normalized coordinates of a line (first nonzero entry is 1).
using ProjPoint = std::vector<Scalar>;
using PointSet = std::set<ProjPoint>;

/// All points of P^{c-1}(F), normalized, in lexicographic order.
std::vector<ProjPoint> proj_points(const Field& field, std::uint32_t c);

bool is_free_over_line(const ModuleRep& m, const Vector& lambda);

struct RankVariety {
    PointSet points;
    std::uint32_t field_degree = 1;
    std::string fingerprint;
};
/// Points over the module's own field.
RankVariety rank_variety(const ModuleRep& m);
/// Points over an extension of a prime base field (`scan_field` must extend it).
RankVariety rank_variety(const ModuleRep& m, const FieldPtr& scan_field);

/// rank rho(u_lambda) at every point; an isomorphism invariant finer than the variety.
std::vector<std::size_t> line_rank_profile(const ModuleRep& m);

PointSet intersect(const PointSet& a, const PointSet& b);
PointSet unite(const PointSet& a, const PointSet& b);

/// The cyclic left ideal A (u_lambda (x) e) inside the regular module.
ModuleRep aulambda(const AlgebraPtr& a, const Vector& lambda);

/// Direct sum of Au_lambda over the given points.
ModuleRep realize(const AlgebraPtr& a, const PointSet& points);

struct TppReport {
    PointSet lhs, rhs;
    bool holds = false;
    bool inclusion_holds = false;
    bool braided = false;
    std::string label;  ///< "" or "empirical, braiding unverified"
    PointSet lhs_only, rhs_only;
};
TppReport tpp_check(const ModuleRep& m, const ModuleRep& n);

class FieldTooSmall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProjectivityResult {
    bool projective = false;
    bool variety_empty = false;
};
/// Resolution-based answer, cross-checked against the rank variety over
/// `scan_field` (nullptr = the module's field). Throws FieldTooSmall when the
/// variety is empty but the module is not projective.
ProjectivityResult projectivity_test(const ModuleRep& m, const FieldPtr& scan_field = nullptr);
/// Omega^1 M = 0.
bool is_projective(const ModuleRep& m);

}  // namespace suppvar
