#include "suppvar/variety.hpp"

#include <algorithm>

#include "suppvar/resolution.hpp"
#include "suppvar/tensor.hpp"

namespace suppvar {

std::vector<ProjPoint> proj_points(const Field& F, std::uint32_t c) {
    if (c == 0) throw ValidationError("projective space needs c >= 1");
    const std::uint64_t q = F.order();
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < c; ++i) {
        total *= q;
        if (total > 10'000'000ull) throw ValidationError("too many points: q^c exceeds 10^7");
    }
    std::vector<ProjPoint> out;
    for (std::uint32_t lead = 0; lead < c; ++lead) {
        const std::uint32_t free = c - 1 - lead;
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < free; ++i) count *= q;
        for (std::uint64_t k = 0; k < count; ++k) {
            ProjPoint p(c, 0);
            p[lead] = 1;
            std::uint64_t r = k;
            for (std::uint32_t i = c; i-- > lead + 1;) {
                p[i] = static_cast<Scalar>(r % q);
                r /= q;
            }
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_free_over_line(const ModuleRep& m, const Vector& lambda) {
    if (m.dim() % 2) return false;
    if (m.dim() == 0) return true;
    return rank(m.line_action(lambda)) == m.dim() / 2;
}

RankVariety rank_variety(const ModuleRep& m) {
    RankVariety rv;
    rv.field_degree = m.field()->e();
    rv.fingerprint = module_fingerprint(m);
    for (const auto& p : proj_points(*m.field(), m.A().exterior_rank()))
        if (!is_free_over_line(m, p)) rv.points.insert(p);
    return rv;
}

RankVariety rank_variety(const ModuleRep& m, const FieldPtr& scan_field) {
    if (!scan_field || scan_field->same_as(*m.field())) return rank_variety(m);
    const ModuleRep big = m.extend_scalars(m.A().extend_scalars(scan_field));
    RankVariety rv = rank_variety(big);
    rv.fingerprint = module_fingerprint(m);
    return rv;
}

std::vector<std::size_t> line_rank_profile(const ModuleRep& m) {
    std::vector<std::size_t> out;
    for (const auto& p : proj_points(*m.field(), m.A().exterior_rank()))
        out.push_back(m.dim() ? rank(m.line_action(p)) : 0);
    return out;
}

PointSet intersect(const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

PointSet unite(const PointSet& a, const PointSet& b) {
    PointSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

ModuleRep aulambda(const AlgebraPtr& a, const Vector& lambda) {
    if (!a->skew_structure() || !a->skew_structure()->h_element)
        throw ValidationError("Au_lambda needs a skew exterior algebra with the involution h");
    const LineElement le = line_element(*a, lambda);
    const ModuleRep R = regular_module(a);
    return generated_submodule(R, Matrix::column(a->field(), le.element)).module;
}

ModuleRep realize(const AlgebraPtr& a, const PointSet& points) {
    if (points.empty()) throw ValidationError("realize needs a nonempty point set");
    std::vector<ModuleRep> parts;
    for (const auto& p : points) parts.push_back(aulambda(a, p));
    return direct_sum(parts);
}

TppReport tpp_check(const ModuleRep& m, const ModuleRep& n) {
    TppReport r;
    r.lhs = rank_variety(tensor(m, n)).points;
    r.rhs = intersect(rank_variety(m).points, rank_variety(n).points);
    std::set_difference(r.lhs.begin(), r.lhs.end(), r.rhs.begin(), r.rhs.end(),
                        std::inserter(r.lhs_only, r.lhs_only.end()));
    std::set_difference(r.rhs.begin(), r.rhs.end(), r.lhs.begin(), r.lhs.end(),
                        std::inserter(r.rhs_only, r.rhs_only.end()));
    r.holds = r.lhs == r.rhs;
    r.inclusion_holds = r.lhs_only.empty();
    r.braided = m.A().is_canonical_c2();
    if (!r.braided) r.label = "empirical, braiding unverified";
    return r;
}

bool is_projective(const ModuleRep& m) {
    if (m.dim() == 0) return true;
    return projective_cover(m).projective.dim() == m.dim();
}

ProjectivityResult projectivity_test(const ModuleRep& m, const FieldPtr& scan_field) {
    ProjectivityResult r;
    r.projective = is_projective(m);
    r.variety_empty = rank_variety(m, scan_field).points.empty();
    if (r.variety_empty && !r.projective)
        throw FieldTooSmall("rank variety is empty over F_" + std::to_string(scan_field ? scan_field->order()
                                                                                       : m.field()->order()) +
                            " but the module is not projective; rerun with a larger --field-degree");
    if (!r.variety_empty && r.projective) throw std::logic_error("projective module with nonempty rank variety");
    return r;
}

}  // namespace suppvar
