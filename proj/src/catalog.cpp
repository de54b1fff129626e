#include "suppvar/catalog.hpp"

#include "suppvar/iso.hpp"
#include "suppvar/resolution.hpp"
#include "suppvar/tensor.hpp"
#include "suppvar/variety.hpp"

namespace suppvar {

AlgebraPtr cyclic_skew_algebra(std::uint32_t c, std::uint32_t n, Scalar zeta, const FieldPtr& field) {
    return Algebra::skew(c, scalar_cyclic_group(field, c, n, zeta), field);
}

AlgebraPtr sign_skew_algebra(std::uint32_t c, const FieldPtr& field) {
    return cyclic_skew_algebra(c, 2, field->neg(1), field);
}

namespace {

std::string point_name(const ProjPoint& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

}  // namespace

std::vector<NamedModule> base_catalog(const AlgebraPtr& a, bool syzygy_shifts) {
    const auto& sk = *a->skew_structure();
    std::vector<NamedModule> out;
    for (std::size_t chi = 0; chi < sk.characters.size(); ++chi)
        out.push_back({chi ? "chi" + std::to_string(chi) : "k", character_module(a, chi)});
    for (std::size_t chi = 0; chi < sk.characters.size(); ++chi)
        out.push_back({"P(chi" + std::to_string(chi) + ")", indecomposable_projective(a, chi)});
    if (sk.h_element)
        for (const auto& p : proj_points(a->F(), sk.c)) out.push_back({"Au" + point_name(p), aulambda(a, p)});
    if (syzygy_shifts) {
        for (std::size_t chi = 0; chi < sk.characters.size(); ++chi) {
            const std::string base = chi ? "chi" + std::to_string(chi) : "k";
            const ModuleRep o1 = syzygy(out[chi].module);
            out.push_back({"Omega1(" + base + ")", o1});
            out.push_back({"Omega2(" + base + ")", syzygy(o1)});
        }
    }
    return out;
}

std::vector<NamedModule> with_pairwise_sums(const std::vector<NamedModule>& mods) {
    std::vector<NamedModule> out = mods;
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = i + 1; j < mods.size(); ++j)
            out.push_back({mods[i].name + "+" + mods[j].name, direct_sum({mods[i].module, mods[j].module})});
    return out;
}

bool add_if_new(std::vector<NamedModule>& list, NamedModule m, std::uint64_t seed) {
    for (const auto& x : list) {
        if (x.module.dim() != m.module.dim()) continue;
        const auto r = is_isomorphic(x.module, m.module, seed);
        if (r.verdict == IsoVerdict::Yes) return false;
    }
    list.push_back(std::move(m));
    return true;
}

std::vector<NamedModule> indecomposable_catalog(const AlgebraPtr& a, std::uint64_t seed) {
    std::vector<NamedModule> out;
    for (auto& m : base_catalog(a, true)) {
        const auto d = fitting_decompose(m.module, seed);
        for (std::size_t i = 0; i < d.summands.size(); ++i) {
            std::string name = d.summands.size() == 1 ? m.name : m.name + "#" + std::to_string(i);
            add_if_new(out, {std::move(name), d.summands[i]}, seed);
        }
    }
    return out;
}

std::vector<NamedModule> tensor_closure(std::vector<NamedModule> list, std::size_t dim_max, std::size_t max_count,
                                        std::uint64_t seed) {
    for (std::size_t i = 0; i < list.size() && list.size() < max_count; ++i)
        for (std::size_t j = 0; j <= i && list.size() < max_count; ++j) {
            if (list[i].module.dim() * list[j].module.dim() > dim_max) continue;
            const ModuleRep t = tensor(list[i].module, list[j].module);
            const auto d = fitting_decompose(t, seed);
            for (std::size_t s = 0; s < d.summands.size() && list.size() < max_count; ++s)
                add_if_new(list, {"(" + list[i].name + "*" + list[j].name + ")#" + std::to_string(s), d.summands[s]},
                           seed);
        }
    return list;
}

ModuleRep random_quotient(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t dim_max) {
    const auto& sk = *a->skew_structure();
    const std::uint64_t q = a->F().order();
    const std::size_t block = sk.monomial_count();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<std::size_t> chars(1 + rng() % 2);
        for (auto& c : chars) c = rng() % sk.characters.size();
        const ModuleRep P = projective_module(a, chars);
        const std::size_t s = 1 + rng() % 3;
        std::vector<Vector> vs;
        for (std::size_t k = 0; k < s; ++k) {
            Vector v(P.dim());
            for (auto& x : v) x = static_cast<Scalar>(rng() % q);
            if (rng() % 2)
                for (std::size_t j = 0; j < chars.size(); ++j) v[j * block] = 0;
            vs.push_back(std::move(v));
        }
        const Submodule sub = generated_submodule(P, Matrix::from_columns(a->field(), P.dim(), vs));
        ModuleRep Q = quotient(P, sub.inclusion).module;
        if (Q.dim() == 0) continue;
        if (rng() % 3 == 0) {
            ModuleRep O = syzygy(Q);
            if (O.dim() > 0 && O.dim() <= dim_max) Q = std::move(O);
        }
        if (Q.dim() <= dim_max) return Q;
    }
    throw std::runtime_error("random quotient recipe found nothing within dim_max");
}

ModuleRep syzygy_of_random(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t dim_max) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const ModuleRep O = syzygy(random_quotient(a, rng, dim_max));
        if (O.dim() > 0 && O.dim() <= dim_max) return O;
    }
    throw std::runtime_error("syzygy-of-random recipe found nothing within dim_max");
}

}  // namespace suppvar
