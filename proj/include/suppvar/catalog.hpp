#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "suppvar/module.hpp"

namespace suppvar {

/// Lambda(c) x| C_n with the generator acting by the scalar zeta (h = g^{n/2}).
AlgebraPtr cyclic_skew_algebra(std::uint32_t c, std::uint32_t n, Scalar zeta, const FieldPtr& field);
/// Lambda(c) x| C_2, h acting by -1. c = 1 is the Sweedler algebra.
AlgebraPtr sign_skew_algebra(std::uint32_t c, const FieldPtr& field);

struct NamedModule {
    std::string name;
    ModuleRep module;
};

/// k, the other characters, the indecomposable projectives, Au_lambda for every
/// line (when h exists) and, with `syzygy_shifts`, Omega^1 and Omega^2 of the characters.
std::vector<NamedModule> base_catalog(const AlgebraPtr& a, bool syzygy_shifts = true);
/// The input plus M + N for every unordered pair of distinct entries.
std::vector<NamedModule> with_pairwise_sums(const std::vector<NamedModule>& mods);
/// Indecomposable summands of the base catalog, one per isomorphism class.
std::vector<NamedModule> indecomposable_catalog(const AlgebraPtr& a, std::uint64_t seed = 0);
/// Closes `seeds` under tensor products of dimension <= dim_max, keeping one
/// indecomposable per isomorphism class, up to `max_count` modules.
std::vector<NamedModule> tensor_closure(std::vector<NamedModule> seeds, std::size_t dim_max, std::size_t max_count,
                                        std::uint64_t seed = 0);

/// Adds m unless an isomorphic module is already present. Returns whether it was added.
bool add_if_new(std::vector<NamedModule>& list, NamedModule m, std::uint64_t seed = 0);

/// P / (A v_1 + ... + A v_s) for a random sum P of indecomposable projectives,
/// each v drawn from P or from rad P, then Omega^1 with probability 1/3.
ModuleRep random_quotient(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t dim_max);
/// Omega^1 of a random quotient (retrying until nonzero and within dim_max).
ModuleRep syzygy_of_random(const AlgebraPtr& a, std::mt19937_64& rng, std::size_t dim_max);

}  // namespace suppvar
