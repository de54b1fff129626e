#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suppvar/module.hpp"

namespace suppvar {

/// P(chi) = Lambda (x) chi with basis x_S e_chi, S a bitmask.
ModuleRep indecomposable_projective(const AlgebraPtr& a, std::size_t chi);
/// Direct sum of P(chi) over the given characters, blocks in list order.
ModuleRep projective_module(const AlgebraPtr& a, const std::vector<std::size_t>& characters);

struct ProjectiveCover {
    std::vector<std::size_t> characters;
    ModuleRep projective;
    Matrix map;  ///< dim(M) x dim(P), surjective module map
};
ProjectiveCover projective_cover(const ModuleRep& m);

struct Syzygy {
    ProjectiveCover cover;
    ModuleRep module;
    Matrix inclusion;  ///< dim(P) x dim(Omega), a kernel basis of the cover map
};
Syzygy syzygy_step(const ModuleRep& m);
ModuleRep syzygy(const ModuleRep& m);
/// Omega^n M.
ModuleRep syzygy(const ModuleRep& m, std::size_t n);

/// Window P_0 .. P_steps of a minimal projective resolution.
struct Resolution {
    ModuleRep module;
    std::vector<std::vector<std::size_t>> terms;  ///< characters of P_n
    std::vector<ModuleRep> projectives;           ///< P_n
    /// d_0 : P_0 -> M, d_n : P_n -> P_{n-1}
    std::vector<Matrix> differentials;
    /// Omega^n M for n = 0 .. steps+1 (Omega^0 = M)
    std::vector<ModuleRep> syzygies;
    /// Omega^n -> P_{n-1} for n >= 1; entry 0 is unused
    std::vector<Matrix> inclusions;
    /// P_n -> Omega^n (the cover maps)
    std::vector<Matrix> covers;

    std::size_t steps() const { return terms.empty() ? 0 : terms.size() - 1; }
    bool terminates() const;
};
Resolution resolve(const ModuleRep& m, std::size_t steps);

struct BettiSequence {
    std::vector<std::size_t> b;  ///< summand counts
    std::vector<std::size_t> l;  ///< dimensions
};
BettiSequence betti(const Resolution& r);

struct ComplexityEstimate {
    std::optional<std::size_t> value;  ///< nullopt = Inconclusive
    std::size_t window = 0;
    std::string certification;  ///< "exact-polynomial-tail" or "heuristic"
};
/// `max_order` bounds the difference order tried (the exterior rank c).
ComplexityEstimate complexity_estimate(const BettiSequence& b, std::size_t max_order);

/// Structural checks: d_n d_{n+1} = 0, rank exactness, image in the radical.
struct ResolutionCheck {
    bool complex = true;
    bool exact = true;
    bool minimal = true;
    std::vector<std::string> problems;
    bool ok() const { return complex && exact && minimal; }
};
ResolutionCheck check_resolution(const Resolution& r);

}  // namespace suppvar
