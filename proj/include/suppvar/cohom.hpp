#pragma once

#include <map>
#include <string>
#include <vector>

#include "suppvar/resolution.hpp"
#include "suppvar/variety.hpp"

namespace suppvar {

/// dim Ext^n(M, N) from the Hom complex of a resolution of M (needs steps >= n+1).
std::size_t ext_dim(const Resolution& res, const ModuleRep& n_module, std::size_t n);
std::size_t ext_dim(const ModuleRep& m, const ModuleRep& n_module, std::size_t n);

/// A class in Ext^n(k, k): one coefficient per summand of P_n in the minimal
/// resolution of k (zero on summands with a nontrivial character).
struct Cocycle {
    std::size_t degree = 0;
    Vector coefficients;
    std::string algebra_hash;
};

/// Ext(k, k) computed on a growing window of the minimal resolution of k.
class KCohomology {
public:
    explicit KCohomology(AlgebraPtr a, std::size_t steps = 8);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Resolution& resolution() const { return res_; }
    /// Extends the window to at least `steps`.
    void ensure(std::size_t steps);

    std::size_t ext_dim(std::size_t n);
    std::vector<Cocycle> ext_basis(std::size_t n);
    /// Throws ValidationError when the coefficients do not define a map P_n -> k.
    Cocycle make_cocycle(std::size_t degree, const Vector& coefficients);
    bool is_zero(const Cocycle& z) const;

    /// Lifts zeta to a chain map P_{m+i} -> P_i (i <= n) and applies eta.
    Cocycle yoneda(const Cocycle& zeta, const Cocycle& eta);

    /// Pairing of zeta (even degree) with a lift of the periodic k[u_lambda]
    /// resolution. Only its vanishing is convention-free.
    Scalar restrict_to_line(const Cocycle& zeta, const Vector& lambda);
    PointSet zero_locus(const Cocycle& zeta);

    /// Kernel of Omega^{deg} k -> k induced by zeta.
    ModuleRep lzeta(const Cocycle& zeta);

    /// Functional P_n -> k as a 1 x dim(P_n) matrix.
    Matrix functional(const Cocycle& z) const;

private:
    const Matrix& monomial(std::size_t i, std::uint32_t mask);
    const Matrix& projector(std::size_t i, std::size_t chi);
    const Matrix& d_projector(std::size_t i, std::size_t chi);
    void check_window(std::size_t steps) const;

    AlgebraPtr algebra_;
    Resolution res_;
    std::map<std::pair<std::size_t, std::uint32_t>, Matrix> monomials_;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> projectors_;
    std::map<std::pair<std::size_t, std::size_t>, Matrix> d_projectors_;
};

}  // namespace suppvar
