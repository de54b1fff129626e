#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suppvar/algebra.hpp"

namespace suppvar {

/// Largest module dimension any computation may create. Read once from
/// SUPPVAR_MAX_DIM, default 4096.
std::size_t max_module_dim();

/// A left module given by one action matrix per algebra generator.
class ModuleRep {
public:
    ModuleRep() = default;

    /// Validates every defining relation; throws ValidationError naming the
    /// first violated relation.
    static ModuleRep make(AlgebraPtr algebra, std::vector<Matrix> actions);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Algebra& A() const { return *algebra_; }
    const FieldPtr& field() const { return algebra_->field(); }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& actions() const { return actions_; }
    const Matrix& action(std::size_t generator) const { return actions_[generator]; }

    /// rho(a) for an arbitrary algebra element.
    Matrix act(const Vector& element) const;
    Matrix basis_action(std::size_t basis_index) const;

    // Skew-structure helpers (Lambda(c) x| G algebras only).
    /// rho(x_S) for an exterior monomial given as a bitmask.
    Matrix monomial_action(std::uint32_t mask) const;
    /// rho(g) for every group element, in SkewStructure order.
    std::vector<Matrix> group_element_actions() const;
    /// rho(e_chi), e_chi = |G|^-1 sum chi(g)^-1 g.
    Matrix character_projector(std::size_t chi) const;
    Matrix character_projector(std::size_t chi, const std::vector<Matrix>& group_actions) const;
    /// rho(u_lambda).
    Matrix line_action(const Vector& lambda) const;

    /// Module with actions P^-1 rho P; P is the isomorphism from the new module to this one.
    ModuleRep conjugate(const Matrix& P) const;
    /// Same actions over the extended algebra.
    ModuleRep extend_scalars(const AlgebraPtr& bigger) const;

private:
    ModuleRep(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> actions)
        : algebra_(std::move(algebra)), dim_(dim), actions_(std::move(actions)) {}

    AlgebraPtr algebra_;
    std::size_t dim_ = 0;
    std::vector<Matrix> actions_;
};

/// First violated defining relation, or nullopt when the matrices define a module.
std::optional<std::string> relation_violation(const Algebra& a, const std::vector<Matrix>& actions);

/// Content hash of a module's matrices (and its algebra hash).
std::string module_fingerprint(const ModuleRep& m);

ModuleRep zero_module(const AlgebraPtr& a);
ModuleRep trivial_module(const AlgebraPtr& a);
/// One-dimensional module: x_i acts by 0, group generator t by `values[t]`.
ModuleRep character_module(const AlgebraPtr& a, const std::vector<Scalar>& values);
ModuleRep character_module(const AlgebraPtr& a, std::size_t chi);
ModuleRep regular_module(const AlgebraPtr& a);

ModuleRep direct_sum(const std::vector<ModuleRep>& parts);

struct Submodule {
    ModuleRep module;
    Matrix inclusion;  ///< dim(M) x dim(sub), columns form the basis
};
/// The span of `vectors` (columns) must be invariant; throws ValidationError otherwise.
Submodule submodule(const ModuleRep& m, const Matrix& vectors);
/// Smallest submodule containing the columns of `vectors`.
Submodule generated_submodule(const ModuleRep& m, const Matrix& vectors);

struct Quotient {
    ModuleRep module;
    Matrix projection;  ///< dim(M/N) x dim(M)
};
/// Complement basis = unit vectors outside the pivot rows of the submodule span.
Quotient quotient(const ModuleRep& m, const Matrix& submodule_vectors);

/// Twist by an algebra automorphism psi given by the images of the generators:
/// the new module lets a generator act as rho(psi(generator)).
ModuleRep twist(const ModuleRep& m, const std::vector<Vector>& generator_images);
/// Twist by conjugation a -> g a g^-1 with a group element.
ModuleRep twist_by_group_element(const ModuleRep& m, std::size_t element);

/// Dual module via the antipode: rho*(a) = rho(S(a))^T.
ModuleRep dual(const ModuleRep& m);

/// Restriction along an algebra map target -> source given by the images of
/// the target's generators as elements of the source algebra.
ModuleRep restrict_module(const ModuleRep& m, const AlgebraPtr& target, const std::vector<Vector>& generator_images);

/// Intertwiners N x M (T rho_M(a) = rho_N(a) T for all generators).
struct HomSpace {
    std::vector<Matrix> basis;
    std::size_t dim() const { return basis.size(); }
};
HomSpace hom_basis(const ModuleRep& source, const ModuleRep& target);
bool is_intertwiner(const Matrix& t, const ModuleRep& source, const ModuleRep& target);

/// Socle = intersection of the kernels of the exterior generators.
Matrix socle_basis(const ModuleRep& m);
/// Multiplicity of each character in e_chi applied to a subquotient given by a
/// subspace basis (columns) modulo another. Used for top and socle fingerprints.
std::vector<std::size_t> character_multiplicities(const ModuleRep& m, const Matrix& subspace);

}  // namespace suppvar
