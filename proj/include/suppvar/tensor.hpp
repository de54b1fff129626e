#pragma once

#include "suppvar/module.hpp"

namespace suppvar {

/// M (x) N through the coproduct; basis index = m * dim(N) + n.
ModuleRep tensor(const ModuleRep& m, const ModuleRep& n);

/// b_{M,N} : M (x) N -> N (x) M, m_i (x) n_j -> (-1)^{ij} n_j (x) m_i on
/// h-eigenspaces. Only for the canonical Lambda(c) x| C_2; throws otherwise.
Matrix symmetry(const ModuleRep& m, const ModuleRep& n);

/// Permutation M (x) N -> N (x) M without signs.
Matrix swap_matrix(const FieldPtr& f, std::size_t dm, std::size_t dn);

/// tensor(M, N) is projective (M is expected to be projective).
bool hopf_projectivity_ideal_check(const ModuleRep& m, const ModuleRep& n);

}  // namespace suppvar
