#include "suppvar/tensor.hpp"

#include <map>
#include <utility>

#include "suppvar/variety.hpp"

namespace suppvar {

ModuleRep tensor(const ModuleRep& M, const ModuleRep& N) {
    const Algebra& A = M.A();
    if (A.hash() != N.A().hash()) throw ValidationError("tensor of modules over different algebras");
    if (!A.hopf()) throw ValidationError("tensor product needs a coproduct");
    const Field& F = A.F();
    const auto& delta = A.hopf()->delta;
    std::map<std::size_t, Matrix> left, right;
    auto cached = [](std::map<std::size_t, Matrix>& cache, const ModuleRep& m, std::size_t b) -> const Matrix& {
        auto it = cache.find(b);
        if (it == cache.end()) it = cache.emplace(b, m.basis_action(b)).first;
        return it->second;
    };
    const std::size_t n = M.dim() * N.dim();
    std::vector<Matrix> acts;
    for (const auto& gen : A.generators()) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> terms;
        for (std::size_t b = 0; b < A.dim(); ++b) {
            if (!gen.element[b]) continue;
            for (const auto& t : delta[b]) {
                Scalar& slot = terms[{t.left, t.right}];
                slot = F.add(slot, F.mul(gen.element[b], t.coef));
            }
        }
        Matrix act(A.field(), n, n);
        for (const auto& [lr, coef] : terms) {
            if (!coef) continue;
            act = act + Matrix::kron(cached(left, M, lr.first), cached(right, N, lr.second)).scaled(coef);
        }
        acts.push_back(std::move(act));
    }
    return ModuleRep::make(M.algebra(), std::move(acts));
}

Matrix swap_matrix(const FieldPtr& f, std::size_t dm, std::size_t dn) {
    Matrix s(f, dm * dn, dm * dn);
    for (std::size_t i = 0; i < dm; ++i)
        for (std::size_t j = 0; j < dn; ++j) s.at(j * dm + i, i * dn + j) = 1;
    return s;
}

Matrix symmetry(const ModuleRep& M, const ModuleRep& N) {
    const Algebra& A = M.A();
    if (!A.is_canonical_c2()) throw ValidationError("no braiding is asserted unless G = C_2");
    if (A.hash() != N.A().hash()) throw ValidationError("symmetry of modules over different algebras");
    const Field& F = A.F();
    const std::size_t h = *A.skew_structure()->h_element;
    const Scalar half = F.inv(F.from_int(2));
    auto eigen = [&](const ModuleRep& m) {
        const Matrix H = m.group_element_actions()[h];
        const Matrix I = Matrix::identity(m.field(), m.dim());
        return std::pair{(I + H).scaled(half), (I - H).scaled(half)};
    };
    const auto [m0, m1] = eigen(M);
    const auto [n0, n1] = eigen(N);
    const Matrix IN = Matrix::identity(N.field(), N.dim());
    const Matrix sign = Matrix::kron(m0, IN) + Matrix::kron(m1, n0) - Matrix::kron(m1, n1);
    return swap_matrix(A.field(), M.dim(), N.dim()) * sign;
}

bool hopf_projectivity_ideal_check(const ModuleRep& m, const ModuleRep& n) { return is_projective(tensor(m, n)); }

}  // namespace suppvar
