#include "suppvar/cohom.hpp"

#include <algorithm>

namespace suppvar {

namespace {

std::size_t block_size(const Algebra& a) { return a.skew_structure()->monomial_count(); }

// Basis of Hom(P_i, N): gen_j -> w for w in a basis of e_{chi_j} N.
std::vector<Matrix> hom_from_projective(const Resolution& res, const ModuleRep& N, std::size_t i) {
    std::vector<Matrix> out;
    const auto& chars = res.terms[i];
    if (chars.empty() || N.dim() == 0) return out;
    const std::size_t block = block_size(N.A());
    const auto ga = N.group_element_actions();
    std::vector<Matrix> mono;
    for (std::uint32_t s = 0; s < block; ++s) mono.push_back(N.monomial_action(s));
    std::map<std::size_t, Matrix> eig;
    for (std::size_t j = 0; j < chars.size(); ++j) {
        auto it = eig.find(chars[j]);
        if (it == eig.end()) it = eig.emplace(chars[j], column_space(N.character_projector(chars[j], ga)).basis).first;
        const Matrix& B = it->second;
        for (std::size_t k = 0; k < B.cols(); ++k) {
            const Vector w = B.col(k);
            Matrix f(N.field(), N.dim(), res.projectives[i].dim());
            for (std::uint32_t s = 0; s < block; ++s) f.set_col(j * block + s, mono[s] * w);
            out.push_back(std::move(f));
        }
    }
    return out;
}

// rank of f -> f d_{i+1} on Hom(P_i, N)
std::size_t coboundary_rank(const Resolution& res, const std::vector<Matrix>& homs, std::size_t i) {
    if (homs.empty() || res.terms[i + 1].empty()) return 0;
    const std::size_t block = block_size(res.module.A());
    std::vector<std::size_t> gens;
    for (std::size_t j = 0; j < res.terms[i + 1].size(); ++j) gens.push_back(j * block);
    const Matrix dg = res.differentials[i + 1].select_cols(gens);
    std::vector<Vector> cols;
    for (const auto& f : homs) cols.push_back((f * dg).data());
    return rank(Matrix::from_columns(dg.field(), cols.front().size(), cols));
}

}  // namespace

std::size_t ext_dim(const Resolution& res, const ModuleRep& N, std::size_t n) {
    if (res.steps() < n + 1) throw std::invalid_argument("resolution window must reach degree n+1");
    const auto hn = hom_from_projective(res, N, n);
    std::size_t d = hn.size() - coboundary_rank(res, hn, n);
    if (n > 0) d -= coboundary_rank(res, hom_from_projective(res, N, n - 1), n - 1);
    return d;
}

std::size_t ext_dim(const ModuleRep& m, const ModuleRep& N, std::size_t n) { return ext_dim(resolve(m, n + 1), N, n); }

KCohomology::KCohomology(AlgebraPtr a, std::size_t steps) : algebra_(std::move(a)) {
    res_ = resolve(trivial_module(algebra_), steps);
}

void KCohomology::ensure(std::size_t steps) {
    if (res_.steps() < steps) res_ = resolve(res_.module, steps);
}

void KCohomology::check_window(std::size_t steps) const {
    if (res_.steps() < steps) throw std::logic_error("resolution window too short");
}

std::size_t KCohomology::ext_dim(std::size_t n) {
    ensure(n);
    const auto& t = res_.terms[n];
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), std::size_t{0}));
}

std::vector<Cocycle> KCohomology::ext_basis(std::size_t n) {
    ensure(n);
    std::vector<Cocycle> out;
    const auto& t = res_.terms[n];
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (t[j] != 0) continue;
        Cocycle z{n, Vector(t.size(), 0), algebra_->hash()};
        z.coefficients[j] = 1;
        out.push_back(std::move(z));
    }
    return out;
}

Cocycle KCohomology::make_cocycle(std::size_t degree, const Vector& coefficients) {
    ensure(degree);
    const auto& t = res_.terms[degree];
    if (coefficients.size() != t.size())
        throw ValidationError("degree " + std::to_string(degree) + " needs " + std::to_string(t.size()) +
                              " coefficients");
    for (std::size_t j = 0; j < t.size(); ++j) {
        if (coefficients[j] >= algebra_->F().order()) throw ValidationError("coefficient out of range");
        if (coefficients[j] && t[j] != 0)
            throw ValidationError("coefficient " + std::to_string(j) + " sits on a nontrivial character");
    }
    return Cocycle{degree, coefficients, algebra_->hash()};
}

bool KCohomology::is_zero(const Cocycle& z) const {
    return std::all_of(z.coefficients.begin(), z.coefficients.end(), [](Scalar v) { return v == 0; });
}

Matrix KCohomology::functional(const Cocycle& z) const {
    check_window(z.degree);
    const std::size_t block = block_size(*algebra_);
    Matrix f(algebra_->field(), 1, res_.projectives[z.degree].dim());
    for (std::size_t j = 0; j < z.coefficients.size(); ++j) f.at(0, j * block) = z.coefficients[j];
    return f;
}

const Matrix& KCohomology::monomial(std::size_t i, std::uint32_t mask) {
    auto key = std::pair{i, mask};
    auto it = monomials_.find(key);
    if (it == monomials_.end()) it = monomials_.emplace(key, res_.projectives[i].monomial_action(mask)).first;
    return it->second;
}

const Matrix& KCohomology::projector(std::size_t i, std::size_t chi) {
    auto key = std::pair{i, chi};
    auto it = projectors_.find(key);
    if (it == projectors_.end()) it = projectors_.emplace(key, res_.projectives[i].character_projector(chi)).first;
    return it->second;
}

const Matrix& KCohomology::d_projector(std::size_t i, std::size_t chi) {
    auto key = std::pair{i, chi};
    auto it = d_projectors_.find(key);
    if (it == d_projectors_.end()) it = d_projectors_.emplace(key, res_.differentials[i] * projector(i, chi)).first;
    return it->second;
}

Cocycle KCohomology::yoneda(const Cocycle& zeta, const Cocycle& eta) {
    if (zeta.algebra_hash != algebra_->hash() || eta.algebra_hash != algebra_->hash())
        throw ValidationError("cocycle over a different algebra");
    const std::size_t m = zeta.degree, n = eta.degree;
    ensure(m + n);
    const std::size_t block = block_size(*algebra_);
    const FieldPtr& f = algebra_->field();
    Matrix prev;
    for (std::size_t i = 0; i <= n; ++i) {
        const auto& chars = res_.terms[m + i];
        Matrix F(f, res_.projectives[i].dim(), res_.projectives[m + i].dim());
        for (std::size_t j = 0; j < chars.size(); ++j) {
            Matrix target(f, i == 0 ? 1 : res_.projectives[i - 1].dim(), 1);
            if (i == 0)
                target.at(0, 0) = zeta.coefficients[j];
            else if (prev.cols() && prev.rows())
                target = prev * Matrix::column(f, res_.differentials[m + i].col(j * block));
            if (target.is_zero()) continue;
            const auto z = solve(d_projector(i, chars[j]), target);
            if (!z) throw std::logic_error("chain map lifting failed");
            const Vector y = (projector(i, chars[j]) * *z).col(0);
            for (std::uint32_t s = 0; s < block; ++s) F.set_col(j * block + s, monomial(i, s) * y);
        }
        prev = std::move(F);
    }
    Cocycle out{m + n, Vector(res_.terms[m + n].size(), 0), algebra_->hash()};
    const Field& K = algebra_->F();
    for (std::size_t j = 0; j < out.coefficients.size(); ++j) {
        Scalar v = 0;
        for (std::size_t k = 0; k < eta.coefficients.size(); ++k)
            if (eta.coefficients[k]) v = K.add(v, K.mul(eta.coefficients[k], prev.at(k * block, j * block)));
        out.coefficients[j] = v;
    }
    return out;
}

Scalar KCohomology::restrict_to_line(const Cocycle& zeta, const Vector& lambda) {
    if (zeta.degree % 2) throw ValidationError("restriction to a line needs an even degree class");
    if (std::all_of(lambda.begin(), lambda.end(), [](Scalar v) { return v == 0; }))
        throw ValidationError("lambda must be nonzero");
    ensure(zeta.degree);
    const FieldPtr& f = algebra_->field();
    Matrix one(f, 1, 1);
    one.at(0, 0) = 1;
    auto v = solve(res_.differentials[0], one);
    for (std::size_t i = 1; i <= zeta.degree; ++i) {
        const Matrix target = res_.projectives[i - 1].line_action(lambda) * *v;
        v = solve(res_.differentials[i], target);
        if (!v) throw std::logic_error("line restriction lifting failed");
    }
    return (functional(zeta) * *v).at(0, 0);
}

PointSet KCohomology::zero_locus(const Cocycle& zeta) {
    PointSet out;
    for (const auto& p : proj_points(algebra_->F(), algebra_->exterior_rank()))
        if (restrict_to_line(zeta, p) == 0) out.insert(p);
    return out;
}

ModuleRep KCohomology::lzeta(const Cocycle& zeta) {
    if (is_zero(zeta)) throw ValidationError("zeta represents the zero class");
    ensure(zeta.degree);
    const ModuleRep& omega = res_.syzygies[zeta.degree];
    const Matrix& cover = res_.covers[zeta.degree];
    const auto phi = solve(cover.transpose(), functional(zeta).transpose());
    if (!phi) throw std::logic_error("zeta does not factor through the syzygy");
    const Matrix row = phi->transpose();
    return submodule(omega, kernel_basis(row)).module;
}

}  // namespace suppvar
