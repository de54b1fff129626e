#include "suppvar/module.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace suppvar {

namespace {

Matrix word_action(const std::vector<Matrix>& actions, const std::vector<std::uint32_t>& letters, const FieldPtr& f,
                   std::size_t dim) {
    Matrix r = Matrix::identity(f, dim);
    for (auto l : letters) r = r * actions[l];
    return r;
}

Matrix basis_action_of(const Algebra& a, const std::vector<Matrix>& actions, std::size_t b, std::size_t dim) {
    Matrix r(a.field(), dim, dim);
    for (const auto& w : a.words(b)) {
        const Matrix m = word_action(actions, w.letters, a.field(), dim);
        r = r + m.scaled(w.coef);
    }
    return r;
}

std::optional<std::string> skew_violation(const Algebra& a, const std::vector<Matrix>& act) {
    const auto& sk = *a.skew_structure();
    const Field& F = a.F();
    const std::uint32_t c = sk.c;
    const std::size_t r = sk.group.orders.size();
    const std::size_t n = act.front().rows();
    const Matrix I = Matrix::identity(a.field(), n);
    auto x = [&](std::uint32_t i) -> const Matrix& { return act[i]; };
    auto g = [&](std::size_t t) -> const Matrix& { return act[c + t]; };
    for (std::uint32_t i = 0; i < c; ++i) {
        if (!(x(i) * x(i)).is_zero()) return "relation x" + std::to_string(i + 1) + "^2 violated";
        for (std::uint32_t j = i + 1; j < c; ++j)
            if (!(x(i) * x(j) + x(j) * x(i)).is_zero())
                return "relation x" + std::to_string(i + 1) + "x" + std::to_string(j + 1) + "+x" +
                       std::to_string(j + 1) + "x" + std::to_string(i + 1) + " violated";
    }
    for (std::size_t t = 0; t < r; ++t) {
        const std::string gn = "g" + std::to_string(t + 1);
        if (!(power(g(t), sk.group.orders[t]) == I))
            return "relation " + gn + "^" + std::to_string(sk.group.orders[t]) + " violated";
        for (std::size_t s = t + 1; s < r; ++s)
            if (!(g(t) * g(s) == g(s) * g(t)))
                return "relation " + gn + "g" + std::to_string(s + 1) + "=g" + std::to_string(s + 1) + gn + " violated";
        const Matrix& A = sk.group.action[t];
        for (std::uint32_t i = 0; i < c; ++i) {
            Matrix image(a.field(), n, n);
            for (std::uint32_t j = 0; j < c; ++j)
                if (A.at(j, i)) image = image + x(j).scaled(A.at(j, i));
            if (!(g(t) * x(i) == image * g(t)))
                return "relation " + gn + " x" + std::to_string(i + 1) + " " + gn + "^-1 violated";
        }
    }
    (void)F;
    return std::nullopt;
}

std::optional<std::string> generic_violation(const Algebra& a, const std::vector<Matrix>& act) {
    const std::size_t n = act.front().rows();
    std::vector<Matrix> basis_acts;
    for (std::size_t b = 0; b < a.dim(); ++b) basis_acts.push_back(basis_action_of(a, act, b, n));
    for (std::size_t g = 0; g < a.generators().size(); ++g) {
        const auto& ge = a.generators()[g].element;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            const Vector prod = a.multiply(ge, a.basis_vector(j));
            Matrix rhs(a.field(), n, n);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (prod[k]) rhs = rhs + basis_acts[k].scaled(prod[k]);
            if (!(act[g] * basis_acts[j] == rhs))
                return "relation " + a.generators()[g].name + "*" + a.labels()[j] + " violated";
        }
    }
    return std::nullopt;
}

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 1099511628211ull;
    }
}

}  // namespace

std::size_t max_module_dim() {
    static const std::size_t cap = [] {
        if (const char* s = std::getenv("SUPPVAR_MAX_DIM")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{4096};
    }();
    return cap;
}

std::optional<std::string> relation_violation(const Algebra& a, const std::vector<Matrix>& actions) {
    if (actions.size() != a.generators().size())
        return "expected " + std::to_string(a.generators().size()) + " action matrices";
    if (actions.empty()) return std::nullopt;
    const std::size_t n = actions.front().rows();
    for (std::size_t g = 0; g < actions.size(); ++g)
        if (actions[g].rows() != n || actions[g].cols() != n)
            return "action of " + a.generators()[g].name + " is not " + std::to_string(n) + "x" + std::to_string(n);
    if (n == 0) return std::nullopt;
    return a.skew_structure() ? skew_violation(a, actions) : generic_violation(a, actions);
}

ModuleRep ModuleRep::make(AlgebraPtr algebra, std::vector<Matrix> actions) {
    const std::size_t n = actions.empty() ? 0 : actions.front().rows();
    if (n > max_module_dim())
        throw ValidationError("module dimension " + std::to_string(n) + " exceeds SUPPVAR_MAX_DIM=" +
                              std::to_string(max_module_dim()));
    for (auto& m : actions)
        if (m.field() && !m.F().same_as(algebra->F())) throw ValidationError("action matrix over the wrong field");
    for (auto& m : actions)
        if (!m.field()) m = Matrix(algebra->field(), 0, 0);
    if (auto v = relation_violation(*algebra, actions)) throw ValidationError(*v);
    return ModuleRep(std::move(algebra), n, std::move(actions));
}

Matrix ModuleRep::act(const Vector& element) const {
    Matrix r(field(), dim_, dim_);
    for (std::size_t b = 0; b < element.size(); ++b)
        if (element[b]) r = r + basis_action(b).scaled(element[b]);
    return r;
}

Matrix ModuleRep::basis_action(std::size_t b) const { return basis_action_of(*algebra_, actions_, b, dim_); }

Matrix ModuleRep::monomial_action(std::uint32_t mask) const {
    Matrix r = Matrix::identity(field(), dim_);
    for (std::uint32_t i = 0; (mask >> i) != 0; ++i)
        if (mask >> i & 1u) r = r * actions_[i];
    return r;
}

std::vector<Matrix> ModuleRep::group_element_actions() const {
    const auto& sk = *algebra_->skew_structure();
    std::vector<Matrix> out;
    out.reserve(sk.group_size);
    for (std::size_t g = 0; g < sk.group_size; ++g) {
        Matrix m = Matrix::identity(field(), dim_);
        for (std::size_t t = 0; t < sk.elements[g].size(); ++t)
            for (std::uint32_t k = 0; k < sk.elements[g][t]; ++k) m = m * actions_[sk.c + t];
        out.push_back(std::move(m));
    }
    return out;
}

Matrix ModuleRep::character_projector(std::size_t chi) const {
    return character_projector(chi, group_element_actions());
}

Matrix ModuleRep::character_projector(std::size_t chi, const std::vector<Matrix>& ga) const {
    const auto& sk = *algebra_->skew_structure();
    const Field& F = *field();
    Matrix r(field(), dim_, dim_);
    for (std::size_t g = 0; g < sk.group_size; ++g) r = r + ga[g].scaled(F.inv(sk.character_value(F, chi, g)));
    return r.scaled(F.inv(F.from_int(static_cast<std::int64_t>(sk.group_size))));
}

Matrix ModuleRep::line_action(const Vector& lambda) const {
    const auto ext = algebra_->exterior_generators();
    Matrix r(field(), dim_, dim_);
    for (std::size_t i = 0; i < ext.size(); ++i)
        if (lambda[i]) r = r + actions_[ext[i]].scaled(lambda[i]);
    return r;
}

ModuleRep ModuleRep::conjugate(const Matrix& P) const {
    auto inv = inverse(P);
    if (!inv) throw ValidationError("conjugating matrix is singular");
    std::vector<Matrix> acts;
    for (const auto& a : actions_) acts.push_back(*inv * a * P);
    return make(algebra_, std::move(acts));
}

ModuleRep ModuleRep::extend_scalars(const AlgebraPtr& bigger) const {
    std::vector<Matrix> acts;
    for (const auto& a : actions_) acts.push_back(a.reinterpret(bigger->field()));
    return make(bigger, std::move(acts));
}

std::string module_fingerprint(const ModuleRep& m) {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : m.A().hash()) fnv_mix(h, static_cast<unsigned char>(ch));
    fnv_mix(h, m.dim());
    for (const auto& a : m.actions())
        for (auto v : a.data()) fnv_mix(h, v);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ModuleRep zero_module(const AlgebraPtr& a) {
    return ModuleRep::make(a, std::vector<Matrix>(a->generators().size(), Matrix(a->field(), 0, 0)));
}

ModuleRep trivial_module(const AlgebraPtr& a) {
    if (!a->skew_structure()) {
        // generic algebras: generators act through the counit when one exists
        if (!a->hopf()) throw ValidationError("trivial module needs a counit");
        std::vector<Matrix> acts;
        for (const auto& g : a->generators()) {
            Scalar v = 0;
            for (std::size_t b = 0; b < a->dim(); ++b) v = a->F().add(v, a->F().mul(g.element[b], a->hopf()->counit[b]));
            Matrix m(a->field(), 1, 1);
            m.at(0, 0) = v;
            acts.push_back(m);
        }
        return ModuleRep::make(a, std::move(acts));
    }
    return character_module(a, std::size_t{0});
}

ModuleRep character_module(const AlgebraPtr& a, const std::vector<Scalar>& values) {
    const auto& sk = a->skew_structure();
    if (!sk) throw ValidationError("characters need a skew exterior algebra");
    if (values.size() != sk->group.orders.size()) throw ValidationError("one character value per group generator");
    std::vector<Matrix> acts;
    for (std::uint32_t i = 0; i < sk->c; ++i) acts.emplace_back(a->field(), 1, 1);
    for (std::size_t t = 0; t < values.size(); ++t) {
        if (values[t] == 0 || a->F().pow(values[t], sk->group.orders[t]) != 1)
            throw ValidationError("character value for g" + std::to_string(t + 1) + " is not a root of unity of order " +
                                  std::to_string(sk->group.orders[t]));
        Matrix m(a->field(), 1, 1);
        m.at(0, 0) = values[t];
        acts.push_back(m);
    }
    return ModuleRep::make(a, std::move(acts));
}

ModuleRep character_module(const AlgebraPtr& a, std::size_t chi) {
    return character_module(a, a->skew_structure()->characters.at(chi));
}

ModuleRep regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> acts;
    const std::size_t n = a->dim();
    for (const auto& g : a->generators()) {
        Matrix m(a->field(), n, n);
        for (std::size_t j = 0; j < n; ++j) m.set_col(j, a->multiply(g.element, a->basis_vector(j)));
        acts.push_back(std::move(m));
    }
    return ModuleRep::make(a, std::move(acts));
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct sum of nothing");
    const AlgebraPtr& a = parts.front().algebra();
    std::vector<Matrix> acts;
    for (std::size_t g = 0; g < a->generators().size(); ++g) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts) {
            if (p.A().hash() != a->hash()) throw ValidationError("direct sum of modules over different algebras");
            blocks.push_back(p.dim() ? p.action(g) : Matrix(a->field(), 0, 0));
        }
        Matrix m = Matrix::block_diag(blocks);
        if (!m.field()) m = Matrix(a->field(), 0, 0);
        acts.push_back(std::move(m));
    }
    return ModuleRep::make(a, std::move(acts));
}

Submodule submodule(const ModuleRep& m, const Matrix& vectors) {
    const auto cs = column_space(vectors);
    const Matrix& B = cs.basis;
    std::vector<Matrix> acts;
    for (const auto& a : m.actions()) {
        const Matrix img = a * B;
        const Matrix x = img.select_rows(cs.pivot_rows);
        if (!(B * x == img)) throw ValidationError("subspace is not invariant under the action");
        acts.push_back(x);
    }
    return {ModuleRep::make(m.algebra(), std::move(acts)), B};
}

Submodule generated_submodule(const ModuleRep& m, const Matrix& vectors) {
    IncrementalSpan span(m.field(), m.dim());
    std::vector<Vector> queue;
    for (std::size_t c = 0; c < vectors.cols(); ++c) {
        Vector v = vectors.col(c);
        if (span.insert(v)) queue.push_back(std::move(v));
    }
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (const auto& a : m.actions()) {
            Vector w = a * queue[q];
            if (span.insert(w)) queue.push_back(std::move(w));
        }
    return submodule(m, Matrix::from_columns(m.field(), m.dim(), queue));
}

Quotient quotient(const ModuleRep& m, const Matrix& submodule_vectors) {
    const auto cs = column_space(submodule_vectors);
    const Matrix& B = cs.basis;
    std::vector<bool> piv(m.dim(), false);
    for (auto r : cs.pivot_rows) piv[r] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (!piv[i]) comp.push_back(i);
    // projection: v -> (v - B v[pivots]) restricted to complement rows
    Matrix proj(m.field(), comp.size(), m.dim());
    const Field& F = *m.field();
    for (std::size_t k = 0; k < comp.size(); ++k) proj.at(k, comp[k]) = 1;
    for (std::size_t j = 0; j < cs.pivot_rows.size(); ++j)
        for (std::size_t k = 0; k < comp.size(); ++k)
            if (B.at(comp[k], j)) proj.at(k, cs.pivot_rows[j]) = F.neg(B.at(comp[k], j));
    std::vector<Matrix> acts;
    for (const auto& a : m.actions()) {
        // columns of a at complement indices, then project
        acts.push_back(proj * a.select_cols(comp));
    }
    Quotient q{ModuleRep::make(m.algebra(), std::move(acts)), proj};
    return q;
}

ModuleRep twist(const ModuleRep& m, const std::vector<Vector>& images) {
    if (images.size() != m.A().generators().size()) throw ValidationError("one image per generator required");
    std::vector<Matrix> acts;
    for (const auto& im : images) acts.push_back(m.act(im));
    return ModuleRep::make(m.algebra(), std::move(acts));
}

ModuleRep twist_by_group_element(const ModuleRep& m, std::size_t element) {
    const auto& sk = *m.A().skew_structure();
    const Algebra& A = m.A();
    const Vector g = A.basis_vector(sk.basis_index(0, element));
    const Vector ginv = A.basis_vector(sk.basis_index(0, sk.inverse_element(element)));
    std::vector<Vector> images;
    for (const auto& gen : A.generators()) images.push_back(A.multiply(A.multiply(g, gen.element), ginv));
    return twist(m, images);
}

ModuleRep dual(const ModuleRep& m) {
    const Algebra& A = m.A();
    if (!A.hopf()) throw ValidationError("dual module needs an antipode");
    const Field& F = A.F();
    std::vector<Matrix> acts;
    for (const auto& gen : A.generators()) {
        Vector s(A.dim(), 0);
        for (std::size_t b = 0; b < A.dim(); ++b)
            if (gen.element[b])
                for (std::size_t k = 0; k < A.dim(); ++k)
                    s[k] = F.add(s[k], F.mul(gen.element[b], A.hopf()->antipode[b][k]));
        acts.push_back(m.act(s).transpose());
    }
    return ModuleRep::make(m.algebra(), std::move(acts));
}

ModuleRep restrict_module(const ModuleRep& m, const AlgebraPtr& target, const std::vector<Vector>& images) {
    if (images.size() != target->generators().size()) throw ValidationError("one image per target generator required");
    std::vector<Matrix> acts;
    for (const auto& im : images) acts.push_back(m.act(im).reinterpret(target->field()));
    return ModuleRep::make(target, std::move(acts));
}

bool is_intertwiner(const Matrix& t, const ModuleRep& source, const ModuleRep& target) {
    if (t.rows() != target.dim() || t.cols() != source.dim()) return false;
    for (std::size_t g = 0; g < source.actions().size(); ++g)
        if (!(t * source.action(g) == target.action(g) * t)) return false;
    return true;
}

HomSpace hom_basis(const ModuleRep& M, const ModuleRep& N) {
    if (M.A().hash() != N.A().hash()) throw ValidationError("hom between modules over different algebras");
    const FieldPtr& f = M.field();
    const std::size_t m = M.dim(), n = N.dim();
    HomSpace out;
    if (m == 0 || n == 0) return out;

    // Start from kG-equivariant maps when a group is present, else all maps.
    std::vector<Matrix> cand;
    std::vector<std::size_t> remaining;
    const auto& sk = M.A().skew_structure();
    if (sk && sk->group_size > 1) {
        const auto gaM = M.group_element_actions(), gaN = N.group_element_actions();
        std::vector<Matrix> bm, bn;
        for (std::size_t chi = 0; chi < sk->characters.size(); ++chi) {
            bm.push_back(column_space(M.character_projector(chi, gaM)).basis);
            bn.push_back(column_space(N.character_projector(chi, gaN)).basis);
        }
        const Matrix P = Matrix::hstack(bm);
        const auto Pinv = inverse(P);
        std::size_t row = 0;
        for (std::size_t chi = 0; chi < sk->characters.size(); ++chi) {
            const std::size_t dm = bm[chi].cols();
            for (std::size_t r = 0; r < bn[chi].cols(); ++r)
                for (std::size_t s = 0; s < dm; ++s) {
                    Matrix t = Matrix::column(f, bn[chi].col(r)) * Pinv->block(row + s, 0, 1, m);
                    cand.push_back(std::move(t));
                }
            row += dm;
        }
        remaining = M.A().exterior_generators();
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Matrix t(f, n, m);
                t.at(i, j) = 1;
                cand.push_back(std::move(t));
            }
        for (std::size_t g = 0; g < M.actions().size(); ++g) remaining.push_back(g);
    }

    for (auto g : remaining) {
        if (cand.empty()) break;
        // columns: vec(T rho_M(g) - rho_N(g) T) for each candidate
        Matrix E(f, n * m, cand.size());
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const Matrix d = cand[k] * M.action(g) - N.action(g) * cand[k];
            E.set_col(k, d.data());
        }
        const Matrix K = kernel_basis(E);
        std::vector<Matrix> next;
        for (std::size_t c = 0; c < K.cols(); ++c) {
            Matrix t(f, n, m);
            for (std::size_t k = 0; k < cand.size(); ++k)
                if (K.at(k, c)) t = t + cand[k].scaled(K.at(k, c));
            next.push_back(std::move(t));
        }
        cand = std::move(next);
    }
    out.basis = std::move(cand);
    return out;
}

Matrix socle_basis(const ModuleRep& m) {
    const auto ext = m.A().exterior_generators();
    if (ext.empty()) return Matrix::identity(m.field(), m.dim());
    std::vector<Matrix> parts;
    for (auto g : ext) parts.push_back(m.action(g));
    return kernel_basis(Matrix::vstack(parts));
}

std::vector<std::size_t> character_multiplicities(const ModuleRep& m, const Matrix& subspace) {
    const auto& sk = *m.A().skew_structure();
    const auto ga = m.group_element_actions();
    std::vector<std::size_t> out;
    for (std::size_t chi = 0; chi < sk.characters.size(); ++chi) {
        const Matrix E = m.character_projector(chi, ga);
        out.push_back(subspace.cols() ? rank(E * subspace) : 0);
    }
    return out;
}

}  // namespace suppvar
