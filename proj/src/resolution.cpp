#include "suppvar/resolution.hpp"

#include <algorithm>
#include <bit>

namespace suppvar {

namespace {

const SkewStructure& require_skew(const Algebra& a) {
    if (!a.skew_structure()) throw ValidationError("resolutions need an exterior or skew exterior algebra");
    return *a.skew_structure();
}

// sign of x_i * x_S: (-1)^{#{j in S : j < i}}
bool left_sign_negative(std::uint32_t mask, std::uint32_t i) {
    return std::popcount(mask & ((1u << i) - 1u)) & 1;
}

// w * (linear form with coefficients `lin`) inside Lambda(c), w dense over monomials
Vector times_linear(const Field& F, const Vector& w, const Vector& lin, std::uint32_t c) {
    Vector out(w.size(), 0);
    for (std::uint32_t s = 0; s < w.size(); ++s) {
        if (!w[s]) continue;
        for (std::uint32_t i = 0; i < c; ++i) {
            if (!lin[i] || (s >> i & 1u)) continue;
            // x_S x_i = (-1)^{#{j in S : j > i}} x_{S+i}
            const bool neg = std::popcount(s >> (i + 1)) & 1;
            const Scalar v = F.mul(w[s], lin[i]);
            const std::uint32_t t = s | (1u << i);
            out[t] = neg ? F.sub(out[t], v) : F.add(out[t], v);
        }
    }
    return out;
}

}  // namespace

ModuleRep indecomposable_projective(const AlgebraPtr& a, std::size_t chi) {
    const auto& sk = require_skew(*a);
    const Field& F = a->F();
    const std::uint32_t c = sk.c;
    const std::size_t n = sk.monomial_count();
    std::vector<Matrix> acts;
    for (std::uint32_t i = 0; i < c; ++i) {
        Matrix m(a->field(), n, n);
        for (std::uint32_t s = 0; s < n; ++s) {
            if (s >> i & 1u) continue;
            m.at(s | (1u << i), s) = left_sign_negative(s, i) ? F.neg(1) : 1;
        }
        acts.push_back(std::move(m));
    }
    for (std::size_t t = 0; t < sk.group.orders.size(); ++t) {
        const Matrix& A = sk.group.action[t];
        const Scalar val = sk.characters.at(chi)[t];
        Matrix m(a->field(), n, n);
        for (std::uint32_t s = 0; s < n; ++s) {
            Vector w(n, 0);
            w[0] = val;
            for (std::uint32_t i = 0; i < c; ++i)
                if (s >> i & 1u) w = times_linear(F, w, A.col(i), c);
            m.set_col(s, w);
        }
        acts.push_back(std::move(m));
    }
    return ModuleRep::make(a, std::move(acts));
}

ModuleRep projective_module(const AlgebraPtr& a, const std::vector<std::size_t>& characters) {
    if (characters.empty()) return zero_module(a);
    std::vector<ModuleRep> parts;
    for (auto chi : characters) parts.push_back(indecomposable_projective(a, chi));
    return direct_sum(parts);
}

ProjectiveCover projective_cover(const ModuleRep& m) {
    const auto& sk = require_skew(m.A());
    const auto& F = m.field();
    ProjectiveCover out;
    if (m.dim() == 0) {
        out.projective = zero_module(m.algebra());
        out.map = Matrix(F, 0, 0);
        return out;
    }
    IncrementalSpan span(F, m.dim());
    for (auto g : m.A().exterior_generators()) {
        const Matrix& x = m.action(g);
        for (std::size_t j = 0; j < x.cols(); ++j) span.insert(x.col(j));
    }
    const auto ga = m.group_element_actions();
    std::vector<Vector> gens;
    for (std::size_t chi = 0; chi < sk.characters.size() && span.size() < m.dim(); ++chi) {
        const Matrix E = m.character_projector(chi, ga);
        for (std::size_t j = 0; j < E.cols() && span.size() < m.dim(); ++j) {
            Vector v = E.col(j);
            if (span.insert(v)) {
                out.characters.push_back(chi);
                gens.push_back(std::move(v));
            }
        }
    }
    out.projective = projective_module(m.algebra(), out.characters);
    const std::size_t block = sk.monomial_count();
    out.map = Matrix(F, m.dim(), out.projective.dim());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::uint32_t s = 0; s < block; ++s) out.map.set_col(j * block + s, m.monomial_action(s) * gens[j]);
#ifndef NDEBUG
    if (!is_intertwiner(out.map, out.projective, m)) throw std::logic_error("projective cover is not a module map");
#endif
    return out;
}

Syzygy syzygy_step(const ModuleRep& m) {
    Syzygy out;
    out.cover = projective_cover(m);
    const auto& P = out.cover.projective;
    if (P.dim() == 0) {
        out.module = zero_module(m.algebra());
        out.inclusion = Matrix(m.field(), 0, 0);
        return out;
    }
    auto kb = kernel(out.cover.map);
    std::vector<Matrix> acts;
    for (const auto& a : P.actions()) acts.push_back((a * kb.basis).select_rows(kb.free_cols));
    out.module = ModuleRep::make(m.algebra(), std::move(acts));
    out.inclusion = std::move(kb.basis);
    return out;
}

ModuleRep syzygy(const ModuleRep& m) { return syzygy_step(m).module; }

ModuleRep syzygy(const ModuleRep& m, std::size_t n) {
    ModuleRep cur = m;
    for (std::size_t i = 0; i < n; ++i) cur = syzygy(cur);
    return cur;
}

bool Resolution::terminates() const {
    return std::any_of(terms.begin(), terms.end(), [](const auto& t) { return t.empty(); });
}

Resolution resolve(const ModuleRep& m, std::size_t steps) {
    Resolution r;
    r.module = m;
    r.syzygies.push_back(m);
    r.inclusions.emplace_back();
    for (std::size_t n = 0; n <= steps; ++n) {
        Syzygy s = syzygy_step(r.syzygies.back());
        r.terms.push_back(s.cover.characters);
        r.projectives.push_back(s.cover.projective);
        r.covers.push_back(s.cover.map);
        if (n == 0) {
            r.differentials.push_back(s.cover.map);
        } else {
            const Matrix& inc = r.inclusions.back();
            if (inc.cols() == 0 || s.cover.map.cols() == 0)
                r.differentials.emplace_back(m.field(), r.projectives[n - 1].dim(), s.cover.projective.dim());
            else
                r.differentials.push_back(inc * s.cover.map);
        }
        r.syzygies.push_back(std::move(s.module));
        r.inclusions.push_back(std::move(s.inclusion));
    }
    return r;
}

BettiSequence betti(const Resolution& r) {
    BettiSequence b;
    for (std::size_t n = 0; n < r.terms.size(); ++n) {
        b.b.push_back(r.terms[n].size());
        b.l.push_back(r.projectives[n].dim());
    }
    return b;
}

ComplexityEstimate complexity_estimate(const BettiSequence& betti, std::size_t max_order) {
    ComplexityEstimate est;
    const auto& b = betti.b;
    est.window = b.size();
    if (std::find(b.begin(), b.end(), std::size_t{0}) != b.end()) {
        est.value = 0;
        est.certification = "exact-polynomial-tail";
        return est;
    }
    const std::size_t start = b.size() / 3;
    std::vector<long long> diff(b.begin() + static_cast<std::ptrdiff_t>(start), b.end());
    for (std::size_t d = 1; d <= max_order; ++d) {
        std::vector<long long> next;
        for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
        diff = std::move(next);
        if (diff.size() < 2) break;
        if (std::all_of(diff.begin(), diff.end(), [](long long v) { return v == 0; })) {
            est.value = d;
            est.certification = "exact-polynomial-tail";
            return est;
        }
    }
    est.certification = "heuristic";
    return est;
}

ResolutionCheck check_resolution(const Resolution& r) {
    ResolutionCheck out;
    const auto& sk = require_skew(r.module.A());
    const std::size_t block = sk.monomial_count();
    const std::size_t N = r.differentials.size();
    if (N > 0 && rank(r.differentials[0]) != r.module.dim()) {
        out.exact = false;
        out.problems.push_back("d_0 is not surjective");
    }
    for (std::size_t n = 0; n + 1 < N; ++n) {
        const Matrix& a = r.differentials[n];
        const Matrix& b = r.differentials[n + 1];
        if (a.cols() && b.cols() && !(a * b).is_zero()) {
            out.complex = false;
            out.problems.push_back("d_" + std::to_string(n) + " d_" + std::to_string(n + 1) + " != 0");
        }
        const std::size_t ra = a.cols() ? rank(a) : 0, rb = b.cols() && b.rows() ? rank(b) : 0;
        if (ra + rb != r.projectives[n].dim()) {
            out.exact = false;
            out.problems.push_back("not exact at P_" + std::to_string(n));
        }
        // image of d_{n+1} must avoid the top rows (S = empty) of P_n
        for (std::size_t j = 0; j < r.terms[n].size(); ++j)
            for (std::size_t col = 0; col < b.cols(); ++col)
                if (b.at(j * block, col) != 0) {
                    out.minimal = false;
                    out.problems.push_back("d_" + std::to_string(n + 1) + " leaves the radical");
                    j = r.terms[n].size();
                    break;
                }
    }
    return out;
}

}  // namespace suppvar
