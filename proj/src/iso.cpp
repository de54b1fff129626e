#include "suppvar/iso.hpp"

#include <algorithm>
#include <random>

#include "suppvar/resolution.hpp"
#include "suppvar/variety.hpp"

namespace suppvar {

namespace {

std::uint64_t capped_power(std::uint64_t q, std::size_t d) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (r > kExhaustiveScanLimit) return kExhaustiveScanLimit + 1;
        r *= q;
    }
    return r;
}

Matrix combine(const std::vector<Matrix>& basis, const Vector& coef) {
    Matrix t(basis.front().field(), basis.front().rows(), basis.front().cols());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coef[k]) t = t + basis[k].scaled(coef[k]);
    return t;
}

Vector random_coefficients(std::mt19937_64& rng, std::size_t d, std::uint64_t q) {
    Vector c(d);
    for (auto& v : c) v = static_cast<Scalar>(rng() % q);
    return c;
}

/// Calls visit on one representative of every line in F^d until it returns true.
template <class Visit>
bool scan_projective(std::size_t d, std::uint64_t q, Visit&& visit) {
    for (std::size_t lead = 0; lead < d; ++lead) {
        Vector c(d, 0);
        c[lead] = 1;
        while (true) {
            if (visit(c)) return true;
            bool done = true;
            for (std::size_t i = d; i > lead + 1;) {
                --i;
                if (++c[i] < q) {
                    done = false;
                    break;
                }
                c[i] = 0;
            }
            if (done) break;
        }
    }
    return false;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::size_t> socle_characters(const ModuleRep& m) {
    return character_multiplicities(m, socle_basis(m));
}

}  // namespace

IsoResult is_isomorphic(const ModuleRep& M, const ModuleRep& N, std::uint64_t seed) {
    IsoResult r;
    auto no = [&](std::string why) {
        r.verdict = IsoVerdict::No;
        r.certificate = std::move(why);
        return r;
    };
    if (M.A().hash() != N.A().hash()) return no("different algebras");
    if (M.dim() != N.dim()) return no("dim");
    if (M.dim() == 0) {
        r.verdict = IsoVerdict::Yes;
        r.witness = Matrix(M.field(), 0, 0);
        return r;
    }
    const bool skew = M.A().skew_structure().has_value();
    if (skew) {
        if (sorted(projective_cover(M).characters) != sorted(projective_cover(N).characters))
            return no("top characters");
        if (socle_characters(M) != socle_characters(N)) return no("socle characters");
        if (line_rank_profile(M) != line_rank_profile(N)) return no("rank-variety fingerprint");
        const ModuleRep m1 = syzygy(M), n1 = syzygy(N);
        if (m1.dim() != n1.dim() || sorted(projective_cover(m1).characters) != sorted(projective_cover(n1).characters))
            return no("betti fingerprint");
        const ModuleRep m2 = syzygy(m1), n2 = syzygy(n1);
        if (m2.dim() != n2.dim() || sorted(projective_cover(m2).characters) != sorted(projective_cover(n2).characters))
            return no("betti fingerprint");
    }
    const HomSpace H = hom_basis(M, N);
    if (H.dim() == 0) return no("exhausted hom space");
    if (hom_basis(M, M).dim() != H.dim()) return no("hom dimension");

    const std::uint64_t q = M.field()->order();
    const std::size_t n = M.dim();
    auto invertible = [&](const Matrix& t) { return rank(t) == n; };
    for (const auto& b : H.basis)
        if (invertible(b)) {
            r.verdict = IsoVerdict::Yes;
            r.witness = b;
            return r;
        }
    std::mt19937_64 rng(seed);
    if (H.dim() > 1)
        for (std::size_t s = 0; s < kRandomSamples; ++s) {
            Matrix t = combine(H.basis, random_coefficients(rng, H.dim(), q));
            if (invertible(t)) {
                r.verdict = IsoVerdict::Yes;
                r.witness = std::move(t);
                return r;
            }
        }
    if (capped_power(q, H.dim()) <= kExhaustiveScanLimit) {
        Matrix found;
        const bool hit = scan_projective(H.dim(), q, [&](const Vector& c) {
            Matrix t = combine(H.basis, c);
            if (!invertible(t)) return false;
            found = std::move(t);
            return true;
        });
        if (hit) {
            r.verdict = IsoVerdict::Yes;
            r.witness = std::move(found);
            return r;
        }
        return no("exhausted hom space");
    }
    r.verdict = IsoVerdict::Unknown;
    return r;
}

namespace {

struct Leaf {
    ModuleRep module;
    Matrix inclusion;
    bool certified;
};

// Stable power of phi (phi^(2^t) once ranks settle).
Matrix fitting_power(const Matrix& phi) {
    Matrix psi = phi;
    std::size_t r = rank(psi);
    while (true) {
        Matrix next = psi * psi;
        const std::size_t rn = rank(next);
        if (rn == r) return psi;
        psi = std::move(next);
        r = rn;
    }
}

void decompose(const ModuleRep& M, const Matrix& inclusion, std::mt19937_64& rng, std::size_t& trials,
               std::vector<Leaf>& out) {
    const std::size_t n = M.dim();
    if (n <= 1) {
        out.push_back({M, inclusion, true});
        return;
    }
    const HomSpace E = hom_basis(M, M);
    const std::uint64_t q = M.field()->order();
    std::optional<Matrix> splitter;
    auto try_split = [&](const Matrix& phi) {
        const Matrix psi = fitting_power(phi);
        const std::size_t r = rank(psi);
        if (r == 0 || r == n) return false;
        splitter = psi;
        return true;
    };
    for (const auto& b : E.basis)
        if (try_split(b)) break;
    for (std::size_t s = 0; !splitter && s < kRandomSamples && E.dim() > 1; ++s) {
        ++trials;
        try_split(combine(E.basis, random_coefficients(rng, E.dim(), q)));
    }
    bool certified = false;
    if (!splitter && capped_power(q, E.dim()) <= kExhaustiveScanLimit) {
        if (!scan_projective(E.dim(), q, [&](const Vector& c) { return try_split(combine(E.basis, c)); }))
            certified = true;
    }
    if (!splitter) {
        out.push_back({M, inclusion, certified});
        return;
    }
    const Matrix im = column_space(*splitter).basis;
    const Matrix ker = kernel_basis(*splitter);
    for (const Matrix* part : {&im, &ker}) {
        Submodule sub = submodule(M, *part);
        decompose(sub.module, inclusion * sub.inclusion, rng, trials, out);
    }
}

}  // namespace

DecompositionReport fitting_decompose(const ModuleRep& M, std::uint64_t seed) {
    DecompositionReport rep;
    if (M.dim() == 0) {
        rep.witness = Matrix(M.field(), 0, 0);
        rep.certified = true;
        return rep;
    }
    std::mt19937_64 rng(seed);
    std::vector<Leaf> leaves;
    decompose(M, Matrix::identity(M.field(), M.dim()), rng, rep.trials, leaves);
    std::vector<Matrix> cols;
    rep.certified = true;
    for (auto& l : leaves) {
        rep.summands.push_back(l.module);
        rep.summand_certified.push_back(l.certified);
        rep.certified = rep.certified && l.certified;
        cols.push_back(l.inclusion);
    }
    rep.witness = Matrix::hstack(cols);
    return rep;
}

PeriodicityResult detect_periodicity(const ModuleRep& M, std::size_t n_max, std::uint64_t seed) {
    PeriodicityResult out;
    ModuleRep cur = M;
    for (std::size_t n = 1; n <= n_max; ++n) {
        cur = syzygy(cur);
        if (cur.dim() == 0) return out;
        if (cur.dim() != M.dim()) continue;
        const IsoResult r = is_isomorphic(cur, M, seed + n);
        if (r.verdict == IsoVerdict::Yes) {
            out.period = n;
            out.witness = r.witness;
            return out;
        }
        if (r.verdict == IsoVerdict::Unknown) out.inconclusive = true;
    }
    return out;
}

}  // namespace suppvar
