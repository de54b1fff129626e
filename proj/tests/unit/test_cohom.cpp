#include <random>

#include "doctest.h"
#include "suppvar/catalog.hpp"
#include "suppvar/cohom.hpp"
#include "suppvar/iso.hpp"

using namespace suppvar;

namespace {
FieldPtr F5() { return Field::prime(5); }
}

TEST_CASE("ext dimensions") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto k = trivial_module(h4);
    CHECK(ext_dim(k, k, 1) == 0);
    CHECK(ext_dim(k, k, 2) == 1);
    const auto a = sign_skew_algebra(2, F5());
    KCohomology H(a, 4);
    CHECK(H.ext_dim(2) == 3);
    CHECK(H.ext_dim(3) == 0);
    CHECK(ext_dim(trivial_module(a), trivial_module(a), 2) == 3);
    // Ext^n(Au_lambda, k) is nonzero for n >= 1
    const auto au = aulambda(a, {1, 3});
    const auto r = resolve(au, 5);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(ext_dim(r, trivial_module(a), n) > 0);
}

TEST_CASE("cocycle validation") {
    const auto h4 = sign_skew_algebra(1, F5());
    KCohomology H(h4, 4);
    CHECK_THROWS_AS(H.make_cocycle(1, {1}), ValidationError);
    CHECK_THROWS_AS(H.make_cocycle(2, {1, 1}), ValidationError);
    CHECK(H.make_cocycle(2, {3}).coefficients == Vector{3});
}

TEST_CASE("Yoneda products") {
    const auto l2 = Algebra::exterior(2, F5());
    KCohomology H(l2, 6);
    const auto one = H.ext_basis(0).at(0);
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& eta : H.ext_basis(n)) {
            CHECK(H.yoneda(one, eta).coefficients == eta.coefficients);
            CHECK(H.yoneda(eta, one).coefficients == eta.coefficients);
        }
    // Ext over Lambda(2) is a polynomial ring: y1^2 is a nonzero class
    const auto y = H.ext_basis(1);
    REQUIRE(y.size() == 2);
    CHECK_FALSE(H.is_zero(H.yoneda(y[0], y[0])));
    // products of degree-one classes span Ext^2
    IncrementalSpan span(l2->field(), H.ext_dim(2));
    for (const auto& u : y)
        for (const auto& v : y) span.insert(H.yoneda(u, v).coefficients);
    CHECK(span.size() == 3);
}

TEST_CASE("Yoneda products are associative") {
    const auto a = sign_skew_algebra(2, F5());
    KCohomology H(a, 6);
    const auto b2 = H.ext_basis(2);
    for (const auto& u : b2)
        for (const auto& v : b2) {
            const auto w = b2.back();
            CHECK(H.yoneda(H.yoneda(u, v), w).coefficients == H.yoneda(u, H.yoneda(v, w)).coefficients);
        }
}

TEST_CASE("restriction to lines") {
    const auto h4 = sign_skew_algebra(1, F5());
    KCohomology H(h4, 4);
    const auto z = H.ext_basis(2).at(0);
    CHECK(H.restrict_to_line(z, {1}) != 0);
    CHECK(H.zero_locus(z).empty());
    for (Scalar al = 1; al < 5; ++al) CHECK(H.restrict_to_line(z, {al}) != 0);

    const auto a = sign_skew_algebra(2, F5());
    KCohomology K(a, 4);
    const auto basis = K.ext_basis(2);
    REQUIRE(basis.size() == 3);
    // zero class vanishes everywhere
    Cocycle zero{2, Vector(basis[0].coefficients.size(), 0), a->hash()};
    CHECK(K.zero_locus(zero).size() == 6);
    // rescaling invariance of vanishing
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        Vector c(basis[0].coefficients.size(), 0);
        for (const auto& b : basis)
            for (std::size_t j = 0; j < c.size(); ++j)
                if (b.coefficients[j]) c[j] = rng() % 5;
        const auto z2 = K.make_cocycle(2, c);
        for (const auto& p : proj_points(*a->field(), 2)) {
            const bool v0 = K.restrict_to_line(z2, p) == 0;
            for (Scalar al = 2; al < 5; ++al) {
                Vector q = p;
                for (auto& x : q) x = a->F().mul(x, al);
                CHECK((K.restrict_to_line(z2, q) == 0) == v0);
            }
        }
    }
}

TEST_CASE("a class vanishing at [1:0] but not at [0:1]") {
    const auto a = sign_skew_algebra(2, F5());
    KCohomology K(a, 4);
    const auto basis = K.ext_basis(2);
    // evaluation system: values of the basis classes at both lines
    Matrix ev(a->field(), 2, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        ev.at(0, i) = K.restrict_to_line(basis[i], {1, 0});
        ev.at(1, i) = K.restrict_to_line(basis[i], {0, 1});
    }
    Matrix rhs(a->field(), 2, 1);
    rhs.at(1, 0) = 1;
    const auto sol = solve(ev, rhs);
    REQUIRE(sol.has_value());
    Vector c(basis[0].coefficients.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] = a->F().add(c[j], a->F().mul(sol->at(i, 0), basis[i].coefficients[j]));
    const auto z = K.make_cocycle(2, c);
    const auto locus = K.zero_locus(z);
    CHECK(locus.count({1, 0}) == 1);
    CHECK(locus.count({0, 1}) == 0);
    const auto L = K.lzeta(z);
    CHECK(L.dim() == K.resolution().syzygies[2].dim() - 1);
    CHECK(rank_variety(L).points == locus);
}

TEST_CASE("L_zeta") {
    const auto h4 = sign_skew_algebra(1, F5());
    KCohomology H(h4, 4);
    CHECK(H.lzeta(H.ext_basis(2).at(0)).dim() == 0);
    Cocycle zero{2, {0}, h4->hash()};
    CHECK_THROWS_AS(H.lzeta(zero), ValidationError);
}
