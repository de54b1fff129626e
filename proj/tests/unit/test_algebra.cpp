#include <random>

#include "doctest.h"
#include "suppvar/catalog.hpp"

using namespace suppvar;

namespace {
FieldPtr F5() { return Field::prime(5); }
}

TEST_CASE("exterior algebras") {
    const auto l1 = Algebra::exterior(1, F5());
    CHECK(l1->dim() == 2);
    const auto l2 = Algebra::exterior(2, F5());
    CHECK(l2->dim() == 4);
    const auto& x1 = l2->generators()[0].element;
    const auto& x2 = l2->generators()[1].element;
    const Vector a = l2->multiply(x1, x2), b = l2->multiply(x2, x1);
    for (std::size_t i = 0; i < 4; ++i) CHECK(l2->F().add(a[i], b[i]) == 0);
    const auto l3 = Algebra::exterior(3, F5());
    CHECK(l3->dim() == 8);
    // top monomial times x1 is zero
    const Vector top = l3->basis_vector(7);
    const Vector z = l3->multiply(top, l3->generators()[0].element);
    for (auto v : z) CHECK(v == 0);
    CHECK(l3->nilpotency_index() == 4);
    CHECK_THROWS_AS(Algebra::exterior(0, F5()), ValidationError);
}

TEST_CASE("skew algebras and Hopf validation") {
    const auto h4 = sign_skew_algebra(1, F5());
    CHECK(h4->dim() == 4);
    CHECK(validate_hopf(*h4).all_passed());
    const auto a = sign_skew_algebra(2, F5());
    CHECK(a->dim() == 8);
    CHECK(a->nilpotency_index() == 3);
    const auto c4 = cyclic_skew_algebra(1, 4, 2, F5());
    CHECK(c4->dim() == 8);
    CHECK(validate_hopf(*c4).all_passed());
}

TEST_CASE("invalid group data is rejected") {
    const auto F = F5();
    // order 3 does not divide 4
    CHECK_THROWS_AS(cyclic_skew_algebra(1, 3, 1, F), ValidationError);
    // characteristic divides the group order
    CHECK_THROWS_AS(cyclic_skew_algebra(1, 5, 1, F), ValidationError);
    // scalar 1 leaves no sign involution
    GroupData g = scalar_cyclic_group(F, 1, 2, 1);
    CHECK_THROWS_AS(Algebra::skew(1, g, F), ValidationError);
}

TEST_CASE("mutated Hopf data fails the right axioms") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto& sk = *h4->skew_structure();
    const std::uint32_t x = static_cast<std::uint32_t>(sk.basis_index(1, 0));
    const std::uint32_t one = static_cast<std::uint32_t>(sk.basis_index(0, 0));
    HopfData bad = *h4->hopf();
    bad.delta[x] = {{1, x, one}, {1, one, x}};
    const auto r1 = validate_hopf(*h4, bad);
    CHECK(r1.check("delta_multiplicative").failed > 0);
    HopfData bad2 = *h4->hopf();
    bad2.antipode[x] = h4->basis_vector(x);
    const auto r2 = validate_hopf(*h4, bad2);
    CHECK(r2.check("antipode").failed > 0);
}

TEST_CASE("line elements") {
    const auto a = sign_skew_algebra(2, F5());
    const auto le = line_element(*a, {2, 3});
    CHECK(le.lambda == Vector{1, 4});
    CHECK(line_element(*a, {1, 0}).element == a->generators()[0].element);
    CHECK_THROWS_AS(line_element(*a, {0, 0}), ValidationError);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Vector l{static_cast<Scalar>(rng() % 5), static_cast<Scalar>(1 + rng() % 4)};
        const auto u = line_element(*a, l).element;
        for (auto v : a->multiply(u, u)) CHECK(v == 0);
    }
}

TEST_CASE("skew algebra is free of rank |G| over its exterior subalgebra") {
    const auto a = sign_skew_algebra(2, F5());
    // right multiplication by u_lambda on the regular module has rank dim/2
    for (Vector l : {Vector{1, 0}, Vector{0, 1}, Vector{1, 3}}) {
        const auto u = line_element(*a, l).element;
        Matrix r(a->field(), a->dim(), a->dim());
        for (std::size_t j = 0; j < a->dim(); ++j) r.set_col(j, a->multiply(a->basis_vector(j), u));
        CHECK(rank(r) == a->dim() / 2);
    }
}

TEST_CASE("extension of scalars keeps the hash distinct and the structure") {
    const auto a = sign_skew_algebra(2, F5());
    const auto b = a->extend_scalars(Field::make(FieldSpec{5, 2, {}}));
    CHECK(b->dim() == 8);
    CHECK(a->hash() != b->hash());
    CHECK(a->hash().size() == 16);
}
