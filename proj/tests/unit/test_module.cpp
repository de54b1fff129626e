#include <random>

#include "doctest.h"
#include "suppvar/catalog.hpp"
#include "suppvar/iso.hpp"
#include "suppvar/variety.hpp"

using namespace suppvar;

namespace {

FieldPtr F5() { return Field::prime(5); }

Matrix random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
    while (true) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng() % f->order();
        if (rank(m) == n) return m;
    }
}

ModuleRep S_of(const AlgebraPtr& a) { return character_module(a, std::vector<Scalar>{a->F().neg(1)}); }

}  // namespace

TEST_CASE("trivial and sign modules over H4") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto k = trivial_module(h4);
    CHECK(k.dim() == 1);
    CHECK(k.action(0).at(0, 0) == 0);
    CHECK(k.action(1).at(0, 0) == 1);
    const auto S = S_of(h4);
    CHECK(S.action(1).at(0, 0) == 4);
    const auto c4 = cyclic_skew_algebra(1, 4, 2, F5());
    CHECK(character_module(c4, std::vector<Scalar>{2}).dim() == 1);
    CHECK_THROWS_AS(character_module(h4, std::vector<Scalar>{2}), ValidationError);
}

TEST_CASE("regular modules") {
    const auto l1 = Algebra::exterior(1, F5());
    const auto r = regular_module(l1);
    CHECK(r.action(0) == Matrix::from_ints(l1->field(), {{0, 0}, {1, 0}}));
    CHECK(regular_module(sign_skew_algebra(1, F5())).dim() == 4);
    CHECK(regular_module(sign_skew_algebra(2, F5())).dim() == 8);
}

TEST_CASE("relation violations are named") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto F = h4->field();
    const Matrix x = Matrix::from_ints(F, {{1, 0}, {0, 0}});
    try {
        ModuleRep::make(h4, {x, Matrix::identity(F, 2)});
        FAIL("expected a violation");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()) == "relation x1^2 violated");
    }
    const Matrix y = Matrix::from_ints(F, {{0, 0}, {1, 0}});
    CHECK_THROWS_AS(ModuleRep::make(h4, {y, Matrix::identity(F, 2)}), ValidationError);
}

TEST_CASE("hom spaces over H4") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto k = trivial_module(h4), S = S_of(h4), R = regular_module(h4);
    CHECK(hom_basis(k, k).dim() == 1);
    CHECK(hom_basis(k, S).dim() == 0);
    CHECK(hom_basis(R, k).dim() == 1);
    CHECK(hom_basis(R, R).dim() == 4);
    for (const auto& t : hom_basis(R, R).basis) CHECK(is_intertwiner(t, R, R));
}

TEST_CASE("hom dimension is invariant under conjugation") {
    const auto a = sign_skew_algebra(2, F5());
    std::mt19937_64 rng(5);
    const auto M = aulambda(a, {1, 2});
    const auto N = direct_sum({aulambda(a, {1, 0}), trivial_module(a)});
    const auto Nc = N.conjugate(random_invertible(a->field(), N.dim(), rng));
    CHECK(hom_basis(M, N).dim() == hom_basis(M, Nc).dim());
    CHECK(hom_basis(N, N).dim() == hom_basis(Nc, Nc).dim());
}

TEST_CASE("duals and twists") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto k = trivial_module(h4), S = S_of(h4);
    CHECK(is_isomorphic(dual(k), k).verdict == IsoVerdict::Yes);
    CHECK(is_isomorphic(dual(S), S).verdict == IsoVerdict::Yes);
    CHECK(is_isomorphic(twist_by_group_element(S, 1), S).verdict == IsoVerdict::Yes);
    const auto R = regular_module(h4);
    CHECK(is_isomorphic(dual(dual(R)), R).verdict == IsoVerdict::Yes);

    // outer automorphism x1 <-> x2 of Lambda(2) x| C_2 moves Au_lambda to Au_{swap lambda}
    const auto a = sign_skew_algebra(2, F5());
    const auto M = aulambda(a, {1, 2});
    std::vector<Vector> images{a->generators()[1].element, a->generators()[0].element, a->generators()[2].element};
    const auto T = twist(M, images);
    CHECK(rank_variety(T).points == PointSet{{1, 3}});  // [2:1] = [1:3]
    CHECK(is_isomorphic(T, aulambda(a, {2, 1})).verdict == IsoVerdict::Yes);
}

TEST_CASE("submodules and quotients") {
    const auto a = sign_skew_algebra(2, F5());
    const auto R = regular_module(a);
    const auto le = line_element(*a, {1, 0});
    const auto sub = generated_submodule(R, Matrix::column(a->field(), le.element));
    CHECK(sub.module.dim() == 4);
    const auto q = quotient(R, sub.inclusion);
    CHECK(q.module.dim() == 4);
    CHECK(is_intertwiner(q.projection, R, q.module));
    CHECK(is_intertwiner(sub.inclusion, sub.module, R));
    // A / A u = A u for the 1-periodic Au_lambda
    CHECK(is_isomorphic(q.module, sub.module).verdict == IsoVerdict::Yes);
    Matrix bad(a->field(), 8, 1);
    bad.at(0, 0) = 1;
    CHECK_THROWS_AS(submodule(R, bad), ValidationError);
}

TEST_CASE("isomorphism testing") {
    const auto h4 = sign_skew_algebra(1, F5());
    std::mt19937_64 rng(9);
    const auto R = regular_module(h4);
    const auto Rc = R.conjugate(random_invertible(h4->field(), 4, rng));
    const auto yes = is_isomorphic(R, Rc);
    REQUIRE(yes.verdict == IsoVerdict::Yes);
    CHECK(is_intertwiner(yes.witness, R, Rc));
    const auto no = is_isomorphic(trivial_module(h4), S_of(h4));
    CHECK(no.verdict == IsoVerdict::No);
    CHECK(no.certificate == "top characters");
    const auto a = sign_skew_algebra(2, F5());
    const auto r2 = is_isomorphic(aulambda(a, {1, 0}), aulambda(a, {0, 1}));
    CHECK(r2.verdict == IsoVerdict::No);
    CHECK(r2.certificate == "rank-variety fingerprint");
}

TEST_CASE("fitting decomposition") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto kS = direct_sum({trivial_module(h4), S_of(h4)});
    const auto d1 = fitting_decompose(kS);
    CHECK(d1.summands.size() == 2);
    CHECK(d1.certified);
    const auto R = regular_module(h4);
    const auto d2 = fitting_decompose(R, 1);
    REQUIRE(d2.summands.size() == 2);
    CHECK(d2.summands[0].dim() == 2);
    CHECK(d2.summands[1].dim() == 2);
    CHECK(d2.certified);
    // witness conjugates M into the block sum
    const auto blocks = direct_sum(d2.summands);
    for (std::size_t g = 0; g < R.actions().size(); ++g)
        CHECK(R.action(g) * d2.witness == d2.witness * blocks.action(g));
    const auto a = sign_skew_algebra(2, F5());
    // Au_lambda = A e_- u + A e_+ u since u e_+ = e_- u; both halves are indecomposable
    const auto d3 = fitting_decompose(aulambda(a, {1, 1}));
    REQUIRE(d3.summands.size() == 2);
    CHECK(d3.certified);
    for (const auto& s : d3.summands) {
        CHECK(s.dim() == 2);
        CHECK(rank_variety(s).points == PointSet{{1, 1}});
    }
}

TEST_CASE("Krull-Schmidt on a direct sum") {
    const auto a = sign_skew_algebra(2, F5());
    const auto M = direct_sum({aulambda(a, {1, 0}), trivial_module(a), aulambda(a, {1, 4})});
    const auto d = fitting_decompose(M, 7);
    std::multiset<std::size_t> dims;
    for (const auto& s : d.summands) dims.insert(s.dim());
    CHECK(dims == std::multiset<std::size_t>{1, 2, 2, 2, 2});
}

TEST_CASE("restriction along an algebra map") {
    // Lambda(1) x| C_4 -> Lambda(1) x| C_2 with h -> g^2 restricts modules of the larger algebra
    const auto F = F5();
    const auto H = cyclic_skew_algebra(1, 4, 2, F);
    const auto A = sign_skew_algebra(1, F);
    const auto& sk = *H->skew_structure();
    const Vector g2 = H->basis_vector(sk.basis_index(0, 2));
    const auto M = restrict_module(regular_module(H), A, {H->generators()[0].element, g2});
    CHECK(M.dim() == 8);
    // restricting to k[u] gives rank at most half
    CHECK(rank(M.line_action({1})) <= M.dim() / 2);
}
