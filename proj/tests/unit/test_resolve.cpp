#include "doctest.h"
#include "suppvar/catalog.hpp"
#include "suppvar/iso.hpp"
#include "suppvar/resolution.hpp"
#include "suppvar/variety.hpp"

using namespace suppvar;

namespace {

FieldPtr F5() { return Field::prime(5); }

// top dimension of a module from ranks alone
std::size_t top_dim(const ModuleRep& m) {
    std::vector<Matrix> xs;
    for (auto g : m.A().exterior_generators()) xs.push_back(m.action(g));
    return m.dim() - rank(Matrix::hstack(xs));
}

std::size_t binom(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("projective covers") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto c = projective_cover(trivial_module(h4));
    CHECK(c.characters == std::vector<std::size_t>{0});
    CHECK(c.projective.dim() == 2);
    const auto R = regular_module(h4);
    const auto cr = projective_cover(R);
    CHECK(cr.projective.dim() == 4);
    CHECK(rank(cr.map) == 4);
    CHECK(projective_cover(trivial_module(Algebra::exterior(2, F5()))).projective.dim() == 4);
}

TEST_CASE("syzygies") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto S = character_module(h4, std::vector<Scalar>{4});
    CHECK(is_isomorphic(syzygy(trivial_module(h4)), S).verdict == IsoVerdict::Yes);
    const auto l1 = Algebra::exterior(1, F5());
    CHECK(is_isomorphic(syzygy(trivial_module(l1)), trivial_module(l1)).verdict == IsoVerdict::Yes);
    CHECK(syzygy(regular_module(h4)).dim() == 0);
}

TEST_CASE("Koszul resolutions of k over exterior algebras") {
    for (std::uint32_t c : {1u, 2u, 3u}) {
        const auto a = Algebra::exterior(c, F5());
        const auto r = resolve(trivial_module(a), c == 3 ? 5 : 6);
        const auto b = betti(r);
        for (std::size_t n = 0; n < b.b.size(); ++n) {
            CHECK(b.b[n] == binom(n + c - 1, c - 1));
            CHECK(b.b[n] == top_dim(r.syzygies[n]));
            CHECK(b.l[n] == b.b[n] << c);
        }
        CHECK(check_resolution(r).ok());
    }
}

TEST_CASE("resolution of k over H4 alternates characters") {
    const auto h4 = sign_skew_algebra(1, F5());
    const auto r = resolve(trivial_module(h4), 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(r.terms[n] == std::vector<std::size_t>{n % 2});
    CHECK(check_resolution(r).ok());
}

TEST_CASE("complexity estimates") {
    BettiSequence ones{{1, 1, 1, 1, 1, 1, 1, 1}, {}};
    CHECK(complexity_estimate(ones, 2).value == 1u);
    BettiSequence lin{{1, 2, 3, 4, 5, 6, 7}, {}};
    CHECK(complexity_estimate(lin, 2).value == 2u);
    BettiSequence term{{2, 1, 0, 0, 0, 0}, {}};
    CHECK(complexity_estimate(term, 2).value == 0u);
    BettiSequence wild{{1, 2, 4, 8, 16, 32, 64}, {}};
    CHECK_FALSE(complexity_estimate(wild, 2).value.has_value());
}

TEST_CASE("periodicity") {
    const auto a = sign_skew_algebra(2, F5());
    CHECK(detect_periodicity(aulambda(a, {1, 3})).period == 1u);
    const auto h4 = sign_skew_algebra(1, F5());
    CHECK(detect_periodicity(trivial_module(h4)).period == 2u);
    CHECK_FALSE(detect_periodicity(trivial_module(a), 4).period.has_value());
}

TEST_CASE("betti numbers add over direct sums") {
    const auto a = sign_skew_algebra(2, F5());
    const auto M = aulambda(a, {1, 1}), N = trivial_module(a);
    const auto bs = betti(resolve(direct_sum({M, N}), 4));
    const auto bm = betti(resolve(M, 4)), bn = betti(resolve(N, 4));
    for (std::size_t i = 0; i <= 4; ++i) CHECK(bs.b[i] == bm.b[i] + bn.b[i]);
}
