// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "suppvar/catalog.hpp"
#include "suppvar/cohom.hpp"
#include "suppvar/experiment.hpp"
#include "suppvar/iso.hpp"
#include "suppvar/resolution.hpp"
#include "suppvar/tensor.hpp"
#include "suppvar/variety.hpp"

using namespace suppvar;

namespace {

// pinned thresholds
constexpr std::uint32_t kP = 5;
constexpr std::size_t kKoszulSteps = 8;
constexpr std::size_t kExtDegreeMax = 6;
constexpr std::size_t kMinEnumeratedPairs = 100;
constexpr std::size_t kRandomPairs = 100;
constexpr std::size_t kRandomDimMax = 12;
constexpr std::uint64_t kRandomSeed = 42;
constexpr std::size_t kLzetaClasses = 20;
constexpr std::size_t kComplexityOneModules = 30;
constexpr std::size_t kComplexityOneAttempts = 20000;
constexpr std::size_t kPeriodBound = 8;
constexpr double kTimeBudgetSeconds = 300.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

std::string show(const PointSet& ps) {
    std::string s = "{";
    for (const auto& p : ps) {
        s += s.size() > 1 ? " [" : "[";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        s += "]";
    }
    return s + "}";
}

std::string show(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void parallel(std::size_t n, const std::function<void(std::size_t)>& job) {
    const std::size_t threads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) job(i);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

// dim M / rad M straight from the generator actions
std::size_t top_dim(const ModuleRep& m) {
    if (m.dim() == 0) return 0;
    std::vector<Matrix> blocks;
    for (auto g : m.A().exterior_generators()) blocks.push_back(m.action(g));
    return m.dim() - rank(Matrix::hstack(blocks));
}

FieldPtr f5() { return Field::make(FieldSpec{kP, 1, {}}); }

std::vector<Vector> lines(const AlgebraPtr& a) {
    std::vector<Vector> out;
    for (const auto& p : proj_points(a->F(), a->exterior_rank())) out.push_back(Vector(p.begin(), p.end()));
    return out;
}

PointSet point_of(const Vector& v) { return PointSet{ProjPoint(v.begin(), v.end())}; }

// ---------------------------------------------------------------------------

Outcome koszul_betti() {
    Outcome o;
    for (std::uint32_t c = 1; c <= 3; ++c) {
        const AlgebraPtr a = Algebra::exterior(c, f5());
        const Resolution r = resolve(trivial_module(a), kKoszulSteps - 1);
        const BettiSequence b = betti(r);
        o.require(check_resolution(r).ok(), "c=" + std::to_string(c) + ": resolution fails its structural checks");
        for (std::size_t n = 0; n < kKoszulSteps; ++n) {
            const std::uint64_t want = binom(n + c - 1, c - 1);
            o.require(b.b[n] == want, "c=" + std::to_string(c) + " b_" + std::to_string(n) + " = " +
                                          std::to_string(b.b[n]) + ", expected " + std::to_string(want));
            o.require(top_dim(r.syzygies[n]) == want, "c=" + std::to_string(c) + ": top of Omega^" +
                                                          std::to_string(n) + " disagrees");
        }
    }
    o.detail = "c=1..3, b_0..b_7";
    return o;
}

Outcome ext_skew() {
    Outcome o;
    for (std::uint32_t c = 1; c <= 3; ++c) {
        const AlgebraPtr a = sign_skew_algebra(c, f5());
        KCohomology h(a, kExtDegreeMax + 1);
        const Resolution& r = h.resolution();
        const ModuleRep k = trivial_module(a);
        for (std::size_t n = 0; n <= kExtDegreeMax + 1; ++n) {
            const std::size_t got = h.ext_dim(n);
            const std::size_t want = n % 2 ? 0 : binom(n + c - 1, c - 1);
            const std::string tag = "c=" + std::to_string(c) + " Ext^" + std::to_string(n);
            o.require(got == want, tag + " = " + std::to_string(got) + ", expected " + std::to_string(want));
            if (n <= kExtDegreeMax)
                o.require(ext_dim(r, k, n) == want, tag + ": Hom complex disagrees");
        }
    }
    o.detail = "c=1..3, p=5, degrees 0..7";
    return o;
}

Outcome aulambda_props() {
    Outcome o;
    const AlgebraPtr a = sign_skew_algebra(2, f5());
    const ModuleRep k = trivial_module(a);
    const auto ls = lines(a);
    for (const auto& lam : ls) {
        const ModuleRep m = aulambda(a, lam);
        const std::string tag = "lambda=" + show(lam);
        o.require(m.dim() == 4, tag + ": dim " + std::to_string(m.dim()));
        const auto per = detect_periodicity(m, kPeriodBound);
        o.require(per.period && *per.period == 1, tag + ": not certified of period 1");
        const Resolution r = resolve(m, 5);
        for (std::size_t n = 1; n <= 4; ++n)
            o.require(ext_dim(r, k, n) != 0, tag + ": Ext^" + std::to_string(n) + "(Au, k) = 0");
        const PointSet rv = rank_variety(m).points;
        o.require(rv == point_of(lam), tag + ": RV = " + show(rv));
    }
    o.detail = std::to_string(ls.size()) + " lines over Lambda(2) x| C_2";
    return o;
}

Outcome variety_properties() {
    Outcome o;
    const AlgebraPtr a = sign_skew_algebra(2, f5());
    const auto base = base_catalog(a);
    const auto mods = with_pairwise_sums(base);
    const std::size_t nb = base.size(), n = mods.size();
    std::vector<PointSet> rv(n);
    parallel(n, [&](std::size_t i) { rv[i] = rank_variety(mods[i].module).points; });
    std::mutex mu;
    auto fail = [&](bool ok, const std::string& what) {
        std::lock_guard lock(mu);
        o.require(ok, what);
    };

    // direct sums: with_pairwise_sums appends M_i + M_j in (i < j) order
    std::size_t idx = nb;
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j, ++idx)
            fail(rv[idx] == unite(rv[i], rv[j]), "union fails for " + mods[idx].name);

    parallel(n, [&](std::size_t i) {
        const ModuleRep& m = mods[i].module;
        fail(rank_variety(syzygy(m)).points == rv[i], "syzygy changes RV of " + mods[i].name);
        std::mt19937_64 rng(1000 + i);
        Matrix P(m.field(), m.dim(), m.dim());
        do {
            for (std::size_t r = 0; r < m.dim(); ++r)
                for (std::size_t c = 0; c < m.dim(); ++c) P.at(r, c) = static_cast<Scalar>(rng() % kP);
        } while (rank(P) != m.dim());
        fail(rank_variety(m.conjugate(P)).points == rv[i], "base change changes RV of " + mods[i].name);
    });

    std::atomic<std::size_t> checked{0};
    parallel(n * n, [&](std::size_t t) {
        const std::size_t i = t / n, j = t % n;
        const PointSet lhs = rank_variety(tensor(mods[i].module, mods[j].module)).points;
        const PointSet cap = intersect(rv[i], rv[j]);
        fail(std::includes(cap.begin(), cap.end(), lhs.begin(), lhs.end()),
             "RV(M(x)N) not inside RV(M) n RV(N) for " + mods[i].name + ", " + mods[j].name);
        ++checked;
    });
    o.detail = std::to_string(n) + " modules, " + std::to_string(checked.load()) + " tensor pairs";
    return o;
}

ExperimentConfig config_for(const AlgebraPtr& a, const std::string& recipe) {
    ExperimentConfig c;
    c.algebra = algebra_to_json(*a);
    c.recipe = recipe;
    c.seed = kRandomSeed;
    c.trials = kRandomPairs;
    c.dim_max = kRandomDimMax;
    return c;
}

Outcome tpp() {
    Outcome o;
    std::size_t enumerated = 0;
    std::ostringstream detail;
    for (const AlgebraPtr& a : {sign_skew_algebra(1, f5()), sign_skew_algebra(2, f5())}) {
        const ExperimentOutcome e = run_experiment(config_for(a, "tensor-closure"));
        const auto pairs = e.report["summary"]["pairs"].get<std::size_t>();
        enumerated += pairs;
        detail << (a->exterior_rank() == 1 ? "H4: " : "Lambda(2) x| C_2: ") << pairs << " closure pairs; ";
        o.require(e.failures == 0, std::to_string(e.failures) + " closure counterexamples, c=" +
                                       std::to_string(a->exterior_rank()));
        o.require(e.errors == 0, std::to_string(e.errors) + " closure errors");
    }
    o.require(enumerated >= kMinEnumeratedPairs, "only " + std::to_string(enumerated) + " enumerated pairs");

    const ExperimentOutcome r = run_experiment(config_for(sign_skew_algebra(2, f5()), "random-quotient"));
    const auto pairs = r.report["summary"]["pairs"].get<std::size_t>();
    o.require(pairs == kRandomPairs, "random sweep ran " + std::to_string(pairs) + " pairs");
    o.require(r.failures == 0, std::to_string(r.failures) + " random counterexamples");
    o.require(r.errors == 0, std::to_string(r.errors) + " random errors");
    for (const auto& res : r.report["results"])
        o.require(res["left"]["dim"].get<std::size_t>() <= kRandomDimMax &&
                      res["right"]["dim"].get<std::size_t>() <= kRandomDimMax,
                  "random module above the dimension cap");
    detail << pairs << " random pairs (seed 42, dim <= 12)";
    o.detail = detail.str();
    return o;
}

Outcome periodic_pairs() {
    Outcome o;
    const AlgebraPtr a = sign_skew_algebra(2, f5());
    std::vector<NamedModule> periodic;
    std::vector<PointSet> rv;
    for (auto& nm : indecomposable_catalog(a)) {
        const auto d = fitting_decompose(nm.module);
        if (d.summands.size() != 1 || !d.certified) continue;
        if (is_projective(nm.module) || !detect_periodicity(nm.module, kPeriodBound).period) continue;
        rv.push_back(rank_variety(nm.module).points);
        periodic.push_back(std::move(nm));
    }
    std::size_t equal = 0, disjoint = 0;
    for (std::size_t i = 0; i < periodic.size(); ++i)
        for (std::size_t j = 0; j < periodic.size(); ++j) {
            const bool proj = is_projective(tensor(periodic[i].module, periodic[j].module));
            const std::string tag = periodic[i].name + " (x) " + periodic[j].name;
            if (rv[i] == rv[j] && !rv[i].empty()) {
                ++equal;
                o.require(!proj, tag + ": equal varieties but projective");
            } else if (intersect(rv[i], rv[j]).empty()) {
                ++disjoint;
                o.require(proj, tag + ": disjoint varieties but not projective");
            }
        }
    o.require(equal > 0 && disjoint > 0, "catalog gave no pairs to test");
    o.detail = std::to_string(periodic.size()) + " periodic indecomposables, " + std::to_string(equal) + " equal and " +
               std::to_string(disjoint) + " disjoint pairs";
    return o;
}

Outcome lzeta_tensor() {
    Outcome o;
    const AlgebraPtr a = sign_skew_algebra(2, f5());
    KCohomology h(a, 3);
    const auto basis = h.ext_basis(2);
    std::vector<std::pair<std::string, ModuleRep>> targets{{"k", trivial_module(a)}};
    for (const auto& lam : lines(a)) targets.push_back({"Au" + show(lam), aulambda(a, lam)});
    std::vector<PointSet> target_rv;
    for (const auto& t : targets) target_rv.push_back(rank_variety(t.second).points);

    std::mt19937_64 rng(kRandomSeed);
    std::size_t drawn = 0, checks = 0;
    while (drawn < kLzetaClasses) {
        Vector coeffs(h.resolution().terms[2].size(), 0);
        for (const auto& b : basis) {
            const Scalar s = static_cast<Scalar>(rng() % kP);
            for (std::size_t i = 0; i < coeffs.size(); ++i)
                coeffs[i] = a->F().add(coeffs[i], a->F().mul(s, b.coefficients[i]));
        }
        const Cocycle z = h.make_cocycle(2, coeffs);
        if (h.is_zero(z)) continue;
        ++drawn;
        const PointSet locus = h.zero_locus(z);
        // a nonzero binary quadric has at most two zeros
        o.require(locus.size() <= 2, "zero locus of " + show(coeffs) + " has " + std::to_string(locus.size()) + " points");
        const ModuleRep L = h.lzeta(z);
        for (std::size_t t = 0; t < targets.size(); ++t, ++checks) {
            const PointSet got = rank_variety(tensor(L, targets[t].second)).points;
            const PointSet want = intersect(locus, target_rv[t]);
            o.require(got == want, "zeta=" + show(coeffs) + ", M=" + targets[t].first + ": " + show(got) + " vs " + show(want));
        }
    }
    o.detail = std::to_string(drawn) + " classes x " + std::to_string(targets.size()) + " modules = " +
               std::to_string(checks) + " checks";
    return o;
}

Outcome complexity_one() {
    Outcome o;
    const AlgebraPtr a = sign_skew_algebra(2, f5());
    std::mt19937_64 rng(kRandomSeed);
    std::size_t found = 0, attempts = 0;
    while (found < kComplexityOneModules && attempts < kComplexityOneAttempts) {
        ++attempts;
        const ModuleRep m = random_quotient(a, rng, kRandomDimMax);
        const auto est = complexity_estimate(betti(resolve(m, 8)), a->exterior_rank());
        if (!est.value || *est.value != 1) continue;
        ++found;
        const std::string tag = "module #" + std::to_string(found) + " (dim " + std::to_string(m.dim()) + ")";
        const auto d = fitting_decompose(m, found);
        o.require(d.certified, tag + ": decomposition not certified");
        std::vector<ModuleRep> blocks;
        std::vector<ModuleRep> nonprojective;
        for (const auto& s : d.summands) {
            blocks.push_back(s);
            if (is_projective(s)) continue;
            const auto per = detect_periodicity(s, kPeriodBound, found);
            o.require(per.period.has_value(), tag + ": a non-projective summand has no period <= 8");
            nonprojective.push_back(s);
        }
        o.require(!nonprojective.empty(), tag + ": complexity 1 but every summand is projective");
        // witness really splits M
        const Matrix& W = d.witness;
        const auto Winv = inverse(W);
        o.require(Winv.has_value(), tag + ": decomposition witness is singular");
        if (Winv) {
            const ModuleRep sum = direct_sum(blocks);
            for (std::size_t g = 0; g < m.actions().size(); ++g)
                o.require(*Winv * m.action(g) * W == sum.action(g), tag + ": witness does not conjugate onto the sum");
        }
        if (!nonprojective.empty()) {
            const auto per = detect_periodicity(direct_sum(nonprojective), kPeriodBound, found);
            o.require(per.period && *per.period <= kPeriodBound, tag + ": periodic part has no certified period <= 8");
        }
    }
    o.require(found == kComplexityOneModules, "only " + std::to_string(found) + " complexity-1 modules in " +
                                                  std::to_string(attempts) + " draws");
    o.detail = std::to_string(found) + " modules from " + std::to_string(attempts) + " draws";
    return o;
}

// returns the number of failing pairs
std::size_t commutativity_over(const AlgebraPtr& a, std::size_t max_degree, const std::string& name, Outcome& o,
                               std::size_t& pairs) {
    std::size_t bad = 0;
    KCohomology h(a, 2 * max_degree);
    const Field& F = a->F();
    std::vector<Cocycle> basis;
    for (std::size_t n = 1; n <= max_degree; ++n)
        for (auto& z : h.ext_basis(n)) basis.push_back(std::move(z));
    for (const auto& z : basis)
        for (const auto& w : basis) {
            ++pairs;
            const Cocycle zw = h.yoneda(z, w), wz = h.yoneda(w, z);
            const bool negate = (z.degree * w.degree) % 2 == 1;
            bool ok = true;
            for (std::size_t i = 0; i < zw.coefficients.size(); ++i) {
                const Scalar rhs = negate ? F.neg(wz.coefficients[i]) : wz.coefficients[i];
                ok = ok && zw.coefficients[i] == rhs;
            }
            bad += !ok;
            o.require(ok, name + ": degrees " + std::to_string(z.degree) + "," + std::to_string(w.degree) + ": " +
                              show(zw.coefficients) + " vs " + (negate ? "-" : "") + show(wz.coefficients));
        }
    return bad;
}

Outcome graded_commutativity() {
    Outcome o;
    std::size_t exterior_pairs = 0, skew_pairs = 0;
    const std::size_t eb = commutativity_over(Algebra::exterior(2, f5()), 3, "Lambda(2)", o, exterior_pairs);
    const std::size_t sb = commutativity_over(sign_skew_algebra(2, f5()), 4, "Lambda(2) x| C_2", o, skew_pairs);
    o.detail = "Lambda(2): " + std::to_string(eb) + "/" + std::to_string(exterior_pairs) +
               " pairs fail; Lambda(2) x| C_2: " + std::to_string(sb) + "/" + std::to_string(skew_pairs) + " fail";
    return o;
}

// rank-based freeness over Lambda(1) x| C_2: x acts with rank dim / 2
bool free_over_x(const ModuleRep& m) {
    const Matrix& x = m.action(m.A().exterior_generators().at(0));
    return 2 * rank(x) == m.dim();
}

Outcome restriction() {
    Outcome o;
    const AlgebraPtr H = cyclic_skew_algebra(1, 4, 2, f5());
    const AlgebraPtr A = sign_skew_algebra(1, f5());
    const Vector g = H->generators().at(H->group_generators().at(0)).element;
    const Vector x = H->generators().at(H->exterior_generators().at(0)).element;
    std::vector<Vector> images(A->generators().size());
    images.at(A->exterior_generators().at(0)) = x;
    images.at(A->group_generators().at(0)) = H->multiply(g, g);

    const auto mods = with_pairwise_sums(base_catalog(H));
    std::vector<PointSet> rvH, rvA;
    std::vector<bool> oracle;
    for (const auto& nm : mods) {
        const ModuleRep r = restrict_module(nm.module, A, images);
        rvH.push_back(rank_variety(nm.module).points);
        rvA.push_back(rank_variety(r).points);
        oracle.push_back(free_over_x(r));
        o.require(rvA.back().empty() == oracle.back(), nm.name + ": restricted RV disagrees with the rank oracle");
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j) {
            if (i == j || rvH[i] != rvH[j]) continue;
            ++pairs;
            o.require(rvA[i] == rvA[j], mods[i].name + ", " + mods[j].name + ": restrictions differ");
        }
    o.require(pairs > 0, "no pairs with equal varieties");
    o.detail = std::to_string(mods.size()) + " modules, " + std::to_string(pairs) + " ordered pairs with equal RV";
    return o;
}

Outcome determinism() {
    Outcome o;
    const AlgebraPtr a = sign_skew_algebra(2, f5());
    std::vector<std::string> dumps;
    for (const std::size_t threads : {1u, 0u, 3u}) {
        for (const char* recipe : {"random-quotient", "syzygy-of-random", "tensor-closure"}) {
            ExperimentConfig c = config_for(a, recipe);
            c.threads = threads;
            c.trials = 25;
            dumps.push_back(recipe + std::string(":") + dump_json(run_experiment(c).report));
        }
    }
    for (std::size_t i = 3; i < dumps.size(); ++i)
        o.require(dumps[i] == dumps[i % 3], "run " + std::to_string(i) + " differs from the first run");
    o.detail = "3 recipes x 3 thread counts";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "Koszul Betti numbers over Lambda(c)", koszul_betti},
        {2, "Ext(k,k) over Lambda(c) x| C_2", ext_skew},
        {3, "Au_lambda: dim 4, period 1, Ext nonzero, RV = {lambda}", aulambda_props},
        {4, "rank variety: sums, syzygies, base change, tensor inclusion", variety_properties},
        {5, "tensor product property on closures and random pairs", tpp},
        {6, "periodic indecomposables: equal vs disjoint varieties", periodic_pairs},
        {7, "RV(L_zeta (x) M) = Z(zeta) n RV(M)", lzeta_tensor},
        {8, "complexity 1 splits as periodic + projective", complexity_one},
        {9, "graded commutativity of the Yoneda product", graded_commutativity},
        {10, "equal varieties survive restriction to Lambda(1) x| C_2", restriction},
        {11, "experiment reports are byte-identical", determinism},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.problems.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %2d  %s  [%s; %.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        for (const auto& p : o.problems) std::printf("        %s\n", p.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s    total runtime %.1fs (budget %.0fs)\n", total <= kTimeBudgetSeconds ? "PASS" : "FAIL", total,
                kTimeBudgetSeconds);
    if (total > kTimeBudgetSeconds) ++failed;
    std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
    return failed ? 1 : 0;
}
