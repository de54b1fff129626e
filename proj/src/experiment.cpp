#include "suppvar/experiment.hpp"

#include <atomic>
#include <thread>

#include "suppvar/catalog.hpp"
#include "suppvar/tensor.hpp"

namespace suppvar {

ExperimentConfig config_from_json(const Json& j) {
    ExperimentConfig c;
    if (!j.is_object()) throw ValidationError("experiment config must be an object");
    try {
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("trials")) c.trials = j.at("trials").get<std::size_t>();
        if (j.contains("dim_max")) c.dim_max = j.at("dim_max").get<std::size_t>();
        if (j.contains("recipe")) c.recipe = j.at("recipe").get<std::string>();
        if (j.contains("field_degree")) c.field_degree = j.at("field_degree").get<std::uint32_t>();
        if (j.contains("threads")) c.threads = j.at("threads").get<std::size_t>();
    } catch (const Json::exception& e) {
        throw ValidationError(std::string("bad experiment config: ") + e.what());
    }
    if (!j.contains("algebra")) throw ValidationError("missing field 'algebra'");
    c.algebra = j.at("algebra");
    if (c.recipe != "catalog" && c.recipe != "random-quotient" && c.recipe != "syzygy-of-random" &&
        c.recipe != "tensor-closure")
        throw ValidationError("unknown recipe '" + c.recipe + "'");
    if (c.field_degree < 1 || c.field_degree > 4) throw ValidationError("field_degree must be between 1 and 4");
    return c;
}

Json config_to_json(const ExperimentConfig& c) {
    return {{"seed", c.seed},     {"trials", c.trials}, {"dim_max", c.dim_max},
            {"algebra", c.algebra}, {"recipe", c.recipe}, {"field_degree", c.field_degree}};
}

namespace {

Json describe(const NamedModule& m) {
    return {{"name", m.name}, {"dim", m.module.dim()}, {"fingerprint", module_fingerprint(m.module)}};
}

Json run_pair(const AlgebraPtr& a, const NamedModule& l, const NamedModule& r) {
    const TppReport t = tpp_check(l.module, r.module);
    Json j{{"left", describe(l)},
           {"right", describe(r)},
           {"lhs", points_to_json(a->F(), t.lhs)},
           {"rhs", points_to_json(a->F(), t.rhs)},
           {"holds", t.holds},
           {"inclusion_holds", t.inclusion_holds}};
    if (!t.holds)
        j["witness"] = {{"algebra", algebra_to_json(*a)},
                        {"left", module_to_json(l.module)},
                        {"right", module_to_json(r.module)}};
    return j;
}

template <class Job>
void parallel_for(std::size_t n, std::size_t threads, Job&& job) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(n, 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) job(i);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& c) {
    AlgebraPtr a = algebra_from_json(c.algebra);
    if (c.field_degree > 1) a = a->extend_scalars(Field::make(FieldSpec{a->F().p(), c.field_degree, {}}));
    if (!a->skew_structure() || !a->hopf()) throw ValidationError("experiments need a skew exterior Hopf algebra");

    std::vector<Json> results;
    const bool enumerative = c.recipe == "catalog" || c.recipe == "tensor-closure";
    if (enumerative) {
        std::vector<NamedModule> mods = indecomposable_catalog(a, c.seed);
        if (c.recipe == "tensor-closure") mods = tensor_closure(std::move(mods), c.dim_max, 64, c.seed);
        const std::size_t n = mods.size();
        results.resize(n * n);
        parallel_for(n * n, c.threads, [&](std::size_t i) {
            Json r;
            try {
                r = run_pair(a, mods[i / n], mods[i % n]);
            } catch (const std::exception& e) {
                r = {{"error", e.what()}};
            }
            r["trial"] = i;
            results[i] = std::move(r);
        });
    } else {
        results.resize(c.trials);
        parallel_for(c.trials, c.threads, [&](std::size_t i) {
            const std::uint64_t seed = c.seed ^ static_cast<std::uint64_t>(i);
            Json r;
            try {
                std::mt19937_64 rng(seed);
                auto draw = [&] {
                    return c.recipe == "random-quotient" ? random_quotient(a, rng, c.dim_max)
                                                         : syzygy_of_random(a, rng, c.dim_max);
                };
                NamedModule l{"left", draw()};
                NamedModule rt{"right", draw()};
                r = run_pair(a, l, rt);
            } catch (const std::exception& e) {
                r = {{"error", e.what()}};
            }
            r["trial"] = i;
            r["seed"] = seed;
            results[i] = std::move(r);
        });
    }

    ExperimentOutcome out;
    std::size_t holds = 0;
    for (const auto& r : results) {
        if (r.contains("error"))
            ++out.errors;
        else if (r.at("holds").get<bool>())
            ++holds;
        else
            ++out.failures;
    }
    out.report = {{"schema", "suppvar.experiment/1"},
                  {"config", config_to_json(c)},
                  {"algebra_hash", a->hash()},
                  {"results", results},
                  {"summary",
                   {{"pairs", results.size()},
                    {"holds", holds},
                    {"failures", out.failures},
                    {"errors", out.errors},
                    {"braided", a->is_canonical_c2()},
                    {"label", a->is_canonical_c2() ? "" : "empirical, braiding unverified"}}}};
    return out;
}

}  // namespace suppvar
