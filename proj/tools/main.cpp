// suppvar command-line interface. Exit codes: 0 ok, 2 invalid input, 3 property violation.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "suppvar/catalog.hpp"
#include "suppvar/experiment.hpp"
#include "suppvar/io.hpp"
#include "suppvar/tensor.hpp"

using namespace suppvar;

namespace {

constexpr int kOk = 0, kInvalid = 2, kViolation = 3;

struct Globals {
    std::uint32_t field_degree = 1;
    std::size_t steps = 8;
    std::uint64_t seed = 0;
    std::string out;
    bool json = false;
};

struct Emit {
    const Globals& g;
    // JSON documents go to --out when given, otherwise to stdout.
    void operator()(const Json& doc, const std::string& summary) const {
        const std::string text = dump_json(doc);
        if (!g.out.empty()) write_text_file(g.out, text);
        if (g.json || g.out.empty())
            std::cout << text;
        else
            std::cout << summary << "\n";
    }
};

AlgebraPtr load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }

ModuleRep load_module(const std::string& path, const AlgebraPtr& a) { return module_from_json(read_json_file(path), a); }

FieldPtr scan_field(const AlgebraPtr& a, std::uint32_t degree) {
    if (degree <= a->F().e()) return a->field();
    return Field::make(FieldSpec{a->F().p(), degree, {}});
}

Vector parse_scalars(const std::string& text, const Field& F) {
    Vector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long x = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            v.push_back(F.from_int(x));
        } catch (const std::logic_error&) {
            throw ValidationError("cannot parse '" + item + "' as an integer");
        }
    }
    return v;
}

std::string join_points(const PointSet& ps) {
    std::string s = "{";
    bool first = true;
    for (const auto& p : ps) {
        s += first ? "[" : ", [";
        first = false;
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + std::to_string(p[i]);
        s += "]";
    }
    return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"suppvar: support varieties over exterior and skew group algebras"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--field-degree", g.field_degree, "extension degree used for variety scans")
        ->check(CLI::Range(1, 4));
    app.add_option("--steps", g.steps, "resolution window");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--out", g.out, "write the JSON result to this file");
    app.add_flag("--json", g.json, "print JSON to stdout");
    app.fallthrough();

    std::string algebra_path, module_path, left_path, right_path, lambda_text, coeffs_text, config_path;
    std::size_t degree = 2;

    auto* validate = app.add_subcommand("validate", "validate an algebra (and optionally a module)");
    validate->add_option("algebra", algebra_path)->required();
    validate->add_option("module", module_path);

    auto* res = app.add_subcommand("resolve", "minimal resolution report");
    res->add_option("algebra", algebra_path)->required();
    res->add_option("module", module_path)->required();

    auto* var = app.add_subcommand("variety", "rank variety of a module");
    var->add_option("algebra", algebra_path)->required();
    var->add_option("module", module_path)->required();

    auto* ten = app.add_subcommand("tensor", "tensor product of two modules");
    ten->add_option("algebra", algebra_path)->required();
    ten->add_option("left", left_path)->required();
    ten->add_option("right", right_path)->required();

    auto* tpp = app.add_subcommand("tpp", "check V(M (x) N) = V(M) n V(N)");
    tpp->add_option("algebra", algebra_path)->required();
    tpp->add_option("--left", left_path)->required();
    tpp->add_option("--right", right_path)->required();

    auto* au = app.add_subcommand("aulambda", "the module A u_lambda");
    au->add_option("algebra", algebra_path)->required();
    au->add_option("--lambda", lambda_text)->required();

    auto* lz = app.add_subcommand("lzeta", "Carlson's L_zeta for a class in Ext(k,k)");
    lz->add_option("algebra", algebra_path)->required();
    lz->add_option("--degree", degree)->required();
    lz->add_option("--coeffs", coeffs_text)->required();

    auto* exp = app.add_subcommand("experiment", "seeded TPP sweep");
    exp->add_option("config", config_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    const Emit emit{g};
    try {
        if (*validate) {
            const AlgebraPtr a = load_algebra(algebra_path);
            Json doc{{"schema", "suppvar.validate/1"}, {"algebra", algebra_to_json(*a)}, {"dim", a->dim()}};
            std::string summary = "algebra " + a->hash() + " (dim " + std::to_string(a->dim()) + ") is valid";
            if (a->hopf()) {
                const HopfReport r = validate_hopf(*a);
                doc["hopf"] = hopf_report_to_json(r);
                summary += r.all_passed() ? "; all Hopf axioms pass" : "; Hopf axioms FAIL";
            }
            if (!module_path.empty()) {
                const ModuleRep m = load_module(module_path, a);
                doc["module"] = {{"dim", m.dim()}, {"fingerprint", module_fingerprint(m)}, {"valid", true}};
                summary += "; module of dim " + std::to_string(m.dim()) + " is valid";
            }
            emit(doc, summary);
            return kOk;
        }
        if (*res) {
            const AlgebraPtr a = load_algebra(algebra_path);
            const Resolution r = resolve(load_module(module_path, a), g.steps);
            const Json doc = resolution_report(r, g.seed);
            emit(doc, "b = " + doc["b"].dump() + ", complexity " + doc["complexity"].dump() + ", period " +
                          doc["period"].dump());
            return kOk;
        }
        if (*var) {
            const AlgebraPtr a = load_algebra(algebra_path);
            const ModuleRep m = load_module(module_path, a);
            const RankVariety rv = rank_variety(m, scan_field(a, g.field_degree));
            emit(variety_report(m, rv, g.steps), "rank variety " + join_points(rv.points));
            return kOk;
        }
        if (*ten) {
            const AlgebraPtr a = load_algebra(algebra_path);
            const ModuleRep t = tensor(load_module(left_path, a), load_module(right_path, a));
            emit(module_to_json(t), "tensor product of dim " + std::to_string(t.dim()));
            return kOk;
        }
        if (*tpp) {
            const AlgebraPtr a = load_algebra(algebra_path);
            const ModuleRep m = load_module(left_path, a), n = load_module(right_path, a);
            const TppReport r = tpp_check(m, n);
            Json doc = tpp_report_to_json(a->F(), r);
            if (!r.holds)
                doc["witness"] = {{"algebra", algebra_to_json(*a)}, {"left", module_to_json(m)}, {"right", module_to_json(n)}};
            emit(doc, std::string(r.holds ? "holds" : "COUNTEREXAMPLE") + ": V(M(x)N) = " + join_points(r.lhs) +
                          ", V(M) n V(N) = " + join_points(r.rhs));
            return r.holds ? kOk : kViolation;
        }
        if (*au) {
            const AlgebraPtr a = load_algebra(algebra_path);
            const ModuleRep m = aulambda(a, parse_scalars(lambda_text, a->F()));
            emit(module_to_json(m), "Au_lambda of dim " + std::to_string(m.dim()));
            return kOk;
        }
        if (*lz) {
            const AlgebraPtr a = load_algebra(algebra_path);
            KCohomology h(a, degree);
            const ModuleRep m = h.lzeta(h.make_cocycle(degree, parse_scalars(coeffs_text, a->F())));
            emit(module_to_json(m), "L_zeta of dim " + std::to_string(m.dim()));
            return kOk;
        }
        if (*exp) {
            const Json cfg = read_json_file(config_path);
            ExperimentConfig c = config_from_json(cfg);
            if (app.get_option("--seed")->count()) c.seed = g.seed;
            if (app.get_option("--field-degree")->count()) c.field_degree = g.field_degree;
            const ExperimentOutcome o = run_experiment(c);
            const auto& s = o.report["summary"];
            emit(o.report, std::to_string(s["holds"].get<std::size_t>()) + "/" +
                               std::to_string(s["pairs"].get<std::size_t>()) + " pairs hold, " +
                               std::to_string(o.failures) + " counterexamples, " + std::to_string(o.errors) +
                               " errors");
            if (o.failures) return kViolation;
            return o.errors ? kInvalid : kOk;
        }
    } catch (const ValidationError& e) {
        if (g.json)
            std::cout << dump_json({{"error", e.what()}, {"exit", kInvalid}});
        else
            std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const FieldTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
