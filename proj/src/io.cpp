#include "suppvar/io.hpp"

#include <fstream>
#include <sstream>

namespace suppvar {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T as(const Json& j, const char* what) {
    try {
        return j.get<T>();
    } catch (const Json::exception&) {
        throw ValidationError(std::string("field '") + what + "' has the wrong type");
    }
}

SparseVec sparse_from_json(const Field& F, const Json& j, std::size_t dim) {
    SparseVec v;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw ValidationError("sparse entries are [index, coefficient] pairs");
        const auto idx = as<std::size_t>(t[0], "index");
        if (idx >= dim) throw ValidationError("basis index out of range");
        v.push_back({static_cast<std::uint32_t>(idx), scalar_from_json(F, t[1])});
    }
    return v;
}

Vector dense_from_sparse(const Field& F, const SparseVec& s, std::size_t dim) {
    Vector v(dim, 0);
    for (const auto& t : s) v[t.index] = F.add(v[t.index], t.coef);
    return v;
}

Json sparse_to_json(const Field& F, const Vector& v) {
    Json out = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) out.push_back({i, scalar_to_json(F, v[i])});
    return out;
}

}  // namespace

Json scalar_to_json(const Field& F, Scalar s) {
    if (F.is_prime()) return s;
    return F.coeffs(s);
}

Scalar scalar_from_json(const Field& F, const Json& j) {
    if (j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (!F.is_prime()) {
            if (v < 0 || static_cast<std::uint64_t>(v) >= F.p()) throw ValidationError("scalar out of range");
            return static_cast<Scalar>(v);
        }
        return F.from_int(v);
    }
    if (j.is_array() && j.size() == F.e()) {
        std::vector<std::uint32_t> c;
        for (const auto& x : j) {
            const auto v = as<std::int64_t>(x, "scalar");
            if (v < 0 || static_cast<std::uint64_t>(v) >= F.p()) throw ValidationError("scalar coefficient out of range");
            c.push_back(static_cast<std::uint32_t>(v));
        }
        return F.from_coeffs(c);
    }
    throw ValidationError("scalar must be an integer or an array of " + std::to_string(F.e()) + " integers");
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(scalar_to_json(m.F(), m.at(i, j)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Matrix matrix_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array()) throw ValidationError("matrix must be a list of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows ? j[0].size() : 0;
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ValidationError("matrix rows have unequal lengths");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = scalar_from_json(*f, j[i][k]);
    }
    return m;
}

Json field_to_json(const Field& F) {
    Json j{{"p", F.p()}, {"e", F.e()}};
    if (F.e() > 1) j["modulus"] = F.spec().modulus;
    return j;
}

FieldPtr field_from_json(const Json& j) {
    FieldSpec s;
    s.p = as<std::uint32_t>(need(j, "p"), "p");
    s.e = j.contains("e") ? as<std::uint32_t>(j.at("e"), "e") : 1;
    if (j.contains("modulus")) s.modulus = as<std::vector<std::uint32_t>>(j.at("modulus"), "modulus");
    return Field::make(s);
}

AlgebraPtr algebra_from_json(const Json& j) {
    const FieldPtr F = field_from_json(need(j, "field"));
    const auto kind = as<std::string>(need(j, "kind"), "kind");
    if (kind == "exterior") return Algebra::exterior(as<std::uint32_t>(need(j, "c"), "c"), F);
    if (kind == "skew_exterior") {
        const auto c = as<std::uint32_t>(need(j, "c"), "c");
        const Json& g = need(j, "group");
        GroupData gd;
        gd.orders = as<std::vector<std::uint32_t>>(need(g, "orders"), "orders");
        for (const auto& m : need(g, "action")) gd.action.push_back(matrix_from_json(F, m));
        gd.h = as<std::vector<std::uint32_t>>(need(g, "h"), "h");
        if (j.contains("hopf") && j.at("hopf") != "canonical")
            throw ValidationError("skew exterior algebras only take the canonical Hopf structure");
        return Algebra::skew(c, std::move(gd), F);
    }
    if (kind == "structure_constants") {
        const auto labels = as<std::vector<std::string>>(need(j, "labels"), "labels");
        const std::size_t dim = labels.size();
        std::vector<SparseVec> products(dim * dim);
        for (const auto& e : need(j, "products")) {
            const auto a = as<std::size_t>(need(e, "i"), "i"), b = as<std::size_t>(need(e, "j"), "j");
            if (a >= dim || b >= dim) throw ValidationError("product index out of range");
            products[a * dim + b] = sparse_from_json(*F, need(e, "terms"), dim);
        }
        std::vector<Generator> gens;
        for (const auto& g : need(j, "generators")) {
            Generator gen;
            gen.name = as<std::string>(need(g, "name"), "name");
            const auto k = g.contains("kind") ? as<std::string>(g.at("kind"), "kind") : "other";
            gen.kind = k == "exterior" ? GeneratorKind::Exterior : k == "group" ? GeneratorKind::Group : GeneratorKind::Other;
            gen.element = dense_from_sparse(*F, sparse_from_json(*F, need(g, "element"), dim), dim);
            gens.push_back(std::move(gen));
        }
        const auto radical = as<std::vector<std::size_t>>(need(j, "radical"), "radical");
        std::optional<HopfData> hopf;
        if (j.contains("hopf") && !j.at("hopf").is_null()) {
            const Json& h = j.at("hopf");
            HopfData hd;
            for (const auto& d : need(h, "delta")) {
                std::vector<CoproductTerm> terms;
                for (const auto& t : d) {
                    if (!t.is_array() || t.size() != 3) throw ValidationError("coproduct terms are [coef, left, right]");
                    const auto l = as<std::size_t>(t[1], "left"), r = as<std::size_t>(t[2], "right");
                    if (l >= dim || r >= dim) throw ValidationError("coproduct index out of range");
                    terms.push_back({scalar_from_json(*F, t[0]), static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(r)});
                }
                hd.delta.push_back(std::move(terms));
            }
            for (const auto& v : need(h, "counit")) hd.counit.push_back(scalar_from_json(*F, v));
            for (const auto& s : need(h, "antipode")) hd.antipode.push_back(dense_from_sparse(*F, sparse_from_json(*F, s, dim), dim));
            hopf = std::move(hd);
        }
        return Algebra::from_structure_constants(F, labels, std::move(products), as<std::size_t>(need(j, "unit"), "unit"),
                                                 std::move(gens), radical, std::move(hopf));
    }
    throw ValidationError("unknown algebra kind '" + kind + "'");
}

Json algebra_to_json(const Algebra& a) {
    const Field& F = a.F();
    Json j{{"field", field_to_json(F)}, {"kind", a.kind()}, {"hash", a.hash()}};
    if (a.kind() == "exterior") {
        j["c"] = a.skew_structure()->c;
    } else if (a.kind() == "skew_exterior") {
        const auto& sk = *a.skew_structure();
        j["c"] = sk.c;
        Json act = Json::array();
        for (const auto& m : sk.group.action) act.push_back(matrix_to_json(m));
        j["group"] = {{"orders", sk.group.orders}, {"action", act}, {"h", sk.group.h}};
        j["hopf"] = "canonical";
    } else {
        j["labels"] = a.labels();
        j["unit"] = a.unit_index();
        j["radical"] = a.radical_basis();
        Json prods = Json::array();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const auto& p = a.product(i, k);
                if (p.empty()) continue;
                Json terms = Json::array();
                for (const auto& t : p) terms.push_back({t.index, scalar_to_json(F, t.coef)});
                prods.push_back({{"i", i}, {"j", k}, {"terms", terms}});
            }
        j["products"] = prods;
        Json gens = Json::array();
        for (const auto& g : a.generators()) {
            const char* kind = g.kind == GeneratorKind::Exterior ? "exterior" : g.kind == GeneratorKind::Group ? "group" : "other";
            gens.push_back({{"name", g.name}, {"kind", kind}, {"element", sparse_to_json(F, g.element)}});
        }
        j["generators"] = gens;
        if (a.hopf()) {
            Json delta = Json::array(), counit = Json::array(), antipode = Json::array();
            for (const auto& d : a.hopf()->delta) {
                Json terms = Json::array();
                for (const auto& t : d) terms.push_back({scalar_to_json(F, t.coef), t.left, t.right});
                delta.push_back(terms);
            }
            for (auto v : a.hopf()->counit) counit.push_back(scalar_to_json(F, v));
            for (const auto& s : a.hopf()->antipode) antipode.push_back(sparse_to_json(F, s));
            j["hopf"] = {{"delta", delta}, {"counit", counit}, {"antipode", antipode}};
        }
    }
    return j;
}

Json module_to_json(const ModuleRep& m) {
    Json act = Json::object();
    for (std::size_t g = 0; g < m.actions().size(); ++g) act[m.A().generators()[g].name] = matrix_to_json(m.action(g));
    return {{"schema", "suppvar.module/1"}, {"algebra_hash", m.A().hash()}, {"dim", m.dim()}, {"action", act}};
}

ModuleRep module_from_json(const Json& j, const AlgebraPtr& a) {
    // hand-written modules may omit the hash
    if (j.contains("algebra_hash")) {
        const auto hash = as<std::string>(j.at("algebra_hash"), "algebra_hash");
        if (hash != a->hash()) throw ValidationError("module belongs to algebra " + hash + ", not " + a->hash());
    }
    const auto dim = as<std::size_t>(need(j, "dim"), "dim");
    const Json& act = need(j, "action");
    std::vector<Matrix> acts;
    for (const auto& g : a->generators()) {
        if (!act.contains(g.name)) throw ValidationError("missing action of " + g.name);
        Matrix m = matrix_from_json(a->field(), act.at(g.name));
        if (m.rows() != dim || (dim && m.cols() != dim))
            throw ValidationError("action of " + g.name + " is not " + std::to_string(dim) + "x" + std::to_string(dim));
        if (dim == 0) m = Matrix(a->field(), 0, 0);
        acts.push_back(std::move(m));
    }
    return ModuleRep::make(a, std::move(acts));
}

Json cocycle_to_json(const Cocycle& z, const Field& F) {
    Json c = Json::array();
    for (auto v : z.coefficients) c.push_back(scalar_to_json(F, v));
    return {{"schema", "suppvar.cocycle/1"}, {"degree", z.degree}, {"algebra_hash", z.algebra_hash}, {"coefficients", c}};
}

Cocycle cocycle_from_json(const Json& j, KCohomology& h) {
    const auto hash = as<std::string>(need(j, "algebra_hash"), "algebra_hash");
    if (hash != h.algebra()->hash()) throw ValidationError("cocycle belongs to a different algebra");
    Vector c;
    for (const auto& v : need(j, "coefficients")) c.push_back(scalar_from_json(h.algebra()->F(), v));
    return h.make_cocycle(as<std::size_t>(need(j, "degree"), "degree"), c);
}

Json points_to_json(const Field& F, const PointSet& points) {
    Json out = Json::array();
    for (const auto& p : points) {
        Json q = Json::array();
        for (auto v : p) q.push_back(scalar_to_json(F, v));
        out.push_back(q);
    }
    return out;
}

Json hopf_report_to_json(const HopfReport& r) {
    Json checks = Json::object();
    for (const auto& c : r.checks)
        checks[c.name] = {{"checked", c.checked}, {"failed", c.failed}, {"failures", c.failures}, {"pass", c.failed == 0}};
    return {{"checks", checks}, {"all_passed", r.all_passed()}};
}

Json variety_report(const ModuleRep& m, const RankVariety& rv, std::size_t steps) {
    Json j{{"schema", "suppvar.variety/1"},
           {"algebra_hash", m.A().hash()},
           {"module_fingerprint", rv.fingerprint},
           {"field_degree", rv.field_degree},
           {"dim", m.dim()}};
    const FieldPtr scan = rv.field_degree == m.field()->e() ? m.field()
                                                            : Field::make(FieldSpec{m.field()->p(), rv.field_degree, {}});
    j["points"] = points_to_json(*scan, rv.points);
    const Resolution r = resolve(m, steps);
    const auto est = complexity_estimate(betti(r), m.A().exterior_rank());
    const bool projective = r.terms.size() > 1 && r.terms[1].empty();
    Json flags{{"projective", projective}};
    flags["complexity"] = est.value ? Json(*est.value) : Json("inconclusive");
    const auto per = detect_periodicity(m);
    flags["periodic"] = per.period ? Json(*per.period) : Json(false);
    j["flags"] = flags;
    return j;
}

Json resolution_report(const Resolution& r, std::uint64_t seed) {
    const auto b = betti(r);
    const auto& sk = *r.module.A().skew_structure();
    Json terms = Json::array();
    for (std::size_t n = 0; n < r.terms.size(); ++n) {
        Json chars = Json::array();
        for (auto chi : r.terms[n]) chars.push_back(chi);
        terms.push_back({{"degree", n}, {"characters", chars}, {"b", b.b[n]}, {"l", b.l[n]}});
    }
    Json characters = Json::array();
    for (const auto& ch : sk.characters) {
        Json vals = Json::array();
        for (auto v : ch) vals.push_back(scalar_to_json(r.module.A().F(), v));
        characters.push_back(vals);
    }
    const auto est = complexity_estimate(b, r.module.A().exterior_rank());
    const auto per = detect_periodicity(r.module, 8, seed);
    const auto chk = check_resolution(r);
    Json j{{"schema", "suppvar.resolution/1"},
           {"algebra_hash", r.module.A().hash()},
           {"module_fingerprint", module_fingerprint(r.module)},
           {"steps", r.steps()},
           {"terms", terms},
           {"b", b.b},
           {"l", b.l},
           {"characters", characters},
           {"certification", {{"complexity", est.certification},
                              {"complex", chk.complex},
                              {"exact", chk.exact},
                              {"minimal", chk.minimal},
                              {"periodicity_inconclusive", per.inconclusive}}}};
    j["complexity"] = est.value ? Json(*est.value) : Json("inconclusive");
    j["period"] = per.period ? Json(*per.period) : Json(nullptr);
    return j;
}

Json tpp_report_to_json(const Field& F, const TppReport& r) {
    return {{"schema", "suppvar.tpp/1"},
            {"lhs", points_to_json(F, r.lhs)},
            {"rhs", points_to_json(F, r.rhs)},
            {"holds", r.holds},
            {"inclusion_holds", r.inclusion_holds},
            {"braided", r.braided},
            {"label", r.label},
            {"witnesses", {{"lhs_only", points_to_json(F, r.lhs_only)}, {"rhs_only", points_to_json(F, r.rhs_only)}}}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
}

}  // namespace suppvar
