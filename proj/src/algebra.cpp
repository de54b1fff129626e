#include "suppvar/algebra.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>

namespace suppvar {

namespace {

// Sign and product of exterior monomials given as bitmasks; nullopt when they overlap.
std::optional<std::pair<std::uint32_t, bool>> monomial_product(std::uint32_t s, std::uint32_t t) {
    if (s & t) return std::nullopt;
    // count pairs (a in s, b in t) with a > b
    unsigned inversions = 0;
    for (std::uint32_t b = t; b; b &= b - 1) {
        const unsigned low = static_cast<unsigned>(__builtin_ctz(b));
        inversions += static_cast<unsigned>(__builtin_popcount(s >> (low + 1)));
    }
    return std::make_pair(s | t, (inversions & 1u) != 0);
}

// Product of two dense elements of Lambda(c), indexed by monomial bitmask.
Vector exterior_multiply(const Field& F, const Vector& a, const Vector& b) {
    Vector out(a.size(), 0);
    for (std::uint32_t s = 0; s < a.size(); ++s) {
        if (!a[s]) continue;
        for (std::uint32_t t = 0; t < b.size(); ++t) {
            if (!b[t]) continue;
            auto prod = monomial_product(s, t);
            if (!prod) continue;
            Scalar v = F.mul(a[s], b[t]);
            if (prod->second) v = F.neg(v);
            out[prod->first] = F.add(out[prod->first], v);
        }
    }
    return out;
}

std::string monomial_label(std::uint32_t mono) {
    if (mono == 0) return "1";
    std::string s;
    for (std::uint32_t i = 0; (mono >> i) != 0; ++i)
        if (mono >> i & 1u) s += "x" + std::to_string(i + 1);
    return s;
}

void add_scaled(const Field& F, Vector& dst, const SparseVec& src, Scalar c) {
    for (const auto& t : src) dst[t.index] = F.add(dst[t.index], F.mul(c, t.coef));
}

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xffu;
        h *= 1099511628211ull;
    }
}

}  // namespace

std::size_t SkewStructure::element_index(const std::vector<std::uint32_t>& exps) const {
    std::size_t idx = 0, stride = 1;
    for (std::size_t t = 0; t < group.orders.size(); ++t) {
        idx += (exps[t] % group.orders[t]) * stride;
        stride *= group.orders[t];
    }
    return idx;
}

std::size_t SkewStructure::multiply_elements(std::size_t a, std::size_t b) const {
    std::vector<std::uint32_t> e(group.orders.size());
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = (elements[a][t] + elements[b][t]) % group.orders[t];
    return element_index(e);
}

std::size_t SkewStructure::inverse_element(std::size_t a) const {
    std::vector<std::uint32_t> e(group.orders.size());
    for (std::size_t t = 0; t < e.size(); ++t) e[t] = (group.orders[t] - elements[a][t]) % group.orders[t];
    return element_index(e);
}

Scalar SkewStructure::character_value(const Field& F, std::size_t chi, std::size_t g) const {
    Scalar v = 1;
    for (std::size_t t = 0; t < group.orders.size(); ++t) v = F.mul(v, F.pow(characters[chi][t], elements[g][t]));
    return v;
}

bool HopfReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.failed == 0; });
}

const AxiomCheck& HopfReport::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c;
    throw std::out_of_range("no Hopf check named " + name);
}

AlgebraPtr Algebra::exterior(std::uint32_t c, FieldPtr field) {
    if (c == 0) throw ValidationError("exterior algebra needs c >= 1");
    GroupData trivial;
    std::shared_ptr<Algebra> a(new Algebra());
    a->field_ = field;
    a->kind_ = "exterior";
    SkewStructure sk;
    sk.c = c;
    sk.group = trivial;
    sk.group_size = 1;
    sk.elements = {{}};
    sk.element_action = {Matrix::identity(field, c)};
    sk.characters = {{}};
    a->skew_ = std::move(sk);
    a->finish_and_validate();
    return a;
}

AlgebraPtr Algebra::skew(std::uint32_t c, GroupData group, FieldPtr field) {
    if (c == 0) throw ValidationError("exterior algebra needs c >= 1");
    const Field& F = *field;
    const std::size_t r = group.orders.size();
    if (group.action.size() != r) throw ValidationError("group action needs one matrix per generator");
    std::size_t order = 1;
    for (std::size_t t = 0; t < r; ++t) {
        const std::uint32_t n = group.orders[t];
        if (n == 0) throw ValidationError("group generator order must be positive");
        order *= n;
        if (group.action[t].rows() != c || group.action[t].cols() != c)
            throw ValidationError("group action matrix must be c x c");
        group.action[t] = group.action[t].reinterpret(field);
        if ((F.order() - 1) % n != 0)
            throw ValidationError("group generator g" + std::to_string(t + 1) +
                                  " is not diagonalizable: order does not divide q-1");
        if (!(power(group.action[t], n) == Matrix::identity(field, c)))
            throw ValidationError("group relation g" + std::to_string(t + 1) + "^" + std::to_string(n) +
                                  " = 1 violated by the action");
    }
    if (order % F.p() == 0) throw ValidationError("characteristic divides the group order");
    for (std::size_t s = 0; s < r; ++s)
        for (std::size_t t = s + 1; t < r; ++t)
            if (!(group.action[s] * group.action[t] == group.action[t] * group.action[s]))
                throw ValidationError("group action matrices do not commute");

    SkewStructure sk;
    sk.c = c;
    sk.group_size = order;
    for (std::size_t idx = 0; idx < order; ++idx) {
        std::vector<std::uint32_t> e(r);
        std::size_t t = idx;
        for (std::size_t k = 0; k < r; ++k) {
            e[k] = static_cast<std::uint32_t>(t % group.orders[k]);
            t /= group.orders[k];
        }
        Matrix m = Matrix::identity(field, c);
        for (std::size_t k = 0; k < r; ++k) m = m * power(group.action[k], e[k]);
        sk.elements.push_back(std::move(e));
        sk.element_action.push_back(std::move(m));
    }

    if (group.h.empty()) throw ValidationError("no central sign involution h given");
    if (group.h.size() != r) throw ValidationError("h must be an exponent vector over the generators");
    sk.group = group;
    const std::size_t h = sk.element_index(group.h);
    if (h == 0 || sk.multiply_elements(h, h) != 0) throw ValidationError("h does not have order 2");
    if (!(sk.element_action[h] == Matrix::identity(field, c).scaled(F.neg(1))))
        throw ValidationError("h does not act as -1 on the exterior generators");
    sk.h_element = h;

    // characters: per-generator roots of unity, mixed radix
    std::vector<std::vector<Scalar>> roots;
    std::size_t nchars = 1;
    for (std::size_t t = 0; t < r; ++t) {
        roots.push_back(F.roots_of_unity(group.orders[t]));
        nchars *= roots.back().size();
    }
    for (std::size_t idx = 0; idx < nchars; ++idx) {
        std::vector<Scalar> vals(r);
        std::size_t t = idx;
        for (std::size_t k = 0; k < r; ++k) {
            vals[k] = roots[k][t % roots[k].size()];
            t /= roots[k].size();
        }
        sk.characters.push_back(std::move(vals));
    }

    std::shared_ptr<Algebra> a(new Algebra());
    a->field_ = field;
    a->kind_ = "skew_exterior";
    a->skew_ = std::move(sk);
    a->finish_and_validate();
    return a;
}

AlgebraPtr Algebra::from_structure_constants(FieldPtr field, std::vector<std::string> labels,
                                             std::vector<SparseVec> products, std::size_t unit_index,
                                             std::vector<Generator> generators,
                                             std::vector<std::size_t> radical_basis,
                                             std::optional<HopfData> hopf) {
    std::shared_ptr<Algebra> a(new Algebra());
    a->field_ = std::move(field);
    a->kind_ = "structure_constants";
    a->dim_ = labels.size();
    a->labels_ = std::move(labels);
    a->products_ = std::move(products);
    a->unit_ = unit_index;
    a->generators_ = std::move(generators);
    a->radical_ = std::move(radical_basis);
    a->hopf_ = std::move(hopf);
    a->finish_and_validate();
    return a;
}

void Algebra::finish_and_validate() {
    const Field& F = *field_;
    if (skew_) {
        // Build the Lambda(c) x| G table from the group action.
        const auto& sk = *skew_;
        const std::uint32_t c = sk.c;
        const std::size_t nm = sk.monomial_count(), ng = sk.group_size;
        dim_ = nm * ng;
        labels_.clear();
        for (std::uint32_t s = 0; s < nm; ++s)
            for (std::size_t g = 0; g < ng; ++g) {
                std::string lab = monomial_label(s);
                std::string glab;
                for (std::size_t t = 0; t < sk.elements[g].size(); ++t) {
                    const auto ex = sk.elements[g][t];
                    if (ex == 0) continue;
                    if (!glab.empty()) glab += "*";
                    glab += "g" + std::to_string(t + 1);
                    if (ex > 1) glab += "^" + std::to_string(ex);
                }
                if (!glab.empty()) lab = (s == 0) ? glab : lab + "*" + glab;
                labels_.push_back(lab);
            }
        // g . x_S for every group element and monomial
        std::vector<std::vector<Vector>> acted(ng, std::vector<Vector>(nm));
        for (std::size_t g = 0; g < ng; ++g)
            for (std::uint32_t s = 0; s < nm; ++s) {
                Vector v(nm, 0);
                v[0] = 1;
                for (std::uint32_t i = 0; i < c; ++i) {
                    if (!(s >> i & 1u)) continue;
                    Vector img(nm, 0);
                    for (std::uint32_t j = 0; j < c; ++j) img[1u << j] = sk.element_action[g].at(j, i);
                    v = exterior_multiply(F, v, img);
                }
                acted[g][s] = std::move(v);
            }
        products_.assign(dim_ * dim_, {});
        for (std::uint32_t s = 0; s < nm; ++s)
            for (std::size_t g = 0; g < ng; ++g)
                for (std::uint32_t t = 0; t < nm; ++t)
                    for (std::size_t g2 = 0; g2 < ng; ++g2) {
                        const std::size_t gg = sk.multiply_elements(g, g2);
                        Vector left(nm, 0);
                        left[s] = 1;
                        const Vector w = exterior_multiply(F, left, acted[g][t]);
                        SparseVec out;
                        for (std::uint32_t u = 0; u < nm; ++u)
                            if (w[u]) out.push_back({static_cast<std::uint32_t>(sk.basis_index(u, gg)), w[u]});
                        products_[sk.basis_index(s, g) * dim_ + sk.basis_index(t, g2)] = std::move(out);
                    }
        unit_ = sk.basis_index(0, 0);
        generators_.clear();
        for (std::uint32_t i = 0; i < c; ++i) {
            Generator gen{"x" + std::to_string(i + 1), GeneratorKind::Exterior, Vector(dim_, 0)};
            gen.element[sk.basis_index(1u << i, 0)] = 1;
            generators_.push_back(std::move(gen));
        }
        for (std::size_t t = 0; t < sk.group.orders.size(); ++t) {
            std::vector<std::uint32_t> e(sk.group.orders.size(), 0);
            e[t] = 1;
            Generator gen{"g" + std::to_string(t + 1), GeneratorKind::Group, Vector(dim_, 0)};
            gen.element[sk.basis_index(0, sk.element_index(e))] = 1;
            generators_.push_back(std::move(gen));
        }
        radical_.clear();
        for (std::uint32_t s = 1; s < nm; ++s)
            for (std::size_t g = 0; g < ng; ++g) radical_.push_back(sk.basis_index(s, g));
        std::sort(radical_.begin(), radical_.end());
        if (kind_ == "skew_exterior") hopf_ = canonical_skew_hopf(*this);
    }

    if (products_.size() != dim_ * dim_) throw ValidationError("structure constant table has wrong size");
    for (const auto& sv : products_)
        for (const auto& t : sv)
            if (t.index >= dim_) throw ValidationError("structure constant index out of range");
    if (unit_ >= dim_) throw ValidationError("unit index out of range");
    for (const auto& g : generators_)
        if (g.element.size() != dim_) throw ValidationError("generator " + g.name + " has wrong length");

    // unit law
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto& l = product(unit_, i);
        const auto& r = product(i, unit_);
        auto is_basis = [&](const SparseVec& v) {
            Vector d(dim_, 0);
            add_scaled(F, d, v, 1);
            return d == basis_vector(i);
        };
        if (!is_basis(l) || !is_basis(r)) throw ValidationError("unit law fails on basis element " + labels_[i]);
    }

    // associativity: exhaustive up to dim 64, sampled above
    auto assoc_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vector left(dim_, 0), right(dim_, 0);
        for (const auto& t : product(i, j)) add_scaled(F, left, product(t.index, k), t.coef);
        for (const auto& t : product(j, k)) add_scaled(F, right, product(i, t.index), t.coef);
        return left == right;
    };
    if (dim_ <= 64) {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!assoc_ok(i, j, k))
                        throw ValidationError("associativity fails on (" + labels_[i] + "," + labels_[j] + "," +
                                              labels_[k] + ")");
    } else {
        std::mt19937_64 rng(0);
        for (int n = 0; n < 20000; ++n) {
            const std::size_t i = rng() % dim_, j = rng() % dim_, k = rng() % dim_;
            if (!assoc_ok(i, j, k))
                throw ValidationError("associativity fails on (" + labels_[i] + "," + labels_[j] + "," +
                                      labels_[k] + ")");
        }
    }

    // exterior relations
    const auto ext = exterior_generators();
    for (std::size_t a = 0; a < ext.size(); ++a)
        for (std::size_t b = a; b < ext.size(); ++b) {
            const auto& xa = generators_[ext[a]].element;
            const auto& xb = generators_[ext[b]].element;
            Vector s = multiply(xa, xb);
            if (a == b) {
                if (std::any_of(s.begin(), s.end(), [](Scalar v) { return v != 0; }))
                    throw ValidationError("relation " + generators_[ext[a]].name + "^2 = 0 violated");
            } else {
                const Vector t = multiply(xb, xa);
                for (std::size_t i = 0; i < dim_; ++i)
                    if (F.add(s[i], t[i]) != 0)
                        throw ValidationError("relation " + generators_[ext[a]].name + generators_[ext[b]].name + " + " +
                                              generators_[ext[b]].name + generators_[ext[a]].name + " = 0 violated");
            }
        }

    // radical: two-sided ideal, nilpotent
    std::vector<bool> in_rad(dim_, false);
    for (auto r : radical_) {
        if (r >= dim_) throw ValidationError("radical index out of range");
        in_rad[r] = true;
    }
    for (auto r : radical_)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto* sv : {&product(r, j), &product(j, r)})
                for (const auto& t : *sv)
                    if (!in_rad[t.index]) throw ValidationError("radical basis does not span a two-sided ideal");
    {
        // powers rad^k as spans of dense vectors
        std::vector<Vector> cur;
        for (auto r : radical_) cur.push_back(basis_vector(r));
        std::size_t k = 1;
        while (!cur.empty()) {
            if (k > dim_ + 1) throw ValidationError("radical is not nilpotent");
            IncrementalSpan span(field_, dim_);
            std::vector<Vector> next;
            for (const auto& v : cur)
                for (auto r : radical_) {
                    Vector w(dim_, 0);
                    for (std::size_t i = 0; i < dim_; ++i)
                        if (v[i]) add_scaled(F, w, product(i, r), v[i]);
                    if (span.insert(w)) next.push_back(std::move(w));
                }
            cur = std::move(next);
            ++k;
        }
        nilpotency_ = k;
    }

    compute_words();

    if (hopf_) {
        const auto report = validate_hopf(*this, *hopf_);
        for (const auto& c : report.checks)
            if (c.failed) throw ValidationError("hopf axiom '" + c.name + "' violated");
    }
    compute_hash();
}

void Algebra::compute_words() {
    words_.assign(dim_, {});
    if (skew_) {
        const auto& sk = *skew_;
        const std::uint32_t c = sk.c;
        for (std::uint32_t s = 0; s < sk.monomial_count(); ++s)
            for (std::size_t g = 0; g < sk.group_size; ++g) {
                Word w{1, {}};
                for (std::uint32_t i = 0; i < c; ++i)
                    if (s >> i & 1u) w.letters.push_back(i);
                for (std::size_t t = 0; t < sk.elements[g].size(); ++t)
                    for (std::uint32_t k = 0; k < sk.elements[g][t]; ++k)
                        w.letters.push_back(static_cast<std::uint32_t>(c + t));
                words_[sk.basis_index(s, g)] = {std::move(w)};
            }
        return;
    }
    // breadth-first products of generators until the span is everything
    IncrementalSpan span(field_, dim_);
    std::vector<Vector> elems;
    std::vector<std::vector<std::uint32_t>> elem_words;
    elems.push_back(unit());
    elem_words.push_back({});
    span.insert(unit());
    for (std::size_t q = 0; q < elems.size() && span.size() < dim_; ++q)
        for (std::uint32_t g = 0; g < generators_.size(); ++g) {
            Vector v = multiply(elems[q], generators_[g].element);
            if (span.insert(v)) {
                elems.push_back(std::move(v));
                auto w = elem_words[q];
                w.push_back(g);
                elem_words.push_back(std::move(w));
            }
        }
    if (span.size() < dim_) throw ValidationError("generators do not generate the algebra");
    const Matrix W = Matrix::from_columns(field_, dim_, elems);
    const auto coeffs = solve(W, Matrix::identity(field_, dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Scalar cf = coeffs->at(k, i);
            if (cf) words_[i].push_back({cf, elem_words[k]});
        }
}

void Algebra::compute_hash() {
    std::uint64_t h = 1469598103934665603ull;
    fnv_mix(h, field_->p());
    fnv_mix(h, field_->e());
    for (auto m : field_->spec().modulus) fnv_mix(h, m);
    fnv_mix(h, dim_);
    for (std::size_t i = 0; i < products_.size(); ++i)
        for (const auto& t : products_[i]) {
            fnv_mix(h, i);
            fnv_mix(h, t.index);
            fnv_mix(h, t.coef);
        }
    fnv_mix(h, unit_);
    for (const auto& g : generators_) {
        for (char ch : g.name) fnv_mix(h, static_cast<unsigned char>(ch));
        for (auto v : g.element) fnv_mix(h, v);
    }
    for (auto r : radical_) fnv_mix(h, r);
    if (hopf_) {
        for (std::size_t i = 0; i < hopf_->delta.size(); ++i)
            for (const auto& t : hopf_->delta[i]) {
                fnv_mix(h, i);
                fnv_mix(h, t.coef);
                fnv_mix(h, t.left);
                fnv_mix(h, t.right);
            }
        for (auto v : hopf_->counit) fnv_mix(h, v);
        for (const auto& s : hopf_->antipode)
            for (auto v : s) fnv_mix(h, v);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    hash_ = buf;
}

std::optional<std::size_t> Algebra::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

std::uint32_t Algebra::exterior_rank() const { return static_cast<std::uint32_t>(exterior_generators().size()); }

std::vector<std::size_t> Algebra::exterior_generators() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].kind == GeneratorKind::Exterior) out.push_back(i);
    return out;
}

std::vector<std::size_t> Algebra::group_generators() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].kind == GeneratorKind::Group) out.push_back(i);
    return out;
}

bool Algebra::is_canonical_c2() const {
    return kind_ == "skew_exterior" && skew_ && skew_->group_size == 2 && skew_->h_element.has_value();
}

Vector Algebra::multiply(const Vector& a, const Vector& b) const {
    const Field& F = *field_;
    Vector out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (!b[j]) continue;
            add_scaled(F, out, product(i, j), F.mul(a[i], b[j]));
        }
    }
    return out;
}

Vector Algebra::basis_vector(std::size_t i) const {
    Vector v(dim_, 0);
    v[i] = 1;
    return v;
}

AlgebraPtr Algebra::extend_scalars(FieldPtr bigger) const {
    if (field_->e() != 1 || bigger->p() != field_->p())
        throw ValidationError("scalar extension is only supported from a prime field to its extensions");
    if (kind_ == "exterior") return exterior(skew_->c, bigger);
    if (kind_ == "skew_exterior") {
        GroupData g = skew_->group;
        for (auto& m : g.action) m = m.reinterpret(bigger);
        return skew(skew_->c, std::move(g), bigger);
    }
    return from_structure_constants(bigger, labels_, products_, unit_, generators_, radical_, hopf_);
}

HopfData canonical_skew_hopf(const Algebra& a) {
    const auto& sk = *a.skew_structure();
    const Field& F = a.F();
    const std::size_t dim = a.dim();
    const std::size_t h = *sk.h_element;
    const std::size_t hb = sk.basis_index(0, h);

    using Tensor2 = Vector;  // dense dim*dim, index left * dim + right
    auto tmul = [&](const Tensor2& u, const Tensor2& v) {
        Tensor2 out(dim * dim, 0);
        for (std::size_t i = 0; i < dim * dim; ++i) {
            if (!u[i]) continue;
            const std::size_t ul = i / dim, ur = i % dim;
            for (std::size_t j = 0; j < dim * dim; ++j) {
                if (!v[j]) continue;
                const std::size_t vl = j / dim, vr = j % dim;
                const Scalar c = F.mul(u[i], v[j]);
                for (const auto& l : a.product(ul, vl))
                    for (const auto& r : a.product(ur, vr)) {
                        const std::size_t k = l.index * dim + r.index;
                        out[k] = F.add(out[k], F.mul(c, F.mul(l.coef, r.coef)));
                    }
            }
        }
        return out;
    };

    HopfData hd;
    hd.delta.resize(dim);
    hd.counit.assign(dim, 0);
    hd.antipode.assign(dim, Vector(dim, 0));

    std::vector<Tensor2> dx(sk.c, Tensor2(dim * dim, 0));
    for (std::uint32_t i = 0; i < sk.c; ++i) {
        const std::size_t xi = sk.basis_index(1u << i, 0);
        dx[i][xi * dim + a.unit_index()] = 1;
        dx[i][hb * dim + xi] = 1;
    }
    for (std::uint32_t s = 0; s < sk.monomial_count(); ++s)
        for (std::size_t g = 0; g < sk.group_size; ++g) {
            const std::size_t b = sk.basis_index(s, g);
            Tensor2 d(dim * dim, 0);
            d[a.unit_index() * dim + a.unit_index()] = 1;
            Vector anti = a.unit();
            for (std::uint32_t i = 0; i < sk.c; ++i) {
                if (!(s >> i & 1u)) continue;
                d = tmul(d, dx[i]);
                // S(x_i) = -h x_i
                Vector sxi = a.multiply(a.basis_vector(hb), a.basis_vector(sk.basis_index(1u << i, 0)));
                for (auto& v : sxi) v = F.neg(v);
                anti = a.multiply(sxi, anti);  // S is an anti-homomorphism
            }
            const std::size_t gb = sk.basis_index(0, g);
            Tensor2 dg(dim * dim, 0);
            dg[gb * dim + gb] = 1;
            d = tmul(d, dg);
            anti = a.multiply(a.basis_vector(sk.basis_index(0, sk.inverse_element(g))), anti);
            for (std::size_t k = 0; k < dim * dim; ++k)
                if (d[k])
                    hd.delta[b].push_back({d[k], static_cast<std::uint32_t>(k / dim), static_cast<std::uint32_t>(k % dim)});
            hd.counit[b] = (s == 0) ? 1 : 0;
            hd.antipode[b] = std::move(anti);
        }
    return hd;
}

HopfReport validate_hopf(const Algebra& a) {
    if (!a.hopf()) throw ValidationError("algebra has no Hopf data");
    return validate_hopf(a, *a.hopf());
}

HopfReport validate_hopf(const Algebra& a, const HopfData& hd) {
    const Field& F = a.F();
    const std::size_t dim = a.dim();
    const auto& labels = a.labels();
    constexpr std::size_t kMaxListed = 5;
    if (hd.delta.size() != dim || hd.counit.size() != dim || hd.antipode.size() != dim)
        throw ValidationError("Hopf data has wrong length");

    AxiomCheck coassoc, counit, antipode, delta_mult, eps_mult;
    coassoc.name = "coassociativity";
    counit.name = "counit";
    antipode.name = "antipode";
    delta_mult.name = "delta_multiplicative";
    eps_mult.name = "counit_multiplicative";
    auto record = [&](AxiomCheck& c, bool ok, const std::string& what) {
        ++c.checked;
        if (!ok) {
            ++c.failed;
            if (c.failures.size() < kMaxListed) c.failures.push_back(what);
        }
    };
    auto acc = [&](Vector& v, std::size_t idx, Scalar c) { v[idx] = F.add(v[idx], c); };

    for (std::size_t b = 0; b < dim; ++b) {
        // (Delta (x) id) Delta == (id (x) Delta) Delta
        Vector l(dim * dim * dim, 0), r(dim * dim * dim, 0);
        for (const auto& t : hd.delta[b]) {
            for (const auto& u : hd.delta[t.left])
                acc(l, (u.left * dim + u.right) * dim + t.right, F.mul(t.coef, u.coef));
            for (const auto& u : hd.delta[t.right])
                acc(r, (t.left * dim + u.left) * dim + u.right, F.mul(t.coef, u.coef));
        }
        record(coassoc, l == r, labels[b]);

        Vector cl(dim, 0), cr(dim, 0);
        for (const auto& t : hd.delta[b]) {
            acc(cl, t.right, F.mul(t.coef, hd.counit[t.left]));
            acc(cr, t.left, F.mul(t.coef, hd.counit[t.right]));
        }
        record(counit, cl == a.basis_vector(b) && cr == a.basis_vector(b), labels[b]);

        Vector sl(dim, 0), sr(dim, 0);
        for (const auto& t : hd.delta[b]) {
            const Vector p1 = a.multiply(hd.antipode[t.left], a.basis_vector(t.right));
            const Vector p2 = a.multiply(a.basis_vector(t.left), hd.antipode[t.right]);
            for (std::size_t i = 0; i < dim; ++i) {
                acc(sl, i, F.mul(t.coef, p1[i]));
                acc(sr, i, F.mul(t.coef, p2[i]));
            }
        }
        Vector expect = a.unit();
        for (auto& v : expect) v = F.mul(v, hd.counit[b]);
        record(antipode, sl == expect && sr == expect, labels[b]);
    }

    // Delta(1) = 1 (x) 1 and eps(1) = 1 belong to the multiplicativity checks
    {
        const std::size_t u = a.unit_index();
        Vector d(dim * dim, 0), one(dim * dim, 0);
        for (const auto& t : hd.delta[u]) acc(d, t.left * dim + t.right, t.coef);
        one[u * dim + u] = 1;
        record(delta_mult, d == one, "unit");
        record(eps_mult, hd.counit[u] == 1, "unit");
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Vector lhs(dim * dim, 0), rhs(dim * dim, 0);
            Scalar eps_ij = 0;
            for (const auto& t : a.product(i, j)) {
                for (const auto& u : hd.delta[t.index]) acc(lhs, u.left * dim + u.right, F.mul(t.coef, u.coef));
                eps_ij = F.add(eps_ij, F.mul(t.coef, hd.counit[t.index]));
            }
            for (const auto& u : hd.delta[i])
                for (const auto& v : hd.delta[j]) {
                    const Scalar c = F.mul(u.coef, v.coef);
                    for (const auto& l : a.product(u.left, v.left))
                        for (const auto& r : a.product(u.right, v.right))
                            acc(rhs, l.index * dim + r.index, F.mul(c, F.mul(l.coef, r.coef)));
                }
            const std::string what = "(" + labels[i] + "," + labels[j] + ")";
            record(delta_mult, lhs == rhs, what);
            record(eps_mult, eps_ij == F.mul(hd.counit[i], hd.counit[j]), what);
        }

    HopfReport rep;
    rep.checks = {coassoc, counit, antipode, delta_mult, eps_mult};
    return rep;
}

Vector normalize_projective(const Field& F, Vector v) {
    auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    if (it == v.end()) throw ValidationError("lambda must be nonzero");
    const Scalar inv = F.inv(*it);
    for (auto& s : v) s = F.mul(s, inv);
    return v;
}

LineElement line_element(const Algebra& a, const Vector& lambda) {
    const auto ext = a.exterior_generators();
    if (lambda.size() != ext.size())
        throw ValidationError("lambda must have " + std::to_string(ext.size()) + " coordinates");
    LineElement le;
    le.lambda = normalize_projective(a.F(), lambda);
    le.element.assign(a.dim(), 0);
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k)
            le.element[k] = a.F().add(le.element[k], a.F().mul(le.lambda[i], a.generators()[ext[i]].element[k]));
    return le;
}

GroupData scalar_cyclic_group(const FieldPtr& field, std::uint32_t c, std::uint32_t n, Scalar zeta) {
    GroupData g;
    g.orders = {n};
    g.action = {Matrix::identity(field, c).scaled(zeta)};
    g.h = {n / 2};
    return g;
}

}  // namespace suppvar
