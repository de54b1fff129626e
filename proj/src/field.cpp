#include "suppvar/field.hpp"

#include <algorithm>
#include <sstream>

namespace suppvar {

namespace {

constexpr std::uint32_t kMaxPrime = 65521;
constexpr std::uint32_t kMaxDegree = 4;

// Polynomial helpers over F_p, coefficients low to high.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t t = lead * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
        }
        trim(a);
    }
    return a;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
    const std::size_t deg = monic.size() - 1;
    if (deg == 0 || monic.back() != 1) return false;
    if (deg == 1) return true;
    const Poly f(monic.begin(), monic.end());
    // A reducible polynomial of degree <= 4 has a monic factor of degree <= deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(d + 1, 0);
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

FieldPtr Field::make(const FieldSpec& spec) {
    if (spec.p == 2) throw ValidationError("characteristic 2 is not supported");
    if (spec.p > kMaxPrime || !is_prime_number(spec.p))
        throw ValidationError("field modulus p=" + std::to_string(spec.p) + " is not an odd prime below 65536");
    if (spec.e < 1 || spec.e > kMaxDegree)
        throw ValidationError("extension degree e=" + std::to_string(spec.e) + " outside [1,4]");

    std::shared_ptr<Field> f(new Field());
    f->spec_ = spec;
    if (spec.e == 1) {
        f->spec_.modulus.clear();
    } else if (spec.modulus.empty()) {
        // Smallest monic irreducible in the order of the encoding of its lower coefficients.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < spec.e; ++i) count *= spec.p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(spec.e + 1, 0);
            std::uint64_t t = idx;
            for (std::uint32_t i = 0; i < spec.e; ++i) {
                g[i] = static_cast<std::uint32_t>(t % spec.p);
                t /= spec.p;
            }
            g[spec.e] = 1;
            if (is_irreducible_mod_p(g, spec.p)) {
                f->spec_.modulus = g;
                break;
            }
        }
    } else {
        if (spec.modulus.size() != spec.e + 1)
            throw ValidationError("modulus must have e+1 coefficients");
        for (auto c : spec.modulus)
            if (c >= spec.p) throw ValidationError("modulus coefficient out of range");
        if (spec.modulus.back() != 1) throw ValidationError("modulus is not monic");
        if (!is_irreducible_mod_p(spec.modulus, spec.p)) throw ValidationError("modulus is reducible");
    }
    f->build_tables();
    return f;
}

void Field::build_tables() {
    const std::uint32_t p = spec_.p, e = spec_.e;
    q_ = 1;
    pow_p_.clear();
    for (std::uint32_t i = 0; i < e; ++i) {
        pow_p_.push_back(q_);
        q_ *= p;
    }
    inv_.assign(q_, 0);
    if (e == 1) {
        for (std::uint32_t a = 1; a < p; ++a) inv_[a] = static_cast<Scalar>(pow(a, p - 2));
        return;
    }

    // Multiplication by polynomial reduction, used once to build log/exp tables.
    auto slow_mul = [&](Scalar a, Scalar b) {
        const auto ca = coeffs(a), cb = coeffs(b);
        Poly prod(2 * e - 1, 0);
        for (std::uint32_t i = 0; i < e; ++i)
            for (std::uint32_t j = 0; j < e; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p);
        Poly r = poly_mod(prod, spec_.modulus, p);
        r.resize(e, 0);
        return from_coeffs(r);
    };

    log_.assign(q_, 0);
    exp_.assign(2 * (q_ - 1), 0);
    for (Scalar g = 1; g < q_; ++g) {
        Scalar x = 1;
        std::uint32_t k = 0;
        std::vector<bool> seen(q_, false);
        bool primitive = true;
        for (k = 0; k < q_ - 1; ++k) {
            if (seen[x]) {
                primitive = false;
                break;
            }
            seen[x] = true;
            exp_[k] = x;
            log_[x] = k;
            x = slow_mul(x, g);
        }
        if (primitive && x == 1) break;
    }
    for (std::uint32_t k = 0; k < q_ - 1; ++k) exp_[k + q_ - 1] = exp_[k];
    for (Scalar a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Scalar Field::add(Scalar a, Scalar b) const {
    const std::uint32_t p = spec_.p;
    if (spec_.e == 1) {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    Scalar r = 0;
    for (std::uint32_t i = spec_.e; i-- > 0;) {
        const std::uint32_t da = a / pow_p_[i], db = b / pow_p_[i];
        a -= da * pow_p_[i];
        b -= db * pow_p_[i];
        std::uint32_t s = da + db;
        if (s >= p) s -= p;
        r += s * pow_p_[i];
    }
    return r;
}

Scalar Field::neg(Scalar a) const {
    const std::uint32_t p = spec_.p;
    if (spec_.e == 1) return a == 0 ? 0 : p - a;
    Scalar r = 0;
    for (std::uint32_t i = spec_.e; i-- > 0;) {
        const std::uint32_t da = a / pow_p_[i];
        a -= da * pow_p_[i];
        r += (da == 0 ? 0 : p - da) * pow_p_[i];
    }
    return r;
}

Scalar Field::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar Field::mul(Scalar a, Scalar b) const {
    if (spec_.e == 1) return static_cast<Scalar>(std::uint64_t(a) * b % spec_.p);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

Scalar Field::inv(Scalar a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a];
}

Scalar Field::pow(Scalar a, std::uint64_t n) const {
    Scalar r = 1, b = a;
    while (n) {
        if (n & 1) r = mul(r, b);
        b = mul(b, b);
        n >>= 1;
    }
    return r;
}

Scalar Field::from_int(std::int64_t n) const {
    const std::int64_t p = spec_.p;
    return static_cast<Scalar>(((n % p) + p) % p);
}

std::uint64_t Field::mult_order(Scalar a) const {
    if (a == 0) throw std::domain_error("order of zero");
    std::uint64_t k = 1;
    Scalar x = a;
    while (x != 1) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<Scalar> Field::roots_of_unity(std::uint32_t n) const {
    std::vector<Scalar> out;
    for (Scalar a = 1; a < q_; ++a)
        if (pow(a, n) == 1) out.push_back(a);
    return out;
}

std::vector<std::uint32_t> Field::coeffs(Scalar a) const {
    std::vector<std::uint32_t> c(spec_.e);
    for (std::uint32_t i = 0; i < spec_.e; ++i) {
        c[i] = a % spec_.p;
        a /= spec_.p;
    }
    return c;
}

Scalar Field::from_coeffs(std::span<const std::uint32_t> c) const {
    Scalar r = 0;
    for (std::size_t i = 0; i < c.size() && i < spec_.e; ++i) r += (c[i] % spec_.p) * pow_p_[i];
    return r;
}

std::string Field::name() const {
    std::ostringstream os;
    os << "F_" << spec_.p;
    if (spec_.e > 1) os << "^" << spec_.e;
    return os.str();
}

}  // namespace suppvar
