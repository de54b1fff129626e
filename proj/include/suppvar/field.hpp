#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace suppvar {

/// Thrown whenever user-supplied data fails a structural check. The message is
/// the machine-readable reason reported by the CLI.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An element of F_q encoded as the integer sum c_0 + c_1 p + ... + c_{e-1} p^{e-1},
/// where c_i are the coefficients in the polynomial basis. For e = 1 this is the
/// usual residue in [0, p).
using Scalar = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 5;
    std::uint32_t e = 1;
    /// Monic modulus, coefficients low to high, length e + 1. Empty for e = 1
    /// or when the default modulus should be chosen.
    std::vector<std::uint32_t> modulus;

    bool operator==(const FieldSpec&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Finite field F_{p^e} with p odd and e <= 4.
class Field {
public:
    /// Validates the spec. When e > 1 and no modulus is given, the
    /// lexicographically smallest monic irreducible polynomial is used.
    static FieldPtr make(const FieldSpec& spec);
    static FieldPtr prime(std::uint32_t p) { return make(FieldSpec{p, 1, {}}); }

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t e() const { return spec_.e; }
    std::uint32_t order() const { return q_; }
    bool is_prime() const { return spec_.e == 1; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    /// Throws std::domain_error on zero.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
    Scalar pow(Scalar a, std::uint64_t n) const;

    /// Image of an integer under Z -> F_p -> F_q.
    Scalar from_int(std::int64_t n) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t mult_order(Scalar a) const;
    /// All a with a^n = 1, sorted by encoding (so 1 comes first).
    std::vector<Scalar> roots_of_unity(std::uint32_t n) const;

    std::vector<std::uint32_t> coeffs(Scalar a) const;
    Scalar from_coeffs(std::span<const std::uint32_t> c) const;

    bool same_as(const Field& other) const { return spec_ == other.spec_; }
    std::string name() const;

private:
    Field() = default;
    void build_tables();

    FieldSpec spec_;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> pow_p_;  // p^i, i < e
    std::vector<Scalar> inv_;           // inverse table, inv_[0] unused
    std::vector<std::uint32_t> log_;    // e > 1 only
    std::vector<Scalar> exp_;           // e > 1 only, length 2(q-1)
};

bool is_prime_number(std::uint64_t n);

/// Exhaustive irreducibility test for monic polynomials of degree <= 4 over F_p.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace suppvar
