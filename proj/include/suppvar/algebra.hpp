#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "suppvar/matrix.hpp"

namespace suppvar {

struct SparseTerm {
    std::uint32_t index;
    Scalar coef;
};
using SparseVec = std::vector<SparseTerm>;

/// Abelian group G = C_{n_1} x ... x C_{n_r} acting linearly on span(x_1..x_c).
struct GroupData {
    std::vector<std::uint32_t> orders;
    /// One c x c matrix per generator; column i is the image of x_i.
    std::vector<Matrix> action;
    /// Exponent vector of the distinguished central involution. Empty when
    /// the algebra has none (plain exterior algebras).
    std::vector<std::uint32_t> h;
};

struct CoproductTerm {
    Scalar coef;
    std::uint32_t left, right;
};

struct HopfData {
    std::vector<std::vector<CoproductTerm>> delta;  ///< per basis element
    Vector counit;
    std::vector<Vector> antipode;                   ///< dense, per basis element
};

enum class GeneratorKind { Exterior, Group, Other };

struct Generator {
    std::string name;
    GeneratorKind kind = GeneratorKind::Other;
    Vector element;  ///< dense coordinates in the algebra basis
};

/// Indexing data for Lambda(c) x| G. Basis element (monomial S, group element g)
/// sits at S * |G| + g, where S is a bitmask over x_1..x_c.
struct SkewStructure {
    std::uint32_t c = 0;
    GroupData group;
    std::size_t group_size = 1;
    std::vector<std::vector<std::uint32_t>> elements;  ///< exponent vectors, mixed radix (generator 0 fastest)
    std::vector<Matrix> element_action;                ///< action of each group element on span(x)
    std::optional<std::size_t> h_element;
    /// Character values on the group generators; index 0 is the trivial character.
    std::vector<std::vector<Scalar>> characters;

    std::size_t monomial_count() const { return std::size_t{1} << c; }
    std::size_t basis_index(std::uint32_t mono, std::size_t g) const { return mono * group_size + g; }
    std::size_t element_index(const std::vector<std::uint32_t>& exps) const;
    std::size_t multiply_elements(std::size_t a, std::size_t b) const;
    std::size_t inverse_element(std::size_t a) const;
    Scalar character_value(const Field& F, std::size_t chi, std::size_t g) const;
    std::size_t trivial_character() const { return 0; }
};

struct AxiomCheck {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;  ///< first few offending basis tuples
};

struct HopfReport {
    std::vector<AxiomCheck> checks;
    bool all_passed() const;
    const AxiomCheck& check(const std::string& name) const;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional algebra given by structure constants on a fixed basis,
/// with generators, a radical basis and optional Hopf data. Immutable after a
/// validated construction.
class Algebra {
public:
    /// Lambda(c): dim 2^c, radical = positive-degree monomials.
    static AlgebraPtr exterior(std::uint32_t c, FieldPtr field);
    /// Lambda(c) x| G with the canonical Hopf structure.
    static AlgebraPtr skew(std::uint32_t c, GroupData group, FieldPtr field);
    /// Generic structure-constant algebra. `products[i * dim + j]` is b_i b_j.
    static AlgebraPtr from_structure_constants(FieldPtr field, std::vector<std::string> labels,
                                               std::vector<SparseVec> products, std::size_t unit_index,
                                               std::vector<Generator> generators,
                                               std::vector<std::size_t> radical_basis,
                                               std::optional<HopfData> hopf);

    const FieldPtr& field() const { return field_; }
    const Field& F() const { return *field_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t unit_index() const { return unit_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::optional<std::size_t> generator_index(const std::string& name) const;
    const std::vector<std::size_t>& radical_basis() const { return radical_; }
    const std::optional<HopfData>& hopf() const { return hopf_; }
    const std::optional<SkewStructure>& skew_structure() const { return skew_; }
    const std::string& hash() const { return hash_; }
    /// "exterior", "skew_exterior" or "structure_constants"
    const std::string& kind() const { return kind_; }

    /// Number of exterior generators c (0 for generic algebras without any).
    std::uint32_t exterior_rank() const;
    std::vector<std::size_t> exterior_generators() const;
    std::vector<std::size_t> group_generators() const;
    bool is_canonical_c2() const;

    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    Vector multiply(const Vector& a, const Vector& b) const;
    Vector basis_vector(std::size_t i) const;
    Vector unit() const { return basis_vector(unit_); }

    /// Basis element i as a linear combination of generator words.
    struct Word {
        Scalar coef;
        std::vector<std::uint32_t> letters;  ///< generator indices, left to right
    };
    const std::vector<Word>& words(std::size_t i) const { return words_[i]; }

    /// Smallest k with rad^k = 0.
    std::size_t nilpotency_index() const { return nilpotency_; }

    /// Same algebra over an extension of its prime field (requires base e = 1).
    AlgebraPtr extend_scalars(FieldPtr bigger) const;

private:
    Algebra() = default;
    void finish_and_validate();
    void compute_words();
    void compute_hash();

    FieldPtr field_;
    std::string kind_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> products_;
    std::size_t unit_ = 0;
    std::vector<Generator> generators_;
    std::vector<std::size_t> radical_;
    std::optional<HopfData> hopf_;
    std::optional<SkewStructure> skew_;
    std::vector<std::vector<Word>> words_;
    std::size_t nilpotency_ = 0;
    std::string hash_;
};

/// Checks every Hopf axiom on the basis. Failures are reported, not thrown.
HopfReport validate_hopf(const Algebra& a, const HopfData& hopf);
HopfReport validate_hopf(const Algebra& a);

/// Canonical Hopf data for Lambda(c) x| G: Delta(g) = g (x) g,
/// Delta(x_i) = x_i (x) 1 + h (x) x_i, S(x_i) = -h x_i, eps(x_i) = 0.
HopfData canonical_skew_hopf(const Algebra& a);

/// First nonzero coordinate scaled to 1. Throws ValidationError on zero.
Vector normalize_projective(const Field& F, Vector v);

/// u_lambda = lambda_1 x_1 + ... + lambda_c x_c with normalized lambda.
struct LineElement {
    Vector lambda;
    Vector element;
};
LineElement line_element(const Algebra& a, const Vector& lambda);

/// The cyclic group C_n acting on span(x_1..x_c) by the scalar `zeta`, with
/// h = g^{n/2}. Helper for the standard test algebras.
GroupData scalar_cyclic_group(const FieldPtr& field, std::uint32_t c, std::uint32_t n, Scalar zeta);

}  // namespace suppvar
