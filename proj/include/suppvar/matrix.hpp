#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "suppvar/field.hpp"

namespace suppvar {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

    static Matrix identity(FieldPtr field, std::size_t n);
    /// Entries are reduced through Field::from_int, so negative literals work.
    static Matrix from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix column(FieldPtr field, const Vector& v);
    /// Columns given as vectors of equal length `rows`.
    static Matrix from_columns(FieldPtr field, std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    const Field& F() const { return *field_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    Vector col(std::size_t c) const;
    const std::vector<Scalar>& data() const { return data_; }

    /// Same entries read in another field. Only meaningful when `other`
    /// extends this matrix's prime field, where the encodings agree.
    Matrix reinterpret(FieldPtr other) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix operator*(const Matrix& o) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(Scalar a) const;
    Matrix transpose() const;

    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    void set_col(std::size_t c, std::span<const Scalar> v);

    static Matrix hstack(const std::vector<Matrix>& parts);
    static Matrix vstack(const std::vector<Matrix>& parts);
    static Matrix block_diag(const std::vector<Matrix>& parts);
    /// Kronecker product, row index = i_a * rows(b) + i_b.
    static Matrix kron(const Matrix& a, const Matrix& b);

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// dst += a * src
void axpy(const Field& F, std::span<Scalar> dst, std::span<const Scalar> src, Scalar a);

struct Echelon {
    Matrix reduced;                    ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination; pivot = first nonzero entry in column order,
/// taken from the topmost available row.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Null-space basis as columns. Column k has a 1 in free column f_k and zeros in
/// every other free column, so the rows `free_cols` of the basis form an identity.
struct KernelBasis {
    Matrix basis;
    std::vector<std::size_t> free_cols;
};
KernelBasis kernel(const Matrix& m);
inline Matrix kernel_basis(const Matrix& m) { return kernel(m).basis; }

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument on a row-count mismatch.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
Matrix power(const Matrix& m, std::uint64_t n);

/// Basis of the column space, in a form whose rows `pivot_rows` are the
/// identity (transpose of an RREF). Deterministic for a given input.
struct ColumnSpace {
    Matrix basis;
    std::vector<std::size_t> pivot_rows;
};
ColumnSpace column_space(const Matrix& m);

/// Echelon basis that grows one vector at a time.
class IncrementalSpan {
public:
    IncrementalSpan(FieldPtr field, std::size_t length) : field_(std::move(field)), length_(length) {}

    /// Reduces v against the stored basis; returns the residue.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    /// Adds v when independent; returns whether it was added.
    bool insert(const Vector& v);
    std::size_t size() const { return rows_.size(); }
    std::size_t length() const { return length_; }

private:
    FieldPtr field_;
    std::size_t length_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace suppvar
