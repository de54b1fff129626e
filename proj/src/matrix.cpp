#include "suppvar/matrix.hpp"

#include <cassert>
#include <stdexcept>

namespace suppvar {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
    if (a.field() && b.field() && !a.F().same_as(b.F())) throw std::invalid_argument("matrices over different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc) throw std::invalid_argument("ragged matrix literal");
        for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = field->from_int(rows[r][c]);
    }
    return m;
}

Matrix Matrix::column(FieldPtr field, const Vector& v) {
    Matrix m(std::move(field), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::from_columns(FieldPtr field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(std::move(field), rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
    return m;
}

Vector Matrix::col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

Matrix Matrix::reinterpret(FieldPtr other) const {
    Matrix r = *this;
    r.field_ = std::move(other);
    return r;
}

bool Matrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void axpy(const Field& F, std::span<Scalar> dst, std::span<const Scalar> src, Scalar a) {
    if (a == 0) return;
    const std::size_t n = dst.size();
    if (F.is_prime()) {
        const std::uint64_t p = F.p();
        for (std::size_t j = 0; j < n; ++j)
            if (src[j]) dst[j] = static_cast<Scalar>((dst[j] + std::uint64_t(a) * src[j]) % p);
        return;
    }
    for (std::size_t j = 0; j < n; ++j)
        if (src[j]) dst[j] = F.add(dst[j], F.mul(a, src[j]));
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    require_same_field(*this, o);
    const FieldPtr& f = field_ ? field_ : o.field_;
    Matrix r(f, rows_, o.cols_);
    if (rows_ == 0 || o.cols_ == 0) return r;
    const Field& F = *f;
    if (F.is_prime()) {
        const std::uint64_t p = F.p();
        std::vector<std::uint64_t> acc(o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            bool any = false;
            std::size_t pending = 0;
            for (std::size_t k = 0; k < cols_; ++k) {
                const std::uint64_t a = at(i, k);
                if (!a) continue;
                any = true;
                const Scalar* src = o.data_.data() + k * o.cols_;
                for (std::size_t j = 0; j < o.cols_; ++j) acc[j] += a * src[j];
                // each term is below 2^32; flush well before overflow
                if (++pending == (1u << 30)) {
                    for (auto& x : acc) x %= p;
                    pending = 0;
                }
            }
            if (!any) continue;
            Scalar* dst = r.data_.data() + i * o.cols_;
            for (std::size_t j = 0; j < o.cols_; ++j) dst[j] = static_cast<Scalar>(acc[j] % p);
        }
        return r;
    }
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) axpy(F, r.row(i), o.row(k), at(i, k));
    return r;
}

Vector Matrix::operator*(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    Vector out(rows_, 0);
    const Field& F = *field_;
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s = 0;
        for (std::size_t k = 0; k < cols_; ++k)
            if (at(i, k) && v[k]) s = F.add(s, F.mul(at(i, k), v[k]));
        out[i] = s;
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    require_same_field(*this, o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F().add(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
    require_same_field(*this, o);
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = F().sub(data_[i], o.data_[i]);
    return r;
}

Matrix Matrix::scaled(Scalar a) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = F().mul(x, a);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
    Matrix r(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto src = row(idx[i]);
        std::copy(src.begin(), src.end(), r.row(i).begin());
    }
    return r;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) at(r0 + i, c0 + j) = b.at(i, j);
}

void Matrix::set_col(std::size_t c, std::span<const Scalar> v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::hstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) return {};
    std::size_t nc = 0;
    for (auto& p : parts) {
        if (p.rows() != parts.front().rows()) throw std::invalid_argument("hstack row mismatch");
        nc += p.cols();
    }
    Matrix r(parts.front().field(), parts.front().rows(), nc);
    std::size_t c = 0;
    for (auto& p : parts) {
        r.set_block(0, c, p);
        c += p.cols();
    }
    return r;
}

Matrix Matrix::vstack(const std::vector<Matrix>& parts) {
    if (parts.empty()) return {};
    std::size_t nr = 0;
    for (auto& p : parts) {
        if (p.cols() != parts.front().cols()) throw std::invalid_argument("vstack column mismatch");
        nr += p.rows();
    }
    Matrix r(parts.front().field(), nr, parts.front().cols());
    std::size_t row = 0;
    for (auto& p : parts) {
        r.set_block(row, 0, p);
        row += p.rows();
    }
    return r;
}

Matrix Matrix::block_diag(const std::vector<Matrix>& parts) {
    if (parts.empty()) return {};
    std::size_t nr = 0, nc = 0;
    for (auto& p : parts) {
        nr += p.rows();
        nc += p.cols();
    }
    Matrix r(parts.front().field(), nr, nc);
    std::size_t i = 0, j = 0;
    for (auto& p : parts) {
        r.set_block(i, j, p);
        i += p.rows();
        j += p.cols();
    }
    return r;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    require_same_field(a, b);
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    const Field& F = a.F();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar s = a.at(i, j);
            if (!s) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b.at(k, l)) r.at(i * b.rows() + k, j * b.cols() + l) = F.mul(s, b.at(k, l));
        }
    return r;
}

Echelon rref(Matrix m) {
    Echelon out;
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) {
        out.reduced = std::move(m);
        return out;
    }
    const Field& F = m.F();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < C && prow < R; ++c) {
        std::size_t piv = R;
        for (std::size_t r = prow; r < R; ++r)
            if (m.at(r, c)) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        if (piv != prow) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(prow).begin());
        const Scalar inv = F.inv(m.at(prow, c));
        if (inv != 1)
            for (auto& x : m.row(prow)) x = F.mul(x, inv);
        auto prow_span = m.row(prow);
        // only entries from column c onward can be nonzero in the pivot row
        std::span<const Scalar> tail(prow_span.data() + c, C - c);
        for (std::size_t r = 0; r < R; ++r) {
            if (r == prow) continue;
            const Scalar f = m.at(r, c);
            if (!f) continue;
            std::span<Scalar> dst(m.row(r).data() + c, C - c);
            axpy(F, dst, tail, F.neg(f));
        }
        out.pivots.push_back(c);
        ++prow;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    // forward elimination only
    Matrix a = m;
    const Field& F = a.F();
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < C && prow < R; ++c) {
        std::size_t piv = R;
        for (std::size_t r = prow; r < R; ++r)
            if (a.at(r, c)) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        if (piv != prow) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(prow).begin());
        const Scalar inv = F.inv(a.at(prow, c));
        std::span<const Scalar> tail(a.row(prow).data() + c, C - c);
        for (std::size_t r = prow + 1; r < R; ++r) {
            const Scalar f = a.at(r, c);
            if (!f) continue;
            std::span<Scalar> dst(a.row(r).data() + c, C - c);
            axpy(F, dst, tail, F.neg(F.mul(f, inv)));
        }
        ++prow;
    }
    return prow;
}

KernelBasis kernel(const Matrix& m) {
    KernelBasis out;
    const std::size_t C = m.cols();
    const FieldPtr& f = m.field();
    std::vector<std::size_t> pivots;
    Matrix red;
    if (m.rows() > 0 && C > 0) {
        auto e = rref(m);
        pivots = std::move(e.pivots);
        red = std::move(e.reduced);
    }
    std::vector<bool> is_pivot(C, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < C; ++c)
        if (!is_pivot[c]) out.free_cols.push_back(c);
    out.basis = Matrix(f, C, out.free_cols.size());
    const Field& F = *f;
    for (std::size_t k = 0; k < out.free_cols.size(); ++k) {
        const std::size_t fc = out.free_cols[k];
        out.basis.at(fc, k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) out.basis.at(pivots[i], k) = F.neg(red.at(i, fc));
    }
    return out;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const std::size_t C = m.cols(), B = b.cols();
    const FieldPtr& f = m.field() ? m.field() : b.field();
    Matrix x(f, C, B);
    if (m.rows() == 0) return x;
    if (C == 0) {
        if (!b.is_zero()) return std::nullopt;
        return x;
    }
    auto e = rref(Matrix::hstack({m, b}));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        const std::size_t pc = e.pivots[i];
        if (pc >= C) return std::nullopt;
        for (std::size_t j = 0; j < B; ++j) x.at(pc, j) = e.reduced.at(i, C + j);
    }
#ifndef NDEBUG
    assert(m * x == b);
#endif
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    if (n == 0) return m;
    auto e = rref(Matrix::hstack({m, Matrix::identity(m.field(), n)}));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

Matrix power(const Matrix& m, std::uint64_t n) {
    Matrix r = Matrix::identity(m.field(), m.rows()), b = m;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

ColumnSpace column_space(const Matrix& m) {
    ColumnSpace out;
    if (m.empty()) {
        out.basis = Matrix(m.field(), m.rows(), 0);
        return out;
    }
    auto e = rref(m.transpose());
    const std::size_t r = e.pivots.size();
    out.basis = e.reduced.block(0, 0, r, m.rows()).transpose();
    out.pivot_rows = std::move(e.pivots);
    return out;
}

Vector IncrementalSpan::reduce(Vector v) const {
    const Field& F = *field_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar c = v[pivots_[i]];
        if (c) axpy(F, v, rows_[i], F.neg(c));
    }
    return v;
}

bool IncrementalSpan::contains(const Vector& v) const {
    for (auto x : reduce(v))
        if (x) return false;
    return true;
}

bool IncrementalSpan::insert(const Vector& v) {
    Vector r = reduce(v);
    std::size_t piv = length_;
    for (std::size_t i = 0; i < length_; ++i)
        if (r[i]) {
            piv = i;
            break;
        }
    if (piv == length_) return false;
    const Field& F = *field_;
    const Scalar inv = F.inv(r[piv]);
    for (auto& x : r) x = F.mul(x, inv);
    rows_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

}  // namespace suppvar
