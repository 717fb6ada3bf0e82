#pragma once

#include "qcramer/errors.hpp"
#include "qcramer/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qcramer {

/// Dense m x n quaternion matrix, row-major. Element access is 0-based;
/// the determinant and subset APIs take 1-based indices.
template <Coefficient T>
class QMatrix {
public:
    using value_type = Quaternion<T>;

    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw Error(ErrorKind::shape_mismatch, "entry count does not match " + std::to_string(rows_) +
                                                       "x" + std::to_string(cols_));
        }
    }
    QMatrix(std::initializer_list<std::initializer_list<value_type>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) {
                throw Error(ErrorKind::shape_mismatch, "ragged matrix literal");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static QMatrix zeros(std::size_t rows, std::size_t cols) { return QMatrix(rows, cols); }
    static QMatrix identity(std::size_t n) {
        QMatrix out(n, n);
        for (std::size_t d = 0; d < n; ++d) {
            out(d, d) = value_type::one();
        }
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const value_type> entries() const noexcept { return data_; }
    std::span<value_type> entries() noexcept { return data_; }
    std::span<const value_type> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<value_type> row(std::size_t r) const {
        auto s = row_span(r);
        return {s.begin(), s.end()};
    }
    std::vector<value_type> col(std::size_t c) const {
        std::vector<value_type> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            out.push_back((*this)(r, c));
        }
        return out;
    }

    bool is_zero() const {
        for (const auto& q : data_) {
            if (!q.is_zero()) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <Coefficient T>
struct Complex {
    T re{0};
    T im{0};

    friend Complex operator+(const Complex& a, const Complex& b) { return {T(a.re + b.re), T(a.im + b.im)}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {T(a.re - b.re), T(a.im - b.im)}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {T(a.re * b.re - a.im * b.im), T(a.re * b.im + a.im * b.re)};
    }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <Coefficient T>
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Complex<T>> data;

    const Complex<T>& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    Complex<T>& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;
};

/// Hermitian adjoint: (A*)_ij = conj(A_ji).
template <Coefficient T>
QMatrix<T> adjoint(const QMatrix<T>& a);

/// Product with left-to-right factor order preserved in every entry.
template <Coefficient T>
QMatrix<T> matmul(const QMatrix<T>& a, const QMatrix<T>& b);

template <Coefficient T>
QMatrix<T> operator*(const QMatrix<T>& a, const QMatrix<T>& b) {
    return matmul(a, b);
}
template <Coefficient T>
QMatrix<T> operator+(const QMatrix<T>& a, const QMatrix<T>& b);
template <Coefficient T>
QMatrix<T> operator-(const QMatrix<T>& a, const QMatrix<T>& b);
template <Coefficient T>
QMatrix<T> scale(const QMatrix<T>& a, const T& s);

template <Coefficient T>
T frobenius_norm_sq(const QMatrix<T>& a);

/// Row rank by Gaussian elimination over the quaternions. Rationals take the
/// first nonzero pivot; doubles take the largest pivot and treat
/// |pivot|^2 <= eps^2 * max|a_ij|^2 as zero.
template <Coefficient T>
std::size_t rank(const QMatrix<T>& a, double eps = 1e-10);

/// Reduced row echelon form by left row operations, plus the pivot columns.
template <Coefficient T>
struct RowEchelon {
    QMatrix<T> reduced;
    std::vector<std::size_t> pivots;  // 0-based
};

template <Coefficient T>
RowEchelon<T> row_echelon(const QMatrix<T>& a, double eps = 1e-10);

/// Gauss-Jordan inverse of a square matrix; throws SingularError.
template <Coefficient T>
QMatrix<T> elimination_inverse(const QMatrix<T>& a, double eps = 1e-10);

/// Entrywise |H_ij - conj(H_ji)|^2 <= eps^2 * max|H|^2 (exact on rationals).
template <Coefficient T>
bool is_hermitian(const QMatrix<T>& h, double eps = 1e-9);

/// Frobenius-relative comparison; exact on rationals.
template <Coefficient T>
bool approx_equal(const QMatrix<T>& a, const QMatrix<T>& b, double rel_tol = kDefaultRelTol);

/// Blockwise q = a+bi+cj+dk -> [[a+bi, c+di], [-c+di, a-bi]].
template <Coefficient T>
ComplexMatrix<T> complex_embed(const QMatrix<T>& a);

template <Coefficient T>
ComplexMatrix<T> matmul(const ComplexMatrix<T>& a, const ComplexMatrix<T>& b);

template <Coefficient T>
ComplexMatrix<T> conjugate_transpose(const ComplexMatrix<T>& a);

/// Ordinary determinant over the complex field by elimination.
template <Coefficient T>
Complex<T> determinant(const ComplexMatrix<T>& a);

QMatrix<double> to_float(const QMatrix<Rational>& a);

// Column replacement A_{.j}(v) and row replacement A_{i.}(v); 1-based index.
template <Coefficient T>
QMatrix<T> replace_col(const QMatrix<T>& a, std::size_t j, std::span<const Quaternion<T>> v);
template <Coefficient T>
QMatrix<T> replace_row(const QMatrix<T>& a, std::size_t i, std::span<const Quaternion<T>> v);

// `.qm` text format: optional `# m n` header, one row per line, entries
// separated by whitespace. Other lines starting with '#' are comments.
template <Coefficient T>
QMatrix<T> parse_qm(std::string_view text);
template <Coefficient T>
std::string format_qm(const QMatrix<T>& a);
template <Coefficient T>
QMatrix<T> read_qm_file(const std::string& path);

#define QCRAMER_EXTERN_MATRIX(T)                                                                  \
    extern template QMatrix<T> adjoint(const QMatrix<T>&);                                        \
    extern template QMatrix<T> matmul(const QMatrix<T>&, const QMatrix<T>&);                      \
    extern template QMatrix<T> operator+(const QMatrix<T>&, const QMatrix<T>&);                   \
    extern template QMatrix<T> operator-(const QMatrix<T>&, const QMatrix<T>&);                   \
    extern template QMatrix<T> scale(const QMatrix<T>&, const T&);                                \
    extern template T frobenius_norm_sq(const QMatrix<T>&);                                       \
    extern template std::size_t rank(const QMatrix<T>&, double);                                  \
    extern template RowEchelon<T> row_echelon(const QMatrix<T>&, double);                         \
    extern template QMatrix<T> elimination_inverse(const QMatrix<T>&, double);                    \
    extern template bool is_hermitian(const QMatrix<T>&, double);                                 \
    extern template bool approx_equal(const QMatrix<T>&, const QMatrix<T>&, double);              \
    extern template ComplexMatrix<T> complex_embed(const QMatrix<T>&);                            \
    extern template ComplexMatrix<T> matmul(const ComplexMatrix<T>&, const ComplexMatrix<T>&);    \
    extern template ComplexMatrix<T> conjugate_transpose(const ComplexMatrix<T>&);                \
    extern template Complex<T> determinant(const ComplexMatrix<T>&);                              \
    extern template QMatrix<T> replace_col(const QMatrix<T>&, std::size_t,                        \
                                           std::span<const Quaternion<T>>);                       \
    extern template QMatrix<T> replace_row(const QMatrix<T>&, std::size_t,                        \
                                           std::span<const Quaternion<T>>);                       \
    extern template QMatrix<T> parse_qm(std::string_view);                                        \
    extern template std::string format_qm(const QMatrix<T>&);                                     \
    extern template QMatrix<T> read_qm_file(const std::string&);

QCRAMER_EXTERN_MATRIX(Rational)
QCRAMER_EXTERN_MATRIX(double)
#undef QCRAMER_EXTERN_MATRIX

}  // namespace qcramer
