#include "qcramer/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace qcramer {

namespace {

template <Coefficient T>
double max_entry_norm_sq(const QMatrix<T>& a) {
    double best = 0.0;
    for (const auto& q : a.entries()) {
        best = std::max(best, to_double(norm_sq(q)));
    }
    return best;
}

// Index of the pivot row for column c among rows [from, rows), or rows() if
// the column is (numerically) zero there.
template <Coefficient T>
std::size_t find_pivot(const QMatrix<T>& m, std::size_t c, std::size_t from, double threshold) {
    if constexpr (is_exact_v<T>) {
        for (std::size_t r = from; r < m.rows(); ++r) {
            if (!m(r, c).is_zero()) {
                return r;
            }
        }
        return m.rows();
    } else {
        std::size_t best = m.rows();
        double best_norm = 0.0;
        for (std::size_t r = from; r < m.rows(); ++r) {
            const double n = norm_sq(m(r, c));
            if (n > best_norm) {
                best_norm = n;
                best = r;
            }
        }
        if (best == m.rows() || best_norm <= threshold) {
            return m.rows();
        }
        return best;
    }
}

template <Coefficient T>
void swap_rows(QMatrix<T>& m, std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(a, c), m(b, c));
    }
}

template <Coefficient T>
void scale_row_left(QMatrix<T>& m, std::size_t r, const Quaternion<T>& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = f * m(r, c);
    }
}

// row_target -= f * row_source
template <Coefficient T>
void eliminate_row(QMatrix<T>& m, std::size_t target, std::size_t source, const Quaternion<T>& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
        m(target, c) -= f * m(source, c);
    }
}

template <Coefficient T>
Complex<T> complex_div(const Complex<T>& a, const Complex<T>& b) {
    const T den = b.re * b.re + b.im * b.im;
    return {T((a.re * b.re + a.im * b.im) / den), T((a.im * b.re - a.re * b.im) / den)};
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) {
            ++pos;
        }
        if (pos > start) {
            out.push_back(line.substr(start, pos - start));
        }
    }
    return out;
}

bool parse_header(std::string_view line, std::size_t& m, std::size_t& n) {
    auto tokens = split_ws(line.substr(1));
    if (tokens.size() != 2) {
        return false;
    }
    try {
        std::size_t used = 0;
        const std::string a(tokens[0]);
        const std::string b(tokens[1]);
        m = std::stoul(a, &used);
        if (used != a.size()) {
            return false;
        }
        n = std::stoul(b, &used);
        return used == b.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

template <Coefficient T>
QMatrix<T> adjoint(const QMatrix<T>& a) {
    QMatrix<T> out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = conjugate(a(r, c));
        }
    }
    return out;
}

template <Coefficient T>
QMatrix<T> matmul(const QMatrix<T>& a, const QMatrix<T>& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::shape_mismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                   std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                   "x" + std::to_string(b.cols()));
    }
    QMatrix<T> out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            Quaternion<T> acc;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                acc += a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

template <Coefficient T>
QMatrix<T> operator+(const QMatrix<T>& a, const QMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::shape_mismatch, "cannot add matrices of different shapes");
    }
    QMatrix<T> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

template <Coefficient T>
QMatrix<T> operator-(const QMatrix<T>& a, const QMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::shape_mismatch, "cannot subtract matrices of different shapes");
    }
    QMatrix<T> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) -= b(r, c);
        }
    }
    return out;
}

template <Coefficient T>
QMatrix<T> scale(const QMatrix<T>& a, const T& s) {
    QMatrix<T> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(r, c) = s * a(r, c);
        }
    }
    return out;
}

template <Coefficient T>
T frobenius_norm_sq(const QMatrix<T>& a) {
    T acc(0);
    for (const auto& q : a.entries()) {
        acc += norm_sq(q);
    }
    return acc;
}

template <Coefficient T>
RowEchelon<T> row_echelon(const QMatrix<T>& a, double eps) {
    RowEchelon<T> out{a, {}};
    QMatrix<T>& m = out.reduced;
    const double threshold = eps * eps * max_entry_norm_sq(a);
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        const std::size_t p = find_pivot(m, c, lead, threshold);
        if (p == m.rows()) {
            continue;
        }
        swap_rows(m, p, lead);
        scale_row_left(m, lead, reciprocal(m(lead, c)));
        m(lead, c) = Quaternion<T>::one();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != lead && !m(r, c).is_zero()) {
                const Quaternion<T> f = m(r, c);
                eliminate_row(m, r, lead, f);
                m(r, c) = Quaternion<T>::zero();
            }
        }
        out.pivots.push_back(c);
        ++lead;
    }
    return out;
}

template <Coefficient T>
std::size_t rank(const QMatrix<T>& a, double eps) {
    return row_echelon(a, eps).pivots.size();
}

template <Coefficient T>
QMatrix<T> elimination_inverse(const QMatrix<T>& a, double eps) {
    if (!a.is_square()) {
        throw Error(ErrorKind::shape_mismatch, "inverse requires a square matrix");
    }
    const std::size_t n = a.rows();
    QMatrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n + r) = Quaternion<T>::one();
    }
    const double threshold = eps * eps * max_entry_norm_sq(a);
    for (std::size_t c = 0; c < n; ++c) {
        const std::size_t p = find_pivot(aug, c, c, threshold);
        if (p == n) {
            throw SingularError("matrix is singular (elimination found no pivot in column " +
                                    std::to_string(c + 1) + ")",
                                "0");
        }
        swap_rows(aug, p, c);
        scale_row_left(aug, c, reciprocal(aug(c, c)));
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && !aug(r, c).is_zero()) {
                const Quaternion<T> f = aug(r, c);
                eliminate_row(aug, r, c, f);
            }
        }
    }
    QMatrix<T> out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = aug(r, n + c);
        }
    }
    return out;
}

template <Coefficient T>
bool is_hermitian(const QMatrix<T>& h, double eps) {
    if (!h.is_square()) {
        return false;
    }
    const double bound = eps * eps * max_entry_norm_sq(h);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = r; c < h.cols(); ++c) {
            const Quaternion<T> diff = h(r, c) - conjugate(h(c, r));
            if constexpr (is_exact_v<T>) {
                if (!diff.is_zero()) {
                    return false;
                }
            } else {
                if (norm_sq(diff) > bound) {
                    return false;
                }
            }
        }
    }
    return true;
}

template <Coefficient T>
bool approx_equal(const QMatrix<T>& a, const QMatrix<T>& b, double rel_tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    if constexpr (is_exact_v<T>) {
        return a == b;
    } else {
        const double diff = frobenius_norm_sq(a - b);
        const double scale_sq = std::max(frobenius_norm_sq(a), frobenius_norm_sq(b));
        return diff <= rel_tol * rel_tol * scale_sq;
    }
}

template <Coefficient T>
ComplexMatrix<T> complex_embed(const QMatrix<T>& a) {
    ComplexMatrix<T> out{2 * a.rows(), 2 * a.cols(), std::vector<Complex<T>>(4 * a.rows() * a.cols())};
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto& q = a(r, c);
            out(2 * r, 2 * c) = {q.w, q.x};
            out(2 * r, 2 * c + 1) = {q.y, q.z};
            out(2 * r + 1, 2 * c) = {T(-q.y), q.z};
            out(2 * r + 1, 2 * c + 1) = {q.w, T(-q.x)};
        }
    }
    return out;
}

template <Coefficient T>
ComplexMatrix<T> matmul(const ComplexMatrix<T>& a, const ComplexMatrix<T>& b) {
    if (a.cols != b.rows) {
        throw Error(ErrorKind::shape_mismatch, "complex matmul shape mismatch");
    }
    ComplexMatrix<T> out{a.rows, b.cols, std::vector<Complex<T>>(a.rows * b.cols)};
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < b.cols; ++c) {
            Complex<T> acc;
            for (std::size_t k = 0; k < a.cols; ++k) {
                acc = acc + a(r, k) * b(k, c);
            }
            out(r, c) = acc;
        }
    }
    return out;
}

template <Coefficient T>
ComplexMatrix<T> conjugate_transpose(const ComplexMatrix<T>& a) {
    ComplexMatrix<T> out{a.cols, a.rows, std::vector<Complex<T>>(a.rows * a.cols)};
    for (std::size_t r = 0; r < a.rows; ++r) {
        for (std::size_t c = 0; c < a.cols; ++c) {
            out(c, r) = {a(r, c).re, T(-a(r, c).im)};
        }
    }
    return out;
}

template <Coefficient T>
Complex<T> determinant(const ComplexMatrix<T>& a) {
    if (a.rows != a.cols) {
        throw Error(ErrorKind::shape_mismatch, "determinant requires a square matrix");
    }
    ComplexMatrix<T> m = a;
    const std::size_t n = a.rows;
    Complex<T> det{T(1), T(0)};
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = n;
        if constexpr (is_exact_v<T>) {
            for (std::size_t r = c; r < n; ++r) {
                if (m(r, c).re != 0 || m(r, c).im != 0) {
                    p = r;
                    break;
                }
            }
        } else {
            double best = 0.0;
            for (std::size_t r = c; r < n; ++r) {
                const double v = m(r, c).re * m(r, c).re + m(r, c).im * m(r, c).im;
                if (v > best) {
                    best = v;
                    p = r;
                }
            }
        }
        if (p == n) {
            return {T(0), T(0)};
        }
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m(p, k), m(c, k));
            }
            det = Complex<T>{T(-det.re), T(-det.im)};
        }
        det = det * m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const Complex<T> f = complex_div(m(r, c), m(c, c));
            for (std::size_t k = c; k < n; ++k) {
                m(r, k) = m(r, k) - f * m(c, k);
            }
        }
    }
    return det;
}

QMatrix<double> to_float(const QMatrix<Rational>& a) {
    std::vector<Quaternion<double>> data;
    data.reserve(a.entries().size());
    for (const auto& q : a.entries()) {
        data.push_back(to_float(q));
    }
    return {a.rows(), a.cols(), std::move(data)};
}

template <Coefficient T>
QMatrix<T> replace_col(const QMatrix<T>& a, std::size_t j, std::span<const Quaternion<T>> v) {
    if (j < 1 || j > a.cols()) {
        throw Error(ErrorKind::domain, "column index " + std::to_string(j) + " out of range");
    }
    if (v.size() != a.rows()) {
        throw Error(ErrorKind::shape_mismatch, "replacement column has wrong length");
    }
    QMatrix<T> out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        out(r, j - 1) = v[r];
    }
    return out;
}

template <Coefficient T>
QMatrix<T> replace_row(const QMatrix<T>& a, std::size_t i, std::span<const Quaternion<T>> v) {
    if (i < 1 || i > a.rows()) {
        throw Error(ErrorKind::domain, "row index " + std::to_string(i) + " out of range");
    }
    if (v.size() != a.cols()) {
        throw Error(ErrorKind::shape_mismatch, "replacement row has wrong length");
    }
    QMatrix<T> out = a;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        out(i - 1, c) = v[c];
    }
    return out;
}

template <Coefficient T>
QMatrix<T> parse_qm(std::string_view text) {
    bool have_header = false;
    std::size_t hm = 0;
    std::size_t hn = 0;
    std::vector<Quaternion<T>> data;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty()) {
            continue;
        }
        if (tokens.front().front() == '#') {
            if (!have_header && rows == 0) {
                std::size_t trimmed = line.find('#');
                if (parse_header(line.substr(trimmed), hm, hn)) {
                    have_header = true;
                }
            }
            continue;
        }
        if (rows == 0) {
            cols = tokens.size();
        } else if (tokens.size() != cols) {
            throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected " +
                                              std::to_string(cols) + " entries, found " +
                                              std::to_string(tokens.size()));
        }
        for (auto tok : tokens) {
            data.push_back(parse_quaternion<T>(tok));
        }
        ++rows;
    }
    if (have_header) {
        if (rows == 0 && (hm == 0 || hn == 0)) {
            return QMatrix<T>(hm, hn);
        }
        if (rows != hm || cols != hn) {
            throw Error(ErrorKind::parse, "header declares " + std::to_string(hm) + "x" + std::to_string(hn) +
                                              " but body is " + std::to_string(rows) + "x" + std::to_string(cols));
        }
    } else if (rows == 0) {
        throw Error(ErrorKind::parse, "matrix file has no rows");
    }
    return {rows, cols, std::move(data)};
}

template <Coefficient T>
std::string format_qm(const QMatrix<T>& a) {
    std::string out = "# " + std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (c > 0) {
                out += ' ';
            }
            out += format(a(r, c));
        }
        out += '\n';
    }
    return out;
}

template <Coefficient T>
QMatrix<T> read_qm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::io, "cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_qm<T>(buf.str());
}

#define QCRAMER_INSTANTIATE_MATRIX(T)                                                                       \
    template QMatrix<T> adjoint(const QMatrix<T>&);                                                         \
    template QMatrix<T> matmul(const QMatrix<T>&, const QMatrix<T>&);                                       \
    template QMatrix<T> operator+(const QMatrix<T>&, const QMatrix<T>&);                                    \
    template QMatrix<T> operator-(const QMatrix<T>&, const QMatrix<T>&);                                    \
    template QMatrix<T> scale(const QMatrix<T>&, const T&);                                                 \
    template T frobenius_norm_sq(const QMatrix<T>&);                                                        \
    template std::size_t rank(const QMatrix<T>&, double);                                                   \
    template RowEchelon<T> row_echelon(const QMatrix<T>&, double);                                          \
    template QMatrix<T> elimination_inverse(const QMatrix<T>&, double);                                     \
    template bool is_hermitian(const QMatrix<T>&, double);                                                  \
    template bool approx_equal(const QMatrix<T>&, const QMatrix<T>&, double);                               \
    template ComplexMatrix<T> complex_embed(const QMatrix<T>&);                                             \
    template ComplexMatrix<T> matmul(const ComplexMatrix<T>&, const ComplexMatrix<T>&);                     \
    template ComplexMatrix<T> conjugate_transpose(const ComplexMatrix<T>&);                                 \
    template Complex<T> determinant(const ComplexMatrix<T>&);                                               \
    template QMatrix<T> replace_col(const QMatrix<T>&, std::size_t, std::span<const Quaternion<T>>);       \
    template QMatrix<T> replace_row(const QMatrix<T>&, std::size_t, std::span<const Quaternion<T>>);       \
    template QMatrix<T> parse_qm(std::string_view);                                                         \
    template std::string format_qm(const QMatrix<T>&);                                                      \
    template QMatrix<T> read_qm_file(const std::string&);

QCRAMER_INSTANTIATE_MATRIX(Rational)
QCRAMER_INSTANTIATE_MATRIX(double)

}  // namespace qcramer
