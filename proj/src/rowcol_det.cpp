#include "qcramer/rowcol_det.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <string>

namespace qcramer {

namespace {

std::vector<std::size_t> trace_cycle(const Permutation& perm, std::size_t start, std::vector<bool>& seen) {
    std::vector<std::size_t> cycle;
    std::size_t cur = start;
    do {
        cycle.push_back(cur);
        seen[cur - 1] = true;
        cur = perm[cur - 1];
    } while (cur != start);
    return cycle;
}

void check_permutation(const Permutation& perm, std::size_t anchor) {
    const std::size_t n = perm.size();
    std::vector<bool> hit(n, false);
    for (std::size_t v : perm) {
        if (v < 1 || v > n || hit[v - 1]) {
            throw Error(ErrorKind::domain, "not a permutation of 1.." + std::to_string(n));
        }
        hit[v - 1] = true;
    }
    if (anchor < 1 || anchor > n) {
        throw Error(ErrorKind::domain, "distinguished index " + std::to_string(anchor) + " outside 1.." +
                                           std::to_string(n));
    }
}

template <Coefficient T>
void check_det_args(const QMatrix<T>& a, std::size_t index, const DetOptions& opts, const char* what) {
    if (!a.is_square()) {
        throw Error(ErrorKind::shape_mismatch, std::string(what) + " requires a square matrix, got " +
                                                   std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
    if (a.rows() > opts.max_n) {
        throw Error(ErrorKind::size_cap, std::string(what) + " of order " + std::to_string(a.rows()) +
                                             " exceeds the cap " + std::to_string(opts.max_n) +
                                             " (factorial blow-up: " + std::to_string(a.rows()) + "! terms)");
    }
    if (index < 1 || index > a.rows()) {
        throw Error(ErrorKind::domain, std::string(what) + " index " + std::to_string(index) + " outside 1.." +
                                           std::to_string(a.rows()));
    }
}

template <Coefficient T>
Quaternion<T> monomial(const QMatrix<T>& a, const CycleDecomposition& cd) {
    Quaternion<T> term = Quaternion<T>::one();
    for (const auto& [r, c] : cd.factors()) {
        term = term * a(r - 1, c - 1);
    }
    if (cd.sign() < 0) {
        term = -term;
    }
    return term;
}

template <Coefficient T>
Quaternion<T> permutation_sum(const QMatrix<T>& a, std::size_t index, CycleOrder order) {
    Permutation perm(a.rows());
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    Quaternion<T> acc;
    do {
        const CycleDecomposition cd =
            order == CycleOrder::left ? left_ordered_cycles(perm, index) : right_ordered_cycles(perm, index);
        acc += monomial(a, cd);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// A with row `drop_row` and column `drop_col` removed (both 1-based).
template <Coefficient T>
QMatrix<T> delete_row_col(const QMatrix<T>& a, std::size_t drop_row, std::size_t drop_col) {
    QMatrix<T> out(a.rows() - 1, a.cols() - 1);
    for (std::size_t r = 0, orow = 0; r < a.rows(); ++r) {
        if (r + 1 == drop_row) {
            continue;
        }
        for (std::size_t c = 0, ocol = 0; c < a.cols(); ++c) {
            if (c + 1 == drop_col) {
                continue;
            }
            out(orow, ocol++) = a(r, c);
        }
        ++orow;
    }
    return out;
}

template <Coefficient T>
bool negligible_det(const T& det, const QMatrix<T>& m) {
    if constexpr (is_exact_v<T>) {
        return det == 0;
    } else {
        double scale = 0.0;
        for (const auto& q : m.entries()) {
            scale = std::max(scale, std::sqrt(norm_sq(q)));
        }
        return std::abs(det) <= 1e-12 * std::pow(scale, static_cast<double>(m.rows()));
    }
}

template <Coefficient T>
std::string det_text(const T& det) {
    return format_coefficient(det);
}

}  // namespace

std::size_t CycleDecomposition::order_n() const {
    std::size_t n = 0;
    for (const auto& c : cycles) {
        n += c.size();
    }
    return n;
}

int CycleDecomposition::sign() const { return (order_n() - cycles.size()) % 2 == 0 ? 1 : -1; }

std::vector<std::pair<std::size_t, std::size_t>> CycleDecomposition::factors() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(order_n());
    for (const auto& c : cycles) {
        const std::size_t len = c.size();
        if (order == CycleOrder::left) {
            for (std::size_t t = 0; t < len; ++t) {
                out.emplace_back(c[t], c[(t + 1) % len]);
            }
        } else {
            // Written (cm ... c1 c0): start at the closing element c0.
            const std::size_t lead = c.back();
            std::size_t prev = lead;
            for (std::size_t t = 0; t < len; ++t) {
                out.emplace_back(prev, c[t]);
                prev = c[t];
            }
        }
    }
    return out;
}

CycleDecomposition left_ordered_cycles(const Permutation& sigma, std::size_t i) {
    check_permutation(sigma, i);
    CycleDecomposition out{CycleOrder::left, {}};
    std::vector<bool> seen(sigma.size(), false);
    out.cycles.push_back(trace_cycle(sigma, i, seen));
    for (std::size_t m = 1; m <= sigma.size(); ++m) {
        if (!seen[m - 1]) {
            out.cycles.push_back(trace_cycle(sigma, m, seen));
        }
    }
    return out;
}

CycleDecomposition right_ordered_cycles(const Permutation& tau, std::size_t j) {
    check_permutation(tau, j);
    CycleDecomposition out{CycleOrder::right, {}};
    std::vector<bool> seen(tau.size(), false);
    // Traced from its closing element c0 as c0, tau(c0), ...; written form is
    // tau(c0), tau^2(c0), ..., c0.
    auto written = [&](std::size_t lead) {
        auto c = trace_cycle(tau, lead, seen);
        std::rotate(c.begin(), c.begin() + 1, c.end());
        return c;
    };
    auto distinguished = written(j);
    std::vector<std::vector<std::size_t>> others;
    for (std::size_t m = 1; m <= tau.size(); ++m) {
        if (!seen[m - 1]) {
            others.push_back(written(m));
        }
    }
    out.cycles.assign(others.rbegin(), others.rend());
    out.cycles.push_back(std::move(distinguished));
    return out;
}

template <Coefficient T>
Quaternion<T> rdet(const QMatrix<T>& a, std::size_t i, const DetOptions& opts) {
    check_det_args(a, i, opts, "rdet");
    return permutation_sum(a, i, CycleOrder::left);
}

template <Coefficient T>
Quaternion<T> cdet(const QMatrix<T>& a, std::size_t j, const DetOptions& opts) {
    check_det_args(a, j, opts, "cdet");
    return permutation_sum(a, j, CycleOrder::right);
}

template <Coefficient T>
Quaternion<T> right_cofactor(const QMatrix<T>& a, std::size_t i, std::size_t j, const DetOptions& opts) {
    check_det_args(a, i, opts, "right cofactor");
    check_det_args(a, j, opts, "right cofactor");
    if (a.rows() == 1) {
        return Quaternion<T>::one();
    }
    if (i == j) {
        // k = min({1..n} \ {i}) is always the first remaining position.
        return rdet(delete_row_col(a, i, i), 1, opts);
    }
    const auto col_i = a.col(i - 1);
    const QMatrix<T> reduced = delete_row_col(replace_col<T>(a, j, col_i), i, i);
    return -rdet(reduced, j < i ? j : j - 1, opts);
}

template <Coefficient T>
Quaternion<T> left_cofactor(const QMatrix<T>& a, std::size_t i, std::size_t j, const DetOptions& opts) {
    check_det_args(a, i, opts, "left cofactor");
    check_det_args(a, j, opts, "left cofactor");
    if (a.rows() == 1) {
        return Quaternion<T>::one();
    }
    if (i == j) {
        return cdet(delete_row_col(a, j, j), 1, opts);
    }
    const auto row_j = a.row(j - 1);
    const QMatrix<T> reduced = delete_row_col(replace_row<T>(a, i, row_j), j, j);
    return -cdet(reduced, i < j ? i : i - 1, opts);
}

template <Coefficient T>
T hermitian_det(const QMatrix<T>& h, const DetOptions& opts, double eps) {
    if (!h.is_square()) {
        throw Error(ErrorKind::shape_mismatch, "determinant of a non-square matrix");
    }
    if (h.rows() == 0) {
        return T(1);
    }
    if (!is_hermitian(h, eps)) {
        throw Error(ErrorKind::domain, "matrix is not Hermitian");
    }
    const Quaternion<T> by_row = rdet(h, 1, opts);
#ifndef NDEBUG
    const Quaternion<T> by_col = cdet(h, 1, opts);
    if constexpr (is_exact_v<T>) {
        assert(by_row == by_col && by_row.is_real());
    } else {
        assert(norm_sq(by_row - by_col) <= 1e-16 * std::max(1.0, norm_sq(by_row)));
    }
#endif
    return by_row.w;
}

template <Coefficient T>
T gram_det(const QMatrix<T>& a, const DetOptions& opts) {
    return hermitian_det(matmul(adjoint(a), a), opts);
}

template <Coefficient T>
T ddet(const QMatrix<T>& a, const DetOptions& opts) {
    if (!a.is_square()) {
        throw Error(ErrorKind::shape_mismatch, "ddet requires a square matrix; use gram_det");
    }
    return gram_det(a, opts);
}

template <Coefficient T>
QMatrix<T> hermitian_inverse(const QMatrix<T>& h, InverseSide side, const DetOptions& opts) {
    const T det = hermitian_det(h, opts);
    if (negligible_det(det, h)) {
        throw SingularError("Hermitian matrix is singular (det = " + det_text(det) + ")", det_text(det));
    }
    const std::size_t n = h.rows();
    QMatrix<T> out(n, n);
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = 1; c <= n; ++c) {
            const Quaternion<T> cof =
                side == InverseSide::right ? right_cofactor(h, c, r, opts) : left_cofactor(h, c, r, opts);
            out(r - 1, c - 1) = cof / det;
        }
    }
    return out;
}

template <Coefficient T>
QMatrix<T> inverse_via_ddet(const QMatrix<T>& a, InverseSide side, const DetOptions& opts) {
    if (!a.is_square()) {
        throw Error(ErrorKind::shape_mismatch, "inverse requires a square matrix");
    }
    const std::size_t n = a.rows();
    const QMatrix<T> a_star = adjoint(a);
    const QMatrix<T> gram = side == InverseSide::left ? matmul(a_star, a) : matmul(a, a_star);
    const T det = hermitian_det(gram, opts);
    if (negligible_det(det, gram)) {
        throw SingularError("matrix is singular (ddet = " + det_text(det) + ")", det_text(det));
    }
    QMatrix<T> out(n, n);
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::size_t c = 1; c <= n; ++c) {
            Quaternion<T> num;
            if (side == InverseSide::left) {
                num = cdet(replace_col<T>(gram, r, a_star.col(c - 1)), r, opts);
            } else {
                num = rdet(replace_row<T>(gram, c, a_star.row(r - 1)), c, opts);
            }
            out(r - 1, c - 1) = num / det;
        }
    }
    return out;
}

#define QCRAMER_INSTANTIATE_DET(T)                                                                      \
    template Quaternion<T> rdet(const QMatrix<T>&, std::size_t, const DetOptions&);                     \
    template Quaternion<T> cdet(const QMatrix<T>&, std::size_t, const DetOptions&);                     \
    template Quaternion<T> right_cofactor(const QMatrix<T>&, std::size_t, std::size_t, const DetOptions&); \
    template Quaternion<T> left_cofactor(const QMatrix<T>&, std::size_t, std::size_t, const DetOptions&);  \
    template T hermitian_det(const QMatrix<T>&, const DetOptions&, double);                             \
    template T ddet(const QMatrix<T>&, const DetOptions&);                                              \
    template T gram_det(const QMatrix<T>&, const DetOptions&);                                          \
    template QMatrix<T> hermitian_inverse(const QMatrix<T>&, InverseSide, const DetOptions&);           \
    template QMatrix<T> inverse_via_ddet(const QMatrix<T>&, InverseSide, const DetOptions&);

QCRAMER_INSTANTIATE_DET(Rational)
QCRAMER_INSTANTIATE_DET(double)

}  // namespace qcramer
