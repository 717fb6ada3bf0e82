#include "qcramer/pinv.hpp"

#include <cmath>
#include <string>

namespace qcramer {

namespace {

template <Coefficient T>
bool negligible(const T& value, const QMatrix<T>& gram) {
    if constexpr (is_exact_v<T>) {
        return value == 0;
    } else {
        double scale = 0.0;
        for (const auto& q : gram.entries()) {
            scale = std::max(scale, std::sqrt(norm_sq(q)));
        }
        return std::abs(value) <= 1e-12 * std::pow(scale, static_cast<double>(gram.rows()));
    }
}

template <typename F>
auto with_oracle_hint(F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::size_cap) {
            throw Error(ErrorKind::size_cap, std::string(e.what()) + "; use the elimination oracle instead");
        }
        throw;
    }
}

}  // namespace

PinvRoute resolve_pinv_route(PinvRoute requested, std::size_t m, std::size_t n) {
    if (requested != PinvRoute::automatic) {
        return requested;
    }
    return n <= m ? PinvRoute::column : PinvRoute::row;
}

template <Coefficient T>
T principal_minor_sum(const QMatrix<T>& h, std::size_t k, const DetOptions& opts) {
    if (k == 0) {
        return T(1);
    }
    T acc(0);
    for (const auto& beta : enumerate(k, h.rows())) {
        acc += hermitian_det(principal_submatrix(h, beta), opts);
    }
    return acc;
}

template <Coefficient T>
Quaternion<T> anchored_cdet_sum(const QMatrix<T>& h, std::size_t i, std::span<const Quaternion<T>> v,
                                std::size_t k, const DetOptions& opts) {
    Quaternion<T> acc;
    for (const auto& beta : enumerate(k, h.rows(), i)) {
        acc += cdet(replace_col_then_restrict(h, i, v, beta), *beta.position_of(i), opts);
    }
    return acc;
}

template <Coefficient T>
Quaternion<T> anchored_rdet_sum(const QMatrix<T>& h, std::size_t j, std::span<const Quaternion<T>> v,
                                std::size_t k, const DetOptions& opts) {
    Quaternion<T> acc;
    for (const auto& alpha : enumerate(k, h.rows(), j)) {
        acc += rdet(replace_row_then_restrict(h, j, v, alpha), *alpha.position_of(j), opts);
    }
    return acc;
}

template <Coefficient T>
QMatrix<T> pinv_det(const QMatrix<T>& a, const PinvOptions& opts) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t r = rank(a);
    QMatrix<T> out(n, m);
    if (r == 0) {
        return out;
    }
    const QMatrix<T> a_star = adjoint(a);
    return with_oracle_hint([&] {
        if (resolve_pinv_route(opts.route, m, n) == PinvRoute::column) {
            const QMatrix<T> gram = matmul(a_star, a);
            const T denom = principal_minor_sum(gram, r, opts.det);
            for (std::size_t j = 1; j <= m; ++j) {
                const auto v = a_star.col(j - 1);
                for (std::size_t i = 1; i <= n; ++i) {
                    out(i - 1, j - 1) = anchored_cdet_sum<T>(gram, i, v, r, opts.det) / denom;
                }
            }
        } else {
            const QMatrix<T> gram = matmul(a, a_star);
            const T denom = principal_minor_sum(gram, r, opts.det);
            for (std::size_t i = 1; i <= n; ++i) {
                const auto v = a_star.row(i - 1);
                for (std::size_t j = 1; j <= m; ++j) {
                    out(i - 1, j - 1) = anchored_rdet_sum<T>(gram, j, v, r, opts.det) / denom;
                }
            }
        }
        return out;
    });
}

template <Coefficient T>
QMatrix<T> pinv_full_rank(const QMatrix<T>& a, const DetOptions& opts) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t r = rank(a);
    const QMatrix<T> a_star = adjoint(a);
    QMatrix<T> out(n, m);
    if (r == n && n > 0) {
        const QMatrix<T> gram = matmul(a_star, a);
        const T d = hermitian_det(gram, opts);
        if (negligible(d, gram)) {
            throw SingularError("A*A is singular", format_coefficient(d));
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= m; ++j) {
                out(i - 1, j - 1) = cdet(replace_col<T>(gram, i, a_star.col(j - 1)), i, opts) / d;
            }
        }
        return out;
    }
    if (r == m && m > 0) {
        const QMatrix<T> gram = matmul(a, a_star);
        const T d = hermitian_det(gram, opts);
        if (negligible(d, gram)) {
            throw SingularError("AA* is singular", format_coefficient(d));
        }
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= m; ++j) {
                out(i - 1, j - 1) = rdet(replace_row<T>(gram, j, a_star.row(i - 1)), j, opts) / d;
            }
        }
        return out;
    }
    throw Error(ErrorKind::contract_violation, "pinv_full_rank needs full row or column rank; rank is " +
                                                   std::to_string(r) + " for a " + std::to_string(m) + "x" +
                                                   std::to_string(n) + " matrix");
}

template <Coefficient T>
FullRankFactorization<T> full_rank_factorization(const QMatrix<T>& a) {
    const RowEchelon<T> ech = row_echelon(a);
    const std::size_t r = ech.pivots.size();
    FullRankFactorization<T> out{QMatrix<T>(a.rows(), r), QMatrix<T>(r, a.cols())};
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t row = 0; row < a.rows(); ++row) {
            out.f(row, k) = a(row, ech.pivots[k]);
        }
        for (std::size_t col = 0; col < a.cols(); ++col) {
            out.g(k, col) = ech.reduced(k, col);
        }
    }
    return out;
}

namespace {

QMatrix<double> regularized(const QMatrix<double>& a, const QMatrix<double>& a_star, double alpha) {
    QMatrix<double> m = matmul(a, a_star);
    for (std::size_t d = 0; d < m.rows(); ++d) {
        m(d, d).w += alpha;
    }
    return matmul(a_star, elimination_inverse(m, 1e-15));
}

QMatrix<double> limit_pinv(const QMatrix<double>& a) {
    const QMatrix<double> a_star = adjoint(a);
    double alpha = 1e-2;
    QMatrix<double> coarse = regularized(a, a_star, alpha);
    QMatrix<double> previous;
    QMatrix<double> best;
    double best_change = -1.0;
    bool have_previous = false;
    while (alpha / 100 >= 1e-12) {
        const QMatrix<double> fine = regularized(a, a_star, alpha / 100);
        // X(alpha) = A+ + O(alpha): one Richardson step cancels the linear term.
        const QMatrix<double> extrapolated = scale(scale(fine, 100.0) - coarse, 1.0 / 99.0);
        if (have_previous) {
            const double change = frobenius_norm_sq(extrapolated - previous);
            const double size = frobenius_norm_sq(extrapolated);
            if (change <= 1e-16 * size) {
                return extrapolated;
            }
            // Roundoff in (AA* + alpha I)^{-1} grows like 1/alpha; once the
            // iterates start drifting apart, the previous one is the best.
            if (best_change >= 0.0 && change > best_change) {
                return best;
            }
            best_change = change;
            best = extrapolated;
        }
        previous = extrapolated;
        have_previous = true;
        coarse = fine;
        alpha /= 100;
    }
    return best_change >= 0.0 ? best : previous;
}

}  // namespace

template <Coefficient T>
QMatrix<T> pinv_oracle(const QMatrix<T>& a, OracleMode mode) {
    if (mode == OracleMode::limit) {
        if constexpr (is_exact_v<T>) {
            throw Error(ErrorKind::unsupported_mode, "limit oracle is available on the float64 backend only");
        } else {
            return limit_pinv(a);
        }
    }
    const auto [f, g] = full_rank_factorization(a);
    if (f.cols() == 0) {
        return QMatrix<T>(a.cols(), a.rows());
    }
    const QMatrix<T> g_star = adjoint(g);
    const QMatrix<T> f_star = adjoint(f);
    const QMatrix<T> gg_inv = elimination_inverse(matmul(g, g_star));
    const QMatrix<T> ff_inv = elimination_inverse(matmul(f_star, f));
    return matmul(matmul(g_star, gg_inv), matmul(ff_inv, f_star));
}

template <Coefficient T>
PenroseCheck check_penrose(const QMatrix<T>& a, const QMatrix<T>& x, double rel_tol) {
    if (x.rows() != a.cols() || x.cols() != a.rows()) {
        throw Error(ErrorKind::shape_mismatch, "candidate inverse must be " + std::to_string(a.cols()) + "x" +
                                                   std::to_string(a.rows()));
    }
    const QMatrix<T> ax = matmul(a, x);
    const QMatrix<T> xa = matmul(x, a);
    const std::array<std::pair<QMatrix<T>, QMatrix<T>>, 4> sides{{
        {adjoint(ax), ax},
        {adjoint(xa), xa},
        {matmul(ax, a), a},
        {matmul(xa, x), x},
    }};
    PenroseCheck out;
    for (std::size_t c = 0; c < 4; ++c) {
        const auto& [lhs, rhs] = sides[c];
        out.holds[c] = approx_equal(lhs, rhs, rel_tol);
        out.residual[c] = to_double(frobenius_norm_sq(lhs - rhs));
    }
    return out;
}

#define QCRAMER_INSTANTIATE_PINV(T)                                                                         \
    template T principal_minor_sum(const QMatrix<T>&, std::size_t, const DetOptions&);                      \
    template Quaternion<T> anchored_cdet_sum(const QMatrix<T>&, std::size_t, std::span<const Quaternion<T>>, \
                                             std::size_t, const DetOptions&);                               \
    template Quaternion<T> anchored_rdet_sum(const QMatrix<T>&, std::size_t, std::span<const Quaternion<T>>, \
                                             std::size_t, const DetOptions&);                               \
    template QMatrix<T> pinv_det(const QMatrix<T>&, const PinvOptions&);                                    \
    template QMatrix<T> pinv_full_rank(const QMatrix<T>&, const DetOptions&);                               \
    template FullRankFactorization<T> full_rank_factorization(const QMatrix<T>&);                           \
    template QMatrix<T> pinv_oracle(const QMatrix<T>&, OracleMode);                                         \
    template PenroseCheck check_penrose(const QMatrix<T>&, const QMatrix<T>&, double);

QCRAMER_INSTANTIATE_PINV(Rational)
QCRAMER_INSTANTIATE_PINV(double)

}  // namespace qcramer
