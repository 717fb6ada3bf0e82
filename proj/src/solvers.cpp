#include "qcramer/solvers.hpp"

#include "qcramer/index_sets.hpp"

#include <string>

namespace qcramer {

namespace {

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

template <Coefficient T>
void finish(SolveReport<T>& rep, const QMatrix<T>& residual) {
    rep.residual_norm_sq = frobenius_norm_sq(residual);
    rep.solution_norm_sq = frobenius_norm_sq(rep.solution);
}

template <Coefficient T>
double dist_sq(const QMatrix<T>& a, const QMatrix<T>& b) {
    return to_double(frobenius_norm_sq(a - b));
}

}  // namespace

SolveRoute resolve_solve_route(SolveRoute requested, std::size_t n, std::size_t r1, std::size_t p,
                               std::size_t r2) {
    if (requested != SolveRoute::automatic) {
        return requested;
    }
    if (r1 == 0 || r2 == 0) {
        return SolveRoute::d_b;
    }
    return binomial(n - 1, r1 - 1) <= binomial(p - 1, r2 - 1) ? SolveRoute::d_b : SolveRoute::d_a;
}

template <Coefficient T>
SolveReport<T> solve_ax_b(const QMatrix<T>& a, const QMatrix<T>& b, const SolveOptions& opts) {
    if (a.rows() != b.rows()) {
        throw Error(ErrorKind::shape_mismatch, "AX=B needs matching row counts, got A " + dims(a.rows(), a.cols()) +
                                                   " and B " + dims(b.rows(), b.cols()));
    }
    const std::size_t n = a.cols();
    const std::size_t s = b.cols();
    SolveReport<T> rep;
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);
    rep.solution = QMatrix<T>(n, s);
    const QMatrix<T> a_star = adjoint(a);
    rep.hat = matmul(a_star, b);
    if (rep.rank_a == 0) {
        rep.route = "zero";
    } else {
        const std::size_t r = rep.rank_a;
        const QMatrix<T> gram = matmul(a_star, a);
        const T denom = principal_minor_sum(gram, r, opts.det);
        rep.denominators = {denom};
        rep.route = r == n ? "ax=b/cdet-full" : "ax=b/cdet-minors";
        for (std::size_t j = 1; j <= s; ++j) {
            const auto col = rep.hat.col(j - 1);
            for (std::size_t i = 1; i <= n; ++i) {
                rep.solution(i - 1, j - 1) = anchored_cdet_sum<T>(gram, i, col, r, opts.det) / denom;
            }
        }
    }
    finish(rep, matmul(a, rep.solution) - b);
    return rep;
}

template <Coefficient T>
SolveReport<T> solve_xa_b(const QMatrix<T>& a, const QMatrix<T>& b, const SolveOptions& opts) {
    if (a.cols() != b.cols()) {
        throw Error(ErrorKind::shape_mismatch, "XA=B needs matching column counts, got A " +
                                                   dims(a.rows(), a.cols()) + " and B " + dims(b.rows(), b.cols()));
    }
    const std::size_t m = a.rows();
    const std::size_t s = b.rows();
    SolveReport<T> rep;
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);
    rep.solution = QMatrix<T>(s, m);
    const QMatrix<T> a_star = adjoint(a);
    rep.hat = matmul(b, a_star);
    if (rep.rank_a == 0) {
        rep.route = "zero";
    } else {
        const std::size_t r = rep.rank_a;
        const QMatrix<T> gram = matmul(a, a_star);
        const T denom = principal_minor_sum(gram, r, opts.det);
        rep.denominators = {denom};
        rep.route = r == m ? "xa=b/rdet-full" : "xa=b/rdet-minors";
        for (std::size_t i = 1; i <= s; ++i) {
            const auto row = rep.hat.row(i - 1);
            for (std::size_t j = 1; j <= m; ++j) {
                rep.solution(i - 1, j - 1) = anchored_rdet_sum<T>(gram, j, row, r, opts.det) / denom;
            }
        }
    }
    finish(rep, matmul(rep.solution, a) - b);
    return rep;
}

template <Coefficient T>
SolveReport<T> solve_axb_d(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& d,
                           const SolveOptions& opts) {
    if (a.rows() != d.rows() || b.cols() != d.cols()) {
        throw Error(ErrorKind::shape_mismatch, "AXB=D needs A.rows = D.rows and B.cols = D.cols, got A " +
                                                   dims(a.rows(), a.cols()) + ", B " + dims(b.rows(), b.cols()) +
                                                   ", D " + dims(d.rows(), d.cols()));
    }
    const std::size_t n = a.cols();
    const std::size_t p = b.rows();
    SolveReport<T> rep;
    rep.rank_a = rank(a);
    rep.rank_b = rank(b);
    rep.solution = QMatrix<T>(n, p);
    const QMatrix<T> a_star = adjoint(a);
    const QMatrix<T> b_star = adjoint(b);
    rep.hat = matmul(matmul(a_star, d), b_star);

    const std::size_t r1 = rep.rank_a;
    const std::size_t r2 = rep.rank_b;
    if (r1 == 0 || r2 == 0) {
        rep.route = "zero";
        finish(rep, matmul(matmul(a, rep.solution), b) - d);
        return rep;
    }

    const QMatrix<T> gram_a = matmul(a_star, a);
    const QMatrix<T> gram_b = matmul(b, b_star);
    const T den_a = principal_minor_sum(gram_a, r1, opts.det);
    const T den_b = principal_minor_sum(gram_b, r2, opts.det);
    const T denom = den_a * den_b;
    rep.denominators = {den_a, den_b};

    std::string label = "axb=d/";
    if (r1 == n && r2 == p) {
        label += "full-full";
    } else if (r1 == n) {
        label += "full-deficient";
    } else if (r2 == p) {
        label += "deficient-full";
    } else {
        label += "general";
    }

    if (resolve_solve_route(opts.route, n, r1, p, r2) == SolveRoute::d_b) {
        QMatrix<T> db(n, p);
        for (std::size_t k = 1; k <= n; ++k) {
            const auto row = rep.hat.row(k - 1);
            for (std::size_t j = 1; j <= p; ++j) {
                db(k - 1, j - 1) = anchored_rdet_sum<T>(gram_b, j, row, r2, opts.det);
            }
        }
        for (std::size_t j = 1; j <= p; ++j) {
            const auto col = db.col(j - 1);
            for (std::size_t i = 1; i <= n; ++i) {
                rep.solution(i - 1, j - 1) = anchored_cdet_sum<T>(gram_a, i, col, r1, opts.det) / denom;
            }
        }
        rep.d_b = std::move(db);
        rep.route = label + "/dB";
    } else {
        QMatrix<T> da(n, p);
        for (std::size_t l = 1; l <= p; ++l) {
            const auto col = rep.hat.col(l - 1);
            for (std::size_t i = 1; i <= n; ++i) {
                da(i - 1, l - 1) = anchored_cdet_sum<T>(gram_a, i, col, r1, opts.det);
            }
        }
        for (std::size_t i = 1; i <= n; ++i) {
            const auto row = da.row(i - 1);
            for (std::size_t j = 1; j <= p; ++j) {
                rep.solution(i - 1, j - 1) = anchored_rdet_sum<T>(gram_b, j, row, r2, opts.det) / denom;
            }
        }
        rep.d_a = std::move(da);
        rep.route = label + "/dA";
    }
    finish(rep, matmul(matmul(a, rep.solution), b) - d);
    return rep;
}

template <Coefficient T>
Certificate certify_ax_b(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& x, double rel_tol) {
    const QMatrix<T> a_star = adjoint(a);
    const QMatrix<T> lhs = matmul(a_star, matmul(a, x));
    const QMatrix<T> rhs = matmul(a_star, b);
    const QMatrix<T> projected = matmul(matmul(pinv_oracle(a), a), x);
    return {approx_equal(lhs, rhs, rel_tol), approx_equal(projected, x, rel_tol), dist_sq(lhs, rhs),
            dist_sq(projected, x)};
}

template <Coefficient T>
Certificate certify_xa_b(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& x, double rel_tol) {
    const QMatrix<T> a_star = adjoint(a);
    const QMatrix<T> lhs = matmul(matmul(x, a), a_star);
    const QMatrix<T> rhs = matmul(b, a_star);
    const QMatrix<T> projected = matmul(x, matmul(a, pinv_oracle(a)));
    return {approx_equal(lhs, rhs, rel_tol), approx_equal(projected, x, rel_tol), dist_sq(lhs, rhs),
            dist_sq(projected, x)};
}

template <Coefficient T>
Certificate certify_axb_d(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& d, const QMatrix<T>& x,
                          double rel_tol) {
    const QMatrix<T> a_star = adjoint(a);
    const QMatrix<T> b_star = adjoint(b);
    const QMatrix<T> lhs = matmul(matmul(a_star, matmul(matmul(a, x), b)), b_star);
    const QMatrix<T> rhs = matmul(matmul(a_star, d), b_star);
    const QMatrix<T> projected = matmul(matmul(matmul(pinv_oracle(a), a), x), matmul(b, pinv_oracle(b)));
    return {approx_equal(lhs, rhs, rel_tol), approx_equal(projected, x, rel_tol), dist_sq(lhs, rhs),
            dist_sq(projected, x)};
}

#define QCRAMER_INSTANTIATE_SOLVERS(T)                                                                           \
    template SolveReport<T> solve_ax_b(const QMatrix<T>&, const QMatrix<T>&, const SolveOptions&);                \
    template SolveReport<T> solve_xa_b(const QMatrix<T>&, const QMatrix<T>&, const SolveOptions&);                \
    template SolveReport<T> solve_axb_d(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&,                  \
                                        const SolveOptions&);                                                     \
    template Certificate certify_ax_b(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&, double);           \
    template Certificate certify_xa_b(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&, double);           \
    template Certificate certify_axb_d(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&, \
                                       double);

QCRAMER_INSTANTIATE_SOLVERS(Rational)
QCRAMER_INSTANTIATE_SOLVERS(double)

}  // namespace qcramer
