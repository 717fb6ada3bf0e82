#pragma once

#include "qcramer/matrix.hpp"
#include "qcramer/pinv.hpp"
#include "qcramer/rowcol_det.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qcramer {

// Which side of AXB = D carries the inner determinant sums.
//   d_b: inner rdet sums over BB* give d^B, outer cdet sums over A*A.
//   d_a: inner cdet sums over A*A give d^A, outer rdet sums over BB*.
enum class SolveRoute { automatic, d_b, d_a };

struct SolveOptions {
    DetOptions det;
    SolveRoute route = SolveRoute::automatic;
};

template <Coefficient T>
struct SolveReport {
    QMatrix<T> solution;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
    // e.g. "ax=b/cdet-minors", "axb=d/full-deficient/dB", "zero"
    std::string route;
    T residual_norm_sq{};
    T solution_norm_sq{};
    std::vector<T> denominators;
    // A*B, BA* or A*DB* depending on the equation
    QMatrix<T> hat;
    std::optional<QMatrix<T>> d_b;  // n x p, column j is d^B_{.j}
    std::optional<QMatrix<T>> d_a;  // n x p, row i is d^A_{i.}
};

/// Minimum-norm least-squares solution of AX = B (A m x n, B m x s).
template <Coefficient T>
SolveReport<T> solve_ax_b(const QMatrix<T>& a, const QMatrix<T>& b, const SolveOptions& opts = {});

/// Minimum-norm least-squares solution of XA = B (A m x n, B s x n).
template <Coefficient T>
SolveReport<T> solve_xa_b(const QMatrix<T>& a, const QMatrix<T>& b, const SolveOptions& opts = {});

/// Minimum-norm least-squares solution of AXB = D (A m x n, B p x q, D m x q).
template <Coefficient T>
SolveReport<T> solve_axb_d(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& d,
                           const SolveOptions& opts = {});

/// The route `automatic` picks: the one whose outer subset family is smaller,
/// C(n-1, r1-1) against C(p-1, r2-1). Ties go to d_b.
SolveRoute resolve_solve_route(SolveRoute requested, std::size_t n, std::size_t r1, std::size_t p,
                               std::size_t r2);

/// Least-squares and minimum-norm certificates for a candidate solution.
/// The projectors come from the elimination oracle.
struct Certificate {
    bool normal_equations = false;
    bool minimum_norm = false;
    double normal_residual_norm_sq = 0.0;
    double projection_residual_norm_sq = 0.0;

    bool all() const { return normal_equations && minimum_norm; }
};

// A*(AX - B) = 0 and A+A X = X
template <Coefficient T>
Certificate certify_ax_b(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& x,
                         double rel_tol = kDefaultRelTol);
// (XA - B)A* = 0 and X AA+ = X
template <Coefficient T>
Certificate certify_xa_b(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& x,
                         double rel_tol = kDefaultRelTol);
// A*(AXB - D)B* = 0 and A+A X BB+ = X
template <Coefficient T>
Certificate certify_axb_d(const QMatrix<T>& a, const QMatrix<T>& b, const QMatrix<T>& d, const QMatrix<T>& x,
                          double rel_tol = kDefaultRelTol);

#define QCRAMER_EXTERN_SOLVERS(T)                                                                           \
    extern template SolveReport<T> solve_ax_b(const QMatrix<T>&, const QMatrix<T>&, const SolveOptions&);  \
    extern template SolveReport<T> solve_xa_b(const QMatrix<T>&, const QMatrix<T>&, const SolveOptions&);  \
    extern template SolveReport<T> solve_axb_d(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&,    \
                                               const SolveOptions&);                                        \
    extern template Certificate certify_ax_b(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&,      \
                                             double);                                                       \
    extern template Certificate certify_xa_b(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&,      \
                                             double);                                                       \
    extern template Certificate certify_axb_d(const QMatrix<T>&, const QMatrix<T>&, const QMatrix<T>&,     \
                                              const QMatrix<T>&, double);

QCRAMER_EXTERN_SOLVERS(Rational)
QCRAMER_EXTERN_SOLVERS(double)
#undef QCRAMER_EXTERN_SOLVERS

}  // namespace qcramer
