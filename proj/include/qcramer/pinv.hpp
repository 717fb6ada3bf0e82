#pragma once

#include "qcramer/index_sets.hpp"
#include "qcramer/matrix.hpp"
#include "qcramer/rowcol_det.hpp"

#include <array>
#include <cstddef>
#include <span>

namespace qcramer {

/// Sum of all k x k principal minors of a Hermitian matrix.
template <Coefficient T>
T principal_minor_sum(const QMatrix<T>& h, std::size_t k, const DetOptions& opts = {});

/// sum over beta in J_{k,n}{i} of cdet_i((H_{.i}(v))_beta^beta), with i read
/// at its position inside beta. For k = n this is the single cdet_i(H_{.i}(v)).
template <Coefficient T>
Quaternion<T> anchored_cdet_sum(const QMatrix<T>& h, std::size_t i, std::span<const Quaternion<T>> v,
                                std::size_t k, const DetOptions& opts = {});

/// Row dual: sum over alpha in I_{k,n}{j} of rdet_j((H_{j.}(v))_alpha^alpha).
template <Coefficient T>
Quaternion<T> anchored_rdet_sum(const QMatrix<T>& h, std::size_t j, std::span<const Quaternion<T>> v,
                                std::size_t k, const DetOptions& opts = {});

enum class PinvRoute {
    automatic,
    column,  // A*A with column determinants
    row,     // AA* with row determinants
};

struct PinvOptions {
    DetOptions det;
    PinvRoute route = PinvRoute::automatic;
};

/// Which route `automatic` picks for an m x n matrix: column when n <= m.
PinvRoute resolve_pinv_route(PinvRoute requested, std::size_t m, std::size_t n);

/// Moore-Penrose inverse from sums of principal minors. The rank is computed,
/// never supplied.
template <Coefficient T>
QMatrix<T> pinv_det(const QMatrix<T>& a, const PinvOptions& opts = {});

/// (A*A)^{-1}A* for full column rank, A*(AA*)^{-1} for full row rank.
/// Anything else is a contract violation.
template <Coefficient T>
QMatrix<T> pinv_full_rank(const QMatrix<T>& a, const DetOptions& opts = {});

enum class OracleMode { factorization, limit };

template <Coefficient T>
struct FullRankFactorization {
    QMatrix<T> f;  // m x r, pivot columns of A
    QMatrix<T> g;  // r x n, nonzero rows of the reduced echelon form
};

template <Coefficient T>
FullRankFactorization<T> full_rank_factorization(const QMatrix<T>& a);

/// Elimination-based pseudoinverse, independent of any determinant code.
/// Limit mode is float only.
template <Coefficient T>
QMatrix<T> pinv_oracle(const QMatrix<T>& a, OracleMode mode = OracleMode::factorization);

struct PenroseCheck {
    std::array<bool, 4> holds{};
    std::array<double, 4> residual{};  // squared Frobenius norms

    bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

/// (AX)* = AX, (XA)* = XA, AXA = A, XAX = X, in that order.
/// Exact comparisons on rationals; relative tolerance on floats.
template <Coefficient T>
PenroseCheck check_penrose(const QMatrix<T>& a, const QMatrix<T>& x, double rel_tol = kDefaultRelTol);

#define QCRAMER_EXTERN_PINV(T)                                                                             \
    extern template T principal_minor_sum(const QMatrix<T>&, std::size_t, const DetOptions&);              \
    extern template Quaternion<T> anchored_cdet_sum(const QMatrix<T>&, std::size_t,                         \
                                                    std::span<const Quaternion<T>>, std::size_t,            \
                                                    const DetOptions&);                                     \
    extern template Quaternion<T> anchored_rdet_sum(const QMatrix<T>&, std::size_t,                         \
                                                    std::span<const Quaternion<T>>, std::size_t,            \
                                                    const DetOptions&);                                     \
    extern template QMatrix<T> pinv_det(const QMatrix<T>&, const PinvOptions&);                            \
    extern template QMatrix<T> pinv_full_rank(const QMatrix<T>&, const DetOptions&);                       \
    extern template FullRankFactorization<T> full_rank_factorization(const QMatrix<T>&);                   \
    extern template QMatrix<T> pinv_oracle(const QMatrix<T>&, OracleMode);                                 \
    extern template PenroseCheck check_penrose(const QMatrix<T>&, const QMatrix<T>&, double);

QCRAMER_EXTERN_PINV(Rational)
QCRAMER_EXTERN_PINV(double)
#undef QCRAMER_EXTERN_PINV

}  // namespace qcramer
