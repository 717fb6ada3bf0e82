#pragma once

#include "qcramer/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qcramer {

inline constexpr std::size_t kDefaultMaxDetOrder = 7;

/// Determinants cost O(n! * n); orders above max_n are refused rather than
/// truncated.
struct DetOptions {
    std::size_t max_n = kDefaultMaxDetOrder;
};

/// 1-based images: perm[k-1] = sigma(k).
using Permutation = std::vector<std::size_t>;

enum class CycleOrder { left, right };

/// A permutation written in the cycle notation that drives one monomial of a
/// row or column determinant.
///
/// Left-ordered (row determinant at index i): the first cycle opens with i,
/// every other cycle opens with its smallest element, and those cycles follow
/// in increasing order of that element. Each cycle (c0 c1 ... cl) reads
/// c0 -> c1 -> ... -> cl -> c0.
///
/// Right-ordered (column determinant at index j): the mirror image. The last
/// cycle closes with j, every other cycle closes with its smallest element,
/// and reading from the right those elements increase. A cycle written
/// (cm ... c1 c0) reads cm -> ... -> c1 -> c0 -> cm.
struct CycleDecomposition {
    CycleOrder order = CycleOrder::left;
    std::vector<std::vector<std::size_t>> cycles;  // as written, left to right

    std::size_t order_n() const;
    /// (-1)^(n - number of cycles)
    int sign() const;
    /// Matrix positions (row, col), 1-based, of the monomial's factors in
    /// multiplication order.
    std::vector<std::pair<std::size_t, std::size_t>> factors() const;
};

CycleDecomposition left_ordered_cycles(const Permutation& sigma, std::size_t i);
CycleDecomposition right_ordered_cycles(const Permutation& tau, std::size_t j);

/// i-th row determinant (1-based i). Summation runs over permutations in
/// lexicographic order.
template <Coefficient T>
Quaternion<T> rdet(const QMatrix<T>& a, std::size_t i, const DetOptions& opts = {});

/// j-th column determinant (1-based j).
template <Coefficient T>
Quaternion<T> cdet(const QMatrix<T>& a, std::size_t j, const DetOptions& opts = {});

/// R_ij with rdet_i(A) = sum_j a_ij * R_ij.
template <Coefficient T>
Quaternion<T> right_cofactor(const QMatrix<T>& a, std::size_t i, std::size_t j, const DetOptions& opts = {});

/// L_ij with cdet_j(A) = sum_i L_ij * a_ij.
template <Coefficient T>
Quaternion<T> left_cofactor(const QMatrix<T>& a, std::size_t i, std::size_t j, const DetOptions& opts = {});

/// Common real value of every rdet_i and cdet_j of a Hermitian matrix.
/// The empty matrix has determinant 1.
template <Coefficient T>
T hermitian_det(const QMatrix<T>& h, const DetOptions& opts = {}, double eps = 1e-9);

/// det(A* A) of a square matrix.
template <Coefficient T>
T ddet(const QMatrix<T>& a, const DetOptions& opts = {});

/// det(A* A) for any shape; equals ddet for square A.
template <Coefficient T>
T gram_det(const QMatrix<T>& a, const DetOptions& opts = {});

enum class InverseSide { right, left };

/// Inverse of a Hermitian matrix from its right (R_ij) or left (L_ij)
/// cofactors divided by det. Throws SingularError when det vanishes.
template <Coefficient T>
QMatrix<T> hermitian_inverse(const QMatrix<T>& h, InverseSide side = InverseSide::right,
                             const DetOptions& opts = {});

/// Inverse of an arbitrary square matrix through double cofactors:
/// left side uses cdet_j((A*A)_{.j}(a*_{.i})), right side uses
/// rdet_i((AA*)_{i.}(a*_{j.})), both over ddet(A).
template <Coefficient T>
QMatrix<T> inverse_via_ddet(const QMatrix<T>& a, InverseSide side = InverseSide::left,
                            const DetOptions& opts = {});

#define QCRAMER_EXTERN_DET(T)                                                                              \
    extern template Quaternion<T> rdet(const QMatrix<T>&, std::size_t, const DetOptions&);                 \
    extern template Quaternion<T> cdet(const QMatrix<T>&, std::size_t, const DetOptions&);                 \
    extern template Quaternion<T> right_cofactor(const QMatrix<T>&, std::size_t, std::size_t,              \
                                                 const DetOptions&);                                       \
    extern template Quaternion<T> left_cofactor(const QMatrix<T>&, std::size_t, std::size_t,               \
                                                const DetOptions&);                                        \
    extern template T hermitian_det(const QMatrix<T>&, const DetOptions&, double);                         \
    extern template T ddet(const QMatrix<T>&, const DetOptions&);                                          \
    extern template T gram_det(const QMatrix<T>&, const DetOptions&);                                      \
    extern template QMatrix<T> hermitian_inverse(const QMatrix<T>&, InverseSide, const DetOptions&);       \
    extern template QMatrix<T> inverse_via_ddet(const QMatrix<T>&, InverseSide, const DetOptions&);

QCRAMER_EXTERN_DET(Rational)
QCRAMER_EXTERN_DET(double)
#undef QCRAMER_EXTERN_DET

}  // namespace qcramer
