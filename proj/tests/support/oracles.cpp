#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qcramer::testing {

Rational leibniz_det(const QMatrix<Rational>& a) {
    const std::size_t n = a.rows();
    for (const auto& q : a.entries()) {
        if (!q.is_real()) {
            throw std::invalid_argument("leibniz_det needs real entries");
        }
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = x + 1; y < n; ++y) {
                inversions += perm[x] > perm[y];
            }
        }
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t r = 0; r < n; ++r) {
            term *= a(r, perm[r]).w;
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

QMatrix<Rational> naive_product(const QMatrix<Rational>& a, const QMatrix<Rational>& b) {
    QMatrix<Rational> out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Quaternion<Rational> acc;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const auto& p = a(i, k);
                const auto& q = b(k, j);
                // Hamilton product written out componentwise
                acc += Quaternion<Rational>(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                                            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                                            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                                            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

}  // namespace qcramer::testing
