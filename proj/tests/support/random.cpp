#include "random.hpp"

namespace qcramer::testing {

int Rng::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

Rational Rng::coefficient() {
    static constexpr int dens[] = {1, 1, 1, 2, 3};
    Rational v(uniform(-3, 3), dens[uniform(0, 4)]);
    v.canonicalize();
    return v;
}

Quaternion<Rational> Rng::quaternion() { return {coefficient(), coefficient(), coefficient(), coefficient()}; }

Quaternion<Rational> Rng::real_scalar() { return Quaternion<Rational>(coefficient()); }

QMatrix<Rational> Rng::matrix(std::size_t m, std::size_t n) {
    QMatrix<Rational> a(m, n);
    for (auto& q : a.entries()) {
        q = quaternion();
    }
    return a;
}

QMatrix<Rational> Rng::real_matrix(std::size_t m, std::size_t n) {
    QMatrix<Rational> a(m, n);
    for (auto& q : a.entries()) {
        q = real_scalar();
    }
    return a;
}

QMatrix<Rational> Rng::rank_matrix(std::size_t m, std::size_t n, std::size_t r) {
    if (r == 0) {
        return QMatrix<Rational>(m, n);
    }
    return matmul(matrix(m, r), matrix(r, n));
}

QMatrix<Rational> Rng::invertible(std::size_t n) {
    while (true) {
        QMatrix<Rational> a = matrix(n, n);
        if (rank(a) == n) {
            return a;
        }
    }
}

}  // namespace qcramer::testing
