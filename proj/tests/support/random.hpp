#pragma once

#include "qcramer/matrix.hpp"

#include <cstdint>
#include <random>

namespace qcramer::testing {

// Small exact entries keep the factorial sums cheap and the rationals short.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi);
    Rational coefficient();
    Quaternion<Rational> quaternion();
    Quaternion<Rational> real_scalar();

    QMatrix<Rational> matrix(std::size_t m, std::size_t n);
    QMatrix<Rational> real_matrix(std::size_t m, std::size_t n);
    /// P (m x r) times Q (r x n); rank is at most r and almost always r.
    QMatrix<Rational> rank_matrix(std::size_t m, std::size_t n, std::size_t r);
    /// Square matrix with nonzero double determinant.
    QMatrix<Rational> invertible(std::size_t n);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace qcramer::testing
