#include "qcramer/rowcol_det.hpp"

#include "oracles.hpp"
#include "random.hpp"

#include <doctest.h>

using namespace qcramer;
using M = QMatrix<Rational>;
using Q = Quaternion<Rational>;
using Cycles = std::vector<std::vector<std::size_t>>;
using Factors = std::vector<std::pair<std::size_t, std::size_t>>;

namespace {

M qm(const char* text) { return parse_qm<Rational>(text); }
Q q(const char* s) { return parse_quaternion<Rational>(s); }

const char* kGram2 = "4 2i+2j\n-2i-2j 4";

}  // namespace

TEST_SUITE("rowcol_det") {

TEST_CASE("left-ordered cycles in S3") {
    // sigma = (1 2)(3)
    const Permutation swap12{2, 1, 3};
    CHECK(left_ordered_cycles(swap12, 1).cycles == Cycles{{1, 2}, {3}});
    CHECK(left_ordered_cycles(swap12, 2).cycles == Cycles{{2, 1}, {3}});
    CHECK(left_ordered_cycles(swap12, 3).cycles == Cycles{{3}, {1, 2}});
    // sigma: 1->3->2->1
    const Permutation rot{3, 1, 2};
    const auto cd = left_ordered_cycles(rot, 2);
    CHECK(cd.cycles == Cycles{{2, 1, 3}});
    CHECK(cd.factors() == Factors{{2, 1}, {1, 3}, {3, 2}});
    CHECK(cd.sign() == 1);
    CHECK(left_ordered_cycles(Permutation{1, 2, 3}, 2).cycles == Cycles{{2}, {1}, {3}});
    CHECK(left_ordered_cycles(swap12, 1).sign() == -1);
}

TEST_CASE("right-ordered cycles in S3") {
    // tau = (1 2)(3), j closes the rightmost cycle
    const Permutation swap12{2, 1, 3};
    CHECK(right_ordered_cycles(swap12, 1).cycles == Cycles{{3}, {2, 1}});
    CHECK(right_ordered_cycles(swap12, 3).cycles == Cycles{{2, 1}, {3}});
    CHECK(right_ordered_cycles(Permutation{1, 2, 3}, 2).cycles == Cycles{{3}, {1}, {2}});
    // tau: 1->2->3->1, written (2 3 1)
    const auto cd = right_ordered_cycles(Permutation{2, 3, 1}, 1);
    CHECK(cd.cycles == Cycles{{2, 3, 1}});
    CHECK(cd.factors() == Factors{{1, 2}, {2, 3}, {3, 1}});
    // two non-distinguished cycles: larger minimum goes further left
    const auto four = right_ordered_cycles(Permutation{1, 2, 4, 3}, 1);
    CHECK(four.cycles == Cycles{{4, 3}, {2}, {1}});
    CHECK(four.factors() == Factors{{3, 4}, {4, 3}, {2, 2}, {1, 1}});
}

TEST_CASE("invalid permutations") {
    CHECK_THROWS_AS(left_ordered_cycles(Permutation{1, 1, 3}, 1), Error);
    CHECK_THROWS_AS(right_ordered_cycles(Permutation{1, 2}, 3), Error);
}

TEST_CASE("2x2 determinants keep factor order") {
    const Q a = q("1+i"), b = q("j"), c = q("2-k"), d = q("i+j");
    const M m(2, 2, {a, b, c, d});
    CHECK(rdet(m, 1) == a * d - b * c);
    CHECK(rdet(m, 2) == d * a - c * b);
    CHECK(cdet(m, 1) == d * a - b * c);
    CHECK(cdet(m, 2) == a * d - c * b);
    CHECK(rdet(m, 1) != cdet(m, 1));
}

TEST_CASE("1x1 and worked-example values") {
    CHECK(rdet(qm("2-j"), 1) == q("2-j"));
    CHECK(cdet(qm("2-j"), 1) == q("2-j"));
    CHECK(rdet(qm(kGram2), 1) == Q(Rational(8)));
    CHECK(cdet(qm(kGram2), 1) == Q(Rational(8)));
    CHECK(hermitian_det(qm(kGram2)) == 8);
    CHECK(hermitian_det(M::identity(3)) == 1);
    const Q s = cdet(qm("2+2i+2j 2i+2j\n1-i-j 4"), 1) + cdet(qm("2+2i+2j 2j+2k\n1-2j 4"), 1);
    CHECK(s == q("8+10i+12j-2k"));
}

TEST_CASE("size cap") {
    const M big = M::identity(8);
    try {
        rdet(big, 1);
        FAIL("cap ignored");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::size_cap);
        CHECK(std::string(e.what()).find("factorial") != std::string::npos);
    }
    CHECK(rdet(big, 1, DetOptions{8}) == Q::one());
    CHECK_THROWS_AS(cdet(M(2, 3), 1), Error);
    CHECK_THROWS_AS(rdet(M::identity(3), 4), Error);
}

TEST_CASE("cofactor expansions") {
    testing::Rng rng(21);
    for (int t = 0; t < 5; ++t) {
        const std::size_t n = rng.uniform(1, 4);
        const M a = rng.matrix(n, n);
        for (std::size_t i = 1; i <= n; ++i) {
            Q row_sum, col_sum;
            for (std::size_t j = 1; j <= n; ++j) {
                row_sum += a(i - 1, j - 1) * right_cofactor(a, i, j);
                col_sum += left_cofactor(a, j, i) * a(j - 1, i - 1);
            }
            CHECK(row_sum == rdet(a, i));
            CHECK(col_sum == cdet(a, i));
        }
    }
    CHECK(right_cofactor(M::identity(2), 1, 1) == Q::one());
    CHECK(left_cofactor(qm("5i"), 1, 1) == Q::one());
}

TEST_CASE("Hermitian matrices have one real determinant") {
    testing::Rng rng(3);
    for (int t = 0; t < 5; ++t) {
        const std::size_t n = rng.uniform(1, 4);
        const M a = rng.matrix(rng.uniform(1, 4), n);
        const M h = matmul(adjoint(a), a);
        const Q ref = rdet(h, 1);
        CHECK(ref.is_real());
        for (std::size_t k = 1; k <= n; ++k) {
            CHECK(rdet(h, k) == ref);
            CHECK(cdet(h, k) == ref);
        }
        // det of the complex embedding is the square
        const auto emb = determinant(complex_embed(h));
        CHECK(emb.re == ref.w * ref.w);
        CHECK(emb.im == 0);
    }
    CHECK_THROWS_AS(hermitian_det(qm("1 i\ni 1")), Error);
}

TEST_CASE("real matrices reduce to Leibniz") {
    testing::Rng rng(4);
    const M a = rng.real_matrix(4, 4);
    const Rational ref = testing::leibniz_det(a);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(rdet(a, k) == Q(ref));
        CHECK(cdet(a, k) == Q(ref));
    }
}

TEST_CASE("double determinant") {
    CHECK(ddet(M::identity(3)) == 1);
    CHECK(ddet(qm("i 0\n0 j")) == 1);
    const M a = qm("1 i j\n-k i 1\nk j -i\nj -1 i");
    CHECK(gram_det(a) == 0);
    CHECK_THROWS_AS(ddet(a), Error);
    testing::Rng rng(9);
    const M s = rng.matrix(3, 3);
    CHECK(ddet(s) == hermitian_det(matmul(s, adjoint(s))));
    const auto emb = determinant(complex_embed(s));
    CHECK(emb.re * emb.re + emb.im * emb.im == ddet(s) * ddet(s));
}

TEST_CASE("Hermitian inverse") {
    CHECK(hermitian_inverse(M::identity(3)) == M::identity(3));
    const M h = qm(kGram2);
    const M expected = scale(qm("4 -2i-2j\n2i+2j 4"), Rational(1, 8));
    CHECK(hermitian_inverse(h, InverseSide::right) == expected);
    CHECK(hermitian_inverse(h, InverseSide::left) == expected);
    CHECK(matmul(h, expected) == M::identity(2));
    try {
        hermitian_inverse(qm("3 -3k\n3k 3"));
        FAIL("singular matrix inverted");
    } catch (const SingularError& e) {
        CHECK(e.det_value() == "0");
    }
    testing::Rng rng(12);
    const M a = rng.invertible(3);
    const M g = matmul(adjoint(a), a);
    CHECK(hermitian_inverse(g, InverseSide::right) == elimination_inverse(g));
    CHECK(hermitian_inverse(g, InverseSide::left) == elimination_inverse(g));
}

TEST_CASE("inverse through the double determinant") {
    CHECK(inverse_via_ddet(qm("i 0\n0 j")) == qm("-i 0\n0 -j"));
    CHECK(inverse_via_ddet(M::identity(4)) == M::identity(4));
    testing::Rng rng(13);
    for (int t = 0; t < 3; ++t) {
        const M a = rng.invertible(3);
        const M left = inverse_via_ddet(a, InverseSide::left);
        const M right = inverse_via_ddet(a, InverseSide::right);
        CHECK(matmul(left, a) == M::identity(3));
        CHECK(matmul(a, left) == M::identity(3));
        CHECK(left == right);
        CHECK(left == elimination_inverse(a));
    }
    CHECK_THROWS_AS(inverse_via_ddet(qm("1 i\ni -1")), SingularError);
}

TEST_CASE("float backend agrees with exact") {
    testing::Rng rng(14);
    const M a = rng.matrix(3, 3);
    const auto fa = to_float(a);
    for (std::size_t k = 1; k <= 3; ++k) {
        CHECK(approx_equal(rdet(fa, k), to_float(rdet(a, k)), 1e-12));
        CHECK(approx_equal(cdet(fa, k), to_float(cdet(a, k)), 1e-12));
    }
    CHECK(ddet(fa) == doctest::Approx(ddet(a).get_d()));
}

}
