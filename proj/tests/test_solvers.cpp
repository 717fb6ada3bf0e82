#include "qcramer/solvers.hpp"

#include "random.hpp"

#include <doctest.h>

using namespace qcramer;
using M = QMatrix<Rational>;
using Q = Quaternion<Rational>;

namespace {

M qm(const char* text) { return parse_qm<Rational>(text); }

const char* kA = "1 i j\n-k i 1\nk j -i\nj -1 i\n";
const char* kB = "i 1 j\nj k -i\n";
const char* kD = "1 i j\nk 0 i\n1 j 0\n0 k i\n";

// A+DB+ for the matrices above, confirmed by the elimination oracle.
const char* kXls72 = "4+5i+2j-k -1-2i+5j-4k\n1+i-2j-2k -2+2i+j-k\n2-3i-3j 3i-3j-2k";
// The printed reference, derived from a D~ whose (1,1) entry reads 2+2i+2j.
const char* kPrinted72 = "4+5i+6j-k -1-2i+5j-4k\ni-2j-k -2+2i+j-k\n1-4i-3j 3i-3j-2k";

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("worked example, both routes") {
    const M a = qm(kA), b = qm(kB), d = qm(kD);
    const auto db = solve_axb_d(a, b, d, {{}, SolveRoute::d_b});
    const auto da = solve_axb_d(a, b, d, {{}, SolveRoute::d_a});
    const M expected = scale(qm(kXls72), Rational(1, 72));
    CHECK(db.solution == expected);
    CHECK(da.solution == expected);
    CHECK(db.solution == matmul(matmul(pinv_oracle(a), d), pinv_oracle(b)));
    CHECK(db.route == "axb=d/general/dB");
    CHECK(da.route == "axb=d/general/dA");
    CHECK(db.rank_a == 2);
    CHECK(db.rank_b == 1);
    CHECK(db.denominators == std::vector<Rational>{24, 6});
    CHECK(db.hat == qm("2+2i+j -i+2j-2k\n1-i-j i-j-k\n1-2j 2i-k"));
    REQUIRE(db.d_b.has_value());
    CHECK(db.d_b->col(1) == qm("-i+2j-2k\ni-j-k\n2i-k").col(0));
    CHECK(db.solution(1, 1) == parse_quaternion<Rational>("-2+2i+j-k") / Rational(72));
    CHECK(db.residual_norm_sq > 0);
    CHECK(certify_axb_d(a, b, d, db.solution).all());
}

TEST_CASE("printed reference follows from the printed D~") {
    const M a = qm(kA), b = qm(kB);
    const M ga = matmul(adjoint(a), a), gb = matmul(b, adjoint(b));
    M dt = qm("2+2i+2j -i+2j-2k\n1-i-j i-j-k\n1-2j 2i-k");
    M x(3, 2);
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 2; ++j) {
            M dbm(3, 2);
            for (std::size_t k = 1; k <= 3; ++k) {
                for (std::size_t l = 1; l <= 2; ++l) {
                    dbm(k - 1, l - 1) = anchored_rdet_sum<Rational>(gb, l, dt.row(k - 1), 1);
                }
            }
            x(i - 1, j - 1) = anchored_cdet_sum<Rational>(ga, i, dbm.col(j - 1), 2) / Rational(144);
        }
    }
    const M printed = scale(qm(kPrinted72), Rational(1, 72));
    CHECK(x == printed);
    CHECK_FALSE(certify_axb_d(a, b, qm(kD), printed).normal_equations);
}

TEST_CASE("trivial systems") {
    testing::Rng rng(41);
    const M b = rng.matrix(3, 2);
    CHECK(solve_ax_b(M::identity(3), b).solution == b);
    CHECK(solve_xa_b(M::identity(2), b).solution == b);
    const M d = rng.matrix(3, 2);
    CHECK(solve_axb_d(M::identity(3), M::identity(2), d).solution == d);
    CHECK(solve_ax_b(qm("i 0\n0 j"), M::identity(2)).solution == qm("-i 0\n0 -j"));
    const auto zero = solve_ax_b(M(3, 2), b);
    CHECK(zero.route == "zero");
    CHECK(zero.solution == M(2, 2));
    CHECK(zero.residual_norm_sq == frobenius_norm_sq(b));
}

TEST_CASE("shape errors") {
    CHECK_THROWS_AS(solve_ax_b(M(3, 2), M(2, 2)), Error);
    CHECK_THROWS_AS(solve_xa_b(M(3, 2), M(2, 3)), Error);
    CHECK_THROWS_AS(solve_axb_d(M(3, 2), M(2, 2), M(3, 3)), Error);
}

TEST_CASE("consistent rank-1 system") {
    testing::Rng rng(42);
    const M a = rng.rank_matrix(3, 2, 1);
    const M x0 = rng.matrix(2, 2);
    const M b = matmul(a, x0);
    const auto rep = solve_ax_b(a, b);
    CHECK(matmul(a, rep.solution) == b);
    CHECK(rep.residual_norm_sq == 0);
    CHECK(rep.solution_norm_sq <= frobenius_norm_sq(x0));
    CHECK(rep.solution == matmul(pinv_oracle(a), b));
}

TEST_CASE("one-sided solvers on random instances") {
    testing::Rng rng(43);
    for (int t = 0; t < 12; ++t) {
        const std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 4), s = rng.uniform(1, 3);
        const M a = rng.rank_matrix(m, n, rng.uniform(1, 3));
        const M b = rng.matrix(m, s);
        const auto ax = solve_ax_b(a, b);
        CHECK(ax.solution == matmul(pinv_oracle(a), b));
        CHECK(ax.solution == matmul(pinv_det(a), b));
        CHECK(certify_ax_b(a, b, ax.solution).all());
        CHECK(ax.route == (ax.rank_a == n ? "ax=b/cdet-full" : "ax=b/cdet-minors"));

        const M c = rng.matrix(s, n);
        const auto xa = solve_xa_b(a, c);
        CHECK(xa.solution == matmul(c, pinv_oracle(a)));
        CHECK(certify_xa_b(a, c, xa.solution).all());
        // duality with the left-hand solver
        CHECK(xa.solution == adjoint(solve_ax_b(adjoint(a), adjoint(c)).solution));
    }
    const M a = rng.rank_matrix(3, 3, 2);
    CHECK(solve_xa_b(a, a).solution == matmul(a, pinv_oracle(a)));
}

TEST_CASE("two-sided solver in every rank case") {
    testing::Rng rng(44);
    struct Shape {
        std::size_t m, n, r1, p, q, r2;
        const char* label;
    };
    const Shape shapes[] = {
        {3, 2, 2, 2, 3, 2, "full-full"},
        {3, 2, 2, 3, 3, 2, "full-deficient"},
        {4, 3, 2, 2, 2, 2, "deficient-full"},
        {4, 3, 2, 3, 2, 1, "general"},
    };
    for (const auto& sh : shapes) {
        const M a = rng.rank_matrix(sh.m, sh.n, sh.r1);
        const M b = rng.rank_matrix(sh.p, sh.q, sh.r2);
        REQUIRE(rank(a) == sh.r1);
        REQUIRE(rank(b) == sh.r2);
        const M d = rng.matrix(sh.m, sh.q);
        const auto db = solve_axb_d(a, b, d, {{}, SolveRoute::d_b});
        const auto da = solve_axb_d(a, b, d, {{}, SolveRoute::d_a});
        CHECK(db.route == std::string("axb=d/") + sh.label + "/dB");
        CHECK(da.route == std::string("axb=d/") + sh.label + "/dA");
        CHECK(db.solution == da.solution);
        CHECK(db.solution == matmul(matmul(pinv_oracle(a), d), pinv_oracle(b)));
        CHECK(certify_axb_d(a, b, d, db.solution).all());
    }
}

TEST_CASE("default route follows the smaller outer family") {
    CHECK(resolve_solve_route(SolveRoute::automatic, 3, 2, 2, 1) == SolveRoute::d_a);
    CHECK(resolve_solve_route(SolveRoute::automatic, 3, 1, 3, 2) == SolveRoute::d_b);
    CHECK(resolve_solve_route(SolveRoute::automatic, 3, 2, 3, 2) == SolveRoute::d_b);
    CHECK(resolve_solve_route(SolveRoute::d_b, 3, 2, 2, 1) == SolveRoute::d_b);
}

TEST_CASE("perturbing inside the solution family increases the norm") {
    testing::Rng rng(45);
    const M a = rng.rank_matrix(3, 3, 2), b = rng.rank_matrix(2, 3, 1), d = rng.matrix(3, 3);
    const auto rep = solve_axb_d(a, b, d);
    const M pa = matmul(pinv_oracle(a), a), pb = matmul(b, pinv_oracle(b));
    for (int t = 0; t < 5; ++t) {
        const M v = rng.matrix(3, 2), w = rng.matrix(3, 2);
        const M y = matmul(M::identity(3) - pa, v) + matmul(w, M::identity(2) - pb);
        if (y.is_zero()) {
            continue;
        }
        const M moved = rep.solution + y;
        CHECK(frobenius_norm_sq(moved) > rep.solution_norm_sq);
        // still a least-squares solution
        CHECK(certify_axb_d(a, b, d, moved).normal_equations);
        CHECK(frobenius_norm_sq(matmul(matmul(a, moved), b) - d) == rep.residual_norm_sq);
    }
}

TEST_CASE("invertible systems have exact solutions") {
    testing::Rng rng(46);
    const M a = rng.invertible(3), b = rng.invertible(2), d = rng.matrix(3, 2);
    const auto rep = solve_axb_d(a, b, d);
    CHECK(matmul(matmul(a, rep.solution), b) == d);
    CHECK(rep.solution == matmul(matmul(inverse_via_ddet(a), d), inverse_via_ddet(b)));
    CHECK(rep.route.rfind("axb=d/full-full/", 0) == 0);
}

TEST_CASE("float backend") {
    testing::Rng rng(47);
    const M a = rng.rank_matrix(4, 3, 2), b = rng.rank_matrix(2, 3, 1), d = rng.matrix(4, 3);
    const auto exact = solve_axb_d(a, b, d);
    const auto fl = solve_axb_d(to_float(a), to_float(b), to_float(d));
    CHECK(approx_equal(fl.solution, to_float(exact.solution), 1e-9));
    CHECK(fl.rank_a == 2);
    CHECK(certify_axb_d(to_float(a), to_float(b), to_float(d), fl.solution, 1e-9).all());
}

}
