#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "monorm/closed_forms.hpp"
#include "monorm/conditions.hpp"
#include "monorm/extremizers.hpp"
#include "monorm/gallery.hpp"
#include "monorm/oracle.hpp"
#include "test_util.hpp"

using namespace monorm;

namespace {

const NonNegMatrix kId2(2, 2, {1, 0, 0, 1});

bool nonincreasing(const Vec& x) {
    for (std::size_t k = 0; k + 1 < x.size(); ++k)
        if (x[k + 1] > x[k] + 1e-14) return false;
    return true;
}

void check_wellformed(const Extremizer& ex) {
    for (double v : ex.x) CHECK(v >= 0.0);
    if (!ex.degenerate) CHECK(std::abs(lq_norm(ex.x, ex.p) - 1.0) <= 1e-12);
    if (ex.monotone) CHECK(nonincreasing(ex.x));
}

}  // namespace

TEST_CASE("extremal_l1 returns e1") {
    const Extremizer ex = extremal_l1(kId2, Exponent::finite(2));
    CHECK(ex.x == Vec{1.0, 0.0});
    CHECK(ex.achieved == 1.0);
    CHECK(ex.provenance == Provenance::E1);
    check_wellformed(ex);

    const Extremizer ex2 = extremal_l1(NonNegMatrix(2, 2, {2, 1, 2, 1}), Exponent::one());
    CHECK(ex2.achieved == 4.0);
}

TEST_CASE("extremal_l1 documents non-optimality when 2.1 fails") {
    const GalleryEntry g = pi26_counterexample(50);
    const Extremizer ex = extremal_l1(g.matrix, Exponent::one());
    CHECK(ex.achieved == 1.0);  // column 1 is e1
    const double down = vertex_simplex_norm(g.matrix, Exponent::one()).value;
    CHECK(down > ex.achieved);
}

TEST_CASE("extremal_linf is the all-ones vector and always attains") {
    const Extremizer ex = extremal_linf(NonNegMatrix(2, 2, {1, 1, 1, 1}), Exponent::one());
    CHECK(ex.x == Vec{1.0, 1.0});
    CHECK(ex.achieved == 4.0);
    check_wellformed(ex);

    const NonNegMatrix I3(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK(extremal_linf(I3, Exponent::infinity()).achieved == 1.0);

    // every row of the averaging matrix sums to 1
    const Extremizer ex3 = extremal_linf(cesaro(4).matrix, Exponent::finite(2));
    CHECK(ex3.achieved == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("extremal_linf achieves norm_linf_lq exactly") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const NonNegMatrix A = testutil::random_matrix(rng, 5, 6);
        for (Exponent q : {Exponent::one(), Exponent::finite(2), Exponent::infinity()})
            CHECK(extremal_linf(A, q).achieved == norm_linf_lq(A, q));
    }
}

TEST_CASE("extremal_lp_l1 examples") {
    const Extremizer ex = extremal_lp_l1(NonNegMatrix(1, 2, {2, 1}), Exponent::finite(2));
    CHECK(ex.x[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(ex.x[1] == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(ex.achieved == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(ex.monotone);
    check_wellformed(ex);
    // reference maximum over the decreasing cone from the independent oracle
    CHECK(testutil::face_enum_linear_max({2.0, 1.0}, 2.0) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));

    const Extremizer ex2 = extremal_lp_l1(kId2, Exponent::finite(2));
    CHECK(ex2.x[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ex2.x[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(ex2.achieved == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    const Extremizer ex3 = extremal_lp_l1(NonNegMatrix::zero(2, 2), Exponent::finite(2));
    CHECK(ex3.degenerate);
    CHECK(ex3.x == Vec{1.0, 0.0});
    CHECK(ex3.achieved == 0.0);

    CHECK_THROWS_AS(extremal_lp_l1(kId2, Exponent::one()), std::invalid_argument);
}

TEST_CASE("extremal_lp_l1 flags non-monotone constructions") {
    const Extremizer ex = extremal_lp_l1(NonNegMatrix(2, 2, {1, 2, 0, 0}), Exponent::finite(2));
    CHECK(!ex.monotone);
    CHECK(ex.achieved == doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
}

TEST_CASE("extremal_lp_linf examples") {
    const Extremizer ex =
        extremal_lp_linf(NonNegMatrix(2, 2, {2, 1, 0, 0}), Exponent::finite(2), 0);
    CHECK(ex.x[0] == doctest::Approx(2.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(ex.achieved == doctest::Approx(std::sqrt(5.0)).epsilon(1e-15));
    CHECK(ex.achieved ==
          doctest::Approx(norm_lp_linf(NonNegMatrix(2, 2, {2, 1, 0, 0}), Exponent::finite(2)))
              .epsilon(1e-15));
    check_wellformed(ex);

    const Extremizer ex2 = extremal_lp_linf(kId2, Exponent::finite(2), 0);
    CHECK(ex2.x == Vec{1.0, 0.0});
    CHECK(ex2.achieved == 1.0);

    // zero source row: degenerate fallback
    const Extremizer ex3 =
        extremal_lp_linf(NonNegMatrix(2, 2, {0, 0, 1, 0}), Exponent::finite(2), 0);
    CHECK(ex3.degenerate);

    CHECK_THROWS_AS(extremal_lp_linf(kId2, Exponent::finite(2), 5), std::invalid_argument);
}

TEST_CASE("extremal_lp_linf on the truncated harmonic matrix") {
    const GalleryEntry g = harmonic_counterexample(50);
    const Extremizer ex = extremal_lp_linf(g.matrix, Exponent::finite(2), 49);
    // row 50 holds (1, 1/2, ..., 1/49): the construction achieves the partial
    // inverse-square sum bound exactly
    const double expect = std::sqrt(testutil::partial_inverse_power_sum(49, 2.0));
    CHECK(ex.achieved == doctest::Approx(expect).epsilon(1e-13));
    CHECK(ex.monotone);
    check_wellformed(ex);
}

TEST_CASE("theorem-backed attainment of the constructions") {
    std::mt19937_64 rng(42);
    const Tolerance tol;
    for (int trial = 0; trial < 40; ++trial) {
        const NonNegMatrix A = testutil::random_matrix(rng, 5, 5);

        if (check_2_1(A, Exponent::finite(2), tol).holds) {
            const Extremizer ex = extremal_l1(A, Exponent::finite(2));
            const double closed = norm_l1_lq(A, Exponent::finite(2));
            CHECK(std::abs(ex.achieved - closed) <= tol.condition_rel * closed + 1e-12);
        }
        if (check_3_1(A, tol).holds) {
            const Extremizer ex = extremal_lp_l1(A, Exponent::finite(2));
            const double closed = norm_lp_l1(A, Exponent::finite(2));
            CHECK(std::abs(ex.achieved - closed) <= 1e-12 * std::max(1.0, closed));
        }
        const auto cands = search_lambda_singletons(A, Exponent::finite(2), tol);
        for (std::size_t j : cands) {
            const std::size_t lam[1] = {j};
            const auto rep = check_3_7(A, Exponent::finite(2), lam, tol);
            if (!rep.holds) continue;
            const Extremizer ex =
                extremal_lp_linf(A, Exponent::finite(2), *std::get<Witness37>(rep.witness).row);
            const double closed = norm_lp_linf(A, Exponent::finite(2));
            CHECK(ex.achieved >= closed - tol.condition_rel * closed - 1e-12);
        }
    }
}

TEST_CASE("fold_tail examples") {
    const Vec x{0.4, 0.3, 0.2, 0.1};
    const Vec folded = fold_tail(x, 2);
    CHECK(folded[0] == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(folded[1] == 0.3);
    CHECK(folded[2] == 0.0);
    CHECK(folded[3] == 0.0);

    CHECK(fold_tail(Vec{1, 0, 0}, 3) == Vec{1, 0, 0});
    CHECK(fold_tail(Vec{0.25, 0.25, 0.25, 0.25}, 1) == Vec{1.0, 0.0, 0.0, 0.0});

    CHECK_THROWS_AS(fold_tail(Vec{0.5, -0.1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(fold_tail(Vec{0.5, 0.1}, 0), std::invalid_argument);
}

TEST_CASE("fold_tail preserves the l1 norm and never hurts the image norm") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> dy(0, 1024);
    std::uniform_int_distribution<int> supp(1, 5);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t cols = 6;
        const std::size_t k0 = static_cast<std::size_t>(supp(rng));
        // dyadic entries keep every partial sum exact in double precision
        Vec x(cols);
        for (double& v : x) v = dy(rng) / 1024.0;
        const Vec folded = fold_tail(x, k0);
        CHECK(lq_norm(folded, Exponent::one()) == lq_norm(x, Exponent::one()));

        NonNegMatrix A = testutil::random_matrix(rng, 4, cols);
        Vec e = A.entries();
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = k0; k < cols; ++k) e[j * cols + k] = 0.0;
        const NonNegMatrix S(4, cols, std::move(e), k0);
        for (Exponent q : {Exponent::one(), Exponent::finite(2), Exponent::infinity()}) {
            const double before = lq_norm(matvec(S, x), q);
            const double after = lq_norm(matvec(S, folded), q);
            CHECK(after >= before - 1e-12);
        }
    }
}

TEST_CASE("fold_tail keeps leading monotonicity") {
    const Vec x{0.5, 0.3, 0.2, 0.15, 0.1};
    const Vec folded = fold_tail(x, 3);
    for (std::size_t k = 0; k + 1 < 3; ++k) CHECK(folded[k] >= folded[k + 1]);
}

TEST_CASE("fold_tail with support past the end is the identity") {
    const Vec x{0.3, 0.2, 0.1};
    CHECK(fold_tail(x, 10) == x);
}
