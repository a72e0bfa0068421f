#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "monorm/gallery.hpp"
#include "test_util.hpp"

using namespace monorm;

namespace {
bool all_pass(const std::vector<ClaimResult>& claims) {
    bool ok = true;
    for (const ClaimResult& c : claims) {
        INFO(c.id, " observed=", c.observed, " reference=", c.reference, " ", c.detail);
        CHECK(c.pass);
        ok = ok && c.pass;
    }
    return ok;
}
}  // namespace

TEST_CASE("cesaro constructor") {
    const GalleryEntry g2 = cesaro(2);
    CHECK(g2.matrix.entries() == Vec{1.0, 0.0, 0.5, 0.5});
    CHECK(cesaro(1).matrix.entries() == Vec{1.0});
    for (double s : row_sums(cesaro(3).matrix)) CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pi26 constructor follows the displayed band") {
    const GalleryEntry g = pi26_counterexample(4);
    CHECK(g.matrix.col(0) == Vec{1.0, 0.0, 0.0, 0.0});
    CHECK(g.matrix.col(1) == Vec{0.0, 1.0, 0.25, 0.0});
    CHECK(g.matrix.col(2) == Vec{0.0, 0.0, 1.0, 0.25});
    CHECK(g.matrix.col(3) == Vec{0.0, 0.0, 0.0, 1.0});

    const GalleryEntry g6 = pi26_counterexample(6);
    CHECK(g6.matrix.col(2) == Vec{0.0, 0.0, 1.0, 0.25, 1.0 / 9.0, 0.0});
    CHECK_THROWS_AS(pi26_counterexample(1), std::invalid_argument);
}

TEST_CASE("harmonic constructor follows the displayed rows") {
    const GalleryEntry g = harmonic_counterexample(4);
    CHECK(g.matrix.row(0) == Vec{0.5, 1.0, 1.0 / 3.0, 0.25});
    CHECK(g.matrix.row(1) == Vec{1.0, 0.0, 0.0, 0.0});
    CHECK(g.matrix.row(2) == Vec{1.0, 0.5, 0.0, 0.0});
    CHECK(g.matrix.row(3) == Vec{1.0, 0.5, 1.0 / 3.0, 0.0});
    CHECK_THROWS_AS(harmonic_counterexample(1), std::invalid_argument);
}

TEST_CASE("atom constructor") {
    const GalleryEntry g = atom_at_22(3);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
            CHECK(g.matrix(j, k) == ((j == 1 && k == 1) ? 1.0 : 0.0));
    CHECK_THROWS_AS(atom_at_22(1), std::invalid_argument);
}

TEST_CASE("gallery names round-trip") {
    for (GalleryName n : {GalleryName::Cesaro, GalleryName::Pi26Counterexample,
                          GalleryName::HarmonicCounterexample, GalleryName::AtomAt22})
        CHECK(parse_gallery_name(to_string(n)) == n);
    CHECK(!parse_gallery_name("hilbert"));
}

TEST_CASE("pi26 claims pass at p=1, q=1") {
    const GalleryEntry g = pi26_counterexample(300);
    all_pass(verify_claims(g, Exponent::one(), Exponent::one()));
}

TEST_CASE("cesaro claims pass") {
    all_pass(verify_claims(cesaro(60), Exponent::finite(2), Exponent::finite(2)));
    all_pass(verify_claims(cesaro(50), Exponent::finite(1.5), Exponent::finite(1.5)));
    all_pass(verify_claims(cesaro(40), Exponent::one(), Exponent::one()));
}

TEST_CASE("harmonic claims pass at finite p, q=inf") {
    all_pass(verify_claims(harmonic_counterexample(60), Exponent::finite(2),
                           Exponent::infinity()));
    all_pass(verify_claims(harmonic_counterexample(40), Exponent::finite(1.5),
                           Exponent::infinity()));
}

TEST_CASE("atom claims pass") {
    all_pass(verify_claims(atom_at_22(3), Exponent::finite(2), Exponent::infinity()));
    all_pass(verify_claims(atom_at_22(4), Exponent::one(), Exponent::infinity()));
    all_pass(verify_claims(atom_at_22(3), Exponent::infinity(), Exponent::infinity()));
}

TEST_CASE("atom downward norm follows 2^(-1/p)") {
    const Tolerance tol;
    const GalleryEntry g = atom_at_22(3);
    for (double p : {1.5, 2.0, 3.0, 10.0}) {
        const auto claims = verify_claims(g, Exponent::finite(p), Exponent::infinity());
        bool found = false;
        for (const auto& c : claims)
            if (c.id == "downward-two-pow") {
                CHECK(c.pass);
                CHECK(c.reference == doctest::Approx(std::pow(2.0, -1.0 / p)).epsilon(1e-15));
                found = true;
            }
        CHECK(found);
    }
    (void)tol;
}

TEST_CASE("tiny gallery sizes still verify") {
    all_pass(verify_claims(pi26_counterexample(2), Exponent::one(), Exponent::one()));
    all_pass(verify_claims(pi26_counterexample(3), Exponent::one(), Exponent::one()));
    all_pass(verify_claims(harmonic_counterexample(2), Exponent::finite(2),
                           Exponent::infinity()));
    all_pass(verify_claims(atom_at_22(2), Exponent::finite(2), Exponent::infinity()));
    all_pass(verify_claims(cesaro(1), Exponent::finite(2), Exponent::finite(2)));
}
