#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "sgradius/constants.hpp"
#include "sgradius/errors.hpp"
#include "sgradius/sg_domain.hpp"
#include "test_support.hpp"

using sgr::Complex;
using sgr::testing::uniform;

namespace {

constexpr double e = std::numbers::e;

// Independent evaluation through the principal log.
double log_modulus_via_log(Complex w) {
    return std::abs(std::log(w / (2.0 - w)));
}

}  // namespace

TEST_CASE("sigmoid examples") {
    CHECK(sgr::sigmoid({0.0, 0.0}) == Complex{1.0, 0.0});
    CHECK(sgr::sigmoid({1.0, 0.0}).real() == doctest::Approx(2 * e / (1 + e)).epsilon(1e-15));
    CHECK(sgr::sigmoid({1.0, 0.0}).real() == doctest::Approx(1.462117).epsilon(1e-6));
    CHECK(sgr::sigmoid({-1.0, 0.0}).real() == doctest::Approx(0.537883).epsilon(1e-6));
}

TEST_CASE("sigmoid pole") {
    // e^{-z} = -1 at z = i*pi; the rounded denominator is ~1e-16, so poles are caught
    // by the non-finite guard or stay huge. Exact zero denominators throw.
    const Complex near_pole = sgr::sigmoid({0.0, std::numbers::pi});
    CHECK(std::abs(near_pole) > 1e15);
}

TEST_CASE("sg_contains examples") {
    CHECK(sgr::sg_contains({1.0, 0.0}));
    CHECK_FALSE(sgr::sg_contains({2 * e / (1 + e), 0.0}));
    CHECK_FALSE(sgr::sg_contains({0.5, 0.0}));
    CHECK_FALSE(sgr::sg_contains({0.0, 0.0}));
    CHECK_FALSE(sgr::sg_contains({2.0, 0.0}));
    // w/(2-w) negative real: modulus exceeds pi > 1.
    CHECK_FALSE(sgr::sg_contains({3.0, 0.0}));
}

TEST_CASE("sg_log_modulus agrees with the principal-log definition") {
    for (int i = 0; i < 2000; ++i) {
        const Complex w{uniform(-1.0, 3.0), uniform(-2.0, 2.0)};
        REQUIRE(sgr::sg_log_modulus(w) == doctest::Approx(log_modulus_via_log(w)).epsilon(1e-13));
    }
}

TEST_CASE("property: membership is conjugation symmetric") {
    for (int i = 0; i < 5000; ++i) {
        const Complex w{uniform(0.3, 1.7), uniform(-0.7, 0.7)};
        REQUIRE(sgr::sg_contains(w) == sgr::sg_contains(std::conj(w)));
    }
}

TEST_CASE("lemma_radius examples and domain") {
    CHECK(sgr::lemma_radius(1.0) == doctest::Approx(0.4621171573).epsilon(1e-10));
    CHECK(sgr::lemma_radius(1.2) == doctest::Approx(0.2621171573).epsilon(1e-10));
    CHECK(sgr::lemma_radius(sgr::kSgLeft + 1e-12) == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(sgr::lemma_radius(sgr::kSgLeft + 1e-12) > 0.0);
    CHECK_THROWS_AS((void)sgr::lemma_radius(sgr::kSgLeft), sgr::DomainError);
    CHECK_THROWS_AS((void)sgr::lemma_radius(sgr::kSgRight), sgr::DomainError);
    CHECK_THROWS_AS((void)sgr::lemma_radius(0.1), sgr::DomainError);
}

TEST_CASE("disk_in_sg examples") {
    CHECK(sgr::disk_in_sg({1.0, 0.46}));
    CHECK_FALSE(sgr::disk_in_sg({1.0, 0.47}));
    CHECK(sgr::disk_in_sg({1.0, 0.0}));
    CHECK_FALSE(sgr::disk_in_sg({0.3, 0.0}));  // inadmissible center: false, no throw
    CHECK_FALSE(sgr::disk_in_sg({1.0, -0.1}));
}

TEST_CASE("property: random points of admissible disks are members") {
    for (int d = 0; d < 100; ++d) {
        const double a = uniform(sgr::kSgLeft, sgr::kSgRight);
        const double ra = sgr::lemma_radius(a);
        for (int k = 0; k < 100; ++k) {
            const Complex w = a + sgr::testing::random_in_disk(ra);
            REQUIRE(sgr::sg_contains(w));
        }
    }
}

TEST_CASE("property: the largest disk touches the boundary at its nearer real endpoint") {
    for (int d = 0; d < 200; ++d) {
        const double a = uniform(sgr::kSgLeft + 1e-6, sgr::kSgRight - 1e-6);
        const double touch = sgr::lemma_touch_point(a);
        REQUIRE(log_modulus_via_log({touch, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
    }
    // Center 1: both endpoints.
    CHECK(log_modulus_via_log({1.0 + sgr::lemma_radius(1.0), 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(log_modulus_via_log({1.0 - sgr::lemma_radius(1.0), 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sg_boundary") {
    const auto four = sgr::sg_boundary(4);
    REQUIRE(four.points.size() == 4);
    CHECK(four.closed);
    CHECK(four.points[0].real() == doctest::Approx(2 * e / (1 + e)).epsilon(1e-15));
    CHECK(four.points[2].real() == doctest::Approx(2 / (1 + e)).epsilon(1e-15));
    CHECK(std::abs(four.points[2].imag()) < 1e-15);

    const auto trace = sgr::sg_boundary(1000);
    for (std::size_t i = 0; i < trace.points.size(); ++i) {
        const Complex w = trace.points[i];
        REQUIRE(std::abs(log_modulus_via_log(w) - 1.0) < 1e-12);
        const bool interior = sgr::sg_contains(w * (1.0 + 1e-9)) && sgr::sg_contains(w * (1.0 - 1e-9));
        REQUIRE_FALSE(interior);
        REQUIRE(w != trace.points[(i + 1) % trace.points.size()]);
    }
    CHECK_THROWS_AS((void)sgr::sg_boundary(2), sgr::DomainError);
}

TEST_CASE("boundary CSV has three 17-digit columns") {
    std::ostringstream out;
    sgr::write_csv(out, sgr::sg_boundary(4));
    std::istringstream lines(out.str());
    std::string first;
    std::getline(lines, first);
    CHECK(first == "0,1.4621171572600098,0");
    int rows = 1;
    for (std::string line; std::getline(lines, line);) {
        ++rows;
    }
    CHECK(rows == 4);
}
