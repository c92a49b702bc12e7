#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lorentz/contraction.hpp"
#include "lorentz/errors.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using lorentz::cplx;
using lorentz::FourPotential;
using lorentz::GroupElement;
using lorentz::Mat2;
using test_support::deviation;

namespace ov = oracle_values;

TEST_CASE("boosted rotation matches the frozen reference and closed form") {
    CHECK(deviation(lorentz::boosted_rotation(0.6, 1.2).undotted,
                    ov::boosted_rotation) < 1e-15);
    CHECK(deviation(lorentz::phased_boosted_rotation(0.6, 1.2, 0.7).undotted,
                    ov::phased_boosted_rotation) < 1e-15);

    for (double theta : {0.1, 0.6, 2.0}) {
        for (double eta : {0.0, 1.0, 3.5}) {
            const Mat2 g = lorentz::boosted_rotation(theta, eta).undotted;
            const double c = std::cos(theta / 2), s = std::sin(theta / 2);
            CHECK(std::abs(g.m00 - cplx(c)) < 1e-15);
            CHECK(std::abs(g.m11 - cplx(c)) < 1e-15);
            CHECK(std::abs(g.m01 - cplx(-std::exp(eta) * s)) <
                  1e-14 * std::exp(eta));
            CHECK(std::abs(g.m10 - cplx(std::exp(-eta) * s)) < 1e-15);

            // The phase conjugation only touches the off-diagonal entries.
            const Mat2 p =
                lorentz::phased_boosted_rotation(theta, eta, 0.9).undotted;
            CHECK(std::abs(p.m00 - g.m00) < 1e-15);
            CHECK(std::abs(p.m11 - g.m11) < 1e-15);
            CHECK(std::abs(p.m01 - g.m01 * std::exp(cplx(0.0, -0.9))) <
                  1e-14 * std::exp(eta));
            CHECK(std::abs(p.m10 - g.m10 * std::exp(cplx(0.0, 0.9))) <
                  1e-15);
        }
    }
}

TEST_CASE("contraction angle pins the upper-right entry") {
    CHECK(lorentz::contraction_angle(1.0, 0.0) ==
          doctest::Approx(3.14159265358979324));
    CHECK(lorentz::contraction_angle(0.0, 1.0) == 0.0);
    for (double gamma : {0.3, 1.0, 2.0}) {
        for (double eta : {1.0, 2.5, 6.0}) {
            if (gamma * std::exp(-eta) > 1.0) continue;
            const double theta = lorentz::contraction_angle(gamma, eta);
            CHECK(theta == doctest::Approx(
                               2.0 * std::asin(gamma * std::exp(-eta))));
            for (double phi : {0.0, 0.4}) {
                const Mat2 g =
                    lorentz::phased_boosted_rotation(theta, eta, phi)
                        .undotted;
                const cplx want = -gamma * std::exp(cplx(0.0, -phi));
                CHECK(std::abs(g.m01 - want) < 1e-14 * std::max(1.0, gamma));
            }
        }
    }
    CHECK_THROWS_AS((void)lorentz::contraction_angle(2.0, 0.0),
                    lorentz::DomainError);
    CHECK_THROWS_AS((void)lorentz::contraction_angle(100.0, 1.0),
                    lorentz::DomainError);
}

TEST_CASE("contraction sweep") {
    const auto points = lorentz::contraction_sweep(1.0, 0.3, 3.0, 8.0, 11);
    REQUIRE(points.size() == 11);
    CHECK(points.front().eta == 3.0);
    CHECK(points.back().eta == 8.0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(points[i].eta == doctest::Approx(3.0 + 0.5 * double(i)));
        if (i > 0) {
            CHECK(points[i].deviation < points[i - 1].deviation);
            CHECK(points[i].theta < points[i - 1].theta);
        }
    }
    // Frozen spot values at eta = 4 and eta = 6 (indices 2 and 6).
    CHECK(points[2].deviation ==
          doctest::Approx(ov::contraction_dev_eta4).epsilon(1e-10));
    CHECK(points[6].deviation ==
          doctest::Approx(ov::contraction_dev_eta6).epsilon(1e-10));
    // The two frozen values themselves decay like e^{-2 eta}.
    CHECK(ov::contraction_dev_eta6 / ov::contraction_dev_eta4 ==
          doctest::Approx(std::exp(-4.0)).epsilon(1e-3));

    CHECK_THROWS_AS(lorentz::contraction_sweep(1.0, 0.0, 3.0, 8.0, 1),
                    lorentz::DomainError);
    CHECK_THROWS_AS(lorentz::contraction_sweep(1.0, 0.0, 8.0, 3.0, 5),
                    lorentz::DomainError);
    // gamma e^{-eta_min} > 1 makes the angle undefined at the first point.
    CHECK_THROWS_AS(lorentz::contraction_sweep(100.0, 0.0, 0.0, 8.0, 5),
                    lorentz::DomainError);
}

TEST_CASE("fitted log-slope of the deviation is -2") {
    for (double gamma : {0.5, 1.0, 2.0}) {
        for (double phi : {0.0, 1.0471975511965976}) {
            const auto points =
                lorentz::contraction_sweep(gamma, phi, 3.0, 8.0, 11);
            const lorentz::LineFit fit = lorentz::fit_log_deviation(points);
            CHECK(std::abs(fit.slope + 2.0) < 0.1);
        }
    }
    CHECK_THROWS_AS(lorentz::fit_log_deviation({}), lorentz::DomainError);
    CHECK_THROWS_AS(
        lorentz::fit_log_deviation({{3.0, 0.1, 1e-3}}),
        lorentz::DomainError);
    CHECK_THROWS_AS(
        lorentz::fit_log_deviation({{3.0, 0.1, 0.0}, {4.0, 0.1, 1e-3}}),
        lorentz::DomainError);
}

TEST_CASE("gauge transformation, component route") {
    const FourPotential in{ov::gauge_input[0], ov::gauge_input[1],
                           ov::gauge_input[2], ov::gauge_input[3]};
    const FourPotential out =
        lorentz::gauge_transform(in, ov::gauge_gamma, ov::gauge_phi);
    CHECK(out.a0 == doctest::Approx(ov::gauge_output[0]).epsilon(1e-14));
    CHECK(out.az == doctest::Approx(ov::gauge_output[1]).epsilon(1e-14));
    // Transverse components come back bit-for-bit.
    CHECK(out.ax == in.ax);
    CHECK(out.ay == in.ay);
    // Light-front entry stays on the light front exactly.
    CHECK(out.a0 == out.az);

    // The full shift lands on a0 + az.
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::uniform_real_distribution<double> strength(0.0, 1.5);
    for (int i = 0; i < 200; ++i) {
        const double common = d(rng);
        const FourPotential p{common, common, d(rng), d(rng)};
        const double gamma = strength(rng), phi = d(rng);
        const FourPotential q = lorentz::gauge_transform(p, gamma, phi);
        const double shift =
            -2.0 * gamma * (p.ax * std::cos(phi) + p.ay * std::sin(phi));
        CHECK(std::abs((q.a0 + q.az) - (p.a0 + p.az) - shift) < 1e-14);
        CHECK(q.ax == p.ax);
        CHECK(q.ay == p.ay);
        CHECK(q.a0 == q.az);
    }
}

TEST_CASE("gauge transformation, matrix route") {
    std::mt19937_64 rng(808017);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    std::uniform_real_distribution<double> strength(0.0, 1.5);
    for (int i = 0; i < 200; ++i) {
        const double common = d(rng);
        const FourPotential p{common, common, d(rng), d(rng)};
        const double gamma = strength(rng), phi = d(rng);
        const FourPotential a = lorentz::gauge_transform(p, gamma, phi);
        const FourPotential b =
            lorentz::gauge_transform_matrix(p, gamma, phi);
        CHECK(std::abs(a.a0 - b.a0) < 1e-12);
        CHECK(std::abs(a.az - b.az) < 1e-12);
        CHECK(std::abs(a.ax - b.ax) < 1e-12);
        CHECK(std::abs(a.ay - b.ay) < 1e-12);
    }

    // Off the light front the matrix route refuses to run.
    CHECK(lorentz::lorentz_condition_defect(FourPotential{1, 0.5, 0, 0}) ==
          0.5);
    CHECK_THROWS_AS(
        lorentz::gauge_transform_matrix(FourPotential{1, 0.5, 0.3, 0}, 0.5),
        lorentz::LorentzConditionViolated);
    // The tolerance is relative to the potential's scale.
    const FourPotential nearly{1.0, 1.0 + 1e-12, 0.3, -0.4};
    CHECK_NOTHROW(lorentz::gauge_transform_matrix(nearly, 0.5, 0.0, 1e-9));
    CHECK_THROWS_AS(
        lorentz::gauge_transform_matrix(nearly, 0.5, 0.0, 1e-15),
        lorentz::LorentzConditionViolated);
}

TEST_CASE("large-boost limit of a potential") {
    const FourPotential in{ov::gauge_input[0], ov::gauge_input[1],
                           ov::gauge_input[2], ov::gauge_input[3]};
    const auto r = lorentz::boost_limit(in, 20.0);
    CHECK(r.potential.a0 == r.potential.az);
    CHECK(std::abs(det(r.matrix)) == 0.0);
    CHECK(r.dropped_norm ==
          doctest::Approx(ov::excursion_dropped_norm).epsilon(1e-12));
    // Only the light-front component survives; it is not rescaled.
    CHECK(r.matrix.m00 == lorentz::to_matrix(in).m00);
    CHECK(r.matrix.m01 == cplx(0.0));
    CHECK(r.matrix.m10 == cplx(0.0));
    CHECK(r.matrix.m11 == cplx(0.0));

    // Too small a boost leaves the (1,1) entry above threshold.  (The
    // frozen input starts with a0 = az, so its (1,1) entry is already
    // zero; use potentials off the light front here.)
    CHECK_THROWS_AS(
        lorentz::boost_limit(FourPotential{1.0, 0.0, 0.3, -0.4}, 2.0),
        lorentz::InsufficientBoost);
    CHECK_THROWS_AS(
        lorentz::boost_limit(FourPotential{1.0, 0.0, 0.3, -0.4}, 5.0),
        lorentz::InsufficientBoost);

    // Random potentials at a deep boost all land on the light cone.
    std::mt19937_64 rng(20200);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const FourPotential p{d(rng), d(rng), d(rng), d(rng)};
        const auto q = lorentz::boost_limit(p, 25.0);
        CHECK(q.potential.a0 == q.potential.az);
        CHECK(std::abs(det(q.matrix)) <= 1e-8);
        CHECK(q.dropped_norm <= 1e-7);
    }
}
