#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "lorentz/minkowski.hpp"
#include "oracle_values.hpp"
#include "test_support.hpp"

using lorentz::cplx;
using lorentz::Flavor;
using lorentz::FourVector;
using lorentz::GroupElement;
using lorentz::Mat2;
using test_support::deviation;
using test_support::from_array;
using test_support::random_vector;
using test_support::random_word;

namespace ov = oracle_values;

namespace {

const cplx I{0.0, 1.0};

double vec_dev(const FourVector& got, const double (&want)[4]) {
    return std::max({std::abs(got.t - want[0]), std::abs(got.z - want[1]),
                     std::abs(got.x - want[2]), std::abs(got.y - want[3])});
}

double vec_dev(const FourVector& got, const test_oracle::V4& want) {
    return std::max({std::abs(got.t - want[0]), std::abs(got.z - want[1]),
                     std::abs(got.x - want[2]), std::abs(got.y - want[3])});
}

test_oracle::V4 to_v4(const FourVector& v) { return {v.t, v.z, v.x, v.y}; }

}  // namespace

TEST_CASE("Pauli matrices") {
    const Mat2 s1 = lorentz::pauli(1), s2 = lorentz::pauli(2),
               s3 = lorentz::pauli(3);
    CHECK(lorentz::max_abs(s1 * s1 - Mat2::identity()) == 0.0);
    CHECK(lorentz::max_abs(s2 * s2 - Mat2::identity()) == 0.0);
    CHECK(lorentz::max_abs(s3 * s3 - Mat2::identity()) == 0.0);
    CHECK(lorentz::max_abs(s1 * s2 - I * s3) == 0.0);
    CHECK(lorentz::max_abs(s2 * s3 - I * s1) == 0.0);
    CHECK(lorentz::max_abs(s3 * s1 - I * s2) == 0.0);
    CHECK(lorentz::hermiticity_defect(s1) == 0.0);
    CHECK(lorentz::hermiticity_defect(s2) == 0.0);
    CHECK(lorentz::hermiticity_defect(s3) == 0.0);
}

TEST_CASE("generator commutation relations") {
    for (Flavor f : {Flavor::Undotted, Flavor::Dotted}) {
        auto J = [&](int i) { return lorentz::rotation_generator(i, f); };
        auto K = [&](int i) { return lorentz::boost_generator(i, f); };
        // Full tables (cyclic index arithmetic): [Ji, Jj] = i e_{ijk} Jk,
        // [Ji, Kj] = i e_{ijk} Kk, [Ki, Kj] = -i e_{ijk} Jk.
        for (int i = 1; i <= 3; ++i) {
            const int j = i % 3 + 1, k = j % 3 + 1;
            CHECK(lorentz::max_abs(commutator(J(i), J(j)) - I * J(k)) <
                  1e-15);
            CHECK(lorentz::max_abs(commutator(J(i), K(j)) - I * K(k)) <
                  1e-15);
            CHECK(lorentz::max_abs(commutator(K(i), J(j)) - I * K(k)) <
                  1e-15);
            CHECK(lorentz::max_abs(commutator(K(i), K(j)) + I * J(k)) <
                  1e-15);
            CHECK(lorentz::max_abs(commutator(J(i), J(i))) == 0.0);
            CHECK(lorentz::max_abs(commutator(K(i), K(i))) == 0.0);
        }
        // J Hermitian, K anti-Hermitian in both flavors.
        for (int i = 1; i <= 3; ++i) {
            CHECK(lorentz::hermiticity_defect(J(i)) == 0.0);
            CHECK(lorentz::max_abs(adjoint(K(i)) + K(i)) == 0.0);
        }
    }
}

TEST_CASE("gauge generators") {
    using lorentz::gauge_generator;
    const Mat2 n1 = gauge_generator(1, Flavor::Undotted);
    const Mat2 n2 = gauge_generator(2, Flavor::Undotted);
    const Mat2 n1d = gauge_generator(1, Flavor::Dotted);
    const Mat2 n2d = gauge_generator(2, Flavor::Dotted);

    // Exact matrix forms: strictly upper triangular undotted, strictly
    // lower triangular dotted.
    CHECK(n1.m00 == cplx(0.0));
    CHECK(n1.m01 == cplx(0.0, -1.0));
    CHECK(n1.m10 == cplx(0.0));
    CHECK(n1.m11 == cplx(0.0));
    CHECK(n2.m01 == cplx(1.0));
    CHECK(n2.m00 == cplx(0.0));
    CHECK(n1d.m10 == cplx(0.0, 1.0));
    CHECK(n1d.m01 == cplx(0.0));
    CHECK(n2d.m10 == cplx(1.0));
    CHECK(n2d.m01 == cplx(0.0));

    // They are built from the rotation and boost generators.
    for (Flavor f : {Flavor::Undotted, Flavor::Dotted}) {
        CHECK(lorentz::max_abs(gauge_generator(1, f) -
                               (lorentz::rotation_generator(2, f) -
                                lorentz::boost_generator(1, f))) == 0.0);
        CHECK(lorentz::max_abs(gauge_generator(2, f) -
                               (lorentz::rotation_generator(1, f) +
                                lorentz::boost_generator(2, f))) == 0.0);
        // The pair commutes and squares to zero (nilpotent).
        const Mat2 a = gauge_generator(1, f), b = gauge_generator(2, f);
        CHECK(lorentz::max_abs(commutator(a, b)) == 0.0);
        CHECK(lorentz::max_abs(a * a) == 0.0);
        CHECK(lorentz::max_abs(b * b) == 0.0);
    }
}

TEST_CASE("one-parameter subgroups match the frozen references") {
    CHECK(deviation(lorentz::rot_z(ov::PHI).undotted, ov::rot_z_undotted) <
          1e-15);
    CHECK(deviation(lorentz::rot_z(ov::PHI).dotted, ov::rot_z_dotted) <
          1e-15);
    CHECK(deviation(lorentz::boost_z(ov::ETA).undotted, ov::boost_z_undotted) <
          1e-15);
    CHECK(deviation(lorentz::boost_z(ov::ETA).dotted, ov::boost_z_dotted) <
          1e-15);
    CHECK(deviation(lorentz::rot_x(ov::THETA_X).undotted, ov::rot_x_undotted) <
          1e-15);
    CHECK(deviation(lorentz::rot_x(ov::THETA_X).dotted, ov::rot_x_dotted) <
          1e-15);
    CHECK(deviation(lorentz::rot_y(ov::THETA_Y).undotted, ov::rot_y_undotted) <
          1e-15);
    CHECK(deviation(lorentz::rot_y(ov::THETA_Y).dotted, ov::rot_y_dotted) <
          1e-15);
    CHECK(deviation(lorentz::boost_x(ov::LAMBDA_X).undotted,
                    ov::boost_x_undotted) < 1e-15);
    CHECK(deviation(lorentz::boost_x(ov::LAMBDA_X).dotted,
                    ov::boost_x_dotted) < 1e-15);
    CHECK(deviation(lorentz::boost_y(ov::LAMBDA_Y).undotted,
                    ov::boost_y_undotted) < 1e-15);
    CHECK(deviation(lorentz::boost_y(ov::LAMBDA_Y).dotted,
                    ov::boost_y_dotted) < 1e-15);
}

TEST_CASE("subgroups agree with the exponential of their generators") {
    using lorentz::boost_generator;
    using lorentz::mat_exp;
    using lorentz::rotation_generator;
    for (Flavor f : {Flavor::Undotted, Flavor::Dotted}) {
        for (int k = 0; k < 10; ++k) {
            const double p = -2.0 + 4.0 * k / 9.0;
            CHECK(lorentz::max_abs(
                      lorentz::rot_z(p).matrix(f) -
                      mat_exp(-I * cplx(p) * rotation_generator(3, f))) <
                  1e-14);
            CHECK(lorentz::max_abs(
                      lorentz::boost_z(p).matrix(f) -
                      mat_exp(-I * cplx(p) * boost_generator(3, f))) < 1e-14);
            // The x-rotation runs along the opposite exponent sign.
            CHECK(lorentz::max_abs(
                      lorentz::rot_x(p).matrix(f) -
                      mat_exp(I * cplx(p) * rotation_generator(1, f))) <
                  1e-14);
            CHECK(lorentz::max_abs(
                      lorentz::rot_y(p).matrix(f) -
                      mat_exp(-I * cplx(p) * rotation_generator(2, f))) <
                  1e-14);
            CHECK(lorentz::max_abs(
                      lorentz::boost_x(p).matrix(f) -
                      mat_exp(-I * cplx(p) * boost_generator(1, f))) < 1e-14);
            CHECK(lorentz::max_abs(
                      lorentz::boost_y(p).matrix(f) -
                      mat_exp(-I * cplx(p) * boost_generator(2, f))) < 1e-14);
        }
    }
}

TEST_CASE("group elements are unimodular and flavor-consistent") {
    std::mt19937_64 rng(314);
    for (int i = 0; i < 200; ++i) {
        const GroupElement g = random_word(rng);
        CHECK(std::abs(det(g.undotted) - cplx(1.0)) < 1e-12);
        CHECK(std::abs(det(g.dotted) - cplx(1.0)) < 1e-12);
        CHECK(lorentz::flavor_consistency_defect(g) < 1e-12);
    }
}

TEST_CASE("group multiplication and inverse") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 100; ++i) {
        const GroupElement a = random_word(rng), b = random_word(rng);
        const GroupElement ab = a * b;
        CHECK(lorentz::max_abs(ab.undotted - a.undotted * b.undotted) == 0.0);
        CHECK(lorentz::max_abs(ab.dotted - a.dotted * b.dotted) == 0.0);
        const GroupElement ai = inverse(a);
        CHECK(lorentz::max_abs((a * ai).undotted - Mat2::identity()) < 1e-12);
        CHECK(lorentz::max_abs((ai * a).dotted - Mat2::identity()) < 1e-12);
    }
}

TEST_CASE("four-vector matrix encoding") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const FourVector v = random_vector(rng);
        const Mat2 m = to_matrix(v);
        CHECK(lorentz::hermiticity_defect(m) == 0.0);
        CHECK(std::abs(det(m).real() - v.interval()) < 1e-14);
        CHECK(std::abs(det(m).imag()) < 1e-15);
        // Decoding re-rounds the t +/- z sums, so the round trip is
        // exact only to one ulp per component.
        const FourVector back = lorentz::vector_from_matrix(m);
        CHECK(vec_dev(back, to_v4(v)) < 1e-15);
    }
    const Mat2 m = to_matrix(FourVector{0.3, -1.2, 0.5, 2.0});
    CHECK(std::abs(m.m00 - cplx(-0.9)) < 1e-15);
    CHECK(std::abs(m.m11 - cplx(1.5)) < 1e-15);
    CHECK(m.m01 == cplx(0.5, -2.0));
    CHECK(m.m10 == cplx(0.5, 2.0));
}

TEST_CASE("coordinate action matches the frozen images") {
    const FourVector x0{ov::x0[0], ov::x0[1], ov::x0[2], ov::x0[3]};
    CHECK(x0.interval() == doctest::Approx(ov::x0_interval).epsilon(1e-14));
    CHECK(vec_dev(apply(lorentz::boost_z(ov::ETA), x0), ov::x0_after_boost_z) <
          1e-14);
    CHECK(vec_dev(apply(lorentz::rot_z(ov::PHI), x0), ov::x0_after_rot_z) <
          1e-14);
    CHECK(vec_dev(apply(lorentz::rot_x(ov::THETA_X), x0), ov::x0_after_rot_x) <
          1e-14);
    CHECK(vec_dev(apply(lorentz::rot_y(ov::THETA_Y), x0), ov::x0_after_rot_y) <
          1e-14);
    CHECK(vec_dev(apply(lorentz::boost_x(ov::LAMBDA_X), x0),
                  ov::x0_after_boost_x) < 1e-14);
    CHECK(vec_dev(apply(lorentz::boost_y(ov::LAMBDA_Y), x0),
                  ov::x0_after_boost_y) < 1e-14);
}

TEST_CASE("coordinate action matches the standard 4x4 matrices") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> param(-1.5, 1.5);
    for (int i = 0; i < 60; ++i) {
        const FourVector v = random_vector(rng);
        const double p = param(rng);
        auto check = [&](const GroupElement& g, const test_oracle::M44& l) {
            CHECK(vec_dev(apply(g, v), test_oracle::apply4(l, to_v4(v))) <
                  1e-13);
        };
        check(lorentz::boost_z(p), test_oracle::boost_z4(p));
        check(lorentz::boost_x(p), test_oracle::boost_x4(p));
        check(lorentz::boost_y(p), test_oracle::boost_y4(p));
        check(lorentz::rot_z(p), test_oracle::rot_z4(p));
        check(lorentz::rot_y(p), test_oracle::rot_y4(p));
        // The x-rotation turns in the opposite sense from the standard
        // right-handed matrix.
        check(lorentz::rot_x(p), test_oracle::rot_x4(-p));
    }
}

TEST_CASE("random words preserve the interval") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 500; ++i) {
        const GroupElement g = random_word(rng);
        const FourVector v = random_vector(rng);
        const FourVector w = apply(g, v);
        const double scale = std::max(1.0, std::abs(v.interval()));
        CHECK(std::abs(w.interval() - v.interval()) < 1e-11 * scale);
    }
}

TEST_CASE("shear pair") {
    CHECK(deviation(lorentz::shear(0.8, 0.4).undotted, ov::shear_undotted) <
          1e-15);
    CHECK(deviation(lorentz::shear(0.8, 0.4).dotted, ov::shear_dotted) <
          1e-15);

    // Unipotent: ones on the diagonal, one off-diagonal entry.
    const GroupElement t = lorentz::shear(0.8, 0.4);
    CHECK(t.undotted.m00 == cplx(1.0));
    CHECK(t.undotted.m11 == cplx(1.0));
    CHECK(t.undotted.m10 == cplx(0.0));
    CHECK(t.dotted.m01 == cplx(0.0));
    CHECK(lorentz::flavor_consistency_defect(t) < 1e-15);

    // Default phase: real parameter in the upper-right corner.
    const GroupElement t0 = lorentz::shear(0.5);
    CHECK(t0.undotted.m01 == cplx(-0.5));
    CHECK(t0.dotted.m10 == cplx(0.5));

    // The shear is the exponential of a combination of the two gauge
    // generators, in matching flavors.
    for (double gamma : {0.0, 0.3, 1.0, 2.5}) {
        for (double phi : {0.0, 0.4, -1.1}) {
            const Mat2 arg_u =
                cplx(-gamma * std::sin(phi)) *
                    lorentz::gauge_generator(1, Flavor::Undotted) +
                cplx(-gamma * std::cos(phi)) *
                    lorentz::gauge_generator(2, Flavor::Undotted);
            const Mat2 arg_d =
                cplx(gamma * std::sin(phi)) *
                    lorentz::gauge_generator(1, Flavor::Dotted) +
                cplx(gamma * std::cos(phi)) *
                    lorentz::gauge_generator(2, Flavor::Dotted);
            const GroupElement t1 = lorentz::shear(gamma, phi);
            CHECK(lorentz::max_abs(t1.undotted - mat_exp(arg_u)) < 1e-15);
            CHECK(lorentz::max_abs(t1.dotted - mat_exp(arg_d)) < 1e-15);
        }
    }
}

TEST_CASE("four-potential shares the four-vector transport") {
    std::mt19937_64 rng(4711);
    for (int i = 0; i < 50; ++i) {
        const FourVector v = random_vector(rng);
        const lorentz::FourPotential p{v.t, v.z, v.x, v.y};
        const GroupElement g = random_word(rng);
        const FourVector v2 = apply(g, v);
        const lorentz::FourPotential p2 = apply(g, p);
        CHECK(std::abs(p2.a0 - v2.t) == 0.0);
        CHECK(std::abs(p2.az - v2.z) == 0.0);
        CHECK(std::abs(p2.ax - v2.x) == 0.0);
        CHECK(std::abs(p2.ay - v2.y) == 0.0);
        // a0 and az pass through (a0 +/- az)/2 and re-round; ax, ay are
        // copied verbatim.
        const lorentz::FourPotential back =
            lorentz::potential_from_matrix(to_matrix(p));
        CHECK(std::abs(back.a0 - p.a0) < 1e-15);
        CHECK(std::abs(back.az - p.az) < 1e-15);
        CHECK(back.ax == p.ax);
        CHECK(back.ay == p.ay);
    }
}
