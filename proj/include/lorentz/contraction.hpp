#pragma once

#include <vector>

#include "lorentz/minkowski.hpp"

namespace lorentz {

/** Rotation conjugated by a z-boost: boost_z(eta) rot_y(theta) boost_z(-eta).
    Undotted closed form
        [[cos(theta/2),            -e^{+eta} sin(theta/2)],
         [e^{-eta} sin(theta/2),    cos(theta/2)]]. */
GroupElement boosted_rotation(double theta, double eta);

/** The same element conjugated by rot_z(phi), which multiplies the two
    off-diagonal entries by e^{-i phi} and e^{+i phi}. */
GroupElement phased_boosted_rotation(double theta, double eta, double phi);

/** The rotation angle 2 asin(gamma e^{-eta}) that makes the upper-right
    entry of the phased boosted rotation exactly -gamma e^{-i phi}.  Throws
    DomainError when gamma e^{-eta} > 1 (no such angle exists). */
double contraction_angle(double gamma, double eta);

struct SweepPoint {
    double eta;
    double theta;
    double deviation;  // max |phased boosted rotation - shear(gamma, phi)|
};

/** Sample the approach of the boosted rotation to the shear over an
    inclusive rapidity range.  steps >= 2 points, evenly spaced. */
std::vector<SweepPoint> contraction_sweep(double gamma, double phi,
                                          double eta_min, double eta_max,
                                          int steps);

struct LineFit {
    double slope;
    double intercept;
};

/** Least-squares fit of ln(deviation) against eta.  The boosted rotation
    approaches the shear like e^{-2 eta}, so the slope converges to -2. */
LineFit fit_log_deviation(const std::vector<SweepPoint>& points);

/** |a0 - az|: zero iff the potential lies on the light-front slice where
    the shear acts as a gauge transformation. */
double lorentz_condition_defect(const FourPotential& p);

/** Gauge transformation of a light-front potential, component form:
        a0 + az -> a0 + az - 2 gamma (ax cos(phi) + ay sin(phi)),
    with ax and ay untouched bit-for-bit.  A potential entering with a0 = az
    leaves with a0 = az exactly.  Does not require the light-front
    condition, but only agrees with the matrix route when the condition
    holds. */
FourPotential gauge_transform(const FourPotential& p, double gamma,
                              double phi = 0.0);

/** Gauge transformation via matrix conjugation with shear(gamma, phi).
    Requires the light-front condition |a0 - az| <= tol * max(1, |p|);
    throws LorentzConditionViolated otherwise. */
FourPotential gauge_transform_matrix(const FourPotential& p, double gamma,
                                     double phi = 0.0, double tol = 1e-9);

struct BoostLimitResult {
    FourPotential potential;  // satisfies a0 = az exactly
    Mat2 matrix;
    double dropped_norm;  // largest magnitude among the zeroed entries
};

/** Large-boost limit of a potential matrix: conjugate by boost_z(eta),
    rescale by e^{-eta} and zero every entry whose magnitude falls below
    tol * max(1, |h|).  The rescaled matrix is
        [[h00, e^{-eta} h01], [e^{-eta} h10, e^{-2 eta} h11]],
    so for large eta only the (0,0) entry survives and the result lies on
    the light-front slice with vanishing determinant.  Throws
    InsufficientBoost when eta is too small to push the (1,1) entry below
    the threshold. */
BoostLimitResult boost_limit(const Mat2& h, double eta, double tol = 1e-8);
BoostLimitResult boost_limit(const FourPotential& p, double eta,
                             double tol = 1e-8);

}  // namespace lorentz
