#pragma once

#include "lorentz/minkowski.hpp"

namespace lorentz {

/** Orbit type of a four-momentum under the Lorentz group, keyed by the sign
    of the invariant interval. */
enum class OrbitClass { Massive, Massless, ImaginaryMass, Zero };

struct Classification {
    OrbitClass orbit;
    double interval;
};

/** Classify a four-momentum.  |interval| <= tol * max(1, |p|^2) counts as
    zero interval; a vector whose components are all below tol classifies as
    Zero.  Tolerances are absolute-relative hybrids so tiny and huge momenta
    behave sensibly. */
Classification classify(const FourVector& p, double tol = 1e-9);

const char* orbit_name(OrbitClass c);

/** Standard momentum matrix of each orbit (unit scale):
    Massive       -> identity        (rest momentum (1,0,0,0))
    Massless      -> [[1,0],[0,0]]   (light-like (1/2,1/2,0,0))
    ImaginaryMass -> diag(1,-1)      (space-like (0,1,0,0))
    Zero          -> zero matrix. */
Mat2 standard_momentum(OrbitClass c);

/** The momentum matrix actually fixed by the stabilizer in a given flavor.
    Identical to standard_momentum except for the massless dotted flavor,
    which fixes the parity image [[0,0],[0,1]] instead of [[1,0],[0,0]]. */
Mat2 fixed_momentum(OrbitClass c, Flavor flavor);

/** Stabilizer representatives for each standard momentum:
    massive:        rot_z(phi) * rot_y(theta)      (unitary, fixes identity)
    massless:       shear(gamma, phi)              (unipotent)
    imaginary mass: boost_x(lambda) * rot_z(phi)   (fixes diag(1,-1)). */
GroupElement massive_element(double theta, double phi);
GroupElement massless_element(double gamma, double phi);
GroupElement imaginary_mass_element(double lambda, double phi);

/** max |w p w^dag - p|: zero iff w stabilizes the momentum matrix p. */
double momentum_defect(const Mat2& w, const Mat2& p);

/** Stabilizer defect of g against the fixed momentum of (orbit, flavor),
    using the flavor's matrix of g. */
double stabilizer_defect(const GroupElement& g, OrbitClass c, Flavor flavor);

}  // namespace lorentz
