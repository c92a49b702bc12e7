#pragma once

#include "lorentz/mat2.hpp"

namespace lorentz {

/** The two inequivalent two-by-two representations of the Lorentz group.
    They share the rotation generators but use opposite-sign boost
    generators; for any group element the dotted matrix equals the inverse
    adjoint of the undotted one. */
enum class Flavor { Undotted, Dotted };

Mat2 pauli(int axis);  // axis in {1, 2, 3}

/** Rotation generator J_axis = sigma_axis / 2 (identical in both flavors). */
Mat2 rotation_generator(int axis, Flavor flavor = Flavor::Undotted);

/** Boost generator: +i sigma_axis / 2 undotted, -i sigma_axis / 2 dotted. */
Mat2 boost_generator(int axis, Flavor flavor);

/** Nilpotent gauge generators, index in {1, 2}:
    undotted N1 = J2 - K1, N2 = J1 + K2 (strictly upper triangular);
    dotted   N1 = J2 - K1, N2 = J1 + K2 built from the dotted boosts
    (strictly lower triangular). */
Mat2 gauge_generator(int index, Flavor flavor);

/** A Lorentz transformation carried in both flavors at once, so that
    objects with mixed factor types can be transformed consistently. */
struct GroupElement {
    Mat2 undotted = Mat2::identity();
    Mat2 dotted = Mat2::identity();

    const Mat2& matrix(Flavor f) const {
        return f == Flavor::Undotted ? undotted : dotted;
    }
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);

/** max |dotted - (undotted^dag)^-1|; zero for consistent elements. */
double flavor_consistency_defect(const GroupElement& g);

// One-parameter subgroups.  The closed forms below are the ground truth;
// each matches exp(c * generator) for a per-subgroup constant c recorded in
// the implementation (the x-rotation uses the opposite exponent sign from
// the other five).
GroupElement rot_z(double phi);     //  diag(e^{-i phi/2}, e^{+i phi/2})
GroupElement boost_z(double eta);   //  diag(e^{+eta/2}, e^{-eta/2})
GroupElement rot_x(double theta);   //  rotates (y,z): z' = z cos - y sin
GroupElement rot_y(double theta);   //  rotates (z,x): x' = x cos + z sin
GroupElement boost_x(double lam);
GroupElement boost_y(double lam);

/** Unipotent shear pair with complex parameter gamma * e^{-i phi}:
    undotted [[1, -gamma e^{-i phi}], [0, 1]], dotted is its inverse
    adjoint.  These arise as the large-boost limit of boosted rotations and
    act on light-front potentials as gauge transformations. */
GroupElement shear(double gamma, double phi = 0.0);

/** A real four-vector with coordinates ordered (t, z, x, y). */
struct FourVector {
    double t = 0.0, z = 0.0, x = 0.0, y = 0.0;

    /** Invariant interval t^2 - z^2 - x^2 - y^2. */
    double interval() const { return t * t - z * z - x * x - y * y; }
};

/** Hermitian matrix form [[t+z, x-iy], [x+iy, t-z]]; det = interval. */
Mat2 to_matrix(const FourVector& v);

/** Inverse of to_matrix; takes real parts.  Use hermiticity_defect to
    validate inputs that are only approximately Hermitian. */
FourVector vector_from_matrix(const Mat2& m);

/** Transform by conjugation with the undotted matrix: X -> G X G^dag. */
FourVector apply(const GroupElement& g, const FourVector& v);

/** A real four-potential (a0, az, ax, ay); shares the four-vector matrix
    encoding but is kept as its own type because gauge operations apply to
    potentials only. */
struct FourPotential {
    double a0 = 0.0, az = 0.0, ax = 0.0, ay = 0.0;
};

Mat2 to_matrix(const FourPotential& p);
FourPotential potential_from_matrix(const Mat2& m);

/** Transform a potential like a four-vector (no gauge interpretation). */
FourPotential apply(const GroupElement& g, const FourPotential& p);

}  // namespace lorentz
