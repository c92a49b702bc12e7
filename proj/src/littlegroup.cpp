#include "lorentz/littlegroup.hpp"

#include <algorithm>
#include <cmath>

namespace lorentz {

Classification classify(const FourVector& p, double tol) {
    const double scale2 =
        p.t * p.t + p.z * p.z + p.x * p.x + p.y * p.y;
    const double m2 = p.interval();
    if (scale2 <= tol * tol) return {OrbitClass::Zero, m2};
    if (std::abs(m2) <= tol * std::max(1.0, scale2))
        return {OrbitClass::Massless, m2};
    return {m2 > 0.0 ? OrbitClass::Massive : OrbitClass::ImaginaryMass, m2};
}

const char* orbit_name(OrbitClass c) {
    switch (c) {
        case OrbitClass::Massive:
            return "massive";
        case OrbitClass::Massless:
            return "massless";
        case OrbitClass::ImaginaryMass:
            return "imaginary_mass";
        default:
            return "zero";
    }
}

Mat2 standard_momentum(OrbitClass c) {
    switch (c) {
        case OrbitClass::Massive:
            return Mat2::identity();
        case OrbitClass::Massless:
            return {1.0, 0.0, 0.0, 0.0};
        case OrbitClass::ImaginaryMass:
            return {1.0, 0.0, 0.0, -1.0};
        default:
            return Mat2::zero();
    }
}

Mat2 fixed_momentum(OrbitClass c, Flavor flavor) {
    if (c == OrbitClass::Massless && flavor == Flavor::Dotted)
        return {0.0, 0.0, 0.0, 1.0};
    return standard_momentum(c);
}

GroupElement massive_element(double theta, double phi) {
    return rot_z(phi) * rot_y(theta);
}

GroupElement massless_element(double gamma, double phi) {
    return shear(gamma, phi);
}

GroupElement imaginary_mass_element(double lambda, double phi) {
    return boost_x(lambda) * rot_z(phi);
}

double momentum_defect(const Mat2& w, const Mat2& p) {
    return max_abs(w * p * adjoint(w) - p);
}

double stabilizer_defect(const GroupElement& g, OrbitClass c, Flavor flavor) {
    return momentum_defect(g.matrix(flavor), fixed_momentum(c, flavor));
}

}  // namespace lorentz
