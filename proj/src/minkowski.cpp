#include "lorentz/minkowski.hpp"

#include <cmath>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {
constexpr cplx I{0.0, 1.0};
}

Mat2 pauli(int axis) {
    switch (axis) {
        case 1:
            return {0.0, 1.0, 1.0, 0.0};
        case 2:
            return {0.0, -I, I, 0.0};
        case 3:
            return {1.0, 0.0, 0.0, -1.0};
        default:
            throw DomainError("pauli axis must be 1, 2 or 3");
    }
}

Mat2 rotation_generator(int axis, Flavor) { return 0.5 * pauli(axis); }

Mat2 boost_generator(int axis, Flavor flavor) {
    const cplx sign = flavor == Flavor::Undotted ? I : -I;
    return 0.5 * sign * pauli(axis);
}

Mat2 gauge_generator(int index, Flavor flavor) {
    // Undotted: N1 = J2 - K1, N2 = J1 + K2.  Dotted: N1 = J2 - K1(dotted),
    // N2 = J1 + K2(dotted).  The sign flip of the dotted boosts turns the
    // strictly upper-triangular pair into a strictly lower-triangular one.
    switch (index) {
        case 1:
            return rotation_generator(2, flavor) - boost_generator(1, flavor);
        case 2:
            return rotation_generator(1, flavor) + boost_generator(2, flavor);
        default:
            throw DomainError("gauge generator index must be 1 or 2");
    }
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return {a.undotted * b.undotted, a.dotted * b.dotted};
}

GroupElement inverse(const GroupElement& g) {
    return {inverse(g.undotted), inverse(g.dotted)};
}

double flavor_consistency_defect(const GroupElement& g) {
    return max_abs(g.dotted - inverse(adjoint(g.undotted)));
}

GroupElement rot_z(double phi) {
    const cplx lower = std::exp(-I * (phi / 2.0));
    const Mat2 m{lower, 0.0, 0.0, std::conj(lower)};
    return {m, m};
}

GroupElement boost_z(double eta) {
    const double e = std::exp(eta / 2.0);
    return {Mat2{e, 0.0, 0.0, 1.0 / e}, Mat2{1.0 / e, 0.0, 0.0, e}};
}

GroupElement rot_x(double theta) {
    const cplx c = std::cos(theta / 2.0);
    const cplx is = I * std::sin(theta / 2.0);
    const Mat2 m{c, is, is, c};
    return {m, m};
}

GroupElement rot_y(double theta) {
    const cplx c = std::cos(theta / 2.0);
    const cplx s = std::sin(theta / 2.0);
    const Mat2 m{c, -s, s, c};
    return {m, m};
}

GroupElement boost_x(double lam) {
    const cplx ch = std::cosh(lam / 2.0);
    const cplx sh = std::sinh(lam / 2.0);
    return {Mat2{ch, sh, sh, ch}, Mat2{ch, -sh, -sh, ch}};
}

GroupElement boost_y(double lam) {
    const cplx ch = std::cosh(lam / 2.0);
    const cplx ish = I * std::sinh(lam / 2.0);
    return {Mat2{ch, -ish, ish, ch}, Mat2{ch, ish, -ish, ch}};
}

GroupElement shear(double gamma, double phi) {
    const cplx w = gamma * std::exp(-I * phi);
    return {Mat2{1.0, -w, 0.0, 1.0}, Mat2{1.0, 0.0, std::conj(w), 1.0}};
}

Mat2 to_matrix(const FourVector& v) {
    return {cplx(v.t + v.z), cplx(v.x, -v.y), cplx(v.x, v.y), cplx(v.t - v.z)};
}

FourVector vector_from_matrix(const Mat2& m) {
    return {0.5 * (m.m00.real() + m.m11.real()),
            0.5 * (m.m00.real() - m.m11.real()),
            0.5 * (m.m01.real() + m.m10.real()),
            0.5 * (m.m10.imag() - m.m01.imag())};
}

FourVector apply(const GroupElement& g, const FourVector& v) {
    return vector_from_matrix(g.undotted * to_matrix(v) * adjoint(g.undotted));
}

Mat2 to_matrix(const FourPotential& p) {
    return to_matrix(FourVector{p.a0, p.az, p.ax, p.ay});
}

FourPotential potential_from_matrix(const Mat2& m) {
    const FourVector v = vector_from_matrix(m);
    return {v.t, v.z, v.x, v.y};
}

FourPotential apply(const GroupElement& g, const FourPotential& p) {
    const FourVector v = apply(g, FourVector{p.a0, p.az, p.ax, p.ay});
    return {v.t, v.z, v.x, v.y};
}

}  // namespace lorentz
