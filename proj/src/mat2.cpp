#include "lorentz/mat2.hpp"

#include <algorithm>
#include <cmath>

#include "lorentz/errors.hpp"

namespace lorentz {

Mat2& Mat2::operator+=(const Mat2& o) {
    m00 += o.m00;
    m01 += o.m01;
    m10 += o.m10;
    m11 += o.m11;
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
    m00 -= o.m00;
    m01 -= o.m01;
    m10 -= o.m10;
    m11 -= o.m11;
    return *this;
}

Mat2& Mat2::operator*=(cplx s) {
    m00 *= s;
    m01 *= s;
    m10 *= s;
    m11 *= s;
    return *this;
}

Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
Mat2 operator-(const Mat2& a) { return {-a.m00, -a.m01, -a.m10, -a.m11}; }

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Mat2 operator*(cplx s, Mat2 a) { return a *= s; }
Mat2 operator*(Mat2 a, cplx s) { return a *= s; }

cplx trace(const Mat2& a) { return a.m00 + a.m11; }
cplx det(const Mat2& a) { return a.m00 * a.m11 - a.m01 * a.m10; }

Mat2 adjoint(const Mat2& a) {
    return {std::conj(a.m00), std::conj(a.m10), std::conj(a.m01),
            std::conj(a.m11)};
}

Mat2 transpose(const Mat2& a) { return {a.m00, a.m10, a.m01, a.m11}; }

Mat2 conjugate(const Mat2& a) {
    return {std::conj(a.m00), std::conj(a.m01), std::conj(a.m10),
            std::conj(a.m11)};
}

Mat2 inverse(const Mat2& a) {
    const cplx d = det(a);
    if (std::abs(d) == 0.0)
        throw DomainError("cannot invert a singular 2x2 matrix");
    const cplx inv = 1.0 / d;
    return {a.m11 * inv, -a.m01 * inv, -a.m10 * inv, a.m00 * inv};
}

Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

double max_abs(const Mat2& a) {
    return std::max(std::max(std::abs(a.m00), std::abs(a.m01)),
                    std::max(std::abs(a.m10), std::abs(a.m11)));
}

bool approx_equal(const Mat2& a, const Mat2& b, double tol) {
    return max_abs(a - b) <= tol;
}

double hermiticity_defect(const Mat2& a) { return max_abs(a - adjoint(a)); }

namespace {

// sinh(s)/s, stable at and near s = 0.
cplx sinhc(cplx s) {
    if (std::abs(s) < 1e-4) {
        const cplx s2 = s * s;
        return 1.0 + s2 / 6.0 * (1.0 + s2 / 20.0 * (1.0 + s2 / 42.0));
    }
    return std::sinh(s) / s;
}

}  // namespace

Mat2 mat_exp(const Mat2& m) {
    const cplx mu = trace(m) / 2.0;
    const Mat2 a = m - mu * Mat2::identity();
    const cplx s = std::sqrt(-det(a));  // either square root works below
    const cplx scale = std::exp(mu);
    const cplx ch = std::cosh(s);
    const cplx f = sinhc(s);
    return scale * (ch * Mat2::identity() + f * a);
}

}  // namespace lorentz
