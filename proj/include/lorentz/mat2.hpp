#pragma once

#include <complex>

namespace lorentz {

using cplx = std::complex<double>;

/** A 2x2 complex matrix with value semantics.

    This is the workhorse type of the library: group elements, generators and
    the matrix form of four-vectors are all Mat2.  Entries are addressed as
    m(i, j) with zero-based row i and column j. */
struct Mat2 {
    cplx m00{}, m01{}, m10{}, m11{};

    cplx& operator()(int i, int j) {
        return i == 0 ? (j == 0 ? m00 : m01) : (j == 0 ? m10 : m11);
    }
    cplx operator()(int i, int j) const {
        return i == 0 ? (j == 0 ? m00 : m01) : (j == 0 ? m10 : m11);
    }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
    Mat2& operator*=(cplx s);
};

Mat2 operator+(Mat2 a, const Mat2& b);
Mat2 operator-(Mat2 a, const Mat2& b);
Mat2 operator-(const Mat2& a);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, Mat2 a);
Mat2 operator*(Mat2 a, cplx s);

cplx trace(const Mat2& a);
cplx det(const Mat2& a);

/** Conjugate transpose. */
Mat2 adjoint(const Mat2& a);
Mat2 transpose(const Mat2& a);
Mat2 conjugate(const Mat2& a);

/** Matrix inverse; throws DomainError if the determinant vanishes. */
Mat2 inverse(const Mat2& a);

Mat2 commutator(const Mat2& a, const Mat2& b);

/** Largest entry magnitude (the max norm used throughout for deviations). */
double max_abs(const Mat2& a);

bool approx_equal(const Mat2& a, const Mat2& b, double tol);

/** Largest entry magnitude of a - adjoint(a); zero iff a is Hermitian. */
double hermiticity_defect(const Mat2& a);

/** Matrix exponential.

    Uses the closed form for 2x2 matrices: with mu = trace(m)/2 and the
    traceless part A = m - mu*I, exp(m) = e^mu (cosh(s) I + sinh(s)/s A)
    where s^2 = -det(A).  Exact up to rounding for any entry scale the
    library encounters; sinh(s)/s falls back to its Taylor series near
    s = 0 so nilpotent arguments are handled without cancellation. */
Mat2 mat_exp(const Mat2& m);

}  // namespace lorentz
