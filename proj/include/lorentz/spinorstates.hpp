#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "lorentz/minkowski.hpp"

namespace lorentz {

/** One tensor factor of a multi-spinor product.  U and V transform with the
    undotted matrix of a group element, Ud and Vd with the dotted one. */
enum class Spinor : std::uint8_t { U = 0, V = 1, Ud = 2, Vd = 3 };

bool is_dotted(Spinor s);

/** Flip a letter between the two flavors (U <-> Ud, V <-> Vd). */
Spinor flip_flavor(Spinor s);

const char* spinor_token(Spinor s);  // "u", "v", "ud", "vd"

/** An ordered product of spinor letters, packed two bits per factor.
    Ordering is significant: u v and v u are distinct basis monomials. */
struct Monomial {
    std::uint8_t rank = 0;
    std::uint64_t code = 0;

    static constexpr int max_rank = 16;

    static Monomial from(std::initializer_list<Spinor> letters);
    static Monomial from(const std::vector<Spinor>& letters);

    Spinor factor(int i) const {
        return static_cast<Spinor>((code >> (2 * i)) & 3u);
    }
    Monomial with_factor(int i, Spinor s) const;
    std::string to_string() const;  // space-joined tokens, e.g. "u vd"

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/** A finite linear combination of spinor monomials with complex
    coefficients, stored sparsely with deterministic (ordered) iteration.
    All monomials of one state must share the same rank. */
class MultiSpinorState {
public:
    MultiSpinorState() = default;

    static MultiSpinorState zero() { return {}; }
    static MultiSpinorState basis(std::initializer_list<Spinor> letters);
    static MultiSpinorState basis(const std::vector<Spinor>& letters);

    /** Add coeff * monomial; terms that cancel exactly are removed. */
    MultiSpinorState& add_term(const Monomial& m, cplx coeff);

    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int rank() const;  // rank of the monomials; -1 for the zero state

    const std::map<Monomial, cplx>& terms() const { return terms_; }

    MultiSpinorState& operator+=(const MultiSpinorState& o);
    MultiSpinorState& operator-=(const MultiSpinorState& o);
    MultiSpinorState& operator*=(cplx s);

    /** Square root of the sum of squared coefficient magnitudes. */
    double norm() const;

    std::string to_string() const;

private:
    std::map<Monomial, cplx> terms_;
};

MultiSpinorState operator+(MultiSpinorState a, const MultiSpinorState& b);
MultiSpinorState operator-(MultiSpinorState a, const MultiSpinorState& b);
MultiSpinorState operator*(cplx s, MultiSpinorState a);
MultiSpinorState operator*(MultiSpinorState a, cplx s);

/** Ordered tensor product (concatenation of factors). */
MultiSpinorState tensor(const MultiSpinorState& a, const MultiSpinorState& b);

/** Largest coefficient difference between two states (max over the union of
    their monomials). */
double max_coeff_difference(const MultiSpinorState& a,
                            const MultiSpinorState& b);

bool approx_equal(const MultiSpinorState& a, const MultiSpinorState& b,
                  double tol = 1e-12);

/** Transform every factor by the group element, undotted letters through
    g.undotted and dotted letters through g.dotted, using the column action
    u -> G(0,0) u + G(1,0) v,  v -> G(0,1) u + G(1,1) v. */
MultiSpinorState apply_element(const GroupElement& g,
                               const MultiSpinorState& s);

/** Apply a generator pair as a derivation: sum over factors, acting on
    undotted letters with `undotted` and on dotted letters with `dotted`,
    with the same column convention as apply_element. */
MultiSpinorState apply_generator(const Mat2& undotted, const Mat2& dotted,
                                 const MultiSpinorState& s);

/** Exchange the two flavors in every factor (U <-> Ud, V <-> Vd), leaving
    coefficients untouched.  This realizes the parity image of a state. */
MultiSpinorState dot_conjugate(const MultiSpinorState& s);

/** Residual of the smoothness condition for massless states: the larger of
    |N1 s| and |N2 s| where the gauge generator pair acts as a derivation.
    Zero exactly on states built from u and vd only. */
double gauge_smoothness_residual(const MultiSpinorState& s);

/** Parse a compact token string such as "uu", "uv", "udvd" or "u v ud vd"
    into a basis monomial state.  Letters: u, v, ud, vd; whitespace, commas
    and '*' are separators and optional.  Throws DomainError on anything
    else. */
MultiSpinorState parse_state(const std::string& text);

// ---------------------------------------------------------------------------
// Named states.
// ---------------------------------------------------------------------------
namespace states {

MultiSpinorState u();
MultiSpinorState v();
MultiSpinorState ud();
MultiSpinorState vd();

/** 2x2 array of rank-2 states that together carry a four-vector:
    entry (0,0) = vd u - u vd     entry (0,1) = vd v - v vd
    entry (1,0) = u ud - ud u     entry (1,1) = v ud - ud v.
    Under apply_element with element g the array transforms by congruence
    with the adjoint of the undotted matrix:  V -> G^dag V G. */
std::array<std::array<MultiSpinorState, 2>, 2> four_vector_array();

/** Antisymmetric combination (u v - v u) / sqrt(2); invariant under every
    group element because both matrices are unimodular. */
MultiSpinorState spin_singlet();
MultiSpinorState spin_singlet_dotted();

/** Flavor-symmetric and antisymmetric singlets
    (spin_singlet +- spin_singlet_dotted) / sqrt(2); eigenstates of
    dot_conjugate with eigenvalues +1 and -1. */
MultiSpinorState singlet_plus();
MultiSpinorState singlet_minus();

/** Rank-2 combinations carrying the six components of an antisymmetric
    field tensor.  The electric-like triple changes sign under
    dot_conjugate, the magnetic-like triple is fixed. */
MultiSpinorState field_e_x();
MultiSpinorState field_e_y();
MultiSpinorState field_e_z();
MultiSpinorState field_b_x();
MultiSpinorState field_b_y();
MultiSpinorState field_b_z();

/** Transverse field components that survive the massless limit; built from
    u u and vd vd only, hence invariant under the shear pair. */
MultiSpinorState massless_e_x();
MultiSpinorState massless_e_y();
MultiSpinorState massless_b_x();  // equals massless_e_y()
MultiSpinorState massless_b_y();  // equals -massless_e_x()

/** Helicity combinations E +- i... : e_plus = u u, e_minus = -vd vd,
    b_plus = -i u u, b_minus = -i vd vd.  rot_z(phi) multiplies u u by
    e^{-i phi} and vd vd by e^{+i phi}. */
MultiSpinorState helicity_e_plus();
MultiSpinorState helicity_e_minus();
MultiSpinorState helicity_b_plus();
MultiSpinorState helicity_b_minus();

/** The single-letter state annihilated by the gauge generators of the
    given flavor: u for undotted, vd for dotted. */
MultiSpinorState neutrino_polarization(Flavor flavor);

}  // namespace states
}  // namespace lorentz
