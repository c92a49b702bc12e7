#include "lorentz/spinorstates.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lorentz/errors.hpp"

namespace lorentz {

namespace {
constexpr cplx I{0.0, 1.0};
constexpr double INV_SQRT2 = 0.70710678118654752440;
}  // namespace

bool is_dotted(Spinor s) { return static_cast<std::uint8_t>(s) >= 2; }

Spinor flip_flavor(Spinor s) {
    return static_cast<Spinor>(static_cast<std::uint8_t>(s) ^ 2u);
}

const char* spinor_token(Spinor s) {
    switch (s) {
        case Spinor::U:
            return "u";
        case Spinor::V:
            return "v";
        case Spinor::Ud:
            return "ud";
        default:
            return "vd";
    }
}

Monomial Monomial::from(std::initializer_list<Spinor> letters) {
    return from(std::vector<Spinor>(letters));
}

Monomial Monomial::from(const std::vector<Spinor>& letters) {
    if (letters.size() > max_rank)
        throw DomainError("monomial rank limited to 16 factors");
    Monomial m;
    m.rank = static_cast<std::uint8_t>(letters.size());
    int i = 0;
    for (Spinor s : letters)
        m.code |= std::uint64_t(static_cast<std::uint8_t>(s)) << (2 * i++);
    return m;
}

Monomial Monomial::with_factor(int i, Spinor s) const {
    Monomial m = *this;
    m.code &= ~(std::uint64_t(3) << (2 * i));
    m.code |= std::uint64_t(static_cast<std::uint8_t>(s)) << (2 * i);
    return m;
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 0; i < rank; ++i) {
        if (i) out += ' ';
        out += spinor_token(factor(i));
    }
    return out;
}

MultiSpinorState MultiSpinorState::basis(
    std::initializer_list<Spinor> letters) {
    return basis(std::vector<Spinor>(letters));
}

MultiSpinorState MultiSpinorState::basis(const std::vector<Spinor>& letters) {
    MultiSpinorState s;
    s.add_term(Monomial::from(letters), 1.0);
    return s;
}

MultiSpinorState& MultiSpinorState::add_term(const Monomial& m, cplx coeff) {
    if (!terms_.empty() && terms_.begin()->first.rank != m.rank)
        throw DomainError("cannot mix monomials of different rank in a state");
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == cplx{}) terms_.erase(it);
    } else if (coeff == cplx{}) {
        terms_.erase(it);
    }
    return *this;
}

int MultiSpinorState::rank() const {
    return terms_.empty() ? -1 : terms_.begin()->first.rank;
}

MultiSpinorState& MultiSpinorState::operator+=(const MultiSpinorState& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiSpinorState& MultiSpinorState::operator-=(const MultiSpinorState& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiSpinorState& MultiSpinorState::operator*=(cplx s) {
    if (s == cplx{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

double MultiSpinorState::norm() const {
    double sum = 0.0;
    for (const auto& [m, c] : terms_) sum += std::norm(c);
    return std::sqrt(sum);
}

std::string MultiSpinorState::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.real();
        if (c.imag() >= 0.0)
            out << "+" << c.imag() << "i) ";
        else
            out << c.imag() << "i) ";
        out << m.to_string();
    }
    return out.str();
}

MultiSpinorState operator+(MultiSpinorState a, const MultiSpinorState& b) {
    return a += b;
}
MultiSpinorState operator-(MultiSpinorState a, const MultiSpinorState& b) {
    return a -= b;
}
MultiSpinorState operator*(cplx s, MultiSpinorState a) { return a *= s; }
MultiSpinorState operator*(MultiSpinorState a, cplx s) { return a *= s; }

MultiSpinorState tensor(const MultiSpinorState& a, const MultiSpinorState& b) {
    MultiSpinorState out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma.rank + mb.rank > Monomial::max_rank)
                throw DomainError("monomial rank limited to 16 factors");
            Monomial m;
            m.rank = static_cast<std::uint8_t>(ma.rank + mb.rank);
            m.code = ma.code | (mb.code << (2 * ma.rank));
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

double max_coeff_difference(const MultiSpinorState& a,
                            const MultiSpinorState& b) {
    double dev = 0.0;
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            dev = std::max(dev, std::abs(ia->second));
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            dev = std::max(dev, std::abs(ib->second));
            ++ib;
        } else {
            dev = std::max(dev, std::abs(ia->second - ib->second));
            ++ia;
            ++ib;
        }
    }
    return dev;
}

bool approx_equal(const MultiSpinorState& a, const MultiSpinorState& b,
                  double tol) {
    return max_coeff_difference(a, b) <= tol;
}

MultiSpinorState apply_element(const GroupElement& g,
                               const MultiSpinorState& s) {
    MultiSpinorState out;
    for (const auto& [mono, coeff] : s.terms()) {
        // Expand the product over factors; each factor letter j is replaced
        // by sum_i M(i, j) letter_i with M the matrix of the letter's
        // flavor.  `partial` holds (prefix monomial, accumulated coeff).
        std::vector<std::pair<Monomial, cplx>> partial{{Monomial{}, coeff}};
        for (int pos = 0; pos < mono.rank; ++pos) {
            const Spinor letter = mono.factor(pos);
            const Mat2& matrix =
                is_dotted(letter) ? g.dotted : g.undotted;
            const int j = static_cast<std::uint8_t>(letter) & 1;
            const Spinor base =
                is_dotted(letter) ? Spinor::Ud : Spinor::U;
            std::vector<std::pair<Monomial, cplx>> next;
            next.reserve(partial.size() * 2);
            for (const auto& [prefix, pc] : partial) {
                for (int i = 0; i < 2; ++i) {
                    const cplx w = matrix(i, j);
                    if (w == cplx{}) continue;
                    Monomial grown = prefix;
                    grown.rank = static_cast<std::uint8_t>(pos + 1);
                    grown.code |=
                        std::uint64_t(static_cast<std::uint8_t>(base) + i)
                        << (2 * pos);
                    next.emplace_back(grown, pc * w);
                }
            }
            partial = std::move(next);
        }
        for (const auto& [m, c] : partial) out.add_term(m, c);
    }
    return out;
}

MultiSpinorState apply_generator(const Mat2& undotted, const Mat2& dotted,
                                 const MultiSpinorState& s) {
    MultiSpinorState out;
    for (const auto& [mono, coeff] : s.terms()) {
        for (int pos = 0; pos < mono.rank; ++pos) {
            const Spinor letter = mono.factor(pos);
            const Mat2& matrix = is_dotted(letter) ? dotted : undotted;
            const int j = static_cast<std::uint8_t>(letter) & 1;
            const Spinor base = is_dotted(letter) ? Spinor::Ud : Spinor::U;
            for (int i = 0; i < 2; ++i) {
                const cplx w = matrix(i, j);
                if (w == cplx{}) continue;
                out.add_term(
                    mono.with_factor(
                        pos, static_cast<Spinor>(
                                 static_cast<std::uint8_t>(base) + i)),
                    coeff * w);
            }
        }
    }
    return out;
}

MultiSpinorState dot_conjugate(const MultiSpinorState& s) {
    MultiSpinorState out;
    for (const auto& [mono, coeff] : s.terms()) {
        Monomial m = mono;
        for (int pos = 0; pos < m.rank; ++pos)
            m = m.with_factor(pos, flip_flavor(m.factor(pos)));
        out.add_term(m, coeff);
    }
    return out;
}

double gauge_smoothness_residual(const MultiSpinorState& s) {
    double worst = 0.0;
    for (int index = 1; index <= 2; ++index) {
        const MultiSpinorState image =
            apply_generator(gauge_generator(index, Flavor::Undotted),
                            gauge_generator(index, Flavor::Dotted), s);
        worst = std::max(worst, image.norm());
    }
    return worst;
}

MultiSpinorState parse_state(const std::string& text) {
    std::vector<Spinor> letters;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == ',' || c == '*') {
            ++i;
            continue;
        }
        if (c != 'u' && c != 'v')
            throw DomainError(std::string("unexpected character '") + c +
                              "' in state (expected tokens u, v, ud, vd)");
        const bool dotted = i + 1 < text.size() && text[i + 1] == 'd';
        if (c == 'u')
            letters.push_back(dotted ? Spinor::Ud : Spinor::U);
        else
            letters.push_back(dotted ? Spinor::Vd : Spinor::V);
        i += dotted ? 2 : 1;
    }
    if (letters.empty())
        throw DomainError("empty state: expected tokens u, v, ud, vd");
    return MultiSpinorState::basis(letters);
}

namespace states {

namespace {

MultiSpinorState mono(std::initializer_list<Spinor> letters, cplx coeff) {
    MultiSpinorState s;
    s.add_term(Monomial::from(letters), coeff);
    return s;
}

using S = Spinor;

}  // namespace

MultiSpinorState u() { return MultiSpinorState::basis({S::U}); }
MultiSpinorState v() { return MultiSpinorState::basis({S::V}); }
MultiSpinorState ud() { return MultiSpinorState::basis({S::Ud}); }
MultiSpinorState vd() { return MultiSpinorState::basis({S::Vd}); }

std::array<std::array<MultiSpinorState, 2>, 2> four_vector_array() {
    std::array<std::array<MultiSpinorState, 2>, 2> out;
    out[0][0] = mono({S::Vd, S::U}, 1.0) + mono({S::U, S::Vd}, -1.0);
    out[0][1] = mono({S::Vd, S::V}, 1.0) + mono({S::V, S::Vd}, -1.0);
    out[1][0] = mono({S::U, S::Ud}, 1.0) + mono({S::Ud, S::U}, -1.0);
    out[1][1] = mono({S::V, S::Ud}, 1.0) + mono({S::Ud, S::V}, -1.0);
    return out;
}

MultiSpinorState spin_singlet() {
    return mono({S::U, S::V}, INV_SQRT2) + mono({S::V, S::U}, -INV_SQRT2);
}

MultiSpinorState spin_singlet_dotted() {
    return mono({S::Ud, S::Vd}, INV_SQRT2) + mono({S::Vd, S::Ud}, -INV_SQRT2);
}

MultiSpinorState singlet_plus() {
    return INV_SQRT2 * (spin_singlet() + spin_singlet_dotted());
}

MultiSpinorState singlet_minus() {
    return INV_SQRT2 * (spin_singlet() - spin_singlet_dotted());
}

namespace {

MultiSpinorState sym_uv() {
    return mono({S::U, S::V}, 1.0) + mono({S::V, S::U}, 1.0);
}
MultiSpinorState sym_uv_dotted() {
    return mono({S::Ud, S::Vd}, 1.0) + mono({S::Vd, S::Ud}, 1.0);
}
MultiSpinorState uu() { return mono({S::U, S::U}, 1.0); }
MultiSpinorState vv() { return mono({S::V, S::V}, 1.0); }
MultiSpinorState uu_dotted() { return mono({S::Ud, S::Ud}, 1.0); }
MultiSpinorState vv_dotted() { return mono({S::Vd, S::Vd}, 1.0); }

}  // namespace

MultiSpinorState field_e_z() {
    return 0.5 * (sym_uv() - sym_uv_dotted());
}

MultiSpinorState field_b_z() {
    return (-0.5 * I) * (sym_uv() + sym_uv_dotted());
}

MultiSpinorState field_e_x() {
    return 0.5 * (uu() + vv() - uu_dotted() - vv_dotted());
}

MultiSpinorState field_e_y() {
    return (-0.5 * I) * (uu() - vv() - uu_dotted() + vv_dotted());
}

MultiSpinorState field_b_x() {
    return (-0.5 * I) * (uu() + vv() + uu_dotted() + vv_dotted());
}

MultiSpinorState field_b_y() {
    return -0.5 * (uu() - vv() + uu_dotted() - vv_dotted());
}

MultiSpinorState massless_e_x() {
    return 0.5 * (uu() - vv_dotted());
}

MultiSpinorState massless_e_y() {
    return (-0.5 * I) * (uu() + vv_dotted());
}

MultiSpinorState massless_b_x() { return massless_e_y(); }

MultiSpinorState massless_b_y() { return -1.0 * massless_e_x(); }

MultiSpinorState helicity_e_plus() { return uu(); }

MultiSpinorState helicity_e_minus() { return -1.0 * vv_dotted(); }

MultiSpinorState helicity_b_plus() { return -I * uu(); }

MultiSpinorState helicity_b_minus() { return -I * vv_dotted(); }

MultiSpinorState neutrino_polarization(Flavor flavor) {
    return flavor == Flavor::Undotted ? u() : vd();
}

}  // namespace states
}  // namespace lorentz
