#pragma once

#include "jug/errors.hpp"
#include "jug/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace jug {

// Exponent pair of a monomial a^ea * d^ed, where a stands for the simple root
// alpha and d for the imaginary root delta. Ordered lexicographically by
// (ea, ed); this is also the term order used by exact division.
struct Monomial {
    int ea = 0;
    int ed = 0;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    int total_degree() const { return ea + ed; }
};

// Sparse element of Q[a,d] with exact rational coefficients.
//
// Canonical form: no zero coefficient is ever stored, so two values are equal
// iff their term maps are identical. All operations preserve this.
class BiPoly {
  public:
    BiPoly() = default;
    BiPoly(int c) : BiPoly(Rational(c)) {}
    BiPoly(const Rational& c);

    static BiPoly alpha() { return monomial(1, 0, 1); }
    static BiPoly delta() { return monomial(0, 1, 1); }
    static BiPoly monomial(int ea, int ed, const Rational& c);
    // ca*a + cd*d
    static BiPoly linear(const Rational& ca, const Rational& cd);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    Rational coeff(int ea, int ed) const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& r);
    BiPoly& operator-=(const BiPoly& r);
    friend BiPoly operator+(BiPoly l, const BiPoly& r) { return l += r; }
    friend BiPoly operator-(BiPoly l, const BiPoly& r) { return l -= r; }
    friend BiPoly operator*(const BiPoly& l, const BiPoly& r);
    BiPoly& operator*=(const BiPoly& r);

    BiPoly scaled(const Rational& c) const;

    // Exact quotient q with a = b*q. Throws DivisorZero when b = 0 and
    // NotDivisible when no exact quotient exists in Q[a,d]. Terms are
    // consumed in descending (ea, ed)-lex order against the leading term
    // of b; any leading term b's leading monomial cannot absorb proves
    // non-divisibility.
    static BiPoly div_exact(const BiPoly& a, const BiPoly& b);
    // Same division, but reports failure as nullopt instead of throwing.
    static std::optional<BiPoly> try_div(const BiPoly& a, const BiPoly& b);

    // Degree of a homogeneous polynomial. The zero polynomial is homogeneous
    // of every degree, encoded by any = true.
    struct HomDegree {
        bool any = false;
        int degree = 0;
        bool matches(int dg) const { return any || degree == dg; }
    };
    // nullopt when the polynomial is not homogeneous.
    std::optional<HomDegree> homogeneous_degree() const;
    bool is_homogeneous_of_degree(int dg) const;

    // Max total degree over stored terms; -1 for the zero polynomial.
    int total_degree() const;
    bool has_integer_coefficients() const;

    // Canonical interchange form: terms "num/den*a^i*d^j" sorted ascending by
    // (i, j), '+'-joined, "0" when empty. parse() is its exact inverse.
    std::string text() const;
    static BiPoly parse(const std::string& s);

    // Loose human-readable rendering, e.g. "-2*a + 3*d"; not meant to be parsed.
    std::string pretty() const;

  private:
    void add_term(const Monomial& mo, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

}  // namespace jug
