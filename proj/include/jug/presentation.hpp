#pragma once

#include "jug/expansion.hpp"

#include <map>
#include <utility>
#include <vector>

namespace jug {

// Polynomial in the two formal degree-2 generators xp (xi^+) and xm (xi^-)
// with BiPoly coefficients: sparse map (degree in xp, degree in xm) -> coeff.
class GenPoly {
  public:
    using Key = std::pair<int, int>;

    GenPoly() = default;
    static GenPoly constant(BiPoly c);
    static GenPoly xplus() { return variable(1, 0); }
    static GenPoly xminus() { return variable(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, BiPoly>& terms() const { return terms_; }
    int degree_plus() const;   // max degree in xp; -1 if zero
    int degree_minus() const;

    friend bool operator==(const GenPoly&, const GenPoly&) = default;
    friend GenPoly operator+(const GenPoly& l, const GenPoly& r);
    friend GenPoly operator-(const GenPoly& l, const GenPoly& r);
    friend GenPoly operator*(const GenPoly& l, const GenPoly& r);
    GenPoly scaled(const Rational& c) const;

    // Terms "(poly)*xp^i*xm^j" sorted ascending by (i, j), '+'-joined.
    std::string text() const;

  private:
    static GenPoly variable(int dp, int dm);
    void add_term(const Key& k, const BiPoly& c);
    std::map<Key, BiPoly> terms_;
};

// The three generators of the defining ideal for one truncation m:
//   g1 = 2 xp xm - xp(xp - p1) - xm(xm - p2)     (degree 2)
//   g2 = xp * prod over m shifted factors        (xp-degree m+1)
//   g3 = the xm mirror                            (xm-degree m+1)
struct IdealGens {
    GenPoly g1, g2, g3;
};

IdealGens build_ideal(const KTFamily& fam);

// Evaluate P at xp -> xi(m+1,m-1), xm -> xi(m-1,m+1) through the pointwise
// ring operations. Kills all three ideal generators.
CohClass apply_phi(const KTFamily& fam, const GenPoly& P);

// GenPoly whose phi-image equals the index-r basis class (the generator
// product formula divided by |r|!); witnesses surjectivity.
GenPoly surjectivity_witness(const KTFamily& fam, int r);

// Expansions of 1, xp^i, xm^j (1 <= i,j <= m) in the KT basis. The matrix is
// block-triangular in |index|; the |index| = q coefficient of the q-th power
// is the scalar q! and sits at +q (odd q) / -q (even q) for xp powers, the
// mirror for xm powers. Construction throws RankDefect if any of that fails.
struct MonomialMatrix {
    int m = 0;
    Expansion one;
    std::vector<Expansion> plus_pow;   // plus_pow[i-1] = expansion of xp^i
    std::vector<Expansion> minus_pow;

    // index carrying the q! coefficient of (x±)^q
    static int diagonal_index(int power, bool plus_generator);
    int rank() const { return 2 * m + 1; }
};

MonomialMatrix monomial_matrix(const KTFamily& fam);

// Cross-truncation stability: the presentation constants and every
// overlapping structure-constant expansion are independent of m.
struct StabilityMismatch {
    std::string kind;  // "constant" or "product"
    int q = 0;         // constant family parameter, or unused
    int i = 0, j = 0, r = 0;
    BiPoly at_m1, at_m2;
};

struct StabilityReport {
    int m1 = 0, m2 = 0;
    int constants_checked = 0;
    int products_checked = 0;
    std::vector<StabilityMismatch> mismatches;
    bool pass() const { return mismatches.empty(); }
};

StabilityReport stability_check(int m1, int m2);

}  // namespace jug
