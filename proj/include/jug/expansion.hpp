#pragma once

#include "jug/kt_basis.hpp"

#include <vector>

namespace jug {

// Coefficients of a class in the KT basis: coeff(r) multiplies the class of
// index r (h_0 at 0, h_{q,1} at +q, h_{q,2} at -q).
class Expansion {
  public:
    Expansion() = default;
    explicit Expansion(int m) : m_(m), coeffs_(2 * m + 1) {}

    int m() const { return m_; }
    const BiPoly& coeff(int r) const;
    void set(int r, BiPoly c);

    // Indices with nonzero coefficient, ascending.
    std::vector<int> support() const;

    // All coefficients lie in Z[a,d].
    bool integral() const;

    // Sum of coeff(r) * xi_r; equals the expanded class by construction.
    CohClass recombine(const KTFamily& fam) const;

    friend bool operator==(const Expansion&, const Expansion&) = default;

  private:
    int m_ = 0;
    std::vector<BiPoly> coeffs_;
};

// Lemma-5.1 subtract-and-divide recursion: peel off h_0 at the centre vertex,
// then for q = 1..m divide the residual value at (m+q,m-q) and (m-q,m+q) by
// the diagonal restriction, both signs at each q. Throws NotInSpan when an
// exact division fails (the input violates a congruence or has the wrong m);
// optionally verifies GKM membership first.
Expansion expand(const KTFamily& fam, const CohClass& f, bool check_gkm_first = false);

// Independent check: solve the triangular system f(v) = sum_r c_r xi_r(v)
// over the fraction field of Q[a,d] by back-substitution in order of
// increasing |r|, then certify every c_r is a polynomial. Agrees with
// expand() whenever either succeeds.
Expansion oracle_expand(const KTFamily& fam, const CohClass& f);

// expand(xi_i * xi_j).
Expansion structure_constants(const KTFamily& fam, int i, int j);

// All (2m+1)^2 products, with symmetry and integrality asserted.
class StructureTable {
  public:
    explicit StructureTable(int m) : m_(m), entries_((2 * m + 1) * (2 * m + 1)) {}
    int m() const { return m_; }
    const Expansion& entry(int i, int j) const;
    Expansion& slot(int i, int j);

  private:
    int m_ = 0;
    std::vector<Expansion> entries_;
};

// Throws IntegralityViolation if any entry has a non-integer coefficient
// (that would contradict the integrality theorem).
StructureTable full_table(const KTFamily& fam, int jobs = 1);

}  // namespace jug
