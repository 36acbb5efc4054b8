#pragma once

#include "jug/moment_graph.hpp"

#include <vector>

namespace jug {

// Equivariant cohomology class: one polynomial per vertex of G_m, totally
// defined (absent values are zero). Pure value semantics.
class CohClass {
  public:
    CohClass() = default;
    explicit CohClass(int m) : m_(m), values_(2 * m + 1) {}
    CohClass(int m, std::vector<BiPoly> values);

    int m() const { return m_; }
    const BiPoly& at(int q) const;
    void set(int q, BiPoly v);
    bool is_zero() const;

    friend bool operator==(const CohClass&, const CohClass&) = default;

    // Pointwise ring operations; operands must share m.
    friend CohClass operator+(const CohClass& l, const CohClass& r);
    friend CohClass operator-(const CohClass& l, const CohClass& r);
    friend CohClass operator*(const CohClass& l, const CohClass& r);
    CohClass scaled(const BiPoly& tau) const;
    CohClass scaled(const Rational& c) const;

  private:
    void check_same_m(const CohClass& other) const;
    int m_ = 0;
    std::vector<BiPoly> values_;
};

// The image under the structure embedding of Q[a,d]: the class with value tau
// at every vertex.
CohClass const_class(const MomentGraph& g, const BiPoly& tau);

// One failed congruence: f(source) - f(target) is not divisible by the label.
struct GkmViolation {
    Edge edge;
    BiPoly difference;
};

// Checks every oriented edge once (divisibility by the label and its negative
// coincide); returns all violations in edge order. Empty result iff f lies in
// the GKM-described cohomology ring.
std::vector<GkmViolation> verify_gkm(const MomentGraph& g, const CohClass& f, int jobs = 1);

}  // namespace jug
