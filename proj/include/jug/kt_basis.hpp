#pragma once

#include "jug/gkm.hpp"

#include <vector>

namespace jug {

// Closed-form Knutson-Tao type class for one basis index. Index convention:
// r > 0 is xi(m+r, m-r), r < 0 is xi(m-|r|, m+|r|), r = 0 is xi(m,m) = 1.
// The fixed point owning index r is the vertex with signed index -r.
CohClass build_xi(const MomentGraph& g, int r);

// The 2m+1 classes, plus the graph they live on. Immutable after build.
class KTFamily {
  public:
    static KTFamily build(const MomentGraph& g);
    // Assemble from raw classes (tests use this to tamper with values).
    KTFamily(MomentGraph g, std::vector<CohClass> classes);

    int m() const { return graph_.m(); }
    const MomentGraph& graph() const { return graph_; }

    static int vertex_of(int r) { return -r; }

    const CohClass& cls(int r) const;  // throws IndexOutOfRange

    // Restriction value p^v_r of the class at a vertex (Def-3.3 style data).
    const BiPoly& p_value(int r, int q) const;

    // Restriction at the class's own fixed point, the divisor of the
    // expansion recursion: prod_{k=0}^{r-1}(-a+kd) for r > 0,
    // prod_{k=1}^{|r|}(a+kd) for r < 0, 1 for r = 0.
    const BiPoly& diagonal(int r) const { return p_value(r, vertex_of(r)); }

  private:
    MomentGraph graph_;
    std::vector<CohClass> classes_;
};

struct KtAxiomEntry {
    int r = 0;
    bool homogeneous = false;      // every component homogeneous of degree |r|
    bool support_ok = false;       // vanishes wherever the own vertex is unreachable
    bool diagonal_nonzero = false;
    Rational scalar;               // diagonal = scalar * product of outgoing labels; 0 if no such scalar
    bool exact_product = false;    // scalar == 1, i.e. the literal product axiom
};

struct KtAxiomReport {
    std::vector<KtAxiomEntry> entries;
    // Degree + support axioms hold and each diagonal is a nonzero scalar
    // multiple of the outgoing-label product. exact_product is informational.
    bool all_ok() const;
};

KtAxiomReport verify_kt_axioms(const MomentGraph& g, const KTFamily& fam);

}  // namespace jug
