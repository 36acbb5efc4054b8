#pragma once

#include "jug/bipoly.hpp"

#include <utility>
#include <vector>

namespace jug {

// Oriented edge of the moment graph. Vertices are keyed by their signed index
// q in [-m, m]; the vertex with index q displays as the pair (m-q, m+q).
// An edge p -> l exists iff |p| > |l| and |p| - |l| is odd.
struct Edge {
    int source = 0;  // index p
    int target = 0;  // index l
    BiPoly label;    // (p-l)*a + (p-l)(p+l+1)/2 * d = weight(p) - weight(l)
};

// Moment graph of X(1,2,m) under the two-dimensional torus. Immutable after
// build(); all data is derived from m by closed formulas.
class MomentGraph {
  public:
    static MomentGraph build(int m);  // throws InvalidM for m < 1

    int m() const { return m_; }
    int vertex_count() const { return 2 * m_ + 1; }
    bool contains(int q) const { return -m_ <= q && q <= m_; }
    void require_vertex(int q) const;

    // Display pair (m-q, m+q).
    std::pair<int, int> pair_of(int q) const;

    // Vertex weight (2q+1)/2 * a + q(q+1)/2 * d.
    BiPoly weight(int q) const;

    static BiPoly edge_label(int p, int l);

    // All edges, sorted ascending by (source, target).
    const std::vector<Edge>& edges() const { return edges_; }

    // Edges with initial vertex q; there are exactly |q| of them.
    std::vector<Edge> outgoing(int q) const;

    // Oriented reachability: true iff from == to or |q(to)| < |q(from)|.
    bool reachable(int from, int to) const;

  private:
    explicit MomentGraph(int m) : m_(m) {}
    int m_ = 0;
    std::vector<Edge> edges_;
};

}  // namespace jug
