#include "jug/moment_graph.hpp"

#include "jug/errors.hpp"

#include <cstdlib>

namespace jug {

MomentGraph MomentGraph::build(int m) {
    if (m < 1) throw InvalidM(m);
    MomentGraph g(m);
    for (int p = -m; p <= m; ++p) {
        for (int l = -m; l <= m; ++l) {
            if (std::abs(p) > std::abs(l) && (std::abs(p) - std::abs(l)) % 2 == 1)
                g.edges_.push_back(Edge{p, l, edge_label(p, l)});
        }
    }
    return g;
}

void MomentGraph::require_vertex(int q) const {
    if (!contains(q)) throw UnknownVertex(q, m_);
}

std::pair<int, int> MomentGraph::pair_of(int q) const {
    require_vertex(q);
    return {m_ - q, m_ + q};
}

BiPoly MomentGraph::weight(int q) const {
    require_vertex(q);
    return BiPoly::linear(Rational(2 * q + 1, 2), Rational(q * (q + 1), 2));
}

BiPoly MomentGraph::edge_label(int p, int l) {
    // the half-integer parts cancel: (p-l)(p+l+1) is always even
    return BiPoly::linear(p - l, Rational((p - l) * (p + l + 1), 2));
}

std::vector<Edge> MomentGraph::outgoing(int q) const {
    require_vertex(q);
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (e.source == q) out.push_back(e);
    return out;
}

bool MomentGraph::reachable(int from, int to) const {
    require_vertex(from);
    require_vertex(to);
    return from == to || std::abs(to) < std::abs(from);
}

}  // namespace jug
