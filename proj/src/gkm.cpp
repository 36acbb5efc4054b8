#include "jug/gkm.hpp"

#include "jug/errors.hpp"
#include "jug/parallel.hpp"

#include <optional>

namespace jug {

CohClass::CohClass(int m, std::vector<BiPoly> values) : m_(m), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(2 * m_ + 1))
        throw DimensionMismatch(m_, static_cast<int>(values_.size() - 1) / 2);
}

const BiPoly& CohClass::at(int q) const {
    if (q < -m_ || q > m_) throw UnknownVertex(q, m_);
    return values_[static_cast<std::size_t>(q + m_)];
}

void CohClass::set(int q, BiPoly v) {
    if (q < -m_ || q > m_) throw UnknownVertex(q, m_);
    values_[static_cast<std::size_t>(q + m_)] = std::move(v);
}

bool CohClass::is_zero() const {
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

void CohClass::check_same_m(const CohClass& other) const {
    if (m_ != other.m_) throw DimensionMismatch(m_, other.m_);
}

CohClass operator+(const CohClass& l, const CohClass& r) {
    l.check_same_m(r);
    CohClass out(l.m_);
    for (std::size_t i = 0; i < l.values_.size(); ++i) out.values_[i] = l.values_[i] + r.values_[i];
    return out;
}

CohClass operator-(const CohClass& l, const CohClass& r) {
    l.check_same_m(r);
    CohClass out(l.m_);
    for (std::size_t i = 0; i < l.values_.size(); ++i) out.values_[i] = l.values_[i] - r.values_[i];
    return out;
}

CohClass operator*(const CohClass& l, const CohClass& r) {
    l.check_same_m(r);
    CohClass out(l.m_);
    for (std::size_t i = 0; i < l.values_.size(); ++i) out.values_[i] = l.values_[i] * r.values_[i];
    return out;
}

CohClass CohClass::scaled(const BiPoly& tau) const {
    CohClass out(m_);
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i] * tau;
    return out;
}

CohClass CohClass::scaled(const Rational& c) const {
    CohClass out(m_);
    for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i].scaled(c);
    return out;
}

CohClass const_class(const MomentGraph& g, const BiPoly& tau) {
    CohClass f(g.m());
    for (int q = -g.m(); q <= g.m(); ++q) f.set(q, tau);
    return f;
}

std::vector<GkmViolation> verify_gkm(const MomentGraph& g, const CohClass& f, int jobs) {
    if (f.m() != g.m()) throw DimensionMismatch(g.m(), f.m());
    const auto& edges = g.edges();
    std::vector<std::optional<GkmViolation>> slots(edges.size());
    parallel_for(edges.size(), jobs, [&](std::size_t i) {
        const Edge& e = edges[i];
        BiPoly diff = f.at(e.source) - f.at(e.target);
        if (!BiPoly::try_div(diff, e.label)) slots[i] = GkmViolation{e, std::move(diff)};
    });
    std::vector<GkmViolation> out;
    for (auto& s : slots)
        if (s) out.push_back(std::move(*s));
    return out;
}

}  // namespace jug
