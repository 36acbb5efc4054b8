#include "jug/bipoly.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace jug {

BiPoly::BiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::monomial(int ea, int ed, const Rational& c) {
    BiPoly p;
    if (c != 0) p.terms_.emplace(Monomial{ea, ed}, c);
    return p;
}

BiPoly BiPoly::linear(const Rational& ca, const Rational& cd) {
    BiPoly p = monomial(1, 0, ca);
    p += monomial(0, 1, cd);
    return p;
}

Rational BiPoly::coeff(int ea, int ed) const {
    const auto it = terms_.find(Monomial{ea, ed});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(const Monomial& mo, const Rational& c) {
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(mo, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly p;
    for (const auto& [mo, c] : terms_) p.terms_.emplace(mo, -c);
    return p;
}

BiPoly& BiPoly::operator+=(const BiPoly& r) {
    for (const auto& [mo, c] : r.terms_) add_term(mo, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& r) {
    for (const auto& [mo, c] : r.terms_) add_term(mo, -c);
    return *this;
}

BiPoly operator*(const BiPoly& l, const BiPoly& r) {
    BiPoly p;
    for (const auto& [ml, cl] : l.terms_)
        for (const auto& [mr, cr] : r.terms_)
            p.add_term(Monomial{ml.ea + mr.ea, ml.ed + mr.ed}, cl * cr);
    return p;
}

BiPoly& BiPoly::operator*=(const BiPoly& r) {
    *this = *this * r;
    return *this;
}

BiPoly BiPoly::scaled(const Rational& c) const {
    BiPoly p;
    if (c == 0) return p;
    for (const auto& [mo, co] : terms_) p.terms_.emplace(mo, co * c);
    return p;
}

std::optional<BiPoly> BiPoly::try_div(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisorZero();
    BiPoly quotient;
    BiPoly rem = a;
    const auto& [lmb, lcb] = *b.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [lmr, lcr] = *rem.terms_.rbegin();
        if (lmr.ea < lmb.ea || lmr.ed < lmb.ed) return std::nullopt;
        const BiPoly t = monomial(lmr.ea - lmb.ea, lmr.ed - lmb.ed, lcr / lcb);
        quotient += t;
        rem -= t * b;
    }
    return quotient;
}

BiPoly BiPoly::div_exact(const BiPoly& a, const BiPoly& b) {
    auto q = try_div(a, b);
    if (!q) throw NotDivisible("(" + a.text() + ") is not divisible by (" + b.text() + ")");
    return *q;
}

std::optional<BiPoly::HomDegree> BiPoly::homogeneous_degree() const {
    if (terms_.empty()) return HomDegree{true, 0};
    const int dg = terms_.begin()->first.total_degree();
    for (const auto& [mo, c] : terms_)
        if (mo.total_degree() != dg) return std::nullopt;
    return HomDegree{false, dg};
}

bool BiPoly::is_homogeneous_of_degree(int dg) const {
    const auto h = homogeneous_degree();
    return h && h->matches(dg);
}

int BiPoly::total_degree() const {
    int dg = -1;
    for (const auto& [mo, c] : terms_) dg = std::max(dg, mo.total_degree());
    return dg;
}

bool BiPoly::has_integer_coefficients() const {
    for (const auto& [mo, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

std::string BiPoly::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mo, c] : terms_) {
        if (!out.empty()) out += '+';
        out += rational_text(c) + "*a^" + std::to_string(mo.ea) + "*d^" + std::to_string(mo.ed);
    }
    return out;
}

namespace {

Monomial parse_exponents(const std::string& term, std::string::size_type star, const std::string& full) {
    // term[star..] is "*a^i*d^j"
    const std::string tail = term.substr(star);
    int i = 0, j = 0, consumed = 0;
    if (std::sscanf(tail.c_str(), "*a^%d*d^%d%n", &i, &j, &consumed) != 2 || i < 0 || j < 0 ||
        static_cast<std::size_t>(consumed) != tail.size())
        throw TextParseError("bad polynomial term '" + term + "' in '" + full + "'");
    return Monomial{i, j};
}

}  // namespace

BiPoly BiPoly::parse(const std::string& s) {
    if (s == "0") return BiPoly{};
    if (s.empty()) throw TextParseError("empty polynomial text");
    BiPoly p;
    Monomial prev{-1, -1};
    std::string::size_type pos = 0;
    while (pos <= s.size()) {
        auto end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        const std::string term = s.substr(pos, end - pos);
        const auto star = term.find('*');
        if (star == std::string::npos) throw TextParseError("bad polynomial term '" + term + "' in '" + s + "'");
        const Monomial mo = parse_exponents(term, star, s);
        if (!(prev < mo)) throw TextParseError("terms out of canonical order in '" + s + "'");
        prev = mo;
        const Rational c = parse_rational(term.substr(0, star));
        if (c == 0) throw TextParseError("zero coefficient stored in '" + s + "'");
        p.terms_.emplace(mo, c);
        pos = end + 1;
    }
    return p;
}

std::string BiPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest-degree terms first reads better for humans
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [mo, c] = *it;
        const Rational abs = c < 0 ? Rational(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        std::string vars;
        if (mo.ea > 0) vars += mo.ea == 1 ? "a" : "a^" + std::to_string(mo.ea);
        if (mo.ed > 0) {
            if (!vars.empty()) vars += "*";
            vars += mo.ed == 1 ? "d" : "d^" + std::to_string(mo.ed);
        }
        const bool unit = abs == 1 && !vars.empty();
        if (!unit) {
            out << num(abs).str();
            if (!is_integer(abs)) out << "/" << den(abs).str();
            if (!vars.empty()) out << "*";
        }
        out << vars;
    }
    return out.str();
}

}  // namespace jug
