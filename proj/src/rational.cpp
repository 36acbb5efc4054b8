#include "jug/rational.hpp"

#include "jug/errors.hpp"

namespace jug {

Int factorial(int n) {
    Int r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

std::string rational_text(const Rational& r) {
    return num(r).str() + "/" + den(r).str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d <= 0) throw TextParseError("rational denominator must be positive: " + s);
        return Rational(n, d);
    } catch (const std::exception& e) {
        throw TextParseError("bad rational '" + s + "': " + e.what());
    }
}

}  // namespace jug
