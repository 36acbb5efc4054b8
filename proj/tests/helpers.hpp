#pragma once

#include "jug/bipoly.hpp"
#include "jug/kt_basis.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace jug::testing {

// scal * prod_{k=lo}^{hi} (sign*a + k*d) -- the shape every table entry takes
inline BiPoly linprod(int sign, int lo, int hi, const Rational& scal = 1) {
    BiPoly p(scal);
    for (int k = lo; k <= hi; ++k) p *= BiPoly::linear(sign, k);
    return p;
}

inline BiPoly random_poly(std::mt19937_64& rng, int max_deg = 3, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::uniform_int_distribution<int> numer(-9, 9);
    std::uniform_int_distribution<int> denom(1, 4);
    BiPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        p += BiPoly::monomial(expo(rng), expo(rng), Rational(numer(rng), denom(rng)));
    return p;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Minimal CSV split: quoted fields may contain commas (the vertex names do).
inline std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (const char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) rows.push_back(csv_fields(line));
    }
    return rows;
}

inline std::string data_file(const std::string& name) {
    return std::string(JUG_TEST_DATA_DIR) + "/" + name;
}

}  // namespace jug::testing
