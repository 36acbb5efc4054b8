#pragma once

#include <stdexcept>
#include <string>

namespace jug {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisorZero : Error {
    DivisorZero() : Error("division by the zero polynomial") {}
};

struct NotDivisible : Error {
    using Error::Error;
};

struct InvalidM : Error {
    explicit InvalidM(long m) : Error("invalid truncation parameter m=" + std::to_string(m) + " (need m >= 1)") {}
};

struct UnknownVertex : Error {
    UnknownVertex(int q, int m)
        : Error("vertex index q=" + std::to_string(q) + " outside [-m, m] for m=" + std::to_string(m)) {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(int lhs, int rhs)
        : Error("truncation mismatch: m=" + std::to_string(lhs) + " vs m=" + std::to_string(rhs)) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(int r, int m)
        : Error("basis index r=" + std::to_string(r) + " outside [-m, m] for m=" + std::to_string(m)) {}
};

struct BadParameters : Error {
    using Error::Error;
};

struct TextParseError : Error {
    using Error::Error;
};

// Expansion in the Knutson-Tao basis failed: the input is not a Q[a,d]-combination
// of the basis classes. `q` is the recursion step whose exact division failed and
// `side` the diagonal involved (+1 / -1); side 0 flags a nonzero final residual.
struct NotInSpan : Error {
    int q;
    int side;
    NotInSpan(const std::string& msg, int q_, int side_) : Error(msg), q(q_), side(side_) {}
};

struct IntegralityViolation : Error {
    using Error::Error;
};

struct RankDefect : Error {
    using Error::Error;
};

}  // namespace jug
