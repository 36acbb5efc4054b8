#pragma once

#include "jug/kt_basis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jug {

// The named multiplicative identities of the cohomology ring.
enum class Relation { P3_5, P3_6, P3_8, C3_9, P3_10, P3_11, P3_12, T4_2, P4_4, P4_5 };

const char* relation_name(Relation tag);
std::optional<Relation> relation_from_name(const std::string& name);

// One checkable instance: a relation tag plus its parameter where the
// statement is a family over q. Instances whose statement displays several
// equalities (both generator signs, both extreme vertices) check all of them.
struct RelationId {
    Relation tag;
    std::optional<int> q;
};

struct Counterexample {
    std::string part;  // which displayed equality failed, e.g. "plus"
    int vertex = 0;    // first differing vertex (signed index)
    BiPoly lhs, rhs;
};

struct CheckResult {
    RelationId id;
    bool pass = false;
    std::optional<Counterexample> counterexample;
};

// Exact check of one instance; throws BadParameters when q is outside the
// relation's stated range for fam.m().
CheckResult check(const KTFamily& fam, const RelationId& rel);

// Every instance admissible for the family's m, in deterministic order.
std::vector<RelationId> admissible_instances(int m);

struct RelationReport {
    std::vector<CheckResult> results;
    bool all_pass() const;
};

RelationReport check_all(const KTFamily& fam, int jobs = 1);

}  // namespace jug
