#pragma once

// Exhaustive verification: enumerate all q^8 structure matrices over a
// finite field, partition the associative ones into GL(2,F)-orbits, and
// diff the result against the built-in classification tables.
//
// Every TheoremCheck gates on the Validated reading of the tables and
// reports each deviation of the Reference reading in `corrections`;
// discrepancies (which decide pass/fail) are never silently corrected.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f2a/canon.hpp"

namespace f2a::census {

struct ClassInfo {
  std::string label;  // catalog label, or "UNMATCHED"
  Msc rep;            // minimal representative of the orbit
  uint64_t orbit_size = 0;
  uint64_t aut_order = 0;
};

struct TheoremCheck {
  std::string id;
  bool pass = true;
  std::vector<std::string> discrepancies;  // validated-reading failures
  std::vector<std::string> corrections;    // reference-reading deviations
  void fail(std::string msg) {
    pass = false;
    discrepancies.push_back(std::move(msg));
  }
  void note(std::string msg) { corrections.push_back(std::move(msg)); }
};

struct CensusReport {
  int schema = 1;
  std::string field;
  uint64_t total_candidates = 0;
  uint64_t associative = 0;
  uint64_t nonzero_associative = 0;
  std::vector<ClassInfo> classes;
  std::vector<TheoremCheck> checks;
  double elapsed_ms = 0;
};

// q^8 candidate budget; default allows q <= 9, F2A_BUDGET overrides.
uint64_t default_budget();
constexpr uint64_t kLargeBudget = 815730721ULL;  // 13^8

// Full census.  jobs = 0 means hardware concurrency; the report is
// byte-identical (apart from elapsed_ms) for every worker count.
CensusReport enumerate_algebras(const Field& F, int jobs = 0,
                                std::optional<uint64_t> budget = std::nullopt);

// Census plus the classification checks (completeness, disjointness,
// orbit-stabilizer and automorphism identities); the verdict is appended
// to report.checks as id "algebra-theorem".
CensusReport verify_algebra_theorem(const Field& F, int jobs = 0,
                                    std::optional<uint64_t> budget = std::nullopt);

// Brute-forced Aut(A) against the table descriptors for every catalog
// representative.
TheoremCheck verify_automorphism_theorem(const Field& F);

// Pair-class tables partition the nondegenerate forms of every catalog
// algebra.  Finite fields with q <= 7.
TheoremCheck verify_pair_lemma(const Field& F);

// Frobenius tables: every item instance is a Frobenius pair, every
// Frobenius pair matches exactly one item, algebras absent from the table
// admit no nondegenerate compatible form, and the solution-space /
// functional characterizations agree.  Finite fields with q <= 7.
TheoremCheck verify_frobenius_theorem(const Field& F);

// Canonical-shape coverage for one acting group over F (q <= 9): every
// nondegenerate form canonicalizes to exactly one shape, constant on
// orbits, det(canonical) = det(S) det(witness)^2.
TheoremCheck verify_form_shapes(const Field& F, forms::GroupTag tag);

std::string to_json(const CensusReport& r);
void save_report(const CensusReport& r, const std::string& path);
// Reload with schema and consistency validation; when expected_field is
// given, a report for any other field is rejected.
CensusReport load_report(const std::string& path, const Field* expected_field = nullptr);

}  // namespace f2a::census
