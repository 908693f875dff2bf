#pragma once

// Batch front end and the built-in counterexample pipeline.
//
// Verbs: relations, check, complete, nf, eq, irr, verify-ex31.
// Exit codes: 0 success, 1 usage or parse error, 2 truncated completion or
// undecided query, 3 conditions detected.

#include <iosfwd>
#include <string>
#include <vector>

#include "coxgs/coxeter.hpp"

namespace coxgs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitTruncated = 2;
inline constexpr int kExitConditions = 3;

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rank-4 matrix with m13 = 3, m14 = 2, m34 = 5 and every other
/// off-diagonal order infinite.
CoxeterMatrix counterexample_matrix();

/// Relation lists as published for the counterexample, built from the
/// alternating-word notation.
std::vector<RewriteRule> counterexample_braids();
std::vector<RewriteRule> counterexample_chains();
/// Chain relations with leading words rewritten by s4s1 = s1s4 and
/// s3s1s3 = s1s3s1; together with involutions and braids they form a
/// Groebner-Shirshov basis.
std::vector<RewriteRule> counterexample_refined();

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CounterexampleReport {
  std::vector<SubCheck> checks;
  CompletionStatus completion = CompletionStatus::Closed;

  bool passed() const;
};

/// Generates the relations, finds a nontrivial composition, completes up to
/// `max_degree`, compares the interreduced leading words with the refined
/// basis and checks that each refined relation is reached by ELW from a
/// chain relation of the same degree.
CounterexampleReport verify_counterexample(std::size_t max_degree);

}  // namespace coxgs
