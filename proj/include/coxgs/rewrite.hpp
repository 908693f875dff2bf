#pragma once

// Leading-word elimination, compositions (critical pairs), degree-capped
// Shirshov completion, interreduction and enumeration of irreducible words.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxgs/freealg.hpp"

namespace coxgs {

enum class RuleSource { Involution, Braid, Chain, Derived };

std::string to_string(RuleSource s);

/// A monic polynomial lhs - tail oriented as lhs -> tail.
struct RewriteRule {
  Word lhs;
  Polynomial tail;
  RuleSource source = RuleSource::Derived;
  /// For derived rules, the sequence number of the composition that
  /// produced it; unused otherwise.
  std::size_t origin = 0;

  /// Checks that every tail word is deg-lex below lhs.
  RewriteRule(Word lhs, Polynomial tail, RuleSource source = RuleSource::Derived,
              std::size_t origin = 0);

  /// Orients a nonzero polynomial by its leading word after making it monic.
  static RewriteRule from_polynomial(const Polynomial& f,
                                     RuleSource source = RuleSource::Derived,
                                     std::size_t origin = 0);

  /// Binomial rule lhs -> rhs; throws unless rhs < lhs.
  static RewriteRule binomial(const Word& lhs, const Word& rhs, RuleSource source);

  Polynomial polynomial() const;

  bool same_polynomial(const RewriteRule& other) const {
    return lhs == other.lhs && tail == other.tail;
  }
};

/// The tail as printed by to_string(RewriteRule).
std::string rhs_to_string(const RewriteRule& r);
/// "LHS = RHS".
std::string to_string(const RewriteRule& r);

using RuleId = std::size_t;

/// Occurrence of a rule's lhs inside a word.
struct Match {
  RuleId rule = 0;
  std::size_t pos = 0;
};

/// Indexed rule collection. Ids are insertion positions; iteration through
/// canonical_order() is ascending by (deg-lex lhs, id).
class RuleSystem {
 public:
  RuleSystem();
  explicit RuleSystem(const std::vector<RewriteRule>& rules);

  /// Inserts `r` unless an identical polynomial is already present.
  std::optional<RuleId> insert(RewriteRule r);

  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  const RewriteRule& rule(RuleId id) const { return rules_.at(id); }

  std::vector<RuleId> canonical_order() const;
  /// Copies of the rules in canonical order.
  std::vector<RewriteRule> rules() const;
  std::vector<Word> leading_words() const;

  std::size_t max_lhs_length() const { return max_lhs_; }

  /// Leftmost start position at which some lhs occurs; among rules matching
  /// there, the longest (deg-lex greatest) lhs, ties to the smallest id.
  std::optional<Match> leftmost_match(const Word& w) const;
  std::vector<Match> all_matches(const Word& w) const;
  bool is_reducible(const Word& w) const { return leftmost_match(w).has_value(); }

  /// True when some lhs is a suffix of `w`.
  bool has_suffix_match(const Word& w) const;

  /// Rules g whose lhs starts with the letters of `w` from offset `from`
  /// and is strictly longer; the overlap candidates for intersection
  /// ambiguities.
  std::vector<RuleId> rules_with_prefix(const Word& w, std::size_t from) const;
  /// Rules g whose lhs ends with `w.prefix(len)` and is strictly longer.
  std::vector<RuleId> rules_with_suffix(const Word& w, std::size_t len) const;

  RuleSystem without(RuleId id) const;

 private:
  struct Node {
    std::vector<std::pair<int, int>> children;
    std::vector<RuleId> terminal;
    std::size_t depth = 0;
  };
  struct Trie {
    std::vector<Node> nodes{Node{}};
    int child(int node, Generator g) const;
    int child_or_add(int node, Generator g);
    void collect(int node, std::size_t min_depth, std::vector<RuleId>& out) const;
  };

  std::vector<RewriteRule> rules_;
  Trie forward_;
  Trie reversed_;
  std::size_t max_lhs_ = 0;
};

class StepBudgetExceeded : public std::runtime_error {
 public:
  StepBudgetExceeded() : std::runtime_error("step budget exceeded") {}
};

struct ReduceOptions {
  std::size_t step_budget = 1'000'000;
};

/// One leading-word elimination: f - c*a*(lhs - tail)*b at the leftmost
/// occurrence of r.lhs in the leading word of f. Throws
/// std::invalid_argument("rule not applicable") when lhs does not occur.
Polynomial elw_step(const Polynomial& f, const RewriteRule& r);

struct ElwStep {
  RuleId rule = 0;
  Word a;
  Word b;
  Rational coeff;
  Word reduced;
};

struct Derivation {
  Polynomial result;
  std::vector<ElwStep> trace;
};

Polynomial normal_form(const Polynomial& f, const RuleSystem& system,
                       const ReduceOptions& opts = {});
Derivation normal_form_traced(const Polynomial& f, const RuleSystem& system,
                              const ReduceOptions& opts = {});

/// Sufficient triviality test: the normal form vanishes.
bool is_trivial(const Polynomial& h, const RuleSystem& system, const ReduceOptions& opts = {});

/// Fully reduces the polynomial of `s` by `others`, keeping the trace.
Derivation derive_via_elw(const RewriteRule& s, const RuleSystem& others,
                          const ReduceOptions& opts = {});

/// Whether the ELW sequence recorded by derive_via_elw passes through
/// `target`, counting the starting polynomial and the final result.
bool elw_reaches(const RewriteRule& s, const RuleSystem& others, const Polynomial& target,
                 const ReduceOptions& opts = {});

enum class CompositionKind { Intersection, Inclusion };

std::string to_string(CompositionKind k);

/// Ambiguity w with w = f.lhs * b = a * g.lhs (intersection) or
/// w = f.lhs = a * g.lhs * b (inclusion).
struct Ambiguity {
  Word w;
  Word a;
  Word b;
};

std::vector<Ambiguity> enumerate_intersection_ambiguities(const Word& f_lhs, const Word& g_lhs);
std::vector<Ambiguity> enumerate_inclusion_ambiguities(const Word& f_lhs, const Word& g_lhs);
inline std::vector<Ambiguity> enumerate_intersection_ambiguities(const RewriteRule& f,
                                                                 const RewriteRule& g) {
  return enumerate_intersection_ambiguities(f.lhs, g.lhs);
}
inline std::vector<Ambiguity> enumerate_inclusion_ambiguities(const RewriteRule& f,
                                                              const RewriteRule& g) {
  return enumerate_inclusion_ambiguities(f.lhs, g.lhs);
}

/// f*b - a*g (intersection) or f - a*g*b (inclusion). Throws
/// std::invalid_argument when (w, a, b) does not match the rules.
Polynomial composition(const RewriteRule& f, const RewriteRule& g, const Ambiguity& amb,
                       CompositionKind kind);

struct CompositionReport {
  CompositionKind kind = CompositionKind::Intersection;
  RuleId f = 0;
  RuleId g = 0;
  Word w;
  Polynomial raw;
  Polynomial remainder;
  bool trivial = true;
};

/// Every composition among the rules of `system` with ambiguity length at
/// most `max_degree`, each reduced modulo `system` itself.
std::vector<CompositionReport> all_compositions(const RuleSystem& system, std::size_t max_degree,
                                                const ReduceOptions& opts = {});

enum class CompletionStatus { Closed, Truncated };

std::string to_string(CompletionStatus s);

struct CompletionStats {
  std::size_t pairs_processed = 0;
  std::size_t rules_added = 0;
  std::size_t ambiguities_skipped = 0;
};

struct CompletionOutcome {
  RuleSystem system;
  CompletionStatus status = CompletionStatus::Closed;
  std::size_t max_degree = 0;
  CompletionStats stats;
};

struct CompletionOptions {
  ReduceOptions reduce;
  /// Called for every processed composition, in processing order.
  std::function<void(const CompositionReport&, const RuleSystem&)> observer;
};

/// Shirshov completion with every ambiguity longer than `max_degree`
/// skipped. Throws std::invalid_argument when an input lhs exceeds the cap.
CompletionOutcome shirshov_complete(const RuleSystem& system, std::size_t max_degree,
                                    const CompletionOptions& opts = {});

/// Reduced form of `system`: no lhs contains another and every tail is in
/// normal form. Generates the same ideal.
RuleSystem interreduce(const RuleSystem& system, const ReduceOptions& opts = {});

/// Words over s1..s`rank` of length <= max_len containing no lhs, ascending
/// deg-lex. The callback returns false to stop early.
void for_each_irr_word(const RuleSystem& system, int rank, std::size_t max_len,
                       const std::function<bool(const Word&)>& visit);
std::vector<Word> irr_words(const RuleSystem& system, int rank, std::size_t max_len);
/// Number of irreducible words of each length 0..max_len.
std::vector<std::size_t> count_irr_words(const RuleSystem& system, int rank, std::size_t max_len);

}  // namespace coxgs
