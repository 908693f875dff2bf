#pragma once

// Coxeter matrices and the relation families of the Coxeter presentation:
// involutions s s = e, braid relations m(s,t) = m(t,s), and the chain
// relations built from alternating blocks. Also detection of the four
// local patterns (C1-C4) that can make compositions of those relations
// nontrivial.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxgs/freealg.hpp"
#include "coxgs/rewrite.hpp"

namespace coxgs {

/// Symmetric matrix of orders m(s,t); std::nullopt stands for infinity.
class CoxeterMatrix {
 public:
  using Entry = std::optional<int>;

  /// Rank-n matrix with every off-diagonal order infinite.
  explicit CoxeterMatrix(int rank);
  /// Row-major entries; throws std::invalid_argument naming the violated
  /// invariant when the matrix is not a Coxeter matrix.
  CoxeterMatrix(int rank, std::vector<Entry> entries);

  /// Text format: first line n, then n rows of n entries; `0` or `inf`
  /// mean infinity.
  static CoxeterMatrix parse(std::string_view text);
  static CoxeterMatrix from_file(const std::string& path);

  int rank() const { return rank_; }
  Entry at(int i, int j) const;
  Entry order(Generator s, Generator t) const { return at(s.index, t.index); }
  bool finite(Generator s, Generator t) const { return order(s, t).has_value(); }

  /// Copy with m(i,j) = m(j,i) = value.
  CoxeterMatrix with_order(int i, int j, Entry value) const;

  /// Same format as parse(); infinity prints as `inf`.
  std::string to_text() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_;
  std::vector<Entry> entries_;
};

/// The alternating word s t s t ... with exactly `len` letters.
Word alternating_word(Generator s, Generator t, std::size_t len);

/// s |> t: s > t and m(s,t) = 2.
bool rhd(Generator s, Generator t, const CoxeterMatrix& m);

/// Partner of the following block: t when m(s,t) is even, s when odd.
/// Throws std::invalid_argument when m(s,t) is infinite.
Generator next_partner(Generator s, Generator t, const CoxeterMatrix& m);

std::vector<RewriteRule> involution_relations(const CoxeterMatrix& m);
std::vector<RewriteRule> braid_relations(const CoxeterMatrix& m);

/// Ordered pair (s, s') of a chain.
struct Block {
  Generator s;
  Generator partner;

  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Blocks (s_0,s'_0), ..., (s_{k+1},s'_{k+1}) describing one chain
/// relation. Needs at least two blocks.
struct Chain {
  std::vector<Block> blocks;

  std::size_t size() const { return blocks.size(); }
  const Block& operator[](std::size_t i) const { return blocks[i]; }

  friend auto operator<=>(const Chain&, const Chain&) = default;
};

std::string to_string(const Chain& c);

/// Order of the block's pair; the block must have finite order.
int block_order(const Block& b, const CoxeterMatrix& m);
/// (m-1)(s, s').
Word block_head(const Block& b, const CoxeterMatrix& m);
/// Last letter of (m-1)(s, s').
Generator block_last(const Block& b, const CoxeterMatrix& m);

/// Describes the first violated chain invariant, or nullopt for a valid
/// chain (finite orders, the order constraints, the parity rule and the
/// no-repeated-pair rule).
std::optional<std::string> chain_violation(const Chain& c, const CoxeterMatrix& m);

/// Length of the leading side of the chain relation.
std::size_t relation_degree(const Chain& c, const CoxeterMatrix& m);

/// Both sides of the chain relation without checking the chain constraints;
/// only finiteness and the parity rule are required.
std::pair<Word, Word> chain_relation_words(const Chain& c, const CoxeterMatrix& m);

/// The chain relation as a rule lhs -> rhs. Throws std::invalid_argument
/// for an invalid chain.
RewriteRule relation_from_chain(const Chain& c, const CoxeterMatrix& m);

struct ChainEnumeration {
  std::vector<Chain> chains;
  /// The pair-transition graph has a reachable cycle, so the full family is
  /// infinite and `chains` stops at the degree bound.
  bool infinite = false;
};

/// All valid chains whose relation degree is at most `max_degree`, ordered
/// by block count, then lexicographically by blocks.
ChainEnumeration enumerate_chains(const CoxeterMatrix& m, std::size_t max_degree);

/// Recovers the chain whose relation is exactly lhs = rhs, if any.
std::optional<Chain> match_chain_relation(const Word& lhs, const Word& rhs,
                                          const CoxeterMatrix& m);

struct CoxeterRelations {
  std::vector<RewriteRule> involutions;
  std::vector<RewriteRule> braids;
  std::vector<RewriteRule> chains;
  bool chains_infinite = false;

  std::vector<RewriteRule> all() const;
  RuleSystem system() const { return RuleSystem(all()); }
};

/// Involution, braid and chain relations, the latter up to `max_degree`.
CoxeterRelations coxeter_relations(const CoxeterMatrix& m, std::size_t max_degree);

/// Shirshov completion of the Coxeter relations up to `max_degree`. Chain
/// relations are generated up to the cap; a relation longer than the cap is
/// left out and counts as a skipped ambiguity, so the result is truncated.
CompletionOutcome complete_presentation(const CoxeterMatrix& m, std::size_t max_degree,
                                        const CompletionOptions& opts = {});

enum class ConditionKind { C1, C2, C3, C4 };

std::string to_string(ConditionKind k);

struct ConditionWitness {
  ConditionKind kind = ConditionKind::C1;
  Chain chain;
  std::size_t i = 0;
  std::size_t l = 0;
  /// Leading word of the relation g whose inclusion in the chain's leading
  /// word gives the composition.
  Word subword;
};

/// Literal check of the condition clauses for block positions i <= l of a
/// chain (C2 and C4 need i < l).
bool satisfies_condition(ConditionKind kind, const Chain& c, std::size_t i, std::size_t l,
                         const CoxeterMatrix& m);

/// One minimal-degree witness for each condition kind that occurs in the
/// chain family. Exact: works on the finite pair-transition graph, so it
/// does not depend on a degree bound.
std::vector<ConditionWitness> detect_conditions(const CoxeterMatrix& m);

/// No chain relation has C1-C4, so involutions, braids and chain relations
/// already form a Groebner-Shirshov basis.
bool gs_guaranteed(const CoxeterMatrix& m);

struct FamilyClassification {
  bool all_at_least_three = false;     // (i)
  bool right_angled = false;           // (ii)
  bool first_commutes_rest_large = false;  // (iii)

  std::vector<std::string> labels() const;
};

FamilyClassification classify_family(const CoxeterMatrix& m);

/// Chains obeying the parity rule (any orientation of each block) that
/// break the order constraints or repeat a pair, up to `max_degree`.
std::vector<Chain> enumerate_unrestricted_chains(const CoxeterMatrix& m, std::size_t max_degree);

enum class CheckStatus { Pass, Fail, Inconclusive };

std::string to_string(CheckStatus s);

struct UnrestrictedChainReport {
  CheckStatus status = CheckStatus::Pass;
  std::size_t checked = 0;
  std::vector<Chain> not_reduced;
  CompletionStatus completion = CompletionStatus::Closed;
};

/// Checks that every unrestricted chain relation up to `max_degree` lies in
/// the ideal, by reducing it against the presentation completed up to
/// `completion_cap`. A zero normal form always proves membership; a nonzero
/// one only refutes it when the completion is closed.
UnrestrictedChainReport verify_unrestricted_chains(const CoxeterMatrix& m, std::size_t max_degree,
                                                   std::size_t completion_cap);

}  // namespace coxgs
