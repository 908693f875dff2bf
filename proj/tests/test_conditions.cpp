#include <doctest.h>

#include <random>

#include "coxgs/cli.hpp"
#include "coxgs/coxeter.hpp"
#include "oracles.hpp"

using namespace coxgs;

namespace {

constexpr ConditionKind kKinds[] = {ConditionKind::C1, ConditionKind::C2, ConditionKind::C3,
                                    ConditionKind::C4};

std::vector<oracle::Pair> as_pairs(const Chain& c) {
  std::vector<oracle::Pair> out;
  for (const Block& b : c.blocks) out.push_back({b.s.index, b.partner.index});
  return out;
}

Chain chain(std::initializer_list<std::pair<int, int>> blocks) {
  Chain c;
  for (auto [s, t] : blocks) c.blocks.push_back(Block{Generator{s}, Generator{t}});
  return c;
}

oracle::RelationSet relation_set(const CoxeterMatrix& m, std::size_t max_degree) {
  oracle::RelationSet out;
  for (const auto& c : oracle::all_chains(m, max_degree)) out.insert(oracle::chain_words(c, m));
  return out;
}

std::set<ConditionKind> kinds_of(const std::vector<ConditionWitness>& ws) {
  std::set<ConditionKind> out;
  for (const auto& w : ws) out.insert(w.kind);
  return out;
}

std::vector<CoxeterMatrix> random_matrices(unsigned seed, int count, int max_rank,
                                           const std::vector<int>& values) {
  std::mt19937 rng(seed);
  std::vector<CoxeterMatrix> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(oracle::random_matrix(rng, 3 + i % (max_rank - 2), values));
  }
  return out;
}

}  // namespace

TEST_CASE("counterexample witnesses") {
  const auto m = counterexample_matrix();
  const auto ws = detect_conditions(m);
  REQUIRE(ws.size() == 2);

  CHECK(ws[0].kind == ConditionKind::C1);
  CHECK(ws[0].chain == chain({{4, 3}, {1, 4}, {3, 4}, {1, 3}}));
  CHECK(ws[0].i == 2);
  CHECK(ws[0].l == 2);
  CHECK(relation_degree(ws[0].chain, m) == 12);
  CHECK(ws[0].subword == Word{4, 1});

  CHECK(ws[1].kind == ConditionKind::C2);
  CHECK(ws[1].chain == chain({{4, 3}, {1, 4}, {3, 4}}));
  CHECK(ws[1].i == 0);
  CHECK(ws[1].l == 1);
  CHECK(relation_degree(ws[1].chain, m) == 10);
  CHECK(ws[1].subword == Word{3, 1, 3});

  CHECK_FALSE(gs_guaranteed(m));
  CHECK(to_string(ConditionKind::C3) == "C3");
}

TEST_CASE("witness subwords occur in the chain's leading word") {
  std::vector<CoxeterMatrix> ms = random_matrices(61, 40, 4, {2, 3, 4, 5, 6, 0});
  ms.push_back(counterexample_matrix());
  for (const auto& m : ms) {
    for (const auto& w : detect_conditions(m)) {
      const auto lhs = relation_from_chain(w.chain, m).lhs;
      CHECK_FALSE(find_occurrences(lhs, w.subword).empty());
    }
  }
}

TEST_CASE("satisfies_condition agrees with the literal clauses") {
  std::vector<CoxeterMatrix> ms = random_matrices(67, 30, 4, {2, 3, 4, 5, 6, 0});
  ms.push_back(counterexample_matrix());
  for (const auto& m : ms) {
    const std::size_t bound = 18;
    const auto relations = relation_set(m, bound);
    for (const Chain& c : enumerate_chains(m, bound).chains) {
      const auto pairs = as_pairs(c);
      for (std::size_t l = 0; l + 1 < c.size(); ++l) {
        for (std::size_t i = 0; i <= l; ++i) {
          for (ConditionKind k : kKinds) {
            CHECK(satisfies_condition(k, c, i, l, m) ==
                  oracle::literal_condition(k, pairs, i, l, m, relations));
          }
        }
      }
      CHECK_FALSE(satisfies_condition(ConditionKind::C1, c, 1, 0, m));
      CHECK_FALSE(satisfies_condition(ConditionKind::C1, c, 0, c.size() - 1, m));
    }
  }
}

TEST_CASE("detected witnesses satisfy the literal clauses") {
  std::vector<CoxeterMatrix> ms = random_matrices(71, 60, 5, {2, 3, 4, 5, 6, 0});
  ms.push_back(counterexample_matrix());
  for (const auto& m : ms) {
    for (const auto& w : detect_conditions(m)) {
      CHECK_FALSE(chain_violation(w.chain, m));
      const auto relations = relation_set(m, relation_degree(w.chain, m));
      CHECK(oracle::literal_condition(w.kind, as_pairs(w.chain), w.i, w.l, m, relations));
    }
  }
}

TEST_CASE("detection finds every kind a brute-force scan finds") {
  const auto ms = random_matrices(73, 40, 4, {2, 3, 4, 5, 6, 0});
  std::size_t with_conditions = 0;
  for (const auto& m : ms) {
    const auto ws = detect_conditions(m);
    std::size_t bound = 20;
    for (const auto& w : ws) bound = std::max(bound, relation_degree(w.chain, m));
    const auto scanned = oracle::scan_conditions(m, bound);
    CHECK(kinds_of(ws) == scanned);
    if (!ws.empty()) ++with_conditions;

    // Minimality: no witness of that kind has a smaller degree.
    for (const auto& w : ws) {
      const std::size_t d = relation_degree(w.chain, m);
      if (d <= 2) continue;
      CHECK(oracle::scan_conditions(m, d - 1).count(w.kind) == 0);
    }
  }
  CHECK(with_conditions > 0);
  CHECK(with_conditions < ms.size());
}

TEST_CASE("named families have no conditions") {
  std::mt19937 rng(79);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto large = oracle::random_matrix(rng, n, {3, 4, 5, 6, 7, 0});
      REQUIRE(classify_family(large).all_at_least_three);
      CHECK(detect_conditions(large).empty());

      const auto right = oracle::random_matrix(rng, n, {2, 0});
      REQUIRE(classify_family(right).right_angled);
      CHECK(detect_conditions(right).empty());

      CoxeterMatrix third = oracle::random_matrix(rng, n, {3, 4, 5, 6, 7, 0});
      for (int j = 2; j <= n; ++j) third = third.with_order(1, j, 2);
      REQUIRE(classify_family(third).first_commutes_rest_large);
      CHECK(detect_conditions(third).empty());
    }
  }
}

TEST_CASE("named families complete without new rules") {
  std::size_t checked = 0;
  const std::vector<int> values = {2, 3, 4, 5, 6};
  for (int a : values) {
    for (int b : values) {
      for (int c : values) {
        const auto m = CoxeterMatrix(3).with_order(1, 2, a).with_order(1, 3, b).with_order(2, 3, c);
        if (classify_family(m).labels().empty()) continue;
        REQUIRE(gs_guaranteed(m));
        ++checked;
        CHECK(complete_presentation(m, 16).stats.rules_added == 0);
      }
    }
  }
  CHECK(checked >= 10);
}

TEST_CASE("a guaranteed matrix outside the named families still needs a rule") {
  // B3 with s1 in the middle: the braid s3 s1 s3 s1 overlaps the chain
  // relation s3 s1 s2 s1 in two letters.
  const auto m = CoxeterMatrix(3).with_order(1, 2, 3).with_order(1, 3, 4).with_order(2, 3, 2);
  REQUIRE(gs_guaranteed(m));
  const auto rel = coxeter_relations(m, 16);
  REQUIRE(rel.chains.size() == 1);
  CHECK(rel.chains[0].lhs == Word{3, 1, 2, 1});

  const auto out = complete_presentation(m, 16);
  CHECK(out.status == CompletionStatus::Closed);
  CHECK(out.stats.rules_added == 1);
  bool found = false;
  for (const auto& r : out.system.rules()) {
    if (r.source != RuleSource::Derived) continue;
    found = true;
    CHECK(r.lhs == Word{3, 1, 2, 3, 1, 2});
    CHECK(r.tail.leading_word() == Word{1, 3, 1, 2, 3, 1});
  }
  CHECK(found);
  CHECK(count_irr_words(out.system, 3, 12).back() == 0);
}

TEST_CASE("the counterexample completion adds rules") {
  const auto out = complete_presentation(counterexample_matrix(), 24);
  CHECK(out.status == CompletionStatus::Closed);
  CHECK(out.stats.rules_added > 0);
}
