#include <doctest.h>

#include <random>

#include "coxgs/cli.hpp"
#include "coxgs/rewrite.hpp"
#include "oracles.hpp"

using namespace coxgs;

namespace {

RewriteRule rule(const Word& lhs, const Word& rhs, RuleSource src = RuleSource::Braid) {
  return RewriteRule::binomial(lhs, rhs, src);
}

RuleSystem a2_system() {
  return RuleSystem({rule(Word{1, 1}, Word(), RuleSource::Involution),
                     rule(Word{2, 2}, Word(), RuleSource::Involution),
                     rule(Word{2, 1, 2}, Word{1, 2, 1})});
}

Polynomial bin(const Word& a, const Word& b) { return Polynomial::binomial(a, b); }

// Every rule of `from` normal-forms to zero against `against`.
bool generated_by(const RuleSystem& from, const RuleSystem& against) {
  for (const auto& r : from.rules()) {
    if (!is_trivial(r.polynomial(), against)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rewrite rules validate their orientation") {
  CHECK_NOTHROW(rule(Word{2, 1}, Word{1, 2}));
  CHECK_THROWS_AS(rule(Word{1, 2}, Word{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(rule(Word{1}, Word{1, 1}), std::invalid_argument);

  Polynomial p(Word{1}, Rational(3));
  p.add_term(Word{2, 1}, Rational(-2));
  const auto r = RewriteRule::from_polynomial(p, RuleSource::Derived, 7);
  CHECK(r.lhs == Word{2, 1});
  CHECK(r.tail == Polynomial(Word{1}, Rational(3, 2)));
  CHECK(r.polynomial().is_monic());
  CHECK(to_string(rule(Word{2, 1, 2}, Word{1, 2, 1})) == "s2 s1 s2 = s1 s2 s1");
  CHECK(to_string(rule(Word{1, 1}, Word())) == "s1 s1 = e");
}

TEST_CASE("rule system matching agrees with a naive scan") {
  const auto m = counterexample_matrix();
  const RuleSystem sys = coxeter_relations(m, 24).system();
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const Word w = oracle::random_word(rng, 4, 14);
    std::optional<Match> naive;
    for (std::size_t pos = 0; pos < w.size() && !naive; ++pos) {
      for (RuleId id = 0; id < sys.size(); ++id) {
        const Word& lhs = sys.rule(id).lhs;
        if (lhs.size() > w.size() - pos || w.subword(pos, lhs.size()) != lhs) continue;
        if (!naive || sys.rule(naive->rule).lhs.size() < lhs.size()) naive = Match{id, pos};
      }
    }
    const auto got = sys.leftmost_match(w);
    REQUIRE(got.has_value() == naive.has_value());
    if (got) {
      CHECK(got->pos == naive->pos);
      CHECK(got->rule == naive->rule);
    }
    bool suffix = false;
    for (const auto& lhs : sys.leading_words()) {
      suffix = suffix || (lhs.size() <= w.size() && w.suffix(lhs.size()) == lhs);
    }
    CHECK(sys.has_suffix_match(w) == suffix);
  }
}

TEST_CASE("rule system skips identical polynomials and orders canonically") {
  RuleSystem sys;
  CHECK(sys.insert(rule(Word{2, 1, 2}, Word{1, 2, 1})).has_value());
  CHECK(sys.insert(rule(Word{1, 1}, Word(), RuleSource::Involution)).has_value());
  CHECK_FALSE(sys.insert(rule(Word{2, 1, 2}, Word{1, 2, 1})).has_value());
  CHECK(sys.insert(rule(Word{2, 1, 2}, Word{1})).has_value());
  CHECK(sys.size() == 3);
  CHECK(sys.leading_words() == std::vector<Word>{Word{1, 1}, Word{2, 1, 2}, Word{2, 1, 2}});
  CHECK(sys.canonical_order() == std::vector<RuleId>{1, 0, 2});
}

TEST_CASE("elw_step") {
  CHECK(elw_step(bin(Word{1, 1, 2}, Word{3}), rule(Word{1, 1}, Word())) == bin(Word{2}, Word{3}));
  CHECK(elw_step(bin(Word{2, 1, 2}, Word{1, 2, 1}), rule(Word{2, 1, 2}, Word{1, 2, 1})).is_zero());
  CHECK(elw_step(bin(Word{4, 4, 3, 4, 3, 4}, Word{3, 4, 3, 4}), rule(Word{4, 4}, Word()))
            .is_zero());
  CHECK_THROWS_WITH_AS(elw_step(bin(Word{1, 2}, Word{1}), rule(Word{2, 2}, Word())),
                       "rule not applicable", std::invalid_argument);
}

TEST_CASE("elw_step strictly lowers the leading word") {
  const RuleSystem sys = a2_system();
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial f(oracle::random_word(rng, 2, 9));
    f.add_term(oracle::random_word(rng, 2, 9), Rational(-1));
    if (f.is_zero()) continue;
    const auto m = sys.leftmost_match(f.leading_word());
    if (!m) continue;
    const Polynomial g = elw_step(f, sys.rule(m->rule));
    if (!g.is_zero()) CHECK(compare_deglex(g.leading_word(), f.leading_word()) < 0);
  }
}

TEST_CASE("normal_form") {
  const RuleSystem a2 = a2_system();
  CHECK(normal_form(Polynomial(Word{1, 1}), RuleSystem({rule(Word{1, 1}, Word())})) ==
        Polynomial(Word()));
  CHECK(normal_form(Polynomial(Word{2, 1, 2, 1, 2}), a2) == Polynomial(Word{1}));
  CHECK(normal_form(Polynomial(Word{1, 2}), a2) == Polynomial(Word{1, 2}));
  CHECK(normal_form(Polynomial(), a2).is_zero());

  const auto traced = normal_form_traced(Polynomial(Word{2, 1, 2, 1, 2}), a2);
  REQUIRE(traced.trace.size() == 3);
  CHECK(traced.trace[0].reduced == Word{2, 1, 2, 1, 2});
  CHECK(traced.trace[1].reduced == Word{1, 2, 1, 1, 2});
  CHECK(traced.trace[2].reduced == Word{1, 2, 2});

  ReduceOptions tight;
  tight.step_budget = 2;
  CHECK_THROWS_WITH_AS(normal_form(Polynomial(Word{2, 1, 2, 1, 2}), a2, tight),
                       "step budget exceeded", StepBudgetExceeded);
}

TEST_CASE("normal forms contain no leading word") {
  const RuleSystem sys = coxeter_relations(counterexample_matrix(), 24).system();
  std::mt19937 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const Polynomial nf = normal_form(Polynomial(oracle::random_word(rng, 4, 16)), sys);
    for (const auto& [w, c] : nf.terms()) CHECK_FALSE(sys.is_reducible(w));
  }
}

TEST_CASE("intersection ambiguities") {
  const auto braid = rule(Word{2, 1, 2}, Word{1, 2, 1});
  auto self = enumerate_intersection_ambiguities(braid, braid);
  REQUIRE(self.size() == 1);
  CHECK(self[0].w == Word{2, 1, 2, 1, 2});
  CHECK(self[0].a == Word{2, 1});
  CHECK(self[0].b == Word{1, 2});

  const auto inv = rule(Word{1, 1}, Word());
  auto ii = enumerate_intersection_ambiguities(inv, inv);
  REQUIRE(ii.size() == 1);
  CHECK(ii[0].w == Word{1, 1, 1});

  CHECK(enumerate_intersection_ambiguities(Word{1, 2}, Word{3, 4}).empty());
  // Containment is not an intersection.
  CHECK(enumerate_intersection_ambiguities(Word{1, 2}, Word{1, 2}).empty());
}

TEST_CASE("inclusion ambiguities") {
  auto inc = enumerate_inclusion_ambiguities(Word{4, 3, 4, 3, 1, 4}, Word{1, 4});
  REQUIRE(inc.size() == 1);
  CHECK(inc[0].a == Word{4, 3, 4, 3});
  CHECK(inc[0].b == Word());
  CHECK(enumerate_inclusion_ambiguities(Word{1, 2}, Word{1, 2, 1}).empty());
  auto ones = enumerate_inclusion_ambiguities(Word{1, 1, 1}, Word{1, 1});
  REQUIRE(ones.size() == 2);
  CHECK(ones[0].a == Word());
  CHECK(ones[0].b == Word{1});
  CHECK(ones[1].a == Word{1});
  CHECK(ones[1].b == Word());
}

TEST_CASE("compositions") {
  const auto braid = rule(Word{2, 1, 2}, Word{1, 2, 1});
  const auto amb = enumerate_intersection_ambiguities(braid, braid).at(0);
  Polynomial want(Word{2, 1, 1, 2, 1});
  want.add_term(Word{1, 2, 1, 1, 2}, Rational(-1));
  const Polynomial raw = composition(braid, braid, amb, CompositionKind::Intersection);
  CHECK(raw == want);
  for (const auto& [w, c] : raw.terms()) CHECK(compare_deglex(w, amb.w) < 0);
  CHECK(is_trivial(raw, a2_system()));

  const auto inv = rule(Word{1, 1}, Word());
  CHECK(composition(inv, inv, enumerate_intersection_ambiguities(inv, inv).at(0),
                    CompositionKind::Intersection)
            .is_zero());

  CHECK_THROWS_AS(composition(braid, braid, Ambiguity{Word{2, 1, 2}, Word{1}, Word()},
                              CompositionKind::Intersection),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      composition(braid, inv, Ambiguity{Word{2, 1, 2}, Word(), Word()}, CompositionKind::Inclusion),
      std::invalid_argument);

  // A chain relation of degree 10 against s3s1s3 = s1s3s1: the remainder
  // is nonzero and leads with the refined leading word.
  const auto chains = counterexample_chains();
  const auto braids = counterexample_braids();
  const auto& f = chains[1];
  const auto& g = braids[1];
  const auto inc = enumerate_inclusion_ambiguities(f, g);
  REQUIRE(inc.size() == 1);
  const Polynomial comp = composition(f, g, inc[0], CompositionKind::Inclusion);
  const RuleSystem presentation = coxeter_relations(counterexample_matrix(), 24).system();
  const Polynomial rem = normal_form(comp, presentation);
  REQUIRE_FALSE(rem.is_zero());
  CHECK(rem.leading_word() == Word{4, 3, 1, 4, 3, 1, 4, 3, 4, 3});
}

TEST_CASE("is_trivial") {
  const RuleSystem a2 = a2_system();
  CHECK(is_trivial(Polynomial(), a2));
  CHECK_FALSE(is_trivial(Polynomial(Word{1}), a2));
}

TEST_CASE("derive_via_elw") {
  const auto m = counterexample_matrix();
  const RuleSystem presentation = coxeter_relations(m, 24).system();
  const auto chains = counterexample_chains();
  const auto refined = counterexample_refined();
  for (RuleId id = 0; id < presentation.size(); ++id) {
    if (!presentation.rule(id).same_polynomial(chains[1])) continue;
    const auto d = derive_via_elw(presentation.rule(id), presentation.without(id));
    CHECK_FALSE(d.trace.empty());
    CHECK(elw_reaches(presentation.rule(id), presentation.without(id), refined[1].polynomial()));
  }

  const auto untouched = rule(Word{2, 1}, Word{1, 2});
  const auto same = derive_via_elw(untouched, RuleSystem({rule(Word{3, 3}, Word())}));
  CHECK(same.trace.empty());
  CHECK(same.result == untouched.polynomial());

  const auto redundant = rule(Word{1, 1, 2}, Word{2});
  CHECK(derive_via_elw(redundant, RuleSystem({rule(Word{1, 1}, Word())})).result.is_zero());
}

TEST_CASE("all_compositions covers every ordered pair") {
  const RuleSystem a2 = a2_system();
  const auto reps = all_compositions(a2, 100);
  // Hand count of overlaps: s1s1|s1s1, s2s2|s2s2, s2s2|s2s1s2, s2s1s2|s2s2,
  // s2s1s2|s2s1s2 (one self overlap of length 1); no inclusions.
  CHECK(reps.size() == 5);
  for (const auto& r : reps) {
    CHECK(r.kind == CompositionKind::Intersection);
    CHECK(r.trivial);
  }
  CHECK(all_compositions(a2, 3).size() == 2);
}

TEST_CASE("completion of small systems") {
  const auto a2 = shirshov_complete(a2_system(), 10);
  CHECK(a2.status == CompletionStatus::Closed);
  CHECK(a2.stats.rules_added == 0);

  const auto empty = shirshov_complete(RuleSystem(), 5);
  CHECK(empty.status == CompletionStatus::Closed);
  CHECK(empty.system.empty());

  CHECK_THROWS_AS(shirshov_complete(a2_system(), 2), std::invalid_argument);

  // s2 s1 = s1 and s1 s1 = e force s2 = e: completion must discover it.
  const RuleSystem collapse({rule(Word{2, 1}, Word{1}), rule(Word{1, 1}, Word())});
  const auto c = shirshov_complete(collapse, 6);
  CHECK(c.status == CompletionStatus::Closed);
  CHECK(normal_form(Polynomial(Word{2}), c.system) == Polynomial(Word()));
}

TEST_CASE("truncated completion reports skipped ambiguities") {
  const auto out = shirshov_complete(a2_system(), 4);
  CHECK(out.status == CompletionStatus::Truncated);
  CHECK(out.stats.ambiguities_skipped > 0);
}

TEST_CASE("completion processes ambiguities in ascending order") {
  std::vector<Word> seen;
  CompletionOptions opts;
  opts.observer = [&](const CompositionReport& r, const RuleSystem&) { seen.push_back(r.w); };
  shirshov_complete(coxeter_relations(counterexample_matrix(), 24).system(), 24, opts);
  REQUIRE_FALSE(seen.empty());
  for (std::size_t i = 0; i + 1 < seen.size(); ++i) CHECK(compare_deglex(seen[i], seen[i + 1]) <= 0);
}

TEST_CASE("completion preserves the ideal and is confluent") {
  struct Case {
    CoxeterMatrix m;
    std::vector<oracle::Perm> rep;  // faithful permutation action, if known
  };
  const std::vector<Case> cases = {
      {counterexample_matrix(), {}},
      {CoxeterMatrix(3).with_order(1, 2, 3).with_order(2, 3, 3).with_order(1, 3, 2),
       oracle::adjacent_transpositions(3)},
      {CoxeterMatrix(3).with_order(1, 2, 4).with_order(2, 3, 3).with_order(1, 3, 2), {}},
      {CoxeterMatrix(2).with_order(1, 2, 6), oracle::dihedral_reflections(6)},
  };
  std::mt19937 rng(31);
  for (const auto& [m, rep] : cases) {
    const RuleSystem input = coxeter_relations(m, 24).system();
    const auto out = shirshov_complete(input, 24);
    REQUIRE(out.status == CompletionStatus::Closed);
    CHECK(generated_by(input, out.system));
    CHECK(generated_by(out.system, out.system));
    // Added rules hold in the group: both sides act identically.
    if (!rep.empty()) {
      for (const auto& r : out.system.rules()) {
        REQUIRE(r.tail.term_count() == 1);
        CHECK(oracle::evaluate(r.lhs, rep) == oracle::evaluate(r.tail.leading_word(), rep));
      }
    }
    for (int trial = 0; trial < 100; ++trial) {
      const Polynomial w(oracle::random_word(rng, m.rank(), 12));
      const Polynomial want = normal_form(w, out.system);
      for (int s = 0; s < 3; ++s) CHECK(oracle::random_normal_form(w, out.system, rng) == want);
    }
    // Two-sided multiples of input rules lie in the ideal.
    for (const auto& r : input.rules()) {
      const Word a = oracle::random_word(rng, m.rank(), 3);
      const Word b = oracle::random_word(rng, m.rank(), 3);
      CHECK(is_trivial(sandwich(a, r.polynomial(), b), out.system));
    }
  }
}

TEST_CASE("interreduction") {
  const auto m = counterexample_matrix();
  const auto out = shirshov_complete(coxeter_relations(m, 24).system(), 24);
  const RuleSystem reduced = interreduce(out.system);
  CHECK(generated_by(out.system, reduced));
  CHECK(generated_by(reduced, out.system));
  const auto lhs = reduced.leading_words();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (std::size_t j = 0; j < lhs.size(); ++j) {
      if (i != j) CHECK_FALSE(oracle::contains_subword(lhs[i], lhs[j]));
    }
  }
  for (RuleId id = 0; id < reduced.size(); ++id) {
    const RuleSystem others = reduced.without(id);
    for (const auto& [w, c] : reduced.rule(id).tail.terms()) CHECK_FALSE(others.is_reducible(w));
  }

  // A rule whose lhs contains another's disappears.
  const RuleSystem redundant({rule(Word{1, 1}, Word()), rule(Word{1, 1, 2}, Word{2})});
  CHECK(interreduce(redundant).size() == 1);
}

TEST_CASE("irreducible words") {
  const auto a2 = shirshov_complete(a2_system(), 10);
  const auto words = irr_words(a2.system, 2, 5);
  CHECK(words.size() == 6);
  for (std::size_t i = 0; i + 1 < words.size(); ++i) {
    CHECK(compare_deglex(words[i], words[i + 1]) < 0);
  }
  std::size_t visited = 0;
  for_each_irr_word(a2.system, 2, 5, [&](const Word&) { return ++visited < 3; });
  CHECK(visited == 3);

  std::mt19937 rng(37);
  for (const auto& m : {counterexample_matrix(),
                        CoxeterMatrix(3).with_order(1, 2, 3).with_order(2, 3, 4)}) {
    const auto out = shirshov_complete(coxeter_relations(m, 24).system(), 24);
    const std::size_t max_len = m.rank() == 4 ? 6 : 7;
    CHECK(count_irr_words(out.system, m.rank(), max_len) ==
          oracle::avoiding_counts(out.system.leading_words(), m.rank(), max_len));
  }
}
