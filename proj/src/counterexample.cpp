#include <algorithm>
#include <limits>

#include "coxgs/cli.hpp"

namespace coxgs {

namespace {

// alt(s, t, n): the alternating word s t s ... of length n.
Word alt(int s, int t, std::size_t n) { return alternating_word(Generator{s}, Generator{t}, n); }

RewriteRule rel(const Word& lhs, const Word& rhs, RuleSource source) {
  return RewriteRule::binomial(lhs, rhs, source);
}

std::vector<Word> sorted_leading_words(const std::vector<RewriteRule>& rules) {
  std::vector<Word> out;
  for (const auto& r : rules) out.push_back(r.lhs);
  std::sort(out.begin(), out.end(), DegLexLess{});
  return out;
}

std::string join_words(const std::vector<Word>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += "; ";
    out += to_string(w);
  }
  return out.empty() ? "none" : out;
}

bool same_rules(std::vector<RewriteRule> got, std::vector<RewriteRule> want) {
  auto by_lhs = [](const RewriteRule& x, const RewriteRule& y) {
    return compare_deglex(x.lhs, y.lhs) < 0;
  };
  std::sort(got.begin(), got.end(), by_lhs);
  std::sort(want.begin(), want.end(), by_lhs);
  return std::equal(got.begin(), got.end(), want.begin(), want.end(),
                    [](const RewriteRule& x, const RewriteRule& y) { return x.same_polynomial(y); });
}

}  // namespace

CoxeterMatrix counterexample_matrix() {
  return CoxeterMatrix(4).with_order(1, 3, 3).with_order(1, 4, 2).with_order(3, 4, 5);
}

std::vector<RewriteRule> counterexample_braids() {
  return {
      rel(Word{4, 1}, Word{1, 4}, RuleSource::Braid),
      rel(Word{3, 1, 3}, Word{1, 3, 1}, RuleSource::Braid),
      rel(alt(4, 3, 5), alt(3, 4, 5), RuleSource::Braid),
  };
}

std::vector<RewriteRule> counterexample_chains() {
  return {
      rel(alt(4, 3, 4) * alt(1, 4, 2), alt(3, 4, 5) * alt(1, 4, 1), RuleSource::Chain),
      rel(alt(4, 3, 4) * alt(1, 4, 1) * alt(3, 4, 5),
          alt(3, 4, 5) * alt(1, 4, 1) * alt(3, 4, 4), RuleSource::Chain),
      rel(alt(4, 3, 4) * alt(1, 4, 1) * alt(3, 4, 4) * alt(1, 3, 3),
          alt(3, 4, 5) * alt(1, 4, 1) * alt(3, 4, 4) * alt(1, 3, 2), RuleSource::Chain),
  };
}

std::vector<RewriteRule> counterexample_refined() {
  const Word middle{1, 4, 3, 1};
  return {
      rel(alt(4, 3, 4) * alt(1, 4, 2), alt(3, 4, 5) * alt(1, 4, 1), RuleSource::Derived),
      rel(alt(4, 3, 2) * middle * alt(4, 3, 4), alt(3, 4, 5) * alt(1, 4, 1) * alt(3, 4, 4),
          RuleSource::Derived),
      rel(alt(4, 3, 2) * middle * alt(4, 3, 2) * Word{1, 4} * alt(3, 1, 2),
          alt(3, 4, 5) * alt(1, 4, 1) * alt(3, 4, 4) * alt(1, 3, 2), RuleSource::Derived),
  };
}

bool CounterexampleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

CounterexampleReport verify_counterexample(std::size_t max_degree) {
  CounterexampleReport out;
  const CoxeterMatrix m = counterexample_matrix();

  // The chain family of this matrix is finite, so a generous bound yields
  // all of it.
  const auto full = coxeter_relations(m, 64);
  {
    SubCheck c{"generated-relations", false, ""};
    const bool braids_ok = same_rules(full.braids, counterexample_braids());
    const bool chains_ok = !full.chains_infinite && same_rules(full.chains, counterexample_chains());
    c.passed = braids_ok && chains_ok;
    c.detail = std::to_string(full.involutions.size()) + " involutions, " +
               std::to_string(full.braids.size()) + " braids" + (braids_ok ? "" : " (mismatch)") +
               ", " + std::to_string(full.chains.size()) + " chain relations" +
               (chains_ok ? "" : " (mismatch)");
    out.checks.push_back(std::move(c));
  }

  const RuleSystem presentation = full.system();
  {
    SubCheck c{"nontrivial-composition", false, "every composition reduces to zero"};
    for (const auto& rep :
         all_compositions(presentation, std::numeric_limits<std::size_t>::max())) {
      if (rep.trivial) continue;
      c.passed = true;
      c.detail = to_string(rep.kind) + " of " + to_string(presentation.rule(rep.f)) + " and " +
                 to_string(presentation.rule(rep.g)) + " at " + to_string(rep.w) +
                 " leaves " + to_display(rep.remainder);
      break;
    }
    out.checks.push_back(std::move(c));
  }

  const auto completed = complete_presentation(m, max_degree);
  out.completion = completed.status;
  {
    SubCheck c{"completion-closed", completed.status == CompletionStatus::Closed, ""};
    c.detail = to_string(completed.status) + " at degree " + std::to_string(max_degree) + ", " +
               std::to_string(completed.stats.rules_added) + " rules added, " +
               std::to_string(completed.stats.ambiguities_skipped) + " ambiguities skipped";
    out.checks.push_back(std::move(c));
  }

  {
    const RuleSystem reduced = interreduce(completed.system);
    std::vector<RewriteRule> expected = full.involutions;
    for (const auto& r : counterexample_braids()) expected.push_back(r);
    for (const auto& r : counterexample_refined()) expected.push_back(r);
    const auto got = sorted_leading_words(reduced.rules());
    const auto want = sorted_leading_words(expected);
    SubCheck c{"basis-leading-words", got == want, ""};
    c.detail = c.passed ? std::to_string(got.size()) + " leading words match"
                        : "got " + join_words(got) + " / expected " + join_words(want);
    out.checks.push_back(std::move(c));
  }

  {
    SubCheck c{"pre-gs-derivation", true, ""};
    std::size_t reached = 0;
    for (const auto& target : counterexample_refined()) {
      bool found = false;
      for (RuleId id = 0; id < presentation.size() && !found; ++id) {
        const RewriteRule& source = presentation.rule(id);
        if (source.source != RuleSource::Chain || source.lhs.size() != target.lhs.size()) continue;
        found = elw_reaches(source, presentation.without(id), target.polynomial());
      }
      if (found) {
        ++reached;
      } else {
        c.passed = false;
        c.detail += (c.detail.empty() ? "not reached: " : "; ") + to_string(target);
      }
    }
    if (c.passed) c.detail = std::to_string(reached) + " refined relations reached";
    out.checks.push_back(std::move(c));
  }
  return out;
}

}  // namespace coxgs
