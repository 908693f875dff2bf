#include <algorithm>
#include <queue>
#include <tuple>

#include "coxgs/rewrite.hpp"

namespace coxgs {

std::string to_string(CompletionStatus s) {
  return s == CompletionStatus::Closed ? "closed" : "truncated";
}

namespace {

struct PendingAmbiguity {
  Ambiguity amb;
  CompositionKind kind;
  RuleId f;
  RuleId g;
};

// Ascending (|w|, deg-lex w, f, g, kind, |a|).
struct LaterFirst {
  bool operator()(const PendingAmbiguity& x, const PendingAmbiguity& y) const {
    auto c = compare_deglex(x.amb.w, y.amb.w);
    if (c != 0) return c > 0;
    return std::make_tuple(x.f, x.g, x.kind, x.amb.a.size()) >
           std::make_tuple(y.f, y.g, y.kind, y.amb.a.size());
  }
};

class AmbiguityQueue {
 public:
  explicit AmbiguityQueue(std::size_t cap) : cap_(cap) {}

  void push(CompositionKind kind, RuleId f, RuleId g, Ambiguity amb) {
    if (amb.w.size() > cap_) {
      ++skipped_;
      return;
    }
    heap_.push(PendingAmbiguity{std::move(amb), kind, f, g});
  }

  // Every ambiguity between rule `id` and rules already in `system`,
  // including `id` with itself.
  void add_pairs_for(const RuleSystem& system, RuleId id) {
    const Word& lhs = system.rule(id).lhs;
    for (std::size_t t = 1; t < lhs.size(); ++t) {
      for (RuleId g : system.rules_with_prefix(lhs, lhs.size() - t)) {
        const Word& glhs = system.rule(g).lhs;
        push(CompositionKind::Intersection, id, g,
             Ambiguity{lhs * glhs.suffix(glhs.size() - t), lhs.prefix(lhs.size() - t),
                       glhs.suffix(glhs.size() - t)});
      }
      for (RuleId f : system.rules_with_suffix(lhs, t)) {
        if (f == id) continue;
        const Word& flhs = system.rule(f).lhs;
        push(CompositionKind::Intersection, f, id,
             Ambiguity{flhs * lhs.suffix(lhs.size() - t), flhs.prefix(flhs.size() - t),
                       lhs.suffix(lhs.size() - t)});
      }
    }
    for (const Match& m : system.all_matches(lhs)) {
      if (m.rule == id) continue;
      const Word& glhs = system.rule(m.rule).lhs;
      push(CompositionKind::Inclusion, id, m.rule,
           Ambiguity{lhs, lhs.prefix(m.pos), lhs.suffix(lhs.size() - m.pos - glhs.size())});
    }
    for (RuleId f = 0; f < system.size(); ++f) {
      if (f == id) continue;
      const Word& flhs = system.rule(f).lhs;
      // Equal leading words were already paired through all_matches above.
      if (flhs.size() <= lhs.size()) continue;
      for (auto& amb : enumerate_inclusion_ambiguities(flhs, lhs)) {
        push(CompositionKind::Inclusion, f, id, std::move(amb));
      }
    }
    for (const Match& m : system.all_matches(lhs)) {
      if (m.rule == id || system.rule(m.rule).lhs.size() != lhs.size()) continue;
      push(CompositionKind::Inclusion, m.rule, id, Ambiguity{lhs, Word(), Word()});
    }
  }

  bool empty() const { return heap_.empty(); }
  PendingAmbiguity pop() {
    PendingAmbiguity top = heap_.top();
    heap_.pop();
    return top;
  }
  std::size_t skipped() const { return skipped_; }

 private:
  std::size_t cap_;
  std::size_t skipped_ = 0;
  std::priority_queue<PendingAmbiguity, std::vector<PendingAmbiguity>, LaterFirst> heap_;
};

}  // namespace

CompletionOutcome shirshov_complete(const RuleSystem& input, std::size_t max_degree,
                                    const CompletionOptions& opts) {
  if (input.max_lhs_length() > max_degree) {
    throw std::invalid_argument("max degree " + std::to_string(max_degree) +
                                " is below the longest leading word (" +
                                std::to_string(input.max_lhs_length()) + ")");
  }
  CompletionOutcome out;
  out.max_degree = max_degree;
  AmbiguityQueue queue(max_degree);

  for (const RewriteRule& r : input.rules()) {
    if (auto id = out.system.insert(r)) queue.add_pairs_for(out.system, *id);
  }

  while (!queue.empty()) {
    PendingAmbiguity next = queue.pop();
    CompositionReport rep;
    rep.kind = next.kind;
    rep.f = next.f;
    rep.g = next.g;
    rep.w = next.amb.w;
    rep.raw = composition(out.system.rule(next.f), out.system.rule(next.g), next.amb, next.kind);
    rep.remainder = normal_form(rep.raw, out.system, opts.reduce);
    rep.trivial = rep.remainder.is_zero();
    ++out.stats.pairs_processed;
    if (opts.observer) opts.observer(rep, out.system);
    if (rep.trivial) continue;

    auto rule = RewriteRule::from_polynomial(rep.remainder, RuleSource::Derived,
                                             out.stats.pairs_processed);
    if (auto id = out.system.insert(std::move(rule))) {
      ++out.stats.rules_added;
      queue.add_pairs_for(out.system, *id);
    }
  }

  out.stats.ambiguities_skipped = queue.skipped();
  out.status = queue.skipped() == 0 ? CompletionStatus::Closed : CompletionStatus::Truncated;
  return out;
}

RuleSystem interreduce(const RuleSystem& input, const ReduceOptions& opts) {
  // Worklist ascending by lhs: each rule is reduced against the survivors
  // kept so far; a new survivor may make older ones reducible, which are
  // then pushed back for another pass.
  auto later_first = [](const RewriteRule& x, const RewriteRule& y) {
    return compare_deglex(x.lhs, y.lhs) > 0;
  };
  std::priority_queue<RewriteRule, std::vector<RewriteRule>, decltype(later_first)> work(
      later_first);
  for (const auto& r : input.rules()) work.push(r);

  std::vector<RewriteRule> kept;
  while (!work.empty()) {
    RewriteRule r = work.top();
    work.pop();
    RuleSystem current(kept);
    Polynomial p = normal_form(r.polynomial(), current, opts);
    if (p.is_zero()) continue;
    RewriteRule fresh = p.leading_word() == r.lhs && p == r.polynomial()
                            ? r
                            : RewriteRule::from_polynomial(p, r.source, r.origin);
    std::vector<RewriteRule> still;
    for (auto& k : kept) {
      if (find_occurrences(k.lhs, fresh.lhs).empty()) {
        still.push_back(std::move(k));
      } else {
        work.push(std::move(k));
      }
    }
    still.push_back(std::move(fresh));
    kept = std::move(still);
  }

  std::sort(kept.begin(), kept.end(), [](const RewriteRule& x, const RewriteRule& y) {
    return compare_deglex(x.lhs, y.lhs) < 0;
  });
  RuleSystem lhs_only(kept);
  std::vector<RewriteRule> reduced;
  reduced.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    RuleSystem others = lhs_only.without(i);
    reduced.emplace_back(kept[i].lhs, normal_form(kept[i].tail, others, opts), kept[i].source,
                         kept[i].origin);
  }
  return RuleSystem(reduced);
}

void for_each_irr_word(const RuleSystem& system, int rank, std::size_t max_len,
                       const std::function<bool(const Word&)>& visit) {
  std::vector<Word> level{Word()};
  if (!visit(level.front())) return;
  for (std::size_t len = 1; len <= max_len && !level.empty(); ++len) {
    std::vector<Word> next;
    for (const Word& u : level) {
      for (int g = 1; g <= rank; ++g) {
        Word w = u * Word{g};
        if (system.has_suffix_match(w)) continue;
        if (!visit(w)) return;
        next.push_back(std::move(w));
      }
    }
    level = std::move(next);
  }
}

std::vector<Word> irr_words(const RuleSystem& system, int rank, std::size_t max_len) {
  std::vector<Word> out;
  for_each_irr_word(system, rank, max_len, [&](const Word& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

std::vector<std::size_t> count_irr_words(const RuleSystem& system, int rank,
                                         std::size_t max_len) {
  std::vector<std::size_t> counts(max_len + 1, 0);
  for_each_irr_word(system, rank, max_len, [&](const Word& w) {
    ++counts[w.size()];
    return true;
  });
  return counts;
}

}  // namespace coxgs
