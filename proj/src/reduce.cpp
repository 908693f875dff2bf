#include "coxgs/rewrite.hpp"

namespace coxgs {

Polynomial elw_step(const Polynomial& f, const RewriteRule& r) {
  const Term lead = f.leading_term();
  const auto occ = find_occurrences(lead.word, r.lhs);
  if (occ.empty()) throw std::invalid_argument("rule not applicable");
  const std::size_t pos = occ.front();
  const Word a = lead.word.prefix(pos);
  const Word b = lead.word.subword(pos + r.lhs.size(), lead.word.size() - pos - r.lhs.size());
  return combine(f, -lead.coeff, sandwich(a, r.polynomial(), b));
}

namespace {

template <typename OnStep>
Polynomial reduce_impl(const Polynomial& f, const RuleSystem& system, const ReduceOptions& opts,
                       OnStep&& on_step) {
  Polynomial work = f;
  Polynomial done;
  std::size_t steps = 0;
  while (!work.is_zero()) {
    Term lead = work.leading_term();
    work.add_term(lead.word, -lead.coeff);
    auto m = system.leftmost_match(lead.word);
    if (!m) {
      done.add_term(lead.word, lead.coeff);
      continue;
    }
    if (++steps > opts.step_budget) throw StepBudgetExceeded();
    const RewriteRule& r = system.rule(m->rule);
    const std::size_t tail_len = lead.word.size() - m->pos - r.lhs.size();
    Word a = lead.word.prefix(m->pos);
    Word b = lead.word.suffix(tail_len);
    for (const auto& [w, c] : r.tail.terms()) work.add_term(a * w * b, lead.coeff * c);
    on_step(ElwStep{m->rule, std::move(a), std::move(b), lead.coeff, std::move(lead.word)});
  }
  return done;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const RuleSystem& system, const ReduceOptions& opts) {
  return reduce_impl(f, system, opts, [](ElwStep&&) {});
}

Derivation normal_form_traced(const Polynomial& f, const RuleSystem& system,
                              const ReduceOptions& opts) {
  Derivation d;
  d.result = reduce_impl(f, system, opts, [&](ElwStep&& s) { d.trace.push_back(std::move(s)); });
  return d;
}

bool is_trivial(const Polynomial& h, const RuleSystem& system, const ReduceOptions& opts) {
  return normal_form(h, system, opts).is_zero();
}

Derivation derive_via_elw(const RewriteRule& s, const RuleSystem& others,
                          const ReduceOptions& opts) {
  return normal_form_traced(s.polynomial(), others, opts);
}

bool elw_reaches(const RewriteRule& s, const RuleSystem& others, const Polynomial& target,
                 const ReduceOptions& opts) {
  const Derivation d = derive_via_elw(s, others, opts);
  Polynomial current = s.polynomial();
  if (current == target) return true;
  for (const ElwStep& step : d.trace) {
    current = combine(current, -step.coeff,
                      sandwich(step.a, others.rule(step.rule).polynomial(), step.b));
    if (current == target) return true;
  }
  return false;
}

std::string to_string(CompositionKind k) {
  return k == CompositionKind::Intersection ? "intersection" : "inclusion";
}

std::vector<Ambiguity> enumerate_intersection_ambiguities(const Word& f_lhs, const Word& g_lhs) {
  std::vector<Ambiguity> out;
  const std::size_t max_overlap = std::min(f_lhs.size(), g_lhs.size());
  // Overlap t must leave both a and b nonempty; full containment is inclusion.
  // Largest overlap first, so ambiguities come out in ascending length.
  for (std::size_t t = max_overlap; t-- > 1;) {
    const std::size_t start = f_lhs.size() - t;
    bool ok = true;
    for (std::size_t i = 0; i < t && ok; ++i) ok = f_lhs[start + i] == g_lhs[i];
    if (!ok) continue;
    Word b = g_lhs.suffix(g_lhs.size() - t);
    Word a = f_lhs.prefix(start);
    out.push_back(Ambiguity{f_lhs * b, std::move(a), std::move(b)});
  }
  return out;
}

std::vector<Ambiguity> enumerate_inclusion_ambiguities(const Word& f_lhs, const Word& g_lhs) {
  std::vector<Ambiguity> out;
  if (g_lhs.size() > f_lhs.size() || g_lhs.empty()) return out;
  for (std::size_t pos : find_occurrences(f_lhs, g_lhs)) {
    out.push_back(Ambiguity{f_lhs, f_lhs.prefix(pos),
                            f_lhs.suffix(f_lhs.size() - pos - g_lhs.size())});
  }
  return out;
}

Polynomial composition(const RewriteRule& f, const RewriteRule& g, const Ambiguity& amb,
                       CompositionKind kind) {
  if (kind == CompositionKind::Intersection) {
    if (amb.w != f.lhs * amb.b || amb.w != amb.a * g.lhs ||
        f.lhs.size() + g.lhs.size() <= amb.w.size()) {
      throw std::invalid_argument("inconsistent intersection ambiguity");
    }
    return combine(sandwich(Word(), f.polynomial(), amb.b), Rational(-1),
                   sandwich(amb.a, g.polynomial(), Word()));
  }
  if (amb.w != f.lhs || amb.w != amb.a * g.lhs * amb.b) {
    throw std::invalid_argument("inconsistent inclusion ambiguity");
  }
  return combine(f.polynomial(), Rational(-1), sandwich(amb.a, g.polynomial(), amb.b));
}

std::vector<CompositionReport> all_compositions(const RuleSystem& system, std::size_t max_degree,
                                                const ReduceOptions& opts) {
  std::vector<CompositionReport> out;
  const auto order = system.canonical_order();
  auto record = [&](CompositionKind kind, RuleId f, RuleId g, const Ambiguity& amb) {
    if (amb.w.size() > max_degree) return;
    CompositionReport rep;
    rep.kind = kind;
    rep.f = f;
    rep.g = g;
    rep.w = amb.w;
    rep.raw = composition(system.rule(f), system.rule(g), amb, kind);
    rep.remainder = normal_form(rep.raw, system, opts);
    rep.trivial = rep.remainder.is_zero();
    out.push_back(std::move(rep));
  };
  for (RuleId f : order) {
    for (RuleId g : order) {
      const auto& fr = system.rule(f);
      const auto& gr = system.rule(g);
      for (const auto& amb : enumerate_intersection_ambiguities(fr, gr)) {
        record(CompositionKind::Intersection, f, g, amb);
      }
      if (f == g) continue;
      for (const auto& amb : enumerate_inclusion_ambiguities(fr, gr)) {
        record(CompositionKind::Inclusion, f, g, amb);
      }
    }
  }
  return out;
}

}  // namespace coxgs
