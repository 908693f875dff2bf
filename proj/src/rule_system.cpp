#include <algorithm>
#include <numeric>

#include "coxgs/rewrite.hpp"

namespace coxgs {

std::string to_string(RuleSource s) {
  switch (s) {
    case RuleSource::Involution: return "involution";
    case RuleSource::Braid: return "braid";
    case RuleSource::Chain: return "chain";
    case RuleSource::Derived: return "derived";
  }
  return "unknown";
}

RewriteRule::RewriteRule(Word lhs_, Polynomial tail_, RuleSource source_, std::size_t origin_)
    : lhs(std::move(lhs_)), tail(std::move(tail_)), source(source_), origin(origin_) {
  for (const auto& [w, c] : tail.terms()) {
    if (compare_deglex(w, lhs) >= 0) {
      throw std::invalid_argument("rule tail word " + to_string(w) + " is not below lhs " +
                                  to_string(lhs));
    }
  }
}

RewriteRule RewriteRule::from_polynomial(const Polynomial& f, RuleSource source,
                                         std::size_t origin) {
  Polynomial monic = normalize_monic(f);
  Word lead = monic.leading_word();
  Polynomial tail = combine(Polynomial(lead), Rational(-1), monic);
  return RewriteRule(std::move(lead), std::move(tail), source, origin);
}

RewriteRule RewriteRule::binomial(const Word& lhs, const Word& rhs, RuleSource source) {
  return RewriteRule(lhs, Polynomial(rhs), source);
}

Polynomial RewriteRule::polynomial() const {
  return combine(Polynomial(lhs), Rational(-1), tail);
}

std::string rhs_to_string(const RewriteRule& r) {
  return to_display(r.tail);
}

std::string to_string(const RewriteRule& r) { return to_string(r.lhs) + " = " + rhs_to_string(r); }

int RuleSystem::Trie::child(int node, Generator g) const {
  for (auto [letter, next] : nodes[static_cast<std::size_t>(node)].children) {
    if (letter == g.index) return next;
  }
  return -1;
}

int RuleSystem::Trie::child_or_add(int node, Generator g) {
  if (int c = child(node, g); c >= 0) return c;
  int next = static_cast<int>(nodes.size());
  Node fresh;
  fresh.depth = nodes[static_cast<std::size_t>(node)].depth + 1;
  nodes.push_back(std::move(fresh));
  nodes[static_cast<std::size_t>(node)].children.emplace_back(g.index, next);
  return next;
}

void RuleSystem::Trie::collect(int node, std::size_t min_depth, std::vector<RuleId>& out) const {
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    const Node& n = nodes[static_cast<std::size_t>(cur)];
    if (n.depth >= min_depth) out.insert(out.end(), n.terminal.begin(), n.terminal.end());
    for (auto [letter, next] : n.children) stack.push_back(next);
  }
}

RuleSystem::RuleSystem() = default;

RuleSystem::RuleSystem(const std::vector<RewriteRule>& rules) {
  for (const auto& r : rules) insert(r);
}

std::optional<RuleId> RuleSystem::insert(RewriteRule r) {
  if (r.lhs.empty()) throw std::invalid_argument("rule with empty leading word");
  int node = 0;
  for (Generator g : r.lhs) node = forward_.child_or_add(node, g);
  auto& terminal = forward_.nodes[static_cast<std::size_t>(node)].terminal;
  for (RuleId other : terminal) {
    if (rules_[other].same_polynomial(r)) return std::nullopt;
  }
  const RuleId id = rules_.size();
  terminal.push_back(id);

  int rnode = 0;
  for (auto it = r.lhs.letters().rbegin(); it != r.lhs.letters().rend(); ++it) {
    rnode = reversed_.child_or_add(rnode, *it);
  }
  reversed_.nodes[static_cast<std::size_t>(rnode)].terminal.push_back(id);

  max_lhs_ = std::max(max_lhs_, r.lhs.size());
  rules_.push_back(std::move(r));
  return id;
}

std::vector<RuleId> RuleSystem::canonical_order() const {
  std::vector<RuleId> ids(rules_.size());
  std::iota(ids.begin(), ids.end(), RuleId{0});
  std::stable_sort(ids.begin(), ids.end(), [&](RuleId x, RuleId y) {
    return compare_deglex(rules_[x].lhs, rules_[y].lhs) < 0;
  });
  return ids;
}

std::vector<RewriteRule> RuleSystem::rules() const {
  std::vector<RewriteRule> out;
  out.reserve(rules_.size());
  for (RuleId id : canonical_order()) out.push_back(rules_[id]);
  return out;
}

std::vector<Word> RuleSystem::leading_words() const {
  std::vector<Word> out;
  for (RuleId id : canonical_order()) out.push_back(rules_[id].lhs);
  return out;
}

std::optional<Match> RuleSystem::leftmost_match(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int node = 0;
    std::optional<RuleId> best;
    for (std::size_t i = pos; i < w.size(); ++i) {
      node = forward_.child(node, w[i]);
      if (node < 0) break;
      const auto& term = forward_.nodes[static_cast<std::size_t>(node)].terminal;
      if (!term.empty()) best = term.front();
    }
    if (best) return Match{*best, pos};
  }
  return std::nullopt;
}

std::vector<Match> RuleSystem::all_matches(const Word& w) const {
  std::vector<Match> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int node = 0;
    for (std::size_t i = pos; i < w.size(); ++i) {
      node = forward_.child(node, w[i]);
      if (node < 0) break;
      for (RuleId id : forward_.nodes[static_cast<std::size_t>(node)].terminal) {
        out.push_back(Match{id, pos});
      }
    }
  }
  return out;
}

bool RuleSystem::has_suffix_match(const Word& w) const {
  int node = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    node = reversed_.child(node, w[i]);
    if (node < 0) return false;
    if (!reversed_.nodes[static_cast<std::size_t>(node)].terminal.empty()) return true;
  }
  return false;
}

std::vector<RuleId> RuleSystem::rules_with_prefix(const Word& w, std::size_t from) const {
  std::vector<RuleId> out;
  int node = 0;
  for (std::size_t i = from; i < w.size(); ++i) {
    node = forward_.child(node, w[i]);
    if (node < 0) return out;
  }
  forward_.collect(node, w.size() - from + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RuleId> RuleSystem::rules_with_suffix(const Word& w, std::size_t len) const {
  std::vector<RuleId> out;
  int node = 0;
  for (std::size_t i = len; i-- > 0;) {
    node = reversed_.child(node, w[i]);
    if (node < 0) return out;
  }
  reversed_.collect(node, len + 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

RuleSystem RuleSystem::without(RuleId id) const {
  RuleSystem out;
  for (RuleId other = 0; other < rules_.size(); ++other) {
    if (other != id) out.insert(rules_[other]);
  }
  return out;
}

}  // namespace coxgs
