#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "coxgs/coxeter.hpp"

namespace coxgs {

namespace {

std::string entry_text(const CoxeterMatrix::Entry& e) { return e ? std::to_string(*e) : "inf"; }

std::string position(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(int rank) : rank_(rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  entries_.assign(static_cast<std::size_t>(rank * rank), std::nullopt);
  for (int i = 0; i < rank; ++i) entries_[static_cast<std::size_t>(i * rank + i)] = 1;
}

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<Entry> entries)
    : rank_(rank), entries_(std::move(entries)) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (entries_.size() != static_cast<std::size_t>(rank * rank)) {
    throw std::invalid_argument("expected " + std::to_string(rank * rank) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (int i = 1; i <= rank; ++i) {
    if (at(i, i) != 1) {
      throw std::invalid_argument("diagonal entry " + position(i, i) + " must be 1, got " +
                                  entry_text(at(i, i)));
    }
    for (int j = 1; j <= rank; ++j) {
      if (i == j) continue;
      if (at(i, j) != at(j, i)) {
        throw std::invalid_argument("matrix is not symmetric at " + position(i, j));
      }
      if (at(i, j) && *at(i, j) < 2) {
        throw std::invalid_argument("off-diagonal entry " + position(i, j) +
                                    " must be at least 2 or infinite, got " +
                                    std::to_string(*at(i, j)));
      }
    }
  }
}

CoxeterMatrix CoxeterMatrix::parse(std::string_view text) {
  std::vector<std::string> tokens;
  {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
  }
  if (tokens.empty()) throw std::invalid_argument("empty matrix file");

  auto parse_int = [](const std::string& tok, int& value) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return ec == std::errc() && ptr == tok.data() + tok.size();
  };

  int n = 0;
  if (!parse_int(tokens[0], n) || n < 1) {
    throw std::invalid_argument("first line must be a positive rank, got '" + tokens[0] + "'");
  }
  const auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (tokens.size() - 1 != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " entries for rank " +
                                std::to_string(n) + ", got " + std::to_string(tokens.size() - 1));
  }
  std::vector<Entry> entries;
  entries.reserve(expected);
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    const std::string& tok = tokens[k];
    if (tok == "inf" || tok == "0") {
      entries.emplace_back(std::nullopt);
      continue;
    }
    int value = 0;
    if (!parse_int(tok, value) || value < 0) {
      throw std::invalid_argument("bad matrix entry '" + tok + "'");
    }
    entries.emplace_back(value);
  }
  return CoxeterMatrix(n, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

CoxeterMatrix::Entry CoxeterMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > rank_ || j > rank_) throw std::out_of_range("generator out of range");
  return entries_[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))];
}

CoxeterMatrix CoxeterMatrix::with_order(int i, int j, Entry value) const {
  auto entries = entries_;
  entries[static_cast<std::size_t>((i - 1) * rank_ + (j - 1))] = value;
  entries[static_cast<std::size_t>((j - 1) * rank_ + (i - 1))] = value;
  return CoxeterMatrix(rank_, std::move(entries));
}

std::string CoxeterMatrix::to_text() const {
  std::string out = std::to_string(rank_) + "\n";
  for (int i = 1; i <= rank_; ++i) {
    for (int j = 1; j <= rank_; ++j) {
      if (j > 1) out += ' ';
      out += entry_text(at(i, j));
    }
    out += '\n';
  }
  return out;
}

Word alternating_word(Generator s, Generator t, std::size_t len) {
  std::vector<Generator> letters;
  letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) letters.push_back(i % 2 == 0 ? s : t);
  return Word(std::move(letters));
}

bool rhd(Generator s, Generator t, const CoxeterMatrix& m) {
  return s > t && m.order(s, t) == 2;
}

Generator next_partner(Generator s, Generator t, const CoxeterMatrix& m) {
  auto order = m.order(s, t);
  if (!order) throw std::invalid_argument("infinite order has no alternating relation");
  return *order % 2 == 0 ? t : s;
}

std::vector<RewriteRule> involution_relations(const CoxeterMatrix& m) {
  std::vector<RewriteRule> out;
  for (int i = 1; i <= m.rank(); ++i) {
    out.push_back(RewriteRule::binomial(Word{i, i}, Word(), RuleSource::Involution));
  }
  return out;
}

std::vector<RewriteRule> braid_relations(const CoxeterMatrix& m) {
  std::vector<RewriteRule> out;
  for (int i = 1; i <= m.rank(); ++i) {
    for (int j = 1; j < i; ++j) {
      auto order = m.at(i, j);
      if (!order) continue;
      const Generator s{i};
      const Generator t{j};
      const auto len = static_cast<std::size_t>(*order);
      out.push_back(RewriteRule::binomial(alternating_word(s, t, len), alternating_word(t, s, len),
                                          RuleSource::Braid));
    }
  }
  std::sort(out.begin(), out.end(), [](const RewriteRule& x, const RewriteRule& y) {
    return compare_deglex(x.lhs, y.lhs) < 0;
  });
  return out;
}

std::string to_string(const Chain& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += "(" + to_string(c[i].s) + "," + to_string(c[i].partner) + ")";
  }
  return out + "]";
}

int block_order(const Block& b, const CoxeterMatrix& m) {
  auto order = m.order(b.s, b.partner);
  if (!order || b.s == b.partner) throw std::invalid_argument("block has no finite order");
  return *order;
}

Word block_head(const Block& b, const CoxeterMatrix& m) {
  return alternating_word(b.s, b.partner, static_cast<std::size_t>(block_order(b, m) - 1));
}

Generator block_last(const Block& b, const CoxeterMatrix& m) {
  return (block_order(b, m) - 1) % 2 == 1 ? b.s : b.partner;
}

std::optional<std::string> chain_violation(const Chain& c, const CoxeterMatrix& m) {
  if (c.size() < 2) return "a chain needs at least two blocks";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Block& b = c[i];
    if (b.s.index < 1 || b.s.index > m.rank() || b.partner.index < 1 ||
        b.partner.index > m.rank()) {
      return "block " + std::to_string(i) + " uses a generator outside the alphabet";
    }
    if (b.s == b.partner || !m.finite(b.s, b.partner)) {
      return "block " + std::to_string(i) + " has no finite order";
    }
    if (i == 0 && !(b.s > b.partner)) return "block 0 must have s > s'";
    if (i > 0 && !(b.s < b.partner)) return "block " + std::to_string(i) + " must have s < s'";
    if (i + 1 < c.size()) {
      const Block& nb = c[i + 1];
      if (nb.partner != next_partner(b.s, b.partner, m)) {
        return "block " + std::to_string(i + 1) + " breaks the parity rule";
      }
      if (std::minmax(b.s, b.partner) == std::minmax(nb.s, nb.partner)) {
        return "blocks " + std::to_string(i) + " and " + std::to_string(i + 1) +
               " use the same pair";
      }
    }
  }
  return std::nullopt;
}

std::size_t relation_degree(const Chain& c, const CoxeterMatrix& m) {
  std::size_t deg = 1;
  for (const Block& b : c.blocks) deg += static_cast<std::size_t>(block_order(b, m) - 1);
  return deg;
}

std::pair<Word, Word> chain_relation_words(const Chain& c, const CoxeterMatrix& m) {
  if (c.size() < 2) throw std::invalid_argument("a chain needs at least two blocks");
  const std::size_t last = c.size() - 1;
  Word lhs;
  Word rhs = alternating_word(c[0].partner, c[0].s,
                              static_cast<std::size_t>(block_order(c[0], m)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int order = block_order(c[i], m);
    if (i + 1 < c.size() && c[i + 1].partner != next_partner(c[i].s, c[i].partner, m)) {
      throw std::invalid_argument("chain breaks the parity rule at block " +
                                  std::to_string(i + 1));
    }
    if (i == last) {
      lhs = lhs * alternating_word(c[i].s, c[i].partner, static_cast<std::size_t>(order));
    } else {
      lhs = lhs * block_head(c[i], m);
    }
    if (i > 0) rhs = rhs * block_head(c[i], m);
  }
  return {lhs, rhs};
}

RewriteRule relation_from_chain(const Chain& c, const CoxeterMatrix& m) {
  if (auto why = chain_violation(c, m)) throw std::invalid_argument("invalid chain: " + *why);
  auto [lhs, rhs] = chain_relation_words(c, m);
  return RewriteRule::binomial(lhs, rhs, RuleSource::Chain);
}

namespace {

// Admissible successors of a block: partner fixed by parity, first letter
// below the partner with finite order, and a different pair.
std::vector<Block> successors(const Block& b, const CoxeterMatrix& m) {
  std::vector<Block> out;
  const Generator p = next_partner(b.s, b.partner, m);
  for (int c = 1; c < p.index; ++c) {
    const Generator s{c};
    if (!m.finite(s, p)) continue;
    if (std::minmax(s, p) == std::minmax(b.s, b.partner)) continue;
    out.push_back(Block{s, p});
  }
  return out;
}

std::vector<Block> initial_blocks(const CoxeterMatrix& m) {
  std::vector<Block> out;
  for (int i = 1; i <= m.rank(); ++i) {
    for (int j = 1; j < i; ++j) {
      if (m.at(i, j)) out.push_back(Block{Generator{i}, Generator{j}});
    }
  }
  return out;
}

bool has_reachable_cycle(const CoxeterMatrix& m) {
  // Colors: 0 unvisited, 1 on stack, 2 done. Keyed by (s, partner).
  const int n = m.rank();
  std::vector<int> color(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  auto key = [n](const Block& b) {
    return static_cast<std::size_t>(b.s.index * (n + 1) + b.partner.index);
  };
  std::function<bool(const Block&)> visit = [&](const Block& b) {
    color[key(b)] = 1;
    for (const Block& nb : successors(b, m)) {
      if (color[key(nb)] == 1) return true;
      if (color[key(nb)] == 0 && visit(nb)) return true;
    }
    color[key(b)] = 2;
    return false;
  };
  for (const Block& b : initial_blocks(m)) {
    if (color[key(b)] == 0 && visit(b)) return true;
  }
  return false;
}

}  // namespace

ChainEnumeration enumerate_chains(const CoxeterMatrix& m, std::size_t max_degree) {
  if (max_degree < 2) throw std::invalid_argument("max relation degree must be at least 2");
  ChainEnumeration out;
  out.infinite = has_reachable_cycle(m);

  Chain current;
  // `head_sum` is the total length of the (m-1) heads of the current blocks;
  // a chain ending at the last block has degree head_sum + 1.
  std::function<void(std::size_t)> extend = [&](std::size_t head_sum) {
    for (const Block& nb : successors(current.blocks.back(), m)) {
      const std::size_t next_sum = head_sum + static_cast<std::size_t>(block_order(nb, m) - 1);
      if (next_sum + 1 > max_degree) continue;
      current.blocks.push_back(nb);
      out.chains.push_back(current);
      extend(next_sum);
      current.blocks.pop_back();
    }
  };
  for (const Block& b : initial_blocks(m)) {
    current.blocks = {b};
    extend(static_cast<std::size_t>(block_order(b, m) - 1));
  }
  std::sort(out.chains.begin(), out.chains.end(), [](const Chain& x, const Chain& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.blocks < y.blocks;
  });
  return out;
}

std::optional<Chain> match_chain_relation(const Word& lhs, const Word& rhs,
                                          const CoxeterMatrix& m) {
  if (lhs.size() < 3 || lhs.size() != rhs.size()) return std::nullopt;
  Chain current;
  std::optional<Chain> found;

  auto matches_at = [&](std::size_t pos, const Word& piece) {
    return pos + piece.size() <= lhs.size() && occurs_at(lhs, piece, pos);
  };

  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (found || pos >= lhs.size()) return;
    const Generator p = next_partner(current.blocks.back().s, current.blocks.back().partner, m);
    const Generator s = lhs[pos];
    if (!(s < p) || !m.finite(s, p)) return;
    const Block& prev = current.blocks.back();
    if (std::minmax(s, p) == std::minmax(prev.s, prev.partner)) return;
    const Block nb{s, p};
    current.blocks.push_back(nb);
    const auto order = static_cast<std::size_t>(block_order(nb, m));
    if (pos + order == lhs.size() && matches_at(pos, alternating_word(s, p, order))) {
      if (chain_relation_words(current, m).second == rhs) found = current;
    }
    if (!found && matches_at(pos, block_head(nb, m))) extend(pos + order - 1);
    current.blocks.pop_back();
  };

  const Generator s0 = lhs[0];
  for (int t = 1; t < s0.index && !found; ++t) {
    const Block b{s0, Generator{t}};
    if (!m.finite(b.s, b.partner)) continue;
    const Word head = block_head(b, m);
    if (!matches_at(0, head)) continue;
    current.blocks = {b};
    extend(head.size());
  }
  return found;
}

std::vector<RewriteRule> CoxeterRelations::all() const {
  std::vector<RewriteRule> out = involutions;
  out.insert(out.end(), braids.begin(), braids.end());
  out.insert(out.end(), chains.begin(), chains.end());
  return out;
}

CoxeterRelations coxeter_relations(const CoxeterMatrix& m, std::size_t max_degree) {
  CoxeterRelations out;
  out.involutions = involution_relations(m);
  out.braids = braid_relations(m);
  auto chains = enumerate_chains(m, std::max<std::size_t>(max_degree, 2));
  out.chains_infinite = chains.infinite;
  for (const Chain& c : chains.chains) out.chains.push_back(relation_from_chain(c, m));
  return out;
}

CompletionOutcome complete_presentation(const CoxeterMatrix& m, std::size_t max_degree,
                                        const CompletionOptions& opts) {
  const auto relations = coxeter_relations(m, max_degree);
  std::vector<RewriteRule> kept;
  std::size_t dropped = 0;
  for (auto& r : relations.all()) {
    if (r.lhs.size() <= max_degree) {
      kept.push_back(std::move(r));
    } else {
      ++dropped;
    }
  }
  auto out = shirshov_complete(RuleSystem(kept), max_degree, opts);
  if (dropped > 0) {
    out.stats.ambiguities_skipped += dropped;
    out.status = CompletionStatus::Truncated;
  }
  return out;
}

FamilyClassification classify_family(const CoxeterMatrix& m) {
  FamilyClassification out{true, true, true};
  auto large = [](const CoxeterMatrix::Entry& e) { return !e || *e >= 3; };
  for (int i = 1; i <= m.rank(); ++i) {
    for (int j = 1; j < i; ++j) {
      const auto e = m.at(i, j);
      if (!large(e)) out.all_at_least_three = false;
      if (e && *e != 2) out.right_angled = false;
      if (j == 1 ? e != 2 : !large(e)) out.first_commutes_rest_large = false;
    }
  }
  return out;
}

std::vector<std::string> FamilyClassification::labels() const {
  std::vector<std::string> out;
  if (all_at_least_three) out.emplace_back("i");
  if (right_angled) out.emplace_back("ii");
  if (first_commutes_rest_large) out.emplace_back("iii");
  return out;
}

std::vector<Chain> enumerate_unrestricted_chains(const CoxeterMatrix& m, std::size_t max_degree) {
  std::vector<Chain> out;
  Chain current;
  std::function<void(std::size_t)> extend = [&](std::size_t head_sum) {
    const Block& last = current.blocks.back();
    const Generator p = next_partner(last.s, last.partner, m);
    for (int c = 1; c <= m.rank(); ++c) {
      const Block nb{Generator{c}, p};
      if (nb.s == p || !m.finite(nb.s, p)) continue;
      const std::size_t next_sum = head_sum + static_cast<std::size_t>(block_order(nb, m) - 1);
      if (next_sum + 1 > max_degree) continue;
      current.blocks.push_back(nb);
      if (chain_violation(current, m)) out.push_back(current);
      extend(next_sum);
      current.blocks.pop_back();
    }
  };
  for (int i = 1; i <= m.rank(); ++i) {
    for (int j = 1; j <= m.rank(); ++j) {
      const Block b{Generator{i}, Generator{j}};
      if (i == j || !m.finite(b.s, b.partner)) continue;
      current.blocks = {b};
      extend(static_cast<std::size_t>(block_order(b, m) - 1));
    }
  }
  std::sort(out.begin(), out.end(), [](const Chain& x, const Chain& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.blocks < y.blocks;
  });
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

UnrestrictedChainReport verify_unrestricted_chains(const CoxeterMatrix& m, std::size_t max_degree,
                                                   std::size_t completion_cap) {
  UnrestrictedChainReport out;
  const auto completed = complete_presentation(m, completion_cap);
  out.completion = completed.status;
  for (const Chain& c : enumerate_unrestricted_chains(m, max_degree)) {
    auto [lhs, rhs] = chain_relation_words(c, m);
    ++out.checked;
    if (!is_trivial(Polynomial::binomial(lhs, rhs), completed.system)) out.not_reduced.push_back(c);
  }
  if (out.not_reduced.empty()) {
    out.status = CheckStatus::Pass;
  } else {
    out.status = completed.status == CompletionStatus::Closed ? CheckStatus::Fail
                                                              : CheckStatus::Inconclusive;
  }
  return out;
}

}  // namespace coxgs
