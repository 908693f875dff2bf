#include <map>
#include <queue>
#include <tuple>

#include "coxgs/coxeter.hpp"

namespace coxgs {

std::string to_string(ConditionKind k) {
  switch (k) {
    case ConditionKind::C1: return "C1";
    case ConditionKind::C2: return "C2";
    case ConditionKind::C3: return "C3";
    case ConditionKind::C4: return "C4";
  }
  return "unknown";
}

namespace {

std::size_t head_len(const Block& b, const CoxeterMatrix& m) {
  return static_cast<std::size_t>(block_order(b, m) - 1);
}

bool order_is(Generator s, Generator t, const CoxeterMatrix& m, int value) {
  return s != t && m.order(s, t) == value;
}

// x_i s_{i+1} ... s_{l+1}
Word letters_from(const Chain& c, std::size_t i, std::size_t l, const CoxeterMatrix& m) {
  std::vector<Generator> out{block_last(c[i], m)};
  for (std::size_t j = i + 1; j <= l + 1; ++j) out.push_back(c[j].s);
  return Word(std::move(out));
}

// Clause (b) shared by C1, C2 and C4.
bool single_letters_below(const Chain& c, std::size_t from, std::size_t l,
                          const CoxeterMatrix& m) {
  for (std::size_t j = from; j <= l; ++j) {
    if (head_len(c[j], m) != 1 || !rhd(c[l + 1].s, c[j].s, m)) return false;
  }
  return true;
}

bool c3_holds(const Chain& c, std::size_t i, std::size_t l, const CoxeterMatrix& m) {
  if (head_len(c[i], m) < 2 || block_order(c[i], m) % 2 != 0) return false;
  for (std::size_t j = i + 1; j <= l + 1; ++j) {
    if (head_len(c[j], m) != 1) return false;
  }
  const Generator x = block_last(c[i], m);
  const Generator top = c[i + 1].partner;
  const Word tail = letters_from(c, i, l, m);
  for (std::size_t mm = i + 1; mm <= l + 1; ++mm) {
    const Generator s = c[mm].s;
    if (!rhd(top, s, m) || !rhd(s, x, m)) continue;
    bool dominated = true;
    for (std::size_t n = i + 1; n + 2 <= mm && dominated; ++n) dominated = rhd(s, c[n].s, m);
    if (!dominated) continue;
    const Word lhs = Word{top.index} * tail;
    const Word rhs = Word{s.index, top.index} * tail.prefix(tail.size() - 1);
    if (match_chain_relation(lhs, rhs, m)) return true;
  }
  return false;
}

}  // namespace

bool satisfies_condition(ConditionKind kind, const Chain& c, std::size_t i, std::size_t l,
                         const CoxeterMatrix& m) {
  if (i > l || l + 1 >= c.size()) return false;
  const Generator x = block_last(c[i], m);
  const Generator last = c[l + 1].s;
  switch (kind) {
    case ConditionKind::C1:
      return head_len(c[i], m) >= 2 && head_len(c[l + 1], m) >= 2 && rhd(x, last, m) &&
             single_letters_below(c, i + 1, l, m);
    case ConditionKind::C2:
    case ConditionKind::C4: {
      if (i == l || head_len(c[i], m) <= 2 || head_len(c[i + 1], m) != 1) return false;
      const Generator next = c[i + 1].s;
      const bool order_ok = kind == ConditionKind::C2 ? next < x : x < next;
      return x == last && order_ok && order_is(x, next, m, 3) &&
             single_letters_below(c, i + 2, l, m);
    }
    case ConditionKind::C3:
      return c3_holds(c, i, l, m);
  }
  return false;
}

namespace {

struct Reach {
  std::size_t weight;  // total head length of the path
  std::vector<Block> path;
};

// Minimal-weight path from an initial block to every reachable block.
std::map<Block, Reach> shortest_paths(const CoxeterMatrix& m) {
  using Entry = std::tuple<std::size_t, std::vector<Block>>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (int i = 1; i <= m.rank(); ++i) {
    for (int j = 1; j < i; ++j) {
      const Block b{Generator{i}, Generator{j}};
      if (m.finite(b.s, b.partner)) heap.emplace(head_len(b, m), std::vector<Block>{b});
    }
  }
  std::map<Block, Reach> best;
  while (!heap.empty()) {
    auto [weight, path] = heap.top();
    heap.pop();
    const Block node = path.back();
    if (best.count(node)) continue;
    best.emplace(node, Reach{weight, path});
    const Generator p = next_partner(node.s, node.partner, m);
    for (int c = 1; c < p.index; ++c) {
      const Block nb{Generator{c}, p};
      if (!m.finite(nb.s, p) || std::minmax(nb.s, p) == std::minmax(node.s, node.partner)) {
        continue;
      }
      if (best.count(nb)) continue;
      auto next = path;
      next.push_back(nb);
      heap.emplace(weight + head_len(nb, m), std::move(next));
    }
  }
  return best;
}

std::vector<Block> successors_of(const Block& b, const CoxeterMatrix& m) {
  std::vector<Block> out;
  const Generator p = next_partner(b.s, b.partner, m);
  for (int c = 1; c < p.index; ++c) {
    const Block nb{Generator{c}, p};
    if (!m.finite(nb.s, p) || std::minmax(nb.s, p) == std::minmax(b.s, b.partner)) continue;
    out.push_back(nb);
  }
  return out;
}

Word witness_subword(ConditionKind kind, const Chain& c, std::size_t i, std::size_t l,
                     const CoxeterMatrix& m) {
  const Word tail = letters_from(c, i, l, m);
  if (kind == ConditionKind::C3 || kind == ConditionKind::C4) {
    return Word{c[i + 1].partner.index} * tail;
  }
  return tail;
}

}  // namespace

std::vector<ConditionWitness> detect_conditions(const CoxeterMatrix& m) {
  // Each kind reduces to its minimal configuration: i = l for C1/C3 (two
  // blocks), i = l-1 for C2/C4 (three blocks). Such a configuration occurs
  // in some chain iff its first block is reachable from an initial block.
  const auto reach = shortest_paths(m);
  std::map<ConditionKind, std::pair<std::size_t, ConditionWitness>> found;

  auto offer = [&](ConditionKind kind, const Chain& c, std::size_t i, std::size_t l) {
    const std::size_t degree = relation_degree(c, m);
    auto it = found.find(kind);
    if (it != found.end()) {
      const auto& [d, w] = it->second;
      if (std::tie(d, w.chain, w.i) <= std::tie(degree, c, i)) return;
    }
    ConditionWitness w{kind, c, i, l, witness_subword(kind, c, i, l, m)};
    found.insert_or_assign(kind, std::make_pair(degree, std::move(w)));
  };

  for (const auto& [node, r] : reach) {
    const std::size_t i = r.path.size() - 1;
    for (const Block& next : successors_of(node, m)) {
      Chain two{r.path};
      two.blocks.push_back(next);
      for (ConditionKind kind : {ConditionKind::C1, ConditionKind::C3}) {
        if (satisfies_condition(kind, two, i, i, m)) offer(kind, two, i, i);
      }
      for (const Block& after : successors_of(next, m)) {
        Chain three = two;
        three.blocks.push_back(after);
        for (ConditionKind kind : {ConditionKind::C2, ConditionKind::C4}) {
          if (satisfies_condition(kind, three, i, i + 1, m)) offer(kind, three, i, i + 1);
        }
      }
    }
  }

  std::vector<ConditionWitness> out;
  for (auto& [kind, entry] : found) out.push_back(std::move(entry.second));
  return out;
}

bool gs_guaranteed(const CoxeterMatrix& m) { return detect_conditions(m).empty(); }

}  // namespace coxgs
