#include "coxgs/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace coxgs {

std::string to_string(Generator g) { return "s" + std::to_string(g.index); }

Word::Word(std::initializer_list<int> indices) {
  letters_.reserve(indices.size());
  for (int i : indices) letters_.push_back(Generator{i});
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) throw std::out_of_range("subword out of range");
  return Word(std::vector<Generator>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                     letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator*(const Word& u, const Word& v) {
  std::vector<Generator> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.letters_.begin(), u.letters_.end());
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return Word(std::move(out));
}

std::strong_ordering compare_deglex(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != v[i]) return u[i] <=> v[i];
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Generator g : w) {
    h ^= static_cast<std::size_t>(g.index);
    h *= 1099511628211ULL;
  }
  return h;
}

bool occurs_at(const Word& u, const Word& pattern, std::size_t pos) {
  if (pos + pattern.size() > u.size()) return false;
  return std::equal(pattern.begin(), pattern.end(), u.begin() + static_cast<std::ptrdiff_t>(pos));
}

std::vector<std::size_t> find_occurrences(const Word& u, const Word& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  std::vector<std::size_t> out;
  if (pattern.size() > u.size()) return out;
  for (std::size_t pos = 0; pos + pattern.size() <= u.size(); ++pos) {
    if (occurs_at(u, pattern, pos)) out.push_back(pos);
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, int rank) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse word '" + std::string(text) + "': " + why);
  };
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  std::size_t first = 0;
  while (first < text.size() && is_space(text[first])) ++first;
  std::size_t last = text.size();
  while (last > first && is_space(text[last - 1])) --last;
  const std::string_view body = text.substr(first, last - first);
  if (body.empty()) fail("empty input");
  if (body == "e") return Word();

  // Letters are s<index>, optionally separated by whitespace: "s1 s2" or "s1s2".
  std::vector<Generator> letters;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (is_space(body[pos])) {
      ++pos;
      continue;
    }
    if (body[pos] != 's') fail("expected 's' at offset " + std::to_string(first + pos));
    const std::size_t digits = ++pos;
    while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(body.data() + digits, body.data() + pos, idx);
    if (pos == digits || ec != std::errc() || idx < 1) {
      fail("bad generator index at offset " + std::to_string(first + digits));
    }
    if (rank > 0 && idx > rank) fail("generator s" + std::to_string(idx) + " outside alphabet");
    letters.push_back(Generator{idx});
  }
  return Word(std::move(letters));
}

Polynomial::Polynomial(const Word& w, const Rational& c) {
  if (c != 0) terms_.emplace(w, c);
}

Polynomial Polynomial::binomial(const Word& lhs, const Word& rhs) {
  Polynomial p(lhs);
  p.add_term(rhs, Rational(-1));
  return p;
}

Rational Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

Term Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("no leading term");
  const auto& [w, c] = *terms_.begin();
  return Term{w, c};
}

const Word& Polynomial::leading_word() const {
  if (terms_.empty()) throw std::domain_error("no leading term");
  return terms_.begin()->first;
}

bool Polynomial::is_monic() const { return !terms_.empty() && terms_.begin()->second == 1; }

void Polynomial::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial normalize_monic(const Polynomial& f) {
  const Rational lead = f.leading_term().coeff;
  if (lead == 1) return f;
  Polynomial out;
  for (const auto& [w, c] : f.terms()) out.add_term(w, c / lead);
  return out;
}

Polynomial combine(const Polynomial& f, const Rational& c, const Polynomial& g) {
  Polynomial out = f;
  if (c == 0) return out;
  for (const auto& [w, d] : g.terms()) out.add_term(w, c * d);
  return out;
}

Polynomial sandwich(const Word& a, const Polynomial& f, const Word& b) {
  if (a.empty() && b.empty()) return f;
  Polynomial out;
  for (const auto& [w, c] : f.terms()) out.add_term(a * w * b, c);
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) { return combine(f, Rational(1), g); }
Polynomial operator-(const Polynomial& f, const Polynomial& g) { return combine(f, Rational(-1), g); }

std::string to_string(const Rational& c) {
  auto num = boost::multiprecision::numerator(c);
  auto den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + to_string(w);
  }
  return out;
}

std::string to_display(const Polynomial& f) {
  if (f.term_count() == 1 && f.leading_term().coeff == 1) return to_string(f.leading_word());
  return to_string(f);
}

}  // namespace coxgs
