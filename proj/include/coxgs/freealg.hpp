#pragma once

// Words over the ordered alphabet s1 < s2 < ... < sn, the deg-lex order on
// them, and noncommutative polynomials with exact rational coefficients.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxgs {

using Rational = boost::multiprecision::cpp_rational;

/// Generator s<index>; generators are totally ordered by index.
struct Generator {
  int index = 0;

  constexpr auto operator<=>(const Generator&) const = default;
};

std::string to_string(Generator g);

/// Immutable word in the free monoid. The empty word is the identity "e".
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Generator> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> indices);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Generator operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Generator> letters() const { return letters_; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix(std::size_t len) const { return subword(size() - len, len); }

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Generator> letters_;
};

/// Deg-lex comparison: shorter words are smaller, equal lengths compare
/// lexicographically by generator index.
std::strong_ordering compare_deglex(const Word& u, const Word& v);

struct DegLexLess {
  bool operator()(const Word& u, const Word& v) const { return compare_deglex(u, v) < 0; }
};

struct DegLexGreater {
  bool operator()(const Word& u, const Word& v) const { return compare_deglex(u, v) > 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Start offsets of every (possibly overlapping) occurrence of `pattern`.
/// Throws std::invalid_argument on an empty pattern.
std::vector<std::size_t> find_occurrences(const Word& u, const Word& pattern);

/// True when `pattern` occurs in `u` at offset `pos`.
bool occurs_at(const Word& u, const Word& pattern, std::size_t pos);

std::string to_string(const Word& w);

/// Parses "s1 s2 s1", "s1s2s1" or "e". Throws std::invalid_argument on malformed
/// input. When `rank` is positive, indices above it are rejected.
Word parse_word(std::string_view text, int rank = 0);

struct Term {
  Word word;
  Rational coeff;
};

/// Element of the free associative algebra over Q. Terms are kept in
/// descending deg-lex order with no zero coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Word, Rational, DegLexGreater>;

  Polynomial() = default;
  Polynomial(const Word& w) { terms_.emplace(w, Rational(1)); }  // NOLINT
  Polynomial(const Word& w, const Rational& c);

  /// lhs - rhs as a binomial.
  static Polynomial binomial(const Word& lhs, const Word& rhs);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of `w`, zero when absent.
  Rational coefficient(const Word& w) const;

  /// Throws std::domain_error("no leading term") on the zero polynomial.
  Term leading_term() const;
  const Word& leading_word() const;

  bool is_monic() const;

  void add_term(const Word& w, const Rational& c);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

/// f scaled so that its leading coefficient is 1. Throws on zero input.
Polynomial normalize_monic(const Polynomial& f);

/// f + c*g with exact cancellation.
Polynomial combine(const Polynomial& f, const Rational& c, const Polynomial& g);

/// a*f*b: every support word u becomes a u b.
Polynomial sandwich(const Word& a, const Polynomial& f, const Word& b);

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& c);
/// "c1*W1 + c2*W2 ..." with terms in descending deg-lex order, e.g.
/// "1*s2 s1 + -1/2*s1"; the zero polynomial prints as "0".
std::string to_string(const Polynomial& f);
/// A single unit term prints as its bare word, anything else as to_string.
std::string to_display(const Polynomial& f);

}  // namespace coxgs
