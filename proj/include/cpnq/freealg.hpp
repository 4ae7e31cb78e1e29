#pragma once

// Noncommutative polynomials over Scalar in the one-sided generator
// alphabets, with the deg-lex monomial order used by the rewriting engine.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpnq/scalar.hpp"

namespace cpnq {

enum class LetterKind : uint8_t { E, F };

struct Letter {
  LetterKind kind;
  int index;  // 1..N

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word eword(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx) w.push_back({LetterKind::E, i});
  return w;
}
inline Word fword(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx) w.push_back({LetterKind::F, i});
  return w;
}

// Total order: first by length, then lexicographically with X_1 < X_2 < ...
inline std::strong_ordering deglex_compare(const Word& a, const Word& b) {
  if (a.size() != b.size())
    return a.size() < b.size() ? std::strong_ordering::less
                               : std::strong_ordering::greater;
  for (size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    return deglex_compare(a, b) == std::strong_ordering::less;
  }
};

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += (w[i].kind == LetterKind::E ? "E" : "F");
    s += std::to_string(w[i].index);
  }
  return s;
}

// Sparse noncommutative polynomial; no zero coefficients stored.
class NCPoly {
 public:
  using Map = std::map<Word, Scalar, DeglexLess>;

  NCPoly() = default;
  static NCPoly monomial(Word w, Scalar c = Scalar(1)) {
    NCPoly p;
    if (!c.is_zero()) p.c_.emplace(std::move(w), std::move(c));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const Map& terms() const { return c_; }

  void add_term(const Word& w, const Scalar& c) {
    auto it = c_.find(w);
    if (it == c_.end()) {
      if (!c.is_zero()) c_.emplace(w, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.c_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.c_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) {
    return a.c_ == b.c_;
  }

  NCPoly scaled(const Scalar& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, cc] : c_) r.c_.emplace(w, cc * c);
    return r;
  }

  // Bilinear concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.c_)
      for (const auto& [wb, cb] : b.c_) {
        Word w = wa;
        w.insert(w.end(), wb.begin(), wb.end());
        r.add_term(w, ca * cb);
      }
    return r;
  }

  // The deg-lex largest monomial (leading term).
  const Word& lead_word() const {
    if (c_.empty()) throw std::logic_error("lead_word of zero polynomial");
    return c_.rbegin()->first;
  }
  const Scalar& lead_coeff() const {
    if (c_.empty()) throw std::logic_error("lead_coeff of zero polynomial");
    return c_.rbegin()->second;
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    bool first = true;
    // Render from the leading term down.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!first) s += " + ";
      first = false;
      s += "(" + it->second.to_string() + ")*" + word_to_string(it->first);
    }
    return s;
  }

 private:
  Map c_;
};

}  // namespace cpnq
