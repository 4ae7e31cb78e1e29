#pragma once

// Exact arithmetic in the coefficient field Q(v), v = q^{1/2}, extended by an
// auxiliary central parameter "s" used for symbolic scaling ratios.  All
// values are ratios of Laurent polynomials with arbitrary-precision rational
// coefficients; there is no floating point anywhere.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cpnq {

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct NonInvertibleError : std::runtime_error {
  explicit NonInvertibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// Laurent polynomial in v (and optionally s), as a sparse coefficient map.
// Invariant: no zero coefficients are stored.
class LaurentPoly {
 public:
  // key = (v exponent, s exponent)
  using Key = std::pair<int, int>;
  using Map = std::map<Key, mpq_class>;

  LaurentPoly() = default;

  static LaurentPoly term(const mpq_class& c, int vexp, int sexp = 0) {
    LaurentPoly p;
    if (c != 0) p.c_[{vexp, sexp}] = c;
    return p;
  }
  static LaurentPoly one() { return term(1, 0); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == Key{0, 0} &&
           c_.begin()->second == 1;
  }
  const Map& coeffs() const { return c_; }

  bool pure_v() const {
    for (const auto& [k, c] : c_)
      if (k.second != 0) return false;
    return true;
  }

  // Uniform s exponent of all terms, or nullopt-like sentinel via bool.
  bool uniform_s(int& sexp) const {
    if (c_.empty()) return false;
    sexp = c_.begin()->first.second;
    for (const auto& [k, c] : c_)
      if (k.second != sexp) return false;
    return true;
  }

  int min_v() const {
    int m = c_.begin()->first.first;
    for (const auto& [k, c] : c_) m = std::min(m, k.first);
    return m;
  }
  int max_v() const {
    int m = c_.begin()->first.first;
    for (const auto& [k, c] : c_) m = std::max(m, k.first);
    return m;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.c_) add_term(k, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.c_)
      for (const auto& [kb, cb] : b.c_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : c_) r.c_[k] = -c;
    return r;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_ == b.c_;
  }
  friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.c_ == b.c_) return std::strong_ordering::equal;
    return a.c_ < b.c_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  }

  LaurentPoly scaled(const mpq_class& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [k, cc] : c_) r.c_[k] = cc * c;
    return r;
  }
  // Multiply exponents: v^dv s^ds shift.
  LaurentPoly shifted(int dv, int ds) const {
    LaurentPoly r;
    for (const auto& [k, c] : c_) r.c_[{k.first + dv, k.second + ds}] = c;
    return r;
  }

  void add_term(const Key& k, const mpq_class& c) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      if (c != 0) c_[k] = c;
    } else {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }

  // Exact rational evaluation at v = v0.  Requires pure_v().
  mpq_class eval(const mpq_class& v0) const {
    mpq_class acc = 0;
    for (const auto& [k, c] : c_) {
      if (k.second != 0)
        throw std::domain_error("eval: polynomial contains the parameter s");
      mpq_class p = 1;
      int e = k.first >= 0 ? k.first : -k.first;
      for (int i = 0; i < e; ++i) p *= v0;
      if (k.first < 0) p = 1 / p;
      acc += c * p;
    }
    return acc;
  }

 private:
  Map c_;
};

namespace detail {

// Dense univariate polynomial over Q, coefficient of v^i at position i.
using UniPoly = std::vector<mpq_class>;

inline void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

// Remainder of a by b (b nonzero).
inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
  uni_trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    uni_trim(a);
  }
  return a;
}

// Exact quotient a / b; asserts exactness.
inline UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
  uni_trim(a);
  UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    uni_trim(a);
  }
  if (!a.empty()) throw std::logic_error("uni_div_exact: inexact division");
  uni_trim(q);
  return q;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    UniPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lc = a.back();
    for (auto& c : a) c /= lc;  // monic
  }
  return a;
}

}  // namespace detail

// Element of the fraction field, kept in a canonical representation:
//   - denominator is a pure-v polynomial with nonzero constant term,
//     integer coefficients of content 1 and positive leading coefficient;
//   - numerator and denominator share no polynomial factor in v.
// Equality of values is therefore representational equality.
class Scalar {
 public:
  Scalar() : num_(), den_(LaurentPoly::one()) {}
  Scalar(int n) : num_(LaurentPoly::term(n, 0)), den_(LaurentPoly::one()) {}
  Scalar(const mpq_class& n)
      : num_(LaurentPoly::term(n, 0)), den_(LaurentPoly::one()) {}
  Scalar(LaurentPoly num, LaurentPoly den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static Scalar v_pow(int k) {
    return Scalar(LaurentPoly::term(1, k), LaurentPoly::one());
  }
  static Scalar q_pow(int k) { return v_pow(2 * k); }
  // The auxiliary parameter (used for symbolic scaling ratios).
  static Scalar s_pow(int k) {
    return Scalar(LaurentPoly::term(1, 0, k), LaurentPoly::one());
  }
  static Scalar s_var() { return s_pow(1); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool pure_v() const { return num_.pure_v(); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend auto operator<=>(const Scalar& a, const Scalar& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  Scalar operator-() const {
    Scalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) {
      Scalar r;
      r.num_ = a.num_ * b.num_;
      r.den_ = LaurentPoly::one();
      return r;
    }
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw NonInvertibleError("division by zero");
    int sexp;
    if (!num_.uniform_s(sexp))
      throw NonInvertibleError(
          "cannot invert a value with a mixed-s numerator");
    // 1 / (s^b * n(v) / d(v)) = s^{-b} d(v) / n(v)
    return Scalar(den_.shifted(0, -sexp), num_.shifted(0, -sexp));
  }

  // Exact evaluation at v = v0 (pure-v values only).
  mpq_class specialize(const mpq_class& v0) const {
    if (v0 == 0) throw PoleError("specialize: v0 must be nonzero");
    mpq_class d = den_.eval(v0);
    if (d == 0) {
      std::ostringstream os;
      os << "specialize: pole at v = " << v0.get_str();
      throw PoleError(os.str());
    }
    return num_.eval(v0) / d;
  }

  std::string to_string() const;

 private:
  void normalize();

  LaurentPoly num_, den_;
};

inline void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one();
    return;
  }
  if (!den_.pure_v())
    throw NonInvertibleError("denominator must be free of the parameter s");
  if (den_.is_zero()) throw NonInvertibleError("zero denominator");
  if (den_.is_one()) return;

  // Shift any v-monomial factor of the denominator into the numerator.
  int dmin = den_.min_v();
  if (dmin != 0) {
    den_ = den_.shifted(-dmin, 0);
    num_ = num_.shifted(-dmin, 0);
  }

  // Collect the denominator and the v-profiles of the numerator's
  // s-components as univariate polynomials, and cancel their gcd.
  auto to_uni = [](const LaurentPoly& p, int shift) {
    detail::UniPoly u;
    for (const auto& [k, c] : p.coeffs()) {
      size_t i = static_cast<size_t>(k.first - shift);
      if (u.size() <= i) u.resize(i + 1, mpq_class(0));
      u[i] = c;
    }
    detail::uni_trim(u);
    return u;
  };

  detail::UniPoly g = to_uni(den_, 0);
  {
    // Group numerator terms by s exponent.
    std::map<int, LaurentPoly> comps;
    for (const auto& [k, c] : num_.coeffs())
      comps[k.second].add_term({k.first, 0}, c);
    for (const auto& [se, comp] : comps) {
      if (g.size() <= 1) break;
      g = detail::uni_gcd(g, to_uni(comp, comp.min_v()));
    }
  }
  if (g.size() > 1) {
    detail::UniPoly d = detail::uni_div_exact(to_uni(den_, 0), g);
    LaurentPoly nden;
    for (size_t i = 0; i < d.size(); ++i)
      nden.add_term({static_cast<int>(i), 0}, d[i]);
    // Divide each s-component of the numerator by g.
    LaurentPoly nnum;
    std::map<int, LaurentPoly> comps;
    for (const auto& [k, c] : num_.coeffs())
      comps[k.second].add_term({k.first, 0}, c);
    for (const auto& [se, comp] : comps) {
      int m = comp.min_v();
      detail::UniPoly quo = detail::uni_div_exact(to_uni(comp, m), g);
      for (size_t i = 0; i < quo.size(); ++i)
        nnum.add_term({static_cast<int>(i) + m, se}, quo[i]);
    }
    num_ = std::move(nnum);
    den_ = std::move(nden);
  }

  // Normalize the denominator: integer coefficients, content 1, positive
  // leading coefficient.
  mpz_class lcm_den = 1;
  for (const auto& [k, c] : den_.coeffs())
    lcm_den = lcm(lcm_den, c.get_den());
  mpz_class gcd_num = 0;
  for (const auto& [k, c] : den_.coeffs())
    gcd_num = gcd(gcd_num, mpz_class(c.get_num() * (lcm_den / c.get_den())));
  mpq_class scale(lcm_den, gcd_num);
  scale.canonicalize();
  // Positive leading coefficient (largest v exponent).
  const auto& dc = den_.coeffs();
  mpq_class lead = dc.rbegin()->second;
  if (lead * scale < 0) scale = -scale;
  if (scale != 1) {
    den_ = den_.scaled(scale);
    num_ = num_.scaled(scale);
  }
}

inline std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  // Display with nonnegative v powers: pull v^{-a} out of the numerator
  // into the displayed denominator.
  int a = std::min(0, num_.min_v());
  LaurentPoly shown_num = num_.shifted(-a, 0);
  LaurentPoly shown_den = den_.shifted(-a, 0);

  auto poly_str = [](const LaurentPoly& p) {
    // Terms in decreasing v exponent, then increasing s exponent.
    std::vector<std::pair<LaurentPoly::Key, mpq_class>> terms(
        p.coeffs().begin(), p.coeffs().end());
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
      if (x.first.first != y.first.first)
        return x.first.first > y.first.first;
      return x.first.second < y.first.second;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms) {
      mpq_class cc = c;
      if (first) {
        if (cc < 0) {
          os << "-";
          cc = -cc;
        }
      } else {
        os << (cc < 0 ? " - " : " + ");
        if (cc < 0) cc = -cc;
      }
      first = false;
      std::string vars;
      if (k.first == 1)
        vars = "v";
      else if (k.first != 0)
        vars = "v^" + std::to_string(k.first);
      if (k.second != 0) {
        if (!vars.empty()) vars += "*";
        vars += (k.second == 1 ? "s" : "s^" + std::to_string(k.second));
      }
      if (vars.empty()) {
        os << cc.get_str();
      } else {
        if (cc != 1) os << cc.get_str() << "*";
        os << vars;
      }
    }
    return os.str();
  };

  if (shown_den.is_one()) return poly_str(shown_num);
  std::string n = poly_str(shown_num);
  std::string d = poly_str(shown_den);
  if (shown_num.coeffs().size() > 1) n = "(" + n + ")";
  if (shown_den.coeffs().size() > 1)
    d = "(" + d + ")";
  return n + "/" + d;
}

// q-number [x] = (q^x - q^{-x}) / (q - q^{-1}); a Laurent polynomial in v.
inline Scalar q_num(int x) {
  return Scalar(LaurentPoly::term(1, 2 * x) - LaurentPoly::term(1, -2 * x),
                LaurentPoly::one()) /
         Scalar(LaurentPoly::term(1, 2) - LaurentPoly::term(1, -2),
                LaurentPoly::one());
}

// [n]! = [n] [n-1] ... [1], with [0]! = 1.
inline Scalar q_factorial(int n) {
  if (n < 0) throw std::domain_error("q_factorial: negative argument");
  Scalar r(1);
  for (int i = 1; i <= n; ++i) r *= q_num(i);
  return r;
}

inline Scalar specialize_check(const Scalar& x, const mpq_class& v0) {
  return Scalar(x.specialize(v0));
}

}  // namespace cpnq
