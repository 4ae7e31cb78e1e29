#pragma once

// U_q(sl_{N+1}) with weight-lattice Cartan part: canonical triangular normal
// form, Hopf operations, compact-form star, adjoint action, weight grading
// and the Levi-membership decision procedure.
//
// Elements are stored as sums of triangular monomials F-word * K_lambda *
// E-word, with both one-sided words in normal form with respect to the
// completed Serre rewrite systems.  Two elements are equal iff their stored
// maps coincide.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpnq/rewrite.hpp"

namespace cpnq {

// Integer coordinates (m_1,...,m_N) in the fundamental-weight basis;
// lambda = sum m_i omega_i.  Pairings with simple roots are then integral:
// (lambda, alpha_j) = m_j.
using WeightVec = std::vector<int>;

inline WeightVec zero_weight(int N) { return WeightVec(N, 0); }

inline WeightVec omega(int i, int N) {
  WeightVec w(N, 0);
  w[i - 1] = 1;
  return w;
}

// alpha_i in fundamental-weight coordinates: m_j = (alpha_i, alpha_j) = a_ij.
inline WeightVec alpha(int i, int N) {
  WeightVec w(N, 0);
  w[i - 1] = 2;
  if (i > 1) w[i - 2] = -1;
  if (i < N) w[i] = -1;
  return w;
}

inline WeightVec weight_add(const WeightVec& a, const WeightVec& b) {
  WeightVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline WeightVec weight_neg(const WeightVec& a) {
  WeightVec r = a;
  for (auto& x : r) x = -x;
  return r;
}
inline bool weight_is_zero(const WeightVec& a) {
  for (int x : a)
    if (x != 0) return false;
  return true;
}
// (lambda, alpha_j) for lambda in fundamental coordinates.
inline int pair_alpha(const WeightVec& lambda, int j) { return lambda[j - 1]; }
// (lambda, xi_k) with xi_k = alpha_k + ... + alpha_N.
inline int pair_xi(const WeightVec& lambda, int k) {
  int s = 0;
  for (size_t j = k - 1; j < lambda.size(); ++j) s += lambda[j];
  return s;
}

struct TriMonomial {
  Word fword;
  WeightVec cartan;
  Word eword;

  friend bool operator==(const TriMonomial&, const TriMonomial&) = default;
  friend auto operator<=>(const TriMonomial& a, const TriMonomial& b) {
    if (auto c = deglex_compare(a.fword, b.fword); c != 0) return c;
    if (auto c = a.cartan <=> b.cartan; c != 0) return c;
    return deglex_compare(a.eword, b.eword);
  }
};

using UqElement = std::map<TriMonomial, Scalar>;
using TensorSquare = std::map<std::pair<TriMonomial, TriMonomial>, Scalar>;

struct DegreeBoundError : std::runtime_error {
  int degree;
  explicit DegreeBoundError(int deg)
      : std::runtime_error("expression degree " + std::to_string(deg) +
                           " exceeds the configured rewrite bound"),
        degree(deg) {}
};

inline void uq_add_term(UqElement& x, const TriMonomial& m, const Scalar& c) {
  auto it = x.find(m);
  if (it == x.end()) {
    if (!c.is_zero()) x.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

inline UqElement operator+(const UqElement& a, const UqElement& b) {
  UqElement r = a;
  for (const auto& [m, c] : b) uq_add_term(r, m, c);
  return r;
}
inline UqElement operator-(const UqElement& a, const UqElement& b) {
  UqElement r = a;
  for (const auto& [m, c] : b) uq_add_term(r, m, -c);
  return r;
}
inline UqElement operator-(const UqElement& a) {
  UqElement r;
  for (const auto& [m, c] : a) r.emplace(m, -c);
  return r;
}
inline UqElement uq_scale(const UqElement& a, const Scalar& c) {
  UqElement r;
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : a) r.emplace(m, cc * c);
  return r;
}

class UqAlgebra {
 public:
  explicit UqAlgebra(int N, int degree_bound = 0)
      : N_(N), bound_(degree_bound > 0 ? degree_bound : 2 * N + 4) {
    if (N < 1 || N > 4)
      throw std::invalid_argument("UqAlgebra: rank must be in 1..4");
    if (bound_ < 3)
      throw std::invalid_argument("UqAlgebra: degree bound must be >= 3");
    esys_ = gb_complete(LetterKind::E, N_, bound_);
    fsys_ = gb_complete(LetterKind::F, N_, bound_);
  }

  int rank() const { return N_; }
  int degree_bound() const { return bound_; }
  const RewriteSystem& esystem() const { return esys_; }
  const RewriteSystem& fsystem() const { return fsys_; }

  // --- generators ---------------------------------------------------------

  UqElement one() const {
    UqElement x;
    x.emplace(TriMonomial{{}, zero_weight(N_), {}}, Scalar(1));
    return x;
  }
  UqElement E(int i) const {
    check_index(i);
    UqElement x;
    x.emplace(TriMonomial{{}, zero_weight(N_), {{LetterKind::E, i}}},
              Scalar(1));
    return x;
  }
  UqElement F(int i) const {
    check_index(i);
    UqElement x;
    x.emplace(TriMonomial{{{LetterKind::F, i}}, zero_weight(N_), {}},
              Scalar(1));
    return x;
  }
  UqElement K(const WeightVec& lambda) const {
    if (static_cast<int>(lambda.size()) != N_)
      throw std::invalid_argument("K: weight has wrong rank");
    UqElement x;
    x.emplace(TriMonomial{{}, lambda, {}}, Scalar(1));
    return x;
  }
  UqElement Kalpha(int i) const { return K(alpha(i, N_)); }

  // --- multiplication -----------------------------------------------------

  UqElement mul(const UqElement& a, const UqElement& b) const {
    UqElement r;
    for (const auto& [m, c] : a) {
      UqElement t = mono_mul(m, b);
      for (const auto& [mm, cc] : t) uq_add_term(r, mm, cc * c);
    }
    return r;
  }

  UqElement mul(const UqElement& a, const UqElement& b,
                const UqElement& c) const {
    return mul(mul(a, b), c);
  }

  UqElement pow(const UqElement& a, int n) const {
    UqElement r = one();
    for (int i = 0; i < n; ++i) r = mul(r, a);
    return r;
  }

  // --- Hopf structure -----------------------------------------------------

  TensorSquare coproduct(const UqElement& x) const {
    TensorSquare r;
    for (const auto& [m, c] : x) {
      TensorSquare t = coproduct_mono(m);
      for (const auto& [p, cc] : t) ts_add(r, p.first, p.second, cc * c);
    }
    return r;
  }

  UqElement antipode(const UqElement& x) const {
    return map_antihom(x, [this](const Letter& l) { return antipode_gen(l); },
                       [this](const WeightVec& w) { return K(weight_neg(w)); });
  }

  UqElement antipode_inv(const UqElement& x) const {
    return map_antihom(
        x, [this](const Letter& l) { return antipode_inv_gen(l); },
        [this](const WeightVec& w) { return K(weight_neg(w)); });
  }

  Scalar counit(const UqElement& x) const {
    Scalar r;
    for (const auto& [m, c] : x)
      if (m.fword.empty() && m.eword.empty()) r += c;
    return r;
  }

  // Compact real form: K* = K, E_i* = K_i F_i, F_i* = E_i K_i^{-1}.
  // Conjugation on Scalar is the identity.
  UqElement star(const UqElement& x) const {
    return map_antihom(x, [this](const Letter& l) { return star_gen(l); },
                       [this](const WeightVec& w) { return K(w); });
  }

  // Left adjoint action  X |> Y = X_(1) Y S(X_(2)).
  UqElement adjoint_action(const UqElement& a, const UqElement& y) const {
    UqElement r;
    for (const auto& [p, c] : coproduct(a)) {
      UqElement m1;
      m1.emplace(p.first, Scalar(1));
      UqElement m2;
      m2.emplace(p.second, Scalar(1));
      UqElement t = mul(mul(m1, y), antipode(m2));
      for (const auto& [mm, cc] : t) uq_add_term(r, mm, cc * c);
    }
    return r;
  }

  // --- grading and Levi membership ---------------------------------------

  // Common Q-grading in simple-root coordinates, or nullopt if mixed.
  std::optional<std::vector<int>> weight(const UqElement& x) const {
    std::optional<std::vector<int>> w;
    for (const auto& [m, c] : x) {
      std::vector<int> mw(N_, 0);
      for (const Letter& l : m.eword) mw[l.index - 1] += 1;
      for (const Letter& l : m.fword) mw[l.index - 1] -= 1;
      if (!w)
        w = mw;
      else if (*w != mw)
        return std::nullopt;
    }
    if (!w) w = std::vector<int>(N_, 0);  // zero element: weight 0
    return w;
  }

  // True iff no normal monomial contains the letter E_N or F_N.  The normal
  // monomials without index-N letters are exactly a basis of U_q(l) (the
  // one-sided normal words in letters 1..N-1 times arbitrary K_lambda), so
  // this is a sound and complete membership test at the configured bound.
  bool is_levi(const UqElement& x) const {
    for (const auto& [m, c] : x) {
      for (const Letter& l : m.eword)
        if (l.index == N_) return false;
      for (const Letter& l : m.fword)
        if (l.index == N_) return false;
    }
    return true;
  }

  bool equals_mod_levi(const UqElement& x, const UqElement& y) const {
    return is_levi(x - y);
  }

  // A witness monomial containing an index-N letter, for failure reports.
  std::optional<std::pair<TriMonomial, Scalar>> non_levi_witness(
      const UqElement& x) const {
    for (const auto& [m, c] : x) {
      bool bad = false;
      for (const Letter& l : m.eword) bad = bad || l.index == N_;
      for (const Letter& l : m.fword) bad = bad || l.index == N_;
      if (bad) return std::make_pair(m, c);
    }
    return std::nullopt;
  }

  // --- rendering ----------------------------------------------------------

  std::string render(const TriMonomial& m) const {
    std::string s;
    if (!m.fword.empty()) s += word_to_string(m.fword);
    if (!weight_is_zero(m.cartan)) {
      if (!s.empty()) s += ".";
      s += "K[";
      for (int j = 0; j < N_; ++j) {
        if (j) s += ",";
        s += std::to_string(m.cartan[j]);
      }
      s += "]";
    }
    if (!m.eword.empty()) {
      if (!s.empty()) s += ".";
      s += word_to_string(m.eword);
    }
    return s.empty() ? "1" : s;
  }

  std::string render(const UqElement& x) const {
    if (x.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : x) {
      if (!first) s += " + ";
      first = false;
      s += "(" + c.to_string() + ")*" + render(m);
    }
    return s;
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > N_)
      throw std::invalid_argument("generator index out of range");
  }
  void check_degree(size_t deg) const {
    if (deg > static_cast<size_t>(bound_))
      throw DegreeBoundError(static_cast<int>(deg));
  }

  // q^{(lambda, mu)} with mu the Q-weight of a word, as a power of v^2.
  Scalar cartan_factor(const WeightVec& lambda, const Word& w, int sign)
      const {
    int e = 0;
    for (const Letter& l : w) e += pair_alpha(lambda, l.index);
    return Scalar::v_pow(2 * sign * e);
  }

  // --- left multiplication primitives on normal-form elements -------------

  // F_j * x
  UqElement left_F(int j, const UqElement& x) const {
    UqElement r;
    for (const auto& [m, c] : x) {
      Word w;
      w.reserve(m.fword.size() + 1);
      w.push_back({LetterKind::F, j});
      w.insert(w.end(), m.fword.begin(), m.fword.end());
      check_degree(w.size());
      NCPoly red = fsys_.reduce_word(w);
      for (const auto& [rw, rc] : red.terms())
        uq_add_term(r, TriMonomial{rw, m.cartan, m.eword}, rc * c);
    }
    return r;
  }

  // K_lambda * x :  K_lambda F_j = q^{-(lambda,alpha_j)} F_j K_lambda.
  UqElement left_K(const WeightVec& lambda, const UqElement& x) const {
    UqElement r;
    for (const auto& [m, c] : x) {
      Scalar f = cartan_factor(lambda, m.fword, -1);
      uq_add_term(r,
                  TriMonomial{m.fword, weight_add(m.cartan, lambda), m.eword},
                  c * f);
    }
    return r;
  }

  // E_i * (pure F-word), straightened to triangular form.
  UqElement left_E_fword(int i, const Word& fw) const {
    if (fw.empty()) return E(i);
    int j = fw.front().index;
    Word rest(fw.begin() + 1, fw.end());
    // E_i F_j = F_j E_i + delta_ij (K_i - K_i^{-1}) / (q - q^{-1})
    UqElement r = left_F(j, left_E_fword(i, rest));
    if (i == j) {
      Scalar inv_qq =
          (Scalar::q_pow(1) - Scalar::q_pow(-1)).inverse();  // 1/(q - q^{-1})
      UqElement rest_elem;
      rest_elem.emplace(TriMonomial{rest, zero_weight(N_), {}}, Scalar(1));
      UqElement kplus = left_K(alpha(i, N_), rest_elem);
      UqElement kminus = left_K(weight_neg(alpha(i, N_)), rest_elem);
      for (const auto& [m, c] : kplus) uq_add_term(r, m, c * inv_qq);
      for (const auto& [m, c] : kminus) uq_add_term(r, m, -(c * inv_qq));
    }
    return r;
  }

  // E_i * x
  UqElement left_E(int i, const UqElement& x) const {
    UqElement r;
    for (const auto& [m, c] : x) {
      UqElement straight = left_E_fword(i, m.fword);
      // Attach the remaining K_cartan and E-word of m on the right.
      for (const auto& [sm, sc] : straight) {
        // (sm.eword) K_cartan = q^{-(cartan, wt)} K_cartan (sm.eword)
        Scalar f = cartan_factor(m.cartan, sm.eword, -1);
        Word e = sm.eword;
        e.insert(e.end(), m.eword.begin(), m.eword.end());
        check_degree(e.size());
        NCPoly red = esys_.reduce_word(e);
        WeightVec kap = weight_add(sm.cartan, m.cartan);
        for (const auto& [rw, rc] : red.terms())
          uq_add_term(r, TriMonomial{sm.fword, kap, rw}, rc * sc * f * c);
      }
    }
    return r;
  }

  // m * b for a triangular monomial m.
  UqElement mono_mul(const TriMonomial& m, const UqElement& b) const {
    UqElement x = b;
    for (auto it = m.eword.rbegin(); it != m.eword.rend(); ++it)
      x = left_E(it->index, x);
    if (!weight_is_zero(m.cartan)) x = left_K(m.cartan, x);
    for (auto it = m.fword.rbegin(); it != m.fword.rend(); ++it)
      x = left_F(it->index, x);
    return x;
  }

  // --- Hopf helpers -------------------------------------------------------

  static void ts_add(TensorSquare& r, const TriMonomial& a,
                     const TriMonomial& b, const Scalar& c) {
    auto key = std::make_pair(a, b);
    auto it = r.find(key);
    if (it == r.end()) {
      if (!c.is_zero()) r.emplace(key, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.erase(it);
    }
  }

  TensorSquare ts_mul(const TensorSquare& a, const TensorSquare& b) const {
    TensorSquare r;
    for (const auto& [pa, ca] : a)
      for (const auto& [pb, cb] : b) {
        UqElement m1;
        m1.emplace(pa.first, Scalar(1));
        UqElement m2;
        m2.emplace(pb.first, Scalar(1));
        UqElement left = mul(m1, m2);
        UqElement n1;
        n1.emplace(pa.second, Scalar(1));
        UqElement n2;
        n2.emplace(pb.second, Scalar(1));
        UqElement right = mul(n1, n2);
        Scalar c = ca * cb;
        for (const auto& [lm, lc] : left)
          for (const auto& [rm, rc] : right)
            ts_add(r, lm, rm, lc * rc * c);
      }
    return r;
  }

  TensorSquare ts_of(const UqElement& a, const UqElement& b) const {
    TensorSquare r;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) ts_add(r, ma, mb, ca * cb);
    return r;
  }

  TensorSquare coproduct_gen(const Letter& l) const {
    if (l.kind == LetterKind::E) {
      // Delta(E_i) = E_i (x) 1 + K_i (x) E_i
      TensorSquare r = ts_of(E(l.index), one());
      for (const auto& [p, c] : ts_of(Kalpha(l.index), E(l.index)))
        ts_add(r, p.first, p.second, c);
      return r;
    }
    // Delta(F_i) = F_i (x) K_i^{-1} + 1 (x) F_i
    TensorSquare r = ts_of(F(l.index), K(weight_neg(alpha(l.index, N_))));
    for (const auto& [p, c] : ts_of(one(), F(l.index)))
      ts_add(r, p.first, p.second, c);
    return r;
  }

  TensorSquare coproduct_mono(const TriMonomial& m) const {
    TensorSquare r = ts_of(K(m.cartan), K(m.cartan));
    // Multiply on the left by the F-letter coproducts (rightmost first),
    // then the E-letter coproducts on the right.
    for (auto it = m.fword.rbegin(); it != m.fword.rend(); ++it)
      r = ts_mul(coproduct_gen(*it), r);
    for (const Letter& l : m.eword) r = ts_mul(r, coproduct_gen(l));
    return r;
  }

  UqElement antipode_gen(const Letter& l) const {
    if (l.kind == LetterKind::E)  // S(E_i) = -K_i^{-1} E_i
      return -mul(K(weight_neg(alpha(l.index, N_))), E(l.index));
    // S(F_i) = -F_i K_i
    return -mul(F(l.index), Kalpha(l.index));
  }

  UqElement antipode_inv_gen(const Letter& l) const {
    if (l.kind == LetterKind::E)  // S^{-1}(E_i) = -E_i K_i^{-1}
      return -mul(E(l.index), K(weight_neg(alpha(l.index, N_))));
    // S^{-1}(F_i) = -K_i F_i
    return -mul(Kalpha(l.index), F(l.index));
  }

  UqElement star_gen(const Letter& l) const {
    if (l.kind == LetterKind::E)  // E_i* = K_i F_i
      return mul(Kalpha(l.index), F(l.index));
    // F_i* = E_i K_i^{-1}
    return mul(E(l.index), K(weight_neg(alpha(l.index, N_))));
  }

  // Anti-homomorphism determined by images of the generators.
  template <typename LetterMap, typename CartanMap>
  UqElement map_antihom(const UqElement& x, LetterMap letter_image,
                        CartanMap cartan_image) const {
    UqElement r;
    for (const auto& [m, c] : x) {
      UqElement acc = one();
      // Reverse of F-word * K * E-word: images of E letters reversed, then
      // the Cartan image, then images of F letters reversed.
      for (auto it = m.eword.rbegin(); it != m.eword.rend(); ++it)
        acc = mul(acc, letter_image(*it));
      acc = mul(acc, cartan_image(m.cartan));
      for (auto it = m.fword.rbegin(); it != m.fword.rend(); ++it)
        acc = mul(acc, letter_image(*it));
      for (const auto& [mm, cc] : acc) uq_add_term(r, mm, cc * c);
    }
    return r;
  }

  int N_;
  int bound_;
  RewriteSystem esys_, fsys_;
};

}  // namespace cpnq
