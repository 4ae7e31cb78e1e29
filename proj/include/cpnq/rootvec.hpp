#pragma once

// Quantum root vectors E_{xi_i} attached to the radical roots
// xi_i = alpha_i + ... + alpha_N, built from the fixed reduced decomposition
// w_0 = s_1 (s_2 s_1) ... (s_N ... s_1), together with their antipode-inverse
// images and stars.

#include <optional>
#include <stdexcept>
#include <vector>

#include "cpnq/uqalg.hpp"

namespace cpnq {

struct UnsupportedLusztigInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RootVectorInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

// The braid automorphism T_i restricted to the inputs used by the chain
// T_i ... T_{N-1}(E_N): polynomials in E-generators E_j with a_ij in {0,-1}.
// Defined on letters by
//   T_i(E_j) = E_j                     (a_ij = 0)
//   T_i(E_j) = -E_i E_j + q^{-1} E_j E_i   (a_ij = -1)
// and extended multiplicatively.
inline UqElement lusztig_T(const UqAlgebra& A, int i, const UqElement& x) {
  const int N = A.rank();
  if (i < 1 || i > N)
    throw UnsupportedLusztigInput("lusztig_T: index out of range");
  UqElement r;
  for (const auto& [m, c] : x) {
    if (!m.fword.empty() || !weight_is_zero(m.cartan))
      throw UnsupportedLusztigInput(
          "lusztig_T: input must be a polynomial in E-generators only");
    UqElement acc = A.one();
    for (const Letter& l : m.eword) {
      int j = l.index;
      if (j == i)
        throw UnsupportedLusztigInput(
            "lusztig_T: action on E_i itself is out of scope");
      UqElement img;
      if (std::abs(i - j) == 1) {
        img = uq_scale(A.mul(A.E(i), A.E(j)), Scalar(-1)) +
              uq_scale(A.mul(A.E(j), A.E(i)), Scalar::q_pow(-1));
      } else {
        img = A.E(j);
      }
      acc = A.mul(acc, img);
    }
    for (const auto& [mm, cc] : acc) uq_add_term(r, mm, cc * c);
  }
  return r;
}

class RootVectorSet {
 public:
  // Computes E_{xi_i} = T_i ... T_{N-1}(E_N) and cross-checks against the
  // recursion E_{xi_i} = -E_i E_{xi_{i+1}} + q^{-1} E_{xi_{i+1}} E_i.
  explicit RootVectorSet(const UqAlgebra& A) : A_(&A), N_(A.rank()) {
    if (N_ < 2)
      throw std::invalid_argument("RootVectorSet: rank must be >= 2");
    xi_.resize(N_ + 1);
    xi_[N_] = A.E(N_);
    for (int i = N_ - 1; i >= 1; --i) {
      UqElement chain = A.E(N_);
      for (int t = N_ - 1; t >= i; --t) chain = lusztig_T(A, t, chain);
      UqElement rec = uq_scale(A.mul(A.E(i), xi_[i + 1]), Scalar(-1)) +
                      uq_scale(A.mul(xi_[i + 1], A.E(i)), Scalar::q_pow(-1));
      if (!(chain == rec))
        throw RootVectorInconsistency(
            "root vector " + std::to_string(i) +
            ": Lusztig chain and recursion disagree");
      xi_[i] = chain;
    }
    dual_.resize(N_ + 1);
    xi_star_.resize(N_ + 1);
    dual_star_.resize(N_ + 1);
    for (int i = 1; i <= N_; ++i) {
      dual_[i] = A.antipode_inv(xi_[i]);
      xi_star_[i] = A.star(xi_[i]);
      dual_star_[i] = A.star(dual_[i]);
    }
  }

  const UqAlgebra& algebra() const { return *A_; }
  int rank() const { return N_; }

  // E_{xi_i}
  const UqElement& E_xi(int i) const { return xi_.at(i); }
  // script-E_i = S^{-1}(E_{xi_i})
  const UqElement& dual(int i) const { return dual_.at(i); }
  const UqElement& E_xi_star(int i) const { return xi_star_.at(i); }
  const UqElement& dual_star(int i) const { return dual_star_.at(i); }

  // Rescaled orthonormal vector e~_i = q^{-i/2} E_{xi_i}.
  UqElement tilde(int i) const {
    return uq_scale(xi_.at(i), Scalar::v_pow(-i));
  }

  // Writes y as sum_a c_a e~_a, or nullopt if y leaves the span.  Uses that
  // the e~_a have pairwise distinct Q-weights xi_a.
  std::optional<std::vector<Scalar>> span_coords(const UqElement& y) const {
    std::vector<Scalar> coeff(N_ + 1, Scalar(0));
    // Split y by the root-lattice weight of each monomial.
    std::vector<UqElement> comp(N_ + 1);
    for (const auto& [m, c] : y) {
      std::vector<int> w(N_, 0);
      for (const Letter& l : m.eword) w[l.index - 1] += 1;
      for (const Letter& l : m.fword) w[l.index - 1] -= 1;
      int a = match_xi(w);
      if (a == 0) return std::nullopt;
      uq_add_term(comp[a], m, c);
    }
    for (int a = 1; a <= N_; ++a) {
      if (comp[a].empty()) continue;
      UqElement ta = tilde(a);
      // Ratio against the lead monomial of e~_a, then verify exactly.
      auto lead = ta.rbegin();
      auto it = comp[a].find(lead->first);
      if (it == comp[a].end()) return std::nullopt;
      Scalar c = it->second / lead->second;
      if (!(comp[a] == uq_scale(ta, c))) return std::nullopt;
      coeff[a] = c;
    }
    return coeff;
  }

  // Diagonal product (e~_a, e~_b) = delta_ab, extended bilinearly on the
  // span; nullopt if either argument leaves the span.
  std::optional<Scalar> tilde_pairing(const UqElement& x,
                                      const UqElement& y) const {
    auto cx = span_coords(x);
    auto cy = span_coords(y);
    if (!cx || !cy) return std::nullopt;
    Scalar r;
    for (int a = 1; a <= N_; ++a) r += (*cx)[a] * (*cy)[a];
    return r;
  }

 private:
  // Index a with weight == xi_a (alpha-coordinates 0..0 1..1), else 0.
  int match_xi(const std::vector<int>& w) const {
    int a = 0;
    for (int i = 1; i <= N_; ++i) {
      bool ok = true;
      for (int j = 1; j <= N_; ++j)
        if (w[j - 1] != (j >= i ? 1 : 0)) {
          ok = false;
          break;
        }
      if (ok) {
        a = i;
        break;
      }
    }
    return a;
  }

  const UqAlgebra* A_;
  int N_;
  std::vector<UqElement> xi_, dual_, xi_star_, dual_star_;
};

}  // namespace cpnq
