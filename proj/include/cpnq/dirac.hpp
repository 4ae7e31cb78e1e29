#pragma once

// The Dolbeault-Dirac element: eth, D = eth + eth^*, the square D^2 inside
// U_q(sl_{N+1}) (x) End(exterior algebra of u_+), the quadratic Casimir-type
// element C, the degree operator T, and the headline residual
// D^2 - C (x) T, tested entrywise for membership in the Levi factor.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpnq/qcliff.hpp"
#include "cpnq/rootvec.hpp"

namespace cpnq {

// A 2^N x 2^N matrix with U_q-element entries, indexed by subset bitmasks.
struct DiracElement {
  int N = 0;
  std::vector<UqElement> a;  // (2^N)^2 entries, row-major

  explicit DiracElement(int N_) : N(N_), a((size_t(1) << N_) * (size_t(1) << N_)) {}

  int dim() const { return 1 << N; }
  UqElement& at(int r, int c) { return a[size_t(r) * dim() + c]; }
  const UqElement& at(int r, int c) const { return a[size_t(r) * dim() + c]; }

  friend bool operator==(const DiracElement&, const DiracElement&) = default;

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.empty()) return false;
    return true;
  }

  DiracElement operator+(const DiracElement& o) const {
    DiracElement r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] + o.a[i];
    return r;
  }
  DiracElement operator-(const DiracElement& o) const {
    DiracElement r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] = r.a[i] - o.a[i];
    return r;
  }
};

inline DiracElement dirac_mul(const UqAlgebra& A, const DiracElement& x,
                              const DiracElement& y) {
  DiracElement r(x.N);
  const int d = x.dim();
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (x.at(i, k).empty()) continue;
      for (int j = 0; j < d; ++j) {
        if (y.at(k, j).empty()) continue;
        r.at(i, j) = r.at(i, j) + A.mul(x.at(i, k), y.at(k, j));
      }
    }
  return r;
}

// u (x) m for a U_q element and a Clifford matrix.
inline DiracElement tensor_op(int N, const UqElement& u, const Matrix& m) {
  DiracElement r(N);
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j)
      if (!m.at(i, j).is_zero()) r.at(i, j) = uq_scale(u, m.at(i, j));
  return r;
}

// Hermitian adjoint: star each entry and transpose with the lambda'-graded
// weights of the configured profile (real coefficients, no conjugation).
inline DiracElement dirac_star(const UqAlgebra& A, const DiracElement& x,
                               const ScalingProfile& p) {
  DiracElement r(x.N);
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) {
      if (x.at(j, i).empty()) continue;
      Scalar w = p.lambda_prime.at(mask_degree(j)) /
                 p.lambda_prime.at(mask_degree(i));
      r.at(i, j) = uq_scale(A.star(x.at(j, i)), w);
    }
  return r;
}

inline bool dirac_is_levi(const UqAlgebra& A, const DiracElement& x) {
  for (const auto& e : x.a)
    if (!A.is_levi(e)) return false;
  return true;
}

// First non-Levi entry (row, col, monomial, coefficient), for reports.
struct NonLeviEntry {
  int row, col;
  TriMonomial monomial;
  Scalar coeff;
};
inline std::optional<NonLeviEntry> dirac_non_levi_witness(
    const UqAlgebra& A, const DiracElement& x) {
  for (int i = 0; i < x.dim(); ++i)
    for (int j = 0; j < x.dim(); ++j)
      if (auto w = A.non_levi_witness(x.at(i, j)))
        return NonLeviEntry{i, j, w->first, w->second};
  return std::nullopt;
}

// --- the c-profile family -------------------------------------------------

// The two-parameter family determined by c_0 and c_1 through the
// compatibility condition c_{k+1}/c_k = (c_k/c_{k-1}) q^{-2}.  The ratios
// telescope to c_k/c_{k-1} = (c_1/c_0) q^{-2(k-1)}, so the unique solution
// is c_k = c_0 (c_1/c_0)^k q^{-k(k-1)}.  (The frequently quoted shortcut
// (c_1^2/c_0) q^{-k(k-1)} agrees with this only for k <= 2, or for all k
// when c_0 = c_1; see tprofile_shortcut_c below.)  Realized with
// lambda_k = 1, lambda'_k = 1/c_k (every c_k must be invertible).
struct TProfile {
  Scalar c0, c1;

  TProfile(Scalar c0_, Scalar c1_) : c0(std::move(c0_)), c1(std::move(c1_)) {
    if (c0.is_zero() || c1.is_zero())
      throw std::invalid_argument("TProfile: c0, c1 must be nonzero");
  }

  Scalar c(int k) const {
    Scalar r = c0;
    Scalar ratio = c1 / c0;
    for (int t = 0; t < k; ++t) r = r * ratio;
    return r * Scalar::q_pow(-k * (k - 1));
  }

  // Exact check of the defining recursion on 1 <= k <= kmax - 1.
  bool satisfies_condition(int kmax) const {
    for (int k = 1; k + 1 <= kmax; ++k)
      if (!(c(k + 1) / c(k) == c(k) / c(k - 1) * Scalar::q_pow(-2)))
        return false;
    return true;
  }

  ScalingProfile profile(int N) const {
    std::vector<Scalar> lam(N + 1, Scalar(1)), lamp(N + 1);
    for (int k = 0; k <= N; ++k) lamp[k] = c(k).inverse();
    return ScalingProfile(std::move(lam), std::move(lamp));
  }
};

// --- eth and D ------------------------------------------------------------

// eth = sum_i script-E_i (x) gamma_-(y_i), with gamma_-(y_i) =
// q^{-i/2} gamma_i in the configured profile.
inline DiracElement build_eth(const RootVectorSet& R,
                              const ScalingProfile& p) {
  const UqAlgebra& A = R.algebra();
  const int N = A.rank();
  DiracElement r(N);
  for (int i = 1; i <= N; ++i) {
    Matrix g = gamma_block(i, p, N).scaled(Scalar::v_pow(-i));
    r = r + tensor_op(N, R.dual(i), g);
  }
  return r;
}

inline DiracElement dirac_D(const RootVectorSet& R, const ScalingProfile& p) {
  DiracElement eth = build_eth(R, p);
  return eth + dirac_star(R.algebra(), eth, p);
}

// D^2 split into the diagonal (i = j) and off-diagonal (i != j) parts of the
// double sum, before Clifford contraction.  D^2_D + D^2_O = D^2 exactly
// (eth^2 = (eth^*)^2 = 0 is checked separately).
struct SquareDecomposition {
  DiracElement diagonal;
  DiracElement off_diagonal;
};

inline SquareDecomposition square_decompose(const RootVectorSet& R,
                                            const ScalingProfile& p) {
  const UqAlgebra& A = R.algebra();
  const int N = A.rank();
  SquareDecomposition out{DiracElement(N), DiracElement(N)};
  std::vector<Matrix> g, gs;
  g.reserve(N + 1);
  gs.reserve(N + 1);
  g.emplace_back();
  gs.emplace_back();
  for (int i = 1; i <= N; ++i) {
    Matrix gi = gamma_block(i, p, N).scaled(Scalar::v_pow(-i));
    g.push_back(gi);
    gs.push_back(cliff_adjoint(gi, p, N));
  }
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      DiracElement term =
          tensor_op(N, A.mul(R.dual(i), R.dual_star(j)), g[i] * gs[j]) +
          tensor_op(N, A.mul(R.dual_star(j), R.dual(i)), gs[j] * g[i]);
      if (i == j)
        out.diagonal = out.diagonal + term;
      else
        out.off_diagonal = out.off_diagonal + term;
    }
  return out;
}

// --- C and T --------------------------------------------------------------

// C = sum_i q^{-i} script-E_i script-E_i^*.
inline UqElement casimir_C(const RootVectorSet& R) {
  const UqAlgebra& A = R.algebra();
  UqElement c;
  for (int i = 1; i <= R.rank(); ++i) {
    UqElement t = A.mul(R.dual(i), R.dual_star(i));
    for (const auto& [m, cc] : t)
      uq_add_term(c, m, cc * Scalar::q_pow(-i));
  }
  return c;
}

// The companion element C~ = sum_i q^{-3i} E_{xi_i}^* E_{xi_i}, whose
// S^{-1}-image is q^{-2(N+1)} C.
inline UqElement casimir_C_tilde(const RootVectorSet& R) {
  const UqAlgebra& A = R.algebra();
  UqElement c;
  for (int i = 1; i <= R.rank(); ++i) {
    UqElement t = A.mul(R.E_xi_star(i), R.E_xi(i));
    for (const auto& [m, cc] : t)
      uq_add_term(c, m, cc * Scalar::q_pow(-3 * i));
  }
  return c;
}

// The shortcut closed form (c_1^2/c_0) q^{-k(k-1)} for the profile; equal
// to TProfile::c exactly for k <= 2, and for every k when c_0 = c_1.
inline Scalar tprofile_shortcut_c(int k, const Scalar& c0, const Scalar& c1) {
  if (k == 0) return c0;
  if (k == 1) return c1;
  return c1 * c1 / c0 * Scalar::q_pow(-k * (k - 1));
}

// The scalar T restricted to degree k, and its rescaling T~(k) = q^{2k}T(k).
// From the recursion, A_i acts on degree k > 0 as (c_k/c_{k-1}) q^{-2} =
// (c_1/c_0) q^{-2k}, and as c_1/c_0 on degree 0, so the same formula covers
// every degree.
inline Scalar operator_T(int k, const Scalar& c0, const Scalar& c1) {
  if (k < 0) throw std::invalid_argument("operator_T: negative degree");
  return c1 / c0 * Scalar::q_pow(-2 * k);
}

// The piecewise display (c_1/c_0) q^{-2k} for k <= 2, q^{-2k} for k > 2.
// It coincides with operator_T on k <= 2 always, and on all k iff c_0 = c_1
// (the regime in which the piecewise form is quoted).
inline Scalar operator_T_display(int k, const Scalar& c0, const Scalar& c1) {
  if (k < 0) throw std::invalid_argument("operator_T_display: negative degree");
  Scalar base = Scalar::q_pow(-2 * k);
  if (k <= 2) base = base * c1 / c0;
  return base;
}
inline Scalar operator_T_tilde(int k, const Scalar& c0, const Scalar& c1) {
  return operator_T(k, c0, c1) * Scalar::q_pow(2 * k);
}

// T as a diagonal Clifford matrix.
inline Matrix operator_T_matrix(int N, const Scalar& c0, const Scalar& c1) {
  Matrix m(1 << N, 1 << N);
  for (int d = 0; d < (1 << N); ++d)
    m.at(d, d) = operator_T(mask_degree(d), c0, c1);
  return m;
}

// Residual R = D^2 - C (x) T for the TProfile(c0, c1) family; the headline
// assertion is that every entry of R lies in the Levi factor.
inline DiracElement main_theorem_residual(const RootVectorSet& R,
                                          const Scalar& c0,
                                          const Scalar& c1) {
  const UqAlgebra& A = R.algebra();
  const int N = A.rank();
  ScalingProfile p = TProfile(c0, c1).profile(N);
  DiracElement D = dirac_D(R, p);
  DiracElement D2 = dirac_mul(A, D, D);
  DiracElement CT = tensor_op(N, casimir_C(R), operator_T_matrix(N, c0, c1));
  return D2 - CT;
}

// --- Levi-commutant report ------------------------------------------------

struct CommutantLine {
  std::string generator;
  bool zero;
};

// For each Levi generator g: reports whether g |> x - eps(g) x == 0.
inline std::vector<CommutantLine> levi_commutant_report(const UqAlgebra& A,
                                                        const UqElement& x) {
  std::vector<CommutantLine> out;
  auto probe = [&](const std::string& name, const UqElement& g) {
    UqElement d = A.adjoint_action(g, x) - uq_scale(x, A.counit(g));
    out.push_back({name, d.empty()});
  };
  for (int j = 1; j < A.rank(); ++j) {
    probe("E" + std::to_string(j), A.E(j));
    probe("F" + std::to_string(j), A.F(j));
  }
  for (int j = 1; j <= A.rank(); ++j)
    probe("K[w" + std::to_string(j) + "]", A.K(omega(j, A.rank())));
  return out;
}

}  // namespace cpnq
