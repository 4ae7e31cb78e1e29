#pragma once

// Quantum Clifford operators on the exterior algebra of u_+: interior and
// exterior multiplications and their degreewise rescalings gamma_i,
// gamma_i^*, stored as exact 2^N x 2^N matrices over the subset basis.

#include <stdexcept>
#include <vector>

#include "cpnq/qext.hpp"

namespace cpnq {

// Enumeration of the subset basis {e_I} of the exterior algebra: index
// I <-> bitmask over {1..N} (bit i-1 set iff i in I), 0 .. 2^N - 1.
inline IndexSet subset_of_mask(int mask, int N) {
  IndexSet I;
  for (int i = 1; i <= N; ++i)
    if (mask & (1 << (i - 1))) I.push_back(i);
  return I;
}
inline int mask_of_subset(const IndexSet& I) {
  int m = 0;
  for (int i : I) m |= 1 << (i - 1);
  return m;
}
inline int mask_degree(int mask) { return __builtin_popcount(mask); }

inline ExtVector ext_of_column(const Matrix& m, int col, int N) {
  // Used by tests: interpret a matrix column as an exterior-algebra vector.
  ExtVector x = ext_zero(AlgTag::UPlus, 0);
  x.degree = -1;  // mixed; callers slice by degree when needed
  for (int row = 0; row < (1 << N); ++row)
    if (!m.at(row, col).is_zero()) x.comps.emplace(subset_of_mask(row, N),
                                                   m.at(row, col));
  return x;
}

// Interior multiplication  i_a e_I = sum_r delta_{a,i_r} (-q)^{r-1}
// e_{I \ i_r}.
inline Matrix interior(int a, int N) {
  if (a < 1 || a > N) throw std::invalid_argument("interior: index range");
  const int dim = 1 << N;
  Matrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    IndexSet I = subset_of_mask(col, N);
    for (size_t r = 0; r < I.size(); ++r) {
      if (I[r] != a) continue;
      IndexSet J = I;
      J.erase(J.begin() + r);
      Scalar c(1);
      for (size_t t = 0; t < r; ++t) c = c * (-Scalar::q_pow(1));
      m.at(mask_of_subset(J), col) += c;
    }
  }
  return m;
}

// Exterior multiplication  e_a e_I = (-q)^{r-1} e_{I u a}, r the position of
// a in I u a; zero when a already occurs.
inline Matrix exterior(int a, int N) {
  if (a < 1 || a > N) throw std::invalid_argument("exterior: index range");
  const int dim = 1 << N;
  Matrix m(dim, dim);
  for (int col = 0; col < dim; ++col) {
    IndexSet I = subset_of_mask(col, N);
    bool dup = false;
    for (int i : I) dup = dup || i == a;
    if (dup) continue;
    IndexSet J = I;
    J.insert(std::upper_bound(J.begin(), J.end(), a), a);
    size_t r = 0;
    while (J[r] != a) ++r;
    Scalar c(1);
    for (size_t t = 0; t < r; ++t) c = c * (-Scalar::q_pow(1));
    m.at(mask_of_subset(J), col) = c;
  }
  return m;
}

// Scale each column of a graded operator by a function of its source degree.
template <typename DegScale>
inline Matrix scale_by_degree(const Matrix& m, int N, DegScale f) {
  Matrix r = m;
  for (int col = 0; col < (1 << N); ++col) {
    Scalar s = f(mask_degree(col));
    for (int row = 0; row < (1 << N); ++row) r.at(row, col) = m.at(row, col) * s;
  }
  return r;
}

// gamma_i = (lambda_k / lambda_{k-1}) i_i on degree-k inputs, assembled as a
// whole-space block operator (the degree-0 column is zero anyway).
inline Matrix gamma_block(int i, const ScalingProfile& p, int N) {
  return scale_by_degree(interior(i, N), N, [&](int k) {
    return k == 0 ? Scalar(0) : p.lambda.at(k) / p.lambda.at(k - 1);
  });
}

// gamma_i^* = (lambda_{k+1}/lambda_k)(lambda'_k/lambda'_{k+1}) e_i on
// degree-k inputs (top-degree column is zero).
inline Matrix gamma_star_block(int i, const ScalingProfile& p, int N) {
  return scale_by_degree(exterior(i, N), N, [&](int k) {
    return k == N ? Scalar(0)
                  : p.lambda.at(k + 1) / p.lambda.at(k) * p.lambda_prime.at(k) /
                        p.lambda_prime.at(k + 1);
  });
}

// Per-degree views, for callers that want the operator on a single degree.
inline Matrix gamma(int i, const ScalingProfile& p, int N, int k) {
  if (k < 1 || k > N) throw std::invalid_argument("gamma: degree range");
  return scale_by_degree(interior(i, N), N, [&](int deg) {
    return deg == k ? p.lambda.at(k) / p.lambda.at(k - 1) : Scalar(0);
  });
}
inline Matrix gamma_star(int i, const ScalingProfile& p, int N, int k) {
  if (k < 0 || k > N - 1)
    throw std::invalid_argument("gamma_star: degree range");
  return scale_by_degree(exterior(i, N), N, [&](int deg) {
    return deg == k ? p.lambda.at(k + 1) / p.lambda.at(k) *
                          p.lambda_prime.at(k) / p.lambda_prime.at(k + 1)
                    : Scalar(0);
  });
}

// Hermitian adjoint with respect to the graded product
// (e_I, e_J) = lambda'_{|I|} delta_{I,J}:  (M^*)_{I,J} = M_{J,I}
// lambda'_{|J|} / lambda'_{|I|}  (real coefficients, no conjugation).
inline Matrix cliff_adjoint(const Matrix& m, const ScalingProfile& p, int N) {
  const int dim = 1 << N;
  Matrix r(dim, dim);
  for (int row = 0; row < dim; ++row)
    for (int col = 0; col < dim; ++col)
      r.at(row, col) = m.at(col, row) * p.lambda_prime.at(mask_degree(col)) /
                       p.lambda_prime.at(mask_degree(row));
  return r;
}

}  // namespace cpnq
