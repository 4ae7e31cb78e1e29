#include <catch2/catch_amalgamated.hpp>

#include "cpnq/dirac.hpp"
#include "cpnq/qcliff.hpp"

using namespace cpnq;

TEST_CASE("subset/bitmask indexing") {
  CHECK(subset_of_mask(0b101, 3) == IndexSet{1, 3});
  CHECK(mask_of_subset({1, 3}) == 0b101);
  CHECK(mask_degree(0b111) == 3);
}

TEST_CASE("interior multiplication: frozen examples") {
  const int N = 3;
  Matrix i2 = interior(2, N);
  // i_2 e_{12} = (-q)^1 e_1 (a = 2 sits in position 2 of {1,2}).
  CHECK(i2.at(mask_of_subset({1}), mask_of_subset({1, 2})) ==
        -Scalar::q_pow(1));
  // i_2 e_{23} = e_3 (position 1).
  CHECK(i2.at(mask_of_subset({3}), mask_of_subset({2, 3})) == Scalar(1));
  // i_2 e_{13} = 0.
  for (int row = 0; row < 8; ++row)
    CHECK(i2.at(row, mask_of_subset({1, 3})).is_zero());
  // i_2 e_{123} = (-q) e_{13}.
  CHECK(i2.at(mask_of_subset({1, 3}), mask_of_subset({1, 2, 3})) ==
        -Scalar::q_pow(1));
}

TEST_CASE("exterior multiplication: frozen examples") {
  const int N = 3;
  Matrix e2 = exterior(2, N);
  // e_2 e_1 -> a = 2 lands in position 2 of {1,2}: coefficient -q.
  CHECK(e2.at(mask_of_subset({1, 2}), mask_of_subset({1})) ==
        -Scalar::q_pow(1));
  // e_2 e_3 -> position 1 of {2,3}: coefficient 1.
  CHECK(e2.at(mask_of_subset({2, 3}), mask_of_subset({3})) == Scalar(1));
  // e_2 e_{2...} = 0.
  for (int row = 0; row < 8; ++row)
    CHECK(e2.at(row, mask_of_subset({2, 3})).is_zero());
  CHECK_THROWS_AS(exterior(0, N), std::invalid_argument);
  CHECK_THROWS_AS(interior(4, N), std::invalid_argument);
}

TEST_CASE("Clifford relations") {
  const int N = 3;
  // e_i i_j = -q^{-1} i_j e_i for i != j.
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      CHECK(exterior(i, N) * interior(j, N) ==
            (interior(j, N) * exterior(i, N)).scaled(-Scalar::q_pow(-1)));
    }
  // e_i i_i - q(q - q^{-1}) sum_{j<i} e_j i_j + i_i e_i = id.
  Scalar qq = Scalar::q_pow(1) * (Scalar::q_pow(1) - Scalar::q_pow(-1));
  for (int i = 1; i <= N; ++i) {
    Matrix acc =
        exterior(i, N) * interior(i, N) + interior(i, N) * exterior(i, N);
    for (int j = 1; j < i; ++j)
      acc = acc - (exterior(j, N) * interior(j, N)).scaled(qq);
    CHECK(acc == Matrix::identity(1 << N));
  }
}

TEST_CASE("classical CAR at v = 1") {
  const int N = 2;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      Matrix anti =
          exterior(i, N) * interior(j, N) + interior(j, N) * exterior(i, N);
      for (int r = 0; r < (1 << N); ++r)
        for (int c = 0; c < (1 << N); ++c)
          CHECK(anti.at(r, c).specialize(1) ==
                ((i == j && r == c) ? 1 : 0));
    }
}

TEST_CASE("gamma rescalings against the symbolic c-profile") {
  const int N = 2;
  // c_0 = 1, c_1 = s: gamma_i^* gamma_i acts on degree 1 by (c_1/c_0) e_i i_i.
  ScalingProfile p = TProfile(Scalar(1), Scalar::s_var()).profile(N);
  Matrix m = gamma_star_block(2, p, N) * gamma_block(2, p, N);
  int col = mask_of_subset({2});
  CHECK(m.at(col, col) == Scalar::s_var());
  // Adjointness under the Hermitian product encoded by lambda'.
  for (int i = 1; i <= N; ++i)
    CHECK(gamma_star_block(i, p, N) ==
          cliff_adjoint(gamma_block(i, p, N), p, N));
  // cliff_adjoint is an involution for any profile.
  for (int i = 1; i <= N; ++i)
    CHECK(cliff_adjoint(cliff_adjoint(gamma_block(i, p, N), p, N), p, N) ==
          gamma_block(i, p, N));
}

TEST_CASE("per-degree gamma views sum to the block operator") {
  const int N = 3;
  ScalingProfile p = TProfile(Scalar::q_pow(-1), Scalar(1)).profile(N);
  for (int i = 1; i <= N; ++i) {
    Matrix sum(1 << N, 1 << N);
    for (int k = 1; k <= N; ++k) sum = sum + gamma(i, p, N, k);
    CHECK(sum == gamma_block(i, p, N));
    Matrix sums(1 << N, 1 << N);
    for (int k = 0; k < N; ++k) sums = sums + gamma_star(i, p, N, k);
    CHECK(sums == gamma_star_block(i, p, N));
  }
  CHECK_THROWS_AS(gamma(1, p, N, 0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_star(1, p, N, N), std::invalid_argument);
}

TEST_CASE("Clifford monomials span the endomorphism algebra") {
  const int N = 2, dim = 1 << N;
  Matrix flat(dim * dim, dim * dim);
  int col = 0;
  for (int mi = 0; mi < dim; ++mi)
    for (int me = 0; me < dim; ++me) {
      Matrix op = Matrix::identity(dim);
      for (int a = 1; a <= N; ++a)
        if (mi & (1 << (a - 1))) op = op * interior(a, N);
      for (int a = 1; a <= N; ++a)
        if (me & (1 << (a - 1))) op = op * exterior(a, N);
      for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) flat.at(r * dim + c, col) = op.at(r, c);
      ++col;
    }
  CHECK(matrix_rank_at(flat, mpq_class(7, 5)) == size_t(dim) * dim);
}
