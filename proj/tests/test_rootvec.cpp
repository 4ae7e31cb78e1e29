#include <catch2/catch_amalgamated.hpp>

#include "cpnq/rootvec.hpp"

using namespace cpnq;

TEST_CASE("Lusztig automorphism on supported inputs") {
  UqAlgebra A(3);
  // T_1(E_3) = E_3 (distant), T_2(E_3) = -E_2 E_3 + q^{-1} E_3 E_2.
  CHECK(lusztig_T(A, 1, A.E(3)) == A.E(3));
  UqElement want = uq_scale(A.mul(A.E(2), A.E(3)), Scalar(-1)) +
                   uq_scale(A.mul(A.E(3), A.E(2)), Scalar::q_pow(-1));
  CHECK(lusztig_T(A, 2, A.E(3)) == want);
  // Multiplicative on products.
  CHECK(lusztig_T(A, 1, A.mul(A.E(3), A.E(3))) == A.mul(A.E(3), A.E(3)));
}

TEST_CASE("Lusztig automorphism rejects unsupported inputs") {
  UqAlgebra A(2);
  CHECK_THROWS_AS(lusztig_T(A, 0, A.E(2)), UnsupportedLusztigInput);
  CHECK_THROWS_AS(lusztig_T(A, 1, A.E(1)), UnsupportedLusztigInput);
  CHECK_THROWS_AS(lusztig_T(A, 1, A.F(2)), UnsupportedLusztigInput);
  CHECK_THROWS_AS(lusztig_T(A, 1, A.K(omega(1, 2))), UnsupportedLusztigInput);
}

TEST_CASE("root vectors at rank 2: frozen values") {
  UqAlgebra A(2);
  RootVectorSet R(A);
  CHECK(R.E_xi(2) == A.E(2));
  // E_{xi_1} = -E_1 E_2 + q^{-1} E_2 E_1.
  UqElement want = uq_scale(A.mul(A.E(1), A.E(2)), Scalar(-1)) +
                   uq_scale(A.mul(A.E(2), A.E(1)), Scalar::q_pow(-1));
  CHECK(R.E_xi(1) == want);
  // script-E_i = S^{-1}(E_{xi_i}) and the star images are consistent.
  for (int i = 1; i <= 2; ++i) {
    CHECK(R.dual(i) == A.antipode_inv(R.E_xi(i)));
    CHECK(R.E_xi_star(i) == A.star(R.E_xi(i)));
    CHECK(R.dual_star(i) == A.star(R.dual(i)));
  }
}

TEST_CASE("root vector weights and the antipode-square constant") {
  UqAlgebra A(3);
  RootVectorSet R(A);
  for (int i = 1; i <= 3; ++i) {
    auto w = A.weight(R.E_xi(i));
    REQUIRE(w.has_value());
    for (int j = 1; j <= 3; ++j) CHECK((*w)[j - 1] == (j >= i ? 1 : 0));
    // S(E_{xi_i}) = q^{-2(N-i+1)} S^{-1}(E_{xi_i}).
    CHECK(A.antipode(R.E_xi(i)) ==
          uq_scale(A.antipode_inv(R.E_xi(i)), Scalar::q_pow(-2 * (3 - i + 1))));
  }
}

TEST_CASE("commutation identities at rank 3") {
  UqAlgebra A(3);
  RootVectorSet R(A);
  Scalar q = Scalar::q_pow(1), qi = Scalar::q_pow(-1);
  for (int i = 1; i < 3; ++i) {
    // E_{xi_{i+1}} K_i = q K_i E_{xi_{i+1}}.
    CHECK(A.mul(R.E_xi(i + 1), A.Kalpha(i)) ==
          uq_scale(A.mul(A.Kalpha(i), R.E_xi(i + 1)), q));
    // [F_i, E_{xi_i}] = -q^{-1} K_i^{-1} E_{xi_{i+1}}.
    UqElement lhs = A.mul(A.F(i), R.E_xi(i)) - A.mul(R.E_xi(i), A.F(i));
    CHECK(lhs ==
          uq_scale(A.mul(A.K(weight_neg(alpha(i, 3))), R.E_xi(i + 1)), -qi));
  }
}

TEST_CASE("span coordinates and the orthonormal pairing") {
  UqAlgebra A(2);
  RootVectorSet R(A);
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) {
      auto p = R.tilde_pairing(R.tilde(a), R.tilde(b));
      REQUIRE(p.has_value());
      CHECK(*p == Scalar(a == b ? 1 : 0));
    }
  // A linear combination decomposes exactly.
  UqElement y = uq_scale(R.tilde(1), Scalar::v_pow(3)) +
                uq_scale(R.tilde(2), Scalar(5));
  auto coords = R.span_coords(y);
  REQUIRE(coords.has_value());
  CHECK((*coords)[1] == Scalar::v_pow(3));
  CHECK((*coords)[2] == Scalar(5));
  // Elements outside the span are rejected.
  CHECK_FALSE(R.span_coords(A.F(1)).has_value());
  CHECK_FALSE(R.span_coords(A.mul(A.E(2), A.E(2))).has_value());
}

TEST_CASE("adjoint action moves root vectors along the ladder") {
  UqAlgebra A(3);
  RootVectorSet R(A);
  for (int i = 2; i <= 3; ++i)
    CHECK(A.adjoint_action(A.E(i - 1), R.E_xi(i)) ==
          uq_scale(R.E_xi(i - 1), Scalar(-1)));
  for (int i = 1; i < 3; ++i)
    CHECK(A.adjoint_action(A.F(i), R.E_xi(i)) ==
          uq_scale(R.E_xi(i + 1), Scalar(-1)));
}
