#include <catch2/catch_amalgamated.hpp>

#include "cpnq/scalar.hpp"

using namespace cpnq;

TEST_CASE("constants and canonical rendering") {
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).to_string() == "1");
  CHECK(Scalar(mpq_class(-3, 4)).to_string() == "-3/4");
  CHECK(Scalar::v_pow(2).to_string() == "v^2");
  CHECK(Scalar::q_pow(1).to_string() == "v^2");
  CHECK(Scalar::q_pow(-1).to_string() == "1/v^2");
  CHECK(Scalar::s_pow(2).to_string() == "s^2");
  CHECK((Scalar::v_pow(4) - Scalar(1)).to_string() == "v^4 - 1");
}

TEST_CASE("field axioms on a sample set") {
  std::vector<Scalar> xs = {
      Scalar(1),
      Scalar(mpq_class(2, 3)),
      Scalar::v_pow(3),
      Scalar::v_pow(-2),
      Scalar::q_pow(1) - Scalar::q_pow(-1),
      Scalar::v_pow(1) + Scalar(1),
      Scalar::s_var(),
      Scalar::s_var() * Scalar::v_pow(-2) + Scalar::s_pow(2),
  };
  for (const auto& a : xs)
    for (const auto& b : xs) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - b == -(b - a));
      for (const auto& c : xs) {
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  for (const auto& a : xs) {
    CHECK(a + Scalar(0) == a);
    CHECK(a * Scalar(1) == a);
    CHECK(a - a == Scalar(0));
  }
}

TEST_CASE("division and inversion") {
  Scalar a = Scalar::v_pow(4) - Scalar(1);
  Scalar b = Scalar::v_pow(2) - Scalar(1);
  CHECK(a / b == Scalar::v_pow(2) + Scalar(1));
  CHECK(b * b.inverse() == Scalar(1));
  // s-monomials are invertible; mixed-s numerators are not.
  CHECK(Scalar::s_var().inverse() * Scalar::s_var() == Scalar(1));
  CHECK_THROWS_AS((Scalar::s_var() + Scalar(1)).inverse(), NonInvertibleError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), NonInvertibleError);
}

TEST_CASE("canonical form is stable under arithmetic detours") {
  Scalar x = (Scalar::v_pow(4) - Scalar(1)) / (Scalar::v_pow(2) + Scalar(1));
  Scalar y = Scalar::v_pow(2) - Scalar(1);
  CHECK(x == y);
  CHECK(x.to_string() == y.to_string());
  Scalar z = x * Scalar(mpq_class(7, 3));
  CHECK(z / Scalar(mpq_class(7, 3)) == y);
}

TEST_CASE("q-integers and q-factorials match the oracle") {
  // [n] = (q^n - q^{-n}) / (q - q^{-1}); values frozen from an independent
  // computer-algebra computation.
  CHECK(q_num(1) == Scalar(1));
  CHECK(q_num(2) == Scalar::v_pow(2) + Scalar::v_pow(-2));
  CHECK(q_num(3) == Scalar::v_pow(4) + Scalar(1) + Scalar::v_pow(-4));
  CHECK(q_factorial(2).to_string() == "(v^4 + 1)/v^2");
  CHECK(q_factorial(3).to_string() == "(v^12 + 2*v^8 + 2*v^4 + 1)/v^6");
  CHECK(q_factorial(4).to_string() ==
        "(v^24 + 3*v^20 + 5*v^16 + 6*v^12 + 5*v^8 + 3*v^4 + 1)/v^12");
}

TEST_CASE("specialization and poles") {
  Scalar x = (Scalar::v_pow(2) + Scalar(1)) / (Scalar::v_pow(2) - Scalar(1));
  CHECK(x.specialize(2) == mpq_class(5, 3));
  CHECK_THROWS_AS(x.specialize(1), PoleError);
  CHECK_THROWS_AS(x.specialize(0), PoleError);
  // The parameter s blocks pure-v specialization.
  CHECK_THROWS_AS(Scalar::s_var().specialize(2), std::exception);
}
