#include <catch2/catch_amalgamated.hpp>

#include "cpnq/freealg.hpp"

using namespace cpnq;

TEST_CASE("deglex order: length first, then lexicographic") {
  CHECK(deglex_compare(eword({1}), eword({1, 1})) == std::strong_ordering::less);
  CHECK(deglex_compare(eword({2, 2}), eword({1, 1, 1})) ==
        std::strong_ordering::less);
  CHECK(deglex_compare(eword({1, 2}), eword({2, 1})) ==
        std::strong_ordering::less);
  CHECK(deglex_compare(eword({2, 1}), eword({1, 2})) ==
        std::strong_ordering::greater);
  CHECK(deglex_compare(eword({1, 2}), eword({1, 2})) ==
        std::strong_ordering::equal);
  // E letters sort below F letters of the same index.
  CHECK(deglex_compare(eword({1}), fword({1})) == std::strong_ordering::less);
}

TEST_CASE("word rendering") {
  CHECK(word_to_string({}) == "1");
  CHECK(word_to_string(eword({1, 2, 1})) == "E1.E2.E1");
  CHECK(word_to_string(fword({3})) == "F3");
}

TEST_CASE("polynomial arithmetic and cancellation") {
  NCPoly p = NCPoly::monomial(eword({1, 2}));
  NCPoly q = NCPoly::monomial(eword({2, 1}), Scalar::q_pow(-1));
  NCPoly sum = p + q;
  CHECK(sum.terms().size() == 2);
  CHECK((sum - p - q).is_zero());
  CHECK(sum.lead_word() == eword({2, 1}));
  CHECK(sum.lead_coeff() == Scalar::q_pow(-1));
  // Concatenation product.
  NCPoly prod = p * q;
  REQUIRE(prod.terms().size() == 1);
  CHECK(prod.lead_word() == eword({1, 2, 2, 1}));
  CHECK(prod.lead_coeff() == Scalar::q_pow(-1));
  // Distributivity on a small sample.
  NCPoly r = NCPoly::monomial(eword({1}), Scalar(2));
  CHECK((p + q) * r == p * r + q * r);
  CHECK(r * (p + q) == r * p + r * q);
}

TEST_CASE("scaling by zero annihilates") {
  NCPoly p = NCPoly::monomial(eword({1, 2})) + NCPoly::monomial(eword({2}));
  CHECK(p.scaled(Scalar(0)).is_zero());
  CHECK(p.scaled(Scalar(1)) == p);
}
