#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cpnq/rewrite.hpp"

using namespace cpnq;

TEST_CASE("Serre relation generators") {
  auto rels = serre_relations(LetterKind::E, 3);
  // Adjacent pairs contribute two relations each (i,j) and (j,i); distant
  // pairs one commutator: rank 3 has adjacents (1,2),(2,3) -> 4 relations,
  // distant (1,3) -> 1.
  CHECK(rels.size() == 5);
  for (const auto& p : rels) CHECK_FALSE(p.is_zero());
}

TEST_CASE("completed system reduces the defining relations to zero") {
  for (int rank : {2, 3}) {
    RewriteSystem sys = gb_complete(LetterKind::E, rank, 8);
    for (const auto& rel : serre_relations(LetterKind::E, rank))
      CHECK(sys.reduce(rel).is_zero());
  }
}

TEST_CASE("degree bound validation") {
  CHECK_THROWS_AS(gb_complete(LetterKind::E, 2, 2), std::invalid_argument);
}

TEST_CASE("normal forms are independent of multiplication order") {
  // Confluence witness: products of the same letters, parenthesized and
  // reduced in different interleavings, give identical normal forms.
  RewriteSystem sys = gb_complete(LetterKind::E, 3, 10);
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> gen(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> letters(6);
    for (int& x : letters) x = gen(rng);
    // Left-to-right reduction with intermediate normalization...
    NCPoly acc = NCPoly::monomial({});
    for (int x : letters) {
      acc = acc * NCPoly::monomial({{LetterKind::E, x}});
      acc = sys.reduce(acc);
    }
    // ...versus a single reduction of the full word...
    Word w;
    for (int x : letters) w.push_back({LetterKind::E, x});
    NCPoly whole = sys.reduce_word(w);
    CHECK(acc == whole);
    // ...versus reducing two halves first and multiplying.
    Word left(w.begin(), w.begin() + 3), right(w.begin() + 3, w.end());
    NCPoly halves = sys.reduce(sys.reduce_word(left) * sys.reduce_word(right));
    CHECK(halves == whole);
  }
}

TEST_CASE("reduction is idempotent and deterministic") {
  RewriteSystem sys = gb_complete(LetterKind::F, 2, 8);
  Word w = fword({2, 1, 2, 1, 2});
  NCPoly once = sys.reduce_word(w);
  CHECK(sys.reduce(once) == once);
  CHECK(sys.reduce_word(w) == once);
  for (const auto& [nw, c] : once.terms()) CHECK(sys.is_irreducible(nw));
}

TEST_CASE("irreducible words at rank 2 match the PBW count") {
  // Positive roots of sl_3 have heights {1,1,2}; the number of irreducible
  // words of degree d equals the Kostant count 1, 2, 4, 6, 9, ...
  RewriteSystem sys = gb_complete(LetterKind::E, 2, 8);
  auto count = [&](int d) {
    int n = 0;
    std::vector<int> idx(d, 1);
    for (;;) {
      Word w;
      for (int i : idx) w.push_back({LetterKind::E, i});
      if (sys.is_irreducible(w)) ++n;
      int p = d - 1;
      while (p >= 0 && idx[p] == 2) idx[p--] = 1;
      if (p < 0) break;
      ++idx[p];
    }
    return n;
  };
  CHECK(count(1) == 2);
  CHECK(count(2) == 4);
  CHECK(count(3) == 6);
  CHECK(count(4) == 9);
}
