#include "doctest.h"
#include "qra/sugihara.hpp"
#include "qra/nested_sum.hpp"

using namespace qra;

TEST_CASE("sugihara_chain small cases") {
  CHECK_THROWS_WITH_AS(sugihara_chain(1), doctest::Contains("SizeTooSmall"),
                       Error);

  SugiharaChain s2 = sugihara_chain(2);
  CHECK(s2.algebra.one == 1);   // a1
  CHECK(*s2.algebra.zero == 0); // a-1
  CHECK(s2.label == std::vector<int>{-1, 1});

  SugiharaChain s3 = sugihara_chain(3);
  CHECK(s3.algebra.one == 1);  // a0
  CHECK(*s3.algebra.zero == 1);
  CHECK(s3.algebra.name(1) == "a0");

  SugiharaChain s5 = sugihara_chain(5);
  int a2 = s5.index_of(2), am2 = s5.index_of(-2);
  CHECK(s5.algebra.prod(a2, am2) == am2);  // |i| = |j| takes the min
  CHECK(s5.algebra.prod(am2, a2) == am2);
  CHECK(s5.algebra.prod(s5.index_of(1), am2) == am2);  // larger weight wins
}

TEST_CASE("chains are DqRAs through size 12") {
  for (int n = 2; n <= 12; ++n) {
    SugiharaChain s = sugihara_chain(n);
    AxiomReport rep = check_axioms(s.algebra);
    CHECK(rep.dqra.ok());
    CHECK(rep.commutative.ok());
    CHECK(rep.idempotent.ok());
    CHECK(rep.cyclic.ok());
    CHECK(rep.conic.ok());
    CHECK(rep.odd.ok() == (n % 2 == 1));
  }
}

TEST_CASE("implication table is the residual") {
  for (int n : {4, 7}) {
    SugiharaChain s = sugihara_chain(n);
    ResidualTables rt = residuals(s.algebra);
    CHECK(rt.under == s.implies);
  }
}

TEST_CASE("identity irreducibility by parity") {
  for (int n = 3; n <= 11; n += 2)
    CHECK(is_totally_irreducible(sugihara_chain(n).algebra,
                                 sugihara_chain(n).algebra.one)
              .irreducible);
  for (int n = 2; n <= 12; n += 2)
    CHECK_FALSE(is_totally_irreducible(sugihara_chain(n).algebra,
                                       sugihara_chain(n).algebra.one)
                    .irreducible);
}

TEST_CASE("collapse_iso produces verified isomorphisms") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{
           {3, 2}, {3, 3}, {5, 4}, {5, 2}, {7, 3}}) {
    AlgebraMap iso = collapse_iso(n, m);
    CHECK(iso.bijective());
    CHECK(iso.all_preserved());
    CHECK(iso.target.n == n + m - 1);
  }
  CHECK_THROWS_WITH_AS(collapse_iso(4, 2), doctest::Contains("EvenOuterChain"),
                       Error);
}
