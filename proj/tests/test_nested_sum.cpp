#include "doctest.h"
#include "qra/fixtures.hpp"
#include "qra/nested_sum.hpp"
#include "qra/sugihara.hpp"

using namespace qra;

namespace {

// Figure layout of S3[L1]: bot < 0 < {a,b} < 1 < top, elements indexed
// [a-1, a1, 0, a, b, 1].
const std::vector<uint8_t> kS3L1Leq = {
    1, 1, 1, 1, 1, 1,  //
    0, 1, 0, 0, 0, 0,  //
    0, 1, 1, 1, 1, 1,  //
    0, 1, 0, 1, 0, 1,  //
    0, 1, 0, 0, 1, 1,  //
    0, 1, 0, 0, 0, 1};
const std::vector<int> kS3L1Mult = {
    0, 0, 0, 0, 0, 0,  //
    0, 1, 1, 1, 1, 1,  //
    0, 1, 2, 2, 2, 2,  //
    0, 1, 2, 3, 2, 3,  //
    0, 1, 2, 2, 4, 4,  //
    0, 1, 2, 3, 4, 5};
const std::vector<int> kS3L1Tilde = {1, 0, 5, 4, 3, 2};

}  // namespace

TEST_CASE("S3[L1] is the six-element algebra of the figure, exactly") {
  NestedSum s = nested_sum(sugihara_chain(3).algebra, fixtures::l1());
  REQUIRE(s.algebra.n == 6);
  CHECK(s.algebra.leq == kS3L1Leq);
  CHECK(s.algebra.mult == kS3L1Mult);
  CHECK(*s.algebra.tilde == kS3L1Tilde);
  CHECK(*s.algebra.minus == kS3L1Tilde);
  CHECK(*s.algebra.neg == kS3L1Tilde);
  CHECK(s.algebra.one == 5);
  CHECK(*s.algebra.zero == 2);
  CHECK(check_axioms(s.algebra).dqra.ok());
  CHECK(s.from_k == std::vector<int>{0, -1, 1});
  CHECK(s.from_l == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("K2[L2] is a qRA with an N5 lattice") {
  NestedSum s = nested_sum(fixtures::k2(), sugihara_chain(2).algebra);
  REQUIRE(s.algebra.n == 5);
  AxiomReport rep = check_axioms(s.algebra);
  CHECK(rep.qra.ok());
  CHECK_FALSE(rep.distributive.ok());
  CHECK_FALSE(rep.dqra.ok());

  // the whole lattice is a pentagon
  ForbiddenSublatticeResult fs = find_forbidden_sublattice(s.algebra);
  REQUIRE(fs.witness.has_value());
  CHECK(fs.witness->kind == SublatticeWitness::Kind::N5);
  CHECK(fs.witness->elems == std::array<int, 5>{0, 1, 2, 3, 4});
}

TEST_CASE("a one-element L only relabels the identity") {
  SugiharaChain s3 = sugihara_chain(3);
  NestedSum s = nested_sum(s3.algebra, fixtures::trivial());
  CHECK(s.algebra.n == 3);
  CHECK(are_isomorphic(s.algebra, s3.algebra).has_value());
}

TEST_CASE("nested_sum rejects reducible identities and signature mismatch") {
  CHECK_THROWS_WITH_AS(
      nested_sum(sugihara_chain(4).algebra, sugihara_chain(2).algebra),
      doctest::Contains("IdentityNotIrreducible"), Error);

  FiniteAlgebra bare = fixtures::l1();
  bare.neg.reset();
  CHECK_THROWS_WITH_AS(nested_sum(sugihara_chain(3).algebra, bare),
                       doctest::Contains("SignatureMismatch"), Error);
}

TEST_CASE("ordering lemma holds in every constructed sum") {
  std::vector<std::pair<FiniteAlgebra, FiniteAlgebra>> cases = {
      {sugihara_chain(3).algebra, fixtures::l1()},
      {fixtures::k2(), sugihara_chain(2).algebra},
      {sugihara_chain(5).algebra, fixtures::fig1_third()},
  };
  for (const auto& [k, l] : cases) {
    NestedSum s = nested_sum(k, l);
    for (int i = 0; i < k.n; ++i) {
      if (i == k.one) continue;
      for (int j = 0; j < l.n; ++j) {
        CHECK(s.algebra.le(s.from_k[i], s.from_l[j]) == k.le(i, k.one));
        CHECK(s.algebra.le(s.from_l[j], s.from_k[i]) == k.le(k.one, i));
      }
      for (int i2 = 0; i2 < k.n; ++i2)
        if (i2 != k.one)
          CHECK(s.algebra.le(s.from_k[i], s.from_k[i2]) == k.le(i, i2));
    }
    for (int j = 0; j < l.n; ++j)
      for (int j2 = 0; j2 < l.n; ++j2)
        CHECK(s.algebra.le(s.from_l[j], s.from_l[j2]) == l.le(j, j2));
  }
}

TEST_CASE("negations of the sum match its own residual-derived ones") {
  // Lemma on negation behaviour: the inherited tables must agree with the
  // linear negations computed inside the sum itself.
  for (const auto& [k, l] : std::vector<std::pair<FiniteAlgebra, FiniteAlgebra>>{
           {sugihara_chain(3).algebra, fixtures::l1()},
           {fixtures::k2(), sugihara_chain(2).algebra}}) {
    NestedSum s = nested_sum(k, l);
    ResidualTables rt = residuals(s.algebra);
    for (int x = 0; x < s.algebra.n; ++x) {
      CHECK((*s.algebra.tilde)[x] == rt.under_of(x, *s.algebra.zero));
      CHECK((*s.algebra.minus)[x] == rt.over_of(*s.algebra.zero, x));
    }
  }
}

TEST_CASE("idempotents and commutativity are inherited") {
  SugiharaChain s3 = sugihara_chain(3);
  FiniteAlgebra l1 = fixtures::l1();
  NestedSum s = nested_sum(s3.algebra, l1);
  for (int i = 0; i < s3.n; ++i)
    if (i != s3.algebra.one && element_idempotent(s3.algebra, i))
      CHECK(element_idempotent(s.algebra, s.from_k[i]));
  for (int j = 0; j < l1.n; ++j)
    if (element_idempotent(l1, j))
      CHECK(element_idempotent(s.algebra, s.from_l[j]));
  CHECK(check_axioms(s.algebra).commutative.ok());
}

TEST_CASE("admissibility report") {
  AdmissibilityReport s3 = admissibility_report(sugihara_chain(3).algebra);
  CHECK(s3.totally_irreducible);
  CHECK(s3.condition4);

  AdmissibilityReport s4 = admissibility_report(sugihara_chain(4).algebra);
  CHECK_FALSE(s4.totally_irreducible);
  CHECK_FALSE(s4.condition4);  // a-1 \ a1 = a1 on the even chain

  AdmissibilityReport k2 = admissibility_report(fixtures::k2());
  CHECK(k2.totally_irreducible);
  CHECK(k2.condition4);
}

TEST_CASE("irreducibility of 1 w.r.t. the residuals implies condition (4)") {
  // on every residuated K we can build: the per-op under/over verdicts
  // imply the condition-4 verdict
  for (const FiniteAlgebra& k :
       {sugihara_chain(3).algebra, sugihara_chain(4).algebra,
        sugihara_chain(5).algebra, fixtures::k2(), fixtures::l1(),
        fixtures::fig1_third()}) {
    AdmissibilityReport rep = admissibility_report(k);
    bool res_irr = true;
    for (const auto& p : rep.per_op)
      if ((p.op == "under" || p.op == "over") && !p.irreducible)
        res_irr = false;
    if (res_irr) CHECK(rep.condition4);
  }
}

TEST_CASE("conic_sum_check") {
  ConicSumVerdict a = conic_sum_check(sugihara_chain(3).algebra,
                                      fixtures::l1());
  CHECK(a.k_conic);
  CHECK(a.sum_distributive);
  CHECK_FALSE(a.n5.has_value());

  ConicSumVerdict b = conic_sum_check(fixtures::k2(),
                                      sugihara_chain(2).algebra);
  CHECK_FALSE(b.k_conic);
  CHECK_FALSE(b.sum_distributive);
  REQUIRE(b.n5.has_value());
  // {a, bot, top, 0_L, 1_L} in sum coordinates = {1, 0, 2, 3, 4}
  CHECK(b.n5->elems == std::array<int, 5>{1, 0, 2, 3, 4});

  ConicSumVerdict c = conic_sum_check(sugihara_chain(5).algebra,
                                      sugihara_chain(2).algebra);
  CHECK(c.k_conic);
  CHECK(c.sum_distributive);
  CHECK(are_isomorphic(c.sum.algebra, sugihara_chain(6).algebra).has_value());
}

TEST_CASE("collapse family: S_n[S_m] = S_{n+m-1} within size 12") {
  for (int n = 3; n <= 11; n += 2)
    for (int m = 2; n + m - 1 <= 12; ++m) {
      AlgebraMap iso = collapse_iso(n, m);
      CHECK(iso.all_preserved());
      NestedSum sum = nested_sum(sugihara_chain(n).algebra,
                                 sugihara_chain(m).algebra);
      CHECK(are_isomorphic(sum.algebra, sugihara_chain(n + m - 1).algebra)
                .has_value());
    }
}

TEST_CASE("cyclicity is inherited by the sum") {
  for (const auto& [k, l] :
       std::vector<std::pair<FiniteAlgebra, FiniteAlgebra>>{
           {sugihara_chain(3).algebra, fixtures::l1()},
           {fixtures::k2(), sugihara_chain(2).algebra},
           {sugihara_chain(5).algebra, sugihara_chain(3).algebra}}) {
    REQUIRE(check_axioms(k).cyclic.ok());
    REQUIRE(check_axioms(l).cyclic.ok());
    CHECK(check_axioms(nested_sum(k, l).algebra).cyclic.ok());
  }
}

TEST_CASE("sums stay qRAs even when L is not distributive") {
  // conic K with the non-distributive five-element qRA inside
  NestedSum s = nested_sum(sugihara_chain(3).algebra, fixtures::fig1_third());
  AxiomReport rep = check_axioms(s.algebra);
  CHECK(rep.qra.ok());
  CHECK_FALSE(rep.distributive.ok());  // inherited from L
  CHECK_FALSE(rep.dqra.ok());
}

TEST_CASE("a reducible identity is rejected with the violating operation") {
  // the five-element example has 0\0 = 1, caught by the residual scan
  try {
    nested_sum(fixtures::fig1_third(), sugihara_chain(2).algebra);
    FAIL("expected IdentityNotIrreducible");
  } catch (const Error& e) {
    CHECK(e.code() == "IdentityNotIrreducible");
    CHECK(std::string(e.what()).find("under") != std::string::npos);
    CHECK(e.witness() == std::vector<int>{2, 2});
  }
}
