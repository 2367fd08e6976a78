// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// pinned tolerances and runtime budgets. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qra/algebra.hpp"
#include "qra/fixtures.hpp"
#include "qra/model_search.hpp"
#include "qra/nested_rep.hpp"
#include "qra/nested_sum.hpp"
#include "qra/representation.hpp"
#include "qra/sugihara.hpp"
#include "test_support.hpp"

using namespace qra;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // <= 0 means no runtime requirement
  std::function<Outcome()> run;
};

#define EXPECT(cond, msg)                         \
  do {                                            \
    if (!(cond)) return Outcome{false, (msg)};    \
  } while (0)

Outcome criterion1() {
  AxiomReport l1 = check_axioms(fixtures::l1());
  EXPECT(l1.dqra.ok(), "L1 must be a DqRA");
  EXPECT(l1.cyclic.ok(), "L1 must be cyclic");
  EXPECT(!l1.odd.ok(), "L1 must not be odd");

  AxiomReport k2 = check_axioms(fixtures::k2());
  EXPECT(k2.qra.ok(), "K2 must be a qRA");
  EXPECT(k2.odd.ok(), "K2 must be odd");
  EXPECT(!k2.conic.ok(), "K2 must not be conic");

  AxiomReport third = check_axioms(fixtures::fig1_third());
  EXPECT(third.qra.ok(), "third algebra must be a qRA");
  EXPECT(!third.distributive.ok(), "third algebra must not be distributive");
  ForbiddenSublatticeResult fs = find_forbidden_sublattice(fixtures::fig1_third());
  EXPECT(fs.witness.has_value() &&
             fs.witness->kind == SublatticeWitness::Kind::N5,
         "third algebra needs an N5 witness");
  return {};
}

Outcome criterion2() {
  for (int n = 2; n <= 12; ++n) {
    SugiharaChain s = sugihara_chain(n);
    AxiomReport rep = check_axioms(s.algebra);
    EXPECT(rep.dqra.ok(), "S" + std::to_string(n) + " must be a DqRA");
  }
  for (int n = 3; n <= 11; n += 2) {
    SugiharaChain s = sugihara_chain(n);
    EXPECT(is_totally_irreducible(s.algebra, s.algebra.one).irreducible,
           "a0 of S" + std::to_string(n) + " must be totally irreducible");
  }
  return {};
}

Outcome criterion3() {
  NestedSum s = nested_sum(sugihara_chain(3).algebra, fixtures::l1());
  EXPECT(s.algebra.n == 6, "S3[L1] must have six elements");
  const std::vector<uint8_t> leq = {1, 1, 1, 1, 1, 1, 0, 1, 0, 0, 0, 0,
                                    0, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1,
                                    0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1};
  const std::vector<int> mult = {0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1,
                                 0, 1, 2, 2, 2, 2, 0, 1, 2, 3, 2, 3,
                                 0, 1, 2, 2, 4, 4, 0, 1, 2, 3, 4, 5};
  const std::vector<int> unary = {1, 0, 5, 4, 3, 2};
  EXPECT(s.algebra.leq == leq, "S3[L1] Hasse mismatch");
  EXPECT(s.algebra.mult == mult, "S3[L1] mult mismatch");
  EXPECT(*s.algebra.tilde == unary && *s.algebra.minus == unary &&
             *s.algebra.neg == unary,
         "S3[L1] negation tables mismatch");
  EXPECT(s.algebra.one == 5 && *s.algebra.zero == 2,
         "S3[L1] constants mismatch");
  EXPECT(check_axioms(s.algebra).dqra.ok(), "S3[L1] must be a DqRA");

  NestedSum t = nested_sum(fixtures::k2(), sugihara_chain(2).algebra);
  EXPECT(t.algebra.n == 5, "K2[L2] must have five elements");
  AxiomReport rep = check_axioms(t.algebra);
  EXPECT(rep.qra.ok(), "K2[L2] must be a qRA");
  EXPECT(!rep.distributive.ok(), "K2[L2] must not be distributive");

  // the lattice reduct is the pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4
  FiniteAlgebra n5;
  n5.n = 5;
  n5.leq.assign(25, 0);
  auto le = [&](int i, int j) { n5.leq[static_cast<size_t>(i) * 5 + j] = 1; };
  for (int i = 0; i < 5; ++i) le(i, i);
  le(0, 1);
  le(0, 2);
  le(0, 3);
  le(0, 4);
  le(1, 2);
  le(1, 4);
  le(2, 4);
  le(3, 4);
  n5.mult.assign(25, 0);
  FiniteAlgebra reduct;
  reduct.n = 5;
  reduct.leq = t.algebra.leq;
  reduct.mult.assign(25, 0);
  EXPECT(posets_isomorphic(reduct, n5).has_value(),
         "K2[L2] lattice must be the pentagon");
  return {};
}

Outcome criterion4() {
  for (int n = 3; n <= 11; n += 2)
    for (int m = 2; n + m - 1 <= 12; ++m) {
      AlgebraMap iso = collapse_iso(n, m);
      EXPECT(iso.bijective() && iso.all_preserved(),
             "collapse iso fails at (" + std::to_string(n) + "," +
                 std::to_string(m) + ")");
      NestedSum sum =
          nested_sum(sugihara_chain(n).algebra, sugihara_chain(m).algebra);
      EXPECT(are_isomorphic(sum.algebra, sugihara_chain(n + m - 1).algebra)
                 .has_value(),
             "independent isomorphism search fails at (" + std::to_string(n) +
                 "," + std::to_string(m) + ")");
    }
  return {};
}

Outcome criterion5() {
  std::vector<BinRel> u34 = enumerate_upsets(fixtures::ctx_s3());
  EXPECT(u34.size() == 16, "the antichain context must have 16 up-sets");
  std::vector<BinRel> u33 = enumerate_upsets(fixtures::ctx_s2());
  EXPECT(u33.size() == 2, "the one-point context must have 2 up-sets");

  std::vector<RepContext> contexts = {fixtures::ctx_s2(), fixtures::ctx_s3(),
                                      fixtures::ctx_l1()};
  std::mt19937 rng(20260808);
  while (contexts.size() < 23) {
    RepContext ctx = qra_test::random_context(rng, 200, 20);
    contexts.push_back(std::move(ctx));
  }
  for (size_t i = 0; i < contexts.size(); ++i) {
    std::vector<BinRel> ups = enumerate_upsets(contexts[i]);
    FiniteAlgebra a = upset_algebra(contexts[i], ups);
    AxiomReport rep = check_axioms(a);
    EXPECT(rep.dqra.ok(),
           "Dq(E) fails the DqRA axioms on context " + std::to_string(i));
  }
  return {};
}

Outcome criterion6() {
  {
    NestedContext nctx = build_nested_context(fixtures::ctx_l1());
    PsiMap psi = build_psi(nctx, fixtures::l1(), fixtures::phi_l1());
    int n = nctx.ctx.points.n;
    BinRel uu(n), vv(n);
    uu.set(0, 0);
    vv.set(1, 1);
    EXPECT(psi.images[0].empty(), "psi(bot) must be empty");
    EXPECT(psi.images[1] == nctx.ctx.e, "psi(top) must be E");
    EXPECT(psi.images[2] == psi.r_relation, "psi(0) must be R");
    EXPECT(psi.images[3] == nctx.ctx.points.leq.minus(vv),
           "psi(a) must be <= minus {(v,v)}");
    EXPECT(psi.images[4] == nctx.ctx.points.leq.minus(uu),
           "psi(b) must be <= minus {(u,u)}");
    EXPECT(psi.images[5] == nctx.ctx.points.leq, "psi(1) must be <=");
    EXPECT(psi.embedding.passes(), "diamond psi must verify");
  }
  {
    NestedContext nctx = build_nested_context(fixtures::ctx_s2());
    PsiMap psi =
        build_psi(nctx, sugihara_chain(2).algebra, fixtures::phi_s2());
    BinRel uu(nctx.ctx.points.n);
    uu.set(0, 0);
    EXPECT(psi.images[0].empty() && psi.images[1] == nctx.ctx.e &&
               psi.images[2] == nctx.ctx.points.leq.minus(uu) &&
               psi.images[3] == nctx.ctx.points.leq,
           "S3[S2] images must be the four-relation chain");
    EXPECT(psi.embedding.passes(), "S3[S2] psi must verify");
  }
  {
    NestedContext nctx = build_nested_context(fixtures::ctx_s3());
    PsiMap psi =
        build_psi(nctx, sugihara_chain(3).algebra, fixtures::phi_s3());
    int n = nctx.ctx.points.n;
    BinRel core_id(n), core_swap(n);
    core_id.set(0, 0);
    core_id.set(1, 1);
    core_swap.set(0, 1);
    core_swap.set(1, 0);
    EXPECT(psi.images[0].empty() && psi.images[1] == nctx.ctx.e &&
               psi.images[2] == nctx.ctx.points.leq.minus(core_id) &&
               psi.images[3] == nctx.ctx.points.leq &&
               psi.images[4] == (nctx.ctx.points.leq | core_swap),
           "S3[S3] images must be the five-relation chain");
    EXPECT(psi.embedding.passes(), "S3[S3] psi must verify");
  }
  return {};
}

Outcome criterion7() {
  const int expected_points[] = {0, 0, 1, 2, 5, 6, 9, 10, 13, 14};
  for (int n = 2; n <= 9; ++n) {
    SugiharaRepresentation rep = sugihara_representation(n);
    EXPECT(rep.embedding.passes(),
           "representation of S" + std::to_string(n) + " must verify");
    EXPECT(rep.ctx.points.n == expected_points[n],
           "point count of S" + std::to_string(n) + " representation");
  }
  for (int n = 4; n <= 7; ++n) {
    SugiharaRepresentation rep = sugihara_representation(n);
    FiniteAlgebra p;
    p.n = rep.ctx.points.n;
    p.leq.assign(static_cast<size_t>(p.n) * p.n, 0);
    p.mult.assign(static_cast<size_t>(p.n) * p.n, 0);
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        p.leq[static_cast<size_t>(i) * p.n + j] = rep.ctx.points.leq.at(i, j);
    EXPECT(posets_isomorphic(p, fixtures::ladder_poset(n)).has_value(),
           "S" + std::to_string(n) + " poset must match the drawn ladder");
  }
  return {};
}

Outcome criterion8() {
  NestedRepresentation rep = sn_nested_representation(
      5, fixtures::l1(), fixtures::ctx_l1(), fixtures::phi_l1());
  EXPECT(rep.sum.algebra.n == 8, "S5[L1] must have eight elements");
  EXPECT(rep.embedding.passes(), "S5[L1] embedding must verify");
  for (const auto& check : rep.embedding.report)
    EXPECT(check.ok, "preservation of " + check.op + " fails");
  return {};
}

Outcome criterion9() {
  auto spec = [](int n) {
    SearchSpec s;
    s.size = n;
    s.constraints = {Constraint::Dqra, Constraint::Conic,
                     Constraint::TotallyIrreducibleOne};
    return s;
  };
  const int expected_count[] = {0, 0, 0, 1, 0, 1, 0, 1};
  for (int n = 3; n <= 7; ++n) {
    ModelSet ms = enumerate_models(spec(n));
    EXPECT(ms.exhaustive, "search at size " + std::to_string(n) +
                              " must be exhaustive");
    EXPECT(static_cast<int>(ms.models.size()) == expected_count[n],
           "model count at size " + std::to_string(n));
    for (const FoundModel& m : ms.models) {
      EXPECT(is_chain(m.algebra),
             "every model at size " + std::to_string(n) + " must be a chain");
      EXPECT(are_isomorphic(m.algebra, sugihara_chain(n).algebra).has_value(),
             "the size-" + std::to_string(n) + " model must be the chain S" +
                 std::to_string(n));
    }
  }
  return {};
}

Outcome criterion10() {
  // 10a: residuation triple equivalence on generated residuated lattices
  {
    std::mt19937 rng(101);
    std::vector<FiniteAlgebra> pool;
    for (const auto& m : qra_test::oracle_residuated_lattices(3))
      pool.push_back(m.algebra);
    for (int n = 2; n <= 9; ++n) pool.push_back(sugihara_chain(n).algebra);
    for (int round = 0; round < 6; ++round) {
      RepContext ctx = qra_test::random_context(rng, 80);
      pool.push_back(upset_algebra(ctx, enumerate_upsets(ctx)));
    }
    int cases = 0;
    while (cases < 1000) {
      const FiniteAlgebra& a = pool[rng() % pool.size()];
      ResidualTables rt = residuals(a);
      int x = static_cast<int>(rng() % a.n);
      int y = static_cast<int>(rng() % a.n);
      int c = static_cast<int>(rng() % a.n);
      bool lhs = a.le(a.prod(x, y), c);
      EXPECT(lhs == a.le(x, rt.over_of(c, y)),
             "triple equivalence (over) fails");
      EXPECT(lhs == a.le(y, rt.under_of(x, c)),
             "triple equivalence (under) fails");
      ++cases;
    }
  }
  // 10b: graph identities for random bijections inside E
  {
    std::mt19937 rng(103);
    int cases = 0;
    while (cases < 1000) {
      RepContext ctx = qra_test::random_context(rng, 120);
      std::vector<int> gamma(ctx.points.n);
      for (int i = 0; i < ctx.points.n; ++i) gamma[i] = i;
      if (rng() % 2)
        for (int i = 0; i < ctx.points.n; ++i) gamma[i] = ctx.alpha[gamma[i]];
      if (rng() % 2)
        for (int i = 0; i < ctx.points.n; ++i) gamma[i] = ctx.beta[gamma[i]];
      BinRel g = graph_of(gamma);
      for (int k = 0; k < 4 && cases < 1000; ++k, ++cases) {
        BinRel r(ctx.points.n);
        for (auto [x, y] : ctx.e.pairs())
          if (rng() % 2) r.set(x, y);
        EXPECT(graph_identities_check(g, r, ctx.e).holds(),
               "graph identity fails");
      }
    }
  }
  // 10c: up-set closure under meet, join, composition
  {
    std::mt19937 rng(107);
    int cases = 0;
    while (cases < 1000) {
      RepContext ctx = qra_test::random_context(rng, 120);
      for (int k = 0; k < 8 && cases < 1000; ++k, ++cases) {
        BinRel r = qra_test::random_upset(rng, ctx);
        BinRel s = qra_test::random_upset(rng, ctx);
        EXPECT(is_upset(ctx.points, ctx.e, r & s), "meet closure fails");
        EXPECT(is_upset(ctx.points, ctx.e, r | s), "join closure fails");
        EXPECT(is_upset(ctx.points, ctx.e, compose(r, s)),
               "composition closure fails");
      }
    }
  }
  // 10d: the irreducibility lemmas on every oracle InFL instance, size <= 5
  for (int n = 1; n <= 5; ++n) {
    for (const auto& inst : qra_test::oracle_infl_instances(n)) {
      const FiniteAlgebra& a = inst.algebra;
      ResidualTables rt = residuals(a);
      int one = a.one;
      auto irr_binary = [&](auto&& f) {
        for (int x = 0; x < a.n; ++x)
          for (int y = 0; y < a.n; ++y)
            if (x != one && y != one && f(x, y) == one) return false;
        return true;
      };
      auto irr_unary = [&](const std::vector<int>& t) {
        for (int x = 0; x < a.n; ++x)
          if (x != one && t[x] == one) return false;
        return true;
      };
      bool irr_res =
          irr_binary([&](int x, int y) { return rt.under_of(x, y); }) &&
          irr_binary([&](int x, int y) { return rt.over_of(x, y); });
      if (irr_res)
        for (int k = 0; k < a.n; ++k) {
          if (k == one) continue;
          EXPECT(rt.under_of(k, one) != one && rt.over_of(one, k) != one,
                 "condition (4) fails below a residual-irreducible identity");
        }
      if (irr_binary([&](int x, int y) { return a.prod(x, y); })) {
        bool irr_neg = irr_unary(*a.tilde) && irr_unary(*a.minus);
        bool odd = (*a.zero == one);
        EXPECT(irr_neg == irr_res && irr_neg == odd,
               "irreducibility equivalences fail on an InFL instance");
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Figure-1 fixtures classified exactly", 1.0, criterion1},
      {2, "Sugihara chains S2..S12 are DqRAs; odd identities irreducible", 5.0,
       criterion2},
      {3, "nested-sum golden tables (S3[L1] exact, K2[L2] pentagon)", 0.0,
       criterion3},
      {4, "S_n[S_m] = S_{n+m-1} for odd n within size 12", 10.0, criterion4},
      {5, "full Up(E) algebras are DqRAs; exact up-set counts", 0.0,
       criterion5},
      {6, "psi images bit-exact for L in {S2, S3, L1}", 0.0, criterion6},
      {7, "finite representations of S2..S9; ladder posets for S4..S7", 30.0,
       criterion7},
      {8, "verified embedding of the eight-element S5[L1]", 0.0, criterion8},
      {9, "exhaustive model search, sizes 3..7", 600.0, criterion9},
      {10, "property suites (residuation, graph identities, closure, lemmas)",
       0.0, criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const Error& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    bool in_budget = c.budget_seconds <= 0 || secs <= c.budget_seconds;
    bool pass = out.pass && in_budget;
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": "
         << c.title << " (" << std::fixed;
    line.precision(2);
    line << secs << "s";
    if (c.budget_seconds > 0) line << " / " << c.budget_seconds << "s budget";
    line << ")";
    if (!out.pass) line << " -- " << out.detail;
    if (out.pass && !in_budget) line << " -- over runtime budget";
    std::printf("%s\n", line.str().c_str());
    if (!pass) ++failures;
  }
  return failures;
}
