// Dq(E): the DqRA of up-sets of a partially ordered equivalence relation,
// built from a validated context (X, <=, E, alpha, beta); subalgebra
// generation and embedding verification / search.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qra/algebra.hpp"
#include "qra/relcalc.hpp"

namespace qra {

struct RepContext {
  PointSet points;         // (X, <=)
  BinRel e;                // equivalence with <= contained in E
  std::vector<int> alpha;  // order automorphism
  std::vector<int> beta;   // self-inverse dual order automorphism

  BinRel alpha_graph() const { return graph_of(alpha); }
  BinRel beta_graph() const { return graph_of(beta); }
};

// Checks every hypothesis of the construction, one named error each:
// LeqNotInE, NotAnEquivalence, AlphaNotAutomorphism, AlphaNotInE,
// BetaNotDualAutomorphism, BetaNotSelfInverse, BetaNotInE,
// AlphaBetaAlphaViolated.
RepContext validate_context(PointSet points, BinRel e, std::vector<int> alpha,
                            std::vector<int> beta);

struct DqConstants {
  BinRel one;   // <=
  BinRel zero;  // alpha ; <=^{c~}
};
DqConstants dq_constants(const RepContext& ctx);

struct DqUnary {
  BinRel tilde;  // R^{c~} ; alpha
  BinRel minus;  // alpha ; R^{c~}
  BinRel neg;    // alpha ; beta ; R^c ; beta
};
DqUnary dq_unary(const RepContext& ctx, const BinRel& r);  // NotAnUpset

// (R\S, R/S) = ((R~ ; S^c)^c, (R^c ; S~)^c). Throws NotAnUpset.
std::pair<BinRel, BinRel> dq_residuals(const RepContext& ctx, const BinRel& r,
                                       const BinRel& s);

// Complete duplicate-free list of the up-sets of (E, preceq), sorted by
// (cardinality, row-major bits). Throws TooManyUpsets above the cap.
std::vector<BinRel> enumerate_upsets(const RepContext& ctx,
                                     size_t cap = size_t{1} << 20);

// Least subset containing the generators, 1 and 0, closed under meet, join,
// composition and the three negations.
std::vector<BinRel> generate_subalgebra(const RepContext& ctx,
                                        std::vector<BinRel> generators);

// Views a composition-closed element list as a FiniteAlgebra: inclusion
// order, ; as mult, the Dq negations as unary tables, 1 = <= and
// 0 = alpha ; <=^{c~}.
FiniteAlgebra upset_algebra(const RepContext& ctx,
                            const std::vector<BinRel>& elements);

struct RelEmbedding {
  std::vector<BinRel> images;  // per source element
  struct OpCheck {
    std::string op;
    bool ok = false;
    std::vector<int> witness;
  };
  std::vector<OpCheck> report;
  bool passes() const {
    for (const OpCheck& c : report)
      if (!c.ok) return false;
    return !report.empty();
  }
};

// Full preservation report: injectivity, up-set membership, 1 -> <=,
// 0 -> alpha;<=^{c~}, meet -> intersection, join -> union, mult -> ;,
// and the present unary tables against the Dq operations.
RelEmbedding verify_embedding(const FiniteAlgebra& a, const RepContext& ctx,
                              std::vector<BinRel> images);

// Backtracking assignment over a deterministic candidate pool (full Up(E)
// by default); constants forced, join-irreducibles assigned first. nullopt
// means none within the pool. Throws PoolUnavailable when Up(E) exceeds the
// cap and no pool was supplied.
std::optional<RelEmbedding> find_embedding(
    const FiniteAlgebra& a, const RepContext& ctx,
    std::optional<std::vector<BinRel>> pool = std::nullopt,
    size_t upset_cap = size_t{1} << 20);

}  // namespace qra
