// From a representation of L, build the context for S3[L] (two fresh
// antichain copies around every E_L-block), the relation R and the embedding
// psi; iterate to represent every finite Sugihara chain and S_n[L] for odd n.
#pragma once

#include <vector>

#include "qra/nested_sum.hpp"
#include "qra/representation.hpp"
#include "qra/sugihara.hpp"

namespace qra {

enum class Layer { Lower, Core, Upper };

struct NestedContext {
  RepContext ctx;
  struct PointInfo {
    int block = -1;            // block id = least L-point of the E_L-class
    Layer layer = Layer::Core;
    int k_tag = -1;            // 0 = x, 1 = y, -1 for core points
  };
  std::vector<PointInfo> info;       // per new point
  std::vector<int> l_point_map;      // old L-point -> new index (identity)
  std::vector<int> block_ids;        // ascending
};

// L-points keep their indices; per block (ascending id) the four fresh
// points are appended as lower-x, lower-y, upper-x, upper-y. The result
// always passes validate_context.
NestedContext build_nested_context(const RepContext& ctx_l);

struct PsiMap {
  NestedSum sum;               // S3[L]
  BinRel r_relation;           // <=_{new} minus <=_L
  std::vector<BinRel> images;  // per sum element
  RelEmbedding embedding;      // verified against sum.algebra
};

// phi_l must embed L into ctx_l (re-verified; EmbeddingInvalid otherwise).
PsiMap build_psi(const NestedContext& nctx, const FiniteAlgebra& l,
                 const RelEmbedding& phi_l);

struct SugiharaRepresentation {
  SugiharaChain chain;
  RepContext ctx;
  RelEmbedding embedding;  // of chain.algebra into Dq of ctx
};

// Base cases n = 2 (one point) and n = 3 (two-element antichain with the
// swap automorphism); for n >= 4 recurse through S3[S_{n-2}] and transport
// along the collapse isomorphism. Throws SizeTooSmall.
SugiharaRepresentation sugihara_representation(int n);

struct NestedRepresentation {
  NestedSum sum;  // S_n[L]
  RepContext ctx;
  RelEmbedding embedding;
};

// S_n[L] for odd n >= 3 via S_n[L] = S3[S_{n-2}[L]]. Throws EvenOuterChain
// and EmbeddingInvalid.
NestedRepresentation sn_nested_representation(int n, const FiniteAlgebra& l,
                                              const RepContext& ctx_l,
                                              const RelEmbedding& phi_l);

}  // namespace qra
