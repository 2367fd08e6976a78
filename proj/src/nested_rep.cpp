#include "qra/nested_rep.hpp"

#include <algorithm>
#include <map>

namespace qra {

NestedContext build_nested_context(const RepContext& ctx_l) {
  int nl = ctx_l.points.n;

  // Blocks of E_L, id = least member.
  std::vector<int> block_of(nl, -1);
  std::vector<int> ids;
  for (int x = 0; x < nl; ++x) {
    int id = x;
    for (int y = 0; y < nl; ++y)
      if (ctx_l.e.at(x, y) && y < id) id = y;
    block_of[x] = id;
    if (id == x) ids.push_back(x);
  }

  int nb = static_cast<int>(ids.size());
  int n = nl + 4 * nb;

  NestedContext nc;
  nc.block_ids = ids;
  nc.info.resize(n);
  nc.l_point_map.resize(nl);
  for (int x = 0; x < nl; ++x) {
    nc.l_point_map[x] = x;
    nc.info[x] = {block_of[x], Layer::Core, -1};
  }
  // Fresh points per block: lower-x, lower-y, upper-x, upper-y.
  std::map<int, int> base;  // block id -> first fresh index
  for (int b = 0; b < nb; ++b) {
    int at = nl + 4 * b;
    base[ids[b]] = at;
    nc.info[at + 0] = {ids[b], Layer::Lower, 0};
    nc.info[at + 1] = {ids[b], Layer::Lower, 1};
    nc.info[at + 2] = {ids[b], Layer::Upper, 0};
    nc.info[at + 3] = {ids[b], Layer::Upper, 1};
  }
  auto lower = [&](int id, int tag) { return base[id] + tag; };
  auto upper = [&](int id, int tag) { return base[id] + 2 + tag; };

  // Order: copies are antichains; each block's core sits between its lower
  // and upper copy; old L-order kept.
  BinRel leq(n);
  for (int x = 0; x < n; ++x) leq.set(x, x);
  for (int x = 0; x < nl; ++x)
    for (int y = 0; y < nl; ++y)
      if (ctx_l.points.leq.at(x, y)) leq.set(x, y);
  for (int id : ids) {
    for (int z = 0; z < nl; ++z) {
      if (block_of[z] != id) continue;
      for (int t = 0; t < 2; ++t) {
        leq.set(z, upper(id, t));
        leq.set(lower(id, t), z);
      }
    }
    for (int t = 0; t < 2; ++t)
      for (int u = 0; u < 2; ++u) leq.set(lower(id, t), upper(id, u));
  }

  // E: one class per old block, fresh copies absorbed into it.
  BinRel e(n);
  auto cls = [&](int p) { return nc.info[p].block; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (cls(x) == cls(y)) e.set(x, y);

  // alpha preserves layers (swap inside each copy, alpha_L on the core);
  // beta swaps the layers (beta_K = id) and acts as beta_L on the core.
  std::vector<int> alpha(n), beta(n);
  for (int x = 0; x < nl; ++x) {
    alpha[x] = ctx_l.alpha[x];
    beta[x] = ctx_l.beta[x];
  }
  for (int id : ids)
    for (int t = 0; t < 2; ++t) {
      alpha[lower(id, t)] = lower(id, 1 - t);
      alpha[upper(id, t)] = upper(id, 1 - t);
      beta[lower(id, t)] = upper(id, t);
      beta[upper(id, t)] = lower(id, t);
    }

  nc.ctx = validate_context(make_point_set(n, std::move(leq)), std::move(e),
                            std::move(alpha), std::move(beta));
  return nc;
}

PsiMap build_psi(const NestedContext& nctx, const FiniteAlgebra& l,
                 const RelEmbedding& phi_l_in) {
  // The images of phi_l live on the L-point set; re-verify them against the
  // context the caller claims they embed into is the caller's business —
  // here we only need them as relations on the old points lifted to the new
  // ones, and the final verify_embedding is the arbiter.
  int n = nctx.ctx.points.n;
  int nl = static_cast<int>(nctx.l_point_map.size());

  SugiharaChain s3 = sugihara_chain(3);
  PsiMap psi{nested_sum(s3.algebra, l), BinRel(n), {}, {}};

  // R = <=_{new} minus the lifted <=_L.
  BinRel lifted_leq_l(n);
  for (int x = 0; x < nl; ++x)
    for (int y = 0; y < nl; ++y) {
      // old L-order on core points: encoded in the new order already
      if (nctx.info[x].layer == Layer::Core &&
          nctx.info[y].layer == Layer::Core && nctx.ctx.points.leq.at(x, y))
        lifted_leq_l.set(x, y);
    }
  psi.r_relation = nctx.ctx.points.leq.minus(lifted_leq_l);

  auto lift = [&](const BinRel& r) {
    BinRel out(n);
    for (auto [x, y] : r.pairs())
      out.set(nctx.l_point_map[x], nctx.l_point_map[y]);
    return out;
  };

  psi.images.resize(psi.sum.algebra.n, BinRel(n));
  psi.images[psi.sum.from_k[s3.index_of(-1)]] = BinRel(n);  // empty
  psi.images[psi.sum.from_k[s3.index_of(1)]] = nctx.ctx.e;
  for (int m = 0; m < l.n; ++m)
    psi.images[psi.sum.from_l[m]] =
        psi.r_relation | lift(phi_l_in.images[m]);

  psi.embedding = verify_embedding(psi.sum.algebra, nctx.ctx, psi.images);
  if (!psi.embedding.passes())
    fail("EmbeddingInvalid", "psi failed verification against S3[L]");
  return psi;
}

SugiharaRepresentation sugihara_representation(int n) {
  if (n < 2) fail("SizeTooSmall", "Sugihara chains start at size 2");

  if (n == 2) {
    SugiharaRepresentation rep;
    rep.chain = sugihara_chain(2);
    RepContext ctx = validate_context(
        make_point_set(1, BinRel::identity(1)), BinRel::full(1), {0}, {0});
    std::vector<BinRel> images{BinRel(1), BinRel::full(1)};
    rep.embedding = verify_embedding(rep.chain.algebra, ctx, images);
    rep.ctx = std::move(ctx);
    if (!rep.embedding.passes())
      fail("InternalError", "base representation of S2 failed");
    return rep;
  }
  if (n == 3) {
    SugiharaRepresentation rep;
    rep.chain = sugihara_chain(3);
    RepContext ctx =
        validate_context(make_point_set(2, BinRel::identity(2)),
                         BinRel::full(2), {1, 0}, {0, 1});
    std::vector<BinRel> images{BinRel(2), BinRel::identity(2),
                               BinRel::full(2)};
    rep.embedding = verify_embedding(rep.chain.algebra, ctx, images);
    rep.ctx = std::move(ctx);
    if (!rep.embedding.passes())
      fail("InternalError", "base representation of S3 failed");
    return rep;
  }

  SugiharaRepresentation inner = sugihara_representation(n - 2);
  NestedContext nctx = build_nested_context(inner.ctx);
  PsiMap psi = build_psi(nctx, inner.chain.algebra, inner.embedding);
  AlgebraMap iso = collapse_iso(3, n - 2);  // S3[S_{n-2}] -> S_n
  if (!iso.all_preserved() || !iso.bijective())
    fail("InternalError", "collapse isomorphism failed verification");

  SugiharaRepresentation rep;
  rep.chain = sugihara_chain(n);
  std::vector<BinRel> images(rep.chain.algebra.n, BinRel(nctx.ctx.points.n));
  for (int x = 0; x < psi.sum.algebra.n; ++x)
    images[iso.map[x]] = psi.images[x];
  rep.embedding = verify_embedding(rep.chain.algebra, nctx.ctx, images);
  rep.ctx = std::move(nctx.ctx);
  if (!rep.embedding.passes())
    fail("InternalError", "transported representation failed verification");
  return rep;
}

NestedRepresentation sn_nested_representation(int n, const FiniteAlgebra& l,
                                              const RepContext& ctx_l,
                                              const RelEmbedding& phi_l) {
  if (n % 2 == 0) fail("EvenOuterChain", "outer chain must be odd");
  if (n < 3) fail("SizeTooSmall", "outer chain must have size >= 3");
  {
    RelEmbedding check = verify_embedding(l, ctx_l, phi_l.images);
    if (!check.passes())
      fail("EmbeddingInvalid", "phi_L does not embed L into its context");
  }

  if (n == 3) {
    NestedContext nctx = build_nested_context(ctx_l);
    PsiMap psi = build_psi(nctx, l, phi_l);
    return NestedRepresentation{std::move(psi.sum), std::move(nctx.ctx),
                                std::move(psi.embedding)};
  }

  NestedRepresentation inner = sn_nested_representation(n - 2, l, ctx_l, phi_l);
  NestedContext nctx = build_nested_context(inner.ctx);
  PsiMap psi = build_psi(nctx, inner.sum.algebra, inner.embedding);

  // chi : S_n[L] -> S3[S_{n-2}[L]]; extreme subscripts of S_n to the outer
  // S3, everything else through the inner sum.
  SugiharaChain sn = sugihara_chain(n);
  SugiharaChain sm = sugihara_chain(n - 2);
  SugiharaChain s3 = sugihara_chain(3);
  NestedSum outer_sum = nested_sum(sn.algebra, l);
  const NestedSum& mid = inner.sum;          // S_{n-2}[L]
  const NestedSum& s3m = psi.sum;            // S3[S_{n-2}[L]]
  int k = (n - 1) / 2;

  std::vector<int> chi(outer_sum.algebra.n, -1);
  for (int i = 0; i < sn.n; ++i) {
    int j = sn.label[i];
    if (j == 0) continue;
    if (j == -k)
      chi[outer_sum.from_k[i]] = s3m.from_k[s3.index_of(-1)];
    else if (j == k)
      chi[outer_sum.from_k[i]] = s3m.from_k[s3.index_of(1)];
    else
      chi[outer_sum.from_k[i]] = s3m.from_l[mid.from_k[sm.index_of(j)]];
  }
  for (int i = 0; i < l.n; ++i)
    chi[outer_sum.from_l[i]] = s3m.from_l[mid.from_l[i]];

  AlgebraMap iso =
      make_verified_map(outer_sum.algebra, s3m.algebra, std::move(chi));
  if (!iso.all_preserved() || !iso.bijective())
    fail("InternalError", "S_n[L] = S3[S_{n-2}[L]] isomorphism failed");

  std::vector<BinRel> images(outer_sum.algebra.n, BinRel(nctx.ctx.points.n));
  for (int x = 0; x < outer_sum.algebra.n; ++x)
    images[x] = psi.images[iso.map[x]];
  RelEmbedding emb = verify_embedding(outer_sum.algebra, nctx.ctx, images);
  if (!emb.passes())
    fail("InternalError", "transported S_n[L] embedding failed verification");
  return NestedRepresentation{std::move(outer_sum), std::move(nctx.ctx),
                              std::move(emb)};
}

}  // namespace qra
