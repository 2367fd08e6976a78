#include "qra/representation.hpp"

#include <algorithm>
#include <map>

namespace qra {

RepContext validate_context(PointSet points, BinRel e, std::vector<int> alpha,
                            std::vector<int> beta) {
  int n = points.n;
  if (e.points() != n || static_cast<int>(alpha.size()) != n ||
      static_cast<int>(beta.size()) != n)
    fail("DimensionMismatch", "context components have different sizes");

  if (!points.leq.subset_of(e))
    fail("LeqNotInE", "the order is not contained in E");

  for (int i = 0; i < n; ++i)
    if (!e.at(i, i)) fail("NotAnEquivalence", "E not reflexive", {i});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (e.at(i, j) && !e.at(j, i))
        fail("NotAnEquivalence", "E not symmetric", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (e.at(i, j))
        for (int k = 0; k < n; ++k)
          if (e.at(j, k) && !e.at(i, k))
            fail("NotAnEquivalence", "E not transitive", {i, j, k});

  auto bijective = [&](const std::vector<int>& f) {
    std::vector<uint8_t> seen(n, 0);
    for (int v : f) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  if (!bijective(alpha))
    fail("AlphaNotAutomorphism", "alpha is not a bijection");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (points.leq.at(x, y) != points.leq.at(alpha[x], alpha[y]))
        fail("AlphaNotAutomorphism", "alpha does not preserve the order",
             {x, y});
  for (int x = 0; x < n; ++x)
    if (!e.at(x, alpha[x]))
      fail("AlphaNotInE", "alpha leaves its E-class", {x});

  if (!bijective(beta))
    fail("BetaNotDualAutomorphism", "beta is not a bijection");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (points.leq.at(x, y) != points.leq.at(beta[y], beta[x]))
        fail("BetaNotDualAutomorphism", "beta does not reverse the order",
             {x, y});
  for (int x = 0; x < n; ++x)
    if (beta[beta[x]] != x)
      fail("BetaNotSelfInverse", "beta composed with itself is not id", {x});
  for (int x = 0; x < n; ++x)
    if (!e.at(x, beta[x]))
      fail("BetaNotInE", "beta leaves its E-class", {x});

  // beta = alpha ; beta ; alpha, i.e. alpha(beta(alpha(x))) = beta(x).
  for (int x = 0; x < n; ++x)
    if (alpha[beta[alpha[x]]] != beta[x])
      fail("AlphaBetaAlphaViolated", "alpha;beta;alpha differs from beta",
           {x});

  return RepContext{std::move(points), std::move(e), std::move(alpha),
                    std::move(beta)};
}

DqConstants dq_constants(const RepContext& ctx) {
  BinRel lc = complement_in(ctx.points.leq, ctx.e);
  return {ctx.points.leq, compose(ctx.alpha_graph(), converse(lc))};
}

DqUnary dq_unary(const RepContext& ctx, const BinRel& r) {
  if (!is_upset(ctx.points, ctx.e, r))
    fail("NotAnUpset", "argument is not an up-set of (E, preceq)");
  BinRel rc = complement_in(r, ctx.e);
  BinRel a = ctx.alpha_graph();
  BinRel b = ctx.beta_graph();
  DqUnary u;
  u.tilde = compose(converse(rc), a);
  u.minus = compose(a, converse(rc));
  u.neg = compose(compose(a, b), compose(rc, b));
  return u;
}

std::pair<BinRel, BinRel> dq_residuals(const RepContext& ctx, const BinRel& r,
                                       const BinRel& s) {
  if (!is_upset(ctx.points, ctx.e, r) || !is_upset(ctx.points, ctx.e, s))
    fail("NotAnUpset", "residual arguments must be up-sets");
  BinRel rc = complement_in(r, ctx.e);
  BinRel sc = complement_in(s, ctx.e);
  BinRel under = complement_in(compose(converse(r), sc) & ctx.e, ctx.e);
  BinRel over = complement_in(compose(rc, converse(s)) & ctx.e, ctx.e);
  return {under, over};
}

std::vector<BinRel> enumerate_upsets(const RepContext& ctx, size_t cap) {
  // Elements of the preceq-poset are the pairs of E.
  std::vector<std::pair<int, int>> ep = ctx.e.pairs();
  int m = static_cast<int>(ep.size());
  const BinRel& leq = ctx.points.leq;

  // below[i][j]: ep[i] preceq ep[j]
  std::vector<std::vector<uint8_t>> below(m, std::vector<uint8_t>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      below[i][j] =
          leq.at(ep[j].first, ep[i].first) && leq.at(ep[i].second, ep[j].second);

  // Linear extension, maximal pairs first.
  std::vector<int> order;
  {
    std::vector<int> above_cnt(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && below[i][j]) ++above_cnt[i];
    std::vector<uint8_t> done(m, 0);
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      for (int i = 0; i < m; ++i)
        if (!done[i] && above_cnt[i] == 0) {
          pick = i;
          break;
        }
      order.push_back(pick);
      done[pick] = 1;
      for (int i = 0; i < m; ++i)
        if (!done[i] && below[i][pick]) --above_cnt[i];
    }
  }

  std::vector<BinRel> out;
  std::vector<int8_t> state(m, 0);  // 0 free, 1 in, -1 out
  std::vector<int> trail;

  auto emit = [&]() {
    if (out.size() >= cap)
      fail_budget("TooManyUpsets",
                  "more than " + std::to_string(cap) + " up-sets");
    BinRel r(ctx.points.n);
    for (int i = 0; i < m; ++i)
      if (state[i] == 1) r.set(ep[i].first, ep[i].second);
    out.push_back(std::move(r));
  };

  // DFS over the linear extension: excluding a pair forces out everything
  // preceq-below it (which only appears later in the order).
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      emit();
      return;
    }
    int el = order[pos];
    if (state[el] == -1) {
      self(self, pos + 1);
      return;
    }
    state[el] = 1;
    self(self, pos + 1);
    state[el] = 0;

    size_t mark = trail.size();
    state[el] = -1;
    trail.push_back(el);
    for (int later = pos + 1; later < m; ++later) {
      int e2 = order[later];
      if (state[e2] == 0 && below[e2][el]) {
        state[e2] = -1;
        trail.push_back(e2);
      }
    }
    self(self, pos + 1);
    while (trail.size() > mark) {
      state[trail.back()] = 0;
      trail.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(), rel_less);
  return out;
}

std::vector<BinRel> generate_subalgebra(const RepContext& ctx,
                                        std::vector<BinRel> generators) {
  for (const BinRel& g : generators)
    if (!is_upset(ctx.points, ctx.e, g))
      fail("NotAnUpset", "generator is not an up-set");

  DqConstants c = dq_constants(ctx);
  std::map<std::vector<uint64_t>, BinRel> have;
  std::vector<BinRel> work{c.one, c.zero};
  for (BinRel& g : generators) work.push_back(std::move(g));
  for (const BinRel& r : work) have.emplace(r.raw(), r);

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<BinRel> cur;
    cur.reserve(have.size());
    for (auto& [_, r] : have) cur.push_back(r);
    auto add = [&](const BinRel& r) {
      if (have.emplace(r.raw(), r).second) grew = true;
    };
    for (const BinRel& r : cur) {
      DqUnary u = dq_unary(ctx, r);
      add(u.tilde);
      add(u.minus);
      add(u.neg);
    }
    for (const BinRel& r : cur)
      for (const BinRel& s : cur) {
        add(r & s);
        add(r | s);
        add(compose(r, s));
      }
  }

  std::vector<BinRel> out;
  out.reserve(have.size());
  for (auto& [_, r] : have) out.push_back(r);
  std::sort(out.begin(), out.end(), rel_less);
  return out;
}

FiniteAlgebra upset_algebra(const RepContext& ctx,
                            const std::vector<BinRel>& elements) {
  int n = static_cast<int>(elements.size());
  std::map<std::vector<uint64_t>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(elements[i].raw(), i);
  auto idx_of = [&](const BinRel& r) -> int {
    auto it = index.find(r.raw());
    if (it == index.end())
      fail("InternalError", "element set not closed under an operation");
    return it->second;
  };

  FiniteAlgebra a;
  a.n = n;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  a.mult.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.leq[static_cast<size_t>(i) * n + j] = elements[i].subset_of(elements[j]);
      a.mult[static_cast<size_t>(i) * n + j] =
          idx_of(compose(elements[i], elements[j]));
    }
  std::vector<int> til(n), mns(n), ng(n);
  for (int i = 0; i < n; ++i) {
    DqUnary u = dq_unary(ctx, elements[i]);
    til[i] = idx_of(u.tilde);
    mns[i] = idx_of(u.minus);
    ng[i] = idx_of(u.neg);
  }
  a.tilde = std::move(til);
  a.minus = std::move(mns);
  a.neg = std::move(ng);
  DqConstants c = dq_constants(ctx);
  a.one = idx_of(c.one);
  a.zero = idx_of(c.zero);
  return a;
}

RelEmbedding verify_embedding(const FiniteAlgebra& a, const RepContext& ctx,
                              std::vector<BinRel> images) {
  if (static_cast<int>(images.size()) != a.n)
    fail("DimensionMismatch", "one image per source element required");
  RelEmbedding emb;
  emb.images = std::move(images);
  auto push = [&](const std::string& op, bool ok, std::vector<int> w = {}) {
    emb.report.push_back({op, ok, std::move(w)});
  };

  {
    bool ok = true;
    std::vector<int> w;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = i + 1; j < a.n; ++j)
        if (emb.images[i] == emb.images[j]) {
          ok = false;
          w = {i, j};
          break;
        }
    push("injective", ok, std::move(w));
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int i = 0; i < a.n; ++i)
      if (!emb.images[i].subset_of(ctx.e) ||
          !is_upset(ctx.points, ctx.e, emb.images[i])) {
        ok = false;
        w = {i};
        break;
      }
    push("upset", ok, std::move(w));
    if (!ok) return emb;  // Dq operations below assume up-sets
  }

  DqConstants c = dq_constants(ctx);
  push("one", emb.images[a.one] == c.one, {a.one});
  if (a.zero) push("zero", emb.images[*a.zero] == c.zero, {*a.zero});

  LatticeOps ops = lattice_ops(a);
  {
    bool mok = true, jok = true;
    std::vector<int> mw, jw;
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) {
        if (mok && emb.images[ops.meet_of(i, j)] !=
                       (emb.images[i] & emb.images[j])) {
          mok = false;
          mw = {i, j};
        }
        if (jok && emb.images[ops.join_of(i, j)] !=
                       (emb.images[i] | emb.images[j])) {
          jok = false;
          jw = {i, j};
        }
      }
    push("meet", mok, std::move(mw));
    push("join", jok, std::move(jw));
  }
  {
    bool ok = true;
    std::vector<int> w;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = 0; j < a.n; ++j)
        if (emb.images[a.prod(i, j)] !=
            compose(emb.images[i], emb.images[j])) {
          ok = false;
          w = {i, j};
          break;
        }
    push("mult", ok, std::move(w));
  }
  auto unary = [&](const std::string& op,
                   const std::optional<std::vector<int>>& t, auto&& pick) {
    if (!t) return;
    bool ok = true;
    std::vector<int> w;
    for (int i = 0; i < a.n; ++i) {
      DqUnary u = dq_unary(ctx, emb.images[i]);
      if (emb.images[(*t)[i]] != pick(u)) {
        ok = false;
        w = {i};
        break;
      }
    }
    push(op, ok, std::move(w));
  };
  unary("tilde", a.tilde, [](const DqUnary& u) { return u.tilde; });
  unary("minus", a.minus, [](const DqUnary& u) { return u.minus; });
  unary("neg", a.neg, [](const DqUnary& u) { return u.neg; });
  return emb;
}

namespace {

// Join-irreducible elements of A (nonzero number of strict lower covers
// collapsing to one): x is join-irreducible iff x = a v b forces x in
// {a, b}.
std::vector<uint8_t> join_irreducible(const FiniteAlgebra& a,
                                      const LatticeOps& ops) {
  std::vector<uint8_t> ji(a.n, 1);
  for (int x = 0; x < a.n; ++x)
    for (int i = 0; i < a.n && ji[x]; ++i)
      for (int j = 0; j < a.n; ++j)
        if (i != x && j != x && ops.join_of(i, j) == x) {
          ji[x] = 0;
          break;
        }
  return ji;
}

}  // namespace

std::optional<RelEmbedding> find_embedding(
    const FiniteAlgebra& a, const RepContext& ctx,
    std::optional<std::vector<BinRel>> pool, size_t upset_cap) {
  std::vector<BinRel> candidates;
  if (pool) {
    candidates = std::move(*pool);
    for (const BinRel& r : candidates)
      if (!is_upset(ctx.points, ctx.e, r))
        fail("NotAnUpset", "pool element is not an up-set");
    std::sort(candidates.begin(), candidates.end(), rel_less);
  } else {
    try {
      candidates = enumerate_upsets(ctx, upset_cap);
    } catch (const Error& e) {
      if (e.code() == "TooManyUpsets")
        fail_budget("PoolUnavailable",
                    "Up(E) too large and no candidate pool supplied");
      throw;
    }
  }

  LatticeOps ops = lattice_ops(a);
  std::vector<uint8_t> ji = join_irreducible(a, ops);
  DqConstants c = dq_constants(ctx);

  std::vector<int> element_order;
  for (int x = 0; x < a.n; ++x)
    if (ji[x]) element_order.push_back(x);
  for (int x = 0; x < a.n; ++x)
    if (!ji[x]) element_order.push_back(x);

  std::vector<std::optional<BinRel>> img(a.n);
  img[a.one] = c.one;
  if (a.zero) img[*a.zero] = c.zero;

  // Partial consistency: order must match inclusion, assigned triples must
  // match tables, assigned unary images must match the Dq operations.
  auto consistent = [&](int x) -> bool {
    for (int y = 0; y < a.n; ++y) {
      if (!img[y]) continue;
      if (a.le(x, y) != img[x]->subset_of(*img[y])) return false;
      if (a.le(y, x) != img[y]->subset_of(*img[x])) return false;
      int m = ops.meet_of(x, y);
      if (img[m] && *img[m] != (*img[x] & *img[y])) return false;
      int j = ops.join_of(x, y);
      if (img[j] && *img[j] != (*img[x] | *img[y])) return false;
      int p = a.prod(x, y);
      if (img[p] && *img[p] != compose(*img[x], *img[y])) return false;
      int q = a.prod(y, x);
      if (img[q] && *img[q] != compose(*img[y], *img[x])) return false;
    }
    DqUnary u = dq_unary(ctx, *img[x]);
    if (a.tilde && img[(*a.tilde)[x]] && *img[(*a.tilde)[x]] != u.tilde)
      return false;
    if (a.minus && img[(*a.minus)[x]] && *img[(*a.minus)[x]] != u.minus)
      return false;
    if (a.neg && img[(*a.neg)[x]] && *img[(*a.neg)[x]] != u.neg) return false;
    return true;
  };

  auto rec = [&](auto&& self, size_t pos) -> bool {
    if (pos == element_order.size()) return true;
    int x = element_order[pos];
    if (img[x]) {
      if (!consistent(x)) return false;
      return self(self, pos + 1);
    }
    for (const BinRel& cand : candidates) {
      bool taken = false;
      for (int y = 0; y < a.n && !taken; ++y)
        if (img[y] && *img[y] == cand) taken = true;
      if (taken) continue;
      img[x] = cand;
      if (consistent(x) && self(self, pos + 1)) return true;
      img[x].reset();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<BinRel> images;
  images.reserve(a.n);
  for (int x = 0; x < a.n; ++x) images.push_back(*img[x]);
  RelEmbedding emb = verify_embedding(a, ctx, std::move(images));
  if (!emb.passes()) return std::nullopt;
  return emb;
}

}  // namespace qra
