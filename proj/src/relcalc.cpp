#include "qra/relcalc.hpp"

#include <bit>

namespace qra {

BinRel BinRel::identity(int n) {
  BinRel r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BinRel BinRel::full(int n) {
  BinRel r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j);
  return r;
}

BinRel BinRel::from_pairs(int n, const std::vector<std::pair<int, int>>& ps) {
  BinRel r(n);
  for (auto [i, j] : ps) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      fail("PairOutOfRange", "relation pair outside 0.." + std::to_string(n - 1),
           {i, j});
    r.set(i, j);
  }
  return r;
}

BinRel BinRel::operator&(const BinRel& o) const {
  BinRel r(n_);
  for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
  return r;
}

BinRel BinRel::operator|(const BinRel& o) const {
  BinRel r(n_);
  for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
  return r;
}

BinRel BinRel::minus(const BinRel& o) const {
  BinRel r(n_);
  for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & ~o.bits_[w];
  return r;
}

bool BinRel::subset_of(const BinRel& o) const {
  for (size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] & ~o.bits_[w]) return false;
  return true;
}

bool BinRel::empty() const {
  for (uint64_t w : bits_)
    if (w) return false;
  return true;
}

size_t BinRel::count() const {
  size_t c = 0;
  for (uint64_t w : bits_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

std::vector<std::pair<int, int>> BinRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (at(i, j)) out.emplace_back(i, j);
  return out;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  if (r.n_ != s.n_)
    fail("DimensionMismatch", "composing relations on " +
                                  std::to_string(r.n_) + " and " +
                                  std::to_string(s.n_) + " points");
  BinRel out(r.n_);
  for (int i = 0; i < r.n_; ++i) {
    size_t ri = r.row(i);
    size_t oi = out.row(i);
    for (int wb = 0; wb < r.words_; ++wb) {
      uint64_t w = r.bits_[ri + wb];
      while (w) {
        int z = (wb << 6) + std::countr_zero(w);
        w &= w - 1;
        size_t sz = s.row(z);
        for (int k = 0; k < s.words_; ++k) out.bits_[oi + k] |= s.bits_[sz + k];
      }
    }
  }
  return out;
}

BinRel converse(const BinRel& r) {
  BinRel out(r.n_);
  for (int i = 0; i < r.n_; ++i)
    for (int j = 0; j < r.n_; ++j)
      if (r.at(i, j)) out.set(j, i);
  return out;
}

BinRel complement_in(const BinRel& r, const BinRel& e) {
  if (r.points() != e.points())
    fail("DimensionMismatch", "complement relative to E of different size");
  if (!r.subset_of(e)) fail("NotSubsetOfE", "relation not contained in E");
  return e.minus(r);
}

bool rel_less(const BinRel& a, const BinRel& b) {
  size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  int n = a.points();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool x = a.at(i, j), y = b.at(i, j);
      if (x != y) return !x;
    }
  return false;
}

BinRel graph_of(const std::vector<int>& f) {
  int n = static_cast<int>(f.size());
  BinRel g(n);
  for (int i = 0; i < n; ++i) {
    if (f[i] < 0 || f[i] >= n)
      fail("PairOutOfRange", "function value out of range", {i, f[i]});
    g.set(i, f[i]);
  }
  return g;
}

PointSet make_point_set(int n, BinRel leq) {
  if (leq.points() != n)
    fail("DimensionMismatch", "order matrix size differs from point count");
  for (int i = 0; i < n; ++i)
    if (!leq.at(i, i)) fail("NotAPoset", "order not reflexive", {i});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && leq.at(i, j) && leq.at(j, i))
        fail("NotAPoset", "order not antisymmetric", {i, j});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq.at(i, j))
        for (int k = 0; k < n; ++k)
          if (leq.at(j, k) && !leq.at(i, k))
            fail("NotAPoset", "order not transitive", {i, j, k});
  return PointSet{n, std::move(leq)};
}

bool is_upset(const PointSet& order, const BinRel& e, const BinRel& r) {
  if (!r.subset_of(e)) fail("NotSubsetOfE", "relation not contained in E");
  // (u,v) in R and (u,v) preceq (x,y) in E must force (x,y) in R; the pairs
  // preceq-above (u,v) are exactly (leq ; R ; leq) restricted to E.
  return (compose(compose(order.leq, r), order.leq) & e) == r;
}

GraphIdentityVerdict graph_identities_check(const BinRel& gamma,
                                            const BinRel& r, const BinRel& e) {
  int n = gamma.points();
  BinRel id = BinRel::identity(n);
  if (compose(converse(gamma), gamma) != id ||
      compose(gamma, converse(gamma)) != id)
    fail("NotABijection", "gamma is not the graph of a bijection");
  if (!gamma.subset_of(e)) fail("NotSubsetOfE", "gamma not contained in E");
  if (!r.subset_of(e)) fail("NotSubsetOfE", "R not contained in E");

  BinRel rc = complement_in(r, e);
  GraphIdentityVerdict v;
  v.left_ok = complement_in(compose(gamma, r), e) == compose(gamma, rc);
  v.right_ok = complement_in(compose(r, gamma), e) == compose(rc, gamma);
  return v;
}

}  // namespace qra
