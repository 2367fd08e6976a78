#include "qra/sugihara.hpp"

#include <cmath>

#include "qra/nested_sum.hpp"

namespace qra {

int SugiharaChain::index_of(int subscript) const {
  for (int i = 0; i < n; ++i)
    if (label[i] == subscript) return i;
  fail("BadTable", "no element with subscript " + std::to_string(subscript));
}

SugiharaChain sugihara_chain(int n) {
  if (n < 2) fail("SizeTooSmall", "Sugihara chains start at size 2");
  SugiharaChain s;
  s.n = n;
  int k = n / 2;
  for (int i = -k; i <= k; ++i) {
    if (i == 0 && n % 2 == 0) continue;
    s.label.push_back(i);
  }

  FiniteAlgebra& a = s.algebra;
  a.n = n;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  a.mult.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.leq[static_cast<size_t>(i) * n + j] = (i <= j);

  auto idx = [&](int subscript) {
    for (int i = 0; i < n; ++i)
      if (s.label[i] == subscript) return i;
    return -1;
  };

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int li = s.label[i], lj = s.label[j];
      int prod;
      if (std::abs(lj) < std::abs(li))
        prod = li;
      else if (std::abs(li) < std::abs(lj))
        prod = lj;
      else
        prod = std::min(li, lj);
      a.mult[static_cast<size_t>(i) * n + j] = idx(prod);
    }

  std::vector<int> til(n);
  for (int i = 0; i < n; ++i) til[i] = idx(-s.label[i]);
  a.tilde = til;
  a.minus = til;
  a.neg = til;

  a.one = (n % 2 == 1) ? idx(0) : idx(1);
  a.zero = til[a.one];

  a.names.resize(n);
  for (int i = 0; i < n; ++i) a.names[i] = "a" + std::to_string(s.label[i]);

  // a_i -> a_j is ~a_i v a_j when i <= j and ~a_i ^ a_j when i > j.
  s.implies.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ti = -s.label[i], lj = s.label[j];
      int r = (s.label[i] <= lj) ? std::max(ti, lj) : std::min(ti, lj);
      s.implies[static_cast<size_t>(i) * n + j] = idx(r);
    }
  return s;
}

bool AlgebraMap::all_preserved() const {
  for (const OpCheck& c : report)
    if (!c.ok) return false;
  return true;
}

bool AlgebraMap::bijective() const {
  if (source.n != target.n) return false;
  std::vector<uint8_t> seen(target.n, 0);
  for (int v : map) {
    if (v < 0 || v >= target.n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

AlgebraMap make_verified_map(const FiniteAlgebra& source,
                             const FiniteAlgebra& target,
                             std::vector<int> map) {
  AlgebraMap m{source, target, std::move(map), {}};
  int n = source.n;
  auto check_binary = [&](const std::string& op, auto&& fs, auto&& ft) {
    AlgebraMap::OpCheck c{op, true, {}};
    for (int x = 0; x < n && c.ok; ++x)
      for (int y = 0; y < n; ++y)
        if (m.map[fs(x, y)] != ft(m.map[x], m.map[y])) {
          c = {op, false, {x, y}};
          break;
        }
    m.report.push_back(c);
  };

  {
    AlgebraMap::OpCheck c{"leq", true, {}};
    for (int x = 0; x < n && c.ok; ++x)
      for (int y = 0; y < n; ++y)
        if (source.le(x, y) != target.le(m.map[x], m.map[y])) {
          c = {"leq", false, {x, y}};
          break;
        }
    m.report.push_back(c);
  }
  check_binary(
      "mult", [&](int x, int y) { return source.prod(x, y); },
      [&](int x, int y) { return target.prod(x, y); });

  auto check_unary = [&](const std::string& op,
                         const std::optional<std::vector<int>>& ts,
                         const std::optional<std::vector<int>>& tt) {
    if (!ts || !tt) return;
    AlgebraMap::OpCheck c{op, true, {}};
    for (int x = 0; x < n; ++x)
      if (m.map[(*ts)[x]] != (*tt)[m.map[x]]) {
        c = {op, false, {x}};
        break;
      }
    m.report.push_back(c);
  };
  check_unary("tilde", source.tilde, target.tilde);
  check_unary("minus", source.minus, target.minus);
  check_unary("neg", source.neg, target.neg);

  m.report.push_back({"one", m.map[source.one] == target.one,
                      {source.one}});
  if (source.zero && target.zero)
    m.report.push_back({"zero", m.map[*source.zero] == *target.zero,
                        {*source.zero}});
  return m;
}

AlgebraMap collapse_iso(int n, int m) {
  if (n % 2 == 0) fail("EvenOuterChain", "outer chain must be odd");
  if (n < 3) fail("SizeTooSmall", "outer chain must have size >= 3");
  SugiharaChain sk = sugihara_chain(n);
  SugiharaChain sl = sugihara_chain(m);
  SugiharaChain st = sugihara_chain(n + m - 1);
  NestedSum sum = nested_sum(sk.algebra, sl.algebra);

  int ell = m / 2;  // half-width of S_m
  std::vector<int> map(sum.algebra.n, -1);
  for (int i = 0; i < sk.n; ++i) {
    int j = sk.label[i];
    if (j == 0) continue;  // 1_K dropped
    int shifted = (j < 0) ? j - ell : j + ell;
    map[sum.from_k[i]] = st.index_of(shifted);
  }
  for (int i = 0; i < sl.n; ++i)
    map[sum.from_l[i]] = st.index_of(sl.label[i]);

  return make_verified_map(sum.algebra, st.algebra, std::move(map));
}

}  // namespace qra
