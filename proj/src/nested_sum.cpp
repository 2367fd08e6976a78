#include "qra/nested_sum.hpp"

#include <algorithm>

namespace qra {

NestedSum nested_sum(const FiniteAlgebra& k, const FiniteAlgebra& l) {
  if (!k.same_signature(l))
    fail("SignatureMismatch",
         "K and L must agree on which of tilde/minus/neg/zero are present");
  IrreducibilityResult irr = is_totally_irreducible(k, k.one);
  if (!irr.irreducible)
    fail("IdentityNotIrreducible",
         "1_K is reducible via " + irr.op, irr.args);

  NestedSum s;
  int nk = k.n, nl = l.n;
  int n = nk - 1 + nl;
  s.from_k.assign(nk, -1);
  s.from_l.assign(nl, -1);
  int next = 0;
  for (int i = 0; i < nk; ++i)
    if (i != k.one) s.from_k[i] = next++;
  for (int i = 0; i < nl; ++i) s.from_l[i] = next++;

  FiniteAlgebra& a = s.algebra;
  a.n = n;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  a.mult.assign(static_cast<size_t>(n) * n, 0);

  // part[x] = 0 for K-elements (orig[x] = K index), 1 for L-elements.
  std::vector<int> part(n), orig(n);
  for (int i = 0; i < nk; ++i)
    if (i != k.one) {
      part[s.from_k[i]] = 0;
      orig[s.from_k[i]] = i;
    }
  for (int i = 0; i < nl; ++i) {
    part[s.from_l[i]] = 1;
    orig[s.from_l[i]] = i;
  }

  // Ordering lemma: k0 <= l0 iff k0 <=_K 1_K; l0 <= k0 iff 1_K <=_K k0;
  // within a part the original order is kept.
  auto le_sum = [&](int x, int y) -> bool {
    if (part[x] == 0 && part[y] == 0) return k.le(orig[x], orig[y]);
    if (part[x] == 1 && part[y] == 1) return l.le(orig[x], orig[y]);
    if (part[x] == 0) return k.le(orig[x], k.one);
    return k.le(k.one, orig[y]);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      a.leq[static_cast<size_t>(x) * n + y] = le_sum(x, y);

  // mult: within a part inherited; across parts the K-element absorbs
  // (m0 . 1_K = m0, 1_K . m1 = m1).
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v;
      if (part[x] == 0 && part[y] == 0)
        v = s.from_k[k.prod(orig[x], orig[y])];
      else if (part[x] == 1 && part[y] == 1)
        v = s.from_l[l.prod(orig[x], orig[y])];
      else if (part[x] == 0)
        v = s.from_k[k.prod(orig[x], k.one)];
      else
        v = s.from_k[k.prod(k.one, orig[y])];
      a.mult[static_cast<size_t>(x) * n + y] = v;
    }

  if (k.tilde) {
    std::vector<int> til(n);
    for (int x = 0; x < n; ++x)
      til[x] = part[x] == 0 ? s.from_k[(*k.tilde)[orig[x]]]
                            : s.from_l[(*l.tilde)[orig[x]]];
    a.tilde = std::move(til);
  }
  if (k.minus) {
    std::vector<int> mns(n);
    for (int x = 0; x < n; ++x)
      mns[x] = part[x] == 0 ? s.from_k[(*k.minus)[orig[x]]]
                            : s.from_l[(*l.minus)[orig[x]]];
    a.minus = std::move(mns);
  }
  if (k.neg) {
    std::vector<int> ng(n);
    for (int x = 0; x < n; ++x)
      ng[x] = part[x] == 0 ? s.from_k[(*k.neg)[orig[x]]]
                           : s.from_l[(*l.neg)[orig[x]]];
    a.neg = std::move(ng);
  }

  a.one = s.from_l[l.one];
  if (l.zero) a.zero = s.from_l[*l.zero];

  if (!k.names.empty() || !l.names.empty()) {
    a.names.resize(n);
    for (int x = 0; x < n; ++x)
      a.names[x] = part[x] == 0 ? k.name(orig[x]) + "_K" : l.name(orig[x]);
  }

  // Consistency of the direct order with the meet/join case tables: the
  // fourth cases clamp the K side at 1_K.
  LatticeOps kops = lattice_ops(k);
  LatticeOps lops = lattice_ops(l);
  LatticeOps sops = lattice_ops(a);
  auto expect_meet = [&](int x, int y) -> int {
    if (part[x] == 0 && part[y] == 0)
      return s.from_k[kops.meet_of(orig[x], orig[y])];
    if (part[x] == 1 && part[y] == 1)
      return s.from_l[lops.meet_of(orig[x], orig[y])];
    int kk = part[x] == 0 ? x : y;
    int ll = part[x] == 0 ? y : x;
    if (k.le(k.one, orig[kk])) return ll;
    return s.from_k[kops.meet_of(orig[kk], k.one)];
  };
  auto expect_join = [&](int x, int y) -> int {
    if (part[x] == 0 && part[y] == 0)
      return s.from_k[kops.join_of(orig[x], orig[y])];
    if (part[x] == 1 && part[y] == 1)
      return s.from_l[lops.join_of(orig[x], orig[y])];
    int kk = part[x] == 0 ? x : y;
    int ll = part[x] == 0 ? y : x;
    if (k.le(orig[kk], k.one)) return ll;
    return s.from_k[kops.join_of(orig[kk], k.one)];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (sops.meet_of(x, y) != expect_meet(x, y))
        fail("InternalError", "sum meet disagrees with case table", {x, y});
      if (sops.join_of(x, y) != expect_join(x, y))
        fail("InternalError", "sum join disagrees with case table", {x, y});
    }

  validate_algebra(a);
  return s;
}

AdmissibilityReport admissibility_report(const FiniteAlgebra& k) {
  AdmissibilityReport rep;
  LatticeOps ops = lattice_ops(k);
  ResidualTables rt = residuals(k);
  int n = k.n;
  int one = k.one;

  auto scan_binary = [&](const std::string& op, auto&& f) {
    AdmissibilityReport::PerOp p{op, true, {}};
    for (int x = 0; x < n && p.irreducible; ++x)
      for (int y = 0; y < n; ++y)
        if (x != one && y != one && f(x, y) == one) {
          p = {op, false, {x, y}};
          break;
        }
    rep.per_op.push_back(p);
  };
  auto scan_unary = [&](const std::string& op, const std::vector<int>& t) {
    AdmissibilityReport::PerOp p{op, true, {}};
    for (int x = 0; x < n; ++x)
      if (x != one && t[x] == one) {
        p = {op, false, {x}};
        break;
      }
    rep.per_op.push_back(p);
  };

  scan_binary("meet", [&](int x, int y) { return ops.meet_of(x, y); });
  scan_binary("join", [&](int x, int y) { return ops.join_of(x, y); });
  scan_binary("mult", [&](int x, int y) { return k.prod(x, y); });
  scan_binary("under", [&](int x, int y) { return rt.under_of(x, y); });
  scan_binary("over", [&](int x, int y) { return rt.over_of(x, y); });
  if (k.tilde) scan_unary("tilde", *k.tilde);
  if (k.minus) scan_unary("minus", *k.minus);
  if (k.neg) scan_unary("neg", *k.neg);

  rep.totally_irreducible =
      std::all_of(rep.per_op.begin(), rep.per_op.end(),
                  [](const auto& p) { return p.irreducible; });

  rep.condition4 = true;
  for (int x = 0; x < n; ++x) {
    if (x == one) continue;
    if (rt.under_of(x, one) == one || rt.over_of(one, x) == one) {
      rep.condition4 = false;
      rep.condition4_witness = {x};
      break;
    }
  }
  return rep;
}

ConicSumVerdict conic_sum_check(const FiniteAlgebra& k,
                                const FiniteAlgebra& l) {
  ConicSumVerdict v;
  v.sum = nested_sum(k, l);

  v.k_conic = true;
  int nonconic = -1;
  for (int x = 0; x < k.n; ++x)
    if (!k.le(x, k.one) && !k.le(k.one, x)) {
      v.k_conic = false;
      nonconic = x;
      break;
    }

  AxiomReport rep = check_axioms(v.sum.algebra);
  v.sum_distributive = rep.distributive.ok();

  if (l.n > 1 && v.sum_distributive != v.k_conic)
    fail("InternalError",
         "distributivity of K[L] must coincide with K being conic");

  if (!v.k_conic && l.n > 1) {
    LatticeOps kops = lattice_ops(k);
    LatticeOps lops = lattice_ops(l);
    int m0 = kops.meet_of(nonconic, k.one);
    int m1 = kops.join_of(nonconic, k.one);
    // least strictly comparable pair of L
    int l0 = -1, l1 = -1;
    for (int x = 0; x < l.n && l0 == -1; ++x)
      for (int y = 0; y < l.n; ++y)
        if (x != y && l.le(x, y)) {
          l0 = x;
          l1 = y;
          break;
        }
    (void)lops;
    SublatticeWitness w;
    w.kind = SublatticeWitness::Kind::N5;
    w.elems = {v.sum.from_k[nonconic], v.sum.from_k[m0], v.sum.from_k[m1],
               v.sum.from_l[l0], v.sum.from_l[l1]};
    v.n5 = w;
  }
  return v;
}

}  // namespace qra
