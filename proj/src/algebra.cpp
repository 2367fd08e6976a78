#include "qra/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace qra {

std::string FiniteAlgebra::name(int a) const {
  if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty())
    return names[a];
  return "e" + std::to_string(a);
}

namespace {

// Internal non-throwing structural checks, shared by validate_algebra and
// check_axioms.

Check check_poset(const FiniteAlgebra& a) {
  int n = a.n;
  for (int i = 0; i < n; ++i)
    if (!a.le(i, i)) return {Verdict::False, {i}, "reflexive"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a.le(i, j) && a.le(j, i))
        return {Verdict::False, {i, j}, "antisymmetric"};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.le(i, j))
        for (int k = 0; k < n; ++k)
          if (a.le(j, k) && !a.le(i, k))
            return {Verdict::False, {i, j, k}, "transitive"};
  return {Verdict::True, {}, ""};
}

// Greatest lower bound of {x, y}, or -1.
int glb(const FiniteAlgebra& a, int x, int y) {
  int best = -1;
  for (int c = 0; c < a.n; ++c) {
    if (!a.le(c, x) || !a.le(c, y)) continue;
    if (best == -1 || a.le(best, c)) best = c;
  }
  if (best == -1) return -1;
  for (int c = 0; c < a.n; ++c)
    if (a.le(c, x) && a.le(c, y) && !a.le(c, best)) return -1;
  return best;
}

int lub(const FiniteAlgebra& a, int x, int y) {
  int best = -1;
  for (int c = 0; c < a.n; ++c) {
    if (!a.le(x, c) || !a.le(y, c)) continue;
    if (best == -1 || a.le(c, best)) best = c;
  }
  if (best == -1) return -1;
  for (int c = 0; c < a.n; ++c)
    if (a.le(x, c) && a.le(y, c) && !a.le(best, c)) return -1;
  return best;
}

Check check_lattice(const FiniteAlgebra& a, LatticeOps* out) {
  int n = a.n;
  LatticeOps ops;
  ops.n = n;
  ops.meet.assign(static_cast<size_t>(n) * n, -1);
  ops.join.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = glb(a, x, y);
      if (m == -1) return {Verdict::False, {x, y}, "meet"};
      int j = lub(a, x, y);
      if (j == -1) return {Verdict::False, {x, y}, "join"};
      ops.meet[static_cast<size_t>(x) * n + y] = m;
      ops.join[static_cast<size_t>(x) * n + y] = j;
    }
  ops.bottom = 0;
  ops.top = 0;
  for (int x = 0; x < n; ++x) {
    ops.bottom = ops.meet_of(ops.bottom, x);
    ops.top = ops.join_of(ops.top, x);
  }
  if (out) *out = std::move(ops);
  return {Verdict::True, {}, ""};
}

Check check_monoid(const FiniteAlgebra& a) {
  int n = a.n;
  for (int x = 0; x < n; ++x) {
    if (a.prod(a.one, x) != x) return {Verdict::False, {x}, "left identity"};
    if (a.prod(x, a.one) != x) return {Verdict::False, {x}, "right identity"};
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = a.prod(x, y);
      for (int z = 0; z < n; ++z)
        if (a.prod(xy, z) != a.prod(x, a.prod(y, z)))
          return {Verdict::False, {x, y, z}, "associative"};
    }
  return {Verdict::True, {}, ""};
}

void check_table_range(const FiniteAlgebra& a) {
  int n = a.n;
  if (n <= 0) fail("BadTable", "empty carrier");
  if (static_cast<int>(a.leq.size()) != n * n)
    fail("BadTable", "leq is not n x n");
  if (static_cast<int>(a.mult.size()) != n * n)
    fail("BadTable", "mult is not n x n");
  for (int v : a.mult)
    if (v < 0 || v >= n) fail("BadTable", "mult entry out of range", {v});
  auto check_unary = [&](const std::optional<std::vector<int>>& t,
                         const char* what) {
    if (!t) return;
    if (static_cast<int>(t->size()) != n)
      fail("BadTable", std::string(what) + " is not length n");
    for (int v : *t)
      if (v < 0 || v >= n)
        fail("BadTable", std::string(what) + " entry out of range", {v});
  };
  check_unary(a.tilde, "tilde");
  check_unary(a.minus, "minus");
  check_unary(a.neg, "neg");
  if (a.one < 0 || a.one >= n) fail("BadTable", "one out of range", {a.one});
  if (a.zero && (*a.zero < 0 || *a.zero >= n))
    fail("BadTable", "zero out of range", {*a.zero});
  if (!a.names.empty() && static_cast<int>(a.names.size()) != n)
    fail("BadTable", "names list is not length n");
}

}  // namespace

FiniteAlgebra validate_algebra(const FiniteAlgebra& raw) {
  check_table_range(raw);
  Check p = check_poset(raw);
  if (!p.ok()) fail("NotAPoset", "order fails to be " + p.op, p.witness);
  Check l = check_lattice(raw, nullptr);
  if (!l.ok())
    fail("NotALattice", "pair has no " + l.op, l.witness);
  Check m = check_monoid(raw);
  if (!m.ok()) fail("NotAMonoid", "mult fails " + m.op, m.witness);
  return raw;
}

LatticeOps lattice_ops(const FiniteAlgebra& a) {
  LatticeOps ops;
  Check l = check_lattice(a, &ops);
  if (!l.ok()) {
    if (l.op == "meet") fail("NoMeet", "pair has no meet", l.witness);
    fail("NoJoin", "pair has no join", l.witness);
  }
  return ops;
}

ResidualTables residuals(const FiniteAlgebra& a) {
  int n = a.n;
  ResidualTables t;
  t.n = n;
  t.under.assign(static_cast<size_t>(n) * n, -1);
  t.over.assign(static_cast<size_t>(n) * n, -1);

  // a\c = max{b : a.b <= c}
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c) {
      int best = -1;
      for (int b = 0; b < n; ++b) {
        if (!a.le(a.prod(x, b), c)) continue;
        if (best == -1 || a.le(best, b)) best = b;
      }
      if (best == -1) fail("NotResiduated", "empty residual set for a\\c", {x, c});
      for (int b = 0; b < n; ++b)
        if (a.le(a.prod(x, b), c) && !a.le(b, best))
          fail("NotResiduated", "residual set for a\\c has no maximum", {x, c});
      t.under[static_cast<size_t>(x) * n + c] = best;
    }
  // c/b = max{a : a.b <= c}
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b) {
      int best = -1;
      for (int x = 0; x < n; ++x) {
        if (!a.le(a.prod(x, b), c)) continue;
        if (best == -1 || a.le(best, x)) best = x;
      }
      if (best == -1) fail("NotResiduated", "empty residual set for c/b", {b, c});
      for (int x = 0; x < n; ++x)
        if (a.le(a.prod(x, b), c) && !a.le(x, best))
          fail("NotResiduated", "residual set for c/b has no maximum", {b, c});
      t.over[static_cast<size_t>(c) * n + b] = best;
    }

  // Exhaustive re-verification of  a.b <= c  <=>  a <= c/b  <=>  b <= a\c.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int c = 0; c < n; ++c) {
        bool lhs = a.le(a.prod(x, y), c);
        bool mid = a.le(x, t.over_of(c, y));
        bool rhs = a.le(y, t.under_of(x, c));
        if (lhs != mid || lhs != rhs)
          fail("NotResiduated", "triple equivalence fails", {x, y, c});
      }
  return t;
}

ResidualTables residuals_from_negations(const FiniteAlgebra& a) {
  if (!a.tilde || !a.minus)
    fail("InFLRequired", "tilde and minus tables are required");
  int n = a.n;
  const auto& til = *a.tilde;
  const auto& mns = *a.minus;
  ResidualTables t;
  t.n = n;
  t.under.assign(static_cast<size_t>(n) * n, -1);
  t.over.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int c = 0; c < n; ++c)
      t.under[static_cast<size_t>(x) * n + c] = til[a.prod(mns[c], x)];
  for (int c = 0; c < n; ++c)
    for (int b = 0; b < n; ++b)
      t.over[static_cast<size_t>(c) * n + b] = mns[a.prod(b, til[c])];
  return t;
}

// x + y = ~(-y . -x); the arguments reverse inside the product, matching
// -(~y . ~x) on involutive instances. The two collapse when mult is
// commutative.
int dual_sum(const FiniteAlgebra& a, int x, int y) {
  if (!a.tilde || !a.minus)
    fail("MissingNegations", "dual sum needs tilde and minus");
  return (*a.tilde)[a.prod((*a.minus)[y], (*a.minus)[x])];
}

AxiomReport check_axioms(const FiniteAlgebra& a) {
  AxiomReport rep;
  int n = a.n;

  rep.poset = check_poset(a);
  if (rep.poset.ok()) {
    LatticeOps ops;
    Check l = check_lattice(a, &ops);
    rep.lattice = l;
    if (l.ok()) rep.lattice_tables = std::move(ops);
  } else {
    rep.lattice = {Verdict::NotApplicable, {}, ""};
  }
  rep.monoid = check_monoid(a);

  bool lattice_ok = rep.lattice.ok();
  const LatticeOps* ops = rep.lattice_tables ? &*rep.lattice_tables : nullptr;

  // Residuation.
  if (lattice_ok && rep.monoid.ok()) {
    try {
      rep.residual_tables = residuals(a);
      rep.residuated = {Verdict::True, {}, ""};
    } catch (const Error& e) {
      rep.residuated = {Verdict::False, e.witness(), "residual"};
    }
  } else {
    rep.residuated = {Verdict::NotApplicable, {}, ""};
  }

  // (In) plus the requirement that the supplied linear negations actually
  // present the residuals: the tables of c/b = -(b.~c) and a\c = ~(-c.a)
  // must coincide with the computed residuals, and ~1 = -1 (= 0 when a zero
  // constant is named).
  if (a.tilde && a.minus) {
    const auto& til = *a.tilde;
    const auto& mns = *a.minus;
    rep.in_axiom = {Verdict::True, {}, ""};
    for (int x = 0; x < n && rep.in_axiom.ok(); ++x)
      if (til[mns[x]] != x || mns[til[x]] != x)
        rep.in_axiom = {Verdict::False, {x}, "involution pair"};
    if (rep.in_axiom.ok() && til[a.one] != mns[a.one])
      rep.in_axiom = {Verdict::False, {a.one}, "~1 = -1"};
    if (rep.in_axiom.ok() && a.zero && til[a.one] != *a.zero)
      rep.in_axiom = {Verdict::False, {a.one}, "~1 = 0"};
    if (rep.in_axiom.ok() && rep.residual_tables) {
      const ResidualTables& rt = *rep.residual_tables;
      ResidualTables via = residuals_from_negations(a);
      for (int x = 0; x < n && rep.in_axiom.ok(); ++x)
        for (int c = 0; c < n; ++c) {
          if (rt.under_of(x, c) != via.under_of(x, c)) {
            rep.in_axiom = {Verdict::False, {x, c}, "a\\c = ~(-c.a)"};
            break;
          }
          if (rt.over_of(c, x) != via.over_of(c, x)) {
            rep.in_axiom = {Verdict::False, {c, x}, "c/b = -(b.~c)"};
            break;
          }
        }
    }
  }

  // Involution and the three De Morgan axioms.
  if (a.neg) {
    const auto& ng = *a.neg;
    rep.involutive = {Verdict::True, {}, ""};
    for (int x = 0; x < n && rep.involutive.ok(); ++x)
      if (ng[ng[x]] != x) rep.involutive = {Verdict::False, {x}, "neg"};

    if (ops) {
      rep.dm = {Verdict::True, {}, ""};
      for (int x = 0; x < n && rep.dm.ok(); ++x)
        for (int y = 0; y < n; ++y)
          if (ng[ops->join_of(x, y)] != ops->meet_of(ng[x], ng[y])) {
            rep.dm = {Verdict::False, {x, y}, "Dm"};
            break;
          }
    }
    if (a.tilde && a.minus) {
      const auto& til = *a.tilde;
      const auto& mns = *a.minus;
      rep.di = {Verdict::True, {}, ""};
      for (int x = 0; x < n && rep.di.ok(); ++x)
        if (ng[til[x]] != mns[ng[x]]) rep.di = {Verdict::False, {x}, "Di"};
      rep.dp = {Verdict::True, {}, ""};
      for (int x = 0; x < n && rep.dp.ok(); ++x)
        for (int y = 0; y < n; ++y)
          if (ng[a.prod(x, y)] != dual_sum(a, ng[x], ng[y])) {
            rep.dp = {Verdict::False, {x, y}, "Dp"};
            break;
          }
    }
  }

  if (ops) {
    rep.distributive = {Verdict::True, {}, ""};
    for (int x = 0; x < n && rep.distributive.ok(); ++x)
      for (int y = 0; y < n && rep.distributive.ok(); ++y)
        for (int z = 0; z < n; ++z)
          if (ops->meet_of(x, ops->join_of(y, z)) !=
              ops->join_of(ops->meet_of(x, y), ops->meet_of(x, z))) {
            rep.distributive = {Verdict::False, {x, y, z}, "distributive"};
            break;
          }
  }

  if (a.tilde && a.minus) {
    rep.cyclic = {Verdict::True, {}, ""};
    for (int x = 0; x < n && rep.cyclic.ok(); ++x)
      if ((*a.tilde)[x] != (*a.minus)[x])
        rep.cyclic = {Verdict::False, {x}, "cyclic"};
  }

  if (a.zero)
    rep.odd = {a.one == *a.zero ? Verdict::True : Verdict::False,
               a.one == *a.zero ? std::vector<int>{} : std::vector<int>{a.one, *a.zero},
               "odd"};

  rep.commutative = {Verdict::True, {}, ""};
  for (int x = 0; x < n && rep.commutative.ok(); ++x)
    for (int y = 0; y < x; ++y)
      if (a.prod(x, y) != a.prod(y, x)) {
        rep.commutative = {Verdict::False, {y, x}, "commutative"};
        break;
      }

  rep.idempotent = {Verdict::True, {}, ""};
  for (int x = 0; x < n && rep.idempotent.ok(); ++x)
    if (a.prod(x, x) != x) rep.idempotent = {Verdict::False, {x}, "idempotent"};

  rep.conic = {Verdict::True, {}, ""};
  for (int x = 0; x < n && rep.conic.ok(); ++x)
    if (!a.le(x, a.one) && !a.le(a.one, x))
      rep.conic = {Verdict::False, {x}, "conic"};

  // conjunction verdicts inherit the first failing conjunct's witness
  auto conj = [](std::initializer_list<std::pair<const char*, const Check*>>
                     checks) {
    for (const auto& [name, c] : checks)
      if (!c->ok()) return Check{Verdict::False, c->witness, name};
    return Check{Verdict::True, {}, ""};
  };
  rep.qra = conj({{"residuated", &rep.residuated},
                  {"involutive", &rep.involutive},
                  {"In", &rep.in_axiom},
                  {"Dm", &rep.dm},
                  {"Di", &rep.di},
                  {"Dp", &rep.dp}});
  rep.dqra = rep.qra.ok() ? conj({{"distributive", &rep.distributive}})
                          : Check{Verdict::False, rep.qra.witness, rep.qra.op};
  return rep;
}

IrreducibilityResult is_totally_irreducible(const FiniteAlgebra& a, int b) {
  LatticeOps ops = lattice_ops(a);
  ResidualTables rt = residuals(a);
  int n = a.n;

  auto binary = [&](const char* opname, auto&& f) -> IrreducibilityResult {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != b && y != b && f(x, y) == b)
          return {false, opname, {x, y}};
    return {true, "", {}};
  };
  auto unary = [&](const char* opname,
                   const std::vector<int>& t) -> IrreducibilityResult {
    for (int x = 0; x < n; ++x)
      if (x != b && t[x] == b) return {false, opname, {x}};
    return {true, "", {}};
  };

  IrreducibilityResult r;
  r = binary("meet", [&](int x, int y) { return ops.meet_of(x, y); });
  if (!r.irreducible) return r;
  r = binary("join", [&](int x, int y) { return ops.join_of(x, y); });
  if (!r.irreducible) return r;
  r = binary("mult", [&](int x, int y) { return a.prod(x, y); });
  if (!r.irreducible) return r;
  r = binary("under", [&](int x, int y) { return rt.under_of(x, y); });
  if (!r.irreducible) return r;
  r = binary("over", [&](int x, int y) { return rt.over_of(x, y); });
  if (!r.irreducible) return r;
  if (a.tilde) {
    r = unary("tilde", *a.tilde);
    if (!r.irreducible) return r;
  }
  if (a.minus) {
    r = unary("minus", *a.minus);
    if (!r.irreducible) return r;
  }
  if (a.neg) {
    r = unary("neg", *a.neg);
    if (!r.irreducible) return r;
  }
  return {true, "", {}};
}

namespace {

// Number of incomparable unordered pairs identifies the shape of a
// 5-element lattice: 2 -> N5, 3 -> M3, otherwise distributive.
std::optional<SublatticeWitness::Kind> five_element_shape(
    const FiniteAlgebra& a, const std::array<int, 5>& s) {
  int incomparable = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (!a.le(s[i], s[j]) && !a.le(s[j], s[i])) ++incomparable;
  if (incomparable == 2) return SublatticeWitness::Kind::N5;
  if (incomparable == 3) return SublatticeWitness::Kind::M3;
  return std::nullopt;
}

}  // namespace

ForbiddenSublatticeResult find_forbidden_sublattice(const FiniteAlgebra& a,
                                                    int scan_cap) {
  LatticeOps ops = lattice_ops(a);
  ForbiddenSublatticeResult res;

  res.distributive = true;
  for (int x = 0; x < a.n && res.distributive; ++x)
    for (int y = 0; y < a.n && res.distributive; ++y)
      for (int z = 0; z < a.n; ++z)
        if (ops.meet_of(x, ops.join_of(y, z)) !=
            ops.join_of(ops.meet_of(x, y), ops.meet_of(x, z))) {
          res.distributive = false;
          break;
        }

  if (a.n > scan_cap) return res;
  res.scanned = true;
  if (res.distributive) return res;

  std::array<int, 5> s{};
  auto closed = [&](const std::array<int, 5>& sub) {
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        int m = ops.meet_of(sub[i], sub[j]);
        int u = ops.join_of(sub[i], sub[j]);
        bool mf = false, uf = false;
        for (int e : sub) {
          mf |= (e == m);
          uf |= (e == u);
        }
        if (!mf || !uf) return false;
      }
    return true;
  };
  for (s[0] = 0; s[0] < a.n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < a.n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < a.n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < a.n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < a.n; ++s[4]) {
            if (!closed(s)) continue;
            if (auto kind = five_element_shape(a, s)) {
              res.witness = SublatticeWitness{*kind, s};
              return res;
            }
          }
  return res;
}

namespace {

// Per-element invariant used to prune isomorphism search.
struct ElementInvariant {
  int down = 0, up = 0;
  bool idem = false, is_one = false, is_zero = false;
  int tilde_orbit = -1, minus_orbit = -1, neg_orbit = -1;
  bool operator==(const ElementInvariant&) const = default;
};

std::vector<ElementInvariant> invariants(const FiniteAlgebra& a) {
  std::vector<ElementInvariant> inv(a.n);
  for (int x = 0; x < a.n; ++x) {
    ElementInvariant& e = inv[x];
    for (int y = 0; y < a.n; ++y) {
      if (a.le(y, x)) ++e.down;
      if (a.le(x, y)) ++e.up;
    }
    e.idem = a.prod(x, x) == x;
    e.is_one = x == a.one;
    e.is_zero = a.zero && *a.zero == x;
    if (a.tilde) e.tilde_orbit = ((*a.tilde)[x] == x) ? 1 : 0;
    if (a.minus) e.minus_orbit = ((*a.minus)[x] == x) ? 1 : 0;
    if (a.neg) e.neg_orbit = ((*a.neg)[x] == x) ? 1 : 0;
  }
  return inv;
}

bool extend_iso(const FiniteAlgebra& a, const FiniteAlgebra& b,
                const std::vector<ElementInvariant>& ia,
                const std::vector<ElementInvariant>& ib, bool order_only,
                std::vector<int>& map, std::vector<uint8_t>& used, int next) {
  int n = a.n;
  if (next == n) {
    if (order_only) return true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (map[a.prod(x, y)] != b.prod(map[x], map[y])) return false;
    return true;
  }
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    if (order_only) {
      if (ia[next].down != ib[cand].down || ia[next].up != ib[cand].up)
        continue;
    } else if (!(ia[next] == ib[cand])) {
      continue;
    }
    bool fit = true;
    for (int prev = 0; prev < next && fit; ++prev) {
      if (a.le(next, prev) != b.le(cand, map[prev])) fit = false;
      if (a.le(prev, next) != b.le(map[prev], cand)) fit = false;
      if (order_only || !fit) continue;
      int p = a.prod(next, prev);
      if (p <= next && map[p] != -1 && map[p] != b.prod(cand, map[prev]))
        fit = false;
      int q = a.prod(prev, next);
      if (q <= next && map[q] != -1 && map[q] != b.prod(map[prev], cand))
        fit = false;
    }
    if (!fit) continue;
    if (!order_only) {
      if (a.one == next && b.one != cand) continue;
      if (b.one == cand && a.one != next) continue;
      if (a.zero && (*a.zero == next) != (*b.zero == cand)) continue;
      auto unary_ok = [&](const std::optional<std::vector<int>>& ta,
                          const std::optional<std::vector<int>>& tb) {
        if (!ta) return true;
        int img = (*ta)[next];
        if (img <= next && map[img] != -1 && map[img] != (*tb)[cand])
          return false;
        return true;
      };
      if (!unary_ok(a.tilde, b.tilde) || !unary_ok(a.minus, b.minus) ||
          !unary_ok(a.neg, b.neg))
        continue;
    }
    map[next] = cand;
    used[cand] = 1;
    if (extend_iso(a, b, ia, ib, order_only, map, used, next + 1)) return true;
    map[next] = -1;
    used[cand] = 0;
  }
  return false;
}

std::optional<std::vector<int>> iso_search(const FiniteAlgebra& a,
                                           const FiniteAlgebra& b,
                                           bool order_only) {
  if (a.n != b.n) return std::nullopt;
  if (!order_only && !a.same_signature(b)) return std::nullopt;
  std::vector<ElementInvariant> ia = invariants(a), ib = invariants(b);
  std::vector<int> map(a.n, -1);
  std::vector<uint8_t> used(a.n, 0);
  if (!extend_iso(a, b, ia, ib, order_only, map, used, 0)) return std::nullopt;

  // Final exhaustive verification of everything preserved.
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (a.le(x, y) != b.le(map[x], map[y])) return std::nullopt;
      if (!order_only && map[a.prod(x, y)] != b.prod(map[x], map[y]))
        return std::nullopt;
    }
  if (!order_only) {
    if (map[a.one] != b.one) return std::nullopt;
    if (a.zero && map[*a.zero] != *b.zero) return std::nullopt;
    auto unary_ok = [&](const std::optional<std::vector<int>>& ta,
                        const std::optional<std::vector<int>>& tb) {
      if (!ta) return true;
      for (int x = 0; x < a.n; ++x)
        if (map[(*ta)[x]] != (*tb)[map[x]]) return false;
      return true;
    };
    if (!unary_ok(a.tilde, b.tilde) || !unary_ok(a.minus, b.minus) ||
        !unary_ok(a.neg, b.neg))
      return std::nullopt;
  }
  return map;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteAlgebra& a,
                                               const FiniteAlgebra& b) {
  return iso_search(a, b, /*order_only=*/false);
}

std::optional<std::vector<int>> posets_isomorphic(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b) {
  return iso_search(a, b, /*order_only=*/true);
}

bool is_chain(const FiniteAlgebra& a) {
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < x; ++y)
      if (!a.le(x, y) && !a.le(y, x)) return false;
  return true;
}

bool element_idempotent(const FiniteAlgebra& a, int x) {
  return a.prod(x, x) == x;
}

}  // namespace qra
