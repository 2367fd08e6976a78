#include "qra/model_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <chrono>
#include <map>
#include <thread>

namespace qra {

std::optional<Constraint> constraint_from_string(const std::string& s) {
  if (s == "qra") return Constraint::Qra;
  if (s == "dqra") return Constraint::Dqra;
  if (s == "conic") return Constraint::Conic;
  if (s == "odd") return Constraint::Odd;
  if (s == "cyclic") return Constraint::Cyclic;
  if (s == "commutative") return Constraint::Commutative;
  if (s == "idempotent") return Constraint::Idempotent;
  if (s == "tot-irr-one") return Constraint::TotallyIrreducibleOne;
  if (s == "chain") return Constraint::Chain;
  return std::nullopt;
}

std::string constraint_name(Constraint c) {
  switch (c) {
    case Constraint::Qra: return "qra";
    case Constraint::Dqra: return "dqra";
    case Constraint::Conic: return "conic";
    case Constraint::Odd: return "odd";
    case Constraint::Cyclic: return "cyclic";
    case Constraint::Commutative: return "commutative";
    case Constraint::Idempotent: return "idempotent";
    case Constraint::TotallyIrreducibleOne: return "tot-irr-one";
    case Constraint::Chain: return "chain";
  }
  return "?";
}

namespace {

// ---- canonical forms ------------------------------------------------------

struct CanonInvariant {
  int down = 0, up = 0;
  int idem = 0, is_one = 0, is_zero = 0;
  int tfix = -1, mfix = -1, nfix = -1;
  bool operator==(const CanonInvariant&) const = default;
  bool operator<(const CanonInvariant& o) const {
    return std::tie(down, up, idem, is_one, is_zero, tfix, mfix, nfix) <
           std::tie(o.down, o.up, o.idem, o.is_one, o.is_zero, o.tfix, o.mfix,
                    o.nfix);
  }
};

std::vector<CanonInvariant> canon_invariants(const FiniteAlgebra& a,
                                             bool order_only) {
  std::vector<CanonInvariant> inv(a.n);
  for (int x = 0; x < a.n; ++x) {
    for (int y = 0; y < a.n; ++y) {
      if (a.le(y, x)) ++inv[x].down;
      if (a.le(x, y)) ++inv[x].up;
    }
    if (order_only) continue;
    inv[x].idem = a.prod(x, x) == x;
    inv[x].is_one = x == a.one;
    inv[x].is_zero = a.zero && *a.zero == x;
    if (a.tilde) inv[x].tfix = (*a.tilde)[x] == x;
    if (a.minus) inv[x].mfix = (*a.minus)[x] == x;
    if (a.neg) inv[x].nfix = (*a.neg)[x] == x;
  }
  return inv;
}

// sigma maps new index -> original element.
std::string serialize_relabeled(const FiniteAlgebra& a,
                                const std::vector<int>& sigma,
                                bool order_only) {
  int n = a.n;
  std::vector<int> pos(n);  // original -> new
  for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
  std::string s;
  s.reserve(static_cast<size_t>(n) * n * 2 + 8);
  s.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.push_back(a.le(sigma[i], sigma[j]) ? '1' : '0');
  if (order_only) return s;
  s.push_back(static_cast<char>(pos[a.one]));
  s.push_back(a.zero ? static_cast<char>(pos[*a.zero]) : static_cast<char>(-1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      s.push_back(static_cast<char>(pos[a.prod(sigma[i], sigma[j])]));
  auto dump_unary = [&](const std::optional<std::vector<int>>& t) {
    if (!t) {
      s.push_back(static_cast<char>(-2));
      return;
    }
    for (int i = 0; i < n; ++i)
      s.push_back(static_cast<char>(pos[(*t)[sigma[i]]]));
  };
  dump_unary(a.tilde);
  dump_unary(a.minus);
  dump_unary(a.neg);
  return s;
}

std::string canonical_key(const FiniteAlgebra& a, bool order_only) {
  int n = a.n;
  std::vector<CanonInvariant> inv = canon_invariants(a, order_only);

  // Budget: product of invariant-class factorials.
  {
    std::map<CanonInvariant, int> cls;
    for (const auto& i : inv) ++cls[i];
    double perms = 1;
    for (auto& [_, c] : cls)
      for (int f = 2; f <= c; ++f) perms *= f;
    if (perms > 2e6)
      fail_budget("BudgetExceeded",
                  "too many candidate relabelings for canonical form");
  }

  std::vector<int> sigma(n, -1);
  std::vector<uint8_t> used(n, 0);
  std::string best;

  // Permutations send invariant classes onto themselves: position i may only
  // take elements whose invariant matches the i-th entry of the class-sorted
  // identity layout.
  std::vector<int> slot_class(n);
  {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    std::stable_sort(ids.begin(), ids.end(),
                     [&](int x, int y) { return inv[x] < inv[y]; });
    slot_class = ids;
  }

  auto rec = [&](auto&& self, int posn) -> void {
    if (posn == n) {
      std::string s = serialize_relabeled(a, sigma, order_only);
      if (best.empty() || s < best) best = std::move(s);
      return;
    }
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand]) continue;
      if (!(inv[cand] == inv[slot_class[posn]])) continue;
      sigma[posn] = cand;
      used[cand] = 1;
      self(self, posn + 1);
      used[cand] = 0;
      sigma[posn] = -1;
    }
  };
  rec(rec, 0);
  return best;
}

// ---- lattice enumeration --------------------------------------------------

struct Lattice {
  int n = 0;
  std::vector<uint8_t> leq;
  std::vector<int> meet, join;
  int bottom = 0, top = 0;
  bool distributive = false;
  bool chain = false;
  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b]; }
  int meet_of(int a, int b) const { return meet[static_cast<size_t>(a) * n + b]; }
  int join_of(int a, int b) const { return join[static_cast<size_t>(a) * n + b]; }
};

// All lattices on carrier 0..n-1 whose identity labeling is a linear
// extension, one representative per isomorphism class, in generation order.
std::vector<Lattice> enumerate_lattices(int n) {
  std::vector<Lattice> out;
  std::set<std::string> seen;

  std::vector<uint32_t> dn(n, 0);  // dn[i] = down-set mask of i, incl. i

  auto finish = [&]() {
    // joins must exist (meets were checked incrementally)
    std::vector<uint32_t> up(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (dn[j] & (1u << i)) up[i] |= 1u << j;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        uint32_t common = up[i] & up[j];
        if (!common) return;
        bool has = false;
        for (int m = 0; m < n && !has; ++m)
          if ((common >> m & 1) && (common & ~up[m]) == 0) has = true;
        if (!has) return;
      }

    Lattice lt;
    lt.n = n;
    lt.leq.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lt.leq[static_cast<size_t>(i) * n + j] = (dn[j] >> i) & 1;

    FiniteAlgebra probe;
    probe.n = n;
    probe.leq = lt.leq;
    probe.mult.assign(static_cast<size_t>(n) * n, 0);
    std::string key = canonical_key(probe, /*order_only=*/true);
    if (!seen.insert(key).second) return;

    LatticeOps ops = lattice_ops(probe);
    lt.meet = ops.meet;
    lt.join = ops.join;
    lt.bottom = ops.bottom;
    lt.top = ops.top;
    lt.distributive = true;
    for (int x = 0; x < n && lt.distributive; ++x)
      for (int y = 0; y < n && lt.distributive; ++y)
        for (int z = 0; z < n; ++z)
          if (lt.meet_of(x, lt.join_of(y, z)) !=
              lt.join_of(lt.meet_of(x, y), lt.meet_of(x, z))) {
            lt.distributive = false;
            break;
          }
    lt.chain = true;
    for (int x = 0; x < n && lt.chain; ++x)
      for (int y = 0; y < x; ++y)
        if (!lt.le(x, y) && !lt.le(y, x)) {
          lt.chain = false;
          break;
        }
    out.push_back(std::move(lt));
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      finish();
      return;
    }
    uint32_t below = (i == 0) ? 0 : (uint32_t{1} << i) - 1;
    // strict down-set S of element i; 0 is the bottom, n-1 the top
    for (uint32_t s = 0; s <= below; ++s) {
      if (i > 0 && !(s & 1)) continue;                    // bottom below all
      if (i == n - 1 && s != below) continue;             // top above all
      // S must be a down-set of the part built so far
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if ((s >> j & 1) && (dn[j] & ~s) != 0) ok = false;
      if (!ok) continue;
      dn[i] = s | (uint32_t{1} << i);
      // meets with the new element must exist
      for (int j = 0; j < i && ok; ++j) {
        uint32_t common = dn[j] & dn[i];
        bool has = false;
        for (int m = 0; m <= j && !has; ++m)
          if ((common >> m & 1) && (common & ~dn[m]) == 0) has = true;
        if (!has) ok = false;
      }
      if (ok) self(self, i + 1);
    }
    dn[i] = 0;
  };
  if (n == 1) {
    dn[0] = 1;
    finish();
  } else {
    rec(rec, 0);
  }
  return out;
}

// ---- monoid table search ---------------------------------------------------

bool residual_row_ok(int n, const Lattice& lt, const std::vector<int>& mult,
                     int a) {
  // every {y : a.y <= c} needs a maximum
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int y = 0; y < n; ++y) {
      if (!lt.le(mult[static_cast<size_t>(a) * n + y], c)) continue;
      if (best == -1 || lt.le(best, y)) best = y;
    }
    if (best == -1) return false;
    for (int y = 0; y < n; ++y)
      if (lt.le(mult[static_cast<size_t>(a) * n + y], c) && !lt.le(y, best))
        return false;
  }
  return true;
}

bool residual_col_ok(int n, const Lattice& lt, const std::vector<int>& mult,
                     int b) {
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int x = 0; x < n; ++x) {
      if (!lt.le(mult[static_cast<size_t>(x) * n + b], c)) continue;
      if (best == -1 || lt.le(best, x)) best = x;
    }
    if (best == -1) return false;
    for (int x = 0; x < n; ++x)
      if (lt.le(mult[static_cast<size_t>(x) * n + b], c) && !lt.le(x, best))
        return false;
  }
  return true;
}

struct MultSearch {
  const Lattice& lt;
  int n, one;
  bool forbid_one;      // tot-irr-one: no product = 1 from non-1 arguments
  bool commutative;     // mirror cells tied
  bool idempotent;      // diagonal forced
  std::vector<int> mult;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>>* sink;

  MultSearch(const Lattice& l, int one_, bool forbid, bool comm, bool idem)
      : lt(l), n(l.n), one(one_), forbid_one(forbid), commutative(comm),
        idempotent(idem), mult(static_cast<size_t>(n) * n, -1) {}

  int& at(int a, int b) { return mult[static_cast<size_t>(a) * n + b]; }
  int get(int a, int b) const { return mult[static_cast<size_t>(a) * n + b]; }

  bool prefill() {
    for (int x = 0; x < n; ++x) {
      if (!force(one, x, x)) return false;
      if (!force(x, one, x)) return false;
      if (!force(lt.bottom, x, lt.bottom)) return false;
      if (!force(x, lt.bottom, lt.bottom)) return false;
      if (idempotent && !force(x, x, x)) return false;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (get(a, b) == -1 && !(commutative && b < a))
          cells.emplace_back(a, b);
    return true;
  }

  bool force(int a, int b, int v) {
    int& cell = at(a, b);
    if (cell != -1) return cell == v;
    if (forbid_one && v == one && a != one && b != one) return false;
    cell = v;
    if (commutative) {
      int& mirror = at(b, a);
      if (mirror == -1)
        mirror = v;
      else if (mirror != v)
        return false;
    }
    return true;
  }

  bool monotone_ok(int a, int b, int v) const {
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        int w = get(c, d);
        if (w == -1) continue;
        if (lt.le(c, a) && lt.le(d, b) && !lt.le(w, v)) return false;
        if (lt.le(a, c) && lt.le(b, d) && !lt.le(v, w)) return false;
      }
    return true;
  }

  bool assoc_ok(int a, int b) const {
    int ab = get(a, b);
    for (int x = 0; x < n; ++x) {
      // (a.b).x vs a.(b.x)
      int bx = get(b, x);
      if (bx != -1) {
        int left = get(ab, x);
        int right = get(a, bx);
        if (left != -1 && right != -1 && left != right) return false;
      }
      // (x.a).b vs x.(a.b)
      int xa = get(x, a);
      if (xa != -1) {
        int left = get(xa, b);
        int right = get(x, ab);
        if (left != -1 && right != -1 && left != right) return false;
      }
      // a and b in outer positions of a triple with x inside
      int axb = get(a, x);
      if (axb != -1) {
        int xb = get(x, b);
        if (xb != -1) {
          int left = get(axb, b);
          int right = get(a, xb);
          if (left != -1 && right != -1 && left != right) return false;
        }
      }
    }
    return true;
  }

  bool row_complete(int a) const {
    for (int b = 0; b < n; ++b)
      if (get(a, b) == -1) return false;
    return true;
  }
  bool col_complete(int b) const {
    for (int a = 0; a < n; ++a)
      if (get(a, b) == -1) return false;
    return true;
  }

  void run(size_t idx) {
    if (idx == cells.size()) {
      // full associativity then residual existence
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          int ab = get(a, b);
          for (int c = 0; c < n; ++c)
            if (get(ab, c) != get(a, get(b, c))) return;
        }
      for (int a = 0; a < n; ++a)
        if (!residual_row_ok(n, lt, mult, a)) return;
      for (int b = 0; b < n; ++b)
        if (!residual_col_ok(n, lt, mult, b)) return;
      sink->push_back(mult);
      return;
    }
    auto [a, b] = cells[idx];
    if (get(a, b) != -1) {  // filled by a mirror write
      run(idx + 1);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (forbid_one && v == one && a != one && b != one) continue;
      if (!monotone_ok(a, b, v)) continue;
      at(a, b) = v;
      int mirror_old = -2;
      if (commutative && at(b, a) == -1) {
        at(b, a) = v;
        mirror_old = -1;
      }
      bool ok = assoc_ok(a, b) && (!commutative || mirror_old != -1 ||
                                   at(b, a) == v);
      if (ok && commutative && mirror_old == -1) ok = assoc_ok(b, a);
      if (ok && b == n - 1 && row_complete(a))
        ok = residual_row_ok(n, lt, mult, a);
      if (ok && a == n - 1 && col_complete(b))
        ok = residual_col_ok(n, lt, mult, b);
      if (ok) run(idx + 1);
      at(a, b) = -1;
      if (mirror_old == -1) at(b, a) = -1;
    }
  }
};

// ---- involution enumeration -------------------------------------------------

void involutions_rec(int n, int next, std::vector<int>& f,
                     std::vector<std::vector<int>>& out) {
  while (next < n && f[next] != -1) ++next;
  if (next == n) {
    out.push_back(f);
    return;
  }
  f[next] = next;
  involutions_rec(n, next + 1, f, out);
  f[next] = -1;
  for (int j = next + 1; j < n; ++j) {
    if (f[j] != -1) continue;
    f[next] = j;
    f[j] = next;
    involutions_rec(n, next + 1, f, out);
    f[next] = -1;
    f[j] = -1;
  }
}

std::vector<std::vector<int>> involutions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, -1);
  involutions_rec(n, 0, f, out);
  return out;
}

bool dual_automorphism(const Lattice& lt, const std::vector<int>& f) {
  for (int x = 0; x < lt.n; ++x)
    for (int y = 0; y < lt.n; ++y)
      if (lt.le(x, y) != lt.le(f[y], f[x])) return false;
  return true;
}

}  // namespace

std::string canonical_form(const FiniteAlgebra& a) {
  return canonical_key(a, /*order_only=*/false);
}

std::vector<FiniteAlgebra> enumerate_lattice_orders(int n) {
  std::vector<FiniteAlgebra> out;
  for (const Lattice& lt : enumerate_lattices(n)) {
    FiniteAlgebra a;
    a.n = n;
    a.leq = lt.leq;
    a.mult = lt.meet;
    a.one = lt.top;
    out.push_back(std::move(a));
  }
  return out;
}

ModelSet enumerate_models(const SearchSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  int n = spec.size;
  if (n < 1) fail("BadTable", "size must be >= 1");
  if (n > spec.max_exhaustive_size)
    fail_budget("BudgetExceeded",
                "size " + std::to_string(n) + " exceeds the exhaustive budget " +
                    std::to_string(spec.max_exhaustive_size));

  auto has = [&](Constraint c) { return spec.constraints.count(c) > 0; };
  bool want_qra = has(Constraint::Qra) || has(Constraint::Dqra);

  std::vector<Lattice> lattices = enumerate_lattices(n);

  // limit forces sequential search so the truncation point is deterministic
  int threads = spec.limit ? 1 : std::max(1, spec.threads);

  std::vector<std::vector<FoundModel>> per_lattice(lattices.size());
  std::atomic<size_t> next_lattice{0};
  std::atomic<size_t> found_count{0};
  std::atomic<bool> stop{false};

  auto process_lattice = [&](size_t li) {
    const Lattice& lt = lattices[li];
    if (has(Constraint::Dqra) && !lt.distributive) return;
    if (has(Constraint::Chain) && !lt.chain) return;

    std::vector<std::vector<int>> invols = involutions(n);
    std::vector<std::vector<int>> dual_invols;
    for (const auto& f : invols)
      if (dual_automorphism(lt, f)) dual_invols.push_back(f);
    // a qRA needs a dual automorphism involution; skip the whole lattice
    if (want_qra && dual_invols.empty()) return;

    for (int one = 0; one < n; ++one) {
      if (stop.load(std::memory_order_relaxed)) return;
      if (n > 1 && one == lt.bottom) continue;  // 1 = bottom forces n = 1
      if (has(Constraint::Conic)) {
        bool conic = true;
        for (int x = 0; x < n && conic; ++x)
          if (!lt.le(x, one) && !lt.le(one, x)) conic = false;
        if (!conic) continue;
      }
      if (has(Constraint::TotallyIrreducibleOne)) {
        bool irr = true;
        for (int x = 0; x < n && irr; ++x)
          for (int y = 0; y < n; ++y)
            if (x != one && y != one &&
                (lt.meet_of(x, y) == one || lt.join_of(x, y) == one)) {
              irr = false;
              break;
            }
        if (!irr) continue;
      }

      MultSearch ms(lt, one, has(Constraint::TotallyIrreducibleOne),
                    has(Constraint::Commutative), has(Constraint::Idempotent));
      std::vector<std::vector<int>> tables;
      ms.sink = &tables;
      if (!ms.prefill()) continue;
      ms.run(0);

      for (const auto& mult : tables) {
        FiniteAlgebra base;
        base.n = n;
        base.leq = lt.leq;
        base.mult = mult;
        base.one = one;
        ResidualTables rt = residuals(base);

        for (int zero = 0; zero < n; ++zero) {
          if (has(Constraint::Odd) && zero != one) continue;
          std::vector<int> til(n), mns(n);
          for (int x = 0; x < n; ++x) {
            til[x] = rt.under_of(x, zero);
            mns[x] = rt.over_of(zero, x);
          }
          if (want_qra) {
            bool infl = true;
            for (int x = 0; x < n && infl; ++x)
              if (til[mns[x]] != x || mns[til[x]] != x) infl = false;
            if (!infl) continue;
          }
          if (has(Constraint::Cyclic) && til != mns) continue;

          const auto& neg_pool = want_qra ? dual_invols : invols;
          for (const auto& ng : neg_pool) {
            if (stop.load(std::memory_order_relaxed)) return;
            FiniteAlgebra cand = base;
            cand.tilde = til;
            cand.minus = mns;
            cand.neg = ng;
            cand.zero = zero;

            AxiomReport rep = check_axioms(cand);
            if (!rep.residuated.ok() || !rep.involutive.ok()) continue;
            if (has(Constraint::Qra) && !rep.qra.ok()) continue;
            if (has(Constraint::Dqra) && !rep.dqra.ok()) continue;
            if (has(Constraint::Conic) && !rep.conic.ok()) continue;
            if (has(Constraint::Odd) && !rep.odd.ok()) continue;
            if (has(Constraint::Cyclic) && !rep.cyclic.ok()) continue;
            if (has(Constraint::Commutative) && !rep.commutative.ok()) continue;
            if (has(Constraint::Idempotent) && !rep.idempotent.ok()) continue;
            if (has(Constraint::Chain) && !is_chain(cand)) continue;
            if (has(Constraint::TotallyIrreducibleOne) &&
                !is_totally_irreducible(cand, cand.one).irreducible)
              continue;

            per_lattice[li].push_back({cand, canonical_form(cand)});
            size_t c = ++found_count;
            if (spec.limit && c >= 4 * (*spec.limit) + 64)
              stop.store(true, std::memory_order_relaxed);
          }
        }
      }
    }
  };

  if (threads <= 1) {
    for (size_t li = 0; li < lattices.size(); ++li) process_lattice(li);
  } else {
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          size_t li = next_lattice.fetch_add(1);
          if (li >= lattices.size()) return;
          try {
            process_lattice(li);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            stop.store(true, std::memory_order_relaxed);
          }
        }
      });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // merge in lattice order, dedupe by canonical string, sort
  ModelSet out;
  std::set<std::string> seen;
  for (auto& bucket : per_lattice)
    for (auto& m : bucket)
      if (seen.insert(m.canonical).second) out.models.push_back(std::move(m));
  std::sort(out.models.begin(), out.models.end(),
            [](const FoundModel& x, const FoundModel& y) {
              return x.canonical < y.canonical;
            });
  out.exhaustive = !stop.load();
  if (spec.limit && out.models.size() > *spec.limit) {
    out.models.resize(*spec.limit);
    out.exhaustive = false;
  }
  auto t1 = std::chrono::steady_clock::now();
  out.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  return out;
}

}  // namespace qra
