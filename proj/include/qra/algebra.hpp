// Finite residuated structures and the axiom / classification predicates
// used throughout: residuated lattices, FL-, InFL-, InFL'-algebras, qRAs and
// DqRAs, plus total irreducibility, forbidden-sublattice diagnostics and
// isomorphism search.
//
// Carrier is always 0..n-1. Meet and join are never taken from input; they
// are computed from the order matrix.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qra/errors.hpp"

namespace qra {

struct FiniteAlgebra {
  int n = 0;
  std::vector<uint8_t> leq;  // n*n row-major, leq[a*n+b] == 1 iff a <= b
  std::vector<int> mult;     // n*n row-major
  std::optional<std::vector<int>> tilde;  // ~
  std::optional<std::vector<int>> minus;  // -
  std::optional<std::vector<int>> neg;    // involution
  int one = 0;
  std::optional<int> zero;
  std::vector<std::string> names;  // optional display labels

  bool le(int a, int b) const { return leq[static_cast<size_t>(a) * n + b]; }
  int prod(int a, int b) const { return mult[static_cast<size_t>(a) * n + b]; }
  std::string name(int a) const;

  // Signature flags must match for maps and sums.
  bool same_signature(const FiniteAlgebra& o) const {
    return tilde.has_value() == o.tilde.has_value() &&
           minus.has_value() == o.minus.has_value() &&
           neg.has_value() == o.neg.has_value() &&
           zero.has_value() == o.zero.has_value();
  }
};

struct LatticeOps {
  int n = 0;
  std::vector<int> meet, join;  // n*n row-major
  int bottom = -1, top = -1;
  int meet_of(int a, int b) const { return meet[static_cast<size_t>(a) * n + b]; }
  int join_of(int a, int b) const { return join[static_cast<size_t>(a) * n + b]; }
};

struct ResidualTables {
  int n = 0;
  std::vector<int> under;  // under[a*n+c] = a\c
  std::vector<int> over;   // over[c*n+b]  = c/b
  int under_of(int a, int c) const { return under[static_cast<size_t>(a) * n + c]; }
  int over_of(int c, int b) const { return over[static_cast<size_t>(c) * n + b]; }
};

enum class Verdict { True, False, NotApplicable };

struct Check {
  Verdict v = Verdict::NotApplicable;
  std::vector<int> witness;  // carrier indices of a counterexample
  std::string op;            // which operation produced the witness
  bool ok() const { return v == Verdict::True; }
  bool applicable() const { return v != Verdict::NotApplicable; }
};

struct AxiomReport {
  Check poset, lattice, monoid, residuated;
  Check involutive;  // neg is an involution
  Check in_axiom;    // (In) + linear negations agree with residual definition
  Check dm, di, dp;
  Check distributive, cyclic, odd, commutative, idempotent, conic;
  Check qra, dqra;
  std::optional<LatticeOps> lattice_tables;
  std::optional<ResidualTables> residual_tables;
};

// Structural validation: poset, lattice, monoid identity, table ranges.
// Does not check residuation. Throws NotAPoset / NotALattice / NotAMonoid /
// BadTable with witness indices.
FiniteAlgebra validate_algebra(const FiniteAlgebra& raw);

// Meet and join computed from leq; throws NoMeet / NoJoin.
LatticeOps lattice_ops(const FiniteAlgebra& a);

// c/b = max{a : a.b <= c}, a\c = max{b : a.b <= c}; the full triple
// equivalence is re-verified exhaustively. Throws NotResiduated with the
// pair whose residual set has no maximum.
ResidualTables residuals(const FiniteAlgebra& a);

// Tables via c/b = -(b.~c) and a\c = ~(-c.a); must be called on an InFL
// instance (tilde and minus present). Throws InFLRequired.
ResidualTables residuals_from_negations(const FiniteAlgebra& a);

// Full report; never throws on a structurally valid algebra.
AxiomReport check_axioms(const FiniteAlgebra& a);

// a + b = ~(-a . -b). Throws MissingNegations.
int dual_sum(const FiniteAlgebra& a, int x, int y);

struct IrreducibilityResult {
  bool irreducible = false;
  std::string op;          // violating operation when not irreducible
  std::vector<int> args;   // its arguments
};

// b is totally irreducible when no non-nullary basic operation (meet, join,
// mult, \, /, plus any present unary op) yields b without b among its
// arguments. Witnesses are lexicographically least in (op, args) order.
IrreducibilityResult is_totally_irreducible(const FiniteAlgebra& a, int b);

struct SublatticeWitness {
  enum class Kind { N5, M3 };
  Kind kind = Kind::N5;
  std::array<int, 5> elems{};  // closed under meet and join
};

struct ForbiddenSublatticeResult {
  bool distributive = false;  // pointwise law verdict, always filled
  bool scanned = false;       // witness scan ran (n <= cap)
  std::optional<SublatticeWitness> witness;
};

// Witness scan enumerates 5-subsets closed under meet/join; above the cap
// only the pointwise verdict is returned.
ForbiddenSublatticeResult find_forbidden_sublattice(const FiniteAlgebra& a,
                                                    int scan_cap = 12);

// A bijection preserving leq, mult, constants and the present unary tables,
// or nullopt. Backtracking over invariant-compatible candidates; returns the
// lexicographically least bijection.
std::optional<std::vector<int>> are_isomorphic(const FiniteAlgebra& a,
                                               const FiniteAlgebra& b);

// Same search restricted to the order only.
std::optional<std::vector<int>> posets_isomorphic(const FiniteAlgebra& a,
                                                  const FiniteAlgebra& b);

bool is_chain(const FiniteAlgebra& a);
bool element_idempotent(const FiniteAlgebra& a, int x);

}  // namespace qra
