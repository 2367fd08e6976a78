// Bounded enumeration of finite models under constraints with isomorph
// rejection. Layered: naturally-labelled lattices (deduped by a canonical
// order key), identity choice, monoid tables by DFS with monotonicity /
// partial associativity / residual-existence pruning, then 0 and the
// involution. Output is canonicalized and sorted, so it is deterministic
// regardless of thread count.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qra/algebra.hpp"

namespace qra {

enum class Constraint {
  Qra,
  Dqra,
  Conic,
  Odd,
  Cyclic,
  Commutative,
  Idempotent,
  TotallyIrreducibleOne,
  Chain,
};

std::optional<Constraint> constraint_from_string(const std::string& s);
std::string constraint_name(Constraint c);

struct SearchSpec {
  int size = 1;
  std::set<Constraint> constraints;
  std::optional<size_t> limit;
  int threads = 1;
  int max_exhaustive_size = 8;  // budget cap; larger sizes are refused
};

struct FoundModel {
  FiniteAlgebra algebra;
  std::string canonical;
};

struct ModelSet {
  std::vector<FoundModel> models;  // pairwise non-isomorphic, sorted
  bool exhaustive = true;
  double wall_seconds = 0.0;
};

// Models are residuated lattice-ordered monoids with a 0 constant and an
// involution; the linear negations are always the residually defined ones.
// Throws BudgetExceeded when size exceeds the budget.
ModelSet enumerate_models(const SearchSpec& spec);

// One representative per isomorphism class of lattices on n elements, as
// order-only algebras (mult is the meet, one the top). The first layer of
// the search, exposed for counting and inspection.
std::vector<FiniteAlgebra> enumerate_lattice_orders(int n);

// Isomorphic algebras map to equal strings: minimum serialized table over
// invariant-compatible permutations. Throws BudgetExceeded when the
// candidate permutation count is out of budget.
std::string canonical_form(const FiniteAlgebra& a);

}  // namespace qra
