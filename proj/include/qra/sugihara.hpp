// Finite Sugihara chains S_n viewed as DqRAs, and the index-shift
// isomorphism S_n[S_m] = S_{n+m-1} for odd n.
#pragma once

#include <string>
#include <vector>

#include "qra/algebra.hpp"

namespace qra {

struct SugiharaChain {
  int n = 0;
  FiniteAlgebra algebra;     // tilde = minus = neg, zero = ~1
  std::vector<int> label;    // label[idx] = subscript of a_idx (ascending)
  std::vector<int> implies;  // derived -> table, metadata only

  int index_of(int subscript) const;
};

// n >= 2. Meet/join are min/max on index, a_i.a_j by the |i|,|j| case
// split, ~a_j = a_{-j}; 1 = a_0 (n odd) or a_1 (n even), 0 = ~1.
// Throws SizeTooSmall.
SugiharaChain sugihara_chain(int n);

// A verified map between two algebras: preservation is checked operation by
// operation and recorded.
struct AlgebraMap {
  FiniteAlgebra source, target;
  std::vector<int> map;  // source index -> target index
  struct OpCheck {
    std::string op;
    bool ok = false;
    std::vector<int> witness;
  };
  std::vector<OpCheck> report;
  bool all_preserved() const;
  bool bijective() const;
};

// Builds the map and fills the preservation report (leq, meet, join, mult,
// constants and unary tables, checked exhaustively).
AlgebraMap make_verified_map(const FiniteAlgebra& source,
                             const FiniteAlgebra& target,
                             std::vector<int> map);

// The bijection of nested_sum(S_n, S_m) onto S_{n+m-1}: K-part subscripts
// shift away from 0 by the half-width of S_m, L-part subscripts are kept.
// n must be odd (EvenOuterChain otherwise), n >= 3, m >= 2.
AlgebraMap collapse_iso(int n, int m);

}  // namespace qra
