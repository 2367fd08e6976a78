// The nested sum K[L]: L replaces the monoid identity of K. Requires 1_K
// totally irreducible; the order comes from the ordering lemma and the
// meet/join tables are re-derived from it as a consistency check.
#pragma once

#include <string>
#include <vector>

#include "qra/algebra.hpp"

namespace qra {

struct NestedSum {
  FiniteAlgebra algebra;
  // K-elements first in K's original order with 1_K removed, then
  // L-elements. from_k[1_K] == -1.
  std::vector<int> from_k;
  std::vector<int> from_l;
};

// Throws IdentityNotIrreducible (witnessing operation in the message) or
// SignatureMismatch.
NestedSum nested_sum(const FiniteAlgebra& k, const FiniteAlgebra& l);

struct AdmissibilityReport {
  struct PerOp {
    std::string op;
    bool irreducible = false;
    std::vector<int> witness;
  };
  std::vector<PerOp> per_op;   // irreducibility of 1_K per operation
  bool totally_irreducible = false;
  bool condition4 = false;     // k\1 != 1 and 1/k != 1 for all k != 1
  std::vector<int> condition4_witness;
};

// Reports total irreducibility and the residual condition separately so the
// implication between them can be tested.
AdmissibilityReport admissibility_report(const FiniteAlgebra& k);

struct ConicSumVerdict {
  NestedSum sum;
  bool k_conic = false;
  bool sum_distributive = false;
  // Predicted pentagon {k, k^1, kv1, l0, l1} in sum coordinates when K is
  // not conic and |L| > 1.
  std::optional<SublatticeWitness> n5;
};

// Builds K[L] and checks distributive <=> K conic (for |L| > 1).
ConicSumVerdict conic_sum_check(const FiniteAlgebra& k,
                                const FiniteAlgebra& l);

}  // namespace qra
