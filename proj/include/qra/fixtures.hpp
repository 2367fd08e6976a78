// The small algebras, contexts and embeddings that recur in tests and on
// the command line: the two diamonds and the five-element example, the base
// representation contexts, and the ladder posets.
#pragma once

#include <string>
#include <vector>

#include "qra/algebra.hpp"
#include "qra/representation.hpp"

namespace qra {
namespace fixtures {

// Four-element diamond 0 < a,b < 1, mult = meet, all negations the Boolean
// complement. Cyclic DqRA, not odd.
FiniteAlgebra l1();

// Four-element diamond bot < a, 1=0 < top with a.a = bot. Odd qRA, not
// conic.
FiniteAlgebra k2();

// Five-element pentagon bot < a < top, bot < 0 < 1 < top; the table rows
// not printed in the source example are forced: bot is absorbing and the
// top row follows from join preservation.
FiniteAlgebra fig1_third();

// One-element algebra {1}.
FiniteAlgebra trivial();

// Base contexts: one point (everything id), two-element antichain with the
// swap automorphism, and the two-block discrete context for the diamond.
RepContext ctx_s2();
RepContext ctx_s3();
RepContext ctx_l1();

// Verified embeddings of S2, S3, L1 into the contexts above.
RelEmbedding phi_s2();
RelEmbedding phi_s3();
RelEmbedding phi_l1();

// Ladder posets used to represent S4..S7. Order-only fixtures: just leq is
// meaningful (the ladders are not lattices).
FiniteAlgebra ladder_poset(int n);

// Writes every fixture (figure algebras, Sugihara chains 2..7, the two
// nested sums, contexts, representations) into dir; returns the file names.
std::vector<std::string> seed(const std::string& dir);

}  // namespace fixtures
}  // namespace qra
