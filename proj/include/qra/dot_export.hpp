// DOT export: Hasse diagrams (cover relation computed from leq, idempotent
// elements filled) and contexts (alpha dashed, beta dotted, E blocks as
// dashed clusters).
#pragma once

#include <string>

#include "qra/algebra.hpp"
#include "qra/representation.hpp"

namespace qra {

std::string algebra_hasse_dot(const FiniteAlgebra& a);
std::string context_dot(const RepContext& ctx);

}  // namespace qra
