// JSON schemas for algebras, relations, contexts and embeddings.
//
// Algebra:   {"size":n, "leq":[[0|1]], "mult":[[idx]], "one":idx,
//             "zero":idx?, "tilde":[idx]?, "minus":[idx]?, "neg":[idx]?,
//             "names":[str]?}
// Relation:  {"n":k, "pairs":[[i,j],...]}
// Context:   {"points":n, "leq":[[0|1]], "equiv":[[0|1]],
//             "alpha":[idx], "beta":[idx]}
// Embedding: {"points":n, "images":[[[i,j],...], ...]}
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qra/algebra.hpp"
#include "qra/representation.hpp"

namespace qra {

nlohmann::json algebra_to_json(const FiniteAlgebra& a);
// Validates structure; rejects supplied meet/join tables.
FiniteAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json relation_to_json(const BinRel& r);
BinRel relation_from_json(const nlohmann::json& j);

nlohmann::json context_to_json(const RepContext& ctx);
RepContext context_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(int points, const std::vector<BinRel>& images);
std::pair<int, std::vector<BinRel>> embedding_from_json(const nlohmann::json& j);

nlohmann::json check_to_json(const Check& c);
nlohmann::json report_to_json(const AxiomReport& rep);
nlohmann::json rel_embedding_report_to_json(const RelEmbedding& emb);

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace qra
