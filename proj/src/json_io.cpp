#include "qra/json_io.hpp"

#include <fstream>

namespace qra {

using nlohmann::json;

namespace {

std::vector<uint8_t> bool_matrix(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail("SchemaError", std::string(what) + " must be an n x n 0/1 matrix");
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("SchemaError", std::string(what) + " row has wrong length");
    for (const auto& v : row) {
      int x = v.get<int>();
      if (x != 0 && x != 1)
        fail("SchemaError", std::string(what) + " entries must be 0 or 1");
      out.push_back(static_cast<uint8_t>(x));
    }
  }
  return out;
}

std::vector<int> int_matrix(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail("SchemaError", std::string(what) + " must be an n x n index matrix");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      fail("SchemaError", std::string(what) + " row has wrong length");
    for (const auto& v : row) out.push_back(v.get<int>());
  }
  return out;
}

std::vector<int> int_list(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    fail("SchemaError", std::string(what) + " must be a length-n index list");
  std::vector<int> out;
  out.reserve(n);
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

json matrix_json(const std::vector<uint8_t>& m, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < n; ++j2)
      row.push_back(static_cast<int>(m[static_cast<size_t>(i) * n + j2]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_json(const std::vector<int>& m, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < n; ++j2)
      row.push_back(m[static_cast<size_t>(i) * n + j2]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json algebra_to_json(const FiniteAlgebra& a) {
  json j;
  j["size"] = a.n;
  j["leq"] = matrix_json(a.leq, a.n);
  j["mult"] = matrix_json(a.mult, a.n);
  j["one"] = a.one;
  if (a.zero) j["zero"] = *a.zero;
  if (a.tilde) j["tilde"] = *a.tilde;
  if (a.minus) j["minus"] = *a.minus;
  if (a.neg) j["neg"] = *a.neg;
  if (!a.names.empty()) j["names"] = a.names;
  return j;
}

FiniteAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("size"))
    fail("SchemaError", "algebra JSON needs a size field");
  if (j.contains("meet") || j.contains("join"))
    fail("SchemaError",
         "meet/join tables are always derived from leq; remove them");
  FiniteAlgebra a;
  a.n = j.at("size").get<int>();
  if (a.n <= 0) fail("SchemaError", "size must be positive");
  a.leq = bool_matrix(j.at("leq"), a.n, "leq");
  a.mult = int_matrix(j.at("mult"), a.n, "mult");
  a.one = j.at("one").get<int>();
  if (j.contains("zero")) a.zero = j.at("zero").get<int>();
  if (j.contains("tilde")) a.tilde = int_list(j.at("tilde"), a.n, "tilde");
  if (j.contains("minus")) a.minus = int_list(j.at("minus"), a.n, "minus");
  if (j.contains("neg")) a.neg = int_list(j.at("neg"), a.n, "neg");
  if (j.contains("names")) {
    const auto& names = j.at("names");
    if (!names.is_array() || static_cast<int>(names.size()) != a.n)
      fail("SchemaError", "names must be a length-n string list");
    for (const auto& s : names) a.names.push_back(s.get<std::string>());
  }
  return validate_algebra(a);
}

json relation_to_json(const BinRel& r) {
  json j;
  j["n"] = r.points();
  json ps = json::array();
  for (auto [x, y] : r.pairs()) ps.push_back(json::array({x, y}));
  j["pairs"] = std::move(ps);
  return j;
}

BinRel relation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs"))
    fail("SchemaError", "relation JSON needs n and pairs");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> ps;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2)
      fail("SchemaError", "pairs entries must be [i, j]");
    ps.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return BinRel::from_pairs(n, ps);
}

json context_to_json(const RepContext& ctx) {
  int n = ctx.points.n;
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  std::vector<uint8_t> eq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j2 = 0; j2 < n; ++j2) {
      leq[static_cast<size_t>(i) * n + j2] = ctx.points.leq.at(i, j2);
      eq[static_cast<size_t>(i) * n + j2] = ctx.e.at(i, j2);
    }
  json j;
  j["points"] = n;
  j["leq"] = matrix_json(leq, n);
  j["equiv"] = matrix_json(eq, n);
  j["alpha"] = ctx.alpha;
  j["beta"] = ctx.beta;
  return j;
}

RepContext context_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points"))
    fail("SchemaError", "context JSON needs a points field");
  int n = j.at("points").get<int>();
  if (n <= 0) fail("SchemaError", "points must be positive");
  std::vector<uint8_t> leq = bool_matrix(j.at("leq"), n, "leq");
  std::vector<uint8_t> eq = bool_matrix(j.at("equiv"), n, "equiv");
  BinRel lr(n), er(n);
  for (int i = 0; i < n; ++i)
    for (int j2 = 0; j2 < n; ++j2) {
      if (leq[static_cast<size_t>(i) * n + j2]) lr.set(i, j2);
      if (eq[static_cast<size_t>(i) * n + j2]) er.set(i, j2);
    }
  return validate_context(make_point_set(n, std::move(lr)), std::move(er),
                          int_list(j.at("alpha"), n, "alpha"),
                          int_list(j.at("beta"), n, "beta"));
}

json embedding_to_json(int points, const std::vector<BinRel>& images) {
  json j;
  j["points"] = points;
  json imgs = json::array();
  for (const BinRel& r : images) {
    json ps = json::array();
    for (auto [x, y] : r.pairs()) ps.push_back(json::array({x, y}));
    imgs.push_back(std::move(ps));
  }
  j["images"] = std::move(imgs);
  return j;
}

std::pair<int, std::vector<BinRel>> embedding_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("images"))
    fail("SchemaError", "embedding JSON needs points and images");
  int n = j.at("points").get<int>();
  std::vector<BinRel> images;
  for (const auto& img : j.at("images")) {
    std::vector<std::pair<int, int>> ps;
    for (const auto& p : img) ps.emplace_back(p[0].get<int>(), p[1].get<int>());
    images.push_back(BinRel::from_pairs(n, ps));
  }
  return {n, std::move(images)};
}

json check_to_json(const Check& c) {
  json j;
  switch (c.v) {
    case Verdict::True: j["holds"] = true; break;
    case Verdict::False: j["holds"] = false; break;
    case Verdict::NotApplicable: j["holds"] = "n/a"; break;
  }
  if (c.v == Verdict::False) {
    j["witness"] = c.witness;
    if (!c.op.empty()) j["via"] = c.op;
  }
  return j;
}

json report_to_json(const AxiomReport& rep) {
  json j;
  j["poset"] = check_to_json(rep.poset);
  j["lattice"] = check_to_json(rep.lattice);
  j["monoid"] = check_to_json(rep.monoid);
  j["residuated"] = check_to_json(rep.residuated);
  j["involutive"] = check_to_json(rep.involutive);
  j["In"] = check_to_json(rep.in_axiom);
  j["Dm"] = check_to_json(rep.dm);
  j["Di"] = check_to_json(rep.di);
  j["Dp"] = check_to_json(rep.dp);
  j["distributive"] = check_to_json(rep.distributive);
  j["cyclic"] = check_to_json(rep.cyclic);
  j["odd"] = check_to_json(rep.odd);
  j["commutative"] = check_to_json(rep.commutative);
  j["idempotent"] = check_to_json(rep.idempotent);
  j["conic"] = check_to_json(rep.conic);
  j["qra"] = check_to_json(rep.qra);
  j["dqra"] = check_to_json(rep.dqra);
  return j;
}

json rel_embedding_report_to_json(const RelEmbedding& emb) {
  json j;
  j["passes"] = emb.passes();
  json ops = json::object();
  for (const auto& c : emb.report) {
    json e;
    e["ok"] = c.ok;
    if (!c.ok) e["witness"] = c.witness;
    ops[c.op] = std::move(e);
  }
  j["ops"] = std::move(ops);
  return j;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileError", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("ParseError", path + ": " + e.what());
  }
  return j;
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail("FileError", "cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace qra
