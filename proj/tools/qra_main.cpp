// qra: finite-algebra workbench command line.
//
// Subcommands: check, sum, sugihara, dq, embed, rep-sugihara, rep-nested,
// search, export; plus --seed-fixtures DIR. JSON goes to stdout, human
// diagnostics to stderr. Exit codes: 0 ok, 1 a checked property is false
// (witness serialized), 2 input error, 3 budget error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qra/dot_export.hpp"
#include "qra/fixtures.hpp"
#include "qra/json_io.hpp"
#include "qra/model_search.hpp"
#include "qra/nested_rep.hpp"
#include "qra/nested_sum.hpp"
#include "qra/representation.hpp"
#include "qra/sugihara.hpp"

using nlohmann::json;
using namespace qra;

namespace {

size_t upset_cap_from_env() {
  if (const char* s = std::getenv("QRA_UPSET_CAP")) return std::stoull(s);
  return size_t{1} << 20;
}

int search_budget_from_env() {
  if (const char* s = std::getenv("QRA_MAX_SEARCH_SIZE")) return std::stoi(s);
  return 8;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

const Check* report_field(const AxiomReport& rep, const std::string& name) {
  if (name == "qra") return &rep.qra;
  if (name == "dqra") return &rep.dqra;
  if (name == "distributive") return &rep.distributive;
  if (name == "residuated") return &rep.residuated;
  if (name == "conic") return &rep.conic;
  if (name == "odd") return &rep.odd;
  if (name == "cyclic") return &rep.cyclic;
  if (name == "commutative") return &rep.commutative;
  if (name == "idempotent") return &rep.idempotent;
  return nullptr;
}

int cmd_check(const std::string& file,
              const std::vector<std::string>& require) {
  FiniteAlgebra a = algebra_from_json(load_json(file));
  AxiomReport rep = check_axioms(a);
  std::vector<std::string> req =
      require.empty() ? std::vector<std::string>{"dqra"} : require;
  json failed = json::array();
  for (const std::string& name : req) {
    const Check* c = report_field(rep, name);
    if (!c) fail("SchemaError", "unknown property: " + name);
    if (!c->ok()) {
      json f;
      f["property"] = name;
      f["check"] = check_to_json(*c);
      if (name == "dqra" || name == "distributive") {
        ForbiddenSublatticeResult fs = find_forbidden_sublattice(a);
        if (fs.witness) {
          json w;
          w["kind"] =
              fs.witness->kind == SublatticeWitness::Kind::N5 ? "N5" : "M3";
          w["elements"] = std::vector<int>(fs.witness->elems.begin(),
                                           fs.witness->elems.end());
          f["sublattice"] = std::move(w);
        }
      }
      failed.push_back(std::move(f));
    }
  }
  json out;
  out["algebra"] = file;
  out["report"] = report_to_json(rep);
  out["require"] = req;
  out["ok"] = failed.empty();
  if (!failed.empty()) out["failed"] = failed;
  emit(out);
  return failed.empty() ? 0 : 1;
}

int cmd_sum(const std::string& kf, const std::string& lf,
            const std::string& out, const std::string& maps) {
  FiniteAlgebra k = algebra_from_json(load_json(kf));
  FiniteAlgebra l = algebra_from_json(load_json(lf));
  NestedSum s = nested_sum(k, l);
  if (!out.empty()) save_json(out, algebra_to_json(s.algebra));
  if (!maps.empty()) {
    json m;
    m["from_k"] = s.from_k;
    m["from_l"] = s.from_l;
    save_json(maps, m);
  }
  json j;
  j["size"] = s.algebra.n;
  j["report"] = report_to_json(check_axioms(s.algebra));
  if (out.empty()) j["algebra"] = algebra_to_json(s.algebra);
  emit(j);
  return 0;
}

int cmd_sugihara(int n, const std::string& out) {
  SugiharaChain s = sugihara_chain(n);
  if (!out.empty()) save_json(out, algebra_to_json(s.algebra));
  json j;
  j["size"] = n;
  j["one"] = s.algebra.one;
  j["zero"] = *s.algebra.zero;
  if (out.empty()) j["algebra"] = algebra_to_json(s.algebra);
  emit(j);
  return 0;
}

int cmd_dq(const std::string& ctxf, const std::string& gens,
           const std::string& out, size_t cap) {
  RepContext ctx = context_from_json(load_json(ctxf));
  std::vector<BinRel> elements;
  if (!gens.empty()) {
    json g = load_json(gens);
    if (!g.is_object() || !g.contains("relations"))
      fail("SchemaError", "generators file needs a relations list");
    std::vector<BinRel> gen_rels;
    for (const auto& img : g.at("relations")) {
      std::vector<std::pair<int, int>> ps;
      for (const auto& p : img)
        ps.emplace_back(p[0].get<int>(), p[1].get<int>());
      gen_rels.push_back(BinRel::from_pairs(ctx.points.n, ps));
    }
    elements = generate_subalgebra(ctx, std::move(gen_rels));
  } else {
    elements = enumerate_upsets(ctx, cap);
  }
  FiniteAlgebra alg = upset_algebra(ctx, elements);
  json j;
  j["count"] = elements.size();
  j["one_index"] = alg.one;
  j["zero_index"] = *alg.zero;
  j["report"] = report_to_json(check_axioms(alg));
  j["elements"] = json::array();
  for (const BinRel& r : elements) {
    json ps = json::array();
    for (auto [x, y] : r.pairs()) ps.push_back(json::array({x, y}));
    j["elements"].push_back(std::move(ps));
  }
  j["algebra"] = algebra_to_json(alg);
  if (!out.empty()) {
    save_json(out, j);
    json brief;
    brief["count"] = elements.size();
    brief["out"] = out;
    emit(brief);
  } else {
    emit(j);
  }
  return 0;
}

int cmd_embed(const std::string& af, const std::string& ctxf,
              const std::string& imagesf, const std::string& out, size_t cap) {
  FiniteAlgebra a = algebra_from_json(load_json(af));
  RepContext ctx = context_from_json(load_json(ctxf));
  json j;
  int code = 0;
  if (!imagesf.empty()) {
    auto [pts, images] = embedding_from_json(load_json(imagesf));
    if (pts != ctx.points.n)
      fail("DimensionMismatch", "embedding points differ from context");
    RelEmbedding emb = verify_embedding(a, ctx, std::move(images));
    j["mode"] = "verify";
    j["result"] = rel_embedding_report_to_json(emb);
    code = emb.passes() ? 0 : 1;
  } else {
    std::optional<RelEmbedding> emb = find_embedding(a, ctx, std::nullopt, cap);
    j["mode"] = "search";
    j["found"] = emb.has_value();
    if (emb) {
      j["result"] = rel_embedding_report_to_json(*emb);
      j["embedding"] = embedding_to_json(ctx.points.n, emb->images);
      if (!out.empty())
        save_json(out, embedding_to_json(ctx.points.n, emb->images));
    } else {
      j["note"] = "none within pool";
      code = 1;
    }
  }
  emit(j);
  return code;
}

int cmd_rep_sugihara(int n, const std::string& out, const std::string& embf) {
  SugiharaRepresentation rep = sugihara_representation(n);
  if (!out.empty()) save_json(out, context_to_json(rep.ctx));
  if (!embf.empty())
    save_json(embf, embedding_to_json(rep.ctx.points.n, rep.embedding.images));
  json j;
  j["n"] = n;
  j["points"] = rep.ctx.points.n;
  j["result"] = rel_embedding_report_to_json(rep.embedding);
  emit(j);
  return rep.embedding.passes() ? 0 : 1;
}

int cmd_rep_nested(const std::string& lf, const std::string& ctxf,
                   const std::string& phif, int n, const std::string& out,
                   const std::string& embf) {
  FiniteAlgebra l = algebra_from_json(load_json(lf));
  RepContext ctx_l = context_from_json(load_json(ctxf));
  auto [pts, images] = embedding_from_json(load_json(phif));
  if (pts != ctx_l.points.n)
    fail("DimensionMismatch", "embedding points differ from context");
  RelEmbedding phi = verify_embedding(l, ctx_l, std::move(images));
  if (!phi.passes()) fail("EmbeddingInvalid", "phi_L fails verification");
  NestedRepresentation rep = sn_nested_representation(n, l, ctx_l, phi);
  if (!out.empty()) save_json(out, context_to_json(rep.ctx));
  if (!embf.empty())
    save_json(embf, embedding_to_json(rep.ctx.points.n, rep.embedding.images));
  json j;
  j["n"] = n;
  j["sum_size"] = rep.sum.algebra.n;
  j["points"] = rep.ctx.points.n;
  j["result"] = rel_embedding_report_to_json(rep.embedding);
  emit(j);
  return rep.embedding.passes() ? 0 : 1;
}

int cmd_search(int size, const std::vector<std::string>& cons,
               std::optional<size_t> limit, int threads, int max_size,
               const std::string& outf) {
  SearchSpec spec;
  spec.size = size;
  spec.threads = threads;
  spec.max_exhaustive_size = max_size;
  spec.limit = limit;
  for (const std::string& c : cons) {
    auto parsed = constraint_from_string(c);
    if (!parsed) fail("SchemaError", "unknown constraint: " + c);
    spec.constraints.insert(*parsed);
  }
  ModelSet ms = enumerate_models(spec);

  json summary;
  summary["summary"] = {{"size", size},
                        {"constraints", cons},
                        {"count", ms.models.size()},
                        {"exhaustive", ms.exhaustive},
                        {"wall_ms", ms.wall_seconds * 1000.0}};
  if (!outf.empty()) {
    std::ofstream o(outf);
    if (!o) fail("FileError", "cannot write " + outf);
    for (const FoundModel& m : ms.models)
      o << algebra_to_json(m.algebra).dump() << "\n";
    o << summary.dump() << "\n";
  } else {
    for (const FoundModel& m : ms.models)
      std::cout << algebra_to_json(m.algebra).dump() << "\n";
  }
  emit(summary);
  return 0;
}

int cmd_export(const std::string& file, const std::string& out) {
  json j = load_json(file);
  std::string dot;
  if (j.contains("size"))
    dot = algebra_hasse_dot(algebra_from_json(j));
  else if (j.contains("points"))
    dot = context_dot(context_from_json(j));
  else
    fail("SchemaError", "expected an algebra or a context JSON file");
  if (!out.empty()) {
    std::ofstream o(out);
    if (!o) fail("FileError", "cannot write " + out);
    o << dot;
    std::cerr << "wrote " << out << "\n";
  } else {
    std::cout << dot;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench for quasi relation algebras"};
  app.require_subcommand(0, 1);

  std::string seed_dir;
  app.add_option("--seed-fixtures", seed_dir,
                 "write all bundled algebras, contexts and embeddings to DIR");

  auto* check =
      app.add_subcommand("check", "validate and classify an algebra");
  std::string check_file;
  std::vector<std::string> check_require;
  check->add_option("algebra", check_file)->required();
  check->add_option("--require", check_require,
                    "property that must hold (repeatable; default dqra)");

  auto* sum = app.add_subcommand("sum", "nested sum K[L]");
  std::string sum_k, sum_l, sum_out, sum_maps;
  sum->add_option("K", sum_k)->required();
  sum->add_option("L", sum_l)->required();
  sum->add_option("-o,--out", sum_out);
  sum->add_option("--maps", sum_maps);

  auto* sug = app.add_subcommand("sugihara", "build the Sugihara chain S_n");
  int sug_n = 0;
  std::string sug_out;
  sug->add_option("n", sug_n)->required();
  sug->add_option("-o,--out", sug_out);

  auto* dq = app.add_subcommand("dq", "build Dq(E) from a context");
  std::string dq_ctx, dq_gens, dq_out;
  dq->add_option("context", dq_ctx)->required();
  dq->add_flag("--enumerate", "enumerate the full Up(E) (default)");
  dq->add_option("--generators", dq_gens,
                 "JSON with a relations list; closes under the operations");
  dq->add_option("-o,--out", dq_out);

  auto* embed = app.add_subcommand("embed", "verify or search an embedding");
  std::string em_a, em_ctx, em_imgs, em_out;
  embed->add_option("algebra", em_a)->required();
  embed->add_option("context", em_ctx)->required();
  embed->add_option("--images", em_imgs,
                    "verify these images instead of searching");
  embed->add_option("-o,--out", em_out);

  auto* rep_s =
      app.add_subcommand("rep-sugihara", "finite representation of S_n");
  int rep_n = 0;
  std::string rep_out, rep_emb;
  rep_s->add_option("n", rep_n)->required();
  rep_s->add_option("-o,--out", rep_out);
  rep_s->add_option("--embedding", rep_emb);

  auto* rep_nested =
      app.add_subcommand("rep-nested", "representation of S_n[L]");
  std::string rn_l, rn_ctx, rn_phi, rn_out, rn_emb;
  int rn_n = 3;
  rep_nested->add_option("L", rn_l)->required();
  rep_nested->add_option("ctxL", rn_ctx)->required();
  rep_nested->add_option("phiL", rn_phi)->required();
  rep_nested->add_option("--n", rn_n, "odd outer chain size (default 3)");
  rep_nested->add_option("-o,--out", rn_out);
  rep_nested->add_option("--embedding", rn_emb);

  auto* search = app.add_subcommand("search", "bounded model enumeration");
  int se_size = 0, se_threads = 1;
  int se_max = search_budget_from_env();
  std::vector<std::string> se_cons;
  std::string se_out;
  size_t se_limit_raw = 0;
  search->add_option("--size", se_size)->required();
  search->add_option("--constraint", se_cons,
                     "qra|dqra|conic|odd|cyclic|commutative|idempotent|"
                     "tot-irr-one|chain (repeatable)");
  auto* lim_opt = search->add_option("--limit", se_limit_raw);
  search->add_option("--threads", se_threads);
  search->add_option("--max-size", se_max, "exhaustive budget override");
  search->add_option("--out", se_out, "JSON-lines output file");

  auto* exp = app.add_subcommand("export", "DOT export (Hasse or context)");
  std::string ex_in, ex_out;
  exp->add_option("input", ex_in)->required();
  exp->add_option("-o,--out", ex_out);
  exp->add_flag("--dot", "DOT output (the only supported format)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_dir.empty()) {
      std::vector<std::string> files = fixtures::seed(seed_dir);
      json j;
      j["dir"] = seed_dir;
      j["files"] = files;
      emit(j);
      return 0;
    }
    if (*check) return cmd_check(check_file, check_require);
    if (*sum) return cmd_sum(sum_k, sum_l, sum_out, sum_maps);
    if (*sug) return cmd_sugihara(sug_n, sug_out);
    if (*dq) return cmd_dq(dq_ctx, dq_gens, dq_out, upset_cap_from_env());
    if (*embed)
      return cmd_embed(em_a, em_ctx, em_imgs, em_out, upset_cap_from_env());
    if (*rep_s) return cmd_rep_sugihara(rep_n, rep_out, rep_emb);
    if (*rep_nested)
      return cmd_rep_nested(rn_l, rn_ctx, rn_phi, rn_n, rn_out, rn_emb);
    if (*search) {
      std::optional<size_t> se_limit;
      if (lim_opt->count()) se_limit = se_limit_raw;
      return cmd_search(se_size, se_cons, se_limit, se_threads, se_max,
                        se_out);
    }
    if (*exp) return cmd_export(ex_in, ex_out);
    std::cerr << app.help() << "\n";
    return 2;
  } catch (const Error& e) {
    json j;
    j["error"] = e.code();
    j["message"] = e.what();
    if (!e.witness().empty()) j["witness"] = e.witness();
    emit(j);
    std::cerr << e.what() << "\n";
    return e.cls() == ErrorClass::Budget ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
