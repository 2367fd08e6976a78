#include "qra/fixtures.hpp"

#include <filesystem>

#include "qra/json_io.hpp"
#include "qra/nested_rep.hpp"
#include "qra/nested_sum.hpp"
#include "qra/sugihara.hpp"

namespace qra {
namespace fixtures {

namespace {

FiniteAlgebra build(int n, const std::vector<std::vector<int>>& le_rows,
                    const std::vector<std::vector<int>>& mult_rows,
                    std::vector<int> unary, int one, int zero,
                    std::vector<std::string> names) {
  FiniteAlgebra a;
  a.n = n;
  a.leq.assign(static_cast<size_t>(n) * n, 0);
  a.mult.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.leq[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>(le_rows[i][j]);
      a.mult[static_cast<size_t>(i) * n + j] = mult_rows[i][j];
    }
  a.tilde = unary;
  a.minus = unary;
  a.neg = std::move(unary);
  a.one = one;
  a.zero = zero;
  a.names = std::move(names);
  return validate_algebra(a);
}

}  // namespace

FiniteAlgebra l1() {
  // 0 = 0, 1 = a, 2 = b, 3 = 1; mult is the meet.
  return build(4,
               {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}},
               {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
               {3, 2, 1, 0}, 3, 0, {"0", "a", "b", "1"});
}

FiniteAlgebra k2() {
  // 0 = bot, 1 = a, 2 = 1 = 0, 3 = top; a.a = bot.
  return build(4,
               {{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}},
               {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 2, 3}, {0, 1, 3, 3}},
               {3, 1, 2, 0}, 2, 2, {"bot", "a", "1=0", "top"});
}

FiniteAlgebra fig1_third() {
  // 0 = bot, 1 = a, 2 = 0, 3 = 1, 4 = top; a incomparable to 0 and 1.
  return build(
      5,
      {{1, 1, 1, 1, 1},
       {0, 1, 0, 0, 1},
       {0, 0, 1, 1, 1},
       {0, 0, 0, 1, 1},
       {0, 0, 0, 0, 1}},
      {{0, 0, 0, 0, 0},
       {0, 0, 1, 1, 1},
       {0, 1, 2, 2, 4},
       {0, 1, 2, 3, 4},
       {0, 1, 4, 4, 4}},
      {4, 1, 3, 2, 0}, 3, 2, {"bot", "a", "0", "1", "top"});
}

FiniteAlgebra trivial() {
  return build(1, {{1}}, {{0}}, {0}, 0, 0, {"1"});
}

RepContext ctx_s2() {
  return validate_context(make_point_set(1, BinRel::identity(1)),
                          BinRel::full(1), {0}, {0});
}

RepContext ctx_s3() {
  return validate_context(make_point_set(2, BinRel::identity(2)),
                          BinRel::full(2), {1, 0}, {0, 1});
}

RepContext ctx_l1() {
  return validate_context(make_point_set(2, BinRel::identity(2)),
                          BinRel::identity(2), {0, 1}, {0, 1});
}

RelEmbedding phi_s2() {
  SugiharaChain s2 = sugihara_chain(2);
  std::vector<BinRel> images{BinRel(1), BinRel::full(1)};
  RelEmbedding emb = verify_embedding(s2.algebra, ctx_s2(), images);
  if (!emb.passes()) fail("InternalError", "phi_s2 fixture is broken");
  return emb;
}

RelEmbedding phi_s3() {
  SugiharaChain s3 = sugihara_chain(3);
  std::vector<BinRel> images{BinRel(2), BinRel::identity(2), BinRel::full(2)};
  RelEmbedding emb = verify_embedding(s3.algebra, ctx_s3(), images);
  if (!emb.passes()) fail("InternalError", "phi_s3 fixture is broken");
  return emb;
}

RelEmbedding phi_l1() {
  BinRel ua(2), vb(2);
  ua.set(0, 0);
  vb.set(1, 1);
  std::vector<BinRel> images{BinRel(2), ua, vb, BinRel::identity(2)};
  RelEmbedding emb = verify_embedding(l1(), ctx_l1(), images);
  if (!emb.passes()) fail("InternalError", "phi_l1 fixture is broken");
  return emb;
}

FiniteAlgebra ladder_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  int points = 0;
  switch (n) {
    case 4:
      points = 5;
      covers = {{0, 2}, {1, 2}, {2, 3}, {2, 4}};
      break;
    case 5:
      points = 6;
      covers = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
      break;
    case 6:
      points = 9;
      covers = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4},
                {4, 5}, {4, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}};
      break;
    case 7:
      points = 10;
      covers = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}};
      break;
    default:
      fail("BadTable", "ladder posets are drawn for n = 4..7 only");
  }
  FiniteAlgebra a;
  a.n = points;
  a.leq.assign(static_cast<size_t>(points) * points, 0);
  a.mult.assign(static_cast<size_t>(points) * points, 0);
  for (int i = 0; i < points; ++i) a.leq[static_cast<size_t>(i) * points + i] = 1;
  for (auto [x, y] : covers) a.leq[static_cast<size_t>(x) * points + y] = 1;
  // transitive closure
  for (int k = 0; k < points; ++k)
    for (int i = 0; i < points; ++i)
      for (int j = 0; j < points; ++j)
        if (a.le(i, k) && a.le(k, j)) a.leq[static_cast<size_t>(i) * points + j] = 1;
  return a;
}

std::vector<std::string> seed(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& name, const nlohmann::json& j) {
    std::string path = (fs::path(dir) / name).string();
    save_json(path, j);
    written.push_back(name);
  };

  put("l1.json", algebra_to_json(l1()));
  put("k2.json", algebra_to_json(k2()));
  put("fig1-third.json", algebra_to_json(fig1_third()));
  put("trivial.json", algebra_to_json(trivial()));
  for (int n = 2; n <= 7; ++n)
    put("s" + std::to_string(n) + ".json",
        algebra_to_json(sugihara_chain(n).algebra));

  SugiharaChain s3 = sugihara_chain(3);
  put("k1l1.json", algebra_to_json(nested_sum(s3.algebra, l1()).algebra));
  put("k2l2.json",
      algebra_to_json(nested_sum(k2(), sugihara_chain(2).algebra).algebra));

  put("ctx-s2.json", context_to_json(ctx_s2()));
  put("ctx-s3.json", context_to_json(ctx_s3()));
  put("ctx-l1.json", context_to_json(ctx_l1()));
  put("phi-s2.json", embedding_to_json(1, phi_s2().images));
  put("phi-s3.json", embedding_to_json(2, phi_s3().images));
  put("phi-l1.json", embedding_to_json(2, phi_l1().images));

  {
    NestedContext nctx = build_nested_context(ctx_l1());
    PsiMap psi = build_psi(nctx, l1(), phi_l1());
    put("ctx-s3l1.json", context_to_json(nctx.ctx));
    put("psi-s3l1.json",
        embedding_to_json(nctx.ctx.points.n, psi.images));
  }
  for (int n = 4; n <= 7; ++n) {
    SugiharaRepresentation rep = sugihara_representation(n);
    put("ctx-rep-s" + std::to_string(n) + ".json", context_to_json(rep.ctx));
    put("emb-rep-s" + std::to_string(n) + ".json",
        embedding_to_json(rep.ctx.points.n, rep.embedding.images));
  }
  return written;
}

}  // namespace fixtures
}  // namespace qra
