#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/modblocks.hpp"

#include <numeric>

using namespace ppf;
using mb::AlgElt;

static int augmentation(const mb::GroupAlgebraContext& ctx, const AlgElt& a) {
  int s = 0;
  for (int v : a) s = ctx.F->add(s, v);
  return s;
}

TEST_CASE("splitting field degrees") {
  // degree = multiplicative order of p modulo the p'-part of exp(G)
  CHECK(mb::splitting_degree(*grp::symmetric_group(3), 2) == 2);  // GF(4)
  CHECK(mb::splitting_degree(*grp::symmetric_group(3), 3) == 1);  // GF(3)
  CHECK(mb::splitting_degree(*grp::alternating_group(4), 3) == 1);
  CHECK(mb::splitting_degree(*grp::cyclic_group(3), 2) == 2);
  CHECK(mb::splitting_degree(*grp::cyclic_group(7), 2) == 3);  // GF(8)
}

TEST_CASE("group algebra arithmetic") {
  auto G = grp::symmetric_group(3);
  mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
  AlgElt one = mb::alg_one(ctx);
  CHECK(mb::alg_mul(ctx, one, one) == one);
  // multiplication matches the group convolution on basis elements
  for (int a = 0; a < G->order(); ++a)
    for (int b = 0; b < G->order(); ++b) {
      AlgElt ea = mb::alg_zero(ctx), eb = mb::alg_zero(ctx);
      ea[a] = 1;
      eb[b] = 1;
      AlgElt prod = mb::alg_mul(ctx, ea, eb);
      for (int c = 0; c < G->order(); ++c)
        CHECK(prod[c] == (c == G->mul(a, b) ? 1 : 0));
    }
  // conjugation is an algebra automorphism fixing the center
  AlgElt class_sum = mb::alg_zero(ctx);
  for (int i = 0; i < G->order(); ++i)
    if (G->elem_order(i) == 2) class_sum[i] = 1;
  for (int g = 0; g < G->order(); ++g)
    CHECK(mb::alg_conjugate(ctx, g, class_sum) == class_sum);
}

TEST_CASE("Brauer morphism truncates to the centralizer") {
  auto G = grp::symmetric_group(3);
  mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
  grp::Subgroup P = grp::sylow_subgroup(*G, 2);
  AlgElt all_ones(G->order(), 1);
  CHECK(mb::is_stable_under(ctx, P, all_ones));
  AlgElt br = mb::brauer_morphism(ctx, P, all_ones);
  grp::Subgroup C = grp::centralizer_subgroup(*G, P);
  for (int i = 0; i < G->order(); ++i)
    CHECK(br[i] == (C.contains(i) ? 1 : 0));
  // non-stable elements are rejected
  AlgElt point = mb::alg_zero(ctx);
  point[P.elems[1] == 0 ? 1 : G->order() - 1] = 1;
  bool threw = false;
  try {
    AlgElt single = mb::alg_zero(ctx);
    int moved = -1;
    for (int i = 1; i < G->order() && moved < 0; ++i)
      if (G->conj(P.elems[1], i) != i) moved = i;
    single[moved] = 1;
    mb::brauer_morphism(ctx, P, single);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);
}

static void check_block_system(const mb::GroupAlgebraContext& ctx,
                               const std::vector<AlgElt>& blocks) {
  AlgElt sum = mb::alg_zero(ctx);
  for (const AlgElt& b : blocks) {
    CHECK(mb::alg_mul(ctx, b, b) == b);
    sum = mb::alg_add(ctx, sum, b);
  }
  CHECK(sum == mb::alg_one(ctx));
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      CHECK(mb::alg_is_zero(mb::alg_mul(ctx, blocks[i], blocks[j])));
}

TEST_CASE("block census of kS3, kA4, kC3") {
  // kS3 in characteristic 2 (GF(4)): principal block with defect C2 and one
  // simple of dim 1, plus a defect-zero block with one simple of dim 2.
  {
    auto G = grp::symmetric_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
    CHECK(ctx.F->q() == 4);
    std::vector<AlgElt> blocks = mb::central_idempotents(ctx);
    REQUIRE(blocks.size() == 2);
    check_block_system(ctx, blocks);
    CHECK(augmentation(ctx, blocks[0]) == 1);  // principal sorted first
    CHECK(mb::principal_block_index(ctx, blocks) == 0);
    CHECK(mb::defect_group(ctx, blocks[0]).order() == 2);
    CHECK(mb::defect_group(ctx, blocks[1]).order() == 1);
    std::vector<mb::SimpleModule> s0 = mb::block_simples(ctx, blocks[0]);
    std::vector<mb::SimpleModule> s1 = mb::block_simples(ctx, blocks[1]);
    REQUIRE(s0.size() == 1);
    REQUIRE(s1.size() == 1);
    CHECK(s0[0].dim == 1);
    CHECK(s1[0].dim == 2);
  }
  // kS3 in characteristic 3: a single block with defect C3 and two simples.
  {
    auto G = grp::symmetric_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 3);
    std::vector<AlgElt> blocks = mb::central_idempotents(ctx);
    REQUIRE(blocks.size() == 1);
    CHECK(mb::defect_group(ctx, blocks[0]).order() == 3);
    std::vector<mb::SimpleModule> s = mb::block_simples(ctx, blocks[0]);
    REQUIRE(s.size() == 2);
    CHECK(s[0].dim == 1);
    CHECK(s[1].dim == 1);
    CHECK(!mb::modules_isomorphic(ctx, s[0], s[1]));
  }
  // kA4 in characteristic 3: principal block (defect C3, one simple) and a
  // defect-zero block with one simple of dim 3.
  {
    auto G = grp::alternating_group(4);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 3);
    std::vector<AlgElt> blocks = mb::central_idempotents(ctx);
    REQUIRE(blocks.size() == 2);
    check_block_system(ctx, blocks);
    CHECK(mb::defect_group(ctx, blocks[0]).order() == 3);
    CHECK(mb::defect_group(ctx, blocks[1]).order() == 1);
    CHECK(mb::block_simples(ctx, blocks[0]).size() == 1);
    std::vector<mb::SimpleModule> s1 = mb::block_simples(ctx, blocks[1]);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].dim == 3);
  }
  // kC3 in characteristic 2 (GF(4)): three linear blocks.
  {
    auto G = grp::cyclic_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
    std::vector<AlgElt> blocks = mb::central_idempotents(ctx);
    REQUIRE(blocks.size() == 3);
    check_block_system(ctx, blocks);
    for (const AlgElt& b : blocks) {
      CHECK(mb::defect_group(ctx, b).order() == 1);
      CHECK(mb::block_simples(ctx, b).size() == 1);
    }
  }
}

TEST_CASE("Brauer pairs and fusion of the principal block of kS3") {
  // p = 3: N_G(C3, e)/C_G(C3) has order 2, so the block is not nilpotent.
  {
    auto G = grp::symmetric_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 3);
    AlgElt b = mb::central_idempotents(ctx)[0];
    grp::Subgroup D = mb::defect_group(ctx, b);
    mb::BrauerPairs bp = mb::brauer_pairs_and_fusion(ctx, b, D);
    REQUIRE(bp.subgroups.size() == 2);  // 1 and C3
    CHECK(bp.rep_index.size() == 2);
    for (std::size_t i = 0; i < bp.subgroups.size(); ++i) {
      if (bp.subgroups[i].order() == 3) {
        CHECK(bp.stabilizer[i].order() == 6);
        CHECK(grp::centralizer_subgroup(*G, bp.subgroups[i]).order() == 3);
      }
      // e_P is an idempotent stable under the stabilizer
      CHECK(mb::alg_mul(ctx, bp.e[i], bp.e[i]) == bp.e[i]);
      for (int g : bp.stabilizer[i].elems)
        CHECK(mb::alg_conjugate(ctx, g, bp.e[i]) == bp.e[i]);
    }
  }
  // p = 2: N_G(C2, e) = C_G(C2), the nilpotent case.
  {
    auto G = grp::symmetric_group(3);
    mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
    AlgElt b = mb::central_idempotents(ctx)[0];
    mb::BrauerPairs bp = mb::brauer_pairs_and_fusion(ctx, b, mb::defect_group(ctx, b));
    for (std::size_t i = 0; i < bp.subgroups.size(); ++i)
      CHECK(bp.stabilizer[i].order() ==
            grp::centralizer_subgroup(*G, bp.subgroups[i]).order());
  }
}

TEST_CASE("module twisting and invariant simples") {
  // kC3 over GF(4): the three linear simples; inversion fixes only the
  // trivial one.
  auto G = grp::cyclic_group(3);
  mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
  std::vector<mb::SimpleModule> simples;
  for (const AlgElt& b : mb::central_idempotents(ctx))
    for (mb::SimpleModule& s : mb::block_simples(ctx, b)) simples.push_back(std::move(s));
  REQUIRE(simples.size() == 3);
  std::vector<int> inversion(3);
  for (int i = 0; i < 3; ++i) inversion[i] = G->inv(i);
  CHECK(mb::u_invariant_simple_count(ctx, simples, inversion) == 1);
  std::vector<int> identity(3);
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(mb::u_invariant_simple_count(ctx, simples, identity) == 3);
  // twisting is involutive up to isomorphism
  for (const mb::SimpleModule& s : simples)
    CHECK(mb::modules_isomorphic(
        ctx, mb::twist_module(ctx, mb::twist_module(ctx, s, inversion), inversion), s));
}

TEST_CASE("subgroup algebra contexts") {
  auto G = grp::symmetric_group(3);
  mb::GroupAlgebraContext ctx = mb::make_context(G, 2);
  mb::SubContext sub = mb::sub_context(ctx, grp::sylow_subgroup(*G, 3));
  CHECK(sub.ctx.G->order() == 3);
  CHECK(sub.ctx.F == ctx.F);  // same field, comparable coefficients
  AlgElt a = mb::alg_one(sub.ctx);
  CHECK(mb::restrict_elt(sub, mb::extend_elt(sub, a)) == a);
}
