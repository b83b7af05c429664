#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/pairs.hpp"

using namespace ppf;
using grp::Subgroup;

TEST_CASE("pair class counts (oracle: hand enumeration)") {
  // C2, p=2: (1,1) and (C2,1).
  CHECK(pp::enumerate_pairs(*grp::cyclic_group(2), 2).size() == 2);
  // C3, p=3: (1,1) and (C3,1).
  CHECK(pp::enumerate_pairs(*grp::cyclic_group(3), 3).size() == 2);
  // C3, p=2: P = 1 with s one of the three central p'-elements.
  CHECK(pp::enumerate_pairs(*grp::cyclic_group(3), 2).size() == 3);
  // S3, p=2: (1,1), (1,3-cycle), (C2,1).
  CHECK(pp::enumerate_pairs(*grp::symmetric_group(3), 2).size() == 3);
  // S3, p=3: (1,1), (1,transposition), (C3,1), (C3,transposition).
  CHECK(pp::enumerate_pairs(*grp::symmetric_group(3), 3).size() == 4);
}

TEST_CASE("class_of finds every conjugate") {
  auto G = grp::symmetric_group(3);
  pp::PairIndex idx = pp::enumerate_pairs(*G, 2);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const pp::Pair& pr = idx.reps[c];
    CHECK(idx.class_of(pr.P, pr.s) == static_cast<int>(c));
    for (int g = 0; g < G->order(); ++g)
      CHECK(idx.class_of(grp::conjugate_subgroup(pr.P, g), G->conj(g, pr.s)) ==
            static_cast<int>(c));
  }
}

TEST_CASE("pair conjugacy is symmetric and witnessed") {
  auto G = grp::symmetric_group(3);
  pp::PairIndex idx = pp::enumerate_pairs(*G, 2);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) {
      int w = -1;
      bool conj = pp::pairs_conjugate(*G, idx.reps[a].P, idx.reps[a].s,
                                      idx.reps[b].P, idx.reps[b].s, &w);
      CHECK(conj == (a == b));
      if (conj) {
        CHECK(grp::conjugate_subgroup(idx.reps[a].P, w).elems == idx.reps[b].P.elems);
        CHECK(G->conj(w, idx.reps[a].s) == idx.reps[b].s);
      }
    }
}

TEST_CASE("reduction produces reduced pairs with a twisting iso") {
  for (int p : {2, 3}) {
    auto G = grp::symmetric_group(3);
    for (const pp::Pair& pr : pp::enumerate_pairs(*G, p).reps) {
      pp::AbstractPair red = pp::reduce_pair(*G, pr.P, pr.s);
      CHECK(pp::is_reduced(red));
      CHECK(pp::has_twisting_iso(*G, pr.P, pr.s, red));
    }
  }
  // a non-trivially reduced case: P = 1, s of order 3: reduction is (1, 1)
  auto C3 = grp::cyclic_group(3);
  pp::AbstractPair red = pp::reduce_pair(*C3, grp::trivial_subgroup(*C3), 1);
  CHECK(red.L.order() == 1);
  CHECK(red.u == 0);
}

TEST_CASE("outer automorphism groups of pairs") {
  // (C3, 1): Out = Aut(C3) = C2.
  auto C3 = grp::cyclic_group(3);
  pp::AbstractPair triv{std::make_shared<grp::PermutationGroup>(*C3),
                        grp::whole_group(*C3), 0};
  triv.L.parent = triv.E.get();
  pp::OutLu out = pp::out_lu(triv);
  CHECK(out.order() == 2);
  CHECK(out.aut_u.size() == 2);
  for (int a = 0; a < out.order(); ++a) {
    CHECK(out.compose(a, out.invert(a)) == out.identity);
    CHECK(out.from_model[out.to_model[a]] == a);
  }
  // (C3, inv): the inversion becomes inner in E = S3, so Out is trivial.
  auto S3 = grp::symmetric_group(3);
  int u = -1;
  for (int i = 0; i < 6 && u < 0; ++i)
    if (S3->elem_order(i) == 2) u = i;
  pp::AbstractPair inv{std::make_shared<grp::PermutationGroup>(*S3),
                       grp::sylow_subgroup(*S3, 3), u};
  inv.L.parent = inv.E.get();
  CHECK(pp::out_lu(inv).order() == 1);
}

TEST_CASE("diagonal pair classes of small products") {
  // C2 x C2, p = 2: Delta(1) and Delta(C2), with trivial p'-part.
  pp::DiagIndex d22 = pp::diagonal_pair_classes(grp::cyclic_group(2), grp::cyclic_group(2), 2);
  CHECK(d22.size() == 2);
  // every class is a genuine twisted diagonal with matching projections
  for (const pp::DiagonalPairClass& c : d22.classes) {
    CHECK(c.U.order() == c.W.order());
    CHECK(c.Delta.order() == c.U.order());
    CHECK(d22.class_of(c.Delta, c.st) >= 0);
  }
  // S3 x S3, p = 3 has the six classes used by the dimension identity.
  pp::DiagIndex d33 = pp::diagonal_pair_classes(grp::symmetric_group(3), grp::symmetric_group(3), 3);
  CHECK(d33.size() == 6);
}

TEST_CASE("gamma triples compose to gamma") {
  auto S3 = grp::symmetric_group(3);
  pp::DiagIndex d = pp::diagonal_pair_classes(S3, S3, 3);
  for (const pp::DiagonalPairClass& c : d.classes) {
    for (const pp::GammaTriple& t : pp::gamma_triples(*S3, 3, c.U, c.gamma, c.W)) {
      CHECK(t.V.order() == c.U.order());
      grp::Iso comp = grp::compose_iso(t.alpha, t.beta);
      CHECK(comp.img == c.gamma.img);
    }
  }
}

TEST_CASE("pair_isomorphic respects reduction classes") {
  auto S3 = grp::symmetric_group(3);
  pp::PairIndex idx = pp::enumerate_pairs(*S3, 3);
  // (C3, 1) and (C3, transposition) reduce to non-isomorphic pairs
  std::vector<pp::AbstractPair> reds;
  for (const pp::Pair& pr : idx.reps)
    if (pr.P.order() == 3) reds.push_back(pp::reduce_pair(*S3, pr.P, pr.s));
  REQUIRE(reds.size() == 2);
  CHECK(!pp::pair_isomorphic(reds[0], reds[1]));
  CHECK(pp::pair_isomorphic(reds[0], reds[0]));
}
