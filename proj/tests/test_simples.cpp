#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/simples.hpp"

using namespace ppf;
using num::Rat;

TEST_CASE("label enumeration for small bounds") {
  // p = 2, |L| <= 4: (1,1), (C2,1), (C4,1), (C2^2,1), (C2^2, 3-cycle).
  std::vector<sim::DDeltaPair> lus = sim::enumerate_ddelta(2, 4);
  REQUIRE(lus.size() == 5);
  CHECK(lus[0].l_name == "1");
  CHECK(lus[0].u_order == 1);
  CHECK(lus[1].l_name == "C2");
  CHECK(lus[2].l_name == "C4");
  CHECK(lus[3].l_name == "C2^2");
  CHECK(lus[3].u_order == 1);
  CHECK(lus[4].l_name == "C2^2");
  CHECK(lus[4].u_order == 3);

  // p = 3, |L| <= 3: (1,1), (C3,1), (C3,inv).
  std::vector<sim::DDeltaPair> lus3 = sim::enumerate_ddelta(3, 3);
  REQUIRE(lus3.size() == 3);
  CHECK(lus3[1].l_name == "C3");
  CHECK(lus3[1].u_order == 1);
  CHECK(lus3[2].u_order == 2);

  // smaller bounds give prefixes of larger ones
  std::vector<sim::DDeltaPair> small = sim::enumerate_ddelta(2, 2);
  REQUIRE(small.size() == 2);
  for (std::size_t i = 0; i < small.size(); ++i) {
    CHECK(small[i].l_name == lus[i].l_name);
    CHECK(small[i].u_order == lus[i].u_order);
  }
}

TEST_CASE("outer automorphism group orders of labels") {
  std::vector<sim::DDeltaPair> lus = sim::enumerate_ddelta(2, 4);
  CHECK(lus[0].out.order() == 1);  // Out(1,1)
  CHECK(lus[1].out.order() == 1);  // Out(C2,1)
  CHECK(lus[2].out.order() == 2);  // Out(C4,1) = Aut(C4)
  CHECK(lus[3].out.order() == 6);  // Out(C2^2,1) = GL(2,2)
  CHECK(lus[4].out.order() == 1);  // Out(C2^2, 3-cycle)
  std::vector<sim::DDeltaPair> lus3 = sim::enumerate_ddelta(3, 3);
  CHECK(lus3[1].out.order() == 2);  // Out(C3,1) = Aut(C3)
  CHECK(lus3[2].out.order() == 1);  // inversion becomes inner in L<u>
  // the character table lives on the regular model of Out
  CHECK(lus[3].table.num_chars() == 3);  // S3 has 3 irreducibles
}

TEST_CASE("representable decomposition of S3") {
  auto S3 = grp::symmetric_group(3);
  sim::FunctorDecomposition d3 = sim::decompose_representable(*S3, 3);
  CHECK(d3.multiplicity == std::vector<int>{2, 0, 1, 1});
  sim::FunctorDecomposition d2 = sim::decompose_representable(*S3, 2);
  REQUIRE(d2.multiplicity.size() == 2);
  // m_{1,1,F} counts the p'-classes of G
  CHECK(d2.multiplicity[0] == 2);
}

TEST_CASE("sum of squared multiplicities counts diagonal classes") {
  for (int p : {2, 3}) {
    for (auto G : {grp::cyclic_group(2), grp::cyclic_group(3), grp::symmetric_group(3)}) {
      sim::FunctorDecomposition d = sim::decompose_representable(*G, p);
      long long total = 0;
      for (int m : d.multiplicity) total += static_cast<long long>(m) * m;
      CHECK(total == static_cast<long long>(pp::diagonal_pair_classes(G, G, p).size()));
    }
  }
}

TEST_CASE("finiteness bounds for tiny defect groups") {
  CHECK(sim::finiteness_bound(*grp::cyclic_group(1)) == 2);
  CHECK(sim::finiteness_bound(*grp::cyclic_group(2)) == 16);
  CHECK(sim::finiteness_bound(*grp::cyclic_group(3)) == 72);
}

TEST_CASE("endomorphism algebra of a label matches the Out group algebra") {
  // compose on the basis idempotents reproduces the multiplication of
  // Out(L,u), scaled by 1/|Z(L<u>)|.
  for (auto [p, bound] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}}) {
    for (const sim::DDeltaPair& lu : sim::enumerate_ddelta(p, bound)) {
      sim::EluAlgebra e = sim::elu_algebra(lu, p);
      REQUIRE(e.basis_class.size() == static_cast<std::size_t>(lu.out.order()));
      Rat scale(1, grp::center(*lu.pair.E).order());
      for (int a = 0; a < lu.out.order(); ++a)
        for (int b = 0; b < lu.out.order(); ++b) {
          sp::SpeciesFTD fa = sp::indicator_ftd(e.idx, e.basis_class[a]);
          sp::SpeciesFTD fb = sp::indicator_ftd(e.idx, e.basis_class[b]);
          sp::SpeciesFTD expected =
              scale * sp::indicator_ftd(e.idx, e.basis_class[lu.out.compose(a, b)]);
          CHECK(sp::compose(fa, fb, e.idx) == expected);
        }
    }
  }
}

TEST_CASE("simple dimension evaluation") {
  auto S3 = grp::symmetric_group(3);
  std::vector<sim::DDeltaPair> lus = sim::enumerate_ddelta(3, 3);
  // dim S_{1,1,F}(S3) at p=3 counts the p'-classes: {1}, {transpositions}
  CHECK(sim::eval_simple_dim(*S3, 3, lus[0], 0) == 2);
  // labels not below any pair of G give dimension zero
  auto C2 = grp::cyclic_group(2);
  CHECK(sim::eval_simple_dim(*C2, 3, lus[1], 0) == 0);
}
