#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/chartab.hpp"

using namespace ppf;
using ct::Cyc;
using num::Rat;

TEST_CASE("cyclotomic arithmetic") {
  CHECK(ct::euler_phi(1) == 1);
  CHECK(ct::euler_phi(12) == 4);
  CHECK(ct::euler_phi(7) == 6);

  Cyc z5 = Cyc::root_of_unity(5, 1);
  Cyc p = Cyc::from_int(1);
  for (int i = 0; i < 5; ++i) p = p * z5;
  CHECK(p == Cyc::from_int(1));

  // 1 + z3 + z3^2 = 0
  Cyc z3 = Cyc::root_of_unity(3, 1);
  CHECK((Cyc::from_int(1) + z3 + z3 * z3).is_zero());
  CHECK((z3 + z3 * z3).reduced() == Cyc::from_int(-1));

  // conjugation inverts roots of unity
  CHECK(z3.conj() == z3 * z3);
  CHECK((z3 * z3.conj()) == Cyc::from_int(1));

  // lifting preserves values
  CHECK(z3.lifted(6).reduced() == z3.reduced());
}

TEST_CASE("cyclotomic polynomial") {
  CHECK(ct::cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
  CHECK(ct::cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
  CHECK(ct::cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(ct::cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

static void check_orthonormal(const ct::CharacterTable& T) {
  for (int i = 0; i < T.num_chars(); ++i)
    for (int j = 0; j < T.num_chars(); ++j)
      CHECK(ct::inner_product(T, i, j) == Rat(i == j ? 1 : 0));
}

TEST_CASE("character table of S3") {
  auto G = grp::symmetric_group(3);
  ct::CharacterTable T = ct::character_table(*G);
  REQUIRE(T.num_chars() == 3);
  std::vector<int> degrees;
  int sumsq = 0;
  for (int i = 0; i < 3; ++i) {
    degrees.push_back(T.degree(i));
    sumsq += T.degree(i) * T.degree(i);
  }
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 2});
  CHECK(sumsq == 6);
  check_orthonormal(T);
}

TEST_CASE("character table of C3 has cube-root values") {
  auto G = grp::cyclic_group(3);
  ct::CharacterTable T = ct::character_table(*G);
  REQUIRE(T.num_chars() == 3);
  check_orthonormal(T);
  bool found_irrational = false;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c) {
      Cyc v = T.value(i, c).reduced();
      if (!v.is_rational()) {
        found_irrational = true;
        CHECK(v.N == 3);
      }
    }
  CHECK(found_irrational);
}

TEST_CASE("character tables of A4, D8, C4") {
  auto A4 = grp::alternating_group(4);
  ct::CharacterTable a4 = ct::character_table(*A4);
  REQUIRE(a4.num_chars() == 4);
  check_orthonormal(a4);
  std::vector<int> deg;
  for (int i = 0; i < 4; ++i) deg.push_back(a4.degree(i));
  std::sort(deg.begin(), deg.end());
  CHECK(deg == std::vector<int>{1, 1, 1, 3});

  auto D8 = grp::dihedral_group(4);
  ct::CharacterTable d8 = ct::character_table(*D8);
  REQUIRE(d8.num_chars() == 5);
  check_orthonormal(d8);

  auto C4 = grp::cyclic_group(4);
  ct::CharacterTable c4 = ct::character_table(*C4);
  REQUIRE(c4.num_chars() == 4);
  check_orthonormal(c4);
  bool found_i = false;
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 4; ++c)
      if (c4.value(i, c).reduced().N == 4) found_i = true;
  CHECK(found_i);
}

TEST_CASE("fixed space dimensions") {
  auto G = grp::symmetric_group(3);
  ct::CharacterTable T = ct::character_table(*G);
  grp::Subgroup whole = grp::whole_group(*G);
  grp::Subgroup c3 = grp::sylow_subgroup(*G, 3);
  grp::Subgroup c2 = grp::sylow_subgroup(*G, 2);
  int triv = -1, two = -1;
  for (int i = 0; i < 3; ++i) {
    if (T.degree(i) == 2) two = i;
    bool is_triv = true;
    for (std::size_t c = 0; c < T.rows[i].size(); ++c)
      if (!(T.value(i, static_cast<int>(c)) == Cyc::from_int(1))) is_triv = false;
    if (is_triv) triv = i;
  }
  REQUIRE(triv >= 0);
  REQUIRE(two >= 0);
  CHECK(ct::fixed_space_dim(T, triv, whole) == 1);
  CHECK(ct::fixed_space_dim(T, two, whole) == 0);
  // the 2-dim character restricted to C3 is a sum of the two nontrivial ones
  CHECK(ct::fixed_space_dim(T, two, c3) == 0);
  // restricted to C2 it is trivial + sign
  CHECK(ct::fixed_space_dim(T, two, c2) == 1);
  // the element-list overload agrees
  CHECK(ct::fixed_space_dim(T, two, c2.elems) == 1);
}
