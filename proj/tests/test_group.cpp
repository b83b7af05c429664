#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppf/group.hpp"
#include "ppf/iso.hpp"

using namespace ppf::grp;

TEST_CASE("cycle parsing") {
  std::vector<Perm> gens = parse_cycles("(1 2 3)(4 5), (1 2)");
  CHECK(gens.size() == 2);
  CHECK(gens[0].degree() == 5);
  CHECK(gens[0](0) == 1);
  CHECK(gens[0](3) == 4);
  CHECK(gens[0].order() == 6);
  CHECK(to_cycle_string(gens[0]) == "(1 2 3)(4 5)");
  CHECK(parse_cycles("(1 2 3)")[0].order() == 3);
}

TEST_CASE("constructors and basic invariants") {
  CHECK(cyclic_group(6)->order() == 6);
  CHECK(symmetric_group(4)->order() == 24);
  CHECK(alternating_group(4)->order() == 12);
  CHECK(dihedral_group(4)->order() == 8);
  CHECK(klein_four_group()->order() == 4);
  CHECK(cyclic_group(6)->is_abelian());
  CHECK(!symmetric_group(3)->is_abelian());
  CHECK(symmetric_group(3)->exponent() == 6);
  CHECK(dihedral_group(4)->exponent() == 4);
}

TEST_CASE("multiplication table consistency on S3") {
  auto G = symmetric_group(3);
  for (int a = 0; a < G->order(); ++a) {
    CHECK(G->mul(a, G->inv(a)) == 0);
    CHECK(G->mul(0, a) == a);
    for (int b = 0; b < G->order(); ++b) {
      // index arithmetic matches permutation arithmetic
      CHECK(G->elem(G->mul(a, b)) == G->elem(a) * G->elem(b));
      CHECK(G->conj(a, b) == G->index_of(G->elem(a) * G->elem(b) * G->elem(a).inverse()));
    }
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(symmetric_group(3)->conjugacy_classes().size() == 3);
  CHECK(symmetric_group(4)->conjugacy_classes().size() == 5);
  CHECK(alternating_group(4)->conjugacy_classes().size() == 4);
  CHECK(dihedral_group(4)->conjugacy_classes().size() == 5);
  auto G = symmetric_group(4);
  for (const auto& cls : G->conjugacy_classes())
    for (int m : cls.members) CHECK(G->class_of(m) == G->class_of(cls.rep));
}

TEST_CASE("p-decomposition") {
  auto G = cyclic_group(6);
  int g = -1;
  for (int i = 0; i < 6; ++i)
    if (G->elem_order(i) == 6) g = i;
  REQUIRE(g >= 0);
  auto [p_part, p_prime_part] = G->p_decomposition(g, 2);
  CHECK(G->elem_order(p_part) == 2);
  CHECK(G->elem_order(p_prime_part) == 3);
  CHECK(G->mul(p_part, p_prime_part) == g);
  CHECK(G->is_p_prime_element(p_prime_part, 2));
  CHECK(!G->is_p_prime_element(g, 2));
}

TEST_CASE("subgroup lattice sizes (oracle: hand counts)") {
  // S3: 1, three C2, C3, S3.
  CHECK(all_subgroups(*symmetric_group(3)).size() == 6);
  // D8: 1, center, four more C2, two C2^2, C4, D8.
  CHECK(all_subgroups(*dihedral_group(4)).size() == 10);
  // A4: 1, three C2, V4, four C3, A4.
  CHECK(all_subgroups(*alternating_group(4)).size() == 10);
  // V4: 1, three C2, V4.
  CHECK(all_subgroups(*klein_four_group()).size() == 5);
}

TEST_CASE("sylow and p-subgroup classes") {
  CHECK(sylow_subgroup(*symmetric_group(3), 2).order() == 2);
  CHECK(sylow_subgroup(*symmetric_group(3), 3).order() == 3);
  CHECK(sylow_subgroup(*alternating_group(4), 2).order() == 4);
  CHECK(sylow_subgroup(*symmetric_group(4), 2).order() == 8);
  CHECK(p_subgroup_classes(*symmetric_group(3), 2).size() == 2);   // 1, C2
  CHECK(p_subgroup_classes(*alternating_group(4), 2).size() == 3); // 1, C2, V4
  CHECK(p_subgroup_classes(*symmetric_group(3), 5).size() == 1);   // 1 only
}

TEST_CASE("centralizer and normalizer") {
  auto G = symmetric_group(3);
  Subgroup C3 = sylow_subgroup(*G, 3);
  CHECK(centralizer_subgroup(*G, C3).order() == 3);
  CHECK(normalizer(*G, C3).order() == 6);
  Subgroup C2 = sylow_subgroup(*G, 2);
  CHECK(centralizer_subgroup(*G, C2).order() == 2);
  CHECK(normalizer(*G, C2).order() == 2);
  CHECK(center(*symmetric_group(3)).order() == 1);
  CHECK(center(*dihedral_group(4)).order() == 2);
}

TEST_CASE("subgroup conjugacy and intersection") {
  auto G = symmetric_group(4);
  std::vector<Subgroup> all = all_subgroups(*G);
  int transpositions = 0;
  for (const Subgroup& S : all)
    if (S.order() == 2 && G->elem(S.elems[1]).img != std::vector<int>{1, 0, 3, 2} &&
        true)
      ++transpositions;
  // there are 6 transpositions and 3 double transpositions: 9 subgroups of order 2
  int order2 = 0;
  for (const Subgroup& S : all)
    if (S.order() == 2) ++order2;
  CHECK(order2 == 9);
  Subgroup A = sylow_subgroup(*G, 2);
  int w = -1;
  for (const Subgroup& S : all)
    if (S.order() == 8) CHECK(subgroups_conjugate(A, S, &w));
  Subgroup s3 = make_subgroup(*G, {G->index_of(parse_cycles("(1 2 3)", 4)[0]),
                                   G->index_of(parse_cycles("(1 2)", 4)[0])});
  CHECK(s3.order() == 6);
  CHECK(intersect(A, s3).order() == 2);
}

TEST_CASE("quotient and extension constructions") {
  auto S3 = symmetric_group(3);
  Subgroup C3 = sylow_subgroup(*S3, 3);
  QuotientResult q = quotient_by_normal(*S3, C3);
  CHECK(q.group->order() == 2);
  CHECK(q.project(0) == 0);

  // C3 extended by inversion is S3
  auto c3 = cyclic_group(3);
  std::vector<int> inv_map(3);
  for (int i = 0; i < 3; ++i) inv_map[i] = c3->inv(i);
  SemidirectResult ext = extension_by_automorphism(*c3, inv_map, 2);
  CHECK(ext.group->order() == 6);
  CHECK(groups_isomorphic(*ext.group, *symmetric_group(3)));
  CHECK(!groups_isomorphic(*ext.group, *cyclic_group(6)));
}

TEST_CASE("subgroup_as_group keeps parent degree and structure") {
  auto A4 = alternating_group(4);
  Subgroup V = sylow_subgroup(*A4, 2);
  auto Vg = subgroup_as_group(V);
  CHECK(Vg->order() == 4);
  CHECK(Vg->degree() == A4->degree());
  CHECK(groups_isomorphic(*Vg, *klein_four_group()));
  CHECK(!groups_isomorphic(*Vg, *cyclic_group(4)));
}

TEST_CASE("isomorphisms and automorphisms") {
  auto S3 = symmetric_group(3);
  CHECK(automorphisms(whole_group(*S3)).size() == 6);
  CHECK(automorphisms(whole_group(*cyclic_group(3))).size() == 2);
  CHECK(automorphisms(whole_group(*klein_four_group())).size() == 6);
  CHECK(automorphisms(whole_group(*cyclic_group(8))).size() == 4);
  auto C3g = cyclic_group(3);
  Subgroup a = sylow_subgroup(*S3, 3);
  Subgroup b = whole_group(*C3g);
  CHECK(are_isomorphic(a, b));
  std::vector<Iso> isos = isomorphisms(a, b);
  CHECK(isos.size() == 2);
  for (const Iso& f : isos) {
    CHECK(compose_iso(f, f.inverse()).img == identity_iso(b).img);
    // homomorphism property
    for (std::size_t i = 0; i < a.elems.size(); ++i)
      for (std::size_t j = 0; j < a.elems.size(); ++j) {
        int x = a.elems[i], y = a.elems[j];
        CHECK(f.apply(S3->mul(x, y)) ==
              b.parent->mul(f.apply(x), f.apply(y)));
      }
  }
}
