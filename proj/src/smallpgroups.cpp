#include "ppf/smallpgroups.hpp"

#include <map>
#include <stdexcept>

namespace ppf::sim {

namespace {

using grp::PermutationGroup;

std::shared_ptr<PermutationGroup> product(const PermutationGroup& a,
                                          const PermutationGroup& b) {
  return grp::direct_product(a, b).group;
}

// Generalized quaternion / quaternion-like group of order 4n:
// <a, b | a^(2n) = 1, b^2 = a^n, b a b^-1 = a^-1>, via its regular table.
std::shared_ptr<PermutationGroup> quaternion_group(int two_n) {
  int n = two_n / 2;
  int m = 2 * two_n;
  auto id = [&](int i, int j) { return ((i % two_n + two_n) % two_n) * 2 + j; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < two_n; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < two_n; ++k)
        for (int l = 0; l < 2; ++l) {
          int left = id(i, j), right = id(k, l);
          int r;
          if (j == 0) r = id(i + k, l);
          else if (l == 0) r = id(i - k, 1);
          else r = id(i - k + n, 0);
          table[left][right] = r;
        }
  return grp::group_from_table(table);
}

// C_{2^k} with the generator acting as x -> x^a, extended by C_n.
std::shared_ptr<PermutationGroup> cyclic_twist(int order, int a, int n) {
  auto C = grp::cyclic_group(order);
  std::vector<int> theta(order);
  for (int i = 0; i < order; ++i) theta[i] = static_cast<int>((static_cast<long long>(i) * a) % order);
  return grp::extension_by_automorphism(*C, theta, n).group;
}

std::vector<SmallGroup> build_inventory(int p) {
  std::vector<SmallGroup> inv;
  auto add = [&](const std::string& name, std::shared_ptr<PermutationGroup> g) {
    inv.push_back({name, std::move(g)});
  };
  add("1", grp::cyclic_group(1));
  if (p == 2) {
    add("C2", grp::cyclic_group(2));
    add("C4", grp::cyclic_group(4));
    add("C2^2", grp::klein_four_group());
    add("C8", grp::cyclic_group(8));
    add("C4xC2", product(*grp::cyclic_group(4), *grp::cyclic_group(2)));
    add("C2^3", product(*grp::klein_four_group(), *grp::cyclic_group(2)));
    add("D8", grp::dihedral_group(4));
    add("Q8", quaternion_group(4));
    add("C16", grp::cyclic_group(16));
    add("C8xC2", product(*grp::cyclic_group(8), *grp::cyclic_group(2)));
    add("C4xC4", product(*grp::cyclic_group(4), *grp::cyclic_group(4)));
    add("C4xC2^2", product(*grp::cyclic_group(4), *grp::klein_four_group()));
    add("C2^4", product(*grp::klein_four_group(), *grp::klein_four_group()));
    add("D16", grp::dihedral_group(8));
    add("SD16", cyclic_twist(8, 3, 2));
    add("M16", cyclic_twist(8, 5, 2));
    add("Q16", quaternion_group(8));
    add("D8xC2", product(*grp::dihedral_group(4), *grp::cyclic_group(2)));
    add("Q8xC2", product(*quaternion_group(4), *grp::cyclic_group(2)));
    add("C4:C4", cyclic_twist(4, 3, 4));
    {
      // (C2 x C2) : C4, the order-4 generator swapping the two factors.
      auto V = grp::klein_four_group();
      // klein_four_group elements: BFS order of {(12)(34), (13)(24)}.
      std::vector<int> theta(4);
      grp::Perm a({1, 0, 3, 2}), b({2, 3, 0, 1});
      // Swap automorphism: a <-> b.
      theta[V->index_of(grp::Perm::identity(4))] = V->index_of(grp::Perm::identity(4));
      theta[V->index_of(a)] = V->index_of(b);
      theta[V->index_of(b)] = V->index_of(a);
      theta[V->index_of(a * b)] = V->index_of(a * b);
      add("C2^2:C4", grp::extension_by_automorphism(*V, theta, 4).group);
    }
    {
      // Central product D8 * C4 (identify the central involutions).
      auto D8 = grp::dihedral_group(4);
      auto C4 = grp::cyclic_group(4);
      auto prod = grp::direct_product(*D8, *C4);
      int r = D8->index_of(grp::parse_cycles("(1 2 3 4)")[0]);
      int r2 = D8->mul(r, r);
      int c = C4->index_of(grp::parse_cycles("(1 2 3 4)")[0]);
      int c2 = C4->mul(c, c);
      int z = prod.pair_to_index(r2, c2);
      grp::Subgroup Z = grp::make_subgroup(*prod.group, {z});
      add("D8*C4", grp::quotient_by_normal(*prod.group, Z).group);
    }
  } else if (p == 3) {
    add("C3", grp::cyclic_group(3));
    add("C9", grp::cyclic_group(9));
    add("C3^2", product(*grp::cyclic_group(3), *grp::cyclic_group(3)));
    add("C27", grp::cyclic_group(27));
    add("C9xC3", product(*grp::cyclic_group(9), *grp::cyclic_group(3)));
    add("C3^3", product(*product(*grp::cyclic_group(3), *grp::cyclic_group(3)),
                        *grp::cyclic_group(3)));
    {
      // Extraspecial of exponent 3 (Heisenberg): (C3 x C3) : C3 with the
      // unipotent action x -> x, y -> xy.
      auto A = grp::cyclic_group(3);
      auto B = grp::cyclic_group(3);
      auto prod = grp::direct_product(*A, *B);
      std::vector<int> theta(9);
      for (int i = 0; i < 9; ++i) {
        auto [a, b] = prod.index_to_pair(i);
        theta[i] = prod.pair_to_index((a + b) % 3, b);
      }
      add("3^{1+2}+", grp::extension_by_automorphism(*prod.group, theta, 3).group);
    }
    {
      // Extraspecial of exponent 9: C9 : C3 with x -> x^4.
      auto C9 = grp::cyclic_group(9);
      std::vector<int> theta(9);
      for (int i = 0; i < 9; ++i) theta[i] = (i * 4) % 9;
      add("3^{1+2}-", grp::extension_by_automorphism(*C9, theta, 3).group);
    }
  } else {
    add("C" + std::to_string(p), grp::cyclic_group(p));
    add("C" + std::to_string(p * p), grp::cyclic_group(p * p));
    add("C" + std::to_string(p) + "^2",
        product(*grp::cyclic_group(p), *grp::cyclic_group(p)));
  }
  return inv;
}

} // namespace

int p_group_inventory_bound(int p) {
  if (p == 2) return 16;
  if (p == 3) return 27;
  return p * p;
}

const std::vector<SmallGroup>& p_group_inventory(int p) {
  static std::map<int, std::vector<SmallGroup>> cache;
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  return cache.emplace(p, build_inventory(p)).first->second;
}

} // namespace ppf::sim
