#pragma once

#include "ppf/perm.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace ppf::grp {

// A finite permutation group with a fully enumerated element list.  Elements
// are identified by their index in `elems`; index 0 is the identity and the
// ordering is the BFS discovery order from the generators, which makes it
// deterministic for a fixed generator list.
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const Perm& elem(int i) const { return elems_[i]; }

  int index_of(const Perm& p) const;   // -1 if not a member
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  int mul(int a, int b) const { return mul_table_ ? (*mul_table_)[a * order() + b] : index_of(elems_[a] * elems_[b]); }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
  int pow(int a, long long e) const;
  int elem_order(int a) const { return orders_[a]; }

  // Splits a into its p-part and p'-part (commuting, both powers of a).
  std::pair<int, int> p_decomposition(int a, int p) const;
  bool is_p_element(int a, int p) const;
  bool is_p_prime_element(int a, int p) const;

  int exponent() const;
  bool is_abelian() const;

  // Conjugacy classes.  Each class is a sorted list of element indices; the
  // representative is the element whose image array is lexicographically
  // smallest.  Classes are sorted by representative permutation.
  struct ConjClass {
    int rep;
    std::vector<int> members;
  };
  const std::vector<ConjClass>& conjugacy_classes() const;
  int class_of(int a) const;  // index into conjugacy_classes()

private:
  void build();

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Perm> elems_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<int> inv_;
  std::vector<int> orders_;
  std::optional<std::vector<int>> mul_table_;

  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;
};

// A subgroup of a parent group, stored as a sorted list of element indices.
struct Subgroup {
  const PermutationGroup* parent = nullptr;
  std::vector<int> elems;  // sorted parent indices, elems[0] == 0 (identity)
  std::vector<int> gens;   // a small generating set (parent indices)

  int order() const { return static_cast<int>(elems.size()); }
  bool contains(int e) const;
  bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
  bool operator<(const Subgroup& o) const { return elems < o.elems; }
};

Subgroup make_subgroup(const PermutationGroup& G, std::vector<int> generator_ids);
Subgroup whole_group(const PermutationGroup& G);
Subgroup trivial_subgroup(const PermutationGroup& G);
Subgroup conjugate_subgroup(const Subgroup& S, int g);
bool subgroups_conjugate(const Subgroup& A, const Subgroup& B, int* witness = nullptr);
bool is_subset(const std::vector<int>& small, const std::vector<int>& big);

// Builds a standalone PermutationGroup from a subgroup, acting with the
// parent's degree, together with the element-index correspondence
// (position i of the subgroup element list -> index in the new group).
std::shared_ptr<PermutationGroup> subgroup_as_group(const Subgroup& S);

Subgroup centralizer(const PermutationGroup& G, const std::vector<int>& of_elems);
Subgroup centralizer_subgroup(const PermutationGroup& G, const Subgroup& S);
Subgroup centralizer_elem(const PermutationGroup& G, int s);
Subgroup normalizer(const PermutationGroup& G, const Subgroup& S);
// N_G(P, s) = { g : gPg^-1 = P and g s g^-1 = s-conjugate... } — here the
// strict stabilizer { g in N_G(P) : g s g^-1 = s } is centralizer-joined;
// pair_normalizer returns { g : gPg^-1 = P, gsg^-1 = s }.
Subgroup pair_normalizer(const PermutationGroup& G, const Subgroup& P, int s);
Subgroup closure(const PermutationGroup& G, std::vector<int> seed_elems);
Subgroup intersect(const Subgroup& A, const Subgroup& B);

// Center as a subgroup.
Subgroup center(const PermutationGroup& G);

// Normality test: is N normal in H (both subgroups of the same parent)?
bool is_normal_in(const Subgroup& N, const Subgroup& H);

// All subgroups of G up to conjugacy (representatives) or in full.
// Intended for small groups only (|G| <= ~200 for the full lattice).
std::vector<Subgroup> all_subgroups(const PermutationGroup& G);

// A Sylow p-subgroup of G.
Subgroup sylow_subgroup(const PermutationGroup& G, int p);

// Representatives of conjugacy classes of p-subgroups of G (including the
// trivial subgroup), computed inside a fixed Sylow p-subgroup.
std::vector<Subgroup> p_subgroup_classes(const PermutationGroup& G, int p);
// All p-subgroups (every conjugate, not just class reps).
std::vector<Subgroup> all_p_subgroups(const PermutationGroup& G, int p);

// Group constructions.
std::shared_ptr<PermutationGroup> cyclic_group(int n);
std::shared_ptr<PermutationGroup> symmetric_group(int n);
std::shared_ptr<PermutationGroup> alternating_group(int n);
std::shared_ptr<PermutationGroup> dihedral_group(int n);  // order 2n, n >= 1
std::shared_ptr<PermutationGroup> klein_four_group();

struct ProductEmbedding {
  std::shared_ptr<PermutationGroup> group;
  // Element index maps of the factors into the product.
  std::function<int(int, int)> pair_to_index;   // (a in G, b in H) -> index
  std::function<std::pair<int, int>(int)> index_to_pair;
};
ProductEmbedding direct_product(const PermutationGroup& G, const PermutationGroup& H);

// Builds the regular permutation representation of the group defined by a
// multiplication table (indices 0..n-1, table[a][b] = a*b, 0 = identity).
std::shared_ptr<PermutationGroup> group_from_table(const std::vector<std::vector<int>>& table);

struct QuotientResult {
  std::shared_ptr<PermutationGroup> group;
  std::function<int(int)> project;  // element of E -> element of quotient
};
// Quotient of E by a normal subgroup N via the action on left cosets.
QuotientResult quotient_by_normal(const PermutationGroup& E, const Subgroup& N);

// Semidirect product P><C_n where the generator of C_n acts on P by the
// automorphism theta, given as an element-index map (theta[x] is the image
// of element x of P).  theta must be an automorphism with theta^n = id.
// The result is realized by its left-regular action on |P|*n points.
struct SemidirectResult {
  std::shared_ptr<PermutationGroup> group;
  std::vector<int> p_gen_ids;  // images of P's generators
  int s_id;                    // the order-n generator acting by theta
};
SemidirectResult extension_by_automorphism(const PermutationGroup& P,
                                           const std::vector<int>& theta, int n);

// <L, u> inside a common parent: the subgroup generated by L and element u.
Subgroup join_with_element(const Subgroup& L, int u);

} // namespace ppf::grp
