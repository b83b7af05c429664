#pragma once

#include "ppf/chartab.hpp"
#include "ppf/pairs.hpp"
#include "ppf/smallpgroups.hpp"
#include "ppf/species.hpp"

#include <string>
#include <vector>

namespace ppf::sim {

// One isomorphism class of pairs (L, u) with L a p-group acted on
// faithfully by the p'-element u (the "reduced" pairs: C_<u>(L) = 1),
// together with its outer automorphism group and character table.
struct DDeltaPair {
  std::string l_name;        // inventory name of L
  int u_order = 1;           // order of u
  pp::AbstractPair pair;     // E = L<u>
  pp::OutLu out;
  ct::CharacterTable table;  // of out.model

  std::string name(int char_row) const;  // "L=...,|u|=...,V=k"
};

// All such pairs with |L| <= bound, up to pair isomorphism, deterministic
// order (inventory order of L, then order of u, then discovery order).
std::vector<DDeltaPair> enumerate_ddelta(int p, int bound);

// dim S_{L,u,V}(G): sum over pair classes (P, s) of G whose reduction is
// isomorphic to (L, u) of dim V^{image of N_G(P,s) in Out(L,u)}.
int eval_simple_dim(const grp::PermutationGroup& G, int p, const DDeltaPair& lu,
                    int char_row);

// Multiplicities of all simple functors in the representable functor at G:
// the multiplicity of S_{L,u,V} equals dim S_{L,u,V}(G).
struct FunctorDecomposition {
  // Parallel arrays over labels (pair index into `pairs`, character row).
  std::vector<DDeltaPair> pairs;
  std::vector<std::pair<int, int>> labels;  // (pair index, char row)
  std::vector<int> multiplicity;
};
FunctorDecomposition decompose_representable(const grp::PermutationGroup& G, int p);

// n_D * 2|D|^2 * M_D: an upper bound for every simple multiplicity in any
// block functor with defect group D (n_D = number of subgroups of D, M_D =
// max |Aut(L)| over L <= D).
long long finiteness_bound(const grp::PermutationGroup& D);

// The subalgebra E_{L,u} of FT^Delta(E, E), E = L<u>: basis indexed by
// Out(L,u), with F_gamma the idempotent species at the diagonal class
// (Delta(L, gamma, L), (u, u)).
struct EluAlgebra {
  pp::DiagIndex idx;             // diagonal classes of E x E
  std::vector<int> basis_class;  // Out id -> class id (all distinct)
};
EluAlgebra elu_algebra(const DDeltaPair& lu, int p);

} // namespace ppf::sim
