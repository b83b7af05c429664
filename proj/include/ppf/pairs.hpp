#pragma once

#include "ppf/group.hpp"
#include "ppf/iso.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace ppf::pp {

// A pair (P, s): a p-subgroup P of an ambient group together with a
// p'-element s of its normalizer.
struct Pair {
  grp::Subgroup P;
  int s = 0;
};

// Conjugacy: g with gP1g^-1 = P2 and g s1 g^-1 = s2 simultaneously.
bool pairs_conjugate(const grp::PermutationGroup& G, const grp::Subgroup& P1, int s1,
                     const grp::Subgroup& P2, int s2, int* witness = nullptr);

// Representatives of the conjugacy classes of pairs of G at the prime p,
// in a deterministic order.
struct PairIndex {
  const grp::PermutationGroup* G = nullptr;
  int p = 0;
  std::vector<Pair> reps;

  int class_of(const grp::Subgroup& P, int s) const;
  std::size_t size() const { return reps.size(); }
};
PairIndex enumerate_pairs(const grp::PermutationGroup& G, int p);

// A pair abstracted away from its ambient group: a standalone group
// E = <L, u> with the subgroup L and the element u.
struct AbstractPair {
  std::shared_ptr<grp::PermutationGroup> E;
  grp::Subgroup L;  // subgroup of *E
  int u = 0;        // element of *E
};

AbstractPair abstract_pair(const grp::PermutationGroup& G, const grp::Subgroup& P, int s);

// C_<u>(L): the elements of <u> centralizing L, as a subgroup of E.
grp::Subgroup cyclic_centralizer(const AbstractPair& a);

// A pair is reduced when C_<u>(L) is trivial.
bool is_reduced(const AbstractPair& a);

// The reduction (P~, s~) = (P C/C, sC) with C = C_<s>(P), realized on the
// coset action of P<s> modulo C.
AbstractPair reduce_pair(const grp::PermutationGroup& G, const grp::Subgroup& P, int s);
AbstractPair reduce_abstract_pair(const AbstractPair& a);

// Isomorphism of pairs: f : La<ua> -> Lb<ub> with f(La) = Lb and f(ua)
// conjugate to ub.  Optionally reports a witnessing isomorphism.
bool pair_isomorphic(const AbstractPair& a, const AbstractPair& b, grp::Iso* witness = nullptr);

// ----- twisted diagonal pair classes of a product G x K -----

struct ProductContext {
  std::shared_ptr<const grp::PermutationGroup> G;
  std::shared_ptr<const grp::PermutationGroup> K;
  grp::ProductEmbedding GK;
  int p = 0;
};
ProductContext make_product_context(std::shared_ptr<const grp::PermutationGroup> G,
                                    std::shared_ptr<const grp::PermutationGroup> K, int p);

// One conjugacy class of pairs (Delta(U, gamma, W), (s, t)) of G x K whose
// p-subgroup is twisted diagonal (both projections injective).
struct DiagonalPairClass {
  grp::Subgroup Delta;  // subgroup of the product group
  int st = 0;           // element of the product group
  grp::Subgroup U;      // first projection, subgroup of G
  grp::Subgroup W;      // second projection, subgroup of K
  grp::Iso gamma;       // W -> U, determined by Delta
  int s = 0;            // element of G
  int t = 0;            // element of K
};

struct DiagIndex {
  ProductContext ctx;
  std::vector<DiagonalPairClass> classes;

  // Class of a twisted-diagonal pair of the product group; -1 if it is not
  // conjugate to any listed class.  Results are memoized.
  int class_of(const grp::Subgroup& Delta, int st) const;
  std::size_t size() const { return classes.size(); }

private:
  mutable std::map<std::pair<std::vector<int>, int>, int> memo_;
  mutable std::shared_ptr<std::mutex> memo_lock_ = std::make_shared<std::mutex>();
};
DiagIndex diagonal_pair_classes(std::shared_ptr<const grp::PermutationGroup> G,
                                std::shared_ptr<const grp::PermutationGroup> K, int p);

// The twisted diagonal subgroup Delta(U, gamma, W) = { (gamma(w), w) } of
// the product, from a subgroup W of K and an iso gamma : W -> U <= G.
grp::Subgroup twisted_diagonal(const ProductContext& ctx, const grp::Iso& gamma,
                               const grp::Subgroup& W);

// ----- decomposition triples -----

// For U <= G, W <= K, gamma : W -> U and a middle group H: all triples
// (alpha, V, beta) with V a p-subgroup of H, beta : W -> V, alpha : V -> U
// and alpha o beta = gamma.
struct GammaTriple {
  grp::Iso alpha;    // V -> U
  grp::Subgroup V;   // p-subgroup of H
  grp::Iso beta;     // W -> V
};
std::vector<GammaTriple> gamma_triples(const grp::PermutationGroup& H, int p,
                                       const grp::Subgroup& U, const grp::Iso& gamma,
                                       const grp::Subgroup& W);

// ----- the outer automorphism group of a pair -----

// Out(L, u) = Aut_u(L) / { conjugation by elements of C_E(u) }, where
// Aut_u(L) is the group of automorphisms of L commuting with conjugation
// by u.  A regular permutation model is attached for character work.
struct OutLu {
  AbstractPair pair;
  std::vector<grp::Iso> aut_u;           // all elements of Aut_u(L)
  std::vector<int> coset_of;             // aut_u index -> Out element id
  std::vector<int> rep_of;               // Out element id -> aut_u index
  std::vector<std::vector<int>> mul;     // Out multiplication table
  int identity = 0;                      // Out id of the identity coset
  std::shared_ptr<grp::PermutationGroup> model;  // regular model of Out
  std::vector<int> to_model;             // Out id -> model element index
  std::vector<int> from_model;           // model element index -> Out id

  int order() const { return static_cast<int>(rep_of.size()); }
  int compose(int a, int b) const { return mul[a][b]; }
  int invert(int a) const;
};
OutLu out_lu(const AbstractPair& lu);

// The Out(L,u) class of an automorphism in Aut_u(L); throws if f is not a
// member.
int out_class_of(const OutLu& out, const grp::Iso& f);

// A "twisting" iso phi : L -> P with phi(u l u^-1) = s phi(l) s^-1, which
// exists exactly when the reduction of (P, s) is pair-isomorphic to (L, u)
// with L already reduced.  Throws if none exists.
grp::Iso find_twisting_iso(const grp::PermutationGroup& G, const grp::Subgroup& P, int s,
                           const AbstractPair& lu);
bool has_twisting_iso(const grp::PermutationGroup& G, const grp::Subgroup& P, int s,
                      const AbstractPair& lu, grp::Iso* phi = nullptr);

// Image of N_G(P, s) in Out(L, u): the Out classes of phi^-1 i_g phi over
// g in N_G(P, s), using a fixed twisting iso phi.
std::vector<int> normalizer_image_in_out(const grp::PermutationGroup& G,
                                         const grp::Subgroup& P, int s,
                                         const OutLu& out, const grp::Iso& phi);

} // namespace ppf::pp
