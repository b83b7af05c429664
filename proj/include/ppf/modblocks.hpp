#pragma once

#include "ppf/gf.hpp"
#include "ppf/group.hpp"

#include <memory>
#include <vector>

namespace ppf::mb {

// The group algebra kG over a finite splitting field k = GF(p^m), with m the
// multiplicative order of p modulo the p'-part of the exponent of G.  This
// guarantees absolute irreducibility of all simple modules of G and of every
// subgroup, standing in for an algebraically closed field of characteristic p.
struct GroupAlgebraContext {
  std::shared_ptr<const grp::PermutationGroup> G;
  int p = 2;
  std::shared_ptr<const ff::GF> F;
};

int splitting_degree(const grp::PermutationGroup& G, int p);
GroupAlgebraContext make_context(std::shared_ptr<const grp::PermutationGroup> G,
                                 int p);

// Elements of kG as dense coefficient vectors indexed by group element.
using AlgElt = std::vector<int>;

AlgElt alg_zero(const GroupAlgebraContext& ctx);
AlgElt alg_one(const GroupAlgebraContext& ctx);
AlgElt alg_add(const GroupAlgebraContext& ctx, const AlgElt& a, const AlgElt& b);
AlgElt alg_scale(const GroupAlgebraContext& ctx, int c, const AlgElt& a);
AlgElt alg_mul(const GroupAlgebraContext& ctx, const AlgElt& a, const AlgElt& b);
AlgElt alg_conjugate(const GroupAlgebraContext& ctx, int g, const AlgElt& a); // g a g^-1
bool alg_is_zero(const AlgElt& a);

// Is a fixed under conjugation by every element of P?
bool is_stable_under(const GroupAlgebraContext& ctx, const grp::Subgroup& P,
                     const AlgElt& a);

// The Brauer morphism Br_P: (kG)^P -> kC_G(P), truncation to the part
// supported on C_G(P).  Throws if a is not P-stable.
AlgElt brauer_morphism(const GroupAlgebraContext& ctx, const grp::Subgroup& P,
                       const AlgElt& a);

// The primitive central idempotents (block idempotents) of kG, in a
// deterministic order: the principal block (the one with augmentation 1)
// first, then ascending coefficient vectors.
std::vector<AlgElt> central_idempotents(const GroupAlgebraContext& ctx);
int principal_block_index(const GroupAlgebraContext& ctx,
                          const std::vector<AlgElt>& blocks);

// A defect group of the block b: a representative of the unique maximal
// conjugacy class of p-subgroups P with Br_P(b) != 0.  Aborts if the maximal
// nonvanishing classes are not unique or not containment-consistent.
grp::Subgroup defect_group(const GroupAlgebraContext& ctx, const AlgElt& b);

// The group algebra of a subgroup H <= G over the same field, with element
// index translation in both directions.
struct SubContext {
  GroupAlgebraContext ctx;       // H as a standalone group
  std::vector<int> to_parent;    // H element index -> G element index
  std::vector<int> from_parent;  // G element index -> H index, or -1
};
SubContext sub_context(const GroupAlgebraContext& parent, const grp::Subgroup& H);
// Reindex an element of kG supported on H into kH coordinates (and back).
AlgElt restrict_elt(const SubContext& sub, const AlgElt& a);
AlgElt extend_elt(const SubContext& sub, const AlgElt& a);

// b-Brauer pairs below a fixed maximal pair (D, e_D): for every subgroup
// P <= D the unique block e_P of kC_G(P) with (P,e_P) <= (D,e_D), where
// normal containment (P,e) <| (Q,f) means P <| Q, e Q-stable, f Br_Q(e) = f,
// and general containment is the transitive closure along subnormal chains.
struct BrauerPairs {
  grp::Subgroup D;                        // defect group (subgroup of G)
  std::vector<grp::Subgroup> subgroups;   // all subgroups of D
  std::vector<AlgElt> e;                  // e_P per subgroup, kG coordinates
  std::vector<grp::Subgroup> stabilizer;  // N_G(P, e_P) per subgroup
  std::vector<int> rep_index;             // G-class representatives of (P,e_P)
  std::vector<int> class_of;              // subgroup index -> position in rep_index
};
// max_block_hint, when given, prescribes the block e_D of the maximal pair
// (it must satisfy e_D Br_D(b) = e_D); otherwise the first such block is used.
BrauerPairs brauer_pairs_and_fusion(const GroupAlgebraContext& ctx,
                                    const AlgElt& b, const grp::Subgroup& D,
                                    const AlgElt* max_block_hint = nullptr);

// A simple module of (an idempotent slice of) kH, given by the matrices of
// H's generators on a chosen basis.
struct SimpleModule {
  int dim = 0;
  std::vector<ff::Mat> gen_action;  // parallel to H.generators()
};

// Action matrix of an arbitrary element, and of all elements at once.
ff::Mat module_action(const GroupAlgebraContext& hctx, const SimpleModule& S, int h);
std::vector<ff::Mat> all_element_actions(const GroupAlgebraContext& hctx,
                                         const SimpleModule& S);

// Complete list of pairwise non-isomorphic simple modules of e kH, obtained
// by chopping the regular module e kH with seeded randomness (deterministic).
std::vector<SimpleModule> block_simples(const GroupAlgebraContext& hctx,
                                        const AlgElt& e);

// Module isomorphism via the intertwiner linear system (for modules known to
// be semisimple-isotypic or simple this detects isomorphism exactly).
bool modules_isomorphic(const GroupAlgebraContext& hctx, const SimpleModule& A,
                        const SimpleModule& B);

// The twist of S by an automorphism sigma of H (an element-index map):
// h acts on the twisted module as sigma(h) acts on S.
SimpleModule twist_module(const GroupAlgebraContext& hctx, const SimpleModule& S,
                          const std::vector<int>& sigma);

// Indices of the simples fixed (up to isomorphism) by the twist h -> s^-1 h s.
std::vector<int> u_invariant_simples(const GroupAlgebraContext& hctx,
                                     const std::vector<SimpleModule>& simples,
                                     const std::vector<int>& sigma);
int u_invariant_simple_count(const GroupAlgebraContext& hctx,
                             const std::vector<SimpleModule>& simples,
                             const std::vector<int>& sigma);

} // namespace ppf::mb
