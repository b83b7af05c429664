#pragma once

#include "ppf/modblocks.hpp"
#include "ppf/simples.hpp"

#include <string>
#include <vector>

namespace ppf::bf {

// A fully analyzed block of kG: idempotent, defect group, Brauer pairs with
// fusion stabilizers, and the simple modules of the local algebras needed by
// the multiplicity formulas.
struct Block {
  mb::GroupAlgebraContext ctx;
  mb::AlgElt b;
  bool principal = false;
  grp::Subgroup defect;
  mb::BrauerPairs pairs;

  // Per conjugacy class of p-subgroups P of G: C_G(P), Br_P(b), the blocks
  // of kC_G(P) lying under Br_P(b), and the simple modules of their union
  // (tagged with the owning block).  Used by the orbit-count formula.
  struct Local {
    grp::Subgroup P;
    mb::SubContext cg;
    mb::AlgElt brb;                        // Br_P(b) in C_G(P) coordinates
    std::vector<mb::AlgElt> blocks;        // C_G(P) coordinates
    std::vector<mb::SimpleModule> simples;
    std::vector<int> block_of_simple;
  };
  std::vector<Local> local;

  // Per representative Brauer pair (P, e_P) (parallel to pairs.rep_index):
  // C_G(P) and the simple modules of e_P kC_G(P).  Used by the fusion formula.
  struct PairLocal {
    mb::SubContext cg;
    std::vector<mb::SimpleModule> simples;
  };
  std::vector<PairLocal> pair_local;
};

// max_block_hint prescribes the block e_D of the maximal Brauer pair, and
// defect_override a particular representative of the defect class; both are
// used to align the local data of Brauer-corresponding blocks.
Block assemble_block(const mb::GroupAlgebraContext& ctx, const mb::AlgElt& b,
                     const mb::AlgElt* max_block_hint = nullptr,
                     const grp::Subgroup* defect_override = nullptr);
std::vector<Block> analyze_blocks(std::shared_ptr<const grp::PermutationGroup> G,
                                  int p);

// l(b): the number of isomorphism classes of simple kGb-modules.
int num_simples(const Block& block);

// Orbit representatives of the isomorphisms pi : L -> P with
// pi i_u pi^-1 in Aut_{F_b}(P, e_P), under N_G(P, e_P) x Aut(L, u), for the
// Brauer pair class pair_rep (an index into pairs.rep_index).
struct PiSet {
  std::vector<grp::Iso> reps;
  // Per representative: the Aut(L,u) indices (into lu.out.aut_u) whose class
  // stabilizes the N_G(P,e_P)-orbit of pi, with one realizing g per entry.
  std::vector<std::vector<std::pair<int, int>>> stabilizer;
};
PiSet pi_set(const Block& block, int pair_rep, const sim::DDeltaPair& lu);

// The orbit set Xi = (G x L<u>) \ Y(G, L, u) of triples (P, pi, F) with F a
// u-invariant simple of Br_P(b) kC_G(P), together with the right Out(L,u)
// action on orbits and its fixed-point counts.
struct XiOrbitSet {
  int num_orbits = 0;
  std::vector<std::vector<int>> action;  // per Out id: permutation of orbits
  std::vector<int> fixed_count;          // per Out id: |Xi^phi|
};
XiOrbitSet xi_orbits(const Block& block, const sim::DDeltaPair& lu);

// Multiplicity of S_{L,u,V} in the block functor, evaluated independently by
// the Xi-orbit formula and the fusion formula; throws if they disagree.
int block_multiplicity(const Block& block, const sim::DDeltaPair& lu, int char_row);

// Full multiplicity table over all labels with |L| bounded by the p-part of
// |G| (labels outside the defect support come out zero).
sim::FunctorDecomposition decompose_block_functor(const Block& block);

// Nilpotency: the definition (every quotient N_G(P,e_P)/C_G(P) a p-group)
// cross-checked against the functorial characterizations; throws if the
// three verdicts disagree.
struct NilpotencyVerdict {
  bool nilpotent = false;        // the definition
  bool all_u_trivial = false;    // every nonzero label has u = 1
  bool matches_defect = false;   // decomposition equals that of FT^Delta_D
};
NilpotencyVerdict is_nilpotent(const Block& block);

// Functorial equivalence, decided by comparing the phi-fixed-point counts on
// the Xi-orbit sets over all labels with |L| up to the larger defect order.
struct EquivalenceVerdict {
  bool equivalent = false;
  std::string witness;  // a mismatched (L, u, phi) with both counts when false
};
EquivalenceVerdict functorially_equivalent(const Block& a, const Block& ref);

// The abelian-defect comparison: for b with abelian defect D, H = N_G(D) and
// c the Brauer correspondent of b, compare the s-invariant simple counts of
// k e_P C_G(P) and k f_P C_H(P) for every P <= D and every p'-element s of
// N_H(P, f_P), with the compatible choice f_D = e_D of maximal pairs.  When
// every count matches, functorial equivalence of (G,b) and (H,c) is also
// asserted.
struct BroueResult {
  bool holds = false;
  bool equivalent = false;  // verdict of functorially_equivalent on success
  int l_b = 0, l_c = 0;     // simple-module counts of the two blocks
  std::string witness;      // first mismatched count when holds is false
  struct Count {
    int subgroup_order = 0;
    int s_order = 0;
    int count_b = 0;
    int count_c = 0;
  };
  std::vector<Count> counts;  // the full comparison table, for inspection
};
BroueResult broue_condition_check(const Block& block);

} // namespace ppf::bf
