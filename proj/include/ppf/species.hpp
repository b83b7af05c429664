#pragma once

#include "ppf/pairs.hpp"
#include "ppf/rational.hpp"

#include <memory>
#include <vector>

namespace ppf::sp {

using num::Rat;

// An element of FT(G) in species coordinates: one rational per pair class
// of G.  The algebra structure is pointwise (tensor product of modules
// multiplies species values).
struct SpeciesFT {
  const pp::PairIndex* idx = nullptr;
  std::vector<Rat> v;

  SpeciesFT() = default;
  explicit SpeciesFT(const pp::PairIndex& i) : idx(&i), v(i.size()) {}

  bool is_zero() const;
  friend SpeciesFT operator+(const SpeciesFT& a, const SpeciesFT& b);
  friend SpeciesFT operator-(const SpeciesFT& a, const SpeciesFT& b);
  friend SpeciesFT operator*(const SpeciesFT& a, const SpeciesFT& b);  // pointwise
  friend SpeciesFT operator*(const Rat& c, const SpeciesFT& a);
  friend bool operator==(const SpeciesFT& a, const SpeciesFT& b) { return a.v == b.v; }
};

SpeciesFT indicator_ft(const pp::PairIndex& idx, int cls);
SpeciesFT all_ones_ft(const pp::PairIndex& idx);

// An element of FT^Delta(G, K) in species coordinates over the twisted
// diagonal pair classes of G x K.
struct SpeciesFTD {
  const pp::DiagIndex* idx = nullptr;
  std::vector<Rat> v;

  SpeciesFTD() = default;
  explicit SpeciesFTD(const pp::DiagIndex& i) : idx(&i), v(i.size()) {}

  bool is_zero() const;
  friend SpeciesFTD operator+(const SpeciesFTD& a, const SpeciesFTD& b);
  friend SpeciesFTD operator-(const SpeciesFTD& a, const SpeciesFTD& b);
  friend SpeciesFTD operator*(const Rat& c, const SpeciesFTD& a);
  friend bool operator==(const SpeciesFTD& a, const SpeciesFTD& b) { return a.v == b.v; }
};

SpeciesFTD indicator_ftd(const pp::DiagIndex& idx, int cls);

// The lift FT(G) -> FT^Delta(G, G): the basis idempotent at (P, r) maps to
// |C_G(P<r>)| times the indicator of the class (Delta(P), (r, r)).
SpeciesFTD tilde_lift(const SpeciesFT& w, const pp::DiagIndex& gg);

// Composition FT^Delta(G, H) x FT^Delta(H, K) -> FT^Delta(G, K) in species
// coordinates (the bilinear extension of the tensor product over kH).
// Honors PPFUNCTOR_THREADS for the outer loop over target classes.
SpeciesFTD compose(const SpeciesFTD& a, const SpeciesFTD& b, const pp::DiagIndex& target);

// ----- bisets (independent cross-check for composition) -----

// A finite (G, K)-biset on points 0..size-1.
struct Biset {
  std::shared_ptr<const grp::PermutationGroup> G;
  std::shared_ptr<const grp::PermutationGroup> K;
  int size = 0;
  std::vector<grp::Perm> left;   // left[g]: x -> g.x
  std::vector<grp::Perm> right;  // right[k]: x -> x.k
};

// The transitive (G, K)-bisets (G x K)/M, for M over subgroup-conjugacy
// representatives of G x K whose Sylow p-subgroup is twisted diagonal (the
// transitive bisets whose permutation modules have all indecomposable
// summands with twisted diagonal vertices).
std::vector<Biset> transitive_bisets(const pp::ProductContext& ctx);

// X x_H Y for a (G, H)-biset X and an (H, K)-biset Y; X.K and Y.G must be
// the same group object.
Biset biset_tensor(const Biset& X, const Biset& Y);

// Species vector of the permutation module on a biset: the value at
// (Delta, (s, t)) is the number of points fixed by Delta and by (s, t).
SpeciesFTD biset_species(const Biset& X, const pp::DiagIndex& idx);

// A seeded random rational species (for property tests).
SpeciesFTD random_species(const pp::DiagIndex& idx, unsigned seed);

} // namespace ppf::sp
