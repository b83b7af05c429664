#pragma once

#include "ppf/group.hpp"

#include <functional>
#include <vector>

namespace ppf::grp {

// An isomorphism between two subgroups, stored positionally: the element at
// position i of the sorted source element list maps to img[i], a parent
// element index on the destination side.  Source and destination may live in
// different parent groups.
struct Iso {
  const PermutationGroup* src_parent = nullptr;
  const PermutationGroup* dst_parent = nullptr;
  std::vector<int> src_elems;  // sorted source element indices
  std::vector<int> img;        // img[i] = image of src_elems[i]

  int apply(int e) const;
  Iso inverse() const;
  bool operator==(const Iso& o) const {
    return src_parent == o.src_parent && dst_parent == o.dst_parent &&
           src_elems == o.src_elems && img == o.img;
  }
  bool operator<(const Iso& o) const { return img < o.img; }
};

// b after a (first a, then b); requires a's image to be b's source.
Iso compose_iso(const Iso& b, const Iso& a);
Iso identity_iso(const Subgroup& S);
// Conjugation by g as an isomorphism S -> gSg^-1 (within one parent).
Iso conjugation_iso(const Subgroup& S, int g);
// Restriction of an iso to a subgroup of its source.
Iso restrict_iso(const Iso& f, const Subgroup& S);
// The image of a subgroup of the source under the iso.
Subgroup iso_image(const Iso& f, const Subgroup& S);

// Enumerates isomorphisms SA -> SB by backtracking over a greedy generating
// sequence; the visitor returns true to stop early.  Returns true if at
// least one isomorphism was visited.
bool visit_isomorphisms(const Subgroup& SA, const Subgroup& SB,
                        const std::function<bool(const Iso&)>& visit);

// All isomorphisms SA -> SB, with a safety cap (throws if exceeded).
std::vector<Iso> isomorphisms(const Subgroup& SA, const Subgroup& SB,
                              std::size_t cap = 20000);

bool are_isomorphic(const Subgroup& SA, const Subgroup& SB);
bool groups_isomorphic(const PermutationGroup& A, const PermutationGroup& B);

// All automorphisms of a subgroup (isomorphisms onto itself).
std::vector<Iso> automorphisms(const Subgroup& S, std::size_t cap = 20000);

} // namespace ppf::grp
