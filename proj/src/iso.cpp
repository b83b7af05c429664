#include "ppf/iso.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ppf::grp {

int Iso::apply(int e) const {
  auto it = std::lower_bound(src_elems.begin(), src_elems.end(), e);
  if (it == src_elems.end() || *it != e)
    throw std::out_of_range("Iso::apply: element outside the source subgroup");
  return img[static_cast<std::size_t>(it - src_elems.begin())];
}

Iso Iso::inverse() const {
  Iso r;
  r.src_parent = dst_parent;
  r.dst_parent = src_parent;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) pairs.emplace_back(img[i], src_elems[i]);
  std::sort(pairs.begin(), pairs.end());
  for (auto& [a, b] : pairs) {
    r.src_elems.push_back(a);
    r.img.push_back(b);
  }
  return r;
}

Iso compose_iso(const Iso& b, const Iso& a) {
  Iso r;
  r.src_parent = a.src_parent;
  r.dst_parent = b.dst_parent;
  r.src_elems = a.src_elems;
  r.img.reserve(a.img.size());
  for (int m : a.img) r.img.push_back(b.apply(m));
  return r;
}

Iso identity_iso(const Subgroup& S) {
  Iso r;
  r.src_parent = S.parent;
  r.dst_parent = S.parent;
  r.src_elems = S.elems;
  r.img = S.elems;
  return r;
}

Iso conjugation_iso(const Subgroup& S, int g) {
  Iso r;
  r.src_parent = S.parent;
  r.dst_parent = S.parent;
  r.src_elems = S.elems;
  r.img.reserve(S.elems.size());
  for (int e : S.elems) r.img.push_back(S.parent->conj(g, e));
  return r;
}

Iso restrict_iso(const Iso& f, const Subgroup& S) {
  Iso r;
  r.src_parent = f.src_parent;
  r.dst_parent = f.dst_parent;
  r.src_elems = S.elems;
  r.img.reserve(S.elems.size());
  for (int e : S.elems) r.img.push_back(f.apply(e));
  return r;
}

Subgroup iso_image(const Iso& f, const Subgroup& S) {
  Subgroup r;
  // iso_image is only meaningful when f lands back in a known parent.
  r.parent = f.dst_parent;
  r.elems.reserve(S.elems.size());
  for (int e : S.elems) r.elems.push_back(f.apply(e));
  std::sort(r.elems.begin(), r.elems.end());
  for (int g : S.gens) r.gens.push_back(f.apply(g));
  return r;
}

namespace {

struct Search {
  const PermutationGroup* GA;
  const PermutationGroup* GB;
  const Subgroup* SA;
  const Subgroup* SB;
  std::vector<int> gens;                 // greedy generating sequence of SA
  const std::function<bool(const Iso&)>* visit;
  bool found = false;
  bool stopped = false;

  // Extends the partial map (a list of src->dst pairs closed under
  // products so far) with one new generator pair; returns false if the
  // extension is inconsistent.
  bool extend(std::unordered_map<int, int>& fwd, std::unordered_map<int, int>& bwd,
              int a, int alpha) {
    std::vector<std::pair<int, int>> work;
    auto add = [&](int x, int y) {
      auto it = fwd.find(x);
      if (it != fwd.end()) return it->second == y;
      auto jt = bwd.find(y);
      if (jt != bwd.end()) return false;
      if (!SB->contains(y)) return false;
      fwd.emplace(x, y);
      bwd.emplace(y, x);
      work.emplace_back(x, y);
      return true;
    };
    if (!add(a, alpha)) return false;
    for (std::size_t head = 0; head < work.size(); ++head) {
      auto [x, y] = work[head];
      // Multiply with everything known (both orders).
      std::vector<std::pair<int, int>> snapshot(fwd.begin(), fwd.end());
      for (auto& [u, v] : snapshot) {
        if (!add(GA->mul(x, u), GB->mul(y, v))) return false;
        if (!add(GA->mul(u, x), GB->mul(v, y))) return false;
      }
    }
    return true;
  }

  void recurse(std::size_t i, std::unordered_map<int, int> fwd,
               std::unordered_map<int, int> bwd) {
    if (stopped) return;
    if (i == gens.size()) {
      if (fwd.size() != SA->elems.size()) return;  // should not happen
      Iso f;
      f.src_parent = GA;
      f.dst_parent = GB;
      f.src_elems = SA->elems;
      f.img.reserve(SA->elems.size());
      for (int e : SA->elems) f.img.push_back(fwd.at(e));
      found = true;
      if ((*visit)(f)) stopped = true;
      return;
    }
    int g = gens[i];
    int go = GA->elem_order(g);
    for (int c : SB->elems) {
      if (GB->elem_order(c) != go) continue;
      auto f2 = fwd;
      auto b2 = bwd;
      if (!extend(f2, b2, g, c)) continue;
      recurse(i + 1, std::move(f2), std::move(b2));
      if (stopped) return;
    }
  }
};

} // namespace

bool visit_isomorphisms(const Subgroup& SA, const Subgroup& SB,
                        const std::function<bool(const Iso&)>& visit) {
  if (SA.elems.size() != SB.elems.size()) return false;
  const PermutationGroup& GA = *SA.parent;
  const PermutationGroup& GB = *SB.parent;
  // Cheap invariant: multiset of element orders.
  auto profile = [](const PermutationGroup& G, const Subgroup& S) {
    std::vector<int> v;
    v.reserve(S.elems.size());
    for (int e : S.elems) v.push_back(G.elem_order(e));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (profile(GA, SA) != profile(GB, SB)) return false;

  Search s;
  s.GA = &GA;
  s.GB = &GB;
  s.SA = &SA;
  s.SB = &SB;
  s.visit = &visit;
  // Greedy generating sequence: add elements that enlarge the closure.
  Subgroup cur = trivial_subgroup(GA);
  for (int e : SA.elems) {
    if (cur.contains(e)) continue;
    std::vector<int> seed = s.gens;
    seed.push_back(e);
    cur = make_subgroup(GA, seed);
    s.gens.push_back(e);
    if (cur.order() == SA.order()) break;
  }
  std::unordered_map<int, int> fwd{{0, 0}}, bwd{{0, 0}};
  s.recurse(0, fwd, bwd);
  return s.found;
}

std::vector<Iso> isomorphisms(const Subgroup& SA, const Subgroup& SB, std::size_t cap) {
  std::vector<Iso> out;
  visit_isomorphisms(SA, SB, [&](const Iso& f) {
    out.push_back(f);
    if (out.size() > cap)
      throw std::runtime_error("isomorphisms: enumeration exceeds safety cap");
    return false;
  });
  return out;
}

bool are_isomorphic(const Subgroup& SA, const Subgroup& SB) {
  return visit_isomorphisms(SA, SB, [](const Iso&) { return true; });
}

bool groups_isomorphic(const PermutationGroup& A, const PermutationGroup& B) {
  Subgroup wa = whole_group(A), wb = whole_group(B);
  return are_isomorphic(wa, wb);
}

std::vector<Iso> automorphisms(const Subgroup& S, std::size_t cap) {
  return isomorphisms(S, S, cap);
}

} // namespace ppf::grp
