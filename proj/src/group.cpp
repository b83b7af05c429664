#include "ppf/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ppf::grp {

namespace {

constexpr int kMulTableLimit = 512;

// Smallest prime-power / p-part helpers.
long long p_part(long long n, int p) {
  long long q = 1;
  while (n % p == 0) { n /= p; q *= p; }
  return q;
}

long long mod_inverse(long long a, long long m) {
  long long g = m, x = 0, x1 = 1, a1 = a % m;
  while (a1) {
    long long q = g / a1;
    g -= q * a1; std::swap(g, a1);
    x -= q * x1; std::swap(x, x1);
  }
  if (g != 1) throw std::runtime_error("mod_inverse: not coprime");
  return ((x % m) + m) % m;
}

} // namespace

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
  for (auto& g : gens_) {
    if (g.degree() > degree_)
      throw std::invalid_argument("PermutationGroup: generator degree exceeds group degree");
    // Pad generators up to the common degree.
    while (g.degree() < degree_) g.img.push_back(g.degree());
  }
  build();
}

void PermutationGroup::build() {
  elems_.clear();
  index_.clear();
  Perm id = Perm::identity(degree_);
  elems_.push_back(id);
  index_[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens_) {
      Perm next = g * elems_[cur];
      auto [it, fresh] = index_.try_emplace(next, static_cast<int>(elems_.size()));
      if (fresh) {
        elems_.push_back(next);
        queue.push_back(it->second);
      }
    }
  }
  int n = order();
  inv_.resize(n);
  orders_.resize(n);
  for (int i = 0; i < n; ++i) {
    inv_[i] = index_.at(elems_[i].inverse());
    orders_[i] = elems_[i].order();
  }
  if (n <= kMulTableLimit) {
    mul_table_.emplace(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        (*mul_table_)[a * n + b] = index_.at(elems_[a] * elems_[b]);
  }
}

int PermutationGroup::index_of(const Perm& p) const {
  if (p.degree() != degree_) {
    if (p.degree() > degree_) return -1;
    Perm q = p;
    while (q.degree() < degree_) q.img.push_back(q.degree());
    auto it = index_.find(q);
    return it == index_.end() ? -1 : it->second;
  }
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int PermutationGroup::pow(int a, long long e) const {
  int n = elem_order(a);
  e %= n;
  if (e < 0) e += n;
  int result = 0;
  int base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::pair<int, int> PermutationGroup::p_decomposition(int a, int p) const {
  long long n = elem_order(a);
  long long q = p_part(n, p);
  long long m = n / q;
  if (q == 1) return {0, a};
  if (m == 1) return {a, 0};
  // a^(m * (m^-1 mod q)) has order q; a^(q * (q^-1 mod m)) has order m.
  int ap = pow(a, m * mod_inverse(m % q, q));
  int apc = pow(a, q * mod_inverse(q % m, m));
  return {ap, apc};
}

bool PermutationGroup::is_p_element(int a, int p) const {
  int n = elem_order(a);
  while (n % p == 0) n /= p;
  return n == 1;
}

bool PermutationGroup::is_p_prime_element(int a, int p) const {
  return elem_order(a) % p != 0;
}

int PermutationGroup::exponent() const {
  long long e = 1;
  for (int i = 0; i < order(); ++i) e = std::lcm(e, static_cast<long long>(orders_[i]));
  return static_cast<int>(e);
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

const std::vector<PermutationGroup::ConjClass>& PermutationGroup::conjugacy_classes() const {
  if (!classes_.empty() || order() == 0) return classes_;
  int n = order();
  class_of_.assign(n, -1);
  std::vector<ConjClass> classes;
  for (int start = 0; start < n; ++start) {
    if (class_of_[start] >= 0) continue;
    // Orbit of `start` under conjugation by generators.
    std::vector<int> members{start};
    class_of_[start] = static_cast<int>(classes.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const auto& g : gens_) {
        Perm c = g * elems_[members[head]] * g.inverse();
        int ci = index_.at(c);
        if (class_of_[ci] < 0) {
          class_of_[ci] = static_cast<int>(classes.size());
          members.push_back(ci);
        }
      }
    }
    std::sort(members.begin(), members.end());
    int rep = members[0];
    for (int m : members)
      if (elems_[m].img < elems_[rep].img) rep = m;
    classes.push_back({rep, std::move(members)});
  }
  // Canonical order: identity class first, then by representative perm.
  std::vector<int> perm_order(classes.size());
  std::iota(perm_order.begin(), perm_order.end(), 0);
  std::sort(perm_order.begin(), perm_order.end(), [&](int a, int b) {
    return elems_[classes[a].rep].img < elems_[classes[b].rep].img;
  });
  std::vector<int> new_id(classes.size());
  std::vector<ConjClass> sorted;
  sorted.reserve(classes.size());
  for (std::size_t i = 0; i < perm_order.size(); ++i) {
    new_id[perm_order[i]] = static_cast<int>(i);
    sorted.push_back(std::move(classes[perm_order[i]]));
  }
  for (int& c : class_of_) c = new_id[c];
  classes_ = std::move(sorted);
  return classes_;
}

int PermutationGroup::class_of(int a) const {
  conjugacy_classes();
  return class_of_[a];
}

bool Subgroup::contains(int e) const {
  return std::binary_search(elems.begin(), elems.end(), e);
}

Subgroup make_subgroup(const PermutationGroup& G, std::vector<int> generator_ids) {
  Subgroup s;
  s.parent = &G;
  s.gens = generator_ids;
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int g : generator_ids) {
        int f = G.mul(g, e);
        if (seen.insert(f).second) next.push_back(f);
      }
    frontier = std::move(next);
  }
  s.elems.assign(seen.begin(), seen.end());
  return s;
}

Subgroup whole_group(const PermutationGroup& G) {
  Subgroup s;
  s.parent = &G;
  s.elems.resize(G.order());
  std::iota(s.elems.begin(), s.elems.end(), 0);
  for (const auto& g : G.generators()) s.gens.push_back(G.index_of(g));
  return s;
}

Subgroup trivial_subgroup(const PermutationGroup& G) {
  Subgroup s;
  s.parent = &G;
  s.elems = {0};
  return s;
}

Subgroup conjugate_subgroup(const Subgroup& S, int g) {
  Subgroup r;
  r.parent = S.parent;
  r.elems.reserve(S.elems.size());
  for (int e : S.elems) r.elems.push_back(S.parent->conj(g, e));
  std::sort(r.elems.begin(), r.elems.end());
  for (int e : S.gens) r.gens.push_back(S.parent->conj(g, e));
  return r;
}

bool subgroups_conjugate(const Subgroup& A, const Subgroup& B, int* witness) {
  if (A.parent != B.parent) return false;
  if (A.elems.size() != B.elems.size()) return false;
  const PermutationGroup& G = *A.parent;
  // Invariant prefilter: multiset of element orders must agree.
  auto order_profile = [&](const Subgroup& S) {
    std::vector<int> v;
    v.reserve(S.elems.size());
    for (int e : S.elems) v.push_back(G.elem_order(e));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (order_profile(A) != order_profile(B)) return false;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int e : A.gens.empty() ? A.elems : A.gens) {
      if (!B.contains(G.conj(g, e))) { ok = false; break; }
    }
    if (!ok) continue;
    // With generators only checked, confirm the full image matches.
    Subgroup img = conjugate_subgroup(A, g);
    if (img.elems == B.elems) {
      if (witness) *witness = g;
      return true;
    }
  }
  return false;
}

bool is_subset(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::shared_ptr<PermutationGroup> subgroup_as_group(const Subgroup& S) {
  std::vector<Perm> gens;
  for (int g : S.gens) gens.push_back(S.parent->elem(g));
  if (gens.empty() && S.elems.size() > 1)
    for (int e : S.elems) gens.push_back(S.parent->elem(e));
  auto G = std::make_shared<PermutationGroup>(S.parent->degree(), gens);
  if (G->order() != S.order())
    throw std::runtime_error("subgroup_as_group: generator mismatch");
  return G;
}

Subgroup centralizer(const PermutationGroup& G, const std::vector<int>& of_elems) {
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int e : of_elems)
      if (G.conj(g, e) != e) { ok = false; break; }
    if (ok) members.push_back(g);
  }
  Subgroup s;
  s.parent = &G;
  s.elems = std::move(members);
  s.gens = s.elems;  // coarse but always valid
  return s;
}

Subgroup centralizer_subgroup(const PermutationGroup& G, const Subgroup& S) {
  return centralizer(G, S.gens.empty() ? S.elems : S.gens);
}

Subgroup centralizer_elem(const PermutationGroup& G, int s) {
  return centralizer(G, {s});
}

Subgroup normalizer(const PermutationGroup& G, const Subgroup& S) {
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int e : S.gens.empty() ? S.elems : S.gens)
      if (!S.contains(G.conj(g, e))) { ok = false; break; }
    if (ok) members.push_back(g);
  }
  Subgroup s;
  s.parent = &G;
  s.elems = std::move(members);
  s.gens = s.elems;
  return s;
}

Subgroup pair_normalizer(const PermutationGroup& G, const Subgroup& P, int s) {
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g) {
    if (G.conj(g, s) != s) continue;
    bool ok = true;
    for (int e : P.gens.empty() ? P.elems : P.gens)
      if (!P.contains(G.conj(g, e))) { ok = false; break; }
    if (ok) members.push_back(g);
  }
  Subgroup r;
  r.parent = &G;
  r.elems = std::move(members);
  r.gens = r.elems;
  return r;
}

Subgroup closure(const PermutationGroup& G, std::vector<int> seed_elems) {
  return make_subgroup(G, std::move(seed_elems));
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  Subgroup r;
  r.parent = A.parent;
  std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                        std::back_inserter(r.elems));
  r.gens = r.elems;
  return r;
}

Subgroup center(const PermutationGroup& G) {
  std::vector<int> gen_ids;
  for (const auto& g : G.generators()) gen_ids.push_back(G.index_of(g));
  return centralizer(G, gen_ids);
}

bool is_normal_in(const Subgroup& N, const Subgroup& H) {
  const PermutationGroup& G = *N.parent;
  for (int h : H.gens.empty() ? H.elems : H.gens)
    for (int e : N.gens.empty() ? N.elems : N.gens)
      if (!N.contains(G.conj(h, e))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const PermutationGroup& G) {
  // Cyclic seeding followed by pairwise join until closure.
  std::map<std::vector<int>, Subgroup> found;
  Subgroup triv = trivial_subgroup(G);
  found.emplace(triv.elems, triv);
  for (int x = 1; x < G.order(); ++x) {
    Subgroup c = make_subgroup(G, {x});
    found.emplace(c.elems, std::move(c));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const Subgroup*> snapshot;
    snapshot.reserve(found.size());
    for (auto& [k, v] : found) snapshot.push_back(&v);
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> seed = snapshot[i]->gens;
        seed.insert(seed.end(), snapshot[j]->gens.begin(), snapshot[j]->gens.end());
        if (seed.empty()) continue;
        Subgroup join = make_subgroup(G, std::move(seed));
        if (!found.count(join.elems)) {
          found.emplace(join.elems, std::move(join));
          grew = true;
        }
      }
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return out;
}

Subgroup sylow_subgroup(const PermutationGroup& G, int p) {
  if (p < 2) throw std::invalid_argument("sylow_subgroup: p must be a prime");
  long long target = p_part(G.order(), p);
  Subgroup S = trivial_subgroup(G);
  while (S.order() < target) {
    Subgroup N = normalizer(G, S);
    bool extended = false;
    for (int x : N.elems) {
      if (S.contains(x)) continue;
      int xp = G.p_decomposition(x, p).first;
      if (xp == 0 || S.contains(xp)) continue;
      std::vector<int> seed = S.gens;
      seed.push_back(xp);
      S = make_subgroup(G, std::move(seed));
      extended = true;
      break;
    }
    if (!extended)
      throw std::runtime_error("sylow_subgroup: stalled before reaching full p-part");
  }
  return S;
}

std::vector<Subgroup> p_subgroup_classes(const PermutationGroup& G, int p) {
  Subgroup syl = sylow_subgroup(G, p);
  std::vector<Subgroup> reps;
  if (syl.order() == 1) {
    reps.push_back(trivial_subgroup(G));
    return reps;
  }
  // Every p-subgroup is conjugate into the Sylow, so enumerate inside it.
  auto sylG = subgroup_as_group(syl);
  std::vector<Subgroup> inside = all_subgroups(*sylG);
  for (const auto& sub : inside) {
    // Re-express with parent indices.
    std::vector<int> gen_ids;
    for (int g : sub.gens) gen_ids.push_back(G.index_of(sylG->elem(g)));
    Subgroup cand = gen_ids.empty() ? trivial_subgroup(G) : make_subgroup(G, gen_ids);
    bool fresh = true;
    for (const auto& r : reps)
      if (subgroups_conjugate(cand, r)) { fresh = false; break; }
    if (fresh) reps.push_back(std::move(cand));
  }
  std::sort(reps.begin(), reps.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return reps;
}

std::vector<Subgroup> all_p_subgroups(const PermutationGroup& G, int p) {
  std::vector<Subgroup> classes = p_subgroup_classes(G, p);
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  for (const auto& rep : classes) {
    for (int g = 0; g < G.order(); ++g) {
      Subgroup c = conjugate_subgroup(rep, g);
      if (seen.insert(c.elems).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elems < b.elems;
  });
  return out;
}

std::shared_ptr<PermutationGroup> cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: n >= 1");
  if (n == 1) return std::make_shared<PermutationGroup>(1, std::vector<Perm>{});
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return std::make_shared<PermutationGroup>(n, std::vector<Perm>{Perm(img)});
}

std::shared_ptr<PermutationGroup> symmetric_group(int n) {
  if (n < 1) throw std::invalid_argument("symmetric_group: n >= 1");
  if (n == 1) return std::make_shared<PermutationGroup>(1, std::vector<Perm>{});
  std::vector<Perm> gens;
  std::vector<int> t(n);
  std::iota(t.begin(), t.end(), 0);
  std::swap(t[0], t[1]);
  gens.emplace_back(t);
  if (n > 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(c);
  }
  return std::make_shared<PermutationGroup>(n, std::move(gens));
}

std::shared_ptr<PermutationGroup> alternating_group(int n) {
  if (n < 1) throw std::invalid_argument("alternating_group: n >= 1");
  if (n <= 2) return std::make_shared<PermutationGroup>(std::max(n, 1), std::vector<Perm>{});
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    img[0] = 1; img[1] = k; img[k] = 0;  // the 3-cycle (1 2 k+1)
    gens.emplace_back(img);
  }
  return std::make_shared<PermutationGroup>(n, std::move(gens));
}

std::shared_ptr<PermutationGroup> dihedral_group(int n) {
  if (n < 1) throw std::invalid_argument("dihedral_group: n >= 1");
  if (n == 1) return cyclic_group(2);
  if (n == 2) return klein_four_group();
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return std::make_shared<PermutationGroup>(n, std::vector<Perm>{Perm(rot), Perm(refl)});
}

std::shared_ptr<PermutationGroup> klein_four_group() {
  return std::make_shared<PermutationGroup>(
      4, std::vector<Perm>{Perm({1, 0, 3, 2}), Perm({2, 3, 0, 1})});
}

ProductEmbedding direct_product(const PermutationGroup& G, const PermutationGroup& H) {
  int dG = G.degree(), dH = H.degree();
  auto embed_left = [&](const Perm& p) {
    std::vector<int> img(dG + dH);
    for (int i = 0; i < dG; ++i) img[i] = p(i);
    for (int i = 0; i < dH; ++i) img[dG + i] = dG + i;
    return Perm(img);
  };
  auto embed_right = [&](const Perm& p) {
    std::vector<int> img(dG + dH);
    for (int i = 0; i < dG; ++i) img[i] = i;
    for (int i = 0; i < dH; ++i) img[dG + i] = dG + p(i);
    return Perm(img);
  };
  std::vector<Perm> gens;
  for (const auto& g : G.generators()) gens.push_back(embed_left(g));
  for (const auto& h : H.generators()) gens.push_back(embed_right(h));
  auto prod = std::make_shared<PermutationGroup>(dG + dH, std::move(gens));
  if (prod->order() != static_cast<long long>(G.order()) * H.order())
    throw std::runtime_error("direct_product: order mismatch");

  auto itp = std::make_shared<std::vector<std::pair<int, int>>>(prod->order());
  auto pti = std::make_shared<std::unordered_map<long long, int>>();
  for (int i = 0; i < prod->order(); ++i) {
    const Perm& p = prod->elem(i);
    std::vector<int> a(p.img.begin(), p.img.begin() + dG);
    std::vector<int> b(dH);
    for (int j = 0; j < dH; ++j) b[j] = p.img[dG + j] - dG;
    int ga = G.index_of(Perm(a));
    int hb = H.index_of(Perm(b));
    (*itp)[i] = {ga, hb};
    (*pti)[static_cast<long long>(ga) * H.order() + hb] = i;
  }
  int hOrder = H.order();
  ProductEmbedding result;
  result.group = prod;
  result.pair_to_index = [pti, hOrder](int a, int b) {
    return pti->at(static_cast<long long>(a) * hOrder + b);
  };
  result.index_to_pair = [itp](int i) { return (*itp)[i]; };
  return result;
}

std::shared_ptr<PermutationGroup> group_from_table(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  auto left_mult = [&](int g) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = table[g][x];
    return Perm(img);
  };
  // Greedy generating set over the regular representation.
  std::vector<Perm> gens;
  Subgroup have;
  auto probe = std::make_shared<PermutationGroup>(n, gens);
  for (int g = 1; g < n; ++g) {
    if (probe->contains(left_mult(g))) continue;
    gens.push_back(left_mult(g));
    probe = std::make_shared<PermutationGroup>(n, gens);
    if (probe->order() == n) break;
  }
  if (probe->order() != n)
    throw std::runtime_error("group_from_table: table is not a group table");
  return probe;
}

QuotientResult quotient_by_normal(const PermutationGroup& E, const Subgroup& N) {
  int n = E.order();
  // Coset of e is identified by the minimal element index of eN.
  std::vector<int> coset_min(n, -1);
  std::vector<int> coset_id(n, -1);
  int num_cosets = 0;
  for (int e = 0; e < n; ++e) {
    if (coset_id[e] >= 0) continue;
    int mn = e;
    std::vector<int> members;
    for (int x : N.elems) {
      int m = E.mul(e, x);
      members.push_back(m);
      mn = std::min(mn, m);
    }
    for (int m : members) {
      coset_min[m] = mn;
      coset_id[m] = num_cosets;
    }
    ++num_cosets;
  }
  auto act = [&](int g) {
    std::vector<int> img(num_cosets, -1);
    for (int e = 0; e < n; ++e) {
      int from = coset_id[e];
      if (img[from] >= 0) continue;
      img[from] = coset_id[E.mul(g, e)];
    }
    return Perm(img);
  };
  std::vector<Perm> gens;
  for (const auto& g : E.generators()) gens.push_back(act(E.index_of(g)));
  auto Q = std::make_shared<PermutationGroup>(num_cosets, gens);
  if (Q->order() * N.order() != n)
    throw std::runtime_error("quotient_by_normal: subgroup not normal");
  auto proj_table = std::make_shared<std::vector<int>>(n);
  for (int e = 0; e < n; ++e) (*proj_table)[e] = Q->index_of(act(e));
  QuotientResult r;
  r.group = Q;
  r.project = [proj_table](int e) { return (*proj_table)[e]; };
  return r;
}

SemidirectResult extension_by_automorphism(const PermutationGroup& P,
                                           const std::vector<int>& theta, int n) {
  int m = P.order();
  if (static_cast<int>(theta.size()) != m)
    throw std::invalid_argument("extension_by_automorphism: theta size mismatch");
  // Validate: automorphism with theta^n = identity.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (theta[P.mul(a, b)] != P.mul(theta[a], theta[b]))
        throw std::invalid_argument("extension_by_automorphism: theta is not a homomorphism");
  std::vector<std::vector<int>> theta_pow(n, std::vector<int>(m));
  std::iota(theta_pow[0].begin(), theta_pow[0].end(), 0);
  for (int k = 1; k < n; ++k)
    for (int a = 0; a < m; ++a) theta_pow[k][a] = theta[theta_pow[k - 1][a]];
  for (int a = 0; a < m; ++a)
    if (theta[theta_pow[n - 1][a]] != a)
      throw std::invalid_argument("extension_by_automorphism: theta^n != id");

  // Points are pairs (x in P, i in Z_n) with index x*n + i.  The element
  // (g, k) acts on the left: (y, j) -> (g * theta^k(y), k + j).
  int deg = m * n;
  auto left_mult = [&](int g, int k) {
    std::vector<int> img(deg);
    for (int y = 0; y < m; ++y)
      for (int j = 0; j < n; ++j)
        img[y * n + j] = P.mul(g, theta_pow[k][y]) * n + (k + j) % n;
    return Perm(img);
  };
  std::vector<Perm> gens;
  for (const auto& pg : P.generators()) gens.push_back(left_mult(P.index_of(pg), 0));
  gens.push_back(left_mult(0, 1 % n));
  auto E = std::make_shared<PermutationGroup>(deg, gens);
  if (E->order() != deg)
    throw std::runtime_error("extension_by_automorphism: unexpected extension order");
  SemidirectResult r;
  r.group = E;
  for (const auto& pg : P.generators())
    r.p_gen_ids.push_back(E->index_of(left_mult(P.index_of(pg), 0)));
  r.s_id = E->index_of(left_mult(0, 1 % n));
  return r;
}

Subgroup join_with_element(const Subgroup& L, int u) {
  std::vector<int> seed = L.gens.empty() ? L.elems : L.gens;
  seed.push_back(u);
  return make_subgroup(*L.parent, std::move(seed));
}

} // namespace ppf::grp
