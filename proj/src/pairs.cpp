#include "ppf/pairs.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace ppf::pp {

using grp::Iso;
using grp::Perm;
using grp::PermutationGroup;
using grp::Subgroup;

bool pairs_conjugate(const PermutationGroup& G, const Subgroup& P1, int s1,
                     const Subgroup& P2, int s2, int* witness) {
  if (P1.elems.size() != P2.elems.size()) return false;
  if (G.elem_order(s1) != G.elem_order(s2)) return false;
  const std::vector<int>& gens1 = P1.gens.empty() ? P1.elems : P1.gens;
  for (int g = 0; g < G.order(); ++g) {
    if (G.conj(g, s1) != s2) continue;
    bool ok = true;
    for (int e : gens1)
      if (!P2.contains(G.conj(g, e))) { ok = false; break; }
    if (!ok) continue;
    if (grp::conjugate_subgroup(P1, g).elems == P2.elems) {
      if (witness) *witness = g;
      return true;
    }
  }
  return false;
}

PairIndex enumerate_pairs(const PermutationGroup& G, int p) {
  PairIndex idx;
  idx.G = &G;
  idx.p = p;
  for (const Subgroup& P : grp::p_subgroup_classes(G, p)) {
    Subgroup N = grp::normalizer(G, P);
    // Two pairs with the same P are G-conjugate exactly when the s parts
    // are N_G(P)-conjugate, so keep the minimal element of each N-orbit.
    for (int s : N.elems) {
      if (!G.is_p_prime_element(s, p)) continue;
      bool minimal = true;
      for (int n : N.elems)
        if (G.conj(n, s) < s) { minimal = false; break; }
      if (!minimal) continue;
      idx.reps.push_back({P, s});
    }
  }
  return idx;
}

int PairIndex::class_of(const Subgroup& P, int s) const {
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i].P.elems.size() != P.elems.size()) continue;
    if (G->elem_order(reps[i].s) != G->elem_order(s)) continue;
    if (pairs_conjugate(*G, P, s, reps[i].P, reps[i].s)) return static_cast<int>(i);
  }
  return -1;
}

AbstractPair abstract_pair(const PermutationGroup& G, const Subgroup& P, int s) {
  Subgroup E_sub = grp::join_with_element(P, s);
  AbstractPair a;
  a.E = grp::subgroup_as_group(E_sub);
  std::vector<int> l_gens;
  for (int g : P.gens.empty() ? P.elems : P.gens)
    l_gens.push_back(a.E->index_of(G.elem(g)));
  a.L = l_gens.empty() ? grp::trivial_subgroup(*a.E) : grp::make_subgroup(*a.E, l_gens);
  a.u = a.E->index_of(G.elem(s));
  if (a.u < 0 || a.L.order() != P.order())
    throw std::runtime_error("abstract_pair: embedding failure");
  return a;
}

Subgroup cyclic_centralizer(const AbstractPair& a) {
  Subgroup cyc = grp::make_subgroup(*a.E, {a.u});
  Subgroup cent = grp::centralizer_subgroup(*a.E, a.L);
  return grp::intersect(cyc, cent);
}

bool is_reduced(const AbstractPair& a) { return cyclic_centralizer(a).order() == 1; }

AbstractPair reduce_abstract_pair(const AbstractPair& a) {
  Subgroup C = cyclic_centralizer(a);
  if (C.order() == 1) return a;
  grp::QuotientResult q = grp::quotient_by_normal(*a.E, C);
  AbstractPair r;
  r.E = q.group;
  std::vector<int> l_gens;
  for (int g : a.L.gens.empty() ? a.L.elems : a.L.gens) l_gens.push_back(q.project(g));
  r.L = l_gens.empty() ? grp::trivial_subgroup(*r.E) : grp::make_subgroup(*r.E, l_gens);
  r.u = q.project(a.u);
  if (r.L.order() != a.L.order())
    throw std::runtime_error("reduce_abstract_pair: quotient not faithful on L");
  return r;
}

AbstractPair reduce_pair(const PermutationGroup& G, const Subgroup& P, int s) {
  return reduce_abstract_pair(abstract_pair(G, P, s));
}

bool pair_isomorphic(const AbstractPair& a, const AbstractPair& b, Iso* witness) {
  if (a.E->order() != b.E->order()) return false;
  if (a.L.order() != b.L.order()) return false;
  if (a.E->elem_order(a.u) != b.E->elem_order(b.u)) return false;
  Subgroup wa = grp::whole_group(*a.E);
  Subgroup wb = grp::whole_group(*b.E);
  int ub_class = b.E->class_of(b.u);
  bool hit = false;
  grp::visit_isomorphisms(wa, wb, [&](const Iso& f) {
    if (b.E->class_of(f.apply(a.u)) != ub_class) return false;
    for (int l : a.L.gens.empty() ? a.L.elems : a.L.gens)
      if (!b.L.contains(f.apply(l))) return false;
    hit = true;
    if (witness) *witness = f;
    return true;
  });
  return hit;
}

ProductContext make_product_context(std::shared_ptr<const PermutationGroup> G,
                                    std::shared_ptr<const PermutationGroup> K, int p) {
  ProductContext ctx;
  ctx.G = std::move(G);
  ctx.K = std::move(K);
  ctx.GK = grp::direct_product(*ctx.G, *ctx.K);
  ctx.p = p;
  return ctx;
}

Subgroup twisted_diagonal(const ProductContext& ctx, const Iso& gamma, const Subgroup& W) {
  Subgroup d;
  d.parent = ctx.GK.group.get();
  for (std::size_t i = 0; i < W.elems.size(); ++i)
    d.elems.push_back(ctx.GK.pair_to_index(gamma.img[i], W.elems[i]));
  std::sort(d.elems.begin(), d.elems.end());
  for (int w : W.gens)
    d.gens.push_back(ctx.GK.pair_to_index(gamma.apply(w), w));
  return d;
}

namespace {

// Decomposes a twisted-diagonal class of the product into (U, gamma, W, s, t).
bool fill_diagonal_data(const ProductContext& ctx, DiagonalPairClass& c) {
  const PermutationGroup& G = *ctx.G;
  const PermutationGroup& K = *ctx.K;
  std::vector<std::pair<int, int>> pairs;
  std::set<int> firsts, seconds;
  for (int e : c.Delta.elems) {
    auto [a, b] = ctx.GK.index_to_pair(e);
    pairs.emplace_back(a, b);
    firsts.insert(a);
    seconds.insert(b);
  }
  if (firsts.size() != pairs.size() || seconds.size() != pairs.size()) return false;
  c.U.parent = &G;
  c.U.elems.assign(firsts.begin(), firsts.end());
  c.W.parent = &K;
  c.W.elems.assign(seconds.begin(), seconds.end());
  for (int d : c.Delta.gens) {
    auto [a, b] = ctx.GK.index_to_pair(d);
    c.U.gens.push_back(a);
    c.W.gens.push_back(b);
  }
  // gamma maps the second component to the first.
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  c.gamma.src_parent = &K;
  c.gamma.dst_parent = &G;
  for (auto& [a, b] : pairs) {
    c.gamma.src_elems.push_back(b);
    c.gamma.img.push_back(a);
  }
  auto [s, t] = ctx.GK.index_to_pair(c.st);
  c.s = s;
  c.t = t;
  return true;
}

} // namespace

DiagIndex diagonal_pair_classes(std::shared_ptr<const PermutationGroup> G,
                                std::shared_ptr<const PermutationGroup> K, int p) {
  DiagIndex idx;
  idx.ctx = make_product_context(std::move(G), std::move(K), p);
  PairIndex pairs = enumerate_pairs(*idx.ctx.GK.group, p);
  for (const Pair& pr : pairs.reps) {
    DiagonalPairClass c;
    c.Delta = pr.P;
    c.st = pr.s;
    if (fill_diagonal_data(idx.ctx, c)) idx.classes.push_back(std::move(c));
  }
  return idx;
}

int DiagIndex::class_of(const Subgroup& Delta, int st) const {
  auto key = std::make_pair(Delta.elems, st);
  {
    std::lock_guard<std::mutex> lock(*memo_lock_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const PermutationGroup& GK = *ctx.GK.group;
  int result = -1;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].Delta.elems.size() != Delta.elems.size()) continue;
    if (GK.elem_order(classes[i].st) != GK.elem_order(st)) continue;
    if (pairs_conjugate(GK, Delta, st, classes[i].Delta, classes[i].st)) {
      result = static_cast<int>(i);
      break;
    }
  }
  std::lock_guard<std::mutex> lock(*memo_lock_);
  memo_.emplace(std::move(key), result);
  return result;
}

std::vector<GammaTriple> gamma_triples(const PermutationGroup& H, int p,
                                       const Subgroup& U, const Iso& gamma,
                                       const Subgroup& W) {
  std::vector<GammaTriple> out;
  for (const Subgroup& V : grp::all_p_subgroups(H, p)) {
    if (V.elems.size() != U.elems.size()) continue;
    for (Iso& beta : grp::isomorphisms(W, V)) {
      GammaTriple t;
      t.alpha = compose_iso(gamma, beta.inverse());
      t.V = V;
      t.beta = std::move(beta);
      out.push_back(std::move(t));
    }
  }
  return out;
}

int OutLu::invert(int a) const {
  for (int b = 0; b < order(); ++b)
    if (mul[a][b] == identity) return b;
  throw std::runtime_error("OutLu::invert: no inverse found");
}

OutLu out_lu(const AbstractPair& lu) {
  OutLu out;
  out.pair = lu;
  const PermutationGroup& E = *lu.E;
  Iso iu = grp::conjugation_iso(lu.L, lu.u);
  for (Iso& f : grp::automorphisms(lu.L)) {
    if (compose_iso(f, iu).img == compose_iso(iu, f).img) out.aut_u.push_back(std::move(f));
  }
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < out.aut_u.size(); ++i)
    index_of.emplace(out.aut_u[i].img, static_cast<int>(i));

  // Inner part: conjugation by centralizer elements of u, restricted to L.
  std::set<std::vector<int>> inner;
  for (int c : grp::centralizer_elem(E, lu.u).elems)
    inner.insert(grp::conjugation_iso(lu.L, c).img);

  out.coset_of.assign(out.aut_u.size(), -1);
  // The identity coset is numbered first so the multiplication table has
  // the identity at index 0.
  std::vector<int> start_order;
  start_order.push_back(index_of.at(identity_iso(lu.L).img));
  for (std::size_t i = 0; i < out.aut_u.size(); ++i) start_order.push_back(static_cast<int>(i));
  for (int i : start_order) {
    if (out.coset_of[i] >= 0) continue;
    int id = static_cast<int>(out.rep_of.size());
    out.rep_of.push_back(i);
    for (const std::vector<int>& inn_img : inner) {
      Iso inn;
      inn.src_parent = &E;
      inn.dst_parent = &E;
      inn.src_elems = lu.L.elems;
      inn.img = inn_img;
      int j = index_of.at(compose_iso(out.aut_u[i], inn).img);
      out.coset_of[j] = id;
    }
  }
  out.identity = 0;

  int n = out.order();
  out.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Iso prod = compose_iso(out.aut_u[out.rep_of[a]], out.aut_u[out.rep_of[b]]);
      out.mul[a][b] = out.coset_of[index_of.at(prod.img)];
    }

  out.model = grp::group_from_table(out.mul);
  out.to_model.resize(n);
  out.from_model.resize(n);
  for (int g = 0; g < n; ++g) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = out.mul[g][x];
    int m = out.model->index_of(Perm(img));
    if (m < 0) throw std::runtime_error("out_lu: regular model mismatch");
    out.to_model[g] = m;
    out.from_model[m] = g;
  }
  return out;
}

int out_class_of(const OutLu& out, const Iso& f) {
  for (std::size_t i = 0; i < out.aut_u.size(); ++i)
    if (out.aut_u[i].img == f.img) return out.coset_of[i];
  throw std::runtime_error("out_class_of: automorphism not in Aut_u(L)");
}

bool has_twisting_iso(const PermutationGroup& G, const Subgroup& P, int s,
                      const AbstractPair& lu, Iso* phi) {
  const PermutationGroup& E = *lu.E;
  const std::vector<int>& l_gens = lu.L.gens.empty() ? lu.L.elems : lu.L.gens;
  bool hit = false;
  grp::visit_isomorphisms(lu.L, P, [&](const Iso& f) {
    for (int l : l_gens)
      if (f.apply(E.conj(lu.u, l)) != G.conj(s, f.apply(l))) return false;
    hit = true;
    if (phi) *phi = f;
    return true;
  });
  return hit;
}

Iso find_twisting_iso(const PermutationGroup& G, const Subgroup& P, int s,
                      const AbstractPair& lu) {
  Iso phi;
  if (!has_twisting_iso(G, P, s, lu, &phi))
    throw std::runtime_error("find_twisting_iso: no twisting isomorphism exists");
  return phi;
}

std::vector<int> normalizer_image_in_out(const PermutationGroup& G,
                                         const Subgroup& P, int s,
                                         const OutLu& out, const Iso& phi) {
  Subgroup N = pair_normalizer(G, P, s);
  Iso phi_inv = phi.inverse();
  std::set<int> classes;
  for (int g : N.elems) {
    Iso ig = grp::conjugation_iso(P, g);
    Iso a = compose_iso(phi_inv, compose_iso(ig, phi));
    classes.insert(out_class_of(out, a));
  }
  return std::vector<int>(classes.begin(), classes.end());
}

} // namespace ppf::pp
