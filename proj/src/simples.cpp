#include "ppf/simples.hpp"

#include <algorithm>
#include <stdexcept>

namespace ppf::sim {

using grp::Iso;
using grp::PermutationGroup;
using grp::Subgroup;

std::string DDeltaPair::name(int char_row) const {
  return "L=" + l_name + ",|u|=" + std::to_string(u_order) +
         ",V=" + std::to_string(char_row);
}

namespace {

int iso_order(const Iso& f) {
  Iso cur = f;
  int n = 1;
  while (cur.img != cur.src_elems) {
    cur = compose_iso(f, cur);
    ++n;
    if (n > 1000000) throw std::runtime_error("iso_order: runaway");
  }
  return n;
}

bool is_p_prime(int n, int p) { return n % p != 0; }

} // namespace

std::vector<DDeltaPair> enumerate_ddelta(int p, int bound) {
  if (bound > p_group_inventory_bound(p))
    throw std::invalid_argument("enumerate_ddelta: bound exceeds the p-group inventory");
  std::vector<DDeltaPair> out;
  for (const SmallGroup& sg : p_group_inventory(p)) {
    const PermutationGroup& L = *sg.group;
    if (L.order() > bound) continue;
    Subgroup whole = grp::whole_group(L);
    std::vector<pp::AbstractPair> kept;
    std::vector<int> kept_order;
    for (const Iso& f : grp::automorphisms(whole)) {
      int n = iso_order(f);
      if (!is_p_prime(n, p)) continue;
      grp::SemidirectResult ext = grp::extension_by_automorphism(L, f.img, n);
      pp::AbstractPair cand;
      cand.E = ext.group;
      cand.L = ext.p_gen_ids.empty() ? grp::trivial_subgroup(*ext.group)
                                     : grp::make_subgroup(*ext.group, ext.p_gen_ids);
      cand.u = ext.s_id;
      if (cand.L.order() != L.order())
        throw std::runtime_error("enumerate_ddelta: embedding failure");
      bool fresh = true;
      for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept_order[i] != n) continue;
        if (pp::pair_isomorphic(kept[i], cand)) { fresh = false; break; }
      }
      if (!fresh) continue;
      kept.push_back(std::move(cand));
      kept_order.push_back(n);
    }
    // Sort the new pairs by order of u for determinism.
    std::vector<std::size_t> order_idx(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) order_idx[i] = i;
    std::stable_sort(order_idx.begin(), order_idx.end(),
                     [&](std::size_t a, std::size_t b) { return kept_order[a] < kept_order[b]; });
    for (std::size_t i : order_idx) {
      DDeltaPair d;
      d.l_name = sg.name;
      d.u_order = kept_order[i];
      d.pair = kept[i];
      d.out = pp::out_lu(d.pair);
      d.table = ct::character_table(*d.out.model);
      out.push_back(std::move(d));
    }
  }
  return out;
}

int eval_simple_dim(const PermutationGroup& G, int p, const DDeltaPair& lu,
                    int char_row) {
  pp::PairIndex pairs = pp::enumerate_pairs(G, p);
  int dim = 0;
  for (const pp::Pair& pr : pairs.reps) {
    if (pr.P.order() != lu.pair.L.order()) continue;
    Iso phi;
    if (!pp::has_twisting_iso(G, pr.P, pr.s, lu.pair, &phi)) continue;
    std::vector<int> image = pp::normalizer_image_in_out(G, pr.P, pr.s, lu.out, phi);
    std::vector<int> model_elems;
    model_elems.reserve(image.size());
    for (int id : image) model_elems.push_back(lu.out.to_model[id]);
    dim += ct::fixed_space_dim(lu.table, char_row, model_elems);
  }
  return dim;
}

FunctorDecomposition decompose_representable(const PermutationGroup& G, int p) {
  int bound = 1;
  int n = G.order();
  while (n % p == 0) { n /= p; bound *= p; }
  FunctorDecomposition d;
  d.pairs = enumerate_ddelta(p, bound);
  for (std::size_t i = 0; i < d.pairs.size(); ++i)
    for (int row = 0; row < d.pairs[i].table.num_chars(); ++row) {
      d.labels.emplace_back(static_cast<int>(i), row);
      d.multiplicity.push_back(eval_simple_dim(G, p, d.pairs[i], row));
    }
  return d;
}

long long finiteness_bound(const PermutationGroup& D) {
  std::vector<Subgroup> subs = grp::all_subgroups(D);
  long long n_d = static_cast<long long>(subs.size());
  long long m_d = 1;
  for (const Subgroup& s : subs)
    m_d = std::max(m_d, static_cast<long long>(grp::automorphisms(s).size()));
  return n_d * 2 * D.order() * D.order() * m_d;
}

EluAlgebra elu_algebra(const DDeltaPair& lu, int p) {
  EluAlgebra e;
  std::shared_ptr<const PermutationGroup> E = lu.pair.E;
  e.idx = pp::diagonal_pair_classes(E, E, p);
  for (int g = 0; g < lu.out.order(); ++g) {
    const Iso& gamma = lu.out.aut_u[lu.out.rep_of[g]];
    Subgroup delta = pp::twisted_diagonal(e.idx.ctx, gamma, lu.pair.L);
    int st = e.idx.ctx.GK.pair_to_index(lu.pair.u, lu.pair.u);
    int cls = e.idx.class_of(delta, st);
    if (cls < 0) throw std::runtime_error("elu_algebra: basis class not found");
    e.basis_class.push_back(cls);
  }
  // Distinct outer classes give distinct diagonal classes.
  std::vector<int> sorted = e.basis_class;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::runtime_error("elu_algebra: basis classes collide");
  return e;
}

} // namespace ppf::sim
