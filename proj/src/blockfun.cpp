#include "ppf/blockfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ppf::bf {

using grp::Iso;
using grp::PermutationGroup;
using grp::Subgroup;

namespace {

int p_part(int n, int p) {
  int r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

int augmentation(const mb::GroupAlgebraContext& ctx, const mb::AlgElt& a) {
  int s = 0;
  for (int v : a) s = ctx.F->add(s, v);
  return s;
}

// pi o i_u o pi^-1 as an automorphism of P = pi(L).
Iso conjugation_through(const Iso& pi, const Iso& i_u) {
  return grp::compose_iso(pi, grp::compose_iso(i_u, pi.inverse()));
}

// First element of `candidates` (indices into G) realizing alpha on P by
// conjugation, optionally restricted to p'-elements; -1 if none.
int find_realizer(const PermutationGroup& G, const std::vector<int>& candidates,
                  const Subgroup& P, const Iso& alpha, int p_prime_of) {
  for (int g : candidates) {
    if (p_prime_of > 0 && !G.is_p_prime_element(g, p_prime_of)) continue;
    if (grp::conjugation_iso(P, g) == alpha) return g;
  }
  return -1;
}

// Index map h -> x^-1 h x on a centralizer subcontext, for x in G.
std::vector<int> twist_map(const mb::GroupAlgebraContext& ctx,
                           const mb::SubContext& cg, int x_in_G) {
  const PermutationGroup& G = *ctx.G;
  int xi = G.inv(x_in_G);
  std::vector<int> sigma(cg.to_parent.size());
  for (std::size_t h = 0; h < sigma.size(); ++h) {
    int t = cg.from_parent[G.conj(xi, cg.to_parent[h])];
    if (t < 0) throw std::runtime_error("twist_map: element does not normalize the centralizer");
    sigma[h] = t;
  }
  return sigma;
}

int locate_simple(const mb::GroupAlgebraContext& hctx,
                  const std::vector<mb::SimpleModule>& simples,
                  const mb::SimpleModule& m) {
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (mb::modules_isomorphic(hctx, simples[i], m)) return static_cast<int>(i);
  throw std::runtime_error("locate_simple: twisted module escapes the simple list");
}

// The permutation induced on a list of simples by the twist h -> x^-1 h x.
std::vector<int> twist_permutation(const mb::GroupAlgebraContext& hctx,
                                   const std::vector<mb::SimpleModule>& simples,
                                   const std::vector<int>& sigma) {
  std::vector<int> perm(simples.size());
  for (std::size_t i = 0; i < simples.size(); ++i)
    perm[i] = locate_simple(hctx, simples, mb::twist_module(hctx, simples[i], sigma));
  return perm;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

} // namespace

Block assemble_block(const mb::GroupAlgebraContext& ctx, const mb::AlgElt& b,
                     const mb::AlgElt* max_block_hint,
                     const Subgroup* defect_override) {
  const PermutationGroup& G = *ctx.G;
  Block B;
  B.ctx = ctx;
  B.b = b;
  B.principal = augmentation(ctx, b) == 1;
  B.defect = mb::defect_group(ctx, b);
  if (defect_override) {
    if (!grp::subgroups_conjugate(B.defect, *defect_override))
      throw std::invalid_argument("assemble_block: defect override is not a defect group");
    B.defect = *defect_override;
  }
  B.pairs = mb::brauer_pairs_and_fusion(ctx, b, B.defect, max_block_hint);
  for (const Subgroup& P : grp::p_subgroup_classes(G, ctx.p)) {
    Block::Local loc;
    loc.P = P;
    loc.cg = mb::sub_context(ctx, grp::centralizer_subgroup(G, P));
    loc.brb = mb::restrict_elt(loc.cg, mb::brauer_morphism(ctx, P, b));
    if (!mb::alg_is_zero(loc.brb)) {
      for (const mb::AlgElt& e : mb::central_idempotents(loc.cg.ctx)) {
        if (!(mb::alg_mul(loc.cg.ctx, e, loc.brb) == e)) continue;
        int tag = static_cast<int>(loc.blocks.size());
        for (mb::SimpleModule& s : mb::block_simples(loc.cg.ctx, e)) {
          loc.simples.push_back(std::move(s));
          loc.block_of_simple.push_back(tag);
        }
        loc.blocks.push_back(e);
      }
    }
    B.local.push_back(std::move(loc));
  }
  for (int r : B.pairs.rep_index) {
    Block::PairLocal pl;
    pl.cg = mb::sub_context(ctx, grp::centralizer_subgroup(G, B.pairs.subgroups[r]));
    pl.simples = mb::block_simples(pl.cg.ctx, mb::restrict_elt(pl.cg, B.pairs.e[r]));
    B.pair_local.push_back(std::move(pl));
  }
  return B;
}

std::vector<Block> analyze_blocks(std::shared_ptr<const PermutationGroup> G, int p) {
  mb::GroupAlgebraContext ctx = mb::make_context(std::move(G), p);
  std::vector<Block> out;
  for (const mb::AlgElt& b : mb::central_idempotents(ctx))
    out.push_back(assemble_block(ctx, b));
  return out;
}

int num_simples(const Block& block) {
  for (const Block::Local& loc : block.local)
    if (loc.P.order() == 1) return static_cast<int>(loc.simples.size());
  throw std::runtime_error("num_simples: trivial subgroup missing from local data");
}

PiSet pi_set(const Block& block, int pair_rep, const sim::DDeltaPair& lu) {
  const PermutationGroup& G = *block.ctx.G;
  int r = block.pairs.rep_index[pair_rep];
  const Subgroup& P = block.pairs.subgroups[r];
  const Subgroup& N = block.pairs.stabilizer[r];
  PiSet out;
  if (P.order() != lu.pair.L.order()) return out;
  Iso i_u = grp::conjugation_iso(lu.pair.L, lu.pair.u);
  std::vector<Iso> pis;
  for (const Iso& pi : grp::isomorphisms(lu.pair.L, P))
    if (find_realizer(G, N.elems, P, conjugation_through(pi, i_u), 0) >= 0)
      pis.push_back(pi);
  if (pis.empty()) return out;
  std::map<std::vector<int>, int> index_of;
  for (std::size_t i = 0; i < pis.size(); ++i) index_of[pis[i].img] = static_cast<int>(i);
  auto lookup = [&](const Iso& pi) {
    auto it = index_of.find(pi.img);
    if (it == index_of.end())
      throw std::runtime_error("pi_set: orbit move escapes the candidate set");
    return it->second;
  };
  UnionFind uf(static_cast<int>(pis.size()));
  for (std::size_t i = 0; i < pis.size(); ++i) {
    for (int g : N.elems)
      uf.unite(static_cast<int>(i),
               lookup(grp::compose_iso(grp::conjugation_iso(P, g), pis[i])));
    for (const Iso& phi : lu.out.aut_u)
      uf.unite(static_cast<int>(i), lookup(grp::compose_iso(pis[i], phi)));
  }
  std::map<int, int> root_to_rep;
  for (std::size_t i = 0; i < pis.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (root_to_rep.count(root)) continue;
    root_to_rep[root] = static_cast<int>(out.reps.size());
    out.reps.push_back(pis[i]);
    std::vector<std::pair<int, int>> stab;
    for (std::size_t a = 0; a < lu.out.aut_u.size(); ++a) {
      Iso target = grp::compose_iso(pis[i], lu.out.aut_u[a]);
      int g = -1;
      for (int cand : N.elems)
        if (grp::compose_iso(grp::conjugation_iso(P, cand), pis[i]) == target) {
          g = cand;
          break;
        }
      if (g >= 0) stab.emplace_back(static_cast<int>(a), g);
    }
    out.stabilizer.push_back(std::move(stab));
  }
  return out;
}

XiOrbitSet xi_orbits(const Block& block, const sim::DDeltaPair& lu) {
  const PermutationGroup& G = *block.ctx.G;
  const PermutationGroup& E = *lu.pair.E;
  Iso i_u = grp::conjugation_iso(lu.pair.L, lu.pair.u);

  // Elements of Y with the p-subgroup normalized to a class representative.
  struct LocalY {
    int local_idx = -1;
    std::vector<Iso> pis;                        // admissible isomorphisms L -> P
    std::map<std::vector<int>, int> pi_index;    // img -> position in pis
    std::vector<std::vector<int>> invariant;     // per pi: admissible simple ids
  };
  std::vector<LocalY> parts;
  struct Elem {
    int part, pi, simple;
  };
  std::vector<Elem> elems;
  std::map<std::tuple<int, int, int>, int> elem_index;
  for (std::size_t li = 0; li < block.local.size(); ++li) {
    const Block::Local& loc = block.local[li];
    if (loc.P.order() != lu.pair.L.order() || loc.simples.empty()) continue;
    Subgroup NP = grp::normalizer(G, loc.P);
    LocalY part;
    part.local_idx = static_cast<int>(li);
    for (const Iso& pi : grp::isomorphisms(lu.pair.L, loc.P)) {
      int s = find_realizer(G, NP.elems, loc.P, conjugation_through(pi, i_u),
                            block.ctx.p);
      if (s < 0) continue;
      part.pi_index[pi.img] = static_cast<int>(part.pis.size());
      part.pis.push_back(pi);
      part.invariant.push_back(mb::u_invariant_simples(
          loc.cg.ctx, loc.simples, twist_map(block.ctx, loc.cg, s)));
    }
    if (part.pis.empty()) continue;
    int pid = static_cast<int>(parts.size());
    for (std::size_t pi = 0; pi < part.pis.size(); ++pi)
      for (int f : part.invariant[pi]) {
        elem_index[{pid, static_cast<int>(pi), f}] = static_cast<int>(elems.size());
        elems.push_back({pid, static_cast<int>(pi), f});
      }
    parts.push_back(std::move(part));
  }

  XiOrbitSet xi;
  int n_out = lu.out.order();
  if (elems.empty()) {
    xi.action.assign(n_out, {});
    xi.fixed_count.assign(n_out, 0);
    return xi;
  }

  auto elem_of = [&](int part, const Iso& pi, int simple) {
    auto pit = parts[part].pi_index.find(pi.img);
    if (pit == parts[part].pi_index.end())
      throw std::runtime_error("xi_orbits: orbit move escapes the admissible set");
    auto it = elem_index.find({part, pit->second, simple});
    if (it == elem_index.end())
      throw std::runtime_error("xi_orbits: orbit move breaks u-invariance");
    return it->second;
  };

  UnionFind uf(static_cast<int>(elems.size()));
  // Cached twist permutations of the simple list, per (part, conjugator).
  std::map<std::pair<int, int>, std::vector<int>> tw_cache;
  auto twist_by = [&](int part, int g) -> const std::vector<int>& {
    auto key = std::make_pair(part, g);
    auto it = tw_cache.find(key);
    if (it != tw_cache.end()) return it->second;
    const Block::Local& loc = block.local[parts[part].local_idx];
    return tw_cache
        .emplace(key, twist_permutation(loc.cg.ctx, loc.simples,
                                        twist_map(block.ctx, loc.cg, g)))
        .first->second;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const Elem& e = elems[i];
    const LocalY& part = parts[e.part];
    const Block::Local& loc = block.local[part.local_idx];
    const Iso& pi = part.pis[e.pi];
    Subgroup NP = grp::normalizer(G, loc.P);
    for (int g : NP.gens.empty() ? NP.elems : NP.gens)
      uf.unite(static_cast<int>(i),
               elem_of(e.part, grp::compose_iso(grp::conjugation_iso(loc.P, g), pi),
                       twist_by(e.part, g)[e.simple]));
    for (const auto& tperm : E.generators()) {
      int t = E.index_of(tperm);
      uf.unite(static_cast<int>(i),
               elem_of(e.part,
                       grp::compose_iso(pi, grp::conjugation_iso(lu.pair.L, E.inv(t))),
                       e.simple));
    }
  }
  std::map<int, int> orbit_of_root;
  std::vector<int> orbit_rep;
  std::vector<int> orbit_id(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    auto it = orbit_of_root.find(root);
    if (it == orbit_of_root.end()) {
      it = orbit_of_root.emplace(root, static_cast<int>(orbit_rep.size())).first;
      orbit_rep.push_back(static_cast<int>(i));
    }
    orbit_id[i] = it->second;
  }
  xi.num_orbits = static_cast<int>(orbit_rep.size());

  // Right Out(L,u)-action on orbits: xi . phi = orbit of (P, pi o phi, F).
  xi.action.assign(n_out, std::vector<int>(xi.num_orbits, -1));
  for (int k = 0; k < n_out; ++k) {
    const Iso& phi = lu.out.aut_u[lu.out.rep_of[k]];
    for (int o = 0; o < xi.num_orbits; ++o) {
      const Elem& e = elems[orbit_rep[o]];
      int target = elem_of(e.part, grp::compose_iso(parts[e.part].pis[e.pi], phi),
                           e.simple);
      xi.action[k][o] = orbit_id[target];
    }
  }
  // The action must be a well-defined right action of Out.
  for (int a = 0; a < n_out; ++a)
    for (int b = 0; b < n_out; ++b) {
      int c = lu.out.compose(a, b);
      for (int o = 0; o < xi.num_orbits; ++o)
        if (xi.action[c][o] != xi.action[b][xi.action[a][o]])
          throw std::runtime_error("xi_orbits: Out action is not multiplicative");
    }
  xi.fixed_count.assign(n_out, 0);
  for (int k = 0; k < n_out; ++k)
    for (int o = 0; o < xi.num_orbits; ++o)
      if (xi.action[k][o] == o) ++xi.fixed_count[k];
  return xi;
}

namespace {

// Both multiplicity formulas reduce to a list of stabilizer subgroups of
// Out(L,u); the multiplicity of S_{L,u,V} is the sum of dim V^stab.
using StabList = std::vector<std::vector<int>>;  // model element sets

// Formula via Xi: Out-orbits of Xi-orbits with their stabilizers.
StabList xi_stabilizers(const Block& block, const sim::DDeltaPair& lu) {
  XiOrbitSet xi = xi_orbits(block, lu);
  StabList out;
  int n_out = lu.out.order();
  std::vector<bool> seen(xi.num_orbits, false);
  for (int o = 0; o < xi.num_orbits; ++o) {
    if (seen[o]) continue;
    std::vector<int> stab;
    for (int k = 0; k < n_out; ++k) {
      seen[xi.action[k][o]] = true;
      if (xi.action[k][o] == o) stab.push_back(lu.out.to_model[k]);
    }
    std::sort(stab.begin(), stab.end());
    out.push_back(std::move(stab));
  }
  return out;
}

// Formula via fusion: per Brauer-pair class, per pi-orbit, the stabilizer
// orbits on the u-invariant simples of e_P kC_G(P).
StabList fusion_stabilizers(const Block& block, const sim::DDeltaPair& lu) {
  const PermutationGroup& G = *block.ctx.G;
  Iso i_u = grp::conjugation_iso(lu.pair.L, lu.pair.u);
  StabList out;
  for (std::size_t rp = 0; rp < block.pairs.rep_index.size(); ++rp) {
    int r = block.pairs.rep_index[rp];
    const Subgroup& P = block.pairs.subgroups[r];
    if (P.order() != lu.pair.L.order()) continue;
    const Subgroup& N = block.pairs.stabilizer[r];
    const Block::PairLocal& pl = block.pair_local[rp];
    PiSet ps = pi_set(block, static_cast<int>(rp), lu);
    for (std::size_t pi_i = 0; pi_i < ps.reps.size(); ++pi_i) {
      const Iso& pi = ps.reps[pi_i];
      int s = find_realizer(G, N.elems, P, conjugation_through(pi, i_u),
                            block.ctx.p);
      if (s < 0)
        throw std::runtime_error("fusion_stabilizers: no p'-realizer in N_G(P,e_P)");
      std::vector<int> uinv = mb::u_invariant_simples(
          pl.cg.ctx, pl.simples, twist_map(block.ctx, pl.cg, s));
      if (uinv.empty()) continue;
      std::map<int, int> pos;  // simple id -> position in uinv
      for (std::size_t i = 0; i < uinv.size(); ++i) pos[uinv[i]] = static_cast<int>(i);
      // The stabilizer acts on the u-invariant simples: phi with i_g pi = pi phi
      // sends F to the g^-1-twist of F, i.e. the module where c acts as g c g^-1.
      std::vector<std::vector<int>> perms;  // parallel to ps.stabilizer[pi_i]
      for (const auto& [a, g] : ps.stabilizer[pi_i]) {
        std::vector<int> full = twist_permutation(
            pl.cg.ctx, pl.simples, twist_map(block.ctx, pl.cg, G.inv(g)));
        std::vector<int> perm(uinv.size());
        for (std::size_t i = 0; i < uinv.size(); ++i) {
          auto it = pos.find(full[uinv[i]]);
          if (it == pos.end())
            throw std::runtime_error("fusion_stabilizers: stabilizer breaks u-invariance");
          perm[i] = it->second;
        }
        perms.push_back(std::move(perm));
      }
      UnionFind uf(static_cast<int>(uinv.size()));
      for (const auto& perm : perms)
        for (std::size_t i = 0; i < uinv.size(); ++i)
          uf.unite(static_cast<int>(i), perm[i]);
      std::set<int> roots;
      for (std::size_t i = 0; i < uinv.size(); ++i) {
        int root = uf.find(static_cast<int>(i));
        if (!roots.insert(root).second) continue;
        std::set<int> stab_models;
        for (std::size_t ai = 0; ai < perms.size(); ++ai)
          if (perms[ai][i] == static_cast<int>(i)) {
            int a = ps.stabilizer[pi_i][ai].first;
            stab_models.insert(lu.out.to_model[lu.out.coset_of[a]]);
          }
        out.emplace_back(stab_models.begin(), stab_models.end());
      }
    }
  }
  return out;
}

int stab_sum(const sim::DDeltaPair& lu, const StabList& stabs, int char_row) {
  int total = 0;
  for (const std::vector<int>& elems : stabs)
    total += ct::fixed_space_dim(lu.table, char_row, elems);
  return total;
}

} // namespace

int block_multiplicity(const Block& block, const sim::DDeltaPair& lu, int char_row) {
  int a = stab_sum(lu, xi_stabilizers(block, lu), char_row);
  int b = stab_sum(lu, fusion_stabilizers(block, lu), char_row);
  if (a != b)
    throw std::runtime_error("block_multiplicity: orbit and fusion formulas disagree (" +
                             std::to_string(a) + " vs " + std::to_string(b) + ") at " +
                             lu.name(char_row));
  return a;
}

sim::FunctorDecomposition decompose_block_functor(const Block& block) {
  sim::FunctorDecomposition d;
  d.pairs = sim::enumerate_ddelta(block.ctx.p, p_part(block.ctx.G->order(), block.ctx.p));
  for (std::size_t i = 0; i < d.pairs.size(); ++i) {
    StabList via_xi = xi_stabilizers(block, d.pairs[i]);
    StabList via_fusion = fusion_stabilizers(block, d.pairs[i]);
    for (int row = 0; row < d.pairs[i].table.num_chars(); ++row) {
      int a = stab_sum(d.pairs[i], via_xi, row);
      int b = stab_sum(d.pairs[i], via_fusion, row);
      if (a != b)
        throw std::runtime_error("decompose_block_functor: formulas disagree at " +
                                 d.pairs[i].name(row));
      d.labels.emplace_back(static_cast<int>(i), row);
      d.multiplicity.push_back(a);
    }
  }
  return d;
}

NilpotencyVerdict is_nilpotent(const Block& block) {
  const PermutationGroup& G = *block.ctx.G;
  NilpotencyVerdict v;
  v.nilpotent = true;
  for (int r : block.pairs.rep_index) {
    int c = grp::centralizer_subgroup(G, block.pairs.subgroups[r]).order();
    int n = block.pairs.stabilizer[r].order();
    if (n % c != 0)
      throw std::runtime_error("is_nilpotent: centralizer does not divide the stabilizer");
    if (p_part(n / c, block.ctx.p) != n / c) v.nilpotent = false;
  }
  sim::FunctorDecomposition d = decompose_block_functor(block);
  v.all_u_trivial = true;
  for (std::size_t i = 0; i < d.labels.size(); ++i)
    if (d.multiplicity[i] != 0 && d.pairs[d.labels[i].first].u_order != 1)
      v.all_u_trivial = false;
  sim::FunctorDecomposition rep = sim::decompose_representable(
      *grp::subgroup_as_group(block.defect), block.ctx.p);
  // The defect labels form a prefix of the block labels (same enumeration,
  // smaller bound); beyond the prefix the block multiplicities must vanish.
  v.matches_defect = true;
  for (std::size_t i = 0; i < d.labels.size(); ++i) {
    int want = 0;
    if (i < rep.labels.size()) {
      const sim::DDeltaPair& bl = d.pairs[d.labels[i].first];
      const sim::DDeltaPair& rl = rep.pairs[rep.labels[i].first];
      if (bl.l_name != rl.l_name || bl.u_order != rl.u_order ||
          d.labels[i].second != rep.labels[i].second)
        throw std::runtime_error("is_nilpotent: label enumerations misaligned");
      want = rep.multiplicity[i];
    }
    if (d.multiplicity[i] != want) v.matches_defect = false;
  }
  if (v.nilpotent != v.all_u_trivial || v.nilpotent != v.matches_defect)
    throw std::runtime_error("is_nilpotent: characterizations disagree");
  return v;
}

EquivalenceVerdict functorially_equivalent(const Block& a, const Block& ref) {
  int bound = std::max(a.defect.order(), ref.defect.order());
  // across characteristics only defect-zero blocks are comparable: the sole
  // shared label is (1, 1)
  if (a.ctx.p != ref.ctx.p && bound > 1)
    throw std::invalid_argument("functorially_equivalent: blocks at different primes");
  EquivalenceVerdict v;
  v.equivalent = true;
  for (const sim::DDeltaPair& lu : sim::enumerate_ddelta(a.ctx.p, bound)) {
    XiOrbitSet xa = xi_orbits(a, lu);
    XiOrbitSet xb = xi_orbits(ref, lu);
    for (int k = 0; k < lu.out.order(); ++k)
      if (xa.fixed_count[k] != xb.fixed_count[k]) {
        v.equivalent = false;
        if (v.witness.empty())
          v.witness = "L=" + lu.l_name + ",|u|=" + std::to_string(lu.u_order) +
                      ",phi=" + std::to_string(k) + ": " +
                      std::to_string(xa.fixed_count[k]) + " vs " +
                      std::to_string(xb.fixed_count[k]);
      }
  }
  bool defects_isomorphic = grp::groups_isomorphic(
      *grp::subgroup_as_group(a.defect), *grp::subgroup_as_group(ref.defect));
  if (v.equivalent && !defects_isomorphic)
    throw std::runtime_error("functorially_equivalent: matching counts with non-isomorphic defects");
  return v;
}

BroueResult broue_condition_check(const Block& block) {
  const mb::GroupAlgebraContext& ctx = block.ctx;
  const PermutationGroup& G = *ctx.G;
  const Subgroup& D = block.defect;
  std::shared_ptr<PermutationGroup> Dg = grp::subgroup_as_group(D);
  if (!Dg->is_abelian())
    throw std::invalid_argument("broue_condition_check: defect group is not abelian");
  Subgroup H = grp::normalizer(G, D);
  mb::SubContext hc = mb::sub_context(ctx, H);  // same splitting field as kG
  const PermutationGroup& Hg = *hc.ctx.G;

  auto to_H = [&](const Subgroup& S) {
    Subgroup T;
    T.parent = &Hg;
    for (int x : S.elems) {
      int h = hc.from_parent[x];
      if (h < 0) throw std::runtime_error("broue_condition_check: subgroup escapes N_G(D)");
      T.elems.push_back(h);
    }
    std::sort(T.elems.begin(), T.elems.end());
    T.gens = T.elems;
    return T;
  };
  Subgroup D_H = to_H(D);

  // The Brauer correspondent: the unique block c of kH with c Br_D(b) = c
  // and defect group D.
  mb::AlgElt brb = mb::restrict_elt(hc, mb::brauer_morphism(ctx, D, block.b));
  mb::AlgElt c;
  int matches = 0;
  for (const mb::AlgElt& cand : mb::central_idempotents(hc.ctx)) {
    if (!(mb::alg_mul(hc.ctx, cand, brb) == cand)) continue;
    if (!grp::subgroups_conjugate(mb::defect_group(hc.ctx, cand), D_H)) continue;
    c = cand;
    ++matches;
  }
  if (matches != 1)
    throw std::runtime_error("broue_condition_check: Brauer correspondent not unique");

  // Compatible maximal pairs: f_D = e_D (C_H(D) = C_G(D) inside H = N_G(D)).
  int top_b = -1;
  for (std::size_t i = 0; i < block.pairs.subgroups.size(); ++i)
    if (block.pairs.subgroups[i].elems == D.elems) top_b = static_cast<int>(i);
  mb::AlgElt eD_H = mb::restrict_elt(hc, block.pairs.e[top_b]);
  Block corr = assemble_block(hc.ctx, c, &eD_H, &D_H);

  BroueResult res;
  res.holds = true;
  res.l_b = num_simples(block);
  res.l_c = num_simples(corr);
  // Match the subgroup lattices of D on both sides.
  std::map<std::vector<int>, int> corr_index;
  for (std::size_t j = 0; j < corr.pairs.subgroups.size(); ++j)
    corr_index[corr.pairs.subgroups[j].elems] = static_cast<int>(j);
  for (std::size_t i = 0; i < block.pairs.subgroups.size(); ++i) {
    const Subgroup& P = block.pairs.subgroups[i];
    Subgroup P_H = to_H(P);
    auto it = corr_index.find(P_H.elems);
    if (it == corr_index.end())
      throw std::runtime_error("broue_condition_check: subgroup lattices misaligned");
    int j = it->second;
    mb::SubContext cgG = mb::sub_context(ctx, grp::centralizer_subgroup(G, P));
    std::vector<mb::SimpleModule> sb =
        mb::block_simples(cgG.ctx, mb::restrict_elt(cgG, block.pairs.e[i]));
    mb::SubContext cgH =
        mb::sub_context(hc.ctx, grp::centralizer_subgroup(Hg, P_H));
    std::vector<mb::SimpleModule> sc =
        mb::block_simples(cgH.ctx, mb::restrict_elt(cgH, corr.pairs.e[j]));
    for (int s : corr.pairs.stabilizer[j].elems) {
      if (!Hg.is_p_prime_element(s, ctx.p)) continue;
      int s_G = G.index_of(Hg.elem(s));
      BroueResult::Count cnt;
      cnt.subgroup_order = P.order();
      cnt.s_order = Hg.elem_order(s);
      cnt.count_b =
          mb::u_invariant_simple_count(cgG.ctx, sb, twist_map(ctx, cgG, s_G));
      cnt.count_c =
          mb::u_invariant_simple_count(cgH.ctx, sc, twist_map(hc.ctx, cgH, s));
      if (cnt.count_b != cnt.count_c) {
        res.holds = false;
        if (res.witness.empty())
          res.witness = "|P|=" + std::to_string(cnt.subgroup_order) +
                        ",|s|=" + std::to_string(cnt.s_order) + ": " +
                        std::to_string(cnt.count_b) + " vs " +
                        std::to_string(cnt.count_c);
      }
      res.counts.push_back(cnt);
    }
  }
  if (res.holds) {
    EquivalenceVerdict v = functorially_equivalent(block, corr);
    if (!v.equivalent)
      throw std::runtime_error(
          "broue_condition_check: counts match but blocks are not functorially equivalent (" +
          v.witness + ")");
    res.equivalent = true;
  }
  return res;
}

} // namespace ppf::bf
