#include "ppf/modblocks.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace ppf::mb {

using grp::PermutationGroup;
using grp::Subgroup;

namespace {

constexpr int kMaxFieldSize = 2000000;

long long p_prime_part(long long n, int p) {
  while (n % p == 0) n /= p;
  return n;
}

} // namespace

int splitting_degree(const PermutationGroup& G, int p) {
  long long e = p_prime_part(G.exponent(), p);
  if (e == 1) return 1;
  long long pow = p % e;
  int m = 1;
  while (pow != 1) {
    pow = (pow * p) % e;
    ++m;
  }
  return m;
}

GroupAlgebraContext make_context(std::shared_ptr<const PermutationGroup> G, int p) {
  GroupAlgebraContext ctx;
  ctx.G = std::move(G);
  ctx.p = p;
  int m = splitting_degree(*ctx.G, p);
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw std::invalid_argument("make_context: splitting field GF(" +
                                  std::to_string(p) + "^" + std::to_string(m) +
                                  ") exceeds the configured size limit");
  }
  ctx.F = std::make_shared<const ff::GF>(p, m);
  return ctx;
}

AlgElt alg_zero(const GroupAlgebraContext& ctx) {
  return AlgElt(ctx.G->order(), 0);
}

AlgElt alg_one(const GroupAlgebraContext& ctx) {
  AlgElt a = alg_zero(ctx);
  a[0] = 1;
  return a;
}

AlgElt alg_add(const GroupAlgebraContext& ctx, const AlgElt& a, const AlgElt& b) {
  AlgElt c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = ctx.F->add(a[i], b[i]);
  return c;
}

AlgElt alg_scale(const GroupAlgebraContext& ctx, int c, const AlgElt& a) {
  AlgElt r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = ctx.F->mul(c, a[i]);
  return r;
}

AlgElt alg_mul(const GroupAlgebraContext& ctx, const AlgElt& a, const AlgElt& b) {
  const PermutationGroup& G = *ctx.G;
  AlgElt c = alg_zero(ctx);
  for (int g = 0; g < G.order(); ++g) {
    if (a[g] == 0) continue;
    for (int h = 0; h < G.order(); ++h) {
      if (b[h] == 0) continue;
      int gh = G.mul(g, h);
      c[gh] = ctx.F->add(c[gh], ctx.F->mul(a[g], b[h]));
    }
  }
  return c;
}

AlgElt alg_conjugate(const GroupAlgebraContext& ctx, int g, const AlgElt& a) {
  const PermutationGroup& G = *ctx.G;
  AlgElt c = alg_zero(ctx);
  for (int x = 0; x < G.order(); ++x)
    if (a[x] != 0) c[G.conj(g, x)] = a[x];
  return c;
}

bool alg_is_zero(const AlgElt& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

bool is_stable_under(const GroupAlgebraContext& ctx, const Subgroup& P,
                     const AlgElt& a) {
  const PermutationGroup& G = *ctx.G;
  for (int t : P.gens.empty() ? P.elems : P.gens)
    for (int x = 0; x < G.order(); ++x)
      if (a[G.conj(t, x)] != a[x]) return false;
  return true;
}

AlgElt brauer_morphism(const GroupAlgebraContext& ctx, const Subgroup& P,
                       const AlgElt& a) {
  if (!is_stable_under(ctx, P, a))
    throw std::invalid_argument("brauer_morphism: element is not P-stable");
  Subgroup C = grp::centralizer_subgroup(*ctx.G, P);
  AlgElt r = alg_zero(ctx);
  for (int x : C.elems) r[x] = a[x];
  return r;
}

// ----- central idempotents -----

namespace {

// Extended gcd for polynomials: returns g (monic) with s*a + t*b = g.
void poly_egcd(const ff::GF& F, ff::Poly a, ff::Poly b, ff::Poly* g, ff::Poly* s,
               ff::Poly* t) {
  ff::Poly r0 = ff::poly_trim(std::move(a)), r1 = ff::poly_trim(std::move(b));
  ff::Poly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  while (ff::poly_deg(r1) >= 0) {
    ff::Poly q = ff::poly_div(F, r0, r1);
    ff::Poly r2 = ff::poly_sub(F, r0, ff::poly_mul(F, q, r1));
    ff::Poly s2 = ff::poly_sub(F, s0, ff::poly_mul(F, q, s1));
    ff::Poly t2 = ff::poly_sub(F, t0, ff::poly_mul(F, q, t1));
    r0 = std::move(r1); r1 = std::move(r2);
    s0 = std::move(s1); s1 = std::move(s2);
    t0 = std::move(t1); t1 = std::move(t2);
  }
  int lc = r0.empty() ? 1 : r0.back();
  int ilc = F.inv(lc);
  auto scale = [&](ff::Poly& f) {
    for (int& c : f) c = F.mul(ilc, c);
  };
  scale(r0); scale(s0); scale(t0);
  *g = std::move(r0); *s = std::move(s0); *t = std::move(t0);
}

struct CenterBasis {
  std::vector<ff::Vec> rows;  // RREF basis of f*Z(kG) inside kG
  std::vector<int> pivots;
};

CenterBasis center_slice_basis(const GroupAlgebraContext& ctx,
                               const std::vector<AlgElt>& class_sums,
                               const AlgElt& f) {
  std::vector<ff::Vec> rows;
  for (const AlgElt& z : class_sums) rows.push_back(alg_mul(ctx, f, z));
  ff::Mat M = ff::rows_to_mat(rows, ctx.G->order());
  CenterBasis cb;
  ff::rref(*ctx.F, M, &cb.pivots);
  for (std::size_t r = 0; r < cb.pivots.size(); ++r)
    cb.rows.emplace_back(M.a.begin() + r * M.cols, M.a.begin() + (r + 1) * M.cols);
  return cb;
}

// Coordinates of w in an RREF basis; throws if w is outside the span.
ff::Vec coords_in_basis(const ff::GF& F, const CenterBasis& cb, const AlgElt& w) {
  ff::Vec c(cb.rows.size());
  AlgElt rem = w;
  for (std::size_t j = 0; j < cb.rows.size(); ++j) {
    c[j] = rem[cb.pivots[j]];
    if (c[j] != 0)
      for (std::size_t k = 0; k < rem.size(); ++k)
        rem[k] = F.sub(rem[k], F.mul(c[j], cb.rows[j][k]));
  }
  if (!alg_is_zero(rem))
    throw std::runtime_error("central_idempotents: element escapes the center slice");
  return c;
}

// Splits the central idempotent f along the spectrum of x = f*z.  Returns
// the CRT idempotent components of f (singleton {f} when x does not split).
std::vector<AlgElt> split_idempotent(const GroupAlgebraContext& ctx,
                                     const CenterBasis& cb, const AlgElt& f,
                                     const AlgElt& x) {
  const ff::GF& F = *ctx.F;
  int d = static_cast<int>(cb.rows.size());
  ff::Mat M(d, d);
  for (int j = 0; j < d; ++j) {
    ff::Vec c = coords_in_basis(F, cb, alg_mul(ctx, x, cb.rows[j]));
    for (int i = 0; i < d; ++i) M.at(j, i) = c[i];
  }
  ff::Poly mu = ff::min_poly(F, M);
  auto factors = ff::factor_poly(F, mu);
  if (factors.size() < 2) return {f};
  // Powers of x applied to f (x^0 * f = f).
  std::vector<AlgElt> xpow = {f};
  for (int i = 1; i < ff::poly_deg(mu); ++i)
    xpow.push_back(alg_mul(ctx, x, xpow.back()));
  auto eval_at_x = [&](const ff::Poly& g) {
    AlgElt r = alg_zero(ctx);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) r = alg_add(ctx, r, alg_scale(ctx, g[i], xpow[i]));
    return r;
  };
  std::vector<AlgElt> parts;
  AlgElt total = alg_zero(ctx);
  for (const auto& [q, mult] : factors) {
    ff::Poly qm = {1};
    for (int i = 0; i < mult; ++i) qm = ff::poly_mul(F, qm, q);
    ff::Poly a = ff::poly_div(F, mu, qm);
    ff::Poly g, s, t;
    poly_egcd(F, a, qm, &g, &s, &t);
    if (ff::poly_deg(g) != 0)
      throw std::runtime_error("central_idempotents: CRT cofactors not coprime");
    AlgElt e = eval_at_x(ff::poly_mod(F, ff::poly_mul(F, s, a), mu));
    if (!(alg_mul(ctx, e, e) == e))
      throw std::runtime_error("central_idempotents: CRT component not idempotent");
    total = alg_add(ctx, total, e);
    parts.push_back(std::move(e));
  }
  if (!(total == f))
    throw std::runtime_error("central_idempotents: CRT components do not sum to f");
  return parts;
}

int augmentation(const GroupAlgebraContext& ctx, const AlgElt& a) {
  int s = 0;
  for (int v : a) s = ctx.F->add(s, v);
  return s;
}

} // namespace

std::vector<AlgElt> central_idempotents(const GroupAlgebraContext& ctx) {
  const PermutationGroup& G = *ctx.G;
  std::vector<AlgElt> class_sums;
  for (const auto& cls : G.conjugacy_classes()) {
    AlgElt z = alg_zero(ctx);
    for (int x : cls.members) z[x] = 1;
    class_sums.push_back(std::move(z));
  }
  std::vector<AlgElt> idems = {alg_one(ctx)};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<AlgElt> next;
    for (const AlgElt& f : idems) {
      CenterBasis cb = center_slice_basis(ctx, class_sums, f);
      bool split = false;
      if (cb.rows.size() > 1) {
        for (const AlgElt& z : class_sums) {
          std::vector<AlgElt> parts =
              split_idempotent(ctx, cb, f, alg_mul(ctx, f, z));
          if (parts.size() > 1) {
            for (AlgElt& e : parts) next.push_back(std::move(e));
            split = changed = true;
            break;
          }
        }
      }
      if (!split) next.push_back(f);
    }
    idems = std::move(next);
  }
  // Orthogonality and completeness guards.
  AlgElt total = alg_zero(ctx);
  for (const AlgElt& e : idems) total = alg_add(ctx, total, e);
  if (!(total == alg_one(ctx)))
    throw std::runtime_error("central_idempotents: blocks do not sum to 1");
  for (std::size_t i = 0; i < idems.size(); ++i)
    for (std::size_t j = i + 1; j < idems.size(); ++j)
      if (!alg_is_zero(alg_mul(ctx, idems[i], idems[j])))
        throw std::runtime_error("central_idempotents: blocks not orthogonal");
  std::sort(idems.begin(), idems.end(),
            [&](const AlgElt& a, const AlgElt& b) {
              int aa = augmentation(ctx, a) == 1, ab = augmentation(ctx, b) == 1;
              if (aa != ab) return aa > ab;  // principal block first
              return a < b;
            });
  return idems;
}

int principal_block_index(const GroupAlgebraContext& ctx,
                          const std::vector<AlgElt>& blocks) {
  int found = -1;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (augmentation(ctx, blocks[i]) == 1) {
      if (found >= 0)
        throw std::runtime_error("principal_block_index: multiple candidates");
      found = static_cast<int>(i);
    }
  if (found < 0)
    throw std::runtime_error("principal_block_index: no block with augmentation 1");
  return found;
}

Subgroup defect_group(const GroupAlgebraContext& ctx, const AlgElt& b) {
  const PermutationGroup& G = *ctx.G;
  std::vector<Subgroup> alive;
  for (const Subgroup& P : grp::p_subgroup_classes(G, ctx.p))
    if (!alg_is_zero(brauer_morphism(ctx, P, b))) alive.push_back(P);
  if (alive.empty())
    throw std::runtime_error("defect_group: Brauer morphism vanishes at the trivial subgroup");
  int max_order = 0;
  for (const Subgroup& P : alive) max_order = std::max(max_order, P.order());
  const Subgroup* D = nullptr;
  for (const Subgroup& P : alive)
    if (P.order() == max_order) {
      if (D)
        throw std::runtime_error("defect_group: non-conjugate maximal classes");
      D = &P;
    }
  // Every surviving class must lie below the defect group.
  for (const Subgroup& P : alive) {
    bool below = false;
    for (int g = 0; g < G.order() && !below; ++g)
      below = grp::is_subset(grp::conjugate_subgroup(P, g).elems, D->elems);
    if (!below)
      throw std::runtime_error("defect_group: surviving class not below the maximum");
  }
  return *D;
}

SubContext sub_context(const GroupAlgebraContext& parent, const Subgroup& H) {
  SubContext sc;
  std::shared_ptr<PermutationGroup> Hg = grp::subgroup_as_group(H);
  sc.ctx.G = Hg;
  sc.ctx.p = parent.p;
  sc.ctx.F = parent.F;
  sc.to_parent.resize(Hg->order());
  sc.from_parent.assign(parent.G->order(), -1);
  for (int i = 0; i < Hg->order(); ++i) {
    int g = parent.G->index_of(Hg->elem(i));
    if (g < 0) throw std::runtime_error("sub_context: element escapes the parent");
    sc.to_parent[i] = g;
    sc.from_parent[g] = i;
  }
  return sc;
}

AlgElt restrict_elt(const SubContext& sub, const AlgElt& a) {
  AlgElt r(sub.to_parent.size(), 0);
  for (std::size_t g = 0; g < a.size(); ++g)
    if (a[g] != 0) {
      if (sub.from_parent[g] < 0)
        throw std::invalid_argument("restrict_elt: support escapes the subgroup");
      r[sub.from_parent[g]] = a[g];
    }
  return r;
}

AlgElt extend_elt(const SubContext& sub, const AlgElt& a) {
  AlgElt r(sub.from_parent.size(), 0);
  for (std::size_t h = 0; h < a.size(); ++h)
    if (a[h] != 0) r[sub.to_parent[h]] = a[h];
  return r;
}

// ----- Brauer pairs -----

BrauerPairs brauer_pairs_and_fusion(const GroupAlgebraContext& ctx,
                                    const AlgElt& b, const Subgroup& D,
                                    const AlgElt* max_block_hint) {
  const PermutationGroup& G = *ctx.G;
  BrauerPairs bp;
  bp.D = D;
  // Subgroups of D, translated back to subgroups of G.
  std::shared_ptr<PermutationGroup> Dg = grp::subgroup_as_group(D);
  std::map<std::vector<int>, int> index_of_subgroup;
  for (const Subgroup& S : grp::all_subgroups(*Dg)) {
    Subgroup T;
    T.parent = &G;
    for (int i : S.elems) T.elems.push_back(G.index_of(Dg->elem(i)));
    std::sort(T.elems.begin(), T.elems.end());
    for (int i : S.gens) T.gens.push_back(G.index_of(Dg->elem(i)));
    index_of_subgroup[T.elems] = static_cast<int>(bp.subgroups.size());
    bp.subgroups.push_back(std::move(T));
  }
  int n = static_cast<int>(bp.subgroups.size());
  bp.e.assign(n, AlgElt());

  // e_D at the top of every subnormal chain.
  auto blocks_of_centralizer = [&](const Subgroup& P) {
    SubContext sc = sub_context(ctx, grp::centralizer_subgroup(G, P));
    std::vector<AlgElt> out;
    for (const AlgElt& e : central_idempotents(sc.ctx))
      out.push_back(extend_elt(sc, e));
    return out;
  };
  int top = index_of_subgroup.at(bp.subgroups.back().elems);
  if (bp.subgroups[top].order() != D.order())
    throw std::runtime_error("brauer_pairs_and_fusion: defect group missing from lattice");
  {
    AlgElt brb = brauer_morphism(ctx, D, b);
    for (const AlgElt& e : blocks_of_centralizer(bp.subgroups[top]))
      if (alg_mul(ctx, e, brb) == e) {
        if (max_block_hint && !(*max_block_hint == e)) continue;
        bp.e[top] = e;
        break;
      }
    if (bp.e[top].empty())
      throw std::runtime_error(max_block_hint
                                   ? "brauer_pairs_and_fusion: prescribed e_D is not below Br_D(b)"
                                   : "brauer_pairs_and_fusion: no block below Br_D(b)");
  }

  // Descend: e_P is the unique block of kC_G(P) with (P,e_P) normally
  // contained in (N_D(P), e_{N_D(P)}).
  std::function<void(int)> ensure = [&](int i) {
    if (!bp.e[i].empty()) return;
    const Subgroup& P = bp.subgroups[i];
    if (P.order() == 1) {
      bp.e[i] = b;  // (1, b) is always a b-Brauer pair
      return;
    }
    Subgroup Q = grp::intersect(grp::normalizer(G, P), D);
    if (Q.order() == P.order())
      throw std::runtime_error("brauer_pairs_and_fusion: normalizer chain stalled");
    int qi = index_of_subgroup.at(Q.elems);
    ensure(qi);
    const AlgElt& eQ = bp.e[qi];
    AlgElt found;
    int matches = 0;
    for (const AlgElt& e : blocks_of_centralizer(P)) {
      if (!is_stable_under(ctx, Q, e)) continue;
      if (alg_mul(ctx, eQ, brauer_morphism(ctx, Q, e)) == eQ) {
        found = e;
        ++matches;
      }
    }
    if (matches != 1)
      throw std::runtime_error("brauer_pairs_and_fusion: e_P not unique below the maximal pair");
    bp.e[i] = std::move(found);
  };
  for (int i = 0; i < n; ++i) ensure(i);

  // Stabilizers N_G(P, e_P).
  for (int i = 0; i < n; ++i) {
    Subgroup N = grp::normalizer(G, bp.subgroups[i]);
    Subgroup S;
    S.parent = &G;
    for (int g : N.elems)
      if (alg_conjugate(ctx, g, bp.e[i]) == bp.e[i]) S.elems.push_back(g);
    S.gens = S.elems;
    bp.stabilizer.push_back(std::move(S));
  }

  // G-conjugacy classes of the pairs (P, e_P).
  bp.class_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < static_cast<int>(bp.rep_index.size()); ++r) {
      int j = bp.rep_index[r];
      if (bp.subgroups[j].order() != bp.subgroups[i].order()) continue;
      for (int g = 0; g < G.order(); ++g) {
        if (!(grp::conjugate_subgroup(bp.subgroups[i], g) == bp.subgroups[j]))
          continue;
        if (alg_conjugate(ctx, g, bp.e[i]) == bp.e[j]) {
          bp.class_of[i] = r;
          break;
        }
      }
      if (bp.class_of[i] >= 0) break;
    }
    if (bp.class_of[i] < 0) {
      bp.class_of[i] = static_cast<int>(bp.rep_index.size());
      bp.rep_index.push_back(i);
    }
  }
  return bp;
}

// ----- simple modules -----

ff::Mat module_action(const GroupAlgebraContext& hctx, const SimpleModule& S, int h) {
  return all_element_actions(hctx, S)[h];
}

std::vector<ff::Mat> all_element_actions(const GroupAlgebraContext& hctx,
                                         const SimpleModule& S) {
  const PermutationGroup& H = *hctx.G;
  std::vector<ff::Mat> mats(H.order());
  std::vector<bool> known(H.order(), false);
  mats[0] = ff::identity_mat(S.dim);
  known[0] = true;
  std::vector<int> gen_ids;
  for (const auto& g : H.generators()) gen_ids.push_back(H.index_of(g));
  std::vector<int> queue = {0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int h = queue[qi];
    for (std::size_t j = 0; j < gen_ids.size(); ++j) {
      int t = H.mul(gen_ids[j], h);
      if (known[t]) continue;
      mats[t] = ff::mat_mul(*hctx.F, S.gen_action[j], mats[h]);
      known[t] = true;
      queue.push_back(t);
    }
  }
  for (bool k : known)
    if (!k) throw std::runtime_error("all_element_actions: generators do not reach every element");
  return mats;
}

namespace {

struct ModuleData {
  int dim = 0;
  std::vector<ff::Mat> action;  // one matrix per group generator
};

// Spin a vector under the action matrices; returns an RREF basis of the
// generated submodule.
std::vector<ff::Vec> spin(const ff::GF& F, const std::vector<ff::Mat>& action,
                          const ff::Vec& seed) {
  std::vector<ff::Vec> rows = {seed};
  ff::Mat basis = ff::rows_to_mat(rows, static_cast<int>(seed.size()));
  std::vector<int> pivots;
  ff::rref(F, basis, &pivots);
  std::vector<ff::Vec> work = {seed};
  auto in_span = [&](const ff::Vec& v) {
    ff::Vec rem = v;
    for (std::size_t j = 0; j < pivots.size(); ++j) {
      int c = rem[pivots[j]];
      if (c != 0)
        for (int k = 0; k < basis.cols; ++k)
          rem[k] = F.sub(rem[k], F.mul(c, basis.at(static_cast<int>(j), k)));
    }
    for (int x : rem)
      if (x != 0) return false;
    return true;
  };
  for (std::size_t wi = 0; wi < work.size(); ++wi) {
    for (const ff::Mat& A : action) {
      ff::Vec img = ff::mat_vec(F, A, work[wi]);
      if (in_span(img)) continue;
      work.push_back(img);
      std::vector<ff::Vec> all;
      for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
        all.emplace_back(basis.a.begin() + r * basis.cols,
                         basis.a.begin() + (r + 1) * basis.cols);
      all.push_back(img);
      basis = ff::rows_to_mat(all, basis.cols);
      pivots.clear();
      ff::rref(F, basis, &pivots);
    }
  }
  std::vector<ff::Vec> out;
  for (std::size_t r = 0; r < pivots.size(); ++r)
    out.emplace_back(basis.a.begin() + r * basis.cols,
                     basis.a.begin() + (r + 1) * basis.cols);
  return out;
}

// Restrict the action to a submodule with RREF basis rows.
ModuleData restrict_action(const ff::GF& F, const ModuleData& M,
                           const std::vector<ff::Vec>& rows) {
  int d = static_cast<int>(rows.size());
  std::vector<int> pivots;
  for (const ff::Vec& r : rows) {
    int p = 0;
    while (r[p] == 0) ++p;
    pivots.push_back(p);
  }
  ModuleData sub;
  sub.dim = d;
  for (const ff::Mat& A : M.action) {
    ff::Mat B(d, d);
    for (int j = 0; j < d; ++j) {
      ff::Vec img = ff::mat_vec(F, A, rows[j]);
      for (int i = 0; i < d; ++i) {
        B.at(j, i) = img[pivots[i]];
        if (B.at(j, i) != 0)
          for (std::size_t k = 0; k < img.size(); ++k)
            img[k] = F.sub(img[k], F.mul(B.at(j, i), rows[i][k]));
      }
      for (int x : img)
        if (x != 0) throw std::runtime_error("restrict_action: not a submodule");
    }
    // B has rows = images in basis coordinates; the action matrix sends
    // coordinate columns, so transpose.
    sub.action.push_back(ff::transpose(B));
  }
  return sub;
}

// Quotient action modulo the submodule spanned by RREF rows.
ModuleData quotient_action(const ff::GF& F, const ModuleData& M,
                           const std::vector<ff::Vec>& rows) {
  int n = M.dim;
  std::vector<int> pivots;
  std::vector<bool> is_pivot(n, false);
  for (const ff::Vec& r : rows) {
    int p = 0;
    while (r[p] == 0) ++p;
    pivots.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  int d = static_cast<int>(free_cols.size());
  auto reduce = [&](ff::Vec v) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      int c = v[pivots[j]];
      if (c != 0)
        for (int k = 0; k < n; ++k) v[k] = F.sub(v[k], F.mul(c, rows[j][k]));
    }
    return v;
  };
  ModuleData q;
  q.dim = d;
  for (const ff::Mat& A : M.action) {
    ff::Mat B(d, d);
    for (int j = 0; j < d; ++j) {
      ff::Vec basis(n, 0);
      basis[free_cols[j]] = 1;
      ff::Vec img = reduce(ff::mat_vec(F, A, basis));
      for (int i = 0; i < d; ++i) B.at(i, j) = img[free_cols[i]];
    }
    q.action.push_back(B);
  }
  return q;
}

void chop(const ff::GF& F, const ModuleData& M, std::mt19937& rng,
          std::vector<ModuleData>* out) {
  if (M.dim == 0) return;
  if (M.dim == 1 || M.action.empty()) {
    if (M.action.empty()) {
      // No generators: the module is a direct sum of trivial lines.
      for (int i = 0; i < M.dim; ++i) out->push_back(ModuleData{1, {}});
      return;
    }
    out->push_back(M);
    return;
  }
  auto split_along = [&](const std::vector<ff::Vec>& rows) {
    chop(F, restrict_action(F, M, rows), rng, out);
    chop(F, quotient_action(F, M, rows), rng, out);
  };
  for (int attempt = 0; attempt < 200; ++attempt) {
    // Random element of the enveloping algebra.
    ff::Mat theta(M.dim, M.dim);
    auto rnd = [&]() { return static_cast<int>(rng() % F.q()); };
    for (const ff::Mat& A : M.action)
      theta = ff::mat_add(F, theta, ff::mat_scale(F, rnd(), A));
    for (const ff::Mat& A : M.action)
      for (const ff::Mat& B : M.action)
        theta = ff::mat_add(F, theta, ff::mat_scale(F, rnd(), ff::mat_mul(F, A, B)));
    ff::Poly mu = ff::min_poly(F, theta);
    for (const auto& [q, mult] : ff::factor_poly(F, mu)) {
      ff::Mat N = ff::poly_apply(F, q, theta);
      std::vector<ff::Vec> ker = ff::kernel_basis(F, N);
      if (ker.empty()) continue;
      // Any kernel vector generating a proper submodule splits M.
      bool split = false;
      for (const ff::Vec& v : ker) {
        std::vector<ff::Vec> rows = spin(F, M.action, v);
        if (static_cast<int>(rows.size()) < M.dim) {
          split_along(rows);
          split = true;
          break;
        }
      }
      if (split) return;
      if (static_cast<int>(ker.size()) != ff::poly_deg(q)) continue;
      // Norton's criterion: with nullity == deg q and a full spin, check the
      // transpose module; a proper dual submodule yields a submodule of M as
      // its orthogonal complement, otherwise M is irreducible.
      std::vector<ff::Mat> taction;
      for (const ff::Mat& A : M.action) taction.push_back(ff::transpose(A));
      std::vector<ff::Vec> tker = ff::kernel_basis(F, ff::transpose(N));
      std::vector<ff::Vec> trows = spin(F, taction, tker[0]);
      if (static_cast<int>(trows.size()) < M.dim) {
        // Orthogonal complement of the dual submodule.
        ff::Mat W = ff::rows_to_mat(trows, M.dim);
        std::vector<ff::Vec> comp = ff::kernel_basis(F, W);
        ff::Mat C = ff::rows_to_mat(comp, M.dim);
        std::vector<int> piv;
        ff::rref(F, C, &piv);
        std::vector<ff::Vec> rows;
        for (std::size_t r = 0; r < piv.size(); ++r)
          rows.emplace_back(C.a.begin() + r * C.cols, C.a.begin() + (r + 1) * C.cols);
        split_along(rows);
      } else {
        out->push_back(M);
      }
      return;
    }
  }
  throw std::runtime_error("block_simples: module splitting exhausted its retry budget");
}

} // namespace

std::vector<SimpleModule> block_simples(const GroupAlgebraContext& hctx,
                                        const AlgElt& e) {
  const PermutationGroup& H = *hctx.G;
  const ff::GF& F = *hctx.F;
  if (alg_is_zero(e)) return {};
  // Basis of the left regular module e*kH.
  std::vector<ff::Vec> rows;
  for (int h = 0; h < H.order(); ++h) {
    ff::Vec w(H.order(), 0);
    for (int g = 0; g < H.order(); ++g)
      if (e[g] != 0) w[H.mul(g, h)] = F.add(w[H.mul(g, h)], e[g]);
    rows.push_back(std::move(w));
  }
  std::vector<ff::Vec> basis = ff::row_space_basis(F, ff::rows_to_mat(rows, H.order()));
  ModuleData reg;
  reg.dim = static_cast<int>(basis.size());
  {
    // Left multiplication by each generator in basis coordinates.
    ModuleData ambient;
    ambient.dim = H.order();
    for (const auto& gperm : H.generators()) {
      int g = H.index_of(gperm);
      ff::Mat A(H.order(), H.order());
      for (int h = 0; h < H.order(); ++h) A.at(H.mul(g, h), h) = 1;
      ambient.action.push_back(std::move(A));
    }
    reg = restrict_action(F, ambient, basis);
  }
  std::mt19937 rng(0x0b10c5u);
  std::vector<ModuleData> pieces;
  chop(F, reg, rng, &pieces);
  int total = 0;
  for (const ModuleData& m : pieces) total += m.dim;
  if (total != reg.dim)
    throw std::runtime_error("block_simples: constituents do not fill the regular module");
  std::vector<SimpleModule> simples;
  for (const ModuleData& m : pieces) {
    SimpleModule s{m.dim, m.action};
    bool fresh = true;
    for (const SimpleModule& t : simples)
      if (modules_isomorphic(hctx, s, t)) {
        fresh = false;
        break;
      }
    if (fresh) simples.push_back(std::move(s));
  }
  std::sort(simples.begin(), simples.end(),
            [](const SimpleModule& a, const SimpleModule& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              for (std::size_t i = 0; i < a.gen_action.size(); ++i)
                if (!(a.gen_action[i] == b.gen_action[i]))
                  return a.gen_action[i].a < b.gen_action[i].a;
              return false;
            });
  return simples;
}

bool modules_isomorphic(const GroupAlgebraContext& hctx, const SimpleModule& A,
                        const SimpleModule& B) {
  if (A.dim != B.dim) return false;
  const ff::GF& F = *hctx.F;
  int d = A.dim;
  if (A.gen_action.empty()) return true;
  // Solve A_i X = X B_i for all i; unknowns X[k][c] flattened row-major.
  int ngen = static_cast<int>(A.gen_action.size());
  ff::Mat sys(ngen * d * d, d * d);
  int row = 0;
  for (int i = 0; i < ngen; ++i) {
    const ff::Mat& Ai = A.gen_action[i];
    const ff::Mat& Bi = B.gen_action[i];
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        for (int k = 0; k < d; ++k) {
          sys.at(row, k * d + c) = F.add(sys.at(row, k * d + c), Ai.at(r, k));
          sys.at(row, r * d + k) = F.sub(sys.at(row, r * d + k), Bi.at(k, c));
        }
        ++row;
      }
  }
  for (const ff::Vec& v : ff::kernel_basis(F, sys)) {
    ff::Mat X(d, d);
    X.a = v;
    if (ff::mat_rank(F, X) == d) return true;
  }
  return false;
}

SimpleModule twist_module(const GroupAlgebraContext& hctx, const SimpleModule& S,
                          const std::vector<int>& sigma) {
  const PermutationGroup& H = *hctx.G;
  std::vector<ff::Mat> all = all_element_actions(hctx, S);
  SimpleModule T;
  T.dim = S.dim;
  for (const auto& gperm : H.generators())
    T.gen_action.push_back(all[sigma[H.index_of(gperm)]]);
  return T;
}

std::vector<int> u_invariant_simples(const GroupAlgebraContext& hctx,
                                     const std::vector<SimpleModule>& simples,
                                     const std::vector<int>& sigma) {
  std::vector<int> out;
  for (std::size_t i = 0; i < simples.size(); ++i)
    if (modules_isomorphic(hctx, simples[i], twist_module(hctx, simples[i], sigma)))
      out.push_back(static_cast<int>(i));
  return out;
}

int u_invariant_simple_count(const GroupAlgebraContext& hctx,
                             const std::vector<SimpleModule>& simples,
                             const std::vector<int>& sigma) {
  return static_cast<int>(u_invariant_simples(hctx, simples, sigma).size());
}

} // namespace ppf::mb
