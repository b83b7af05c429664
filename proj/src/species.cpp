#include "ppf/species.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace ppf::sp {

using grp::Iso;
using grp::Perm;
using grp::PermutationGroup;
using grp::Subgroup;

namespace {

int thread_count() {
  const char* env = std::getenv("PPFUNCTOR_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n < 1 ? 1 : n;
}

// Deterministic static partition of [0, n) over the worker threads.
void parallel_for(int n, const std::function<void(int)>& body) {
  int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace

bool SpeciesFT::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

SpeciesFT operator+(const SpeciesFT& a, const SpeciesFT& b) {
  SpeciesFT r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

SpeciesFT operator-(const SpeciesFT& a, const SpeciesFT& b) {
  SpeciesFT r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

SpeciesFT operator*(const SpeciesFT& a, const SpeciesFT& b) {
  SpeciesFT r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] * b.v[i];
  return r;
}

SpeciesFT operator*(const Rat& c, const SpeciesFT& a) {
  SpeciesFT r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = c * a.v[i];
  return r;
}

SpeciesFT indicator_ft(const pp::PairIndex& idx, int cls) {
  SpeciesFT r(idx);
  r.v[cls] = Rat(1);
  return r;
}

SpeciesFT all_ones_ft(const pp::PairIndex& idx) {
  SpeciesFT r(idx);
  for (auto& x : r.v) x = Rat(1);
  return r;
}

bool SpeciesFTD::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

SpeciesFTD operator+(const SpeciesFTD& a, const SpeciesFTD& b) {
  SpeciesFTD r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] + b.v[i];
  return r;
}

SpeciesFTD operator-(const SpeciesFTD& a, const SpeciesFTD& b) {
  SpeciesFTD r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = a.v[i] - b.v[i];
  return r;
}

SpeciesFTD operator*(const Rat& c, const SpeciesFTD& a) {
  SpeciesFTD r(*a.idx);
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] = c * a.v[i];
  return r;
}

SpeciesFTD indicator_ftd(const pp::DiagIndex& idx, int cls) {
  SpeciesFTD r(idx);
  r.v[cls] = Rat(1);
  return r;
}

SpeciesFTD tilde_lift(const SpeciesFT& w, const pp::DiagIndex& gg) {
  const PermutationGroup& G = *gg.ctx.G;
  if (w.idx->G != &G)
    throw std::invalid_argument("tilde_lift: group mismatch");
  SpeciesFTD r(gg);
  for (std::size_t i = 0; i < w.idx->reps.size(); ++i) {
    if (w.v[i].is_zero()) continue;
    const pp::Pair& pr = w.idx->reps[i];
    // Delta(P) paired with (r, r).
    Iso id = grp::identity_iso(pr.P);
    Subgroup delta = pp::twisted_diagonal(gg.ctx, id, pr.P);
    int st = gg.ctx.GK.pair_to_index(pr.s, pr.s);
    int cls = gg.class_of(delta, st);
    if (cls < 0) throw std::runtime_error("tilde_lift: diagonal class not found");
    Subgroup joined = grp::join_with_element(pr.P, pr.s);
    int cent = grp::centralizer(G, joined.gens.empty() ? joined.elems : joined.gens).order();
    r.v[cls] += w.v[i] * Rat(cent);
  }
  return r;
}

SpeciesFTD compose(const SpeciesFTD& a, const SpeciesFTD& b, const pp::DiagIndex& target) {
  const pp::DiagIndex& AI = *a.idx;
  const pp::DiagIndex& BI = *b.idx;
  if (AI.ctx.K.get() != BI.ctx.G.get())
    throw std::invalid_argument("compose: middle group mismatch");
  if (target.ctx.G.get() != AI.ctx.G.get() || target.ctx.K.get() != BI.ctx.K.get())
    throw std::invalid_argument("compose: outer group mismatch");
  const PermutationGroup& H = *AI.ctx.K;
  int p = target.ctx.p;

  std::vector<int> h_pprime;
  for (int h = 0; h < H.order(); ++h)
    if (H.is_p_prime_element(h, p)) h_pprime.push_back(h);

  SpeciesFTD r(target);
  auto one_class = [&](int ci) {
    const pp::DiagonalPairClass& c = target.classes[ci];
    Rat acc;
    for (const pp::GammaTriple& tr : pp::gamma_triples(H, p, c.U, c.gamma, c.W)) {
      // Left factor pair (Delta(U, alpha, V), (s, h)); right factor pair
      // (Delta(V, beta, W), (h, t)).
      Subgroup dl = pp::twisted_diagonal(AI.ctx, tr.alpha, tr.V);
      Subgroup dr = pp::twisted_diagonal(BI.ctx, tr.beta, c.W);
      for (int h : h_pprime) {
        // (s, h) must normalize dl and (h, t) must normalize dr.
        bool ok = true;
        for (int d : dl.gens) {
          auto [x, y] = AI.ctx.GK.index_to_pair(d);
          int cx = AI.ctx.G->conj(c.s, x);
          int cy = H.conj(h, y);
          if (!dl.contains(AI.ctx.GK.pair_to_index(cx, cy))) { ok = false; break; }
        }
        if (!ok) continue;
        for (int d : dr.gens) {
          auto [x, y] = BI.ctx.GK.index_to_pair(d);
          int cx = H.conj(h, x);
          int cy = BI.ctx.K->conj(c.t, y);
          if (!dr.contains(BI.ctx.GK.pair_to_index(cx, cy))) { ok = false; break; }
        }
        if (!ok) continue;
        int cl = AI.class_of(dl, AI.ctx.GK.pair_to_index(c.s, h));
        int cr = BI.class_of(dr, BI.ctx.GK.pair_to_index(h, c.t));
        if (cl < 0 || cr < 0)
          throw std::runtime_error("compose: factor class not found");
        if (a.v[cl].is_zero() || b.v[cr].is_zero()) continue;
        acc += a.v[cl] * b.v[cr];
      }
    }
    r.v[ci] = acc / Rat(H.order());
  };
  parallel_for(static_cast<int>(target.size()), one_class);
  return r;
}

std::vector<Biset> transitive_bisets(const pp::ProductContext& ctx) {
  const PermutationGroup& GK = *ctx.GK.group;
  std::vector<Subgroup> subs = grp::all_subgroups(GK);
  // Keep only stabilizers whose Sylow p-subgroup is twisted diagonal: these
  // are exactly the transitive bisets all of whose indecomposable summands
  // have twisted diagonal vertices, i.e. the ones living in the diagonal
  // Grothendieck group where the composition formula applies.
  auto sylow_twisted_diagonal = [&](const Subgroup& M) {
    auto MG = grp::subgroup_as_group(M);
    Subgroup syl = grp::sylow_subgroup(*MG, ctx.p);
    std::set<int> firsts, seconds;
    std::size_t n = 0;
    for (int e : syl.elems) {
      int pe = GK.index_of(MG->elem(e));
      auto [a, b] = ctx.GK.index_to_pair(pe);
      firsts.insert(a);
      seconds.insert(b);
      ++n;
    }
    return firsts.size() == n && seconds.size() == n;
  };
  // Up to conjugacy.
  std::vector<Subgroup> reps;
  for (const Subgroup& s : subs) {
    if (!sylow_twisted_diagonal(s)) continue;
    bool fresh = true;
    for (const Subgroup& r : reps)
      if (grp::subgroups_conjugate(s, r)) { fresh = false; break; }
    if (fresh) reps.push_back(s);
  }
  std::vector<Biset> out;
  for (const Subgroup& M : reps) {
    // Left cosets of M; the action of (g, k) is left multiplication.
    int n = GK.order();
    std::vector<int> coset_id(n, -1);
    int num = 0;
    for (int e = 0; e < n; ++e) {
      if (coset_id[e] >= 0) continue;
      for (int m : M.elems) coset_id[GK.mul(e, m)] = num;
      ++num;
    }
    auto act = [&](int pe) {
      std::vector<int> img(num, -1);
      for (int e = 0; e < n; ++e) {
        int from = coset_id[e];
        if (img[from] < 0) img[from] = coset_id[GK.mul(pe, e)];
      }
      return Perm(img);
    };
    Biset B;
    B.G = ctx.G;
    B.K = ctx.K;
    B.size = num;
    B.left.reserve(ctx.G->order());
    for (int g = 0; g < ctx.G->order(); ++g)
      B.left.push_back(act(ctx.GK.pair_to_index(g, 0)));
    B.right.reserve(ctx.K->order());
    for (int k = 0; k < ctx.K->order(); ++k)
      B.right.push_back(act(ctx.GK.pair_to_index(0, ctx.K->inv(k))));
    out.push_back(std::move(B));
  }
  return out;
}

Biset biset_tensor(const Biset& X, const Biset& Y) {
  if (X.K.get() != Y.G.get())
    throw std::invalid_argument("biset_tensor: middle group mismatch");
  const PermutationGroup& H = *X.K;
  int nx = X.size, ny = Y.size;
  int n = nx * ny;
  // Union-find over pairs (x, y), index x*ny + y.
  std::vector<int> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
  std::vector<int> h_gens;
  for (const Perm& g : H.generators()) h_gens.push_back(H.index_of(g));
  if (h_gens.empty()) h_gens.push_back(0);
  for (int x = 0; x < nx; ++x)
    for (int y = 0; y < ny; ++y)
      for (int h : h_gens)
        unite(X.right[h](x) * ny + y, x * ny + Y.left[h](y));
  std::vector<int> cls(n, -1);
  int num = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) cls[i] = num++;
  for (int i = 0; i < n; ++i) cls[i] = cls[find(i)];

  Biset R;
  R.G = X.G;
  R.K = Y.K;
  R.size = num;
  auto project = [&](const std::function<int(int, int)>& f) {
    std::vector<int> img(num, -1);
    for (int x = 0; x < nx; ++x)
      for (int y = 0; y < ny; ++y) {
        int from = cls[x * ny + y];
        if (img[from] < 0) img[from] = cls[f(x, y)];
      }
    return Perm(img);
  };
  for (int g = 0; g < X.G->order(); ++g)
    R.left.push_back(project([&](int x, int y) { return X.left[g](x) * ny + y; }));
  for (int k = 0; k < Y.K->order(); ++k)
    R.right.push_back(project([&](int x, int y) { return x * ny + Y.right[k](y); }));
  return R;
}

SpeciesFTD biset_species(const Biset& X, const pp::DiagIndex& idx) {
  if (idx.ctx.G.get() != X.G.get() || idx.ctx.K.get() != X.K.get())
    throw std::invalid_argument("biset_species: group mismatch");
  const PermutationGroup& K = *X.K;
  SpeciesFTD r(idx);
  for (std::size_t ci = 0; ci < idx.size(); ++ci) {
    const pp::DiagonalPairClass& c = idx.classes[ci];
    // Collect the generator conditions (a, b): a.x.b^-1 == x.
    std::vector<std::pair<int, int>> conds;
    for (int d : c.Delta.gens.empty() ? c.Delta.elems : c.Delta.gens)
      conds.push_back(idx.ctx.GK.index_to_pair(d));
    conds.emplace_back(c.s, c.t);
    int count = 0;
    for (int x = 0; x < X.size; ++x) {
      bool fixed = true;
      for (auto& [a, b] : conds) {
        if (X.left[a](X.right[K.inv(b)](x)) != x) { fixed = false; break; }
      }
      if (fixed) ++count;
    }
    r.v[ci] = Rat(count);
  }
  return r;
}

SpeciesFTD random_species(const pp::DiagIndex& idx, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 6);
  SpeciesFTD r(idx);
  for (auto& x : r.v) x = Rat(num(rng), den(rng));
  return r;
}

} // namespace ppf::sp
