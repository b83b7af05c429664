#include "ppf/chartab.hpp"

#include "ppf/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ppf::ct {

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(int N) {
  static std::map<int, std::vector<long long>> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  // (x^N - 1) / prod of Phi_d over proper divisors d.
  std::vector<long long> num(N + 1, 0);
  num[0] = -1;
  num[N] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d) continue;
    const std::vector<long long>& phi_d = cyclotomic_polynomial(d);
    // Exact division num /= phi_d (both have integer coefficients).
    std::vector<long long> quot(num.size() - phi_d.size() + 1, 0);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
      long long c = num[i + phi_d.size() - 1];
      quot[i] = c;  // phi_d is monic
      if (c == 0) continue;
      for (std::size_t j = 0; j < phi_d.size(); ++j) num[i + j] -= c * phi_d[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(N, std::move(num)).first->second;
}

namespace {

// Reduces a rational polynomial in zeta_N (coefficients low-first, any
// length) modulo Phi_N and trims to length phi(N).
std::vector<Rat> reduce_mod_phi(int N, std::vector<Rat> poly) {
  const std::vector<long long>& phi = cyclotomic_polynomial(N);
  int d = static_cast<int>(phi.size()) - 1;  // = euler_phi(N)
  for (int i = static_cast<int>(poly.size()) - 1; i >= d; --i) {
    Rat c = poly[i];
    if (c.is_zero()) continue;
    for (int j = 0; j <= d; ++j)
      poly[i - d + j] -= c * Rat(phi[j]);
  }
  poly.resize(d);
  return poly;
}

std::vector<Rat> lift_coeffs(int N, const std::vector<Rat>& c, int M) {
  int step = M / N;
  std::vector<Rat> poly(static_cast<std::size_t>(M), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) poly[i * step] += c[i];
  return reduce_mod_phi(M, std::move(poly));
}

} // namespace

Cyc Cyc::from_rat(const Rat& r) {
  Cyc x;
  x.N = 1;
  x.c = {r};
  return x;
}

Cyc Cyc::root_of_unity(int N, long long k) {
  k %= N;
  if (k < 0) k += N;
  std::vector<Rat> poly(static_cast<std::size_t>(N), Rat(0));
  poly[static_cast<std::size_t>(k)] = Rat(1);
  Cyc x;
  x.N = N;
  x.c = reduce_mod_phi(N, std::move(poly));
  return x;
}

bool Cyc::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& r) { return r.is_zero(); });
}

Rat Cyc::rational_part() const {
  if (!is_rational()) throw std::runtime_error("Cyc: value is not rational");
  return c.empty() ? Rat(0) : c[0];
}

Cyc Cyc::lifted(int M) const {
  if (M == N) return *this;
  if (M % N) throw std::invalid_argument("Cyc::lifted: conductor must be a multiple");
  Cyc x;
  x.N = M;
  x.c = lift_coeffs(N, c, M);
  return x;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  int M = std::lcm(a.N, b.N);
  Cyc x = a.lifted(M), y = b.lifted(M);
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] += y.c[i];
  return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  int M = std::lcm(a.N, b.N);
  Cyc x = a.lifted(M), y = b.lifted(M);
  for (std::size_t i = 0; i < x.c.size(); ++i) x.c[i] -= y.c[i];
  return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  int M = std::lcm(a.N, b.N);
  Cyc x = a.lifted(M), y = b.lifted(M);
  std::vector<Rat> prod(x.c.size() + y.c.size(), Rat(0));
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j)
      if (!y.c[j].is_zero()) prod[i + j] += x.c[i] * y.c[j];
  }
  Cyc z;
  z.N = M;
  z.c = reduce_mod_phi(M, std::move(prod));
  return z;
}

Cyc operator*(const Rat& r, const Cyc& a) {
  Cyc x = a;
  for (Rat& v : x.c) v *= r;
  return x;
}

bool operator==(const Cyc& a, const Cyc& b) {
  int M = std::lcm(a.N, b.N);
  return a.lifted(M).c == b.lifted(M).c;
}

Cyc Cyc::galois(long long t) const {
  t %= N;
  if (t < 0) t += N;
  if (std::gcd(static_cast<long long>(N), t) != 1)
    throw std::invalid_argument("Cyc::galois: t not coprime to the conductor");
  std::vector<Rat> poly(static_cast<std::size_t>(N), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) poly[static_cast<std::size_t>(i * t % N)] += c[i];
  Cyc x;
  x.N = N;
  x.c = reduce_mod_phi(N, std::move(poly));
  return x;
}

namespace {

// Solves the rational linear system A x = b (A column-major list of columns)
// if consistent.
bool rat_solve(std::vector<std::vector<Rat>> cols, std::vector<Rat> b,
               std::vector<Rat>* x) {
  std::size_t rows = b.size();
  std::size_t n = cols.size();
  std::vector<int> pivot_col(rows, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && cols[col][piv].is_zero()) ++piv;
    if (piv == rows) continue;
    for (std::size_t c2 = col; c2 < n; ++c2) std::swap(cols[c2][piv], cols[c2][rank]);
    std::swap(b[piv], b[rank]);
    Rat inv = Rat(1) / cols[col][rank];
    for (std::size_t c2 = col; c2 < n; ++c2) cols[c2][rank] *= inv;
    b[rank] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || cols[col][r].is_zero()) continue;
      Rat f = cols[col][r];
      for (std::size_t c2 = col; c2 < n; ++c2) cols[c2][r] -= f * cols[c2][rank];
      b[r] -= f * b[rank];
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (!b[r].is_zero()) return false;
  if (x) {
    x->assign(n, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) (*x)[pivot_col[r]] = b[r];
  }
  return true;
}

} // namespace

Cyc Cyc::reduced() const {
  for (int d = 1; d <= N; ++d) {
    if (N % d) continue;
    if (d == N) break;
    // Try to express the value over the zeta_d power basis.
    int phid = euler_phi(d);
    std::vector<std::vector<Rat>> cols;
    for (int j = 0; j < phid; ++j) {
      Cyc base = root_of_unity(d, j).lifted(N);
      cols.push_back(base.c);
    }
    std::vector<Rat> sol;
    if (rat_solve(cols, c, &sol)) {
      Cyc x;
      x.N = d;
      x.c = std::move(sol);
      return x;
    }
  }
  return *this;
}

int CharacterTable::degree(int row) const {
  return static_cast<int>(rows[row][0].rational_part().as_integer());
}

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

CharacterTable character_table(const grp::PermutationGroup& G) {
  if (G.order() > 500)
    throw std::invalid_argument("character_table: group order exceeds 500");
  const auto& classes = G.conjugacy_classes();
  int r = static_cast<int>(classes.size());
  int n = G.order();
  int e = G.exponent();

  // Prime l = 1 mod exp(G), large enough to recognize degrees and
  // multiplicities unambiguously.
  long long l = 1 + e;
  while (!is_prime(l) || l <= 2 * n) l += e;
  ff::GF F(static_cast<int>(l), 1);

  // Class data.
  std::vector<int> inv_class(r), csize(r);
  for (int j = 0; j < r; ++j) {
    csize[j] = static_cast<int>(classes[j].members.size());
    inv_class[j] = G.class_of(G.inv(classes[j].rep));
  }

  // Class matrices M_i with (M_i)_{j,k} = #{ x in C_i : x^{ -1} rep_k in C_j }.
  std::vector<ff::Mat> M(r);
  for (int i = 0; i < r; ++i) {
    ff::Mat mi(r, r);
    for (int x : classes[i].members)
      for (int k = 0; k < r; ++k) {
        int j = G.class_of(G.mul(G.inv(x), classes[k].rep));
        mi.at(j, k) = F.add(mi.at(j, k), 1);
      }
    M[i] = std::move(mi);
  }

  // Split the r-dimensional space into common eigenvectors.
  std::vector<std::vector<ff::Vec>> spaces;
  {
    std::vector<ff::Vec> full;
    for (int i = 0; i < r; ++i) {
      ff::Vec v(r, 0);
      v[i] = 1;
      full.push_back(std::move(v));
    }
    spaces.push_back(std::move(full));
  }
  for (int i = 1; i < r; ++i) {
    bool all_one = std::all_of(spaces.begin(), spaces.end(),
                               [](const auto& s) { return s.size() == 1; });
    if (all_one) break;
    std::vector<std::vector<ff::Vec>> next;
    for (auto& space : spaces) {
      int d = static_cast<int>(space.size());
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Restriction R of M_i to the subspace: M_i B = B R.
      ff::Mat B(r, d);
      for (int row = 0; row < r; ++row)
        for (int col = 0; col < d; ++col) B.at(row, col) = space[col][row];
      ff::Mat R(d, d);
      for (int col = 0; col < d; ++col) {
        ff::Vec rhs = ff::mat_vec(F, M[i], space[col]);
        ff::Vec sol;
        if (!ff::solve(F, B, rhs, &sol))
          throw std::runtime_error("character_table: subspace not invariant");
        for (int row = 0; row < d; ++row) R.at(row, col) = sol[row];
      }
      ff::Poly mp = ff::min_poly(F, R);
      std::vector<int> lambdas = ff::poly_roots(F, mp);
      int covered = 0;
      for (int lam : lambdas) {
        ff::Mat shifted = R;
        for (int t = 0; t < d; ++t) shifted.at(t, t) = F.sub(shifted.at(t, t), lam);
        std::vector<ff::Vec> ker = ff::kernel_basis(F, shifted);
        // Generalized eigenvectors are plain eigenvectors here because the
        // class algebra is semisimple; still, verify coverage below.
        std::vector<ff::Vec> sub;
        for (auto& w : ker) {
          ff::Vec v(r, 0);
          for (int col = 0; col < d; ++col)
            if (w[col])
              for (int row = 0; row < r; ++row)
                v[row] = F.add(v[row], F.mul(w[col], space[col][row]));
          sub.push_back(std::move(v));
        }
        covered += static_cast<int>(sub.size());
        if (!sub.empty()) next.push_back(std::move(sub));
      }
      if (covered != d)
        throw std::runtime_error("character_table: eigenspaces do not span");
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw std::runtime_error("character_table: wrong number of eigenvectors");

  // Each 1-dimensional space yields a character.
  std::vector<std::vector<Cyc>> rows;
  int root_bound = 1;
  while ((root_bound + 1) * (root_bound + 1) <= n) ++root_bound;
  for (auto& space : spaces) {
    ff::Vec v = space[0];
    if (v[0] == 0)
      throw std::runtime_error("character_table: eigenvector vanishes at identity");
    int s = F.inv(v[0]);
    for (int& x : v) x = F.mul(s, x);  // now v_j = omega_j
    // chi(1)^2 = |G| / sum_j omega_j omega_{j*} / |C_j|.
    int denom = 0;
    for (int j = 0; j < r; ++j)
      denom = F.add(denom, F.div(F.mul(v[j], v[inv_class[j]]), F.from_int(csize[j])));
    int d2 = F.div(F.from_int(n), denom);
    int deg = -1;
    for (int t = 1; t <= root_bound; ++t)
      if (F.mul(F.from_int(t), F.from_int(t)) == d2) { deg = t; break; }
    if (deg < 0) throw std::runtime_error("character_table: degree is not recognized");
    // chi(g_j) mod l.
    std::vector<int> chi_mod(r);
    for (int j = 0; j < r; ++j)
      chi_mod[j] = F.div(F.mul(v[j], F.from_int(deg)), F.from_int(csize[j]));
    // Lift each value through discrete logarithms of eigenvalue counts.
    std::vector<Cyc> row(r);
    for (int j = 0; j < r; ++j) {
      int g = classes[j].rep;
      int ord = G.elem_order(g);
      int z = F.exp((l - 1) / ord);  // the canonical primitive ord-th root
      Cyc val = Cyc::from_int(0);
      int ord_inv = F.inv(F.from_int(ord));
      for (int k = 0; k < ord; ++k) {
        int mk = 0;
        for (int t = 0; t < ord; ++t) {
          int chit = chi_mod[G.class_of(G.pow(g, t))];
          int zpow = F.pow(z, (static_cast<long long>(ord) - k) * t);
          mk = F.add(mk, F.mul(chit, zpow));
        }
        mk = F.mul(mk, ord_inv);
        // mk is a multiplicity in [0, deg]; l > 2|G| makes the lift unique.
        if (mk > deg)
          throw std::runtime_error("character_table: non-integral eigenvalue multiplicity");
        if (mk) val = val + Rat(mk) * Cyc::root_of_unity(ord, k);
      }
      row[j] = val.reduced();
    }
    rows.push_back(std::move(row));
  }

  // Deterministic row order: by degree, then a textual encoding of values.
  auto encode = [](const std::vector<Cyc>& row) {
    std::ostringstream os;
    for (const Cyc& x : row) {
      os << x.N << ':';
      for (const Rat& q : x.c) os << q.str() << ',';
      os << ';';
    }
    return os.str();
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    Rat da = a[0].rational_part(), db = b[0].rational_part();
    if (!(da == db)) return da < db;
    return encode(a) < encode(b);
  });

  CharacterTable T;
  T.G = &G;
  T.rows = std::move(rows);
  return T;
}

Rat inner_product(const CharacterTable& T, int i, int j) {
  const grp::PermutationGroup& G = *T.G;
  const auto& classes = G.conjugacy_classes();
  Cyc acc = Cyc::from_int(0);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    Cyc term = T.rows[i][k] * T.rows[j][k].conj();
    acc = acc + Rat(static_cast<long long>(classes[k].members.size())) * term;
  }
  Cyc avg = Rat(1, G.order()) * acc;
  return avg.reduced().rational_part();
}

int fixed_space_dim(const CharacterTable& T, int row, const std::vector<int>& elems) {
  const grp::PermutationGroup& G = *T.G;
  Cyc acc = Cyc::from_int(0);
  for (int g : elems) acc = acc + T.rows[row][G.class_of(g)];
  Cyc avg = Rat(1, static_cast<long long>(elems.size())) * acc;
  Rat v = avg.reduced().rational_part();
  long long d = v.as_integer();
  if (d < 0) throw std::runtime_error("fixed_space_dim: negative dimension");
  return static_cast<int>(d);
}

int fixed_space_dim(const CharacterTable& T, int row, const grp::Subgroup& N) {
  return fixed_space_dim(T, row, N.elems);
}

} // namespace ppf::ct
