#include "ppf/gf.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ppf::ff {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

} // namespace

GF::GF(int p, int m) : p_(p), m_(m) {
  if (p < 2 || m < 1) throw std::invalid_argument("GF: bad parameters");
  long long q = ipow(p, m);
  if (q > 2000000) throw std::invalid_argument("GF: field too large for table arithmetic");
  q_ = static_cast<int>(q);

  // Search for a monic polynomial x^m + c_{m-1} x^{m-1} + ... + c_0 making x
  // a primitive element; such a polynomial is automatically irreducible.
  std::vector<int> coeffs(m, 0);
  auto try_poly = [&]() {
    if (coeffs[0] == 0) return false;  // x must be a unit
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, -1);
    // Element encoding: digits base p are the coefficients.
    std::vector<int> cur(m, 0);
    cur[0] = 1;  // the constant 1
    for (int k = 0; k < q_ - 1; ++k) {
      int enc = 0;
      for (int i = m - 1; i >= 0; --i) enc = enc * p_ + cur[i];
      if (k > 0 && enc == 1) return false;  // order of x too small
      exp_[k] = enc;
      if (log_[enc] >= 0) return false;
      log_[enc] = k;
      // Multiply by x and reduce mod the candidate polynomial.
      int carry = cur[m - 1];
      for (int i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (carry) {
        for (int i = 0; i < m; ++i) {
          long long sub = static_cast<long long>(carry) * coeffs[i] % p_;
          cur[i] = static_cast<int>((cur[i] + p_ - sub) % p_);
        }
      }
    }
    // Closing the cycle: x^(q-1) must be 1.
    int enc = 0;
    for (int i = m - 1; i >= 0; --i) enc = enc * p_ + cur[i];
    return enc == 1;
  };
  while (true) {
    if (try_poly()) break;
    int i = 0;
    while (i < m && ++coeffs[i] == p_) coeffs[i++] = 0;
    if (i == m) throw std::runtime_error("GF: no primitive polynomial found");
  }
  modulus_ = coeffs;
  modulus_.push_back(1);
}

int GF::add(int a, int b) const {
  if (m_ == 1) return (a + b) % p_;
  int r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

int GF::neg(int a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return (p_ - a) % p_;
  int r = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

int GF::inv(int a) const {
  if (a == 0) throw std::domain_error("GF::inv: zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int GF::pow(int a, long long e) const {
  if (a == 0) {
    if (e <= 0) throw std::domain_error("GF::pow: 0^e, e <= 0");
    return 0;
  }
  long long k = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

int GF::exp(long long k) const {
  k %= (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[k];
}

int GF::log(int a) const {
  if (a == 0) throw std::domain_error("GF::log: zero");
  return log_[a];
}

// ----- matrices -----

Mat identity_mat(int n) {
  Mat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

Mat mat_mul(const GF& F, const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      int aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) {
        int b = B.at(k, j);
        if (b) C.at(i, j) = F.add(C.at(i, j), F.mul(aik, b));
      }
    }
  return C;
}

Mat mat_add(const GF& F, const Mat& A, const Mat& B) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
  return C;
}

Mat mat_sub(const GF& F, const Mat& A, const Mat& B) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.sub(A.a[i], B.a[i]);
  return C;
}

Mat mat_scale(const GF& F, int c, const Mat& A) {
  Mat C(A.rows, A.cols);
  for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.mul(c, A.a[i]);
  return C;
}

Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

bool is_zero_mat(const Mat& A) {
  return std::all_of(A.a.begin(), A.a.end(), [](int x) { return x == 0; });
}

Vec mat_vec(const GF& F, const Mat& A, const Vec& v) {
  Vec r(A.rows, 0);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j) && v[j]) r[i] = F.add(r[i], F.mul(A.at(i, j), v[j]));
  return r;
}

Vec vec_mat(const GF& F, const Vec& v, const Mat& A) {
  Vec r(A.cols, 0);
  for (int i = 0; i < A.rows; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j)) r[j] = F.add(r[j], F.mul(v[i], A.at(i, j)));
  }
  return r;
}

int rref(const GF& F, Mat& A, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  int rank = 0;
  for (int col = 0; col < A.cols && rank < A.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < A.rows; ++r)
      if (A.at(r, col)) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(piv, j), A.at(rank, j));
    int s = F.inv(A.at(rank, col));
    for (int j = 0; j < A.cols; ++j) A.at(rank, j) = F.mul(s, A.at(rank, j));
    for (int r = 0; r < A.rows; ++r) {
      if (r == rank) continue;
      int c = A.at(r, col);
      if (!c) continue;
      for (int j = 0; j < A.cols; ++j)
        A.at(r, j) = F.sub(A.at(r, j), F.mul(c, A.at(rank, j)));
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

int mat_rank(const GF& F, Mat A) { return rref(F, A); }

std::vector<Vec> kernel_basis(const GF& F, const Mat& A) {
  Mat R = A;
  std::vector<int> pivots;
  int rank = rref(F, R, &pivots);
  std::vector<char> is_pivot(A.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int free_col = 0; free_col < A.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(A.cols, 0);
    v[free_col] = 1;
    for (int r = 0; r < rank; ++r)
      v[pivots[r]] = F.neg(R.at(r, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const GF& F, const Mat& A, const Vec& b, Vec* x) {
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  std::vector<int> pivots;
  int rank = rref(F, aug, &pivots);
  if (!pivots.empty() && pivots.back() == A.cols) return false;  // inconsistent
  if (x) {
    x->assign(A.cols, 0);
    for (int r = 0; r < rank; ++r) (*x)[pivots[r]] = aug.at(r, A.cols);
  }
  return true;
}

std::vector<Vec> row_space_basis(const GF& F, Mat A) {
  int rank = rref(F, A);
  std::vector<Vec> rows;
  for (int r = 0; r < rank; ++r)
    rows.emplace_back(A.a.begin() + static_cast<std::size_t>(r) * A.cols,
                      A.a.begin() + static_cast<std::size_t>(r + 1) * A.cols);
  return rows;
}

Mat rows_to_mat(const std::vector<Vec>& rows, int cols) {
  Mat M(static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) M.at(static_cast<int>(i), j) = rows[i][j];
  return M;
}

// ----- polynomials -----

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_add(const GF& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  return poly_trim(std::move(r));
}

Poly poly_sub(const GF& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < f.size() ? f[i] : 0, i < g.size() ? g[i] : 0);
  return poly_trim(std::move(r));
}

Poly poly_mul(const GF& F, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j]) r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
  }
  return poly_trim(std::move(r));
}

Poly poly_mod(const GF& F, Poly f, const Poly& g) {
  if (g.empty()) throw std::domain_error("poly_mod: division by zero polynomial");
  int dg = poly_deg(g);
  int lead_inv = F.inv(g.back());
  while (poly_deg(f) >= dg) {
    int shift = poly_deg(f) - dg;
    int c = F.mul(f.back(), lead_inv);
    for (int i = 0; i <= dg; ++i)
      f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
    f = poly_trim(std::move(f));
  }
  return f;
}

Poly poly_div(const GF& F, Poly f, const Poly& g) {
  if (g.empty()) throw std::domain_error("poly_div: division by zero polynomial");
  int dg = poly_deg(g);
  if (poly_deg(f) < dg) return {};
  Poly quot(poly_deg(f) - dg + 1, 0);
  int lead_inv = F.inv(g.back());
  while (poly_deg(f) >= dg) {
    int shift = poly_deg(f) - dg;
    int c = F.mul(f.back(), lead_inv);
    quot[shift] = c;
    for (int i = 0; i <= dg; ++i)
      f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
    f = poly_trim(std::move(f));
  }
  return poly_trim(std::move(quot));
}

Poly poly_monic(const GF& F, Poly f) {
  if (f.empty()) return f;
  int s = F.inv(f.back());
  for (int& c : f) c = F.mul(s, c);
  return f;
}

Poly poly_gcd(const GF& F, Poly f, Poly g) {
  f = poly_trim(std::move(f));
  g = poly_trim(std::move(g));
  while (!g.empty()) {
    Poly r = poly_mod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return poly_monic(F, std::move(f));
}

Poly poly_powmod(const GF& F, Poly base, long long e, const Poly& mod) {
  Poly r{1};
  base = poly_mod(F, std::move(base), mod);
  while (e > 0) {
    if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
    base = poly_mod(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

Poly poly_deriv(const GF& F, const Poly& f) {
  Poly r;
  for (std::size_t i = 1; i < f.size(); ++i) {
    int c = f[i];
    int s = 0;
    for (std::size_t k = 0; k < i % F.p(); ++k) s = F.add(s, c);
    // i*c in the field: i reduces mod p.
    r.push_back(s);
  }
  return poly_trim(std::move(r));
}

int poly_eval(const GF& F, const Poly& f, int x) {
  int r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

std::vector<int> poly_roots(const GF& F, const Poly& f) {
  std::vector<int> roots;
  for (int x = 0; x < F.q(); ++x)
    if (poly_eval(F, f, x) == 0) roots.push_back(x);
  return roots;
}

namespace {

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<Poly, int>> ddf(const GF& F, Poly f) {
  std::vector<std::pair<Poly, int>> parts;  // (product of irreducibles, degree)
  Poly x{0, 1};
  Poly h = x;
  int d = 0;
  while (poly_deg(f) > 0) {
    ++d;
    if (2 * d > poly_deg(f)) {
      parts.emplace_back(f, poly_deg(f));
      break;
    }
    h = poly_powmod(F, h, F.q(), f);
    Poly g = poly_gcd(F, poly_sub(F, h, x), f);
    if (poly_deg(g) > 0) {
      parts.emplace_back(g, d);
      f = poly_div(F, std::move(f), g);
      h = poly_mod(F, std::move(h), f);
    }
  }
  return parts;
}

// Cantor-Zassenhaus equal-degree splitting (deterministically seeded).
void edf(const GF& F, Poly f, int d, std::mt19937& rng, std::vector<Poly>& out) {
  int n = poly_deg(f);
  if (n == d) {
    out.push_back(poly_monic(F, std::move(f)));
    return;
  }
  std::uniform_int_distribution<int> coeff(0, F.q() - 1);
  while (true) {
    Poly a(n, 0);
    for (int i = 0; i < n; ++i) a[i] = coeff(rng);
    a = poly_trim(std::move(a));
    if (poly_deg(a) < 1) continue;
    Poly g = poly_gcd(F, a, f);
    if (poly_deg(g) > 0 && poly_deg(g) < n) {
      edf(F, g, d, rng, out);
      edf(F, poly_div(F, f, g), d, rng, out);
      return;
    }
    Poly t;
    if (F.p() == 2) {
      // Trace map: a + a^2 + a^4 + ... over GF(2^k), k*d terms.
      int k = F.m();
      t = a;
      Poly cur = a;
      for (int i = 1; i < k * d; ++i) {
        cur = poly_mod(F, poly_mul(F, cur, cur), f);
        t = poly_add(F, t, cur);
      }
    } else {
      long long e = 1;
      for (int i = 0; i < d; ++i) e *= F.q();
      t = poly_powmod(F, a, (e - 1) / 2, f);
      t = poly_sub(F, t, Poly{1});
    }
    g = poly_gcd(F, t, f);
    if (poly_deg(g) > 0 && poly_deg(g) < n) {
      edf(F, g, d, rng, out);
      edf(F, poly_div(F, f, g), d, rng, out);
      return;
    }
  }
}

} // namespace

std::vector<std::pair<Poly, int>> factor_poly(const GF& F, Poly f) {
  f = poly_trim(std::move(f));
  if (poly_deg(f) < 1) throw std::invalid_argument("factor_poly: constant polynomial");
  f = poly_monic(F, std::move(f));
  std::mt19937 rng(0x5eed1234u);
  std::vector<std::pair<Poly, int>> result;  // (irreducible, multiplicity)
  auto record = [&](const Poly& irr, int mult) {
    for (auto& [g, m] : result)
      if (g == irr) { m += mult; return; }
    result.emplace_back(irr, mult);
  };
  // Squarefree decomposition by repeated gcd with the derivative; handles
  // the p-th power case by digit extraction.
  std::function<void(Poly, int)> sqfree = [&](Poly g, int mult) {
    Poly der = poly_deriv(F, g);
    if (der.empty()) {
      // g is a p-th power: g(x) = h(x^p) with coefficients' p-th roots.
      Poly h;
      for (std::size_t i = 0; i < g.size(); i += F.p())
        h.push_back(F.pow(g[i], F.q() / F.p()));  // p-th root via Frobenius inverse
      sqfree(poly_trim(std::move(h)), mult * F.p());
      return;
    }
    Poly c = poly_gcd(F, g, der);
    Poly w = poly_div(F, g, c);  // squarefree part
    int i = 1;
    while (poly_deg(w) > 0) {
      Poly y = poly_gcd(F, w, c);
      Poly fac = poly_div(F, w, y);
      if (poly_deg(fac) > 0) {
        for (auto& [part, d] : ddf(F, fac)) {
          std::vector<Poly> irr;
          edf(F, part, d, rng, irr);
          for (auto& gi : irr) record(gi, mult * i);
        }
      }
      w = std::move(y);
      c = poly_div(F, c, w);
      ++i;
    }
    if (poly_deg(c) > 0) sqfree(std::move(c), mult);
  };
  sqfree(std::move(f), 1);
  std::sort(result.begin(), result.end());
  return result;
}

bool poly_irreducible(const GF& F, const Poly& f) {
  auto fac = factor_poly(F, f);
  return fac.size() == 1 && fac[0].second == 1;
}

Mat poly_apply(const GF& F, const Poly& g, const Mat& A) {
  Mat r(A.rows, A.cols);
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    r = mat_mul(F, r, A);
    for (int i = 0; i < A.rows; ++i) r.at(i, i) = F.add(r.at(i, i), *it);
  }
  return r;
}

Poly min_poly(const GF& F, const Mat& A) {
  int n = A.rows;
  Poly mp{1};
  for (int start = 0; start < n; ++start) {
    if (poly_deg(mp) == n) break;
    // Local minimal polynomial on the basis vector e_start.
    Vec v(n, 0);
    v[start] = 1;
    std::vector<Vec> krylov{v};
    while (true) {
      Vec next = mat_vec(F, A, krylov.back());
      // Find a dependence next = sum c_i krylov[i].
      Mat M(n, static_cast<int>(krylov.size()));
      for (int i = 0; i < n; ++i)
        for (std::size_t j = 0; j < krylov.size(); ++j)
          M.at(i, static_cast<int>(j)) = krylov[j][i];
      Vec coeffs;
      if (solve(F, M, next, &coeffs)) {
        Poly local(krylov.size() + 1, 0);
        for (std::size_t i = 0; i < krylov.size(); ++i) local[i] = F.neg(coeffs[i]);
        local.back() = 1;
        // mp = lcm(mp, local)
        Poly g = poly_gcd(F, mp, local);
        mp = poly_div(F, poly_mul(F, mp, local), g);
        break;
      }
      krylov.push_back(std::move(next));
    }
  }
  return poly_monic(F, std::move(mp));
}

} // namespace ppf::ff
