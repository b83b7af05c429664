#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ppf::ff {

// The finite field GF(p^m), elements encoded as integers 0..q-1 whose base-p
// digits are the coefficients of the residue polynomial.  Multiplication
// goes through exp/log tables for a primitive element, so q is expected to
// stay desk scale (up to ~10^5).
class GF {
public:
  GF(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  int add(int a, int b) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int neg(int a) const;
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long long e) const;
  int from_int(long long n) const {
    long long r = n % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int generator() const { return exp_[1]; }
  int exp(long long k) const;
  int log(int a) const;
  int frobenius(int a) const { return pow(a, p_); }
  // The defining polynomial's coefficient list (degree m, monic).
  const std::vector<int>& modulus() const { return modulus_; }

private:
  int p_, m_, q_;
  std::vector<int> exp_, log_;
  std::vector<int> modulus_;
};

// ----- dense matrices -----

struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat identity_mat(int n);
Mat mat_mul(const GF& F, const Mat& A, const Mat& B);
Mat mat_add(const GF& F, const Mat& A, const Mat& B);
Mat mat_sub(const GF& F, const Mat& A, const Mat& B);
Mat mat_scale(const GF& F, int c, const Mat& A);
Mat transpose(const Mat& A);
bool is_zero_mat(const Mat& A);

using Vec = std::vector<int>;
Vec mat_vec(const GF& F, const Mat& A, const Vec& v);
Vec vec_mat(const GF& F, const Vec& v, const Mat& A);

// Row-reduces in place; returns the rank and (optionally) pivot columns.
int rref(const GF& F, Mat& A, std::vector<int>* pivots = nullptr);
int mat_rank(const GF& F, Mat A);
// Basis of the right kernel { v : A v = 0 }.
std::vector<Vec> kernel_basis(const GF& F, const Mat& A);
// Solves A x = b; returns false if inconsistent.
bool solve(const GF& F, const Mat& A, const Vec& b, Vec* x);
// Basis of the row space, as the nonzero rows of the RREF.
std::vector<Vec> row_space_basis(const GF& F, Mat A);
// Does v lie in the span of the (row) basis?  basis must be in RREF shape.
Mat rows_to_mat(const std::vector<Vec>& rows, int cols);

// ----- polynomials (coefficients low degree first, trimmed) -----

using Poly = std::vector<int>;

Poly poly_trim(Poly f);
int poly_deg(const Poly& f);  // deg(0) = -1
Poly poly_add(const GF& F, const Poly& f, const Poly& g);
Poly poly_sub(const GF& F, const Poly& f, const Poly& g);
Poly poly_mul(const GF& F, const Poly& f, const Poly& g);
Poly poly_mod(const GF& F, Poly f, const Poly& g);
Poly poly_div(const GF& F, Poly f, const Poly& g);
Poly poly_gcd(const GF& F, Poly f, Poly g);  // monic
Poly poly_monic(const GF& F, Poly f);
Poly poly_powmod(const GF& F, Poly base, long long e, const Poly& mod);
Poly poly_deriv(const GF& F, const Poly& f);
int poly_eval(const GF& F, const Poly& f, int x);
// All roots in the field, ascending (by element encoding), with multiplicity 1
// each (multiplicities are not reported).
std::vector<int> poly_roots(const GF& F, const Poly& f);
// Full factorization into monic irreducibles with multiplicities,
// deterministic for a fixed input (internally seeded).
std::vector<std::pair<Poly, int>> factor_poly(const GF& F, Poly f);
bool poly_irreducible(const GF& F, const Poly& f);

// g(A) for a matrix A.
Mat poly_apply(const GF& F, const Poly& g, const Mat& A);
// Minimal polynomial of a square matrix (monic).
Poly min_poly(const GF& F, const Mat& A);

} // namespace ppf::ff
