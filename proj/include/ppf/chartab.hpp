#pragma once

#include "ppf/group.hpp"
#include "ppf/rational.hpp"

#include <algorithm>
#include <vector>

namespace ppf::ct {

using num::Rat;

// An element of Q(zeta_N): rational coefficients over the power basis
// zeta_N^0 .. zeta_N^{phi(N)-1}, reduced modulo the N-th cyclotomic
// polynomial.  N is not required to be minimal; reduced() computes the
// canonical form over the true conductor.
struct Cyc {
  int N = 1;
  std::vector<Rat> c;  // length phi(N)

  Cyc() : N(1), c(1) {}
  static Cyc from_rat(const Rat& r);
  static Cyc from_int(long long n) { return from_rat(Rat(n)); }
  static Cyc root_of_unity(int N, long long k);

  bool is_zero() const;
  bool is_rational() const { return N == 1 || std::all_of(c.begin() + 1, c.end(), [](const Rat& r) { return r.is_zero(); }); }
  Rat rational_part() const;  // requires is_rational()

  // Same value expressed in Q(zeta_M); N must divide M.
  Cyc lifted(int M) const;
  // Canonical form over the minimal conductor.
  Cyc reduced() const;
  // Galois twist zeta -> zeta^t (gcd(t, N) = 1); t = -1 is conjugation.
  Cyc galois(long long t) const;
  Cyc conj() const { return galois(-1); }

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Rat& r, const Cyc& a);
  friend bool operator==(const Cyc& a, const Cyc& b);
};

// The N-th cyclotomic polynomial as integer coefficients (low degree first).
const std::vector<long long>& cyclotomic_polynomial(int N);

int euler_phi(int n);

// An ordinary character table: rows are irreducible characters, columns the
// conjugacy classes of G in their canonical order.  Rows are sorted by
// (degree, value encoding) for determinism.
struct CharacterTable {
  const grp::PermutationGroup* G = nullptr;
  std::vector<std::vector<Cyc>> rows;

  int num_chars() const { return static_cast<int>(rows.size()); }
  int degree(int row) const;  // chi(1) as an integer
  const Cyc& value(int row, int cls) const { return rows[row][cls]; }
};

// Burnside-Dixon-Schneider over GF(l), l prime, l = 1 mod exp(G), lifted to
// cyclotomics via discrete logarithms.  Requires |G| <= 500.
CharacterTable character_table(const grp::PermutationGroup& G);

// <chi_i, chi_j> as an exact rational (characters can be non-real).
Rat inner_product(const CharacterTable& T, int i, int j);

// dim of the fixed space of the subgroup N on the module with character
// row: (1/|N|) sum over N of chi.  Throws if the result is not a
// nonnegative integer (broken table).
int fixed_space_dim(const CharacterTable& T, int row, const grp::Subgroup& N);
// Same, with the subgroup given as a plain element list.
int fixed_space_dim(const CharacterTable& T, int row, const std::vector<int>& elems);

} // namespace ppf::ct
