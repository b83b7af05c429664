#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ppf::grp {

// A permutation of {0, ..., degree-1} stored as its image array.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  static Perm identity(int degree);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[x]; }
  bool is_identity() const;

  // Composition acts on the left: (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  int order() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.img) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Parses a comma-separated list of permutations in 1-based cycle notation,
// e.g. "(1 2 3)(4 5), (1 2)".  Cycles within one permutation may be adjacent;
// top-level commas separate generators.  The degree is the largest moved
// point unless a larger hint is given.
std::vector<Perm> parse_cycles(const std::string& text, int degree_hint = 0);

std::string to_cycle_string(const Perm& p);

} // namespace ppf::grp
