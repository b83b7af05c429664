#include "ppf/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ppf::grp {

Perm Perm::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  std::vector<int> img(a.degree());
  for (int x = 0; x < a.degree(); ++x) img[x] = a.img[b.img[x]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> inv(degree());
  for (int x = 0; x < degree(); ++x) inv[img[x]] = x;
  return Perm(std::move(inv));
}

int Perm::order() const {
  std::vector<char> seen(degree(), 0);
  long long ord = 1;
  for (int start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    int x = start;
    do {
      seen[x] = 1;
      x = img[x];
      ++len;
    } while (x != start);
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

std::vector<Perm> parse_cycles(const std::string& text, int degree_hint) {
  // First pass: tokenize into per-generator lists of cycles.
  std::vector<std::vector<std::vector<int>>> gens_cycles;
  gens_cycles.emplace_back();
  std::size_t i = 0;
  int max_point = degree_hint;
  int paren_depth = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ',' && paren_depth == 0) {
      gens_cycles.emplace_back();
      ++i;
    } else if (c == '(') {
      ++paren_depth;
      if (paren_depth != 1) throw std::invalid_argument("cycle syntax: nested parenthesis");
      std::vector<int> cycle;
      ++i;
      while (i < text.size() && text[i] != ')') {
        if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
          throw std::invalid_argument(std::string("cycle syntax: unexpected character '") + text[i] + "'");
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          v = v * 10 + (text[i] - '0');
          ++i;
        }
        if (v < 1) throw std::invalid_argument("cycle syntax: points are 1-based");
        cycle.push_back(v);
        max_point = std::max(max_point, v);
      }
      if (i == text.size()) throw std::invalid_argument("cycle syntax: unbalanced parenthesis");
      --paren_depth;
      ++i; // skip ')'
      for (std::size_t a = 0; a < cycle.size(); ++a)
        for (std::size_t b = a + 1; b < cycle.size(); ++b)
          if (cycle[a] == cycle[b])
            throw std::invalid_argument("cycle syntax: repeated point in cycle");
      gens_cycles.back().push_back(std::move(cycle));
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      throw std::invalid_argument(std::string("cycle syntax: unexpected character '") + c + "'");
    }
  }

  std::vector<Perm> out;
  for (const auto& cycles : gens_cycles) {
    Perm p = Perm::identity(max_point);
    std::vector<char> moved(max_point, 0);
    for (const auto& cyc : cycles) {
      for (int v : cyc) {
        if (moved[v - 1])
          throw std::invalid_argument("cycle syntax: point repeated across cycles");
        moved[v - 1] = 1;
      }
      for (std::size_t a = 0; a < cyc.size(); ++a) {
        int from = cyc[a] - 1;
        int to = cyc[(a + 1) % cyc.size()] - 1;
        p.img[from] = to;
      }
    }
    out.push_back(std::move(p));
  }
  // A fully empty spec ("") denotes no generators rather than one identity.
  if (out.size() == 1 && out[0].degree() == degree_hint && out[0].is_identity() && text.find('(') == std::string::npos)
    out.clear();
  return out;
}

std::string to_cycle_string(const Perm& p) {
  std::string s;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p.img[start] == start) {
      seen[start] = 1;
      continue;
    }
    s += '(';
    int x = start;
    bool first = true;
    do {
      if (!first) s += ' ';
      first = false;
      s += std::to_string(x + 1);
      seen[x] = 1;
      x = p.img[x];
    } while (x != start);
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

} // namespace ppf::grp
