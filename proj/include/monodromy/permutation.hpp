#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "monodromy/fp.hpp"

namespace monodromy {

// Permutation of {0..n-1}; img[i] is the image of point i.
struct Perm {
  std::vector<int> img;

  Perm() = default;
  explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
  explicit Perm(std::vector<int> v) : img(std::move(v)) {}

  int size() const { return static_cast<int>(img.size()); }
  int operator[](int i) const { return img[i]; }
  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img[i] != i) return false;
    return true;
  }
  // (a*b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw error("Perm: size mismatch");
    Perm out(a.size());
    for (int i = 0; i < a.size(); ++i) out.img[i] = a.img[b.img[i]];
    return out;
  }
  Perm inverse() const {
    Perm out(size());
    for (int i = 0; i < size(); ++i) out.img[img[i]] = i;
    return out;
  }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (int s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> c;
      int x = s;
      while (!seen[x]) {
        seen[x] = true;
        c.push_back(x);
        x = img[x];
      }
      if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
  }
  bool is_even() const {
    int t = 0;
    for (const auto& c : cycles()) t += static_cast<int>(c.size()) - 1;
    return t % 2 == 0;
  }
};

inline std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int npts) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(npts, false);
  for (int s = 0; s < npts; ++s) {
    if (seen[s]) continue;
    std::vector<int> orb{s};
    seen[s] = true;
    for (size_t k = 0; k < orb.size(); ++k)
      for (const Perm& g : gens) {
        int y = g[orb[k]];
        if (!seen[y]) {
          seen[y] = true;
          orb.push_back(y);
        }
      }
    out.push_back(std::move(orb));
  }
  return out;
}

inline std::vector<int> orbit_of(const std::vector<Perm>& gens, int start) {
  std::vector<int> orb{start};
  std::set<int> seen{start};
  for (size_t k = 0; k < orb.size(); ++k)
    for (const Perm& g : gens) {
      int y = g[orb[k]];
      if (seen.insert(y).second) orb.push_back(y);
    }
  return orb;
}

// Group order of <gens> by a naive Schreier-Sims stabilizer chain. Orders are
// computed as products of orbit lengths, never by listing elements.
inline std::uint64_t group_order(std::vector<Perm> gens, int npts) {
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Perm& g) { return g.is_identity(); }),
             gens.end());
  if (gens.empty()) return 1;
  std::uint64_t order = 1;
  std::vector<Perm> level = std::move(gens);
  for (int depth = 0; depth < npts && !level.empty(); ++depth) {
    int base = -1;
    for (int i = 0; i < npts && base < 0; ++i)
      for (const Perm& g : level)
        if (g[i] != i) { base = i; break; }
    if (base < 0) break;
    std::map<int, Perm> transversal;
    transversal.emplace(base, Perm(npts));
    std::vector<int> frontier{base};
    for (size_t k = 0; k < frontier.size(); ++k) {
      int x = frontier[k];
      for (const Perm& g : level) {
        int y = g[x];
        if (!transversal.count(y)) {
          transversal.emplace(y, g * transversal.at(x));
          frontier.push_back(y);
        }
      }
    }
    order *= transversal.size();
    std::set<Perm> stab;
    for (const auto& [x, ux] : transversal)
      for (const Perm& g : level) {
        Perm s = transversal.at(g[x]).inverse() * (g * ux);
        if (!s.is_identity()) stab.insert(std::move(s));
      }
    level.assign(stab.begin(), stab.end());
  }
  return order;
}

}  // namespace monodromy
