#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "monodromy/permutation.hpp"

namespace monodromy {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

inline Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw error(std::string("unknown family letter: ") + c);
  }
}

// Irreducible crystallographic root system. Roots are integer coordinate
// vectors in the simple root basis; positives come first sorted by (height,
// lex), and root(npos + i) = -root(i).
class RootSystem {
 public:
  Family family;
  int rank = 0;
  int npos = 0;
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<int> simple_index;          // root index of alpha_i

  static RootSystem build(Family f, int n) {
    RootSystem rs;
    rs.family = f;
    rs.rank = n;
    rs.amb_ = simple_roots_doubled(f, n);
    int nn = n;
    rs.cartan.assign(nn, std::vector<int>(nn));
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j) {
        long long num = 2 * dot(rs.amb_[i], rs.amb_[j]);
        long long den = dot(rs.amb_[j], rs.amb_[j]);
        if (num % den) throw error("root system: non-integral Cartan entry");
        rs.cartan[i][j] = static_cast<int>(num / den);
      }
    rs.close_roots();
    return rs;
  }

  int size() const { return static_cast<int>(roots.size()); }
  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  int index_of(const std::vector<int>& r) const {
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
  }
  bool is_root(const std::vector<int>& r) const { return index_.count(r) > 0; }
  bool is_positive(int idx) const { return idx < npos; }
  int negative_of(int idx) const { return idx < npos ? idx + npos : idx - npos; }

  int height(int idx) const {
    int h = 0;
    for (int c : roots[idx]) h += c;
    return h;
  }

  // squared length in an ambient model scaled so that values are integers;
  // only ratios are meaningful
  long long norm4(int idx) const { return norm4(roots[idx]); }
  long long norm4(const std::vector<int>& r) const {
    auto v = ambient(r);
    return dot(v, v);
  }
  long long min_norm4() const { return min_norm4_; }
  long long max_norm4() const { return max_norm4_; }
  bool is_long(int idx) const { return norm4(idx) == max_norm4_; }
  bool is_short(int idx) const { return norm4(idx) == min_norm4_; }
  bool simply_laced() const { return min_norm4_ == max_norm4_; }

  // <root r, alpha_j^vee>
  int pairing(const std::vector<int>& r, int j) const {
    int s = 0;
    for (int i = 0; i < rank; ++i) s += r[i] * cartan[i][j];
    return s;
  }
  // <r, beta^vee> for an arbitrary root beta
  int pairing_root(const std::vector<int>& r, const std::vector<int>& beta) const {
    long long num = 2 * dot(ambient(r), ambient(beta));
    long long den = norm4(beta);
    if (num % den) throw error("root system: non-integral root pairing");
    return static_cast<int>(num / den);
  }

  // coordinates of beta^vee in the simple coroot basis (always integral)
  std::vector<int> coroot_coords(int idx) const {
    const auto& r = roots[idx];
    std::vector<int> out(rank);
    long long nb = norm4(idx);
    for (int i = 0; i < rank; ++i) {
      long long num = static_cast<long long>(r[i]) * dot(amb_[i], amb_[i]);
      if (num % nb) throw error("root system: non-integral coroot coordinate");
      out[i] = static_cast<int>(num / nb);
    }
    return out;
  }

  std::vector<int> ambient(const std::vector<int>& r) const {
    std::vector<int> v(amb_[0].size(), 0);
    for (int i = 0; i < rank; ++i)
      for (size_t k = 0; k < v.size(); ++k) v[k] += r[i] * amb_[i][k];
    return v;
  }
  int ambient_dim() const { return static_cast<int>(amb_[0].size()); }
  int root_from_ambient(const std::vector<int>& v) const {
    auto it = amb_index_.find(v);
    return it == amb_index_.end() ? -1 : it->second;
  }

  std::vector<int> reflect(const std::vector<int>& r, const std::vector<int>& beta) const {
    int c = pairing_root(r, beta);
    std::vector<int> out = r;
    for (int i = 0; i < rank; ++i) out[i] -= c * beta[i];
    return out;
  }

  // reflection in the given root, as a permutation of root indices
  Perm reflection_perm(int root_idx) const {
    Perm p(size());
    for (int i = 0; i < size(); ++i) {
      int j = index_of(reflect(roots[i], roots[root_idx]));
      if (j < 0) throw error("root system: reflection left the system");
      p.img[i] = j;
    }
    return p;
  }

  std::vector<Perm> weyl_generators() const {
    std::vector<Perm> out;
    for (int i = 0; i < rank; ++i) out.push_back(reflection_perm(simple_index[i]));
    return out;
  }

  std::uint64_t weyl_order_closed_form() const {
    auto fact = [](int k) {
      std::uint64_t r = 1;
      for (int i = 2; i <= k; ++i) r *= i;
      return r;
    };
    switch (family) {
      case Family::A: return fact(rank + 1);
      case Family::B:
      case Family::C: return (1ull << rank) * fact(rank);
      case Family::D: return (1ull << (rank - 1)) * fact(rank);
      case Family::E:
        return rank == 6 ? 51840ull : rank == 7 ? 2903040ull : 696729600ull;
      case Family::F: return 1152;
      case Family::G: return 12;
    }
    throw error("unreachable");
  }

  int highest_root_index() const {
    int best = 0;
    for (int i = 1; i < npos; ++i)
      if (height(i) > height(best)) best = i;
    return best;
  }

 private:
  std::vector<std::vector<int>> amb_;  // doubled ambient coords of simple roots
  std::map<std::vector<int>, int> index_;
  std::map<std::vector<int>, int> amb_index_;
  long long min_norm4_ = 0, max_norm4_ = 0;

  static long long dot(const std::vector<int>& u, const std::vector<int>& w) {
    long long s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(u[i]) * w[i];
    return s;
  }

  static std::vector<std::vector<int>> simple_roots_doubled(Family f, int n) {
    auto unit_diff = [](int m, int a, int b) {
      std::vector<int> v(m, 0);
      v[a] = 2;
      v[b] = -2;
      return v;
    };
    std::vector<std::vector<int>> s;
    switch (f) {
      case Family::A: {
        if (n < 1) throw error("A_n needs n >= 1");
        for (int k = 0; k < n; ++k) s.push_back(unit_diff(n + 1, k, k + 1));
        return s;
      }
      case Family::B: {
        if (n < 2) throw error("B_n needs n >= 2");
        for (int k = 0; k + 1 < n; ++k) s.push_back(unit_diff(n, k, k + 1));
        std::vector<int> last(n, 0);
        last[n - 1] = 2;
        s.push_back(last);
        return s;
      }
      case Family::C: {
        if (n < 2) throw error("C_n needs n >= 2");
        for (int k = 0; k + 1 < n; ++k) s.push_back(unit_diff(n, k, k + 1));
        std::vector<int> last(n, 0);
        last[n - 1] = 4;
        s.push_back(last);
        return s;
      }
      case Family::D: {
        if (n < 3) throw error("D_n needs n >= 3");
        for (int k = 0; k + 1 < n; ++k) s.push_back(unit_diff(n, k, k + 1));
        std::vector<int> last(n, 0);
        last[n - 2] = 2;
        last[n - 1] = 2;
        s.push_back(last);
        return s;
      }
      case Family::G: {
        if (n != 2) throw error("G_n only exists for n = 2");
        return {{2, -2, 0}, {-4, 2, 2}};
      }
      case Family::F: {
        if (n != 4) throw error("F_n only exists for n = 4");
        return {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
      }
      case Family::E: {
        if (n < 6 || n > 8) throw error("E_n only exists for n = 6, 7, 8");
        std::vector<std::vector<int>> all = {
            {1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0}};
        for (int k = 0; k < 6; ++k) all.push_back(unit_diff(8, k + 1, k));
        all.resize(n);
        return all;
      }
    }
    throw error("unreachable");
  }

  void close_roots() {
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < rank; ++i) {
      std::vector<int> e(rank, 0);
      e[i] = 1;
      all.insert(e);
      frontier.push_back(e);
    }
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& b : frontier)
        for (int j = 0; j < rank; ++j) {
          int c = pairing(b, j);
          std::vector<int> r = b;
          r[j] -= c;  // reflection through alpha_j in simple coordinates
          for (const auto& cand : {r, negated(r)}) {
            if (std::all_of(cand.begin(), cand.end(), [](int x) { return x == 0; })) continue;
            if (all.insert(cand).second) next.push_back(cand);
          }
        }
      frontier = std::move(next);
    }
    std::vector<std::vector<int>> pos;
    for (const auto& r : all) {
      int h = 0;
      for (int c : r) h += c;
      if (h > 0) pos.push_back(r);
    }
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
      int ha = 0, hb = 0;
      for (int c : a) ha += c;
      for (int c : b) hb += c;
      return ha != hb ? ha < hb : a < b;
    });
    npos = static_cast<int>(pos.size());
    roots = pos;
    for (const auto& r : pos) roots.push_back(negated(r));
    for (int i = 0; i < size(); ++i) {
      index_[roots[i]] = i;
      amb_index_[ambient(roots[i])] = i;
    }
    simple_index.assign(rank, -1);
    for (int i = 0; i < rank; ++i) {
      std::vector<int> e(rank, 0);
      e[i] = 1;
      simple_index[i] = index_of(e);
      if (simple_index[i] < 0) throw error("root system: missing simple root");
    }
    min_norm4_ = max_norm4_ = norm4(0);
    for (int i = 1; i < size(); ++i) {
      min_norm4_ = std::min(min_norm4_, norm4(i));
      max_norm4_ = std::max(max_norm4_, norm4(i));
    }
  }

  static std::vector<int> negated(const std::vector<int>& r) {
    std::vector<int> out = r;
    for (int& x : out) x = -x;
    return out;
  }
};

inline int root_count_closed_form(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  throw error("unreachable");
}

// ---------------------------------------------------------------------------
// subgroup generators used for the residual-image decompositions
// ---------------------------------------------------------------------------

// permutation of roots induced by a permutation of ambient coordinates
inline Perm coordinate_perm_action(const RootSystem& rs, const Perm& sigma) {
  Perm out(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    auto v = rs.ambient(rs.roots[i]);
    std::vector<int> w(v.size());
    for (size_t k = 0; k < v.size(); ++k) w[sigma[static_cast<int>(k)]] = v[k];
    int j = rs.root_from_ambient(w);
    if (j < 0) throw error("coordinate permutation does not preserve the root system");
    out.img[i] = j;
  }
  return out;
}

// permutation of roots induced by flipping the sign of one ambient coordinate
inline Perm coordinate_sign_flip_action(const RootSystem& rs, int coord) {
  Perm out(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    auto v = rs.ambient(rs.roots[i]);
    v[coord] = -v[coord];
    int j = rs.root_from_ambient(v);
    if (j < 0) throw error("sign flip does not preserve the root system");
    out.img[i] = j;
  }
  return out;
}

inline std::vector<Perm> alternating_group_generators_on_letters(int m) {
  // 3-cycle (0 1 2) plus a long cycle (even one when m is even)
  if (m < 3) return {};
  std::vector<Perm> out;
  Perm c3(m);
  c3.img[0] = 1;
  c3.img[1] = 2;
  c3.img[2] = 0;
  out.push_back(c3);
  Perm cl(m);
  if (m % 2 == 1) {
    for (int i = 0; i < m; ++i) cl.img[i] = (i + 1) % m;
  } else {
    cl.img[0] = 0;
    for (int i = 1; i < m; ++i) cl.img[i] = i % (m - 1) + 1;
  }
  if (!cl.is_identity()) out.push_back(cl);
  return out;
}

struct A7InE7 {
  std::vector<int> member_indices;       // the 56 roots of the subsystem
  std::vector<int> chain_root_indices;   // simple chain: lowest root, then six simples
  std::vector<std::vector<int>> chain_cartan;
};

// A7 subsystem of E7 cut out by the extended diagram with the branch node
// removed: the lowest root attaches to the end of the long arm.
inline A7InE7 a7_subsystem_of_e7(const RootSystem& rs) {
  if (rs.family != Family::E || rs.rank != 7) throw error("a7_subsystem_of_e7: needs E7");
  A7InE7 out;
  int theta = rs.highest_root_index();
  out.chain_root_indices.push_back(rs.negative_of(theta));
  for (int i : {0, 2, 3, 4, 5, 6}) out.chain_root_indices.push_back(rs.simple_index[i]);
  // verify the chain really is an A7 diagram
  int m = 7;
  out.chain_cartan.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out.chain_cartan[a][b] =
          rs.pairing_root(rs.roots[out.chain_root_indices[a]], rs.roots[out.chain_root_indices[b]]);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int want = a == b ? 2 : (std::abs(a - b) == 1 ? -1 : 0);
      if (out.chain_cartan[a][b] != want) throw error("a7_subsystem_of_e7: chain is not A7");
    }
  // close the chain under its own reflections
  std::set<int> members(out.chain_root_indices.begin(), out.chain_root_indices.end());
  std::vector<Perm> refl;
  for (int idx : out.chain_root_indices) refl.push_back(rs.reflection_perm(idx));
  std::vector<int> frontier(members.begin(), members.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (const Perm& p : refl) {
        int y = p[x];
        if (members.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  out.member_indices.assign(members.begin(), members.end());
  return out;
}

// Generators of the even subgroup attached to each family, acting on roots:
//   A_n:    alternating group on the n+1 coordinate letters
//   B/C/D:  alternating letters plus every coordinate sign flip
//   E_7:    even words in the A7-chain reflections (an A_8 image)
inline std::vector<Perm> alternating_generators(const RootSystem& rs) {
  switch (rs.family) {
    case Family::A: {
      std::vector<Perm> out;
      for (const Perm& s : alternating_group_generators_on_letters(rs.rank + 1))
        out.push_back(coordinate_perm_action(rs, s));
      return out;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      std::vector<Perm> out;
      for (const Perm& s : alternating_group_generators_on_letters(rs.rank))
        out.push_back(coordinate_perm_action(rs, s));
      for (int k = 0; k < rs.rank; ++k) out.push_back(coordinate_sign_flip_action(rs, k));
      return out;
    }
    case Family::E: {
      if (rs.rank != 7) throw error("alternating_generators: E family supported at rank 7 only");
      auto sub = a7_subsystem_of_e7(rs);
      std::vector<Perm> tau;
      for (int idx : sub.chain_root_indices) tau.push_back(rs.reflection_perm(idx));
      std::vector<Perm> out;
      for (size_t i = 1; i < tau.size(); ++i) out.push_back(tau[0] * tau[i]);
      return out;
    }
    default:
      throw error("alternating_generators: unsupported family");
  }
}

// ---------------------------------------------------------------------------
// half sum of positive coroots
// ---------------------------------------------------------------------------

struct HalfSumCoroots {
  std::vector<long long> doubled;  // 2 * coordinates in the simple coroot basis
  bool integral = false;
};

inline HalfSumCoroots half_sum_positive_coroots(const RootSystem& rs) {
  HalfSumCoroots out;
  out.doubled.assign(rs.rank, 0);
  for (int i = 0; i < rs.npos; ++i) {
    auto c = rs.coroot_coords(i);
    for (int k = 0; k < rs.rank; ++k) out.doubled[k] += c[k];
  }
  out.integral = std::all_of(out.doubled.begin(), out.doubled.end(),
                             [](long long x) { return x % 2 == 0; });
  return out;
}

}  // namespace monodromy
