#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "monodromy/chevalley.hpp"
#include "monodromy/fp.hpp"
#include "monodromy/linalg.hpp"
#include "monodromy/permutation.hpp"
#include "monodromy/rootsys.hpp"

// Concrete matrix lifts of torus-normalizer subgroups in the standard
// representations, the determinant-square section criterion for the two-fold
// cover of GL_n, and archimedean fixed-space dimensions for involutions in
// the supported matrix groups.

namespace monodromy {

enum class MatGroup { sl, sp, so };

// frozen conventions: antidiagonal symmetric form x_1 y_m + ... + x_m y_1
// for so, and the split antidiagonal alternating form
// x_1 y_2n + ... + x_n y_{n+1} - x_{n+1} y_n - ... - x_2n y_1 for sp
inline std::vector<int> form_signs(MatGroup g, int m) {
  if (g == MatGroup::sl) throw error("form_signs: sl carries no bilinear form");
  if (g == MatGroup::sp && m % 2 != 0) throw error("form_signs: sp needs even size");
  std::vector<int> s(m, 1);
  if (g == MatGroup::sp)
    for (int i = m / 2; i < m; ++i) s[i] = -1;
  return s;
}

inline Matrix<Fp> bilinear_form(MatGroup g, int m, const Fp& proto) {
  auto s = form_signs(g, m);
  Matrix<Fp> j(m, m, proto);
  for (int i = 0; i < m; ++i) j(i, m - 1 - i) = proto.from(s[i]);
  return j;
}

struct StdMatrix {
  MatGroup tag = MatGroup::sl;
  Matrix<Fp> m;
};

inline void validate_std(const StdMatrix& s) {
  int n = s.m.rows();
  if (s.m.cols() != n) throw error("StdMatrix: not square");
  if (s.tag == MatGroup::sl || s.tag == MatGroup::so) {
    if (!(s.m.det() == s.m.proto().one())) throw error("StdMatrix: determinant is not one");
  }
  if (s.tag != MatGroup::sl) {
    Matrix<Fp> j = bilinear_form(s.tag, n, s.m.proto());
    if (!(s.m * j * s.m.transpose() == j)) throw error("StdMatrix: form not preserved");
  }
}

inline StdMatrix make_std(MatGroup tag, Matrix<Fp> m) {
  StdMatrix s{tag, std::move(m)};
  validate_std(s);
  return s;
}

// n x n permutation matrix of an even permutation; odd ones have
// determinant -1 and fall outside the special linear group
inline StdMatrix even_perm_lift(const Perm& sigma, int n, const Fp& proto) {
  if (sigma.size() != n) throw error("even_perm_lift: permutation degree mismatch");
  if (!sigma.is_even()) throw error("even_perm_lift: permutation is odd");
  Matrix<Fp> m(n, n, proto);
  for (int i = 0; i < n; ++i) m(sigma[i], i) = proto.one();
  return make_std(MatGroup::sl, std::move(m));
}

// basis layout for sp: positions 0..n-1 hold e_1..e_n and positions
// n..2n-1 hold e'_n..e'_1, which realizes the pairing (e_i, e'_i) = 1 as
// the frozen antidiagonal form
inline int sp_prime_pos(int n, int i) { return 2 * n - 1 - i; }

// the generator d_i sends e_i to -e'_i and e'_i to e_i, fixing the rest;
// each has order four and together they generate a (Z/4)^n inside Sp_2n
inline std::vector<StdMatrix> sp_tilde_d_generators(int n, std::uint64_t l) {
  if (l == 2) throw error("sp_tilde_d_generators: modulus must be odd");
  Fp proto = Fp::make(0, l);
  std::vector<StdMatrix> out;
  for (int i = 0; i < n; ++i) {
    Matrix<Fp> m = Matrix<Fp>::identity(2 * n, proto);
    int p = sp_prime_pos(n, i);
    m(i, i) = proto.zero();
    m(p, p) = proto.zero();
    m(p, i) = -proto.one();
    m(i, p) = proto.one();
    out.push_back(make_std(MatGroup::sp, std::move(m)));
  }
  return out;
}

// section of the symmetric group inside Sp_2n: permute the e_i and the
// e'_i by the same indices
inline StdMatrix sp_perm_section(const Perm& sigma, int n, const Fp& proto) {
  if (sigma.size() != n) throw error("sp_perm_section: permutation degree mismatch");
  Matrix<Fp> m(2 * n, 2 * n, proto);
  for (int i = 0; i < n; ++i) {
    m(sigma[i], i) = proto.one();
    m(sp_prime_pos(n, sigma[i]), sp_prime_pos(n, i)) = proto.one();
  }
  return make_std(MatGroup::sp, std::move(m));
}

namespace detail {

inline std::vector<std::uint64_t> mat_key(const Matrix<Fp>& m) {
  std::vector<std::uint64_t> k;
  k.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) k.push_back(m(i, j).value());
  return k;
}

struct EnumeratedGroup {
  std::vector<Matrix<Fp>> elems;  // index 0 is the identity
  std::map<std::vector<std::uint64_t>, size_t> index;

  size_t at(const Matrix<Fp>& m) const {
    auto it = index.find(mat_key(m));
    if (it == index.end()) throw error("EnumeratedGroup: element escaped the closure");
    return it->second;
  }
  size_t mul(size_t a, size_t b) const { return at(elems[a] * elems[b]); }
  size_t inv(size_t a) const {
    auto m = elems[a].inverse();
    if (!m) throw error("EnumeratedGroup: singular member");
    return at(*m);
  }
};

inline EnumeratedGroup enumerate_closure(const std::vector<Matrix<Fp>>& gens, size_t cap) {
  if (gens.empty()) throw error("enumerate_closure: no generators");
  EnumeratedGroup g;
  Matrix<Fp> id = Matrix<Fp>::identity(gens[0].rows(), gens[0].proto());
  g.elems.push_back(id);
  g.index[mat_key(id)] = 0;
  std::vector<size_t> work{0};
  while (!work.empty()) {
    size_t cur = work.back();
    work.pop_back();
    for (const auto& gen : gens) {
      Matrix<Fp> next = g.elems[cur] * gen;
      auto key = mat_key(next);
      if (g.index.count(key)) continue;
      if (g.elems.size() >= cap) throw error("enumerate_closure: closure exceeds the cap");
      g.index[key] = g.elems.size();
      work.push_back(g.elems.size());
      g.elems.push_back(std::move(next));
    }
  }
  return g;
}

// square roots in the prime field by Tonelli-Shanks
inline std::optional<Fp> sqrt_fp(const Fp& a) {
  std::uint64_t l = a.modulus();
  if (a.is_zero()) return a;
  Fp one = a.one();
  if (l == 2) return a;
  if (!(a.pow((l - 1) / 2) == one)) return std::nullopt;
  if (l % 4 == 3) return a.pow((l + 1) / 4);
  std::uint64_t q = l - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Fp z = a.from(2);
  while (z.pow((l - 1) / 2) == one) z = z + one;
  Fp m_exp = z.pow(q), c = m_exp, t = a.pow(q), r = a.pow((q + 1) / 2);
  std::uint64_t m = s;
  while (!(t == one)) {
    Fp t2 = t;
    std::uint64_t i = 0;
    while (!(t2 == one)) {
      t2 = t2 * t2;
      ++i;
      if (i == m) return std::nullopt;
    }
    Fp b = c;
    for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

}  // namespace detail

struct DetSquareResult {
  bool has_root = false;
  std::vector<Fp> chi;                // character values aligned with closure
  std::vector<Matrix<Fp>> closure;
  size_t abelianization_order = 0;
};

// Decides whether det restricted to the generated group is the square of a
// character, by enumerating the closure, passing to the quotient by the
// derived subgroup, and extending a candidate character one cyclic step at
// a time.  A section of the group into the squared-determinant cover of
// GL_n exists exactly when the answer is yes.
inline DetSquareResult det_square_criterion(const std::vector<Matrix<Fp>>& gens,
                                            size_t cap = 1000000) {
  using detail::EnumeratedGroup;
  EnumeratedGroup g = detail::enumerate_closure(gens, cap);
  size_t n = g.elems.size();

  // derived subgroup: subgroup closure of all commutators, which is already
  // normal, so no extra conjugation pass is needed
  std::vector<char> in_derived(n, 0);
  in_derived[0] = 1;
  std::vector<size_t> derived{0}, work;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      size_t c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!in_derived[c]) {
        in_derived[c] = 1;
        derived.push_back(c);
        work.push_back(c);
      }
    }
  while (!work.empty()) {
    size_t cur = work.back();
    work.pop_back();
    for (size_t d : derived) {
      size_t p = g.mul(cur, d);
      if (!in_derived[p]) {
        in_derived[p] = 1;
        derived.push_back(p);
        work.push_back(p);
      }
    }
  }

  // canonical coset representative: smallest index in h * derived
  std::vector<size_t> canon(n);
  std::vector<char> seen(n, 0);
  for (size_t h = 0; h < n; ++h) {
    if (seen[h]) continue;
    size_t best = h;
    std::vector<size_t> coset;
    for (size_t d : derived) coset.push_back(g.mul(h, d));
    for (size_t x : coset) best = std::min(best, x);
    for (size_t x : coset) {
      canon[x] = best;
      seen[x] = 1;
    }
  }

  Fp proto = gens[0].proto();
  std::vector<Fp> det_of(n, proto.zero());
  for (size_t h = 0; h < n; ++h) det_of[h] = g.elems[h].det();

  DetSquareResult res;
  res.closure = g.elems;
  std::map<size_t, Fp> assigned;  // canon index -> character value
  assigned.emplace(canon[0], proto.one());
  for (size_t h = 0; h < n; ++h) res.abelianization_order += canon[h] == h ? 1 : 0;

  // depth-first extension over the abelianization: each new generator can
  // take at most the two square roots of its determinant
  std::function<bool()> extend = [&]() -> bool {
    size_t pick = n;
    for (size_t h = 0; h < n; ++h)
      if (canon[h] == h && !assigned.count(h)) {
        pick = h;
        break;
      }
    if (pick == n) return true;
    // relative order of pick over the assigned subgroup
    std::vector<size_t> powers{pick};
    while (!assigned.count(canon[g.mul(powers.back(), pick)]))
      powers.push_back(canon[g.mul(powers.back(), pick)]);
    size_t k = powers.size() + 1;
    Fp base = assigned.at(canon[g.mul(powers.back(), pick)]);
    auto root = detail::sqrt_fp(det_of[pick]);
    if (!root) return false;
    for (Fp v : {*root, -*root}) {
      if (!(v.pow(k) == base)) continue;
      std::vector<std::pair<size_t, Fp>> added;
      bool ok = true;
      std::vector<std::pair<size_t, Fp>> snapshot(assigned.begin(), assigned.end());
      for (const auto& [s, val] : snapshot) {
        Fp cur = val;
        size_t at = s;
        for (size_t j = 1; j < k && ok; ++j) {
          at = canon[g.mul(at, pick)];
          cur = cur * v;
          auto it = assigned.find(at);
          if (it == assigned.end()) {
            assigned.emplace(at, cur);
            added.emplace_back(at, cur);
          } else if (!(it->second == cur)) {
            ok = false;
          }
        }
      }
      if (ok && extend()) return true;
      for (const auto& [idx, val] : added) assigned.erase(idx);
    }
    return false;
  };

  res.has_root = extend();
  if (res.has_root) {
    res.chi.assign(n, proto.zero());
    for (size_t h = 0; h < n; ++h) res.chi[h] = assigned.at(canon[h]);
  }
  return res;
}

namespace detail {

// number of basis vectors of the matrix algebra fixed by conjugation with
// the diagonal sign matrix eps; the basis pairs entry (i,j) with
// (m-1-j, m-1-i) for the antidiagonal forms
inline int fixed_basis_count(MatGroup tag, const std::vector<int>& eps) {
  int m = static_cast<int>(eps.size());
  if (tag == MatGroup::sl) {
    int count = m - 1;  // trace-zero diagonal
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && eps[i] * eps[j] == 1) ++count;
    return count;
  }
  auto s = form_signs(tag, m);
  int count = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int i2 = m - 1 - j, j2 = m - 1 - i;
      if (i == i2 && j == j2) {
        if (-s[i2] * s[j2] != 1) continue;  // antidiagonal unit absent from the algebra
      } else if (std::make_pair(i, j) > std::make_pair(i2, j2)) {
        continue;  // one basis vector per two-element orbit
      }
      if (eps[i] * eps[j] == 1) ++count;
    }
  return count;
}

inline long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace detail

// Fixed-space dimension of the adjoint action of the standard involution
// with d positive eigenvalue pairs, computed from the closed form
// rank + f and, independently, by counting fixed basis vectors of the
// explicit matrix algebra; the two must agree.
inline int real_h0_classical(Family f, int rank, int d) {
  using detail::choose2;
  int n = f == Family::A ? rank + 1 : rank;
  if (d <= 0 || d >= n) throw error("real_h0_classical: need 0 < d < n");
  long long fixed_roots = 0;
  std::vector<int> eps;
  switch (f) {
    case Family::A: {
      fixed_roots = 2 * (choose2(d) + choose2(n - d));
      eps.assign(n, -1);
      for (int i = 0; i < d; ++i) eps[i] = 1;
      break;
    }
    case Family::B: {
      fixed_roots = 4 * (choose2(d) + choose2(n - d)) + 2 * d;
      eps.assign(2 * n + 1, -1);
      eps[n] = 1;
      for (int i = 0; i < d; ++i) eps[i] = eps[2 * n - i] = 1;
      break;
    }
    case Family::C:
    case Family::D: {
      fixed_roots = 4 * (choose2(d) + choose2(n - d)) + (f == Family::C ? 2 * n : 0);
      eps.assign(2 * n, -1);
      for (int i = 0; i < d; ++i) eps[i] = eps[2 * n - 1 - i] = 1;
      break;
    }
    default:
      throw error("real_h0_classical: classical families only");
  }
  MatGroup tag = f == Family::A ? MatGroup::sl : (f == Family::C ? MatGroup::sp : MatGroup::so);
  int by_formula = rank + static_cast<int>(fixed_roots);
  int by_count = detail::fixed_basis_count(tag, eps);
  if (by_formula != by_count) throw error("real_h0_classical: computation paths disagree");
  return by_formula;
}

// maximum of the fixed-space dimension over the admissible involutions; the
// maximum sits at d = n - 1
inline int real_h0_max(Family f, int rank) {
  int n = f == Family::A ? rank + 1 : rank;
  if (n < 2) throw error("real_h0_max: no admissible involution");
  int best = -1;
  for (int d = 1; d < n; ++d) best = std::max(best, real_h0_classical(f, rank, d));
  if (best != real_h0_classical(f, rank, n - 1))
    throw error("real_h0_max: maximum not attained at d = n - 1");
  return best;
}

struct E7RealBound {
  int min_minus_dim = 0;   // smallest (-1)-eigenspace on the subsystem part
  int candidates = 0;      // order-two torus elements acting nontrivially there
  int bound = 0;           // rank + #roots - twice the subsystem rank
  bool holds = false;      // min_minus_dim at least twice the subsystem rank
};

// Scan all order-two elements of the adjoint torus of E7 over F_l (a
// superset of the images of the order-two torus elements of any cover) and
// measure their (-1)-eigenspace on the root lines of the embedded A7
// subsystem; every one acting nontrivially there rules out at least 14
// fixed directions, which caps the fixed space at 7 + 126 - 14 = 119.
inline E7RealBound e7_real_bound_check(std::uint64_t l) {
  if (l == 2) throw error("e7_real_bound_check: modulus must be odd");
  Fp proto = Fp::make(0, l);
  Chevalley ch(RootSystem::build(Family::E, 7));
  const RootSystem& rs = ch.rs;
  A7InE7 sub = a7_subsystem_of_e7(rs);
  Fp minus_one = -proto.one();

  E7RealBound out;
  out.min_minus_dim = static_cast<int>(sub.member_indices.size()) + 1;
  for (int mask = 0; mask < (1 << rs.rank); ++mask) {
    std::vector<Fp> t(rs.rank, proto.one());
    for (int a = 0; a < rs.rank; ++a)
      if (mask & (1 << a)) t[a] = minus_one;
    Matrix<Fp> ad = ch.ad_torus(t);
    int minus = 0;
    for (int r : sub.member_indices)
      if (ad(r, r) == minus_one) ++minus;
    if (minus == 0) continue;
    ++out.candidates;
    out.min_minus_dim = std::min(out.min_minus_dim, minus);
  }
  out.holds = out.min_minus_dim >= 2 * 7;
  out.bound = rs.rank + rs.size() - 2 * 7;
  return out;
}

}  // namespace monodromy
