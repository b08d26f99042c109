#pragma once

#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "monodromy/linalg.hpp"
#include "monodromy/rootsys.hpp"

namespace monodromy {

template <class F>
Matrix<F> exp_nilpotent(const Matrix<F>& a);

// Integral basis of the split simple Lie algebra attached to a root system:
// X_r for each root r (in root index order), then H_1..H_n for the simple
// coroots. Signs of the structure constants are fixed by extraspecial pairs,
// so the whole multiplication table is determined by the root system alone.
class Chevalley {
 public:
  RootSystem rs;

  explicit Chevalley(RootSystem r) : rs(std::move(r)) {
    int np = rs.npos;
    extra_.assign(np, {-1, -1});
    for (int g = 0; g < np; ++g) {
      if (rs.height(g) == 1) continue;
      for (int xi = 0; xi < g; ++xi) {
        std::vector<int> eta = rs.roots[g];
        for (int k = 0; k < rs.rank; ++k) eta[k] -= rs.roots[xi][k];
        int ei = rs.index_of(eta);
        if (ei >= 0 && ei < np && xi < ei) {
          extra_[g] = {xi, ei};
          break;
        }
      }
      if (extra_[g].first < 0) throw error("chevalley: no extraspecial pair");
    }
    int nr = rs.size();
    nmat_.assign(nr, std::vector<int>(nr, 0));
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nr; ++j) {
        int s = sum_index(i, j);
        if (s >= 0) nmat_[i][j] = n_of(i, j);
      }
    coroot_.resize(nr);
    for (int i = 0; i < nr; ++i) coroot_[i] = rs.coroot_coords(i);
    pair_.assign(nr, std::vector<int>(rs.rank));
    for (int i = 0; i < nr; ++i)
      for (int a = 0; a < rs.rank; ++a) pair_[i][a] = rs.pairing(rs.roots[i], a);
  }

  int dim() const { return rs.size() + rs.rank; }
  int x_index(int root_idx) const { return root_idx; }
  int h_index(int a) const { return rs.size() + a; }
  bool is_x_index(int basis_idx) const { return basis_idx < rs.size(); }

  // N(x, y) with [X_x, X_y] = N(x, y) X_{x+y}; zero when x+y is not a root
  int structure_n(int xi, int yi) const { return nmat_[xi][yi]; }

  // index of root(i) + root(j), or -1 (this includes the i = -j case)
  int sum_index(int i, int j) const {
    std::vector<int> s = rs.roots[i];
    for (int k = 0; k < rs.rank; ++k) s[k] += rs.roots[j][k];
    return rs.index_of(s);
  }

  const std::vector<int>& coroot(int root_idx) const { return coroot_[root_idx]; }

  // value of root(i) on the coweight with the given simple-coroot coordinates
  long long weight_on(int root_idx, const std::vector<long long>& h_coords) const {
    long long s = 0;
    for (int a = 0; a < rs.rank; ++a) s += h_coords[a] * pair_[root_idx][a];
    return s;
  }

  template <class F>
  Vec<F> basis_vector(int idx, const F& proto) const {
    Vec<F> v(dim(), proto.zero());
    v[idx] = proto.one();
    return v;
  }

  template <class F>
  Vec<F> bracket(const Vec<F>& u, const Vec<F>& v) const {
    const F z = u.at(0).zero();
    Vec<F> out(dim(), z);
    int nr = rs.size();
    for (int i = 0; i < dim(); ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (v[j].is_zero()) continue;
        F c = u[i] * v[j];
        if (i < nr && j < nr) {
          int s = sum_index(i, j);
          if (s >= 0) {
            out[s] += c * c.from(nmat_[i][j]);
          } else if (j == rs.negative_of(i)) {
            for (int a = 0; a < rs.rank; ++a) out[h_index(a)] += c * c.from(coroot_[i][a]);
          }
        } else if (i >= nr && j < nr) {
          out[j] += c * c.from(pair_[j][i - nr]);
        } else if (i < nr && j >= nr) {
          out[i] -= c * c.from(pair_[i][j - nr]);
        }
      }
    }
    return out;
  }

  template <class F>
  Matrix<F> ad(const Vec<F>& u) const {
    const F proto = u.at(0);
    Matrix<F> m(dim(), dim(), proto);
    for (int j = 0; j < dim(); ++j) {
      Vec<F> col = bracket(u, basis_vector(j, proto));
      for (int i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  template <class F>
  Matrix<F> ad_basis(int idx, const F& proto) const {
    return ad(basis_vector(idx, proto));
  }

  // Ad of the lift n_r = exp(X_r) exp(-X_{-r}) exp(X_r) of the reflection in
  // root r; permutes root spaces up to sign and induces s_r on the torus.
  template <class F>
  Matrix<F> weyl_lift(int root_idx, const F& proto) const {
    Matrix<F> e = exp_nilpotent(ad_basis(x_index(root_idx), proto));
    Matrix<F> f = exp_nilpotent(ad_basis(x_index(rs.negative_of(root_idx)), proto).scaled(-proto.one()));
    return e * f * e;
  }

  // Ad of the torus point with simple-coordinate values t_1..t_n: acts on X_r
  // by the character prod t_a^{r_a} and fixes the Cartan subalgebra.
  template <class F>
  Matrix<F> ad_torus(const std::vector<F>& t) const {
    if (static_cast<int>(t.size()) != rs.rank) throw error("ad_torus: wrong coordinate count");
    const F proto = t.at(0);
    Matrix<F> m(dim(), dim(), proto);
    for (int i = 0; i < rs.size(); ++i) {
      F v = proto.one();
      for (int a = 0; a < rs.rank; ++a) {
        int e = rs.roots[i][a];
        if (e > 0) v *= t[a].pow(static_cast<std::uint64_t>(e));
        else if (e < 0) v *= t[a].inv().pow(static_cast<std::uint64_t>(-e));
      }
      m(i, i) = v;
    }
    for (int a = 0; a < rs.rank; ++a) m(h_index(a), h_index(a)) = proto.one();
    return m;
  }

  // Gram matrix of the trace form of ad; integer valued on this basis
  std::vector<std::vector<long long>> killing_gram() const {
    int d = dim(), nr = rs.size();
    // sparse columns of ad e_i: cols[i][j] = list of (k, c) with [e_i, e_j] = sum c e_k
    std::vector<std::vector<std::vector<std::pair<int, long long>>>> cols(
        d, std::vector<std::vector<std::pair<int, long long>>>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto& out = cols[i][j];
        if (i < nr && j < nr) {
          int s = sum_index(i, j);
          if (s >= 0) {
            if (nmat_[i][j]) out.push_back({s, nmat_[i][j]});
          } else if (j == rs.negative_of(i)) {
            for (int a = 0; a < rs.rank; ++a)
              if (coroot_[i][a]) out.push_back({h_index(a), coroot_[i][a]});
          }
        } else if (i >= nr && j < nr) {
          if (pair_[j][i - nr]) out.push_back({j, pair_[j][i - nr]});
        } else if (i < nr && j >= nr) {
          if (pair_[i][j - nr]) out.push_back({i, -pair_[i][j - nr]});
        }
      }
    std::vector<std::vector<long long>> k(d, std::vector<long long>(d, 0));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        long long t = 0;
        for (int m = 0; m < d; ++m)
          for (auto [mid, cj] : cols[j][m])
            for (auto [fin, ci] : cols[i][mid])
              if (fin == m) t += ci * cj;
        k[i][j] = t;
      }
    return k;
  }

 private:
  std::vector<std::pair<int, int>> extra_;       // extraspecial pair per positive root
  std::vector<std::vector<int>> nmat_;
  std::vector<std::vector<int>> coroot_;
  std::vector<std::vector<int>> pair_;
  mutable std::map<std::pair<int, int>, int> memo_;

  // largest k with root(b) - k root(a) still a root
  int p_val(int a, int b) const {
    int k = 0;
    std::vector<int> cur = rs.roots[b];
    while (true) {
      for (int i = 0; i < rs.rank; ++i) cur[i] -= rs.roots[a][i];
      if (rs.is_root(cur)) ++k;
      else return k;
    }
  }

  static long long exact_div(long long num, long long den) {
    if (den == 0 || num % den) throw error("chevalley: non-integral structure constant");
    return num / den;
  }

  int n_of(int x, int y) const {
    auto key = std::make_pair(x, y);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int s = sum_index(x, y);
    if (s < 0) throw error("chevalley: N called with non-root sum");
    long long v = n_raw(x, y, s);
    int p = p_val(x, y);
    if (std::abs(v) != p + 1) throw error("chevalley: structure constant magnitude check failed");
    memo_[key] = static_cast<int>(v);
    return static_cast<int>(v);
  }

  long long n_raw(int x, int y, int s) const {
    int np = rs.npos;
    bool px = x < np, py = y < np;
    if (px && py) {
      if (y < x) return -n_of(y, x);
      auto [a, b] = extra_[s];
      if (a == x && b == y) return p_val(x, y) + 1;
      // bootstrap against the extraspecial pair of the sum:
      //   N(a,b) N(s,-x) = [b-x root] N(b,-x) N(a,b-x) - [a-x root] N(a,-x) N(b,a-x)
      long long t = 0;
      int bx = sum_index(b, rs.negative_of(x));
      if (bx >= 0) t += static_cast<long long>(n_of(b, rs.negative_of(x))) * n_of(a, bx);
      int ax = sum_index(a, rs.negative_of(x));
      if (ax >= 0) t -= static_cast<long long>(n_of(a, rs.negative_of(x))) * n_of(b, ax);
      // N(x,y) = -N(s,-x) (s,s)/(y,y)
      return exact_div(-t * rs.norm4(s), static_cast<long long>(n_of(a, b)) * rs.norm4(y));
    }
    if (!px && !py) return -n_of(rs.negative_of(x), rs.negative_of(y));
    if (!px) return -n_of(y, x);
    // x positive, y negative
    if (s < np) return exact_div(static_cast<long long>(n_of(s, rs.negative_of(y))) * rs.norm4(s), rs.norm4(x));
    int z = rs.negative_of(s);
    return exact_div(-static_cast<long long>(n_of(x, z)) * rs.norm4(z), rs.norm4(y));
  }
};

// exp of a nilpotent matrix; throws if powers do not vanish quickly
template <class F>
Matrix<F> exp_nilpotent(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw error("exp_nilpotent: square matrix required");
  Matrix<F> acc = Matrix<F>::identity(a.rows(), a.proto());
  Matrix<F> term = acc;
  for (int k = 1; k <= a.rows() + 1; ++k) {
    term = term * a;
    term = term.scaled(a.proto().from(k).inv());
    bool zero = true;
    for (int i = 0; i < a.rows() && zero; ++i)
      for (int j = 0; j < a.cols(); ++j)
        if (!term(i, j).is_zero()) { zero = false; break; }
    if (zero) return acc;
    acc = acc + term;
  }
  throw error("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace monodromy
