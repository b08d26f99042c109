#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "monodromy/fp.hpp"

namespace monodromy {

template <class F>
using Vec = std::vector<F>;

// Dense matrix over an exact field. The `proto` element mints field constants
// (needed because Fp carries a runtime modulus).
template <class F>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c, F proto) : r_(r), c_(c), proto_(proto), a_(static_cast<size_t>(r) * c, proto.zero()) {}

  static Matrix identity(int n, F proto) {
    Matrix m(n, n, proto);
    for (int i = 0; i < n; ++i) m(i, i) = proto.one();
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  F proto() const { return proto_; }

  F& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw error("Matrix: size mismatch in product");
    Matrix out(a.r_, b.c_, a.proto_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        F v = a(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) out(i, j) += v * b(k, j);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw error("Matrix: size mismatch in sum");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw error("Matrix: size mismatch in difference");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
  }
  Matrix scaled(F s) const {
    Matrix out = *this;
    for (auto& x : out.a_) x *= s;
    return out;
  }

  Vec<F> apply(const Vec<F>& v) const {
    if (static_cast<int>(v.size()) != c_) throw error("Matrix: apply size mismatch");
    Vec<F> out(r_, proto_.zero());
    for (int i = 0; i < r_; ++i) {
      F s = proto_.zero();
      for (int j = 0; j < c_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  Matrix transpose() const {
    Matrix out(c_, r_, proto_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix pow(std::uint64_t e) const {
    if (r_ != c_) throw error("Matrix: pow needs a square matrix");
    Matrix r = identity(r_, proto_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // in-place reduced row echelon form; returns pivot column indices
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int sel = -1;
      for (int i = row; i < r_; ++i)
        if (!(*this)(i, col).is_zero()) { sel = i; break; }
      if (sel < 0) continue;
      if (sel != row)
        for (int j = 0; j < c_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
      F d = (*this)(row, col).inv();
      for (int j = col; j < c_; ++j) (*this)(row, j) *= d;
      for (int i = 0; i < r_; ++i) {
        if (i == row) continue;
        F f = (*this)(i, col);
        if (f.is_zero()) continue;
        for (int j = col; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix tmp = *this;
    return static_cast<int>(tmp.rref().size());
  }
  int nullity() const { return c_ - rank(); }

  // basis of the right kernel, as rows of the returned matrix
  Matrix kernel_basis() const {
    Matrix tmp = *this;
    auto pivots = tmp.rref();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix out(c_ - static_cast<int>(pivots.size()), c_, proto_);
    int k = 0;
    for (int col = 0; col < c_; ++col) {
      if (is_pivot[col]) continue;
      out(k, col) = proto_.one();
      for (size_t pi = 0; pi < pivots.size(); ++pi) out(k, pivots[pi]) = -tmp(static_cast<int>(pi), col);
      ++k;
    }
    return out;
  }

  std::optional<Vec<F>> solve(const Vec<F>& b) const {
    if (static_cast<int>(b.size()) != r_) throw error("Matrix: solve size mismatch");
    Matrix aug(r_, c_ + 1, proto_);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == c_) return std::nullopt;  // inconsistent
    Vec<F> x(c_, proto_.zero());
    for (size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug(static_cast<int>(pi), c_);
    return x;
  }

  std::optional<Matrix> inverse() const {
    if (r_ != c_) throw error("Matrix: inverse needs a square matrix");
    Matrix aug(r_, 2 * c_, proto_);
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = proto_.one();
    }
    auto pivots = aug.rref();
    // singular iff some pivot escapes into the identity block
    if (static_cast<int>(pivots.size()) != r_ || (r_ > 0 && pivots.back() >= c_))
      return std::nullopt;
    Matrix out(r_, c_, proto_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(i, j) = aug(i, c_ + j);
    return out;
  }

  F det() const {
    if (r_ != c_) throw error("Matrix: det needs a square matrix");
    Matrix tmp = *this;
    F d = proto_.one();
    for (int col = 0; col < c_; ++col) {
      int sel = -1;
      for (int i = col; i < r_; ++i)
        if (!tmp(i, col).is_zero()) { sel = i; break; }
      if (sel < 0) return proto_.zero();
      if (sel != col) {
        for (int j = 0; j < c_; ++j) std::swap(tmp(sel, j), tmp(col, j));
        d = -d;
      }
      d *= tmp(col, col);
      F piv = tmp(col, col).inv();
      for (int i = col + 1; i < r_; ++i) {
        F f = tmp(i, col);
        if (f.is_zero()) continue;
        f *= piv;
        for (int j = col; j < c_; ++j) tmp(i, j) -= f * tmp(col, j);
      }
    }
    return d;
  }

  F trace() const {
    if (r_ != c_) throw error("Matrix: trace needs a square matrix");
    F t = proto_.zero();
    for (int i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int r_, c_;
  F proto_;
  std::vector<F> a_;
};

// coefficients of det(xI - A), low degree first, computed through an upper
// Hessenberg similarity reduction (no divisions by integers, so any field works)
template <class F>
Vec<F> charpoly(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw error("charpoly: square matrix required");
  int n = a.rows();
  F z = a.proto().zero(), one = a.proto().one();
  Matrix<F> h = a;
  for (int j = 0; j + 2 < n; ++j) {
    int sel = -1;
    for (int i = j + 1; i < n; ++i)
      if (!h(i, j).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h(sel, k), h(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h(k, sel), h(k, j + 1));
    }
    F piv = h(j + 1, j).inv();
    for (int i = j + 2; i < n; ++i) {
      F m = h(i, j);
      if (m.is_zero()) continue;
      m *= piv;
      for (int k = 0; k < n; ++k) h(i, k) -= m * h(j + 1, k);
      for (int k = 0; k < n; ++k) h(k, j + 1) += m * h(k, i);
    }
  }
  // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i h[i-1][k-1] (prod subdiagonal) p_{i-1}
  std::vector<Vec<F>> p(n + 1);
  p[0] = {one};
  for (int k = 1; k <= n; ++k) {
    Vec<F>& prev = p[k - 1];
    Vec<F> cur(k + 1, z);
    for (size_t t = 0; t < prev.size(); ++t) {
      cur[t + 1] += prev[t];
      cur[t] -= h(k - 1, k - 1) * prev[t];
    }
    F prod = one;
    for (int i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod.is_zero()) break;
      F coef = h(i - 1, k - 1) * prod;
      if (coef.is_zero()) continue;
      for (size_t t = 0; t < p[i - 1].size(); ++t) cur[t] -= coef * p[i - 1][t];
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

template <class F>
F poly_eval(const Vec<F>& coeffs, F x) {
  F acc = x.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Row space in reduced echelon form; the basis matrix is canonical for the
// subspace, which makes comparisons and deterministic output easy.
template <class F>
class Subspace {
 public:
  explicit Subspace(int ambient, F proto) : ambient_(ambient), proto_(proto) {}

  static Subspace span_of(const std::vector<Vec<F>>& vecs, int ambient, F proto) {
    Subspace s(ambient, proto);
    for (const auto& v : vecs) s.add(v);
    return s;
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  F proto() const { return proto_; }
  const std::vector<Vec<F>>& basis() const { return rows_; }

  // reduce v against the echelon rows; returns the residue
  Vec<F> reduce(Vec<F> v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      F c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) v[j] -= c * rows_[i][j];
    }
    return v;
  }

  bool contains(const Vec<F>& v) const {
    for (const F& x : reduce(v))
      if (!x.is_zero()) return false;
    return true;
  }

  // add a vector; true if the dimension grew
  bool add(const Vec<F>& v) {
    if (static_cast<int>(v.size()) != ambient_) throw error("Subspace: wrong vector length");
    Vec<F> r = reduce(v);
    int piv = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    F d = r[piv].inv();
    for (int j = 0; j < ambient_; ++j) r[j] *= d;
    // keep earlier rows fully reduced
    for (size_t i = 0; i < rows_.size(); ++i) {
      F c = rows_[i][piv];
      if (c.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) rows_[i][j] -= c * r[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

  Subspace sum(const Subspace& o) const {
    Subspace s = *this;
    for (const auto& v : o.rows_) s.add(v);
    return s;
  }

  Subspace intersect(const Subspace& o) const {
    // kernel of [U^T | -W^T] gives coefficient pairs with equal combinations
    if (ambient_ != o.ambient_) throw error("Subspace: ambient mismatch");
    int du = dim(), dw = o.dim();
    Subspace out(ambient_, proto_);
    if (du == 0 || dw == 0) return out;
    Matrix<F> m(ambient_, du + dw, proto_);
    for (int j = 0; j < du; ++j)
      for (int i = 0; i < ambient_; ++i) m(i, j) = rows_[j][i];
    for (int j = 0; j < dw; ++j)
      for (int i = 0; i < ambient_; ++i) m(i, du + j) = -o.rows_[j][i];
    Matrix<F> ker = m.kernel_basis();
    for (int k = 0; k < ker.rows(); ++k) {
      Vec<F> v(ambient_, proto_.zero());
      for (int j = 0; j < du; ++j)
        for (int i = 0; i < ambient_; ++i) v[i] += ker(k, j) * rows_[j][i];
      out.add(v);
    }
    return out;
  }

  bool contains_subspace(const Subspace& o) const {
    for (const auto& v : o.rows_)
      if (!contains(v)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && rows_ == o.rows_;
  }

 private:
  int ambient_;
  F proto_;
  std::vector<Vec<F>> rows_;
  std::vector<int> pivots_;
};

template <class F>
Vec<F> random_vec(int n, F proto, std::mt19937_64& rng) {
  Vec<F> v(n, proto.zero());
  for (auto& x : v) x = proto.from(static_cast<long long>(rng() % 1000003));
  return v;
}

}  // namespace monodromy
