#pragma once

#include <map>
#include <vector>

#include "monodromy/chevalley.hpp"
#include "monodromy/rational.hpp"

// Principal sl2 data in exact arithmetic: the regular nilpotent X (sum of
// simple root vectors), the grading element H (sum of all positive coroots)
// and the lowering element Y solved from [X,Y] = H.  The coefficients grow
// factorially with the Coxeter number, hence arbitrary precision throughout.

namespace monodromy {

struct Sl2Triple {
  Vec<Rat> x, h, y;
};

inline Sl2Triple principal_triple(const Chevalley& ch) {
  const Rat proto = Rat::make(0);
  const RootSystem& rs = ch.rs;
  Sl2Triple t{Vec<Rat>(ch.dim(), proto.zero()), Vec<Rat>(ch.dim(), proto.zero()),
              Vec<Rat>(ch.dim(), proto.zero())};
  for (int i = 0; i < rs.rank; ++i) t.x[ch.x_index(rs.simple_index[i])] = proto.one();
  auto hs = half_sum_positive_coroots(rs);
  for (int a = 0; a < rs.rank; ++a) t.h[ch.h_index(a)] = proto.from(hs.doubled[a]);

  // Y lies in the lowest-weight slice spanned by the negatives of the simple
  // root vectors; its coefficients come from the linear system [X,Y] = H
  Matrix<Rat> a(ch.dim(), rs.rank, proto);
  std::vector<int> neg(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    neg[i] = ch.x_index(rs.negative_of(rs.simple_index[i]));
    Vec<Rat> col = ch.bracket(t.x, ch.basis_vector(neg[i], proto));
    for (int k = 0; k < ch.dim(); ++k) a(k, i) = col[k];
  }
  auto c = a.solve(t.h);
  if (!c) throw error("principal_triple: [X,Y] = H has no solution");
  for (int i = 0; i < rs.rank; ++i) t.y[neg[i]] = (*c)[i];

  auto scaled = [&](const Vec<Rat>& v, long long s) {
    Vec<Rat> out = v;
    for (auto& e : out) e *= proto.from(s);
    return out;
  };
  if (ch.bracket(t.x, t.y) != t.h || ch.bracket(t.h, t.x) != scaled(t.x, 2) ||
      ch.bracket(t.h, t.y) != scaled(t.y, -2))
    throw error("principal_triple: triple relations failed");
  return t;
}

struct KostantData {
  std::vector<int> exponents;               // ascending, with multiplicity
  std::vector<Vec<Rat>> centralizer_basis;  // aligned with exponents
  std::map<long long, int> h_eigenvalue_mult;
  int centralizer_dim = 0;
};

// The centralizer of X is computed gradewise: ad X shifts the height grading
// up by one, so its kernel splits over the grades and the grade of each
// kernel line is an exponent of the algebra.
inline KostantData kostant_decomposition(const Chevalley& ch, const Sl2Triple& t) {
  const Rat proto = Rat::make(0);
  const RootSystem& rs = ch.rs;
  Matrix<Rat> ad_x = ch.ad(t.x);
  int max_ht = rs.height(rs.highest_root_index());

  auto grade_of = [&](int idx) { return ch.is_x_index(idx) ? rs.height(idx) : 0LL; };
  std::map<long long, std::vector<int>> slice;
  for (int i = 0; i < ch.dim(); ++i) slice[grade_of(i)].push_back(i);

  KostantData kd;
  std::vector<std::pair<int, Vec<Rat>>> found;
  for (long long g = -max_ht; g <= max_ht; ++g) {
    const auto& cols = slice[g];
    if (cols.empty()) continue;
    const auto& rows = slice[g + 1];  // map references survive the insertion
    Matrix<Rat> block(static_cast<int>(rows.size()), static_cast<int>(cols.size()), proto);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t c = 0; c < cols.size(); ++c) block(static_cast<int>(r), static_cast<int>(c)) = ad_x(rows[r], cols[c]);
    Matrix<Rat> ker = block.kernel_basis();
    for (int k = 0; k < ker.rows(); ++k) {
      Vec<Rat> v(ch.dim(), proto.zero());
      for (size_t c = 0; c < cols.size(); ++c) v[cols[c]] = ker(k, static_cast<int>(c));
      found.emplace_back(static_cast<int>(g), v);
      ++kd.centralizer_dim;
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [g, v] : found) {
    kd.exponents.push_back(g);
    kd.centralizer_basis.push_back(std::move(v));
  }
  for (int r = 0; r < rs.size(); ++r) ++kd.h_eigenvalue_mult[2 * rs.height(r)];
  kd.h_eigenvalue_mult[0] += rs.rank;
  return kd;
}

struct ComponentFlags {
  bool levi_nonzero = false;      // alpha evaluated on the torus part
  bool lowering_nonzero = false;  // coefficient on the minus-alpha root line
};

// For each exponent m, apply ad Y to the grade-2m centralizer vector m and
// then m+1 times; the two flags record where the results have support.
inline std::vector<ComponentFlags> ad_power_component_check(const Chevalley& ch,
                                                            const Sl2Triple& t,
                                                            const KostantData& kd,
                                                            int simple = 0) {
  const Rat proto = Rat::make(0);
  const RootSystem& rs = ch.rs;
  int alpha = rs.simple_index[simple];
  int minus_alpha = ch.x_index(rs.negative_of(alpha));
  Matrix<Rat> ad_y = ch.ad(t.y);

  std::vector<ComponentFlags> out;
  for (size_t e = 0; e < kd.exponents.size(); ++e) {
    Vec<Rat> w = kd.centralizer_basis[e];
    for (int k = 0; k < kd.exponents[e]; ++k) w = ad_y.apply(w);
    Rat pair_val = proto.zero();
    for (int a = 0; a < rs.rank; ++a)
      pair_val += w[ch.h_index(a)] * proto.from(rs.pairing(rs.roots[alpha], a));
    Vec<Rat> w2 = ad_y.apply(w);
    out.push_back({!pair_val.is_zero(), !w2[minus_alpha].is_zero()});
  }
  return out;
}

namespace detail {

// (n+1) x (n+1) integer matrices, enough for the special-linear model below
using ZMat = std::vector<std::vector<mpz_class>>;

inline ZMat zmat(int d) { return ZMat(d, std::vector<mpz_class>(d, mpz_class(0))); }

inline ZMat zcommutator(const ZMat& a, const ZMat& b) {
  int d = static_cast<int>(a.size());
  ZMat out = zmat(d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a[i][k] != 0)
        for (int j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
      if (b[i][k] != 0)
        for (int j = 0; j < d; ++j) out[i][j] -= b[i][k] * a[k][j];
    }
  return out;
}

}  // namespace detail

struct ClosedFormVerdict {
  Rat h1, h2;
  Rat difference;   // h2 - 2 h1
  Rat closed_form;  // (-1)^(h-1) (h+1)! h (n-1)(n-2)...(n-h+1)
  bool matches = false;
  bool nonzero = false;
};

// Trace-free (n+1)-square matrix model: X is the regular nilpotent Jordan
// block, Y its principal partner with coefficients k_i = i(n-i+1), and the
// grade-2h centralizer vector is the sum of the matrix units h steps above
// the diagonal.  After h lowering steps only the diagonal survives; its
// partial sums give the coefficients on the simple coweights, and the lemma
// is the stated product formula for h2 - 2 h1, compared up to overall sign.
inline ClosedFormVerdict lie_an_closed_form_check(int n, int h) {
  if (n < 1 || h < 1 || h > n) throw error("lie_an_closed_form_check: need 1 <= h <= n");
  int d = n + 1;
  detail::ZMat y = detail::zmat(d), v = detail::zmat(d);
  for (int i = 1; i <= n; ++i) y[i][i - 1] = mpz_class(static_cast<long>(i) * (n - i + 1));
  for (int i = 0; i + h < d; ++i) v[i][i + h] = 1;
  for (int k = 0; k < h; ++k) v = detail::zcommutator(y, v);

  // v is now diagonal with entries d_1..d_{n+1}; coefficient on the i-th
  // simple coweight is the i-th partial sum
  mpz_class h1 = v[0][0], h2 = v[0][0] + v[1][1];
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && v[i][j] != 0) throw error("lie_an_closed_form_check: lowering left the torus");

  mpz_class rhs = h;
  for (int k = 2; k <= h + 1; ++k) rhs *= k;
  for (int k = 1; k <= h - 1; ++k) rhs *= (n - k);
  if (h % 2 == 0) rhs = -rhs;

  ClosedFormVerdict out;
  out.h1 = Rat(mpq_class(h1));
  out.h2 = Rat(mpq_class(h2));
  out.difference = Rat(mpq_class(h2 - 2 * h1));
  out.closed_form = Rat(mpq_class(rhs));
  mpz_class lhs = h2 - 2 * h1;
  out.matches = lhs == rhs || lhs == -rhs;
  out.nonzero = lhs != 0;
  return out;
}

// Fixed-space dimension of the adjoint action of the image of -1 under the
// principal cocharacter: the torus plus every root of even height.
inline int even_height_fixed_dim(const RootSystem& rs) {
  int count = rs.rank;
  for (int r = 0; r < rs.size(); ++r)
    if (rs.height(r) % 2 == 0) ++count;
  return count;
}

// Fixed-space dimension of diag(1,-1) on the twisted symmetric power of the
// plane of degree 2m: counted on the monomial basis and by the parity
// formula (m odd -> m, m even -> m+1); the two must agree.
inline int sym_fixed_dim(int m) {
  if (m < 1) throw error("sym_fixed_dim: m must be positive");
  int brute = 0;
  for (int b = 0; b <= 2 * m; ++b)
    if ((b + m) % 2 == 0) ++brute;
  int formula = m % 2 == 1 ? m : m + 1;
  if (brute != formula) throw error("sym_fixed_dim: parity formula mismatch");
  return brute;
}

}  // namespace monodromy
