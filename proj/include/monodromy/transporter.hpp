#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/chevalley.hpp"
#include "monodromy/fp.hpp"
#include "monodromy/linalg.hpp"
#include "monodromy/ntlifts.hpp"
#include "monodromy/permutation.hpp"
#include "monodromy/rootsys.hpp"

// Regular semisimple elements of the torus normalizer above a prescribed
// Weyl element, the eigenline decomposition with respect to the new torus
// they centralize, and component / intersection measurements of submodules
// against that decomposition.  Everything is seed-deterministic.

namespace monodromy {

struct RegSSElement {
  Matrix<Fp> aut;                 // adjoint action of the found element
  Perm weyl_image;                // induced permutation of the root indices
  std::vector<int> lift_word;     // root indices of the reflection lifts used
  std::vector<Fp> torus_witness;  // torus coordinates multiplied in front
};

inline RegSSElement find_regular_ss_roots(const Chevalley& ch, const std::vector<int>& root_word,
                                          const Fp& proto, std::uint64_t seed, int budget = 4096) {
  const RootSystem& rs = ch.rs;
  std::uint64_t l = proto.modulus();
  if (l == 0) throw error("find_regular_ss: field modulus required");
  if (rs.weyl_order_closed_form() % l == 0)
    throw error("find_regular_ss: group order divisible by the modulus");

  Matrix<Fp> base = Matrix<Fp>::identity(ch.dim(), proto);
  Perm w(rs.size());
  for (int r : root_word) {
    if (r < 0 || r >= rs.size()) throw error("find_regular_ss: root index out of range");
    base = base * ch.weyl_lift(r, proto);
    w = w * rs.reflection_perm(r);
  }

  // Sample torus coordinates inside the subgroup of m-th powers, m the lcm
  // of the cycle lengths of w on the roots.  Every cycle product of the
  // adjoint matrix is then an m-th power, so the centralizer torus it cuts
  // out can split over the base field.
  std::uint64_t m = 1;
  for (const auto& c : w.cycles()) m = std::lcm(m, static_cast<std::uint64_t>(c.size()));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(1, l - 1);
  Matrix<Fp> id = Matrix<Fp>::identity(ch.dim(), proto);
  int best = ch.dim();
  for (int tries = 0; tries < budget; ++tries) {
    std::vector<Fp> t(rs.rank, proto.zero());
    for (auto& c : t) c = proto.from(static_cast<long long>(pick(rng))).pow(m);
    Matrix<Fp> aut = ch.ad_torus(t) * base;
    int fixed = (aut - id).nullity();
    if (fixed == rs.rank) return {std::move(aut), w, root_word, t};
    best = std::min(best, fixed);
  }
  throw error("find_regular_ss: budget exhausted; best fixed-space dimension " +
              std::to_string(best) + " against target " + std::to_string(rs.rank));
}

// word given in simple reflection positions 0..rank-1
inline RegSSElement find_regular_ss(const Chevalley& ch, const std::vector<int>& simple_word,
                                    const Fp& proto, std::uint64_t seed, int budget = 4096) {
  std::vector<int> roots;
  for (int s : simple_word) {
    if (s < 0 || s >= ch.rs.rank) throw error("find_regular_ss: simple index out of range");
    roots.push_back(ch.rs.simple_index[s]);
  }
  return find_regular_ss_roots(ch, roots, proto, seed, budget);
}

struct PrimedLine {
  Vec<Fp> vec;              // spanning vector of the eigenline
  std::vector<Fp> weight;   // weight functional values on the fixed-torus basis
  Fp sigma_value;           // eigenvalue of the automorphism on the line
};

struct PrimedDecomposition {
  Subspace<Fp> t_prime;
  std::vector<Vec<Fp>> t_basis;
  std::vector<PrimedLine> lines;
};

// Split the algebra into the fixed torus of the automorphism and the
// simultaneous eigenlines of that torus's adjoint action.  Needs every
// eigenvalue to lie in the base field.
inline PrimedDecomposition primed_decomposition(const Chevalley& ch, const RegSSElement& rss) {
  const Fp proto = rss.aut.proto();
  std::uint64_t l = proto.modulus();
  int dim = ch.dim(), rank = ch.rs.rank;
  Matrix<Fp> id = Matrix<Fp>::identity(dim, proto);
  Matrix<Fp> ker = (rss.aut - id).kernel_basis();
  if (ker.rows() != rank) throw error("primed_decomposition: element is not regular");

  PrimedDecomposition out{Subspace<Fp>(dim, proto), {}, {}};
  for (int i = 0; i < rank; ++i) {
    Vec<Fp> h(dim, proto.zero());
    for (int j = 0; j < dim; ++j) h[j] = ker(i, j);
    out.t_basis.push_back(h);
    out.t_prime.add(h);
  }

  std::mt19937_64 rng(0x51caff01dULL);
  std::uniform_int_distribution<std::uint64_t> pick(1, l - 1);
  bool split_failure = false;
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec<Fp> h(dim, proto.zero());
    for (int i = 0; i < rank; ++i) {
      Fp c = attempt == 0 ? proto.from(i + 1) : proto.from(static_cast<long long>(pick(rng)));
      for (int j = 0; j < dim; ++j) h[j] += c * out.t_basis[i][j];
    }
    Matrix<Fp> ad_h = ch.ad(h);
    // the zero eigenspace must be exactly the fixed torus, or h is not generic
    Matrix<Fp> zker = ad_h.kernel_basis();
    if (zker.rows() != rank) continue;
    Subspace<Fp> zsp(dim, proto);
    for (int i = 0; i < zker.rows(); ++i) {
      Vec<Fp> v(dim, proto.zero());
      for (int j = 0; j < dim; ++j) v[j] = zker(i, j);
      zsp.add(v);
    }
    if (!(zsp == out.t_prime)) continue;

    Vec<Fp> cp = charpoly(ad_h);
    std::vector<PrimedLine> lines;
    bool collision = false;
    for (std::uint64_t lam = 1; lam < l && !collision; ++lam) {
      Fp lv = proto.from(static_cast<long long>(lam));
      if (!poly_eval(cp, lv).is_zero()) continue;
      Matrix<Fp> shifted = ad_h - id.scaled(lv);
      Matrix<Fp> kb = shifted.kernel_basis();
      if (kb.rows() == 0) continue;
      if (kb.rows() > 1) {
        collision = true;  // two weight values collided; retry with another h
        break;
      }
      Vec<Fp> v(dim, proto.zero());
      for (int j = 0; j < dim; ++j) v[j] = kb(0, j);
      lines.push_back({v, {}, proto.zero()});
    }
    if (collision) continue;
    if (rank + static_cast<int>(lines.size()) < dim) {
      split_failure = true;
      continue;
    }

    std::vector<Matrix<Fp>> ad_t;
    for (const auto& hb : out.t_basis) ad_t.push_back(ch.ad(hb));
    auto eigen_ratio = [&](const Vec<Fp>& image, const Vec<Fp>& v) {
      int at = -1;
      for (int j = 0; j < dim && at < 0; ++j)
        if (!v[j].is_zero()) at = j;
      Fp c = image[at] / v[at];
      for (int j = 0; j < dim; ++j)
        if (!(image[j] == c * v[j])) throw error("primed_decomposition: line is not an eigenline");
      return c;
    };
    for (auto& line : lines) {
      for (const auto& a : ad_t) line.weight.push_back(eigen_ratio(a.apply(line.vec), line.vec));
      line.sigma_value = eigen_ratio(rss.aut.apply(line.vec), line.vec);
    }
    out.lines = std::move(lines);
    return out;
  }
  if (split_failure) {
    std::uint64_t need = 1;
    for (const auto& c : rss.weyl_image.cycles())
      need = std::lcm(need, static_cast<std::uint64_t>(c.size()));
    throw error("primed_decomposition: spectrum does not split over this field; needs l = 1 mod " +
                std::to_string(need) + " so the eigenline values lie in the base field");
  }
  throw error("primed_decomposition: no generic element of the fixed torus found");
}

// index of the line whose weight functional is the negative, or -1
inline int negation_partner(const PrimedDecomposition& dec, int line_idx) {
  const auto& w = dec.lines[line_idx].weight;
  for (size_t j = 0; j < dec.lines.size(); ++j) {
    bool neg = true;
    for (size_t i = 0; i < w.size() && neg; ++i)
      if (!(dec.lines[j].weight[i] == -w[i])) neg = false;
    if (neg) return static_cast<int>(j);
  }
  return -1;
}

namespace detail {

inline std::vector<Vec<Fp>> kernel_of_weight(const PrimedDecomposition& dec, int line_idx) {
  const Fp proto = dec.t_prime.proto();
  int rank = static_cast<int>(dec.t_basis.size());
  Matrix<Fp> row(1, rank, proto);
  bool nonzero = false;
  for (int i = 0; i < rank; ++i) {
    row(0, i) = dec.lines[line_idx].weight[i];
    nonzero = nonzero || !row(0, i).is_zero();
  }
  if (!nonzero) throw error("component_flags: weight functional vanishes on the torus");
  Matrix<Fp> kb = row.kernel_basis();
  std::vector<Vec<Fp>> out;
  int dim = dec.t_prime.ambient();
  for (int k = 0; k < kb.rows(); ++k) {
    Vec<Fp> v(dim, proto.zero());
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < dim; ++j) v[j] += kb(k, i) * dec.t_basis[i][j];
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

struct PrimedFlags {
  bool has_l_component = false;        // projection onto [g_a', g_-a'] inside t'
  bool has_g_minus_component = false;  // projection onto the opposite eigenline
};

// Project a submodule along the primed decomposition and report whether it
// meets the bracket line of the chosen eigenline pair and the opposite line.
inline PrimedFlags component_flags(const Chevalley& ch, const PrimedDecomposition& dec,
                                   int line_idx, const Subspace<Fp>& m) {
  if (line_idx < 0 || line_idx >= static_cast<int>(dec.lines.size()))
    throw error("component_flags: line index out of range");
  int neg = negation_partner(dec, line_idx);
  if (neg < 0) throw error("component_flags: negation partner missing");
  const Fp proto = dec.t_prime.proto();
  int dim = dec.t_prime.ambient(), rank = static_cast<int>(dec.t_basis.size());

  Vec<Fp> l_vec = ch.bracket(dec.lines[line_idx].vec, dec.lines[neg].vec);
  bool zero = true;
  for (const auto& e : l_vec) zero = zero && e.is_zero();
  if (zero || !dec.t_prime.contains(l_vec))
    throw error("component_flags: bracket line is degenerate");

  auto t_alpha = detail::kernel_of_weight(dec, line_idx);
  Matrix<Fp> b(dim, dim, proto);
  int col = 0;
  for (const auto& v : t_alpha) {
    for (int j = 0; j < dim; ++j) b(j, col) = v[j];
    ++col;
  }
  int l_col = col;
  for (int j = 0; j < dim; ++j) b(j, col) = l_vec[j];
  ++col;
  int line_col0 = col;
  for (const auto& line : dec.lines) {
    for (int j = 0; j < dim; ++j) b(j, col) = line.vec[j];
    ++col;
  }
  if (col != dim || l_col != rank - 1) throw error("component_flags: decomposition size mismatch");
  auto binv = b.inverse();
  if (!binv) throw error("component_flags: decomposition basis is singular");

  PrimedFlags f;
  for (const auto& v : m.basis()) {
    Vec<Fp> x = binv->apply(v);
    f.has_l_component = f.has_l_component || !x[l_col].is_zero();
    f.has_g_minus_component = f.has_g_minus_component || !x[line_col0 + neg].is_zero();
  }
  return f;
}

struct IntersectionDims {
  int t_prime_cap_t = 0;
  int t_prime_alpha_cap_t = 0;
  int w_cap_t = 0;
  bool w_cap_inside_t_prime = false;
};

// the three intersection dimensions against a reference torus t, where
// W = (kernel of the weight functional on t') + the chosen eigenline
inline IntersectionDims intersection_dims(const PrimedDecomposition& dec, int line_idx,
                                          const Subspace<Fp>& t_sub) {
  if (line_idx < 0 || line_idx >= static_cast<int>(dec.lines.size()))
    throw error("intersection_dims: line index out of range");
  const Fp proto = dec.t_prime.proto();
  int dim = dec.t_prime.ambient();
  Subspace<Fp> t_alpha(dim, proto);
  for (const auto& v : detail::kernel_of_weight(dec, line_idx)) t_alpha.add(v);
  Subspace<Fp> w = t_alpha;
  w.add(dec.lines[line_idx].vec);
  IntersectionDims out;
  out.t_prime_cap_t = dec.t_prime.intersect(t_sub).dim();
  out.t_prime_alpha_cap_t = t_alpha.intersect(t_sub).dim();
  Subspace<Fp> wt = w.intersect(t_sub);
  out.w_cap_t = wt.dim();
  out.w_cap_inside_t_prime = dec.t_prime.contains_subspace(wt);
  return out;
}

// Replace a single reflection by the product with the reflection of a
// strongly orthogonal root whose rank-one subalgebras commute, landing the
// Weyl image in the even part.
inline RegSSElement modified_sigma(const Chevalley& ch, int alpha_root, const Fp& proto,
                                   std::uint64_t seed, int budget = 4096) {
  const RootSystem& rs = ch.rs;
  if (alpha_root < 0 || alpha_root >= rs.size()) throw error("modified_sigma: bad root index");
  int beta = -1;
  for (int b = 0; b < rs.npos && beta < 0; ++b) {
    if (b == alpha_root || b == rs.negative_of(alpha_root)) continue;
    if (rs.pairing_root(rs.roots[alpha_root], rs.roots[b]) != 0) continue;
    std::vector<int> sum = rs.roots[alpha_root], dif = rs.roots[alpha_root];
    for (int k = 0; k < rs.rank; ++k) {
      sum[k] += rs.roots[b][k];
      dif[k] -= rs.roots[b][k];
    }
    if (rs.is_root(sum) || rs.is_root(dif)) continue;
    beta = b;
  }
  if (beta < 0) throw error("modified_sigma: no orthogonal commuting root (rank too small)");
  return find_regular_ss_roots(ch, {alpha_root, beta}, proto, seed, budget);
}

// ---------------------------------------------------------------------------
// Low-rank fixtures: the displayed conjugation identities of the rank-one
// swap model, the three-cycle model and the symplectic model, replayed entry
// for entry over F_l.  They need l = 1 mod 24 so the cube and eighth roots
// of unity exist in the field.

struct FixtureReport {
  bool conjugation_ok = false;     // P^-1 Sigma P is the stated diagonal
  bool torus_identity_ok = false;  // displayed torus conjugation identity
  bool root_identity_ok = false;   // displayed root-vector conjugation identity
  bool forcing_ok = false;         // intersection / diagonal-forcing claim
  int alpha_order = 0;             // multiplicative order of the root value
  bool all_ok() const { return conjugation_ok && torus_identity_ok && root_identity_ok && forcing_ok; }
};

namespace detail {

inline Matrix<Fp> mat(const std::vector<std::vector<Fp>>& rows) {
  int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
  Matrix<Fp> m(r, c, rows[0][0]);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  return m;
}

inline Matrix<Fp> int_mat(const std::vector<std::vector<long long>>& rows, const Fp& proto) {
  int r = static_cast<int>(rows.size()), c = static_cast<int>(rows[0].size());
  Matrix<Fp> m(r, c, proto);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = proto.from(rows[i][j]);
  return m;
}

inline Vec<Fp> flatten(const Matrix<Fp>& m) {
  Vec<Fp> v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

// lhs == ratio * rhs entrywise; the ratio is fixed by the caller across a
// whole family of parameter tuples
inline bool proportional_with(const Matrix<Fp>& lhs, const Matrix<Fp>& rhs, const Fp& ratio) {
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (!(lhs(i, j) == ratio * rhs(i, j))) return false;
  return true;
}

inline std::optional<Fp> first_ratio(const Matrix<Fp>& lhs, const Matrix<Fp>& rhs) {
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (!rhs(i, j).is_zero()) return lhs(i, j) / rhs(i, j);
  return std::nullopt;
}

}  // namespace detail

inline FixtureReport fixture_swap_2x2(std::uint64_t l) {
  using detail::int_mat;
  Fp proto = Fp::make(0, l);
  Fp half = proto.from(2).inv();
  FixtureReport rep;

  Matrix<Fp> sigma = int_mat({{0, 1}, {1, 0}}, proto);
  Matrix<Fp> p = int_mat({{1, 1}, {1, -1}}, proto);
  Matrix<Fp> pinv = *p.inverse();
  rep.conjugation_ok = pinv * sigma * p == int_mat({{1, 0}, {0, -1}}, proto);

  rep.torus_identity_ok = true;
  for (auto [h1, h2] : std::vector<std::pair<long long, long long>>{{1, 0}, {0, 1}, {3, 5}}) {
    Matrix<Fp> lhs = pinv * int_mat({{h1, 0}, {0, h2}}, proto) * p;
    Matrix<Fp> rhs =
        int_mat({{-h1 - h2, -h1 + h2}, {-h1 + h2, -h1 - h2}}, proto).scaled(-half);
    rep.torus_identity_ok = rep.torus_identity_ok && lhs == rhs;
  }
  rep.root_identity_ok = pinv * int_mat({{0, 1}, {0, 0}}, proto) * p ==
                         int_mat({{-1, 1}, {-1, 1}}, proto).scaled(-half);

  // intersections in the four-dimensional matrix space of the model
  Subspace<Fp> t(4, proto), t_prime(4, proto), t_prime_alpha(4, proto), w(4, proto);
  t.add(detail::flatten(int_mat({{1, 0}, {0, 0}}, proto)));
  t.add(detail::flatten(int_mat({{0, 0}, {0, 1}}, proto)));
  t_prime.add(detail::flatten(int_mat({{1, 0}, {0, 1}}, proto)));
  t_prime.add(detail::flatten(int_mat({{0, 1}, {1, 0}}, proto)));
  t_prime_alpha.add(detail::flatten(int_mat({{1, 0}, {0, 1}}, proto)));
  w = t_prime_alpha;
  w.add(detail::flatten(int_mat({{1, -1}, {1, -1}}, proto)));
  Subspace<Fp> identity_line(4, proto);
  identity_line.add(detail::flatten(int_mat({{1, 0}, {0, 1}}, proto)));
  rep.forcing_ok = t_prime.intersect(t) == identity_line &&
                   t_prime_alpha.intersect(t) == identity_line && w.intersect(t) == identity_line;

  // the eigenline value: conjugation by sigma negates the line of
  // [[x,-x],[x,-x]], so the value is -1 of order two
  Matrix<Fp> g_line = int_mat({{1, -1}, {1, -1}}, proto);
  rep.alpha_order = sigma * g_line * *sigma.inverse() == g_line.scaled(-proto.one()) ? 2 : 0;
  return rep;
}

inline FixtureReport fixture_cycle_3x3(std::uint64_t l) {
  using detail::int_mat;
  using detail::mat;
  Fp proto = Fp::make(0, l);
  Fp r = root_of_unity(l, 3), r2 = r * r, one = proto.one(), zero = proto.zero();
  FixtureReport rep;

  Matrix<Fp> sigma = int_mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}, proto);
  Matrix<Fp> p = mat({{one, one, one}, {one, r2, r}, {one, r, r2}});
  Matrix<Fp> pinv = *p.inverse();
  rep.conjugation_ok =
      pinv * sigma * p == mat({{one, zero, zero}, {zero, r, zero}, {zero, zero, r2}});

  // torus conjugation: entries depend only on the difference of indices
  auto torus_rhs = [&](Fp a, Fp b, Fp c) {
    Fp d0 = a * r + b * r + c * r, d1 = a * r + b + c * r2, d2 = a * r + b * r2 + c;
    return mat({{d0, d1, d2}, {d2, d0, d1}, {d1, d2, d0}});
  };
  auto diag3 = [&](Fp a, Fp b, Fp c) {
    return mat({{a, zero, zero}, {zero, b, zero}, {zero, zero, c}});
  };
  std::optional<Fp> ratio;
  rep.torus_identity_ok = true;
  for (auto [a, b, c] : std::vector<std::array<long long, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
    Matrix<Fp> lhs = pinv * diag3(proto.from(a), proto.from(b), proto.from(c)) * p;
    Matrix<Fp> rhs = torus_rhs(proto.from(a), proto.from(b), proto.from(c));
    if (!ratio) ratio = detail::first_ratio(lhs, rhs);
    rep.torus_identity_ok =
        rep.torus_identity_ok && ratio && detail::proportional_with(lhs, rhs, *ratio);
  }

  Matrix<Fp> lhs_root = pinv * int_mat({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}, proto) * p;
  Matrix<Fp> rhs_root = mat({{r, one, r2}, {r, one, r2}, {r, one, r2}});
  auto root_ratio = detail::first_ratio(lhs_root, rhs_root);
  rep.root_identity_ok = root_ratio && detail::proportional_with(lhs_root, rhs_root, *root_ratio);

  // forcing: members of W conjugated back to the original coordinates are
  // diagonal only at zero, both as the displayed identity and as subspaces
  auto w_elem = [&](Fp a, Fp x, Fp b) {
    return mat({{a, x, zero}, {zero, a, zero}, {zero, zero, b}});
  };
  // every diagonal entry carries the 2ar term; the off-diagonal pattern is
  // what forces members of W landing in the diagonal to be scalar
  auto w_rhs = [&](Fp a, Fp x, Fp b) {
    return mat({{proto.from(2) * a * r + b * r + x * r, -a + b + x * r2, -a * r2 + b * r2 + x},
                {-a * r2 + b * r2 + x * r, proto.from(2) * a * r + b * r + x * r2, -a + b + x},
                {-a + b + x * r, -a * r2 + b * r2 + x * r2, proto.from(2) * a * r + b * r + x}});
  };
  std::optional<Fp> w_ratio;
  bool display_ok = true;
  for (auto [a, x, b] : std::vector<std::array<long long, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
    Matrix<Fp> lhs = p * w_elem(proto.from(a), proto.from(x), proto.from(b)) * pinv;
    Matrix<Fp> rhs = w_rhs(proto.from(a), proto.from(x), proto.from(b));
    if (!w_ratio) w_ratio = detail::first_ratio(lhs, rhs);
    display_ok = display_ok && w_ratio && detail::proportional_with(lhs, rhs, *w_ratio);
  }
  // the model lives in the traceless algebra, so the reference torus is the
  // traceless diagonal plane
  Subspace<Fp> w_orig(9, proto), t(9, proto);
  for (auto [a, x, b] : std::vector<std::array<long long, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})
    w_orig.add(detail::flatten(p * w_elem(proto.from(a), proto.from(x), proto.from(b)) * pinv));
  t.add(detail::flatten(int_mat({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}, proto)));
  t.add(detail::flatten(int_mat({{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}, proto)));
  rep.forcing_ok = display_ok && w_orig.intersect(t).dim() == 0;

  rep.alpha_order = static_cast<int>(multiplicative_order(r));
  return rep;
}

inline FixtureReport fixture_symplectic_4x4(std::uint64_t l) {
  using detail::int_mat;
  using detail::mat;
  Fp proto = Fp::make(0, l);
  Fp r = root_of_unity(l, 8), one = proto.one(), zero = proto.zero();
  auto rp = [&](int k) { return r.pow(static_cast<std::uint64_t>(((k % 8) + 8) % 8)); };
  FixtureReport rep;

  Matrix<Fp> factor1 = int_mat({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}, proto);
  Matrix<Fp> factor2 = int_mat({{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-1, 0, 0, 0}}, proto);
  Matrix<Fp> sigma = int_mat({{0, 1, 0, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, 0, 1, 0}}, proto);
  bool product_ok = factor1 * factor2 == sigma;
  validate_std({MatGroup::sp, sigma});  // preserves the frozen alternating form

  Matrix<Fp> p = mat({{one, one, one, one},
                      {rp(1), rp(3), rp(5), rp(7)},
                      {rp(3), rp(1), rp(7), rp(5)},
                      {rp(2), rp(6), rp(2), rp(6)}});
  Matrix<Fp> pinv = *p.inverse();
  Matrix<Fp> diag_target(4, 4, proto);
  diag_target(0, 0) = rp(1);
  diag_target(1, 1) = rp(3);
  diag_target(2, 2) = rp(5);
  diag_target(3, 3) = rp(7);
  rep.conjugation_ok = product_ok && pinv * sigma * p == diag_target;

  // second-row first entry carries the plus sign: conjugating the torus back
  // lands e2 and f2 on opposite checkerboard rows
  auto torus_rhs = [&](Fp a, Fp b) {
    Fp e2 = a - b * rp(6), e3 = a - b * rp(2), f2 = a + b * rp(6), f3 = a + b * rp(2);
    return mat({{zero, e2, zero, e3},
                {f2, zero, f3, zero},
                {zero, f2, zero, f3},
                {e2, zero, e3, zero}});
  };
  std::optional<Fp> t_ratio;
  rep.torus_identity_ok = true;
  for (auto [a, b] : std::vector<std::pair<long long, long long>>{{1, 0}, {0, 1}}) {
    Fp av = proto.from(a), bv = proto.from(b);
    Matrix<Fp> d(4, 4, proto);
    d(0, 0) = av;
    d(1, 1) = bv;
    d(2, 2) = -bv;
    d(3, 3) = -av;
    Matrix<Fp> lhs = pinv * d * p;
    Matrix<Fp> rhs = torus_rhs(av, bv);
    if (!t_ratio) t_ratio = detail::first_ratio(lhs, rhs);
    rep.torus_identity_ok =
        rep.torus_identity_ok && t_ratio && detail::proportional_with(lhs, rhs, *t_ratio);
  }

  // the lower block of the short root vector needs the opposite sign to
  // satisfy the infinitesimal form condition
  Matrix<Fp> x_beta = int_mat({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 0, 0}}, proto);
  Matrix<Fp> x_gamma = int_mat({{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}}, proto);
  Matrix<Fp> rhs_beta = mat({{rp(1) - rp(7), zero, rp(5) - rp(7), rp(7) - rp(3)},
                             {zero, rp(3) + rp(1), proto.from(2) * rp(5), rp(7) + rp(1)},
                             {rp(1) + rp(7), proto.from(2) * rp(3), rp(5) + rp(7), zero},
                             {rp(1) - rp(5), rp(3) - rp(1), zero, rp(7) - rp(1)}});
  Matrix<Fp> rhs_gamma = mat({{rp(2), rp(6), rp(2), rp(6)},
                              {rp(2), rp(6), rp(2), rp(6)},
                              {rp(2), rp(6), rp(2), rp(6)},
                              {rp(2), rp(6), rp(2), rp(6)}});
  Matrix<Fp> form = bilinear_form(MatGroup::sp, 4, proto);
  auto in_algebra = [&](const Matrix<Fp>& x) {
    return x.transpose() * form + form * x == Matrix<Fp>(4, 4, proto);
  };
  Matrix<Fp> lhs_beta = pinv * x_beta * p;
  Matrix<Fp> lhs_gamma = pinv * x_gamma * p;
  auto beta_ratio = detail::first_ratio(lhs_beta, rhs_beta);
  auto gamma_ratio = detail::first_ratio(lhs_gamma, rhs_gamma);
  rep.root_identity_ok = in_algebra(x_beta) && in_algebra(x_gamma) && beta_ratio &&
                         detail::proportional_with(lhs_beta, rhs_beta, *beta_ratio) &&
                         gamma_ratio &&
                         detail::proportional_with(lhs_gamma, rhs_gamma, *gamma_ratio);

  auto w_elem = [&](Fp a, Fp x) {
    Matrix<Fp> m(4, 4, proto);
    m(0, 0) = a;
    m(1, 2) = x;
    m(3, 3) = -a;
    return m;
  };
  auto w_rhs = [&](Fp a, Fp x) {
    Fp two = proto.from(2);
    return mat({{x, a * (rp(5) - rp(3)) + x * rp(3), a * (rp(5) - rp(3)) - x * rp(5),
                 a * (rp(6) - rp(2)) + x * rp(6)},
                {a * (rp(1) - rp(7)) + x * rp(3), rp(6) * x, two * a * rp(6) - x,
                 a * (rp(5) - rp(3)) + x * rp(1)},
                {a * (rp(3) - rp(5)) + x * rp(1), two * a * rp(2) - x, -rp(6) * x,
                 a * (rp(3) - rp(5)) + x * rp(7)},
                {-two * a * rp(6) + x * rp(6), a * (rp(3) - rp(5)) + x * rp(1),
                 a * (rp(7) - rp(1)) - x * rp(3), -x}});
  };
  std::optional<Fp> w_ratio;
  bool display_ok = true;
  for (auto [a, x] : std::vector<std::pair<long long, long long>>{{1, 0}, {0, 1}}) {
    Matrix<Fp> lhs = p * w_elem(proto.from(a), proto.from(x)) * pinv;
    Matrix<Fp> rhs = w_rhs(proto.from(a), proto.from(x));
    if (!w_ratio) w_ratio = detail::first_ratio(lhs, rhs);
    display_ok = display_ok && w_ratio && detail::proportional_with(lhs, rhs, *w_ratio);
  }
  Subspace<Fp> w_orig(16, proto), t(16, proto);
  for (auto [a, x] : std::vector<std::pair<long long, long long>>{{1, 0}, {0, 1}})
    w_orig.add(detail::flatten(p * w_elem(proto.from(a), proto.from(x)) * pinv));
  Matrix<Fp> t1(4, 4, proto), t2(4, 4, proto);
  t1(0, 0) = one;
  t1(3, 3) = -one;
  t2(1, 1) = one;
  t2(2, 2) = -one;
  t.add(detail::flatten(t1));
  t.add(detail::flatten(t2));
  rep.forcing_ok = display_ok && w_orig.intersect(t).dim() == 0;

  rep.alpha_order = static_cast<int>(multiplicative_order(r * r));
  return rep;
}

}  // namespace monodromy
