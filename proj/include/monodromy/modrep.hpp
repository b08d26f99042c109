#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monodromy/chevalley.hpp"
#include "monodromy/linalg.hpp"

namespace monodromy {

// Generator set of algebra automorphisms acting on the adjoint module.
template <class F>
struct ActionSet {
  int dim = 0;
  std::vector<Matrix<F>> gens;
  std::vector<std::string> labels;

  void add(Matrix<F> g, std::string label) {
    if (g.rows() != g.cols()) throw error("ActionSet: generator not square");
    if (gens.empty()) dim = g.rows();
    else if (g.rows() != dim) throw error("ActionSet: generator dimension mismatch");
    gens.push_back(std::move(g));
    labels.push_back(std::move(label));
  }
};

inline std::uint64_t field_modulus(const Fp& proto) { return proto.modulus(); }

// matrix lift of a letter permutation: decompose into adjacent transpositions
// by bubble sort and multiply the corresponding reflection lifts
template <class F>
Matrix<F> lift_of_letter_perm(const Chevalley& ch, const F& proto, const Perm& sigma,
                              const std::vector<int>& chain_root_idx) {
  std::vector<int> s(sigma.img);
  std::vector<int> swaps;  // sigma * t_{k_1} * ... * t_{k_r} = id
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < s.size(); ++k)
      if (s[k] > s[k + 1]) {
        std::swap(s[k], s[k + 1]);
        swaps.push_back(static_cast<int>(k));
        changed = true;
      }
  }
  // sigma = t_{k_r} * ... * t_{k_1}
  Matrix<F> m = Matrix<F>::identity(ch.dim(), proto);
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
    m = m * ch.weyl_lift(chain_root_idx[*it], proto);
  return m;
}

// Ad generators of the torus-normalizer subgroup used for the residual-image
// decompositions: the split torus plus, depending on family,
//   A:   even permutations of the coordinate letters
//   B/C: the full Weyl group (simple reflection lifts)
//   D:   even letter permutations and even sign flips
//   E7:  the alternating group on eight letters through the A7 chain
template <class F>
ActionSet<F> adjoint_normalizer_action(const Chevalley& ch, const F& proto) {
  const RootSystem& rs = ch.rs;
  ActionSet<F> out;
  Fp g = primitive_root(field_modulus(proto));
  for (int a = 0; a < rs.rank; ++a) {
    std::vector<F> t(rs.rank, proto.one());
    t[a] = proto.from(static_cast<long long>(g.value()));
    out.add(ch.ad_torus(t), "torus");
  }
  // chain of roots e_k - e_{k+1}; these are the first simple roots for A and D
  std::vector<int> chain;
  int letters = rs.family == Family::A ? rs.rank + 1 : rs.rank;
  for (int i = 0; i + 1 < letters; ++i) chain.push_back(rs.simple_index[i]);
  switch (rs.family) {
    case Family::A: {
      for (const Perm& s : alternating_group_generators_on_letters(letters))
        out.add(lift_of_letter_perm(ch, proto, s, chain), "even-letters");
      break;
    }
    case Family::B:
    case Family::C: {
      for (int i = 0; i < rs.rank; ++i)
        out.add(ch.weyl_lift(rs.simple_index[i], proto), "weyl");
      break;
    }
    case Family::D: {
      for (const Perm& s : alternating_group_generators_on_letters(letters))
        out.add(lift_of_letter_perm(ch, proto, s, chain), "even-letters");
      // even sign flip of coordinates (i, n-1): s_{e_i - e_{n-1}} s_{e_i + e_{n-1}}
      for (int i = 0; i + 1 < rs.rank; ++i) {
        std::vector<int> va(rs.ambient_dim(), 0), vs(rs.ambient_dim(), 0);
        va[i] = 2;
        va[rs.rank - 1] = -2;
        vs[i] = 2;
        vs[rs.rank - 1] = 2;
        int di = rs.root_from_ambient(va), si = rs.root_from_ambient(vs);
        if (di < 0 || si < 0) throw error("adjoint_normalizer_action: bad D sign-flip roots");
        out.add(ch.weyl_lift(di, proto) * ch.weyl_lift(si, proto), "even-signs");
      }
      break;
    }
    case Family::E: {
      if (rs.rank != 7) throw error("adjoint_normalizer_action: E family supported at rank 7 only");
      auto sub = a7_subsystem_of_e7(rs);
      int theta = rs.highest_root_index();
      Matrix<F> tau0 = ch.weyl_lift(theta, proto);
      for (size_t i = 1; i < sub.chain_root_indices.size(); ++i)
        out.add(tau0 * ch.weyl_lift(sub.chain_root_indices[i], proto), "even-letters");
      break;
    }
    default:
      throw error("adjoint_normalizer_action: unsupported family");
  }
  return out;
}

// smallest invariant subspace containing v
template <class F>
Subspace<F> spin(const Vec<F>& v, const ActionSet<F>& action) {
  bool nonzero = false;
  for (const F& c : v)
    if (!c.is_zero()) { nonzero = true; break; }
  if (!nonzero) throw error("spin: zero vector");
  Subspace<F> s(static_cast<int>(v.size()), v.at(0));
  s.add(v);
  std::vector<Vec<F>> queue{v};
  while (!queue.empty()) {
    Vec<F> x = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : action.gens) {
      Vec<F> y = g.apply(x);
      if (s.add(y)) queue.push_back(std::move(y));
    }
  }
  return s;
}

// express the action on an invariant subspace in its echelon-basis coordinates
template <class F>
std::vector<Matrix<F>> restrict_gens(const Subspace<F>& m, const std::vector<Matrix<F>>& gens) {
  int k = m.dim();
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) {
    int p = -1;
    for (int j = 0; j < m.ambient(); ++j)
      if (!m.basis()[i][j].is_zero()) { p = j; break; }
    pivots[i] = p;
  }
  std::vector<Matrix<F>> out;
  for (const auto& g : gens) {
    Matrix<F> r(k, k, m.proto());
    for (int j = 0; j < k; ++j) {
      Vec<F> img = g.apply(m.basis()[j]);
      if (!m.contains(img)) throw error("restrict_gens: subspace is not invariant");
      // echelon basis: coordinates are read off at the pivot columns
      for (int i = 0; i < k; ++i) r(i, j) = img[pivots[i]];
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct IrredCert {
  enum class Method { weight_transitive, norton };
  Method method = Method::norton;
  bool irreducible = false;
  int witness_dim = -1;  // dimension of a proper invariant subspace when reducible
  std::string detail;
};

namespace detail {

// signature of coordinate i under the structurally diagonal generators
template <class F>
std::vector<std::vector<F>> diagonal_signatures(const ActionSet<F>& action) {
  std::vector<const Matrix<F>*> diag;
  for (const auto& g : action.gens) {
    bool is_diag = true;
    for (int i = 0; i < g.rows() && is_diag; ++i)
      for (int j = 0; j < g.cols(); ++j)
        if (i != j && !g(i, j).is_zero()) { is_diag = false; break; }
    if (is_diag) diag.push_back(&g);
  }
  std::vector<std::vector<F>> sig(action.dim);
  for (int i = 0; i < action.dim; ++i)
    for (const auto* g : diag) sig[i].push_back((*g)(i, i));
  return sig;
}

template <class F>
bool signature_equal(const std::vector<F>& a, const std::vector<F>& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

}  // namespace detail

// Weight-transitivity certificate: the subspace is a direct sum of
// one-dimensional common eigenlines of the diagonal generators, with pairwise
// distinct weights, and the other generators permute the lines transitively.
// All conditions are verified exactly; inapplicability is reported, not an
// error.
template <class F>
std::optional<IrredCert> try_weight_transitive(const Subspace<F>& m, const ActionSet<F>& action) {
  auto sig = detail::diagonal_signatures(action);
  if (sig.empty() || sig[0].empty()) return std::nullopt;
  // group ambient coordinates into signature blocks
  std::vector<int> block_of(action.dim, -1);
  std::vector<std::vector<F>> block_sig;
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < action.dim; ++i) {
    int found = -1;
    for (size_t b = 0; b < block_sig.size(); ++b)
      if (detail::signature_equal(sig[i], block_sig[b])) { found = static_cast<int>(b); break; }
    if (found < 0) {
      found = static_cast<int>(block_sig.size());
      block_sig.push_back(sig[i]);
      blocks.emplace_back();
    }
    block_of[i] = found;
    blocks[found].push_back(i);
  }
  // intersect m with each coordinate block
  std::vector<Vec<F>> lines;
  std::vector<int> line_block;
  int covered = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    Subspace<F> coords(action.dim, m.proto());
    for (int i : blocks[b]) {
      Vec<F> e(action.dim, m.proto().zero());
      e[i] = m.proto().one();
      coords.add(e);
    }
    auto inter = m.intersect(coords);
    if (inter.dim() > 1) return std::nullopt;  // fat weight space, certificate inapplicable
    if (inter.dim() == 1) {
      lines.push_back(inter.basis()[0]);
      line_block.push_back(static_cast<int>(b));
      ++covered;
    }
  }
  if (covered != m.dim()) return std::nullopt;  // m is not weight-aligned
  // non-diagonal generators must permute the lines
  auto line_index_of = [&](const Vec<F>& v) -> int {
    int blk = -1;
    for (int i = 0; i < action.dim; ++i)
      if (!v[i].is_zero()) {
        if (blk < 0) blk = block_of[i];
        else if (blk != block_of[i]) return -1;  // support crosses blocks
      }
    for (size_t t = 0; t < lines.size(); ++t)
      if (line_block[t] == blk) return static_cast<int>(t);
    return -1;
  };
  std::vector<std::vector<int>> adj(lines.size());
  for (const auto& g : action.gens)
    for (size_t t = 0; t < lines.size(); ++t) {
      Vec<F> img = g.apply(lines[t]);
      int u = line_index_of(img);
      if (u < 0) return std::nullopt;
      adj[t].push_back(u);
    }
  // transitivity of the line permutation action
  std::vector<bool> seen(lines.size(), false);
  std::vector<int> q{0};
  seen[0] = true;
  size_t reached = 1;
  while (!q.empty()) {
    int x = q.back();
    q.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        q.push_back(y);
      }
  }
  IrredCert cert;
  cert.method = IrredCert::Method::weight_transitive;
  if (reached == lines.size() && !lines.empty()) {
    cert.irreducible = true;
    cert.detail = "distinct-weight lines permuted transitively";
  } else {
    cert.irreducible = false;
    cert.witness_dim = static_cast<int>(reached);
    cert.detail = "proper line orbit spans an invariant subspace";
  }
  return cert;
}

// Norton's criterion: pick an algebra element with a nullity-one eigenvalue,
// spin the kernel vector and the transpose kernel vector; both spins fill the
// module iff it is irreducible.
template <class F>
IrredCert norton_certificate(const Subspace<F>& m, const ActionSet<F>& action, std::uint64_t seed,
                             int budget = 64) {
  auto rg = restrict_gens(m, action.gens);
  int k = m.dim();
  F proto = m.proto();
  std::uint64_t l = field_modulus(proto);
  std::mt19937_64 rng(seed);
  IrredCert cert;
  cert.method = IrredCert::Method::norton;
  if (k == 1) {
    cert.irreducible = true;
    cert.detail = "one dimensional";
    return cert;
  }
  ActionSet<F> restricted;
  for (size_t i = 0; i < rg.size(); ++i) restricted.add(rg[i], action.labels[i]);
  for (int attempt = 0; attempt < budget; ++attempt) {
    // random element of the algebra spanned by words in the generators
    Matrix<F> theta(k, k, proto);
    for (const auto& g : rg) theta = theta + g.scaled(proto.from(static_cast<long long>(rng() % l)));
    for (int extra = 0; extra < 3; ++extra) {
      const auto& g1 = rg[rng() % rg.size()];
      const auto& g2 = rg[rng() % rg.size()];
      theta = theta + (g1 * g2).scaled(proto.from(static_cast<long long>(rng() % l)));
    }
    auto cp = charpoly(theta);
    for (std::uint64_t lam = 0; lam < l; ++lam) {
      F lv = proto.from(static_cast<long long>(lam));
      if (!poly_eval(cp, lv).is_zero()) continue;
      Matrix<F> shifted = theta - Matrix<F>::identity(k, proto).scaled(lv);
      if (shifted.nullity() != 1) continue;
      auto kb = shifted.kernel_basis();
      Vec<F> v(k, proto.zero());
      for (int j = 0; j < k; ++j) v[j] = kb(0, j);
      auto s1 = spin(v, restricted);
      if (s1.dim() < k) {
        cert.irreducible = false;
        cert.witness_dim = s1.dim();
        cert.detail = "kernel vector spins to a proper submodule";
        return cert;
      }
      ActionSet<F> transposed;
      for (size_t i = 0; i < rg.size(); ++i) transposed.add(rg[i].transpose(), action.labels[i]);
      auto kbt = shifted.transpose().kernel_basis();
      Vec<F> w(k, proto.zero());
      for (int j = 0; j < k; ++j) w[j] = kbt(0, j);
      auto s2 = spin(w, transposed);
      if (s2.dim() < k) {
        cert.irreducible = false;
        cert.witness_dim = k - s2.dim();
        cert.detail = "transpose kernel vector spins to a proper dual submodule";
        return cert;
      }
      cert.irreducible = true;
      cert.detail = "nullity-one element, both spins fill the module";
      return cert;
    }
  }
  throw error("norton_certificate: no nullity-one element found within budget");
}

template <class F>
IrredCert check_irreducible(const Subspace<F>& m, const ActionSet<F>& action, std::uint64_t seed) {
  if (auto wt = try_weight_transitive(m, action)) return *wt;
  return norton_certificate(m, action, seed);
}

template <class F>
struct DecompositionResult {
  std::vector<Subspace<F>> summands;   // sorted by (dim, first pivot)
  std::vector<IrredCert> certificates; // parallel to summands
  bool all_irreducible = false;
};

// Split the module into invariant summands by spinning standard basis seeds,
// then certify each summand irreducible.
template <class F>
DecompositionResult<F> decompose(const ActionSet<F>& action, std::uint64_t seed) {
  if (action.gens.empty()) throw error("decompose: empty action set");
  int d = action.dim;
  F proto = action.gens[0].proto();
  DecompositionResult<F> out;
  Subspace<F> total(d, proto);
  for (int i = 0; i < d; ++i) {
    Vec<F> e(d, proto.zero());
    e[i] = proto.one();
    if (total.contains(e)) continue;
    auto s = spin(e, action);
    for (const auto& row : s.basis()) total.add(row);
    out.summands.push_back(std::move(s));
  }
  if (total.dim() != d) throw error("decompose: seeds failed to span the module");
  int dimsum = 0;
  for (const auto& s : out.summands) dimsum += s.dim();
  if (dimsum != d) throw error("decompose: summands overlap, action is not semisimple here");
  for (size_t a = 0; a < out.summands.size(); ++a)
    for (size_t b = a + 1; b < out.summands.size(); ++b)
      if (out.summands[a].intersect(out.summands[b]).dim() != 0)
        throw error("decompose: nonzero pairwise intersection");
  std::sort(out.summands.begin(), out.summands.end(), [](const Subspace<F>& x, const Subspace<F>& y) {
    if (x.dim() != y.dim()) return x.dim() < y.dim();
    auto piv = [](const Subspace<F>& s) {
      std::vector<int> p;
      for (const auto& row : s.basis())
        for (int j = 0; j < s.ambient(); ++j)
          if (!row[j].is_zero()) { p.push_back(j); break; }
      return p;
    };
    return piv(x) < piv(y);
  });
  out.all_irreducible = true;
  for (const auto& s : out.summands) {
    out.certificates.push_back(check_irreducible(s, action, seed));
    if (!out.certificates.back().irreducible) out.all_irreducible = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// distinguishing summands from their twists by eigenvalue multisets
// ---------------------------------------------------------------------------

template <class F>
struct TwistTestElements {
  Matrix<F> involution;  // order-two image in the even part: product of two
                         // commuting reflection lifts
  Matrix<F> torus;       // regular torus element: every simple coordinate a generator
  int root_a = -1, root_b = -1;
};

template <class F>
TwistTestElements<F> twist_test_elements(const Chevalley& ch, const F& proto) {
  const RootSystem& rs = ch.rs;
  int ra = -1, rb = -1;
  for (int i = 0; i < rs.npos && ra < 0; ++i)
    for (int j = i + 1; j < rs.npos; ++j) {
      if (rs.pairing_root(rs.roots[i], rs.roots[j]) != 0) continue;
      std::vector<int> sum = rs.roots[i], dif = rs.roots[i];
      for (int k = 0; k < rs.rank; ++k) {
        sum[k] += rs.roots[j][k];
        dif[k] -= rs.roots[j][k];
      }
      if (rs.is_root(sum) || rs.is_root(dif)) continue;
      ra = i;
      rb = j;
      break;
    }
  if (ra < 0)
    throw error("twist_test_elements: no pair of strongly orthogonal roots (rank too small)");
  TwistTestElements<F> out;
  out.root_a = ra;
  out.root_b = rb;
  out.involution = ch.weyl_lift(ra, proto) * ch.weyl_lift(rb, proto);
  Fp g = primitive_root(field_modulus(proto));
  std::vector<F> t(rs.rank, proto.from(static_cast<long long>(g.value())));
  out.torus = ch.ad_torus(t);
  return out;
}

// coefficients of the characteristic polynomial of the q-twisted action:
// eigenvalues scale by q, so coefficient t picks up q^(deg - t)
template <class F>
Vec<F> twisted_charpoly(const Vec<F>& cp, const F& q) {
  Vec<F> out = cp;
  int deg = static_cast<int>(cp.size()) - 1;
  for (int t = 0; t <= deg; ++t) out[t] = cp[t] * q.pow(static_cast<std::uint64_t>(deg - t));
  return out;
}

struct TwistVerdict {
  std::vector<std::vector<bool>> pair_distinguished;  // [i][j]: summand i vs twist of summand j
  bool all_distinguished = false;
};

// A summand is distinguished from the q-twist of another when some test
// element has different eigenvalue multisets on the two; multisets are
// compared through characteristic polynomials, exactly.
template <class F>
TwistVerdict twist_distinguish(const std::vector<Subspace<F>>& summands,
                               const TwistTestElements<F>& te, const F& q) {
  if (q.is_zero()) throw error("twist_distinguish: q must be nonzero");
  size_t n = summands.size();
  std::vector<Vec<F>> cp_inv(n), cp_tor(n);
  for (size_t i = 0; i < n; ++i) {
    auto ri = restrict_gens(summands[i], {te.involution, te.torus});
    cp_inv[i] = charpoly(ri[0]);
    cp_tor[i] = charpoly(ri[1]);
  }
  TwistVerdict v;
  v.pair_distinguished.assign(n, std::vector<bool>(n, false));
  v.all_distinguished = true;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool diff = summands[i].dim() != summands[j].dim() ||
                  cp_inv[i] != twisted_charpoly(cp_inv[j], q) ||
                  cp_tor[i] != twisted_charpoly(cp_tor[j], q);
      v.pair_distinguished[i][j] = diff;
      if (!diff) v.all_distinguished = false;
    }
  return v;
}

}  // namespace monodromy
