// Acceptance gate: one criterion per line, nonzero exit if any fails.
// Each criterion re-derives its numbers through the library and compares
// against the recorded values; timing limits are part of the contract.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/chevalley.hpp"
#include "monodromy/ledger.hpp"
#include "monodromy/modrep.hpp"
#include "monodromy/ntlifts.hpp"
#include "monodromy/principal.hpp"
#include "monodromy/rootsys.hpp"
#include "monodromy/transporter.hpp"

using namespace monodromy;

namespace {

constexpr std::uint64_t kSeed = 20240815;
constexpr std::uint64_t kPrime = 73;
// the rank-seven eigenline split needs one distinct nonzero eigenvalue per
// root line, so its field must be far larger than the 126 root lines
constexpr std::uint64_t kBigPrime = 1000003;

const Chevalley& chev(Family f, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<Chevalley>> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Chevalley>(RootSystem::build(f, n))).first;
  return *it->second;
}

std::string sys_name(Family f, int n) {
  return std::string(1, family_letter(f)) + std::to_string(n);
}

const std::vector<std::pair<Family, int>>& all_systems() {
  static const std::vector<std::pair<Family, int>> v = [] {
    std::vector<std::pair<Family, int>> out;
    for (int n = 1; n <= 8; ++n) out.emplace_back(Family::A, n);
    for (int n = 2; n <= 8; ++n) out.emplace_back(Family::B, n);
    for (int n = 2; n <= 8; ++n) out.emplace_back(Family::C, n);
    for (int n = 4; n <= 8; ++n) out.emplace_back(Family::D, n);
    for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
    out.emplace_back(Family::F, 4);
    out.emplace_back(Family::G, 2);
    return out;
  }();
  return v;
}

const std::vector<std::pair<Family, int>>& small_systems() {
  static const std::vector<std::pair<Family, int>> v = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
      {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
      {Family::D, 3}, {Family::D, 4}, {Family::F, 4}, {Family::G, 2}};
  return v;
}

template <class T>
std::string list_str(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

// sparse table of basis brackets: entry (i, j) lists the nonzero coordinates
// of [e_i, e_j], so a Jacobi sum touches only a handful of coordinates
using SparseVec = std::vector<std::pair<int, Fp>>;

std::vector<std::vector<SparseVec>> bracket_table(const Chevalley& ch, const Fp& proto) {
  int d = ch.dim();
  std::vector<Vec<Fp>> basis;
  for (int i = 0; i < d; ++i) basis.push_back(ch.basis_vector(i, proto));
  std::vector<std::vector<SparseVec>> t(d, std::vector<SparseVec>(d));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec<Fp> b = ch.bracket(basis[i], basis[j]);
      for (int r = 0; r < d; ++r)
        if (!b[r].is_zero()) {
          t[i][j].emplace_back(r, b[r]);
          t[j][i].emplace_back(r, proto.zero() - b[r]);
        }
    }
  return t;
}

bool jacobi_holds(const Chevalley& ch, const std::vector<std::array<int, 3>>& triples,
                  const Fp& proto) {
  auto table = bracket_table(ch, proto);
  int d = ch.dim();
  std::vector<Fp> acc(d, proto.zero());
  std::vector<int> touched;
  auto add_cycled = [&](int a, const SparseVec& inner) {
    for (const auto& [m, c] : inner)
      for (const auto& [r, c2] : table[a][m]) {
        acc[r] += c * c2;
        touched.push_back(r);
      }
  };
  for (const auto& t : triples) {
    add_cycled(t[0], table[t[1]][t[2]]);
    add_cycled(t[1], table[t[2]][t[0]]);
    add_cycled(t[2], table[t[0]][t[1]]);
    bool zero = true;
    for (int r : touched) zero = zero && acc[r].is_zero();
    for (int r : touched) acc[r] = proto.zero();
    touched.clear();
    if (!zero) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> all_triples(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<std::array<int, 3>> sampled_triples(int d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < count; ++i) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

Subspace<Fp> torus_subspace(const Chevalley& ch, const Fp& proto) {
  Subspace<Fp> s(ch.dim(), proto);
  for (int a = 0; a < ch.rs.rank; ++a) s.add(ch.basis_vector(ch.h_index(a), proto));
  return s;
}

Subspace<Fp> root_span(const Chevalley& ch, const std::vector<int>& roots, const Fp& proto) {
  Subspace<Fp> s(ch.dim(), proto);
  for (int r : roots) s.add(ch.basis_vector(r, proto));
  for (int r : roots) {
    int nr = ch.rs.negative_of(r);
    if (std::find(roots.begin(), roots.end(), nr) != roots.end())
      s.add(ch.bracket(ch.basis_vector(r, proto), ch.basis_vector(nr, proto)));
  }
  return s;
}

std::vector<int> pair_closure(const RootSystem& rs, int beta, int gamma) {
  std::vector<int> out;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      if (x == 0 && y == 0) continue;
      std::vector<int> v(rs.rank);
      for (int i = 0; i < rs.rank; ++i) v[i] = x * rs.roots[beta][i] + y * rs.roots[gamma][i];
      if (rs.is_root(v)) out.push_back(rs.index_of(v));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> lines_inside(const PrimedDecomposition& dec, const Subspace<Fp>& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(dec.lines.size()); ++i)
    if (s.contains(dec.lines[i].vec)) out.push_back(i);
  return out;
}

// flags of every decomposition summand at one eigenline: the summand inside
// the reference torus must show (false, true), every other one (true, true)
bool summand_flags_ok(const Chevalley& ch, const PrimedDecomposition& dec, int line_idx,
                      const DecompositionResult<Fp>& res, const Subspace<Fp>& t_sub,
                      std::string& why) {
  int torus_like = 0;
  for (const auto& s : res.summands) {
    auto f = component_flags(ch, dec, line_idx, s);
    if (t_sub.contains_subspace(s)) {
      ++torus_like;
      if (f.has_l_component || !f.has_g_minus_component) {
        why = "torus summand flags were (" + std::to_string(f.has_l_component) + ", " +
              std::to_string(f.has_g_minus_component) + ")";
        return false;
      }
    } else if (!f.has_l_component || !f.has_g_minus_component) {
      why = "a non-torus summand missed a component";
      return false;
    }
  }
  if (torus_like != 1) {
    why = "expected exactly one summand inside the reference torus";
    return false;
  }
  return true;
}

struct Criterion {
  int id;
  std::string label;
  long long limit_ms;
  std::function<bool(std::string&)> run;
};

// ---------------------------------------------------------------------------

bool criterion_orbits(std::string& detail) {
  const auto& rs = chev(Family::E, 7).rs;
  auto gens = alternating_generators(rs);
  auto orb = orbits(gens, rs.size());
  std::vector<int> sizes;
  for (const auto& o : orb) sizes.push_back(static_cast<int>(o.size()));
  std::sort(sizes.begin(), sizes.end());
  std::uint64_t g = group_order(gens, rs.size());
  detail = "orbit sizes " + list_str(sizes) + ", stabilizer order " + std::to_string(g / 70);
  return sizes == std::vector<int>{56, 70} && g == 20160 && g / 70 == 288;
}

bool criterion_decomp(std::string& detail) {
  Fp proto = Fp::make(0, kPrime);
  std::vector<std::string> rows;
  bool ok = true;
  for (auto [f, n] : {std::pair{Family::A, 4}, std::pair{Family::A, 5}, std::pair{Family::A, 6},
                      std::pair{Family::D, 4}, std::pair{Family::D, 5}}) {
    const auto& ch = chev(f, n);
    auto dec = decompose(adjoint_normalizer_action(ch, proto), kSeed);
    std::vector<int> dims;
    for (const auto& s : dec.summands) dims.push_back(s.dim());
    ok = ok && dec.all_irreducible && dims == std::vector<int>{n, ch.rs.size()};
    rows.push_back(sys_name(f, n) + ":" + std::to_string(dims.size()));
  }
  for (Family f : {Family::B, Family::C})
    for (int n = 2; n <= 4; ++n) {
      const auto& ch = chev(f, n);
      const auto& rs = ch.rs;
      int nlong = 0, nshort = 0;
      for (int a = 0; a < rs.size(); ++a) (rs.is_long(a) ? nlong : nshort)++;
      auto dec = decompose(adjoint_normalizer_action(ch, proto), kSeed);
      std::vector<int> dims;
      for (const auto& s : dec.summands) dims.push_back(s.dim());
      std::vector<int> want{n, std::min(nlong, nshort), std::max(nlong, nshort)};
      ok = ok && dec.all_irreducible && dims == want;
      rows.push_back(sys_name(f, n) + ":" + std::to_string(dims.size()));
    }
  auto dec = decompose(adjoint_normalizer_action(chev(Family::E, 7), proto), kSeed);
  std::vector<int> dims;
  for (const auto& s : dec.summands) dims.push_back(s.dim());
  ok = ok && dec.all_irreducible && dims == std::vector<int>{7, 56, 70};
  detail = "summand counts " + list_str(rows) + ", rank seven dims " + list_str(dims);
  return ok;
}

bool criterion_transporter(std::string& detail) {
  auto sw = fixture_swap_2x2(kPrime);
  auto cy = fixture_cycle_3x3(kPrime);
  auto sy = fixture_symplectic_4x4(kPrime);
  bool ok = sw.all_ok() && sw.alpha_order == 2 && cy.all_ok() && cy.alpha_order == 3 &&
            sy.all_ok() && sy.alpha_order == 4;
  if (!ok) {
    detail = "a matrix fixture identity failed";
    return false;
  }

  // simply laced reflection case: flags per summand plus the three-way
  // intersection identity
  Fp p73 = Fp::make(0, kPrime);
  const auto& a4 = chev(Family::A, 4);
  auto res_a4 = decompose(adjoint_normalizer_action(a4, p73), kSeed);
  auto rss = find_regular_ss(a4, {0}, p73, kSeed);
  auto dec = primed_decomposition(a4, rss);
  auto t_a4 = torus_subspace(a4, p73);
  int alpha = rss.lift_word.front();
  auto picks = lines_inside(dec, root_span(a4, {alpha, a4.rs.negative_of(alpha)}, p73));
  if (picks.size() != 2) {
    detail = "reflection case produced an unexpected line count";
    return false;
  }
  for (int i : picks) {
    std::string why;
    if (!summand_flags_ok(a4, dec, i, res_a4, t_a4, why)) {
      detail = "simply laced flags: " + why;
      return false;
    }
    auto d3 = intersection_dims(dec, i, t_a4);
    if (!(d3.t_prime_cap_t == d3.t_prime_alpha_cap_t && d3.t_prime_cap_t == d3.w_cap_t &&
          d3.w_cap_inside_t_prime)) {
      detail = "simply laced intersection identity failed";
      return false;
    }
  }

  // doubly laced pair case: long eigenlines carry scalar order four and the
  // torus meet stays inside the fixed torus
  const auto& b3 = chev(Family::B, 3);
  auto res_b3 = decompose(adjoint_normalizer_action(b3, p73), kSeed);
  const auto& rsb = b3.rs;
  int beta = -1, gamma = -1;
  for (int b = 0; b < rsb.npos && beta < 0; ++b)
    for (int g = 0; g < rsb.npos && beta < 0; ++g)
      if (rsb.is_long(b) && rsb.is_short(g) &&
          rsb.pairing_root(rsb.roots[b], rsb.roots[g]) != 0) {
        beta = b;
        gamma = g;
      }
  auto rssb = find_regular_ss_roots(b3, {beta, gamma}, p73, kSeed);
  auto decb = primed_decomposition(b3, rssb);
  auto t_b3 = torus_subspace(b3, p73);
  auto picksb = lines_inside(decb, root_span(b3, pair_closure(rsb, beta, gamma), p73));
  // the chosen lines are the long-type ones, recognizable by having three
  // bracket partners among the closure lines instead of five
  int long_lines = 0;
  for (int i : picksb) {
    auto di = intersection_dims(decb, i, t_b3);
    if (!di.w_cap_inside_t_prime) {
      detail = "doubly laced torus meet left the fixed torus";
      return false;
    }
    int partners = 0;
    for (int j : picksb) {
      if (j == i) continue;
      Vec<Fp> br = b3.bracket(decb.lines[i].vec, decb.lines[j].vec);
      bool zero = true;
      for (const auto& e : br) zero = zero && e.is_zero();
      if (!zero) ++partners;
    }
    if (partners != 3) continue;
    ++long_lines;
    if (multiplicative_order(decb.lines[i].sigma_value) != 4) {
      detail = "a long-type eigenline missed scalar order four";
      return false;
    }
    std::string why;
    if (!summand_flags_ok(b3, decb, i, res_b3, t_b3, why)) {
      detail = "doubly laced flags: " + why;
      return false;
    }
  }
  if (picksb.size() != 8 || long_lines != 4) {
    detail = "doubly laced line census came out wrong";
    return false;
  }

  // rank seven cross orbit pair, over the large field its eigenline split needs
  Fp pbig = Fp::make(0, kBigPrime);
  const auto& e7 = chev(Family::E, 7);
  const auto& rse = e7.rs;
  auto res_e7 = decompose(adjoint_normalizer_action(e7, pbig), kSeed);
  auto orb = orbits(alternating_generators(rse), rse.size());
  const auto& orb_a = orb[0].size() == 56 ? orb[0] : orb[1];
  const auto& orb_b = orb[0].size() == 56 ? orb[1] : orb[0];
  int eb = -1, eg = -1;
  for (int b : orb_a) {
    for (int g : orb_b)
      if (rse.pairing_root(rse.roots[b], rse.roots[g]) != 0) {
        eb = b;
        eg = g;
        break;
      }
    if (eb >= 0) break;
  }
  auto rsse = find_regular_ss_roots(e7, {eb, eg}, pbig, kSeed);
  auto dece = primed_decomposition(e7, rsse);
  auto t_e7 = torus_subspace(e7, pbig);
  auto pickse = lines_inside(dece, root_span(e7, pair_closure(rse, eb, eg), pbig));
  if (pickse.size() != 6) {
    detail = "rank seven pair span line census came out wrong";
    return false;
  }
  for (int i : pickse) {
    std::string why;
    if (!summand_flags_ok(e7, dece, i, res_e7, t_e7, why)) {
      detail = "rank seven flags: " + why;
      return false;
    }
    if (!intersection_dims(dece, i, t_e7).w_cap_inside_t_prime) {
      detail = "rank seven torus meet left the fixed torus";
      return false;
    }
  }
  detail = "fixtures give scalar orders 2/3/4; summand flags and torus intersections "
           "hold in the reflection, pair and rank seven cases";
  return true;
}

bool criterion_kostant(std::string& detail) {
  for (auto [f, n] : all_systems()) {
    const auto& ch = chev(f, n);
    auto kd = kostant_decomposition(ch, principal_triple(ch));
    if (static_cast<int>(kd.exponents.size()) != n || kd.centralizer_dim != n) {
      detail = "centralizer dimension mismatch at " + sys_name(f, n);
      return false;
    }
  }
  auto kd = kostant_decomposition(chev(Family::E, 7), principal_triple(chev(Family::E, 7)));
  int total = 0;
  for (int m : kd.exponents) total += 2 * m + 1;
  detail = std::to_string(all_systems().size()) +
           " systems have centralizer dimension equal to the rank; rank seven exponents " +
           list_str(kd.exponents) + " with graded sum " + std::to_string(total);
  return kd.exponents == std::vector<int>{1, 5, 7, 9, 11, 13, 17} && total == 133;
}

bool criterion_ad_power(std::string& detail) {
  std::vector<std::pair<Family, int>> systems;
  for (int n = 1; n <= 8; ++n) systems.emplace_back(Family::A, n);
  for (int n = 2; n <= 8; ++n) systems.emplace_back(Family::B, n);
  systems.emplace_back(Family::E, 6);
  for (auto [f, n] : systems) {
    const auto& ch = chev(f, n);
    auto t = principal_triple(ch);
    auto kd = kostant_decomposition(ch, t);
    for (const auto& fl : ad_power_component_check(ch, t, kd))
      if (!fl.levi_nonzero || !fl.lowering_nonzero) {
        detail = "support flag failed at " + sys_name(f, n);
        return false;
      }
  }
  for (int n = 1; n <= 8; ++n)
    for (int h = 1; h <= n; ++h) {
      auto v = lie_an_closed_form_check(n, h);
      if (!v.matches || !v.nonzero) {
        detail = "product formula mismatch at n = " + std::to_string(n) + ", h = " +
                 std::to_string(h);
        return false;
      }
    }
  detail = "support flags set for 16 linear plus odd orthogonal systems and the rank six "
           "exceptional one; product formula exact on all 36 pairs";
  return true;
}

bool criterion_archimedean(std::string& detail) {
  for (auto [f, n] : all_systems()) {
    int want = 0;
    switch (f) {
      case Family::A: want = n * n; break;  // (rank+1) - 1 squared
      case Family::B: want = 2 * n * n - 3 * n + 2; break;
      case Family::C: want = 2 * n * n - 3 * n + 4; break;
      case Family::D: want = 2 * n * n - 5 * n + 4; break;
      default: continue;
    }
    if (real_h0_max(f, n) != want) {
      detail = "fixed dimension formula failed at " + sys_name(f, n);
      return false;
    }
  }
  auto b = e7_real_bound_check(kPrime);
  if (!b.holds || b.bound != 119) {
    detail = "rank seven bound came out as " + std::to_string(b.bound);
    return false;
  }
  std::vector<int> even_dims;
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 3}, std::pair{Family::E, 6}}) {
    const auto& ch = chev(f, n);
    int direct = even_height_fixed_dim(ch.rs);
    auto kd = kostant_decomposition(ch, principal_triple(ch));
    int via_exps = ch.rs.rank;
    for (int m : kd.exponents) via_exps += 2 * (m / 2);
    if (direct != via_exps) {
      detail = "even height paths disagree at " + sys_name(f, n);
      return false;
    }
    even_dims.push_back(direct);
  }
  detail = "classical closed forms hold; rank seven bound 119; even height dims " +
           list_str(even_dims) + " by two agreeing paths";
  return even_dims == std::vector<int>{4, 9, 38};
}

bool criterion_ledgers(std::string& detail) {
  auto slack_of = [](Family f, int n, Construction tag, int h0) {
    const auto& rs = chev(f, n).rs;
    return wiles_rhs(standard_ledger(f, n, tag, h0, rs.size() + rs.rank));
  };
  for (int r = 1; r <= 8; ++r)
    if (slack_of(Family::A, r, Construction::weyl, real_h0_max(Family::A, r)) != r) {
      detail = "linear family slack failed at rank " + std::to_string(r);
      return false;
    }
  for (int n = 2; n <= 8; ++n)
    if (slack_of(Family::B, n, Construction::weyl, real_h0_max(Family::B, n)) != 3 * n - 2) {
      detail = "odd orthogonal slack failed at rank " + std::to_string(n);
      return false;
    }
  for (int n = 2; n <= 8; ++n)
    if (slack_of(Family::C, n, Construction::weyl, real_h0_max(Family::C, n)) != 3 * n - 4) {
      detail = "symplectic slack failed at rank " + std::to_string(n);
      return false;
    }
  for (int n = 4; n <= 8; ++n)
    if (slack_of(Family::D, n, Construction::weyl, real_h0_max(Family::D, n)) != 3 * n - 4) {
      detail = "even orthogonal slack failed at rank " + std::to_string(n);
      return false;
    }
  if (slack_of(Family::E, 7, Construction::weyl, e7_real_bound_check(kPrime).bound) != 7) {
    detail = "rank seven slack failed";
    return false;
  }
  std::vector<long long> principal_vals;
  for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 3}, std::pair{Family::E, 6}})
    principal_vals.push_back(
        slack_of(f, n, Construction::principal, even_height_fixed_dim(chev(f, n).rs)));
  detail = "family slacks n-1 / 3n-2 / 3n-4 / 3n-4 and 7 at rank seven; principal values " +
           list_str(principal_vals);
  return principal_vals == std::vector<long long>{2, 9, 34};
}

bool criterion_properties(std::string& detail) {
  Fp proto = Fp::make(0, kPrime);
  for (auto [f, n] : small_systems())
    if (!jacobi_holds(chev(f, n), all_triples(chev(f, n).dim()), proto)) {
      detail = "bracket identity failed in the exhaustive sweep at " + sys_name(f, n);
      return false;
    }
  for (auto [f, n] : {std::pair{Family::E, 6}, std::pair{Family::E, 7}})
    if (!jacobi_holds(chev(f, n), sampled_triples(chev(f, n).dim(), 10000, kSeed), proto)) {
      detail = "bracket identity failed in the sampled sweep at " + sys_name(f, n);
      return false;
    }

  for (auto [f, n] : small_systems()) {
    const auto& ch = chev(f, n);
    const auto& rs = ch.rs;
    for (int i = 0; i < rs.rank; ++i) {
      Matrix<Fp> w = ch.weyl_lift(rs.simple_index[i], proto);
      Perm s = rs.reflection_perm(rs.simple_index[i]);
      for (int a = 0; a < rs.size(); ++a) {
        Vec<Fp> img = w.apply(ch.basis_vector(a, proto));
        for (int j = 0; j < ch.dim(); ++j)
          if ((j == s.img[a]) == img[j].is_zero()) {
            detail = "lift disagreement at " + sys_name(f, n);
            return false;
          }
      }
    }
  }

  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::uint64_t> pick(0, kPrime - 1);
  int tested = 0;
  for (int trial = 0; tested < 1000; ++trial) {
    if (trial > 20000) {
      detail = "sampling for the local identity stalled";
      return false;
    }
    Matrix<Fp> phi(4, 4, proto);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) phi(i, j) = proto.from(static_cast<long long>(pick(rng)));
    Fp q = proto.from(static_cast<long long>(pick(rng)));
    if (q.is_zero() || phi.nullity() != 0) continue;
    auto h = unramified_local_h(phi, q);
    if (h.h1 != h.h0 + h.h2) {
      detail = "local dimension identity failed";
      return false;
    }
    ++tested;
  }

  std::uniform_int_distribution<int> dims(0, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    int a = dims(rng), b = dims(rng);
    int sel = std::min(a, b), dual = std::max(a, b);
    auto run = dual_selmer_descent_sim(sel, dual);
    if (run.back().second != 0) {
      detail = "descent simulation did not reach zero";
      return false;
    }
    for (std::size_t i = 1; i < run.size(); ++i)
      if (run[i - 1].first > 0 &&
          run[i].second - run[i].first != run[i - 1].second - run[i - 1].first) {
        detail = "descent difference drifted";
        return false;
      }
  }
  detail = "bracket identity exhaustive on 14 systems and 10000 samples each at ranks six "
           "and seven; lifts match reflections; 1000 local identity and 1000 descent trials";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "even subgroup orbit structure on the rank seven roots", 5000, criterion_orbits},
      {2, "residual decomposition summand counts and dimensions", 60000, criterion_decomp},
      {3, "transporter fixtures, component flags and torus intersections", 120000,
       criterion_transporter},
      {4, "principal nilpotent centralizer data and rank seven exponents", 60000,
       criterion_kostant},
      {5, "lowering operator support flags and the difference product formula", 60000,
       criterion_ad_power},
      {6, "archimedean fixed dimension formulas, bound and even height values", 60000,
       criterion_archimedean},
      {7, "deformation ledger slack rows and principal values", 60000, criterion_ledgers},
      {8, "algebraic property sweeps", 240000, criterion_properties},
  };

  bool all_ok = true;
  long long total_ms = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    total_ms += ms;
    if (ms > c.limit_ms) {
      ok = false;
      detail += " (exceeded the " + std::to_string(c.limit_ms) + " ms limit)";
    }
    all_ok = all_ok && ok;
    std::cout << "CRITERION " << c.id << ": " << (ok ? "pass" : "fail") << " - " << c.label
              << ": " << detail << " [" << ms << " ms]\n";
  }
  if (total_ms > 300000) {
    all_ok = false;
    std::cout << "total runtime exceeded five minutes\n";
  }
  std::cout << (all_ok ? "ACCEPTANCE: all 8 criteria passed" : "ACCEPTANCE: FAILURES PRESENT")
            << " [" << total_ms << " ms total]\n";
  return all_ok ? 0 : 1;
}
