#pragma once

// Check registry and deterministic reporting for the command line front end.
// Every check runs one verification backed by the library modules and
// produces an observed/expected pair; the registry groups checks into named
// suites, and reports serialize with a stable field and record order so two
// identical invocations differ only in the timing fields.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "monodromy/chevalley.hpp"
#include "monodromy/ledger.hpp"
#include "monodromy/modrep.hpp"
#include "monodromy/ntlifts.hpp"
#include "monodromy/principal.hpp"
#include "monodromy/rootsys.hpp"
#include "monodromy/transporter.hpp"

namespace monodromy {

struct CheckRecord {
  std::string check_id;
  std::string paper_anchor;  // short topic label, or "plumbing"
  std::string status;        // pass | fail | skipped
  std::string observed;
  std::string expected;
  long long elapsed_ms = 0;
};

struct ReportParams {
  std::string command = "verify";  // verify | report
  std::string suite = "all";
  std::optional<Family> family;
  int rank = 0;
  std::uint64_t prime = 73;
  std::uint64_t seed = 20240815;
};

struct Report {
  std::string tool_version = "1.0.0";
  int schema_version = 1;
  ReportParams params;
  std::vector<CheckRecord> checks;

  int count(const std::string& status) const {
    int n = 0;
    for (const auto& c : checks)
      if (c.status == status) ++n;
    return n;
  }
  bool all_passed() const { return count("fail") == 0; }
};

struct CheckOutcome {
  bool ok = false;
  std::string observed;
  std::string expected;
};

using CheckFn = std::function<CheckOutcome(const ReportParams&)>;

struct CheckSpec {
  std::string suite;
  std::string id;
  std::string anchor;
  CheckFn fn;
};

namespace report_detail {

inline const Chevalley& chev(Family f, int n) {
  static std::map<std::pair<int, int>, std::unique_ptr<Chevalley>> cache;
  auto key = std::make_pair(static_cast<int>(f), n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Chevalley>(RootSystem::build(f, n))).first;
  return *it->second;
}

template <class T>
std::string list_str(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << "]";
  return os.str();
}

inline std::string sys_name(Family f, int n) {
  return std::string(1, family_letter(f)) + std::to_string(n);
}

// every system the library builds with rank at most eight
inline const std::vector<std::pair<Family, int>>& all_systems() {
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

inline Subspace<Fp> torus_subspace(const Chevalley& ch, const Fp& proto) {
  Subspace<Fp> s(ch.dim(), proto);
  for (int a = 0; a < ch.rs.rank; ++a) s.add(ch.basis_vector(ch.h_index(a), proto));
  return s;
}

inline Subspace<Fp> lines_span(const Chevalley& ch, const std::vector<int>& roots,
                               const Fp& proto) {
  Subspace<Fp> s(ch.dim(), proto);
  for (int r : roots) s.add(ch.basis_vector(r, proto));
  return s;
}

inline Subspace<Fp> root_span(const Chevalley& ch, const std::vector<int>& roots,
                              const Fp& proto) {
  Subspace<Fp> s = lines_span(ch, roots, proto);
  for (int r : roots) {
    int nr = ch.rs.negative_of(r);
    if (std::find(roots.begin(), roots.end(), nr) != roots.end())
      s.add(ch.bracket(ch.basis_vector(r, proto), ch.basis_vector(nr, proto)));
  }
  return s;
}

inline std::vector<int> pair_closure(const RootSystem& rs, int beta, int gamma) {
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

inline std::vector<int> lines_inside(const PrimedDecomposition& dec, const Subspace<Fp>& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(dec.lines.size()); ++i)
    if (s.contains(dec.lines[i].vec)) out.push_back(i);
  return out;
}

inline bool vec_zero(const Vec<Fp>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Jacobi identity over the basis triples listed; bracket tables are built
// once per call, so keep the triple count moderate.
inline bool jacobi_holds(const Chevalley& ch, const std::vector<std::array<int, 3>>& triples) {
  Fp proto = Fp::make(0, 73);
  int d = ch.dim();
  std::vector<Vec<Fp>> basis;
  for (int i = 0; i < d; ++i) basis.push_back(ch.basis_vector(i, proto));
  std::map<std::pair<int, int>, Vec<Fp>> table;
  auto bk = [&](int i, int j) -> const Vec<Fp>& {
    auto key = std::make_pair(i, j);
    auto it = table.find(key);
    if (it == table.end()) it = table.emplace(key, ch.bracket(basis[i], basis[j])).first;
    return it->second;
  };
  for (const auto& t : triples) {
    Vec<Fp> s = ch.bracket(basis[t[0]], bk(t[1], t[2]));
    Vec<Fp> u = ch.bracket(basis[t[1]], bk(t[2], t[0]));
    Vec<Fp> w = ch.bracket(basis[t[2]], bk(t[0], t[1]));
    for (int j = 0; j < d; ++j)
      if (!(s[j] + u[j] + w[j]).is_zero()) return false;
  }
  return true;
}

inline std::vector<std::array<int, 3>> all_triples(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) out.push_back({i, j, k});
  return out;
}

inline std::vector<std::array<int, 3>> sampled_triples(int d, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < count; ++i) out.push_back({pick(rng), pick(rng), pick(rng)});
  return out;
}

struct FlagSummary {
  bool ok = true;
  std::string detail;
};

// shared body for the reflection-case flag checks: find the two lines in the
// little rank-one span, then test the component flags of the root span and
// the torus, and the three intersection dimensions
inline FlagSummary reflection_flag_check(const Chevalley& ch, const RegSSElement& rss,
                                         const Fp& proto) {
  FlagSummary out;
  auto dec = primed_decomposition(ch, rss);
  int alpha = rss.lift_word.front();
  auto span = root_span(ch, {alpha, ch.rs.negative_of(alpha)}, proto);
  auto picks = lines_inside(dec, span);
  if (picks.size() != 2) {
    out.ok = false;
    out.detail = "expected two lines in the rank-one span, found " +
                 std::to_string(picks.size());
    return out;
  }
  std::vector<int> all_roots(ch.rs.size());
  std::iota(all_roots.begin(), all_roots.end(), 0);
  auto g_phi = lines_span(ch, all_roots, proto);
  auto t_sub = torus_subspace(ch, proto);
  for (int i : picks) {
    bool minus_one = dec.lines[i].sigma_value == proto.zero() - proto.one();
    auto fr = component_flags(ch, dec, i, g_phi);
    auto ft = component_flags(ch, dec, i, t_sub);
    auto dims = intersection_dims(dec, i, t_sub);
    bool dims_equal = dims.t_prime_cap_t == dims.w_cap_t &&
                      dims.t_prime_alpha_cap_t == dims.w_cap_t && dims.w_cap_inside_t_prime;
    if (!(minus_one && fr.has_l_component && fr.has_g_minus_component && !ft.has_l_component &&
          ft.has_g_minus_component && dims_equal)) {
      out.ok = false;
      out.detail = "line " + std::to_string(i) + " failed a flag or intersection identity";
      return out;
    }
  }
  out.detail = "scalar -1 on both lines; flags (1,1)/(0,1); three equal intersections";
  return out;
}

}  // namespace report_detail

// ---------------------------------------------------------------------------
// registry

inline const std::vector<CheckSpec>& check_registry() {
  using namespace report_detail;
  static const std::vector<CheckSpec> registry = [] {
    std::vector<CheckSpec> r;

    // ---- rootsys suite ----------------------------------------------------
    r.push_back({"rootsys", "rootsys.counts.closed_form", "root system cardinalities",
                 [](const ReportParams&) -> CheckOutcome {
                   std::vector<std::string> bad;
                   for (auto [f, n] : all_systems()) {
                     const auto& rs = chev(f, n).rs;
                     if (rs.size() != root_count_closed_form(f, n)) bad.push_back(sys_name(f, n));
                   }
                   return {bad.empty(),
                           bad.empty() ? std::to_string(all_systems().size()) + " systems match"
                                       : "mismatch at " + list_str(bad),
                           "root counts match the closed forms for every rank <= 8 system"};
                 }});

    r.push_back({"rootsys", "rootsys.weyl.orders", "Weyl group orders",
                 [](const ReportParams&) -> CheckOutcome {
                   std::vector<std::string> bad;
                   for (auto [f, n] : all_systems()) {
                     if (n > 4) continue;
                     const auto& rs = chev(f, n).rs;
                     std::vector<Perm> gens;
                     for (int i = 0; i < rs.rank; ++i)
                       gens.push_back(rs.reflection_perm(rs.simple_index[i]));
                     if (group_order(gens, rs.size()) != rs.weyl_order_closed_form())
                       bad.push_back(sys_name(f, n));
                   }
                   return {bad.empty(),
                           bad.empty() ? "permutation group orders match"
                                       : "mismatch at " + list_str(bad),
                           "generated reflection group order equals the closed form, rank <= 4"};
                 }});

    r.push_back({"rootsys", "rootsys.chevalley.jacobi", "bracket consistency",
                 [](const ReportParams& p) -> CheckOutcome {
                   bool ok = true;
                   for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::C, 2},
                                       std::pair{Family::G, 2}})
                     ok = ok && jacobi_holds(chev(f, n), all_triples(chev(f, n).dim()));
                   ok = ok && jacobi_holds(chev(Family::B, 3),
                                           sampled_triples(chev(Family::B, 3).dim(), 300, p.seed));
                   return {ok, ok ? "identity holds on every tested triple" : "violated",
                           "Jacobi identity, exhaustive at rank two plus sampled at rank three"};
                 }});

    r.push_back({"rootsys", "rootsys.chevalley.lift_agreement", "reflection lifts on root lines",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   for (auto [f, n] :
                        {std::pair{Family::A, 3}, std::pair{Family::B, 3}, std::pair{Family::C, 3},
                         std::pair{Family::D, 4}, std::pair{Family::G, 2}}) {
                     const auto& ch = chev(f, n);
                     const auto& rs = ch.rs;
                     for (int i = 0; i < rs.rank; ++i) {
                       Matrix<Fp> w = ch.weyl_lift(rs.simple_index[i], proto);
                       Perm s = rs.reflection_perm(rs.simple_index[i]);
                       for (int a = 0; a < rs.size(); ++a) {
                         Vec<Fp> img = w.apply(ch.basis_vector(a, proto));
                         for (int j = 0; j < ch.dim(); ++j)
                           if ((j == s.img[a]) == img[j].is_zero())
                             return {false,
                                     "disagreement at " + sys_name(f, n) + " reflection " +
                                         std::to_string(i) + " root " + std::to_string(a),
                                     "lift is monomial along the permutation on every root"};
                       }
                     }
                   }
                   return {true, "lifts permute root lines as the reflections do",
                           "lift is monomial along the permutation on every root"};
                 }});

    // ---- decomp suite -----------------------------------------------------
    r.push_back({"decomp", "e7.orbits.a8", "two orbit sizes on the 126 roots",
                 [](const ReportParams&) -> CheckOutcome {
                   const auto& rs = chev(Family::E, 7).rs;
                   auto gens = alternating_generators(rs);
                   auto orb = orbits(gens, rs.size());
                   std::vector<int> sizes;
                   for (const auto& o : orb) sizes.push_back(static_cast<int>(o.size()));
                   std::sort(sizes.begin(), sizes.end());
                   std::uint64_t g = group_order(gens, rs.size());
                   bool ok = sizes == std::vector<int>{56, 70} && g == 20160 &&
                             g / 70 == 288 && g / 56 == 360;
                   return {ok,
                           "orbit sizes " + list_str(sizes) + ", group order " + std::to_string(g) +
                               ", larger-orbit stabilizer " + std::to_string(g / 70),
                           "sizes [56, 70]; stabilizer order 288 on the size-70 orbit"};
                 }});

    r.push_back({"decomp", "decomp.counts.simply_laced", "two summand split, linear and even orthogonal",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   std::vector<std::string> got;
                   bool ok = true;
                   for (auto [f, n] : {std::pair{Family::A, 4}, std::pair{Family::A, 5},
                                       std::pair{Family::D, 4}, std::pair{Family::D, 5}}) {
                     const auto& ch = chev(f, n);
                     auto dec = decompose(adjoint_normalizer_action(ch, proto), p.seed);
                     std::vector<int> dims;
                     for (const auto& s : dec.summands) dims.push_back(s.dim());
                     got.push_back(sys_name(f, n) + ":" + list_str(dims));
                     ok = ok && dec.all_irreducible && dims.size() == 2 && dims[0] == n &&
                          dims[1] == ch.rs.size();
                   }
                   return {ok, list_str(got),
                           "two irreducible summands of dimensions (rank, root count)"};
                 }});

    r.push_back({"decomp", "decomp.counts.doubly_laced", "three summand split, odd orthogonal and symplectic",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   std::vector<std::string> got;
                   bool ok = true;
                   for (Family f : {Family::B, Family::C})
                     for (int n = 2; n <= 4; ++n) {
                       const auto& ch = chev(f, n);
                       const auto& rs = ch.rs;
                       int nlong = 0, nshort = 0;
                       for (int a = 0; a < rs.size(); ++a) (rs.is_long(a) ? nlong : nshort)++;
                       auto dec = decompose(adjoint_normalizer_action(ch, proto), p.seed);
                       std::vector<int> dims;
                       for (const auto& s : dec.summands) dims.push_back(s.dim());
                       got.push_back(sys_name(f, n) + ":" + list_str(dims));
                       std::vector<int> want{n, std::min(nlong, nshort), std::max(nlong, nshort)};
                       ok = ok && dec.all_irreducible && dims == want;
                     }
                   return {ok, list_str(got),
                           "three irreducible summands of dimensions (rank, long count, short count)"};
                 }});

    r.push_back({"decomp", "decomp.counts.e7", "three summand split at rank seven",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   const auto& ch = chev(Family::E, 7);
                   auto dec = decompose(adjoint_normalizer_action(ch, proto), p.seed);
                   std::vector<int> dims;
                   for (const auto& s : dec.summands) dims.push_back(s.dim());
                   bool ok = dec.all_irreducible && dims == std::vector<int>{7, 56, 70};
                   return {ok, list_str(dims),
                           "[7, 56, 70], the torus plus the two root-line orbit spans"};
                 }});

    // ---- transporter suite ------------------------------------------------
    r.push_back({"transporter", "transporter.fixture.swap", "rank one conjugation fixture",
                 [](const ReportParams& p) -> CheckOutcome {
                   auto rep = fixture_swap_2x2(p.prime);
                   return {rep.all_ok() && rep.alpha_order == 2,
                           "scalar order " + std::to_string(rep.alpha_order),
                           "all displayed identities hold; scalar order 2"};
                 }});

    r.push_back({"transporter", "transporter.fixture.cycle", "three cycle conjugation fixture",
                 [](const ReportParams& p) -> CheckOutcome {
                   auto rep = fixture_cycle_3x3(p.prime);
                   return {rep.all_ok() && rep.alpha_order == 3,
                           "scalar order " + std::to_string(rep.alpha_order),
                           "all displayed identities hold; scalar order 3"};
                 }});

    r.push_back({"transporter", "transporter.fixture.symplectic", "symplectic conjugation fixture",
                 [](const ReportParams& p) -> CheckOutcome {
                   auto rep = fixture_symplectic_4x4(p.prime);
                   return {rep.all_ok() && rep.alpha_order == 4,
                           "scalar order " + std::to_string(rep.alpha_order),
                           "all displayed identities hold; scalar order 4"};
                 }});

    r.push_back({"transporter", "transporter.flags.simply_laced",
                 "component flags and intersections over a reflection",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   const auto& ch = chev(Family::A, 4);
                   auto rss = find_regular_ss(ch, {0}, proto, p.seed);
                   auto res = reflection_flag_check(ch, rss, proto);
                   return {res.ok, res.detail,
                           "two lines, flags (1,1) for the root span and (0,1) for the torus, "
                           "equal intersections inside the fixed torus"};
                 }});

    r.push_back({"transporter", "transporter.flags.doubly_laced",
                 "long line flags in the doubly laced ambient",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   const auto& ch = chev(Family::B, 3);
                   const auto& rs = ch.rs;
                   int beta = -1, gamma = -1;
                   for (int b = 0; b < rs.npos && beta < 0; ++b)
                     for (int g = 0; g < rs.npos && beta < 0; ++g)
                       if (rs.is_long(b) && rs.is_short(g) &&
                           rs.pairing_root(rs.roots[b], rs.roots[g]) != 0) {
                         beta = b;
                         gamma = g;
                       }
                   auto rss = find_regular_ss_roots(ch, {beta, gamma}, proto, p.seed);
                   auto dec = primed_decomposition(ch, rss);
                   auto closure = pair_closure(rs, beta, gamma);
                   auto span = root_span(ch, closure, proto);
                   auto picks = lines_inside(dec, span);
                   std::vector<int> longs, shorts;
                   for (int a = 0; a < rs.size(); ++a) (rs.is_long(a) ? longs : shorts).push_back(a);
                   auto g_l = lines_span(ch, longs, proto);
                   auto g_s = lines_span(ch, shorts, proto);
                   auto t_sub = torus_subspace(ch, proto);
                   bool ok = closure.size() == 8 && picks.size() == 8;
                   int long_lines = 0;
                   for (int i : picks) {
                     int partners = 0;
                     for (int j : picks)
                       if (j != i && !vec_zero(ch.bracket(dec.lines[i].vec, dec.lines[j].vec)))
                         ++partners;
                     if (partners != 3) continue;  // short lines have five partners
                     ++long_lines;
                     ok = ok && multiplicative_order(dec.lines[i].sigma_value) == 4;
                     auto fl = component_flags(ch, dec, i, g_l);
                     auto fs = component_flags(ch, dec, i, g_s);
                     auto ft = component_flags(ch, dec, i, t_sub);
                     ok = ok && fl.has_l_component && fl.has_g_minus_component &&
                          fs.has_l_component && fs.has_g_minus_component && !ft.has_l_component &&
                          ft.has_g_minus_component &&
                          intersection_dims(dec, i, t_sub).w_cap_inside_t_prime;
                   }
                   ok = ok && long_lines == 4;
                   return {ok,
                           std::to_string(picks.size()) + " lines in the rank-two span, " +
                               std::to_string(long_lines) + " long with scalar order 4",
                           "8 lines; long ones carry order 4, flags (1,1)/(1,1)/(0,1), "
                           "torus meet inside the fixed torus"};
                 }});

    r.push_back({"transporter", "transporter.flags.e7_pair", "cross orbit pair flags at rank seven",
                 [](const ReportParams& p) -> CheckOutcome {
                   // 126 lines need 126 distinct eigenvalues, far beyond the
                   // default field size, so this check fixes its own prime
                   Fp proto = Fp::make(0, 1000003);
                   const auto& ch = chev(Family::E, 7);
                   const auto& rs = ch.rs;
                   auto orb = orbits(alternating_generators(rs), rs.size());
                   const auto& orb_a = orb[0].size() == 56 ? orb[0] : orb[1];
                   const auto& orb_b = orb[0].size() == 56 ? orb[1] : orb[0];
                   std::vector<char> in_a(rs.size(), 0);
                   for (int a : orb_a) in_a[a] = 1;
                   int beta = -1, gamma = -1;
                   for (int b : orb_a) {
                     for (int g : orb_b)
                       if (rs.pairing_root(rs.roots[b], rs.roots[g]) != 0) {
                         beta = b;
                         gamma = g;
                         break;
                       }
                     if (beta >= 0) break;
                   }
                   auto rss = find_regular_ss_roots(ch, {beta, gamma}, proto, p.seed);
                   auto dec = primed_decomposition(ch, rss);
                   auto span = root_span(ch, pair_closure(rs, beta, gamma), proto);
                   auto picks = lines_inside(dec, span);
                   std::vector<int> roots_a, roots_b;
                   for (int a = 0; a < rs.size(); ++a) (in_a[a] ? roots_a : roots_b).push_back(a);
                   auto g_a = lines_span(ch, roots_a, proto);
                   auto g_b = lines_span(ch, roots_b, proto);
                   auto t_sub = torus_subspace(ch, proto);
                   bool ok = orb_a.size() == 56 && orb_b.size() == 70 && picks.size() == 6;
                   for (int i : picks) {
                     auto fa = component_flags(ch, dec, i, g_a);
                     auto fb = component_flags(ch, dec, i, g_b);
                     ok = ok && fa.has_l_component && fa.has_g_minus_component &&
                          fb.has_l_component && fb.has_g_minus_component &&
                          intersection_dims(dec, i, t_sub).w_cap_inside_t_prime;
                   }
                   return {ok,
                           std::to_string(picks.size()) + " lines in the pair span over F_1000003",
                           "6 lines; both orbit spans carry flags (1,1); torus meet inside the "
                           "fixed torus"};
                 }});

    r.push_back({"transporter", "transporter.modified.even_image", "orthogonal partner modification",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   const auto& ch = chev(Family::A, 4);
                   auto rss = modified_sigma(ch, ch.rs.simple_index[0], proto, p.seed);
                   auto res = reflection_flag_check(ch, rss, proto);
                   return {rss.weyl_image.is_even() && res.ok,
                           std::string("even image: ") + (rss.weyl_image.is_even() ? "yes" : "no") +
                               "; " + res.detail,
                           "image in the even part with the reflection conclusions intact"};
                 }});

    r.push_back({"transporter", "transporter.search.rank_two_coverage",
                 "regular search coverage at rank two",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   const auto& ch = chev(Family::C, 2);
                   const std::vector<std::vector<int>> words = {
                       {}, {0}, {1}, {0, 1}, {1, 0}, {0, 1, 0}, {1, 0, 1}};
                   for (const auto& w : words) find_regular_ss(ch, w, proto, p.seed);
                   // above the longest element every lift pairs opposite root
                   // lines at product one, so the fixed space is always four
                   // dimensional and the search must report exhaustion
                   std::string msg;
                   try {
                     find_regular_ss(ch, {0, 1, 0, 1}, proto, p.seed, 256);
                   } catch (const error& e) {
                     msg = e.what();
                   }
                   bool ok = msg.find("best fixed-space dimension 4") != std::string::npos;
                   return {ok,
                           ok ? "seven elements found; longest element reports dimension 4"
                              : "unexpected outcome above the longest element: " + msg,
                           "search succeeds except above the longest element, where the "
                           "best fixed space stays four dimensional"};
                 }});

    // ---- principal suite --------------------------------------------------
    r.push_back({"principal", "principal.kostant.centralizer_rank",
                 "nilpotent centralizer dimension equals the rank",
                 [](const ReportParams&) -> CheckOutcome {
                   std::vector<std::string> bad;
                   for (auto [f, n] : all_systems()) {
                     const auto& ch = chev(f, n);
                     auto kd = kostant_decomposition(ch, principal_triple(ch));
                     if (static_cast<int>(kd.exponents.size()) != n) bad.push_back(sys_name(f, n));
                   }
                   return {bad.empty(),
                           bad.empty() ? std::to_string(all_systems().size()) +
                                             " systems have centralizer dimension = rank"
                                       : "mismatch at " + list_str(bad),
                           "one centralizer generator per exponent, for every rank <= 8 system"};
                 }});

    r.push_back({"principal", "principal.kostant.e7_exponents", "rank seven exponents",
                 [](const ReportParams&) -> CheckOutcome {
                   const auto& ch = chev(Family::E, 7);
                   auto kd = kostant_decomposition(ch, principal_triple(ch));
                   int total = 0;
                   for (int m : kd.exponents) total += 2 * m + 1;
                   bool ok = kd.exponents == std::vector<int>{1, 5, 7, 9, 11, 13, 17} &&
                             total == 133;
                   return {ok, list_str(kd.exponents) + ", graded dimension sum " +
                               std::to_string(total),
                           "[1, 5, 7, 9, 11, 13, 17] with sum of (2m+1) equal to 133"};
                 }});

    r.push_back({"principal", "principal.components.ad_power", "lowering operator support flags",
                 [](const ReportParams&) -> CheckOutcome {
                   std::vector<std::pair<Family, int>> systems;
                   for (int n = 1; n <= 8; ++n) systems.emplace_back(Family::A, n);
                   for (int n = 2; n <= 8; ++n) systems.emplace_back(Family::B, n);
                   systems.emplace_back(Family::E, 6);
                   for (auto [f, n] : systems) {
                     const auto& ch = chev(f, n);
                     auto t = principal_triple(ch);
                     auto kd = kostant_decomposition(ch, t);
                     for (const auto& fl : ad_power_component_check(ch, t, kd))
                       if (!fl.levi_nonzero || !fl.lowering_nonzero)
                         return {false, "flag failed at " + sys_name(f, n),
                                 "both support flags set for every exponent"};
                   }
                   return {true, "both flags set across all exponents of the listed systems",
                           "both support flags set for every exponent"};
                 }});

    r.push_back({"principal", "principal.closed_form.h2_minus_2h1", "difference product formula",
                 [](const ReportParams&) -> CheckOutcome {
                   for (int n = 1; n <= 8; ++n)
                     for (int h = 1; h <= n; ++h) {
                       auto v = lie_an_closed_form_check(n, h);
                       if (!v.matches || !v.nonzero)
                         return {false,
                                 "mismatch at n = " + std::to_string(n) + ", h = " +
                                     std::to_string(h),
                                 "formula matches and is nonzero for all 1 <= h <= n <= 8"};
                     }
                   return {true, "matches for all 36 pairs",
                           "formula matches and is nonzero for all 1 <= h <= n <= 8"};
                 }});

    r.push_back({"principal", "principal.even_height.fixed_dims", "even height fixed dimensions",
                 [](const ReportParams&) -> CheckOutcome {
                   std::vector<int> got, want{4, 9, 38};
                   for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 3},
                                       std::pair{Family::E, 6}}) {
                     const auto& rs = chev(f, n).rs;
                     int direct = even_height_fixed_dim(rs);
                     // second path: even layers counted through the exponents
                     auto kd = kostant_decomposition(chev(f, n), principal_triple(chev(f, n)));
                     int via_exps = rs.rank;
                     for (int m : kd.exponents) via_exps += 2 * (m / 2);
                     if (direct != via_exps)
                       return {false, "paths disagree at " + sys_name(f, n),
                               "both computation paths agree and give [4, 9, 38]"};
                     got.push_back(direct);
                   }
                   return {got == want, list_str(got),
                           "both computation paths agree and give [4, 9, 38]"};
                 }});

    // ---- ledger suite -----------------------------------------------------
    r.push_back({"ledger", "ledger.h0.real_closed_forms", "archimedean fixed dimension formulas",
                 [](const ReportParams&) -> CheckOutcome {
                   auto expect = [](Family f, int rank) -> int {
                     int n = f == Family::A ? rank + 1 : rank;
                     switch (f) {
                       case Family::A: return (n - 1) * (n - 1);
                       case Family::B: return 2 * n * n - 3 * n + 2;
                       case Family::C: return 2 * n * n - 3 * n + 4;
                       default: return 2 * n * n - 5 * n + 4;
                     }
                   };
                   std::vector<std::string> bad;
                   for (auto [f, n] : all_systems()) {
                     if (f != Family::A && f != Family::B && f != Family::C && f != Family::D)
                       continue;
                     if (f == Family::A && n < 1) continue;
                     if (real_h0_max(f, n) != expect(f, n)) bad.push_back(sys_name(f, n));
                   }
                   return {bad.empty(),
                           bad.empty() ? "formulas hold for every classical system, rank <= 8"
                                       : "mismatch at " + list_str(bad),
                           "largest involution fixed dimension matches its closed form"};
                 }});

    r.push_back({"ledger", "ledger.h0.e7_bound", "rank seven archimedean bound",
                 [](const ReportParams& p) -> CheckOutcome {
                   auto b = e7_real_bound_check(p.prime);
                   return {b.holds && b.bound == 119,
                           "bound " + std::to_string(b.bound) + " from " +
                               std::to_string(b.candidates) + " candidates, smallest minus "
                               "eigenspace " + std::to_string(b.min_minus_dim),
                           "every candidate involution caps the fixed space at 119"};
                 }});

    auto slack_check = [](Family f, int lo, int hi,
                          std::function<long long(int)> want) {
      return [f, lo, hi, want](const ReportParams&) -> CheckOutcome {
        std::vector<long long> got, expect;
        for (int n = lo; n <= hi; ++n) {
          const auto& rs = chev(f, n).rs;
          int dim_g = rs.size() + rs.rank;
          auto led = standard_ledger(f, n, Construction::weyl, real_h0_max(f, n), dim_g);
          got.push_back(wiles_rhs(led));
          expect.push_back(want(n));
        }
        return {got == expect, list_str(got), list_str(expect)};
      };
    };
    r.push_back({"ledger", "ledger.slack.sln", "difference values, linear family",
                 slack_check(Family::A, 1, 8, [](int r) { return static_cast<long long>(r); })});
    r.push_back({"ledger", "ledger.slack.spin2n1", "difference values, odd orthogonal family",
                 slack_check(Family::B, 2, 8, [](int n) { return 3LL * n - 2; })});
    r.push_back({"ledger", "ledger.slack.sp2n", "difference values, symplectic family",
                 slack_check(Family::C, 2, 8, [](int n) { return 3LL * n - 4; })});
    r.push_back({"ledger", "ledger.slack.spin2n", "difference values, even orthogonal family",
                 slack_check(Family::D, 4, 8, [](int n) { return 3LL * n - 4; })});

    r.push_back({"ledger", "ledger.slack.e7", "difference value at rank seven",
                 [](const ReportParams& p) -> CheckOutcome {
                   auto b = e7_real_bound_check(p.prime);
                   const auto& rs = chev(Family::E, 7).rs;
                   auto led = standard_ledger(Family::E, 7, Construction::weyl, b.bound,
                                              rs.size() + rs.rank);
                   long long v = wiles_rhs(led);
                   return {v == 7, std::to_string(v), "7"};
                 }});

    r.push_back({"ledger", "ledger.principal.values", "principal construction differences",
                 [](const ReportParams&) -> CheckOutcome {
                   std::vector<long long> got;
                   for (auto [f, n] : {std::pair{Family::A, 2}, std::pair{Family::B, 3},
                                       std::pair{Family::E, 6}}) {
                     const auto& rs = chev(f, n).rs;
                     auto led = standard_ledger(f, n, Construction::principal,
                                                even_height_fixed_dim(rs), rs.size() + rs.rank);
                     got.push_back(wiles_rhs(led));
                   }
                   return {got == std::vector<long long>{2, 9, 34}, list_str(got), "[2, 9, 34]"};
                 }});

    r.push_back({"ledger", "ledger.euler.unramified", "unramified local dimension identity",
                 [](const ReportParams& p) -> CheckOutcome {
                   Fp proto = Fp::make(0, p.prime);
                   std::mt19937_64 rng(p.seed);
                   std::uniform_int_distribution<std::uint64_t> pick(0, p.prime - 1);
                   int tested = 0;
                   for (int trial = 0; tested < 200; ++trial) {
                     if (trial > 4000) return {false, "sampling stalled", "h1 = h0 + h2"};
                     Matrix<Fp> phi(4, 4, proto);
                     for (int i = 0; i < 4; ++i)
                       for (int j = 0; j < 4; ++j)
                         phi(i, j) = proto.from(static_cast<long long>(pick(rng)));
                     Fp q = proto.from(static_cast<long long>(pick(rng)));
                     if (q.is_zero() || phi.nullity() != 0) continue;
                     auto h = unramified_local_h(phi, q);
                     if (h.h1 != h.h0 + h.h2)
                       return {false, "identity failed", "h1 = h0 + h2 on every sample"};
                     ++tested;
                   }
                   return {true, "200 samples satisfy h1 = h0 + h2",
                           "h1 = h0 + h2 on every sample"};
                 }});

    r.push_back({"ledger", "ledger.descent.invariance", "descent difference invariance",
                 [](const ReportParams& p) -> CheckOutcome {
                   std::mt19937_64 rng(p.seed ^ 0xdeadbeefULL);
                   std::uniform_int_distribution<int> pick(0, 12);
                   for (int trial = 0; trial < 200; ++trial) {
                     int a = pick(rng), b = pick(rng);
                     int sel = std::min(a, b), dual = std::max(a, b);
                     auto run = dual_selmer_descent_sim(sel, dual);
                     if (static_cast<int>(run.size()) != dual + 1 || run.back().second != 0)
                       return {false, "wrong step count", "dual_dim steps ending at zero"};
                     for (std::size_t i = 1; i < run.size(); ++i)
                       if (run[i - 1].first > 0 &&
                           run[i].second - run[i].first !=
                               run[i - 1].second - run[i - 1].first)
                         return {false, "difference drifted", "difference preserved off the floor"};
                   }
                   return {true, "200 simulations preserve the difference and end at zero",
                           "difference preserved off the floor; dual_dim steps ending at zero"};
                 }});

    r.push_back({"ledger", "ledger.t_summand.nonpositive", "torus summand slack sign",
                 [](const ReportParams&) -> CheckOutcome {
                   for (int rank = 2; rank <= 8; ++rank)
                     for (int h0t = 0; h0t <= rank; ++h0t)
                       if (t_ledger_check(Family::A, rank, h0t) > 0)
                         return {false, "positive slack appeared", "always nonpositive"};
                   return {true, "nonpositive for every admissible fixed dimension",
                           "always nonpositive"};
                 }});

    r.push_back({"ledger", "ledger.mu_l2.obstruction", "second cyclotomic layer obstruction",
                 [](const ReportParams&) -> CheckOutcome {
                   for (long long l : {3LL, 5LL, 7LL, 11LL, 13LL, 73LL}) {
                     if (!mu_l2_obstruction(2 * (l - 1), l))
                       return {false, "bound 2(l-1) not obstructed at l = " + std::to_string(l),
                               "obstructed below l(l-1), not at it"};
                     if (mu_l2_obstruction(l * (l - 1), l))
                       return {false, "boundary wrongly obstructed at l = " + std::to_string(l),
                               "obstructed below l(l-1), not at it"};
                   }
                   return {true, "strict comparison verified at six primes",
                           "obstructed below l(l-1), not at it"};
                 }});

    return r;
  }();
  return registry;
}

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> v = {"all",         "rootsys",   "decomp",
                                             "transporter", "principal", "ledger"};
  return v;
}

inline Report run_verify(const ReportParams& params) {
  if (!is_prime_u64(params.prime)) throw error("verify: --prime must be a prime number");
  if (std::find(known_suites().begin(), known_suites().end(), params.suite) ==
      known_suites().end())
    throw error("verify: unknown suite '" + params.suite + "'");
  Report rep;
  rep.params = params;
  rep.params.command = "verify";
  for (const auto& spec : check_registry()) {
    if (params.suite != "all" && params.suite != spec.suite) continue;
    CheckRecord rec;
    rec.check_id = spec.id;
    rec.paper_anchor = spec.anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto out = spec.fn(params);
      rec.status = out.ok ? "pass" : "fail";
      rec.observed = out.observed;
      rec.expected = out.expected;
    } catch (const std::exception& e) {
      rec.status = "fail";
      rec.observed = std::string("error: ") + e.what();
      rec.expected = "check completes";
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    rep.checks.push_back(std::move(rec));
  }
  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  return rep;
}

// ---------------------------------------------------------------------------
// single-group report

inline Report run_group_report(const ReportParams& params) {
  if (!is_prime_u64(params.prime)) throw error("report: --prime must be a prime number");
  if (!params.family) throw error("report: --family is required");
  Family f = *params.family;
  int n = params.rank;
  if (n < 1 || n > 8) throw error("report: --rank must lie in 1..8");
  const Chevalley* chp = nullptr;
  try {
    chp = &report_detail::chev(f, n);
  } catch (const error& e) {
    throw error(std::string("report: ") + e.what());
  }
  const Chevalley& ch = *chp;
  const RootSystem& rs = ch.rs;
  using report_detail::list_str;

  Report rep;
  rep.params = params;
  rep.params.command = "report";

  auto add = [&](const std::string& id, const std::string& anchor, const std::string& status,
                 const std::string& observed, const std::string& expected) {
    rep.checks.push_back({id, anchor, status, observed, expected, 0});
  };

  auto timed = [&](const std::string& id, const std::string& anchor,
                   const std::function<std::pair<std::string, std::string>()>& body) {
    CheckRecord rec;
    rec.check_id = id;
    rec.paper_anchor = anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [obs, exp] = body();
      rec.status = "pass";
      rec.observed = obs;
      rec.expected = exp;
    } catch (const std::exception& e) {
      rec.status = "skipped";
      rec.observed = std::string("not applicable: ") + e.what();
      rec.expected = "";
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    rep.checks.push_back(std::move(rec));
  };

  add("group.structure", "root system shape", "pass",
      rs.name() + ": " + std::to_string(rs.size()) + " roots, dimension " +
          std::to_string(ch.dim()) + ", Weyl order " +
          std::to_string(rs.weyl_order_closed_form()),
      "informational");

  timed("group.decomposition", "residual summand split", [&] {
    Fp proto = Fp::make(0, params.prime);
    auto dec = decompose(adjoint_normalizer_action(ch, proto), params.seed);
    std::vector<int> dims;
    for (const auto& s : dec.summands) dims.push_back(s.dim());
    return std::make_pair("summand dimensions " + list_str(dims) +
                              (dec.all_irreducible ? ", all irreducible" : ", reducible pieces"),
                          std::string("informational"));
  });

  timed("group.orbits", "root orbit sizes under the even subgroup", [&] {
    if (f != Family::E || n != 7)
      throw error("orbit decomposition is tracked at rank seven only");
    auto orb = orbits(alternating_generators(rs), rs.size());
    std::vector<int> sizes;
    for (const auto& o : orb) sizes.push_back(static_cast<int>(o.size()));
    std::sort(sizes.begin(), sizes.end());
    return std::make_pair("orbit sizes " + list_str(sizes), std::string("[56, 70]"));
  });

  timed("group.h0.involutions", "archimedean fixed dimensions", [&] {
    std::vector<int> vals;
    int nn = f == Family::A ? n + 1 : n;
    for (int d = 1; d < nn; ++d) vals.push_back(real_h0_classical(f, n, d));
    return std::make_pair("fixed dimensions by signature " + list_str(vals) + ", largest " +
                              std::to_string(real_h0_max(f, n)),
                          std::string("informational"));
  });

  timed("group.h0.even_height", "even height fixed dimension", [&] {
    return std::make_pair(std::to_string(even_height_fixed_dim(rs)), std::string("informational"));
  });

  timed("group.ledger.weyl", "difference value, involution construction", [&] {
    int h0 = 0;
    if (f == Family::E && n == 7)
      h0 = e7_real_bound_check(params.prime).bound;
    else
      h0 = real_h0_max(f, n);
    auto led = standard_ledger(f, n, Construction::weyl, h0, rs.size() + rs.rank);
    return std::make_pair(std::to_string(wiles_rhs(led)),
                          "dimension - rank - " + std::to_string(h0));
  });

  timed("group.ledger.principal", "difference value, principal construction", [&] {
    auto led = standard_ledger(f, n, Construction::principal, even_height_fixed_dim(rs),
                               rs.size() + rs.rank);
    return std::make_pair(std::to_string(wiles_rhs(led)), "dimension - rank - even height fixed");
  });

  bool excluded = (f == Family::A && (n == 1 || n == 2)) || (f == Family::B && n == 3);
  add("group.notes.rank_exclusions", "supported range note", "pass",
      excluded ? "this type is excluded from the main lifting construction; values above are "
                 "informational only"
               : "inside the supported range of the lifting construction",
      "noted");

  std::sort(rep.checks.begin(), rep.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.check_id < b.check_id; });
  return rep;
}

// ---------------------------------------------------------------------------
// serialization

inline nlohmann::ordered_json report_to_json(const Report& rep) {
  nlohmann::ordered_json j;
  j["schema_version"] = rep.schema_version;
  j["tool"] = "monodromy";
  j["tool_version"] = rep.tool_version;
  nlohmann::ordered_json inv;
  inv["command"] = rep.params.command;
  if (rep.params.command == "verify") inv["suite"] = rep.params.suite;
  if (rep.params.family) {
    inv["family"] = std::string(1, family_letter(*rep.params.family));
    inv["rank"] = rep.params.rank;
  }
  inv["prime"] = rep.params.prime;
  inv["seed"] = rep.params.seed;
  j["invocation"] = inv;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : rep.checks) {
    nlohmann::ordered_json rec;
    rec["check_id"] = c.check_id;
    rec["paper_anchor"] = c.paper_anchor;
    rec["status"] = c.status;
    rec["observed"] = c.observed;
    rec["expected"] = c.expected;
    rec["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(rec);
  }
  j["checks"] = checks;
  nlohmann::ordered_json sum;
  sum["total"] = rep.checks.size();
  sum["passed"] = rep.count("pass");
  sum["failed"] = rep.count("fail");
  sum["skipped"] = rep.count("skipped");
  j["summary"] = sum;
  return j;
}

inline std::string report_to_text(const Report& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks)
    os << (c.status == "pass" ? "[ pass ]" : c.status == "fail" ? "[ FAIL ]" : "[ skip ]") << " "
       << c.check_id << ": " << c.observed << "\n";
  os << rep.count("pass") << " passed, " << rep.count("fail") << " failed, "
     << rep.count("skipped") << " skipped\n";
  return os.str();
}

}  // namespace monodromy
