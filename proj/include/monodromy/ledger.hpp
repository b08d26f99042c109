#pragma once

// Integer bookkeeping for the dimension counts behind the lifting arguments:
// shapes of local deformation conditions, the global difference formula over
// them, tangent-space identities at auxiliary places with prescribed
// Frobenius, and the step-by-step descent of the dual side.  Everything here
// is exact integer arithmetic over dimensions; no cohomology groups are
// materialized.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/fp.hpp"
#include "monodromy/linalg.hpp"
#include "monodromy/transporter.hpp"

namespace monodromy {

enum class PlaceKind { real, ell, minimal, steinberg, fixed_frobenius, ramakrishna, unramified };

inline const char* place_kind_name(PlaceKind k) {
  switch (k) {
    case PlaceKind::real: return "real";
    case PlaceKind::ell: return "ell";
    case PlaceKind::minimal: return "minimal";
    case PlaceKind::steinberg: return "steinberg";
    case PlaceKind::fixed_frobenius: return "fixed_frobenius";
    case PlaceKind::ramakrishna: return "ramakrishna";
    case PlaceKind::unramified: return "unramified";
  }
  return "unknown";
}

struct LocalCondition {
  PlaceKind kind;
  int dim_l = 0;  // dimension of the chosen local tangent condition
  int h0 = 0;     // local fixed-vector dimension
  std::string label;
};

struct WilesLedger {
  std::vector<LocalCondition> conditions;
  int h0_global = 0;
  int h0_global_dual = 0;
  int module_dim = 0;
};

// Per-kind shape constraints.  The coefficient prime carries the full local
// tangent space (its second cohomology is consumed as an input assumption,
// see standard_ledger); a real place carries no condition when the
// characteristic is odd; fixed-Frobenius pins the lift entirely; the
// remaining kinds all have tangent dimension equal to the local fixed
// dimension.
inline void validate_ledger(const WilesLedger& led) {
  for (const auto& c : led.conditions) {
    bool ok = c.dim_l >= 0 && c.h0 >= 0;
    switch (c.kind) {
      case PlaceKind::minimal:
      case PlaceKind::steinberg:
      case PlaceKind::ramakrishna:
      case PlaceKind::unramified:
        ok = ok && c.dim_l == c.h0;
        break;
      case PlaceKind::ell:
        ok = ok && c.dim_l == c.h0 + led.module_dim;
        break;
      case PlaceKind::fixed_frobenius:
      case PlaceKind::real:
        ok = ok && c.dim_l == 0;
        break;
    }
    if (!ok)
      throw error("ledger: condition '" + c.label + "' (" + place_kind_name(c.kind) +
                  ") violates its shape");
  }
}

// Difference of the two global fixed dimensions plus the local excesses; by
// the global Euler-characteristic formula this equals the dimension of the
// tangent space cut out by the conditions minus that of the dual problem.
inline long long wiles_rhs(const WilesLedger& led) {
  validate_ledger(led);
  long long s = led.h0_global - led.h0_global_dual;
  for (const auto& c : led.conditions) s += c.dim_l - c.h0;
  return s;
}

struct LocalH {
  int h0 = 0;
  int h1 = 0;
  int h2 = 0;
};

// Cohomology dimensions of an unramified module at a place whose residue
// characteristic differs from the coefficient one: Frobenius acts by phi,
// the cyclotomic character takes the value q there, and the local Euler
// characteristic vanishes, so h1 = h0 + h2 with h0, h2 the fixed spaces of
// phi and of phi twisted back by q.
inline LocalH unramified_local_h(const Matrix<Fp>& phi, const Fp& q) {
  if (phi.rows() != phi.cols()) throw error("unramified_local_h: square matrix required");
  if (q.is_zero()) throw error("unramified_local_h: q must be a unit");
  if (phi.rows() > 0 && phi.nullity() != 0)
    throw error("unramified_local_h: frobenius action must be invertible");
  int n = phi.rows();
  Matrix<Fp> id = Matrix<Fp>::identity(n, q);
  LocalH out;
  out.h0 = n == 0 ? 0 : (phi - id).nullity();
  out.h2 = n == 0 ? 0 : (phi - id.scaled(q)).nullity();
  out.h1 = out.h0 + out.h2;
  return out;
}

enum class Construction { weyl, principal };

inline Construction parse_construction(const std::string& s) {
  if (s == "weyl") return Construction::weyl;
  if (s == "principal") return Construction::principal;
  throw error("standard_ledger: unsupported construction tag '" + s + "'");
}

// The standard global ledger of both constructions: no condition at the
// coefficient prime (so its excess is the full module dimension, granting
// that the local h2 there vanishes, an assumption taken as input to the
// recipe), minimal conditions at the ramified primes, a Steinberg place, a
// pinned auxiliary place whose regular semisimple Frobenius fixes exactly a
// torus, and the archimedean place contributing minus its fixed dimension.
// The resulting difference is module_dim - rank - h0_real.
inline WilesLedger standard_ledger(Family f, int rank, Construction tag, int h0_real,
                                   int module_dim) {
  if (rank <= 0) throw error("standard_ledger: positive rank required");
  if (h0_real < 0 || module_dim <= 0) throw error("standard_ledger: bad dimensions");
  if (h0_real > module_dim)
    throw error("standard_ledger: fixed dimension exceeds the module dimension");
  std::string src;
  switch (tag) {
    case Construction::weyl:
      src = "involution fixed space";
      break;
    case Construction::principal:
      src = "even height fixed space";
      break;
    default:
      throw error("standard_ledger: unsupported construction tag");
  }
  WilesLedger led;
  led.module_dim = module_dim;
  led.conditions = {
      {PlaceKind::real, 0, h0_real, std::string(1, family_letter(f)) + ": archimedean place, " + src},
      {PlaceKind::ell, module_dim, 0, "coefficient prime, no condition imposed"},
      {PlaceKind::minimal, 0, 0, "primes ramified in the residual representation"},
      {PlaceKind::steinberg, rank, rank, "steinberg place"},
      {PlaceKind::fixed_frobenius, 0, rank, "auxiliary place, regular semisimple frobenius"},
  };
  validate_ledger(led);
  return led;
}

// Archimedean bookkeeping for the torus summand alone: every finite place
// contributes its fixed dimension exactly, so the signed slack of the torus
// ledger is minus the archimedean fixed dimension, never positive.
inline int t_ledger_check(Family f, int rank, int h0_real_t) {
  if (rank <= 0)
    throw error(std::string("t_ledger_check: positive rank required for ") + family_letter(f));
  if (h0_real_t < 0 || h0_real_t > rank)
    throw error("t_ledger_check: torus fixed dimension out of range");
  return -h0_real_t;
}

struct RamStep {
  int eq2_delta = 0;             // torus-summand defect of the second count
  bool eq1_strict_possible = false;  // the first count can be made strict
};

// Tangent-space bookkeeping at an auxiliary place whose Frobenius acts by
// the found automorphism and where the prescribed character value is q, the
// scalar of the chosen line.  The tangent condition meets the torus summand
// in a space of dimension dim(W cap t), while the local fixed dimension of
// the torus summand is computed honestly from the restricted Frobenius; the
// two agree, so the defect is zero.  Strictness of the first count needs the
// torus summand to project nontrivially onto the opposite line.
inline RamStep ramakrishna_step_invariants(const Chevalley& ch, const RegSSElement& rss,
                                           const PrimedDecomposition& dec, int line_idx,
                                           const Subspace<Fp>& t_sub, const Fp& q) {
  if (line_idx < 0 || line_idx >= static_cast<int>(dec.lines.size()))
    throw error("ramakrishna_step_invariants: line index out of range");
  if (!(dec.lines[line_idx].sigma_value == q))
    throw error("ramakrishna_step_invariants: q does not match the line scalar");

  int rank = ch.rs.rank;
  Fp proto = q;
  Matrix<Fp> phi(rank, rank, proto);
  for (int j = 0; j < rank; ++j) {
    Vec<Fp> img = rss.aut.apply(ch.basis_vector(ch.h_index(j), proto));
    for (int r = 0; r < ch.rs.size(); ++r)
      if (!img[r].is_zero())
        throw error("ramakrishna_step_invariants: automorphism does not preserve the torus");
    for (int i = 0; i < rank; ++i) phi(i, j) = img[ch.h_index(i)];
  }

  RamStep out;
  out.eq2_delta = intersection_dims(dec, line_idx, t_sub).w_cap_t - unramified_local_h(phi, q).h0;
  out.eq1_strict_possible = component_flags(ch, dec, line_idx, t_sub).has_g_minus_component;
  return out;
}

// Arithmetic shadow of the auxiliary-prime descent: each step keeps the
// difference of the two dimensions while dropping the dual one, with floors
// at zero, and the dual side reaches zero in exactly dual_dim steps.
inline std::vector<std::pair<int, int>> dual_selmer_descent_sim(int sel_dim, int dual_dim) {
  if (sel_dim < 0 || dual_dim < 0) throw error("dual_selmer_descent_sim: negative dimension");
  if (sel_dim > dual_dim)
    throw error("dual_selmer_descent_sim: tangent dimension exceeds the dual one");
  std::vector<std::pair<int, int>> steps{{sel_dim, dual_dim}};
  for (int k = 0; k < dual_dim; ++k) {
    auto [s, d] = steps.back();
    steps.emplace_back(std::max(s - 1, 0), std::max(d - 1, 0));
  }
  return steps;
}

// Whether a field whose abelianized Galois group has at most the given order
// can be ruled out from containing the second roots-of-unity layer: the
// latter would force a quotient of order l(l-1).
inline bool mu_l2_obstruction(long long ab_order_bound, long long l) {
  if (ab_order_bound < 0) throw error("mu_l2_obstruction: negative order bound");
  if (l < 3 || l % 2 == 0) throw error("mu_l2_obstruction: odd prime required");
  for (long long p = 3; p * p <= l; p += 2)
    if (l % p == 0) throw error("mu_l2_obstruction: odd prime required");
  return ab_order_bound < l * (l - 1);
}

}  // namespace monodromy
