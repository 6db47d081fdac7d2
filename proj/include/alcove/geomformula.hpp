#pragma once

#include <map>

#include "alcove/polynomial.hpp"
#include "alcove/radical.hpp"
#include "alcove/report.hpp"
#include "alcove/tables_a3.hpp"
#include "alcove/weights.hpp"

// The geometric formula: interval sizes as fixed linear combinations of
// Euclidean face volumes of the permutohedron.
//
// A face is indexed by a subset J of the simple reflections; its volume
// polynomial factors over the maximal runs of consecutive indices in J, so
// every basis polynomial is a product of single-block volumes. Blocks up to
// size 3 are provided, which covers ranks up to 3 exactly (the rank-3 data
// is the proven case; anything the fitter produces beyond it is labeled
// conjectural).

namespace alcove::geomformula {

using GeoPolynomial = Polynomial<RadicalScalar>;

namespace detail {

inline GeoPolynomial block_volume(int nvars, const std::vector<int>& vars) {
  using P = GeoPolynomial;
  auto var = [&](int k) { return P::variable(nvars, vars[k]); };
  auto c = [&](RadicalScalar s) { return P::constant(nvars, s); };
  switch (vars.size()) {
    case 1:
      return c(RadicalScalar::sqrt2()) * var(0);
    case 2: {
      P x = var(0), y = var(1);
      return c(RadicalScalar::sqrt3(Rational(1, 2))) * x * x +
             c(RadicalScalar::sqrt3(Rational(2))) * x * y +
             c(RadicalScalar::sqrt3(Rational(1, 2))) * y * y;
    }
    case 3: {
      P x = var(0), y = var(1), z = var(2);
      auto q = [&](Rational v) { return c(RadicalScalar(std::move(v))); };
      return q(Rational(1, 3)) * x * x * x + q(2) * x * x * y + q(4) * x * y * y +
             q(Rational(4, 3)) * y * y * y + q(3) * x * x * z + q(12) * x * y * z +
             q(4) * y * y * z + q(3) * x * z * z + q(2) * y * z * z +
             q(Rational(1, 3)) * z * z * z;
    }
    default:
      throw std::invalid_argument("block_volume: blocks of size > 3 not available");
  }
}

}  // namespace detail

// Volume polynomial of the face indexed by the subset mask (bit i-1 for the
// generator i).
inline GeoPolynomial volume_poly(int n, unsigned mask) {
  GeoPolynomial out = GeoPolynomial::constant(n, RadicalScalar(1));
  int i = 1;
  while (i <= n) {
    if (!(mask >> (i - 1) & 1u)) {
      ++i;
      continue;
    }
    std::vector<int> block;
    while (i <= n && (mask >> (i - 1) & 1u)) block.push_back(i++ - 1);
    out = out * detail::block_volume(n, block);
  }
  return out;
}

inline GeoPolynomial volume_poly_a3(unsigned mask) { return volume_poly(3, mask); }

inline RadicalScalar mu_a3(int a, unsigned mask) {
  if (a < 1 || a > 6 || mask > 7) throw std::invalid_argument("mu_a3: index out of range");
  return tables_a3::mu_table()[a - 1][mask];
}

// The full rank-3 size polynomial F_a = sum_J mu_{J,a} V_J.
inline GeoPolynomial geo_polynomial_a3(int a) {
  GeoPolynomial f(3);
  for (unsigned mask = 0; mask < 8; ++mask)
    f = f + volume_poly_a3(mask) * mu_a3(a, mask);
  return f;
}

// Evaluate F_a at a rank-3 weight; the radical parts must cancel.
inline Rational eval_formula_a3(int a, const Weight& lambda) {
  if (lambda.rank != 3) throw std::invalid_argument("eval_formula_a3: rank must be 3");
  std::vector<RadicalScalar> pt;
  for (long long c : lambda.coords) pt.emplace_back(Rational(c));
  RadicalScalar v = geo_polynomial_a3(a).eval(pt);
  if (!v.is_rational())
    throw std::logic_error("eval_formula_a3: radicals did not cancel: " + v.str());
  return v.rational_part();
}

// Per-zone consistency of the formula with the inclusion-exclusion
// recurrence: for each zone, the alternating sum of shifted copies of F_a
// over subsets of the cover set must be the constant c_a(Z). The identity
// is expanded symbolically in the free coordinates.
inline Report verify_zone_identities(int a, const std::map<Zone, long long>& zone_sizes) {
  Report rep;
  rep.suite = "zone identities a_" + std::to_string(a);
  GeoPolynomial f = geo_polynomial_a3(a);
  for (const Zone& zone : all_zones(3)) {
    Weight rep_weight = zone.clamp_representative();
    std::vector<RootInterval> phi = phi_plus(rep_weight);
    const int k = (int)phi.size();
    GeoPolynomial total(3);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<long long> join_rc(3, 0);
      int bits = 0;
      for (int b = 0; b < k; ++b) {
        if (!(mask >> b & 1u)) continue;
        ++bits;
        std::vector<long long> rc = phi[b].root_coords(3);
        for (int i = 0; i < 3; ++i) join_rc[i] = std::max(join_rc[i], rc[i]);
      }
      RootVector rv(3, std::vector<Rational>(join_rc.begin(), join_rc.end()));
      auto shift = root_to_fw(rv);
      assert(shift);
      GeoPolynomial term = f;
      for (int v = 0; v < 3; ++v)
        if (shift->coords[v] != 0)
          term = term.shift(v, RadicalScalar(Rational(-shift->coords[v])));
      total = bits % 2 == 0 ? total + term : total - term;
    }
    for (int v = 0; v < 3; ++v)
      if (zone.pattern[v] != 2)
        total = total.fix(v, RadicalScalar(Rational(zone.pattern[v])));
    GeoPolynomial expected =
        GeoPolynomial::constant(3, RadicalScalar(Rational(zone_sizes.at(zone))));
    rep.add("zone " + zone.str(), total == expected,
            "residual " + (total - expected).str({"x", "y", "z"}));
  }
  return rep;
}

// --- experimental coefficient fitting ------------------------------------------

struct GeometricFit {
  bool solved = false;         // the linear system had full rank
  bool zero_residual = false;  // every sample is reproduced exactly
  std::map<unsigned, RadicalScalar> coefficients;
  std::string status = "EXPERIMENTAL/CONJECTURAL";
  std::string detail;
};

namespace detail {

// Every basis polynomial is a pure radical multiple of a rational
// polynomial; return (component index, squared weight) of that radical.
inline std::pair<int, long long> radical_signature(const GeoPolynomial& p) {
  int comp = -1;
  for (const auto& [e, c] : p.terms()) {
    int this_comp = -1;
    if (c.r1 != 0) this_comp = 0;
    if (c.r2 != 0) this_comp = this_comp == -1 ? 1 : -2;
    if (c.r3 != 0) this_comp = this_comp == -1 ? 2 : -2;
    if (c.r6 != 0) this_comp = this_comp == -1 ? 3 : -2;
    if (this_comp == -2) throw std::logic_error("mixed radical components in a basis volume");
    if (comp == -1) comp = this_comp;
    if (comp != this_comp) throw std::logic_error("mixed radical components in a basis volume");
  }
  if (comp == -1) comp = 0;  // zero polynomial
  static const long long weight[4] = {1, 2, 3, 6};
  return {comp, weight[comp]};
}

inline Rational component(const RadicalScalar& s, int comp) {
  switch (comp) {
    case 0: return s.r1;
    case 1: return s.r2;
    case 2: return s.r3;
    default: return s.r6;
  }
}

inline RadicalScalar from_component(int comp, const Rational& v) {
  switch (comp) {
    case 0: return RadicalScalar(v);
    case 1: return RadicalScalar::sqrt2(v);
    case 2: return RadicalScalar::sqrt3(v);
    default: return RadicalScalar::sqrt6(v);
  }
}

}  // namespace detail

// Solve sum_J mu_J V_J(lambda_s) = size_s for the 2^n coefficients from
// enumerated interval sizes. Exact; any nonzero residual is reported, not
// hidden. Output is labeled conjectural: only rank <= 3 is a theorem.
inline GeometricFit fit_geometric_coeffs(
    int n, const std::vector<std::pair<Weight, long long>>& samples) {
  const unsigned nb = 1u << n;
  GeometricFit fit;
  if (samples.size() < nb) {
    fit.detail = "need at least " + std::to_string(nb) + " samples";
    return fit;
  }
  std::vector<GeoPolynomial> basis;
  std::vector<std::pair<int, long long>> sig;
  for (unsigned mask = 0; mask < nb; ++mask) {
    basis.push_back(volume_poly(n, mask));
    sig.push_back(detail::radical_signature(basis.back()));
  }
  // rationalized system: columns scaled by the squared radical weight
  RationalMatrix rows;
  RationalVector rhs;
  for (const auto& [lambda, size] : samples) {
    RationalVector row(nb);
    std::vector<RadicalScalar> pt;
    for (long long c : lambda.coords) pt.emplace_back(Rational(c));
    for (unsigned mask = 0; mask < nb; ++mask) {
      RadicalScalar v = basis[mask].eval(pt);
      row[mask] = detail::component(v, sig[mask].first) * sig[mask].second;
    }
    rows.push_back(std::move(row));
    rhs.push_back(Rational(size));
  }
  // pick a full-rank square subsystem by elimination order
  std::vector<std::size_t> pivot_rows;
  RationalMatrix work = rows;
  std::vector<std::size_t> row_ids(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) row_ids[i] = i;
  std::size_t top = 0;
  for (unsigned col = 0; col < nb && top < work.size(); ++col) {
    std::size_t p = top;
    while (p < work.size() && work[p][col] == 0) ++p;
    if (p == work.size()) continue;
    std::swap(work[p], work[top]);
    std::swap(row_ids[p], row_ids[top]);
    for (std::size_t r = top + 1; r < work.size(); ++r) {
      if (work[r][col] == 0) continue;
      Rational f = work[r][col] / work[top][col];
      for (unsigned c = col; c < nb; ++c) work[r][c] -= f * work[top][c];
    }
    pivot_rows.push_back(row_ids[top]);
    ++top;
  }
  if (pivot_rows.size() < nb) {
    fit.detail = "singular system: rank " + std::to_string(pivot_rows.size()) + " of " +
                 std::to_string(nb);
    return fit;
  }
  RationalMatrix sq(nb, RationalVector(nb));
  RationalVector sb(nb);
  for (unsigned r = 0; r < nb; ++r) {
    sq[r] = rows[pivot_rows[r]];
    sb[r] = rhs[pivot_rows[r]];
  }
  auto sol = solve_linear(std::move(sq), std::move(sb));
  if (!sol) {
    fit.detail = "singular system";
    return fit;
  }
  fit.solved = true;
  fit.zero_residual = true;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    Rational v(0);
    for (unsigned mask = 0; mask < nb; ++mask) v += rows[s][mask] * (*sol)[mask];
    if (v != rhs[s]) {
      fit.zero_residual = false;
      fit.detail = "sample " + samples[s].first.str() + " residual " + to_string(rhs[s] - v);
      break;
    }
  }
  for (unsigned mask = 0; mask < nb; ++mask)
    fit.coefficients[mask] = detail::from_component(sig[mask].first, (*sol)[mask]);
  return fit;
}

}  // namespace alcove::geomformula
