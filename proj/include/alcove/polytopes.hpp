#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "alcove/affine.hpp"
#include "alcove/linalg.hpp"
#include "alcove/polynomial.hpp"
#include "alcove/report.hpp"
#include "alcove/weights.hpp"

// Permutohedra and their dominant slices as exact rational polytopes.
//
// Membership in P(lambda) = Conv(W_f.lambda) is the majorization test on
// Z^{n+1} lifts (sort, compare prefix sums), so lattice-point counting never
// touches an H-representation. Vertices of the dominant slice P+(lambda)
// come from n-subsets of the 2n natural constraints. Lattice counts feed
// exact quasi-polynomial interpolation; no floating point anywhere.

namespace alcove::polytopes {

struct RationalPoint {
  int rank = 0;
  std::vector<Rational> fw;

  RationalPoint() = default;
  RationalPoint(int n, std::vector<Rational> c) : rank(n), fw(std::move(c)) {
    assert((int)fw.size() == rank);
  }
  explicit RationalPoint(const Weight& w) : rank(w.rank), fw(w.coords.begin(), w.coords.end()) {}
  bool operator==(const RationalPoint& o) const { return rank == o.rank && fw == o.fw; }
  bool operator<(const RationalPoint& o) const { return fw < o.fw; }
  bool is_dominant() const {
    for (const Rational& c : fw)
      if (c < 0) return false;
    return true;
  }
  RationalPoint operator+(const RationalPoint& o) const {
    assert(rank == o.rank);
    RationalPoint r = *this;
    for (int i = 0; i < rank; ++i) r.fw[i] += o.fw[i];
    return r;
  }
  RationalPoint operator-(const RationalPoint& o) const {
    assert(rank == o.rank);
    RationalPoint r = *this;
    for (int i = 0; i < rank; ++i) r.fw[i] -= o.fw[i];
    return r;
  }
  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < rank; ++i) {
      if (i) os << ',';
      os << fw[i];
    }
    os << ')';
    return os.str();
  }
};

inline Rational rational_floor(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) --f;
  return Rational(f);
}
inline Rational rational_ceil(const Rational& q) { return -rational_floor(-q); }
inline long long to_ll(const Rational& q) {
  assert(denominator(q) == 1);
  return (long long)numerator(q);
}

// simple-root coordinates of a rational point
inline std::vector<Rational> root_coords(const RationalPoint& p) {
  const int n = p.rank;
  std::vector<Rational> z(n + 1, Rational(0));
  for (int i = n - 1; i >= 0; --i) z[i] = z[i + 1] + p.fw[i];
  Rational s(0);
  for (const Rational& v : z) s += v;
  std::vector<Rational> r(n);
  Rational prefix(0);
  for (int m = 1; m <= n; ++m) {
    prefix += z[m - 1];
    r[m - 1] = prefix - s * m / (n + 1);
  }
  return r;
}

// --- membership -------------------------------------------------------------

// x in P(lambda) iff the sorted mean-centered lift of x is prefix-dominated
// by the lift of lambda.
inline bool permutohedron_contains(const Weight& lambda, const RationalPoint& x) {
  if (lambda.rank != x.rank) throw std::invalid_argument("permutohedron_contains: rank mismatch");
  assert(lambda.is_dominant());
  const int m = lambda.rank + 1;
  std::vector<Rational> zx(m, Rational(0));
  for (int i = lambda.rank - 1; i >= 0; --i) zx[i] = zx[i + 1] + x.fw[i];
  ZVector zl = zvector_lift(lambda);
  Rational sx(0), sl(zl.sum());
  for (const Rational& v : zx) sx += v;
  std::sort(zx.begin(), zx.end(), std::greater<Rational>());
  Rational px(0), pl(0);
  for (int k = 1; k <= lambda.rank; ++k) {
    px += zx[k - 1];
    pl += Rational(zl.v[k - 1]);
    if (px - sx * k / m > pl - sl * k / m) return false;
  }
  return true;
}

inline bool p_plus_contains(const Weight& lambda, const RationalPoint& x) {
  return x.is_dominant() && permutohedron_contains(lambda, x);
}

// --- H-representation and vertices of P+(lambda) -----------------------------

struct LinearFunctional {
  std::vector<Rational> c;  // value at x is sum c_k * x_k over fw coordinates

  Rational operator()(const RationalPoint& p) const {
    Rational v(0);
    for (std::size_t k = 0; k < c.size(); ++k) v += c[k] * p.fw[k];
    return v;
  }
};

inline Rational inverse_cartan_entry(int n, int i, int j) {  // 1-based
  return Rational((long long)std::min(i, j) * (n + 1 - std::max(i, j)), n + 1);
}

inline LinearFunctional fw_pairing_functional(int n, int i) {  // x -> <omega_i, x>
  LinearFunctional f;
  f.c.resize(n);
  for (int k = 1; k <= n; ++k) f.c[k - 1] = inverse_cartan_entry(n, i, k);
  return f;
}

inline LinearFunctional simple_root_functional(int n, int i) {  // x -> <x, alpha_i>
  LinearFunctional f;
  f.c.assign(n, Rational(0));
  f.c[i - 1] = 1;
  return f;
}

enum class Relation { LE, GE, EQ };

struct HPolytope {
  int rank = 0;
  struct Constraint {
    LinearFunctional f;
    Relation rel;
    Rational bound;
  };
  std::vector<Constraint> constraints;

  bool contains(const RationalPoint& p) const {
    for (const auto& c : constraints) {
      Rational v = c.f(p);
      if (c.rel == Relation::LE && v > c.bound) return false;
      if (c.rel == Relation::GE && v < c.bound) return false;
      if (c.rel == Relation::EQ && v != c.bound) return false;
    }
    return true;
  }
};

inline HPolytope p_plus_hrep(const Weight& lambda) {
  const int n = lambda.rank;
  HPolytope h;
  h.rank = n;
  RationalPoint lp(lambda);
  for (int i = 1; i <= n; ++i) {
    LinearFunctional f = fw_pairing_functional(n, i);
    h.constraints.push_back({f, Relation::LE, f(lp)});
  }
  for (int i = 1; i <= n; ++i)
    h.constraints.push_back({simple_root_functional(n, i), Relation::GE, Rational(0)});
  return h;
}

// Vertices from n-subsets of the 2n tight constraints; degenerate or
// infeasible subsystems are skipped.
inline std::vector<RationalPoint> p_plus_vertices(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("p_plus_vertices: non-dominant weight");
  const int n = lambda.rank;
  HPolytope h = p_plus_hrep(lambda);
  std::set<std::vector<Rational>> found;
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int from, int k) {
    if (k == n) {
      RationalMatrix m(n, RationalVector(n));
      RationalVector b(n);
      for (int r = 0; r < n; ++r) {
        m[r] = h.constraints[pick[r]].f.c;
        b[r] = h.constraints[pick[r]].bound;
      }
      auto x = solve_linear(std::move(m), std::move(b));
      if (x && h.contains(RationalPoint(n, *x))) found.insert(*x);
      return;
    }
    for (int i = from; i < 2 * n; ++i) {
      pick[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  std::vector<RationalPoint> out;
  for (const auto& v : found) out.emplace_back(n, v);
  return out;
}

// --- lattice points -----------------------------------------------------------

// Independent route to the ideal: scan the root-coordinate box below lambda
// and keep the dominant points of the coset.
inline std::vector<Weight> ideal_lattice_points(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("ideal_lattice_points: non-dominant weight");
  const int n = lambda.rank;
  std::vector<Rational> r = root_coords(RationalPoint(lambda));
  std::vector<long long> bound(n);
  for (int i = 0; i < n; ++i) bound[i] = to_ll(rational_floor(r[i]));
  std::set<std::vector<long long>> out;
  std::vector<long long> c(n, 0);
  while (true) {
    std::vector<long long> mu(lambda.coords);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      long long drop = 2 * c[i];
      if (i > 0) drop -= c[i - 1];
      if (i + 1 < n) drop -= c[i + 1];
      mu[i] -= drop;
      if (mu[i] < 0) ok = false;
    }
    if (ok) {
      // dominance holds by construction (nonnegative root coordinates)
      bool dom = true;
      for (long long v : mu)
        if (v < 0) dom = false;
      if (dom) out.insert(mu);
    }
    int i = n - 1;
    while (i >= 0 && c[i] == bound[i]) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  std::vector<Weight> res;
  for (const auto& m : out) res.emplace_back(n, m);
  return res;
}

inline long long count_zone_slice(const Weight& lambda, const Zone& zone) {
  long long cnt = 0;
  for (const Weight& mu : ideal(lambda))
    if (zone_of(mu) == zone) ++cnt;
  return cnt;
}

// --- translation trick and Minkowski sums ---------------------------------------

inline Report translation_trick_check(const Weight& lambda, const Zone& zone) {
  Report rep;
  rep.suite = "translation trick lambda=" + lambda.str() + " zone=" + zone.str();
  const int n = lambda.rank;
  Weight shift = zone.clamp_representative();
  // the identity needs lambda - omega(i) to stay dominant (membership of
  // lambda in the closed zone is a special case)
  if (!lambda.is_dominant() || !(lambda - shift).is_dominant())
    throw std::invalid_argument("translation_trick_check: lambda - omega(i) not dominant");

  std::set<std::vector<long long>> lhs;  // zone slice of the ideal, shifted back
  for (const Weight& mu : ideal(lambda))
    if (zone_of(mu) == zone) lhs.insert((mu - shift).coords);

  std::set<std::vector<long long>> rhs;  // face of the translated polytope
  for (const Weight& nu : ideal(lambda - shift)) {
    bool on_face = true;
    for (int j = 1; j <= n && on_face; ++j)
      if (zone.pattern[j - 1] != 2 && nu.pairing_simple(j) != 0) on_face = false;
    if (on_face) rhs.insert(nu.coords);
  }

  bool equal = lhs == rhs;
  std::string detail;
  if (!equal) {
    for (const auto& v : lhs)
      if (!rhs.count(v)) {
        detail = "point " + vec_to_string(v) + " only on the slice side";
        break;
      }
    if (detail.empty())
      for (const auto& v : rhs)
        if (!lhs.count(v)) {
          detail = "point " + vec_to_string(v) + " only on the face side";
          break;
        }
  }
  rep.add("slice equals translated face (lattice points)", equal, detail);
  return rep;
}

inline Report minkowski_check(const Weight& z, const Weight& y) {
  if (z.rank != y.rank) throw std::invalid_argument("minkowski_check: rank mismatch");
  if (!z.is_dominant() || !y.is_dominant())
    throw std::invalid_argument("minkowski_check: non-dominant argument");
  Report rep;
  rep.suite = "minkowski z=" + z.str() + " y=" + y.str();
  const int n = z.rank;
  Weight zy = z + y;

  std::vector<RationalPoint> vz = p_plus_vertices(z);
  std::vector<RationalPoint> vy = p_plus_vertices(y);
  std::vector<RationalPoint> vzy = p_plus_vertices(zy);
  HPolytope h_zy = p_plus_hrep(zy);

  std::set<std::vector<Rational>> sums;
  for (const auto& a : vz)
    for (const auto& b : vy) sums.insert((a + b).fw);

  bool sums_inside = true;
  std::string bad_sum;
  for (const auto& s : sums)
    if (!h_zy.contains(RationalPoint(n, s))) {
      sums_inside = false;
      bad_sum = RationalPoint(n, s).str();
      break;
    }
  rep.add("vertex sums lie in P+(z+y)", sums_inside, bad_sum);

  bool verts_are_sums = true;
  std::string bad_vert;
  for (const auto& v : vzy)
    if (!sums.count(v.fw)) {
      verts_are_sums = false;
      bad_vert = v.str();
      break;
    }
  rep.add("vertices of P+(z+y) decompose as sums", verts_are_sums, bad_vert);

  // equality of support values over the canonical outer normals; this pins
  // the two polytopes as equal, since all facet normals lie in this set
  std::vector<LinearFunctional> normals;
  for (int i = 1; i <= n; ++i) normals.push_back(fw_pairing_functional(n, i));
  for (int i = 1; i <= n; ++i) {
    LinearFunctional f = simple_root_functional(n, i);
    for (auto& c : f.c) c = -c;
    normals.push_back(f);
  }
  auto support = [&](const LinearFunctional& f, const std::vector<RationalPoint>& pts) {
    Rational best = f(pts.at(0));
    for (const auto& p : pts) best = std::max(best, f(p));
    return best;
  };
  bool supports_equal = true;
  std::string bad_normal;
  for (std::size_t k = 0; k < normals.size(); ++k) {
    if (support(normals[k], vz) + support(normals[k], vy) != support(normals[k], vzy)) {
      supports_equal = false;
      bad_normal = "normal #" + std::to_string(k);
      break;
    }
  }
  rep.add("support functions add", supports_equal, bad_normal);

  // lattice census over a covering box, membership by majorization on one
  // side and by the summed support H-representation on the other
  std::vector<Rational> r = root_coords(RationalPoint(zy));
  std::vector<long long> box(n);
  for (int i = 0; i < n; ++i) box[i] = to_ll(rational_floor(2 * r[i])) + 1;
  bool census_equal = true;
  std::string census_detail;
  std::vector<long long> cur(n, 0);
  while (true) {
    Weight nu(n, cur);
    RationalPoint p(nu);
    bool in_target = p_plus_contains(zy, p);
    bool in_sum = nu.is_dominant();
    for (std::size_t k = 0; k < normals.size() && in_sum; ++k)
      if (normals[k](p) > support(normals[k], vz) + support(normals[k], vy)) in_sum = false;
    if (in_target != in_sum) {
      census_equal = false;
      census_detail = "lattice point " + nu.str() + (in_target ? " missing from" : " extra in") +
                      " the Minkowski sum";
      break;
    }
    int i = n - 1;
    while (i >= 0 && cur[i] == box[i]) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  rep.add("lattice points agree", census_equal, census_detail);
  return rep;
}

// --- exact lattice-point counting for orbit polytopes ----------------------------

namespace detail {

inline long long orbit_size(int n, const std::vector<long long>& fw) {
  long long stab = 1;
  int run = 0;
  for (int i = 0; i <= n; ++i) {
    if (i < n && fw[i] == 0) {
      ++run;
    } else {
      stab *= factorial(run + 1);
      run = 0;
    }
  }
  return factorial(n + 1) / stab;
}

// Visit every dominant weight nu with nu rationally majorized by lambda, as
// its non-increasing lift (z_1 >= ... >= z_n >= z_{n+1} = 0).
inline void for_each_dominant_below(const Weight& lambda,
                                    const std::function<void(const std::vector<long long>&)>& visit) {
  const int n = lambda.rank;
  const int m = n + 1;
  ZVector zl = zvector_lift(lambda);
  const long long sl = zl.sum();
  std::vector<long long> pl(m);
  long long acc = 0;
  for (int k = 0; k < m; ++k) {
    acc += zl.v[k];
    pl[k] = acc;
  }
  std::vector<long long> z(m, 0);
  std::function<void(int, long long)> rec = [&](int idx, long long prefix) {
    if (idx == n) {
      // z_{n+1} = 0; final majorization check
      long long snu = prefix;
      for (int k = 1; k <= n; ++k) {
        long long pnu = 0;
        for (int t = 0; t < k; ++t) pnu += z[t];
        if ((long long)m * pnu - (long long)k * snu >
            (long long)m * pl[k - 1] - (long long)k * sl)
          return;
      }
      visit(z);
      return;
    }
    long long hi = idx == 0 ? sl : z[idx - 1];
    for (long long v = 0; v <= hi; ++v) {
      z[idx] = v;
      rec(idx + 1, prefix + v);
    }
    z[idx] = 0;
  };
  rec(0, 0);
}

}  // namespace detail

// |P(lambda) cap (ZPhi + delta)| where delta is specified by its coset index.
inline long long count_orbit_points_coset(const Weight& lambda, int coset) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("count_orbit_points_coset: non-dominant weight");
  const int n = lambda.rank;
  long long total = 0;
  detail::for_each_dominant_below(lambda, [&](const std::vector<long long>& z) {
    long long s = 0;
    for (long long v : z) s += v;
    if (mod_nonneg(s, n + 1) != coset) return;
    Weight nu = g_map(n, ZVector(z));
    total += detail::orbit_size(n, nu.coords);
  });
  return total;
}

inline long long count_orbit_points_full(const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("count_orbit_points_full: non-dominant weight");
  const int n = lambda.rank;
  long long total = 0;
  detail::for_each_dominant_below(lambda, [&](const std::vector<long long>& z) {
    Weight nu = g_map(n, ZVector(z));
    total += detail::orbit_size(n, nu.coords);
  });
  return total;
}

enum class CountLattice { FullWeightLattice, CosetOfDilation };

// counts[m] = |P(m*lambda) cap Gamma| for m = 0..m_max
inline std::vector<long long> dilation_counts(const Weight& lambda, int m_max,
                                              CountLattice mode) {
  std::vector<long long> out;
  for (int m = 0; m <= m_max; ++m) {
    Weight lm = lambda * m;
    out.push_back(mode == CountLattice::FullWeightLattice
                      ? count_orbit_points_full(lm)
                      : count_orbit_points_coset(lm, coset_index(lm)));
  }
  return out;
}

// counts[m] = |P+(m*lambda) cap Lambda|, the weight points of the dominant
// slice. The slice has rational vertices, so these counts are where genuine
// quasi-polynomial behavior shows up.
inline std::vector<long long> dominant_slice_dilation_counts(const Weight& lambda, int m_max) {
  std::vector<long long> out;
  for (int m = 0; m <= m_max; ++m) {
    long long cnt = 0;
    detail::for_each_dominant_below(lambda * m, [&](const std::vector<long long>&) { ++cnt; });
    out.push_back(cnt);
  }
  return out;
}

// |m [a,b] cap Z|
inline std::vector<long long> interval_dilation_counts(const Rational& a, const Rational& b,
                                                       int m_max) {
  assert(a <= b);
  std::vector<long long> out;
  for (int m = 0; m <= m_max; ++m) {
    Rational lo = rational_ceil(a * m), hi = rational_floor(b * m);
    out.push_back(lo > hi ? 0 : to_ll(hi - lo) + 1);
  }
  return out;
}

// --- quasi-polynomial fitting -------------------------------------------------

struct QuasiPolynomial {
  std::vector<long long> periods;  // one modulus per variable
  std::map<std::vector<long long>, Polynomial<Rational>> coset_polys;
  int degree = 0;

  Rational eval(const std::vector<long long>& x) const {
    assert(x.size() == periods.size());
    std::vector<long long> res(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) res[i] = mod_nonneg(x[i], periods[i]);
    auto it = coset_polys.find(res);
    if (it == coset_polys.end()) throw std::logic_error("QuasiPolynomial: missing coset");
    std::vector<Rational> args(x.begin(), x.end());
    return it->second.eval(args);
  }
};

// Exact degree-d interpolation through the first d+1 samples, verified
// against all the rest; nullopt when the data is not polynomial of that
// degree.
inline std::optional<Polynomial<Rational>> fit_polynomial_1d(
    const std::vector<std::pair<long long, Rational>>& samples, int degree) {
  if ((int)samples.size() < degree + 1) return std::nullopt;
  const int k = degree + 1;
  RationalMatrix m(k, RationalVector(k));
  RationalVector b(k);
  for (int r = 0; r < k; ++r) {
    Rational t(samples[r].first), p(1);
    for (int c = 0; c <= degree; ++c) {
      m[r][c] = p;
      p *= t;
    }
    b[r] = samples[r].second;
  }
  auto sol = solve_linear(std::move(m), std::move(b));
  if (!sol) return std::nullopt;
  Polynomial<Rational> poly(1);
  for (int c = 0; c <= degree; ++c) poly.add_term({c}, (*sol)[c]);
  for (const auto& [t, v] : samples)
    if (poly.eval({Rational(t)}) != v) return std::nullopt;
  return poly;
}

// One-variable quasi-polynomial fit: an exact polynomial of the given degree
// per residue class. Throws when a class is under-sampled or the data does
// not interpolate.
inline QuasiPolynomial fit_quasipolynomial(
    const std::vector<std::pair<long long, long long>>& samples, long long period, int degree) {
  if (period < 1) throw std::invalid_argument("fit_quasipolynomial: period must be positive");
  std::map<long long, std::vector<std::pair<long long, Rational>>> classes;
  for (const auto& [t, v] : samples) classes[mod_nonneg(t, period)].push_back({t, Rational(v)});
  QuasiPolynomial q;
  q.periods = {period};
  q.degree = degree;
  for (long long r = 0; r < period; ++r) {
    auto it = classes.find(r);
    if (it == classes.end() || (int)it->second.size() < degree + 1)
      throw std::invalid_argument("fit_quasipolynomial: insufficient samples in residue class " +
                                  std::to_string(r));
    auto poly = fit_polynomial_1d(it->second, degree);
    if (!poly)
      throw std::invalid_argument(
          "fit_quasipolynomial: samples in residue class " + std::to_string(r) +
          " do not interpolate at degree " + std::to_string(degree));
    q.coset_polys[{r}] = *poly;
  }
  return q;
}

// Whether every residue class carries the same polynomial (recorded by the
// experiment harnesses as an observation, never asserted).
inline bool collapses_to_polynomial(const QuasiPolynomial& q) {
  for (const auto& [res, poly] : q.coset_polys)
    if (!(poly == q.coset_polys.begin()->second)) return false;
  return true;
}

// The homogeneous degree-n polynomial relvol(P(lambda)) over the root
// lattice, interpolated exactly from dilation counts along root-lattice
// rays: for d in the root lattice the count m -> |P(m d) cap ZPhi| is an
// honest polynomial whose leading coefficient is relvol(P(d)).
inline Polynomial<Rational> relvol_polynomial(int n) {
  std::vector<std::vector<int>> monos;  // exponent vectors of total degree n
  std::vector<int> e(n, 0);
  std::function<void(int, int)> gen = [&](int idx, int left) {
    if (idx == n - 1) {
      e[idx] = left;
      monos.push_back(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[idx] = v;
      gen(idx + 1, left - v);
    }
  };
  gen(0, n);

  // all nonzero dominant root-lattice directions in a small box; the pivot
  // search below picks an independent subsystem out of them
  std::vector<Weight> dirs;
  std::vector<long long> c(n, 0);
  while (true) {
    int i = n - 1;
    while (i >= 0 && c[i] == 3) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
    Weight d(n, c);
    if (coset_index(d) == 0) dirs.push_back(d);
  }

  RationalMatrix rows;
  RationalVector rhs;
  for (const Weight& d : dirs) {
    std::vector<std::pair<long long, Rational>> pts;
    for (int m = 0; m <= n + 2; ++m)
      pts.push_back({m, Rational(count_orbit_points_coset(d * m, 0))});
    auto poly = fit_polynomial_1d(pts, n);
    if (!poly) throw std::logic_error("relvol_polynomial: ray counts not polynomial");
    RationalVector row(monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Rational v(1);
      for (int i = 0; i < n; ++i)
        for (int p = 0; p < monos[k][i]; ++p) v *= d.coords[i];
      row[k] = v;
    }
    rows.push_back(std::move(row));
    rhs.push_back(poly->coefficient({n}));
  }

  // select a full-rank square subsystem, solve, and verify every ray
  const std::size_t nb = monos.size();
  RationalMatrix work = rows;
  std::vector<std::size_t> ids(rows.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::size_t top = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < nb && top < work.size(); ++col) {
    std::size_t p = top;
    while (p < work.size() && work[p][col] == 0) ++p;
    if (p == work.size()) continue;
    std::swap(work[p], work[top]);
    std::swap(ids[p], ids[top]);
    for (std::size_t r = top + 1; r < work.size(); ++r) {
      if (work[r][col] == 0) continue;
      Rational f = work[r][col] / work[top][col];
      for (std::size_t cc = col; cc < nb; ++cc) work[r][cc] -= f * work[top][cc];
    }
    pivots.push_back(ids[top]);
    ++top;
  }
  if (pivots.size() < nb) throw std::logic_error("relvol_polynomial: degenerate ray system");
  RationalMatrix sq(nb, RationalVector(nb));
  RationalVector sb(nb);
  for (std::size_t r = 0; r < nb; ++r) {
    sq[r] = rows[pivots[r]];
    sb[r] = rhs[pivots[r]];
  }
  auto sol = solve_linear(std::move(sq), std::move(sb));
  if (!sol) throw std::logic_error("relvol_polynomial: singular system");
  for (std::size_t s = 0; s < rows.size(); ++s) {
    Rational v(0);
    for (std::size_t k = 0; k < nb; ++k) v += rows[s][k] * (*sol)[k];
    if (v != rhs[s]) throw std::logic_error("relvol_polynomial: residual on a held-out ray");
  }
  Polynomial<Rational> out(n);
  for (std::size_t k = 0; k < nb; ++k) out.add_term(monos[k], (*sol)[k]);
  return out;
}

// Smallest period up to the given bound whose per-class fit interpolates
// every sample; the safe default bound for permutohedral data is (n+1)!,
// which clears every vertex denominator.
inline QuasiPolynomial fit_quasipolynomial_auto(
    const std::vector<std::pair<long long, long long>>& samples, long long period_bound,
    int degree) {
  for (long long p = 1; p <= period_bound; ++p) {
    try {
      return fit_quasipolynomial(samples, p, degree);
    } catch (const std::invalid_argument&) {
    }
  }
  throw std::invalid_argument("fit_quasipolynomial_auto: no period up to " +
                              std::to_string(period_bound) + " interpolates");
}

// Top homogeneous component of interval sizes along a ray inside the deep
// zone Z(2,...,2): the degree-n coefficient is the same for every a and
// equals (n+1)! times the Ehrhart leading coefficient of the permutohedron
// along the same ray. The caller supplies one size function per element of
// F (this keeps the interval machinery out of this header).
inline Report top_component_check(
    int n, const Weight& base, const Weight& direction,
    const std::vector<std::function<long long(const Weight&)>>& interval_size_fns) {
  bool zero_dir = true;
  for (long long c : direction.coords)
    if (c != 0) zero_dir = false;
  if (zero_dir) throw std::invalid_argument("top_component_check: zero direction");

  Report rep;
  rep.suite = "top component base=" + base.str() + " dir=" + direction.str();
  const int samples = n + 3;  // degree n fit plus two held-out checks
  std::vector<Weight> ray;
  for (int t = 0; t <= samples; ++t) {
    Weight lt = base + direction * t;
    for (int j = 1; j <= n; ++j)
      if (lt.pairing_simple(j) < 2)
        throw std::invalid_argument("top_component_check: ray leaves the deep zone");
    ray.push_back(lt);
  }

  std::vector<Rational> leading;
  bool fits_ok = true;
  std::string fit_detail;
  for (std::size_t a = 0; a < interval_size_fns.size(); ++a) {
    std::vector<std::pair<long long, Rational>> pts;
    for (int t = 0; t <= samples; ++t)
      pts.push_back({t, Rational(interval_size_fns[a](ray[t]))});
    auto poly = fit_polynomial_1d(pts, n);
    if (!poly) {
      fits_ok = false;
      fit_detail = "interval sizes for element #" + std::to_string(a + 1) +
                   " are not degree-" + std::to_string(n) + " polynomial along the ray";
      break;
    }
    leading.push_back(poly->coefficient({n}));
  }
  rep.add("interval sizes fit degree-n polynomials", fits_ok, fit_detail);
  if (!fits_ok) return rep;

  bool same = true;
  for (const Rational& l : leading)
    if (l != leading[0]) same = false;
  rep.add("leading coefficient independent of a", same,
          same ? "" : "leading coefficients differ across F");

  std::vector<std::pair<long long, Rational>> epts;
  for (int t = 0; t <= samples; ++t)
    epts.push_back({t, Rational(count_orbit_points_coset(ray[t], coset_index(ray[t])))});
  auto epoly = fit_polynomial_1d(epts, n);
  bool ehrhart_ok = epoly.has_value();
  rep.add("permutohedron counts fit a degree-n polynomial", ehrhart_ok,
          "coset lattice counts along the ray are not polynomial");
  if (ehrhart_ok)
    rep.add("leading coefficient equals (n+1)! x relvol",
            leading[0] == Rational(factorial(n + 1)) * epoly->coefficient({n}),
            "interval leading " + to_string(leading[0]) + " vs (n+1)! x " +
                to_string(epoly->coefficient({n})));
  return rep;
}

// --- Cartan minors ---------------------------------------------------------------

// Determinant of the submatrix of the A_n Cartan matrix with the given
// 1-based row and column index sets.
inline long long cartan_minor(int n, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("cartan_minor: shape mismatch");
  for (int r : rows)
    if (r < 1 || r > n) throw std::invalid_argument("cartan_minor: row index out of range");
  for (int c : cols)
    if (c < 1 || c > n) throw std::invalid_argument("cartan_minor: column index out of range");
  const std::size_t k = rows.size();
  if (k == 0) return 1;
  auto a = cartan_matrix(n);
  RationalMatrix m(k, RationalVector(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(a[rows[i] - 1][cols[j] - 1]);
  Rational d = determinant(m);
  return to_ll(d);
}

// Partition mu with |det| = prod (mu_k + 1), |mu| <= n and at most
// n+1-|mu| parts; nullopt when det = 0.
inline std::optional<std::vector<int>> minor_partition_decomposition(
    int n, const std::vector<int>& rows, const std::vector<int>& cols) {
  long long d = cartan_minor(n, rows, cols);
  if (d < 0) d = -d;
  if (d == 0) return std::nullopt;
  // factorizations of d into non-increasing factors >= 2
  std::vector<int> parts;
  std::optional<std::vector<int>> best;
  std::function<void(long long, int)> rec = [&](long long rest, int maxf) {
    if (best) return;
    if (rest == 1) {
      int m = 0;
      for (int p : parts) m += p;
      if (m <= n && (int)parts.size() <= n + 1 - m) best = parts;
      return;
    }
    for (int f = std::min<long long>(maxf, rest); f >= 2; --f) {
      if (rest % f != 0) continue;
      parts.push_back(f - 1);
      rec(rest / f, f);
      parts.pop_back();
    }
  };
  rec(d, (int)std::min<long long>(d, n + 1));
  return best;
}

// Every square submatrix of the Cartan matrix has determinant 0 or a
// product of (part+1) over a partition as above; exhaustive for one rank.
inline Report cartan_minors_check(int n) {
  Report rep;
  rep.suite = "cartan minors n=" + std::to_string(n);
  bool all_ok = true;
  std::string detail;
  std::vector<int> rows, cols;
  std::function<void(int, int, int)> pick_cols = [&](int k, int from, int unused) {
    (void)unused;
    if ((int)cols.size() == k) {
      long long d = cartan_minor(n, rows, cols);
      if (d != 0) {
        auto part = minor_partition_decomposition(n, rows, cols);
        long long ad = d < 0 ? -d : d;
        bool ok = part.has_value();
        if (ok) {
          long long prod = 1;
          int m = 0;
          for (int p : *part) {
            prod *= p + 1;
            m += p;
          }
          ok = prod == ad && m <= n && (int)part->size() <= n + 1 - m &&
               factorial(n + 1) % ad == 0;
        }
        if (!ok && all_ok) {
          all_ok = false;
          detail = "rows " + vec_to_string(rows) + " cols " + vec_to_string(cols) +
                   " det " + std::to_string(d);
        }
      }
      return;
    }
    for (int c = from; c <= n; ++c) {
      cols.push_back(c);
      pick_cols(k, c + 1, 0);
      cols.pop_back();
    }
  };
  std::function<void(int, int)> pick_rows = [&](int k, int from) {
    if ((int)rows.size() == k) {
      pick_cols(k, 1, 0);
      return;
    }
    for (int r = from; r <= n; ++r) {
      rows.push_back(r);
      pick_rows(k, r + 1);
      rows.pop_back();
    }
  };
  for (int k = 0; k <= n; ++k) pick_rows(k, 1);
  rep.add("all square submatrices decompose", all_ok, detail);
  return rep;
}

// Maximal minors of the 2n x n stack [inverse Cartan ; identity] are 0 or
// k/(n+1) with k dividing (n+1)!.
inline Report inverse_cartan_minor_check(int n) {
  Report rep;
  rep.suite = "inverse cartan minors n=" + std::to_string(n);
  RationalMatrix stack(2 * n, RationalVector(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) stack[i - 1][j - 1] = inverse_cartan_entry(n, i, j);
  for (int i = 0; i < n; ++i) stack[n + i][i] = 1;

  bool all_ok = true;
  std::string detail;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if ((int)pick.size() == n) {
      RationalMatrix m(n, RationalVector(n));
      for (int r = 0; r < n; ++r) m[r] = stack[pick[r]];
      Rational d = determinant(m);
      if (d < 0) d = -d;
      if (d != 0) {
        Rational k = d * (n + 1);
        bool ok = denominator(k) == 1 && Integer(factorial(n + 1)) % numerator(k) == 0;
        if (!ok && all_ok) {
          all_ok = false;
          detail = "rows " + vec_to_string(pick) + " minor " + to_string(d);
        }
      }
      return;
    }
    for (int r = from; r < 2 * n; ++r) {
      pick.push_back(r);
      rec(r + 1);
      pick.pop_back();
    }
  };
  rec(0);
  rep.add("all maximal minors are 0 or k/(n+1), k | (n+1)!", all_ok, detail);
  return rep;
}

// --- Shi membership ------------------------------------------------------------

// The lowest cell in alcove form: every point of the alcove has, for each
// positive root, pairing >= 0 or <= -1. Tested at the barycenter.
inline bool shi_membership(const AffinePermutation& x) {
  const int n = x.rank;
  std::vector<long long> sum(n, 0);
  for (const Weight& v : alcove_vertices(x))
    for (int i = 0; i < n; ++i) sum[i] += v.coords[i];
  for (const RootInterval& a : all_positive_roots(n)) {
    long long s = 0;
    for (int k = a.lo; k <= a.hi; ++k) s += sum[k - 1];
    if (s >= 0 || s <= -(n + 1)) continue;
    return false;
  }
  return true;
}

}  // namespace alcove::polytopes
