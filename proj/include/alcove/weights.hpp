#pragma once

#include <map>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "alcove/core.hpp"
#include "alcove/linalg.hpp"

// Type A_n weight-lattice arithmetic.
//
// A weight is stored by its coordinates in the fundamental-weight basis
// (pmega_1..omega_n), so the pairing with a simple root alpha_j is just the
// j-th coordinate. The workhorse model is the Z^{n+1} lift: a weight
// sum(c_i omega_i) lifts to z with z_i = c_i + c_{i+1} + ... + c_n and
// z_{n+1} = 0, under which the finite Weyl group acts by permuting
// coordinates and the dominance order becomes the partial-sum order on
// sum-matched vectors. All comparisons below reduce to integer arithmetic on
// lifts; rationals appear only in explicit root-basis coordinates.

namespace alcove {

struct Weight {
  int rank = 0;
  std::vector<long long> coords;  // fundamental-weight basis

  Weight() = default;
  Weight(int n, std::vector<long long> c) : rank(n), coords(std::move(c)) {
    assert((int)coords.size() == rank);
  }
  static Weight zero(int n) { return Weight(n, std::vector<long long>(n, 0)); }
  static Weight fundamental(int n, int i) {
    // i = 0 gives omega_0 = 0
    assert(i >= 0 && i <= n);
    Weight w = zero(n);
    if (i >= 1) w.coords[i - 1] = 1;
    return w;
  }
  static Weight rho(int n) { return Weight(n, std::vector<long long>(n, 1)); }

  bool is_dominant() const {
    for (long long c : coords)
      if (c < 0) return false;
    return true;
  }
  long long pairing_simple(int j) const {  // <w, alpha_j>, 1-based j
    assert(j >= 1 && j <= rank);
    return coords[j - 1];
  }
  bool operator==(const Weight& o) const { return rank == o.rank && coords == o.coords; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const { return coords < o.coords; }  // lex, for ordered sets
  Weight operator+(const Weight& o) const {
    assert(rank == o.rank);
    Weight r = *this;
    for (int i = 0; i < rank; ++i) r.coords[i] += o.coords[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    assert(rank == o.rank);
    Weight r = *this;
    for (int i = 0; i < rank; ++i) r.coords[i] -= o.coords[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
  }
  Weight operator*(long long k) const {
    Weight r = *this;
    for (auto& c : r.coords) c *= k;
    return r;
  }
  std::string str() const { return vec_to_string(coords); }
};

struct RootVector {
  int rank = 0;
  std::vector<Rational> coords;  // simple-root basis

  RootVector() = default;
  RootVector(int n, std::vector<Rational> c) : rank(n), coords(std::move(c)) {
    assert((int)coords.size() == rank);
  }
  bool operator==(const RootVector& o) const { return rank == o.rank && coords == o.coords; }
};

struct ZVector {
  std::vector<long long> v;  // length n+1

  ZVector() = default;
  explicit ZVector(std::vector<long long> x) : v(std::move(x)) {}
  int size() const { return (int)v.size(); }
  long long sum() const { return std::accumulate(v.begin(), v.end(), 0LL); }
  bool operator==(const ZVector& o) const { return v == o.v; }
};

struct FinitePermutation {
  std::vector<int> img;  // img[r-1] = w(r), letters 1..n+1

  FinitePermutation() = default;
  explicit FinitePermutation(std::vector<int> w) : img(std::move(w)) {
    std::vector<bool> seen(img.size(), false);
    for (int x : img) {
      assert(x >= 1 && x <= (int)img.size() && !seen[x - 1]);
      seen[x - 1] = true;
    }
  }
  static FinitePermutation identity(int points) {
    std::vector<int> w(points);
    for (int i = 0; i < points; ++i) w[i] = i + 1;
    return FinitePermutation(std::move(w));
  }
  // Longest element of S_{n+1}: r -> n+2-r.
  static FinitePermutation longest(int points) {
    std::vector<int> w(points);
    for (int i = 0; i < points; ++i) w[i] = points - i;
    return FinitePermutation(std::move(w));
  }
  int points() const { return (int)img.size(); }
  int operator()(int r) const { return img[r - 1]; }
  FinitePermutation inverse() const {
    std::vector<int> w(img.size());
    for (int r = 1; r <= points(); ++r) w[img[r - 1] - 1] = r;
    return FinitePermutation(std::move(w));
  }
  // function composition: (a*b)(r) = a(b(r))
  FinitePermutation operator*(const FinitePermutation& b) const {
    assert(points() == b.points());
    std::vector<int> w(img.size());
    for (int r = 1; r <= points(); ++r) w[r - 1] = img[b.img[r - 1] - 1];
    return FinitePermutation(std::move(w));
  }
  bool operator==(const FinitePermutation& o) const { return img == o.img; }
  bool is_identity() const {
    for (int r = 1; r <= points(); ++r)
      if (img[r - 1] != r) return false;
    return true;
  }
  // left action on Z^{n+1}: (w.z)_i = z_{w^{-1}(i)}
  ZVector act(const ZVector& z) const {
    assert(z.size() == points());
    ZVector r = z;
    for (int i = 1; i <= points(); ++i) r.v[img[i - 1] - 1] = z.v[i - 1];
    return r;
  }
};

struct Zone {
  std::vector<int> pattern;  // entries in {0,1,2}

  Zone() = default;
  explicit Zone(std::vector<int> p) : pattern(std::move(p)) {
    for (int x : pattern) assert(x >= 0 && x <= 2);
  }
  bool operator==(const Zone& o) const { return pattern == o.pattern; }
  bool operator<(const Zone& o) const { return pattern < o.pattern; }
  std::string str() const { return vec_to_string(pattern); }
  // Representative with each clamped entry taken literally.
  Weight clamp_representative() const {
    std::vector<long long> c(pattern.begin(), pattern.end());
    return Weight((int)pattern.size(), std::move(c));
  }
};

inline std::vector<Zone> all_zones(int n) {
  std::vector<Zone> out;
  std::vector<int> p(n, 0);
  for (long long code = 0; code < ipow(3, n); ++code) {
    long long c = code;
    for (int i = n - 1; i >= 0; --i) {
      p[i] = (int)(c % 3);
      c /= 3;
    }
    out.emplace_back(Zone(p));
  }
  return out;
}

// --- basis plumbing ------------------------------------------------------

inline std::vector<std::vector<long long>> cartan_matrix(int n) {
  assert(n >= 1);
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i > 0) a[i][i - 1] = -1;
    if (i + 1 < n) a[i][i + 1] = -1;
  }
  return a;
}

// Canonical lift into Z^{n+1} with last coordinate 0.
inline ZVector zvector_lift(const Weight& w) {
  std::vector<long long> z(w.rank + 1, 0);
  for (int i = w.rank - 1; i >= 0; --i) z[i] = z[i + 1] + w.coords[i];
  return ZVector(std::move(z));
}

inline Weight g_map(int rank, const ZVector& z) {
  assert(z.size() == rank + 1);
  std::vector<long long> c(rank);
  for (int i = 0; i < rank; ++i) c[i] = z.v[i] - z.v[i + 1];
  return Weight(rank, std::move(c));
}

inline RootVector fw_to_root(const Weight& w) {
  ZVector z = zvector_lift(w);
  long long s = z.sum();
  std::vector<Rational> r(w.rank);
  long long prefix = 0;
  for (int m = 1; m <= w.rank; ++m) {
    prefix += z.v[m - 1];
    r[m - 1] = Rational(prefix) - Rational(s * m, w.rank + 1);
  }
  return RootVector(w.rank, std::move(r));
}

// Inverse change of basis; the result must land in the weight lattice.
inline std::optional<Weight> root_to_fw(const RootVector& r) {
  std::vector<long long> c(r.rank);
  for (int i = 0; i < r.rank; ++i) {
    Rational x = 2 * r.coords[i];
    if (i > 0) x -= r.coords[i - 1];
    if (i + 1 < r.rank) x -= r.coords[i + 1];
    if (denominator(x) != 1) return std::nullopt;
    Integer num = numerator(x);
    c[i] = (long long)num;
  }
  return Weight(r.rank, std::move(c));
}

// Partial-sum order on Z^{n+1} (defined only between sum-matched vectors).
inline bool zvector_preceq(const ZVector& a, const ZVector& b) {
  assert(a.size() == b.size());
  if (a.sum() != b.sum()) return false;
  long long pa = 0, pb = 0;
  for (int i = 0; i + 1 < a.size(); ++i) {
    pa += a.v[i];
    pb += b.v[i];
    if (pa > pb) return false;
  }
  return true;
}

// mu <= lambda iff lambda - mu has nonnegative (rational) coordinates in the
// simple-root basis. Scaled by n+1 this is pure integer arithmetic.
inline bool dominance_leq(const Weight& mu, const Weight& lambda) {
  assert(mu.rank == lambda.rank);
  const int n = mu.rank;
  ZVector zm = zvector_lift(mu), zl = zvector_lift(lambda);
  long long sdiff = zl.sum() - zm.sum();
  long long prefix = 0;
  for (int m = 1; m <= n; ++m) {
    prefix += zl.v[m - 1] - zm.v[m - 1];
    if ((n + 1) * prefix - m * sdiff < 0) return false;
  }
  return true;
}

inline Weight weyl_act(const FinitePermutation& w, const Weight& v) {
  return g_map(v.rank, w.act(zvector_lift(v)));
}

inline std::pair<Weight, FinitePermutation> dominant_rep(const Weight& w) {
  ZVector z = zvector_lift(w);
  const int m = z.size();
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return z.v[a] > z.v[b]; });
  std::vector<int> img(m);
  ZVector sorted{std::vector<long long>(m)};
  for (int k = 0; k < m; ++k) {
    img[idx[k]] = k + 1;  // w(idx_k + 1) = k + 1
    sorted.v[k] = z.v[idx[k]];
  }
  return {g_map(w.rank, sorted), FinitePermutation(std::move(img))};
}

inline int coset_index(const Weight& w) {
  long long s = 0;
  for (int i = 1; i <= w.rank; ++i) s += (long long)i * w.coords[i - 1];
  return (int)mod_nonneg(s, w.rank + 1);
}

// --- covers, zones, ideals ----------------------------------------------

// alpha_{lo..hi} = alpha_lo + ... + alpha_hi (1-based, lo <= hi)
struct RootInterval {
  int lo = 0, hi = 0;

  RootInterval() = default;
  RootInterval(int l, int h) : lo(l), hi(h) { assert(1 <= lo && lo <= hi); }
  bool operator==(const RootInterval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator<(const RootInterval& o) const { return std::tie(lo, hi) < std::tie(o.lo, o.hi); }
  Weight to_weight(int n) const {
    assert(hi <= n);
    std::vector<long long> c(n, 0);
    c[lo - 1] += 1;
    c[hi - 1] += 1;
    if (lo >= 2) c[lo - 2] -= 1;
    if (hi < n) c[hi] -= 1;
    return Weight(n, std::move(c));
  }
  // integer simple-root coordinates: 1 on [lo,hi]
  std::vector<long long> root_coords(int n) const {
    std::vector<long long> r(n, 0);
    for (int k = lo; k <= hi; ++k) r[k - 1] = 1;
    return r;
  }
  std::string str() const {
    std::ostringstream os;
    if (lo == hi)
      os << "alpha_" << lo;
    else
      os << "alpha_{" << lo << "," << hi << "}";
    return os.str();
  }
};

inline std::vector<RootInterval> all_positive_roots(int n) {
  std::vector<RootInterval> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

// The positive roots alpha with lambda - alpha a dominant cover of lambda:
// simple alpha_i with <lambda,alpha_i> >= 2, and alpha_{i,j} with the two
// endpoint pairings 1 and all interior pairings 0.
inline std::vector<RootInterval> phi_plus(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("phi_plus: non-dominant weight");
  const int n = lambda.rank;
  std::vector<RootInterval> out;
  for (int i = 1; i <= n; ++i)
    if (lambda.pairing_simple(i) >= 2) out.emplace_back(i, i);
  for (int i = 1; i <= n; ++i) {
    if (lambda.pairing_simple(i) != 1) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (lambda.pairing_simple(j) == 0) continue;
      if (lambda.pairing_simple(j) == 1) out.emplace_back(i, j);
      break;  // first nonzero pairing past i ends the candidate interval
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Zone zone_of(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("zone_of: non-dominant weight");
  std::vector<int> p(lambda.rank);
  for (int j = 1; j <= lambda.rank; ++j)
    p[j - 1] = (int)std::min<long long>(lambda.pairing_simple(j), 2);
  return Zone(std::move(p));
}

inline bool same_coset(const Weight& a, const Weight& b) {
  assert(a.rank == b.rank);
  ZVector za = zvector_lift(a), zb = zvector_lift(b);
  return mod_nonneg(za.sum() - zb.sum(), a.rank + 1) == 0;
}

namespace detail {
inline RootVector minmax_root(const Weight& a, const Weight& b, bool take_min) {
  if (!same_coset(a, b)) throw std::invalid_argument("meet/join: coset mismatch");
  RootVector ra = fw_to_root(a), rb = fw_to_root(b);
  std::vector<Rational> r(a.rank);
  for (int i = 0; i < a.rank; ++i)
    r[i] = take_min ? std::min(ra.coords[i], rb.coords[i]) : std::max(ra.coords[i], rb.coords[i]);
  return RootVector(a.rank, std::move(r));
}
}  // namespace detail

inline Weight meet(const Weight& a, const Weight& b) {
  auto w = root_to_fw(detail::minmax_root(a, b, true));
  assert(w && "meet left the weight lattice");
  return *w;
}

inline Weight join(const Weight& a, const Weight& b) {
  auto w = root_to_fw(detail::minmax_root(a, b, false));
  assert(w && "join left the weight lattice");
  return *w;
}

// Downward closure of {lambda} under dominant covers, i.e. all dominant mu
// with mu <= lambda in the same root-lattice coset.
inline std::vector<Weight> ideal(const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("ideal: non-dominant weight");
  std::set<std::vector<long long>> seen;
  std::vector<Weight> stack{lambda};
  seen.insert(lambda.coords);
  while (!stack.empty()) {
    Weight mu = stack.back();
    stack.pop_back();
    for (const RootInterval& a : phi_plus(mu)) {
      Weight nu = mu - a.to_weight(mu.rank);
      assert(nu.is_dominant());
      if (seen.insert(nu.coords).second) stack.push_back(nu);
    }
  }
  std::vector<Weight> out;
  out.reserve(seen.size());
  for (const auto& c : seen) out.emplace_back(lambda.rank, c);
  return out;
}

}  // namespace alcove
