#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_set>
#include <vector>

#include "alcove/weights.hpp"

// The affine symmetric group in window notation.
//
// An element is the bijection pi of Z with pi(t + n+1) = pi(t) + n+1,
// recorded by its window [pi(1),...,pi(n+1)]. Windows whose entry sum is
// (n+1)(n+2)/2 form the affine Weyl group; dropping the sum condition gives
// windows for the extended group (two windows differing by n+1 in every
// entry induce the same isometry, so extended elements are kept with the
// sum defect normalized into [0,n]).
//
// Geometry: a window with semidirect decomposition (w, mu) acts on a weight
// v by v |-> w(v - g(mu)), where g is the coordinate-difference map from
// Z^{n+1}. Under this action the generator windows act by the reflections
// in the walls of the fundamental alcove
//     A_id = { x : -1 < <x,alpha> < 0 for all positive alpha },
// whose vertex set is {0, -omega_1, ..., -omega_n}, and translation windows
// act by lattice translations. Lengths, descents and the Bruhat order are
// intrinsic to the windows and are cross-validated against this geometry in
// the test suite.

namespace alcove {

struct SemidirectElement {
  FinitePermutation w;
  ZVector mu;  // length n+1
};

namespace detail {

inline void check_window(int rank, const std::vector<long long>& win) {
  const int m = rank + 1;
  if ((int)win.size() != m) throw std::invalid_argument("window: wrong size");
  std::vector<bool> seen(m, false);
  for (long long a : win) {
    long long r = mod_nonneg(a, m);
    if (seen[r]) throw std::invalid_argument("window: repeated residue");
    seen[r] = true;
  }
}

inline long long window_defect(int rank, const std::vector<long long>& win) {
  const long long m = rank + 1;
  long long s = std::accumulate(win.begin(), win.end(), 0LL) - m * (m + 1) / 2;
  assert(s % m == 0);
  return s / m;
}

inline SemidirectElement window_decompose(int rank, const std::vector<long long>& win) {
  const int m = rank + 1;
  std::vector<int> w(m);
  std::vector<long long> mu(m);
  for (int r = 1; r <= m; ++r) {
    int res = (int)mod_nonneg(win[r - 1] - 1, m) + 1;  // in 1..m
    w[r - 1] = res;
    mu[r - 1] = (win[r - 1] - res) / m;
  }
  return {FinitePermutation(std::move(w)), ZVector(std::move(mu))};
}

inline std::vector<long long> window_compose(int rank, const std::vector<long long>& a,
                                             const std::vector<long long>& b) {
  const int m = rank + 1;
  std::vector<long long> out(m);
  for (int t = 1; t <= m; ++t) {
    long long v = b[t - 1];
    long long q = floor_div(v - 1, m);
    int r = (int)(v - q * m);  // in 1..m
    out[t - 1] = a[r - 1] + q * m;
  }
  return out;
}

inline std::vector<long long> window_inverse(int rank, const std::vector<long long>& a) {
  const int m = rank + 1;
  std::vector<long long> out(m);
  for (int r = 1; r <= m; ++r) {
    long long t = a[r - 1];
    long long q = floor_div(t - 1, m);
    int res = (int)(t - q * m);
    out[res - 1] = r - q * m;
  }
  return out;
}

inline Weight window_act(int rank, const std::vector<long long>& win, const Weight& v) {
  assert(v.rank == rank);
  SemidirectElement s = window_decompose(rank, win);
  ZVector t = zvector_lift(v);
  for (int i = 0; i <= rank; ++i) t.v[i] -= s.mu.v[i];
  return g_map(rank, s.w.act(t));
}

}  // namespace detail

struct AffinePermutation {
  int rank = 0;
  std::vector<long long> window;

  AffinePermutation() = default;
  AffinePermutation(int n, std::vector<long long> win) : rank(n), window(std::move(win)) {
    detail::check_window(rank, window);
    if (detail::window_defect(rank, window) != 0)
      throw std::invalid_argument("AffinePermutation: window sum violates P2");
  }
  static AffinePermutation identity(int n) {
    std::vector<long long> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = i + 1;
    return AffinePermutation(n, std::move(w));
  }
  bool operator==(const AffinePermutation& o) const {
    return rank == o.rank && window == o.window;
  }
  bool operator!=(const AffinePermutation& o) const { return !(*this == o); }
  bool operator<(const AffinePermutation& o) const { return window < o.window; }
  std::string str() const { return vec_to_string(window, '[', ']'); }
};

struct ExtendedAffinePermutation {
  int rank = 0;
  std::vector<long long> window;  // defect normalized into [0, rank]

  ExtendedAffinePermutation() = default;
  ExtendedAffinePermutation(int n, std::vector<long long> win) : rank(n), window(std::move(win)) {
    detail::check_window(rank, window);
    normalize();
  }
  static ExtendedAffinePermutation identity(int n) {
    return ExtendedAffinePermutation(AffinePermutation::identity(n));
  }
  explicit ExtendedAffinePermutation(const AffinePermutation& x)
      : rank(x.rank), window(x.window) {}

  long long defect() const { return detail::window_defect(rank, window); }
  bool operator==(const ExtendedAffinePermutation& o) const {
    return rank == o.rank && window == o.window;
  }
  std::string str() const { return vec_to_string(window, '[', ']'); }

 private:
  void normalize() {
    long long d = defect();
    long long k = floor_div(d, rank + 1);
    if (k != 0)
      for (auto& a : window) a -= k * (rank + 1);
  }
};

// --- generators and group arithmetic --------------------------------------

inline AffinePermutation simple_reflection(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("simple_reflection: index out of range");
  std::vector<long long> w(n + 1);
  for (int t = 0; t <= n; ++t) w[t] = t + 1;
  if (i >= 1) {
    std::swap(w[i - 1], w[i]);
  } else {
    w[0] = 0;
    w[n] = n + 2;
  }
  return AffinePermutation(n, std::move(w));
}

inline AffinePermutation compose(const AffinePermutation& x, const AffinePermutation& y) {
  if (x.rank != y.rank) throw std::invalid_argument("compose: rank mismatch");
  return AffinePermutation(x.rank, detail::window_compose(x.rank, x.window, y.window));
}

inline AffinePermutation inverse(const AffinePermutation& x) {
  return AffinePermutation(x.rank, detail::window_inverse(x.rank, x.window));
}

inline ExtendedAffinePermutation compose(const ExtendedAffinePermutation& x,
                                         const ExtendedAffinePermutation& y) {
  if (x.rank != y.rank) throw std::invalid_argument("compose: rank mismatch");
  return ExtendedAffinePermutation(x.rank, detail::window_compose(x.rank, x.window, y.window));
}

inline ExtendedAffinePermutation inverse(const ExtendedAffinePermutation& x) {
  return ExtendedAffinePermutation(x.rank, detail::window_inverse(x.rank, x.window));
}

// The affine Weyl group sits inside the extended group as the defect-0
// windows (the normalized defect is the coset of the translation part in
// the weight lattice modulo the root lattice).
inline AffinePermutation to_affine(const ExtendedAffinePermutation& x) {
  if (x.defect() != 0)
    throw std::invalid_argument("to_affine: element lies outside the affine Weyl group");
  return AffinePermutation(x.rank, x.window);
}

inline SemidirectElement to_semidirect(const AffinePermutation& x) {
  SemidirectElement s = detail::window_decompose(x.rank, x.window);
  assert(s.mu.sum() == 0);
  return s;
}

inline AffinePermutation from_semidirect(int rank, const SemidirectElement& s) {
  const int m = rank + 1;
  std::vector<long long> win(m);
  for (int r = 1; r <= m; ++r) win[r - 1] = s.mu.v[r - 1] * m + s.w(r);
  return AffinePermutation(rank, std::move(win));
}

inline AffinePermutation finite_to_affine(int rank, const FinitePermutation& w) {
  std::vector<long long> win(rank + 1);
  for (int r = 1; r <= rank + 1; ++r) win[r - 1] = w(r);
  return AffinePermutation(rank, std::move(win));
}

inline AffinePermutation longest_finite(int n) {
  return finite_to_affine(n, FinitePermutation::longest(n + 1));
}

// --- geometric action ------------------------------------------------------

inline Weight act_on_weight(const AffinePermutation& x, const Weight& v) {
  return detail::window_act(x.rank, x.window, v);
}

inline Weight act_on_weight(const ExtendedAffinePermutation& x, const Weight& v) {
  return detail::window_act(x.rank, x.window, v);
}

// Vertices of the alcove of x, indexed by i = 0..n: vertex i is
// x(-omega_i). Vertex i of any two group elements is coset-matched.
template <typename Perm>
std::vector<Weight> alcove_vertices(const Perm& x) {
  std::vector<Weight> out;
  out.reserve(x.rank + 1);
  for (int i = 0; i <= x.rank; ++i)
    out.push_back(detail::window_act(x.rank, x.window, -Weight::fundamental(x.rank, i)));
  return out;
}

inline bool is_dominant(const AffinePermutation& x) {
  for (int i = 0; i <= x.rank; ++i) {
    Weight v = detail::window_act(x.rank, x.window, -Weight::fundamental(x.rank, i));
    if (!v.is_dominant()) return false;
  }
  return true;
}

// --- length and descents ---------------------------------------------------

inline long long length(const AffinePermutation& x) {
  const int m = x.rank + 1;
  long long l = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      long long q = floor_div(x.window[j] - x.window[i], m);
      l += q < 0 ? -q : q;
    }
  return l;
}

inline bool right_descent(const AffinePermutation& x, int i) {
  const int m = x.rank + 1;
  if (i < 0 || i > x.rank) throw std::invalid_argument("right_descent: index out of range");
  if (i >= 1) return x.window[i - 1] > x.window[i];
  return x.window[m - 1] - m > x.window[0];
}

inline bool left_descent(const AffinePermutation& x, int i) {
  return right_descent(inverse(x), i);
}

// Lexicographically smallest reduced word (greedy smallest left descent).
inline std::vector<int> reduced_word(AffinePermutation x) {
  std::vector<int> word;
  long long l = length(x);
  while (l > 0) {
    AffinePermutation xinv = inverse(x);
    int i = 0;
    while (!right_descent(xinv, i)) {
      ++i;
      assert(i <= x.rank);
    }
    word.push_back(i);
    x = compose(simple_reflection(x.rank, i), x);
    --l;
    assert(length(x) == l);
  }
  return word;
}

inline AffinePermutation from_word(int n, const std::vector<int>& word) {
  AffinePermutation x = AffinePermutation::identity(n);
  for (int i : word) x = compose(x, simple_reflection(n, i));
  return x;
}

// --- translations, Omega, theta --------------------------------------------

inline ExtendedAffinePermutation extended_translation(const Weight& lambda) {
  const int m = lambda.rank + 1;
  ZVector mu = zvector_lift(-lambda);
  std::vector<long long> win(m);
  for (int r = 1; r <= m; ++r) win[r - 1] = mu.v[r - 1] * m + r;
  return ExtendedAffinePermutation(lambda.rank, std::move(win));
}

inline AffinePermutation translation(const Weight& lambda) {
  if (coset_index(lambda) != 0)
    throw std::invalid_argument("translation: weight outside the root lattice");
  return to_affine(extended_translation(lambda));
}

namespace detail {

inline std::vector<Weight> fundamental_alcove_vertices(int n) {
  std::vector<Weight> v;
  for (int i = 0; i <= n; ++i) v.push_back(-Weight::fundamental(n, i));
  return v;
}

}  // namespace detail

// The stabilizer of the fundamental alcove in the extended group, found by
// bounded window search and returned sorted by defect (one element per
// coset of the root lattice in the weight lattice).
inline const std::vector<ExtendedAffinePermutation>& omega_elements(int n) {
  static std::mutex mtx;
  static std::map<int, std::vector<ExtendedAffinePermutation>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  const int m = n + 1;
  // The vertices of A_id are pairwise distinct, so a window fixes the alcove
  // iff it maps every vertex into the vertex set. Candidates are residue
  // permutations with per-entry shifts in {0, n+1}; the size check below
  // hard-fails if that range ever misses a stabilizer element.
  std::set<std::vector<long long>> target;
  for (const Weight& v : detail::fundamental_alcove_vertices(n)) target.insert(v.coords);
  std::set<std::vector<long long>> found;
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i + 1;
  do {
    for (long long bits = 0; bits < (1LL << m); ++bits) {
      std::vector<long long> win(m);
      for (int t = 0; t < m; ++t) win[t] = perm[t] + ((bits >> t & 1) ? m : 0);
      bool fixes = true;
      for (int i = 0; i <= n && fixes; ++i) {
        Weight v = detail::window_act(n, win, -Weight::fundamental(n, i));
        if (target.count(v.coords) == 0) fixes = false;
      }
      if (fixes) found.insert(ExtendedAffinePermutation(n, win).window);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<ExtendedAffinePermutation> omega;
  for (const auto& w : found) omega.emplace_back(n, w);
  std::sort(omega.begin(), omega.end(), [](const auto& a, const auto& b) {
    return a.defect() < b.defect();
  });
  if ((int)omega.size() != m) throw std::logic_error("omega_elements: expected n+1 elements");
  return cache.emplace(n, std::move(omega)).first->second;
}

// The unique stabilizer element sigma with -sigma(0) = lambda modulo the
// root lattice. In this realization it is exactly the factor that closes
// t_lambda w0 a back into the affine Weyl group.
inline ExtendedAffinePermutation sigma_of(const Weight& lambda) {
  const int n = lambda.rank;
  int want = coset_index(lambda);
  for (const auto& s : omega_elements(n)) {
    Weight v = -act_on_weight(s, Weight::zero(n));
    if (coset_index(v) == want) return s;
  }
  throw std::logic_error("sigma_of: no stabilizer element matches the coset");
}

// --- the set F and theta ----------------------------------------------------

namespace detail {

inline bool alcove_in_negative_box(const AffinePermutation& x) {
  // every vertex v must satisfy -1 <= <v, alpha_j> <= 0 for simple alpha_j
  for (int i = 0; i <= x.rank; ++i) {
    Weight v = window_act(x.rank, x.window, -Weight::fundamental(x.rank, i));
    for (long long c : v.coords)
      if (c < -1 || c > 0) return false;
  }
  return true;
}

}  // namespace detail

// All elements whose alcove lies in the negative fundamental parallelepiped,
// ordered by (length, lex-smallest reduced word). There are n! of them.
inline const std::vector<AffinePermutation>& enumerate_F(int n) {
  static std::mutex mtx;
  static std::map<int, std::vector<AffinePermutation>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::set<std::vector<long long>> seen;
  std::vector<AffinePermutation> queue{AffinePermutation::identity(n)};
  seen.insert(queue[0].window);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    AffinePermutation x = queue[head];
    for (int i = 0; i <= n; ++i) {
      AffinePermutation y = compose(x, simple_reflection(n, i));
      if (seen.count(y.window)) continue;
      if (!detail::alcove_in_negative_box(y)) continue;
      seen.insert(y.window);
      queue.push_back(y);
    }
  }
  std::vector<std::pair<std::pair<long long, std::vector<int>>, AffinePermutation>> keyed;
  for (const auto& x : queue) keyed.push_back({{length(x), reduced_word(x)}, x});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AffinePermutation> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  if ((long long)out.size() != factorial(n))
    throw std::logic_error("enumerate_F: expected n! elements");
  return cache.emplace(n, std::move(out)).first->second;
}

inline bool is_in_F(const AffinePermutation& a) {
  for (const auto& x : enumerate_F(a.rank))
    if (x == a) return true;
  return false;
}

// theta_a(lambda): the element whose alcove is the alcove of w0*a translated
// by lambda.
inline AffinePermutation theta(const AffinePermutation& a, const Weight& lambda) {
  if (a.rank != lambda.rank) throw std::invalid_argument("theta: rank mismatch");
  if (!is_in_F(a)) throw std::invalid_argument("theta: element not in F");
  if (!lambda.is_dominant()) throw std::invalid_argument("theta: non-dominant weight");
  ExtendedAffinePermutation t = extended_translation(lambda);
  ExtendedAffinePermutation core(compose(longest_finite(a.rank), a));
  return to_affine(compose(compose(t, core), sigma_of(lambda)));
}

// a^{-1} theta_b(lambda): the lowest-cell parametrization restricted to the
// trivial stabilizer component. Dominant exactly when a = id.
inline AffinePermutation theta_cell(const AffinePermutation& a, const AffinePermutation& b,
                                    const Weight& lambda) {
  if (!is_in_F(a)) throw std::invalid_argument("theta_cell: left element not in F");
  return compose(inverse(a), theta(b, lambda));
}

// --- length balls ------------------------------------------------------------

struct BallData {
  int rank = 0;
  int max_length = -1;
  std::vector<std::vector<long long>> windows;  // sorted by (length, window)
  std::vector<int> lengths;                     // parallel to windows
  std::vector<std::size_t> layer_offset;        // layer_offset[l] = first index of length l

  std::size_t count_up_to(int l) const {
    if (l >= max_length) return windows.size();
    if (l < 0) return 0;
    return layer_offset[l + 1];
  }
};

inline std::shared_ptr<const BallData> ball(int n, int L) {
  static std::mutex mtx;
  static std::map<int, std::shared_ptr<const BallData>> cache;
  if (L < 0) throw std::invalid_argument("ball: negative length bound");
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[n];
  if (slot && slot->max_length >= L) return slot;

  auto data = std::make_shared<BallData>();
  data->rank = n;
  data->max_length = L;
  std::unordered_set<std::vector<long long>, VectorHash> seen;
  std::vector<std::vector<long long>> layer{AffinePermutation::identity(n).window};
  seen.insert(layer[0]);
  for (int l = 0; l <= L; ++l) {
    std::sort(layer.begin(), layer.end());
    data->layer_offset.push_back(data->windows.size());
    for (const auto& w : layer) {
      data->windows.push_back(w);
      data->lengths.push_back(l);
    }
    if (l == L) break;
    std::vector<std::vector<long long>> next;
    for (const auto& wv : layer) {
      AffinePermutation x(n, wv);
      for (int i = 0; i <= n; ++i) {
        if (right_descent(x, i)) continue;  // ascent: length goes up by one
        AffinePermutation y = compose(x, simple_reflection(n, i));
        if (seen.insert(y.window).second) next.push_back(y.window);
      }
    }
    layer = std::move(next);
  }
  data->layer_offset.push_back(data->windows.size());
  slot = std::move(data);
  return slot;
}

inline std::vector<AffinePermutation> ball_elements(int n, int L) {
  auto data = ball(n, L);
  std::vector<AffinePermutation> out;
  std::size_t cnt = data->count_up_to(L);
  out.reserve(cnt);
  for (std::size_t i = 0; i < cnt; ++i) out.emplace_back(n, data->windows[i]);
  return out;
}

}  // namespace alcove
