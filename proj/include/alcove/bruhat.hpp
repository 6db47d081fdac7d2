#pragma once

#include <memory>
#include <mutex>
#include <unordered_set>

#include "alcove/affine.hpp"

// Bruhat order on the affine symmetric group.
//
// The general comparison reduces x <= y to (n+1)^2 partial-sum comparisons
// of sorted integer vectors built from the semidirect decompositions: for
// every i in 1..n+1 and j in 0..n,
//     sort_desc(mu_x + chi[m<=i] - chi[w_x(m)<=j])
// must be dominated prefix-wise by the corresponding vector for y. For two
// dominant elements the comparison collapses to the dominance order on the
// n+1 alcove vertices. A memoized subword-closure oracle over one reduced
// word serves as the independent ground truth at small lengths.

namespace alcove::bruhat {

struct SemidirectView {
  int rank;
  std::vector<int> w;        // images
  std::vector<long long> mu;

  explicit SemidirectView(const AffinePermutation& x) : rank(x.rank) {
    SemidirectElement s = to_semidirect(x);
    w = s.w.img;
    mu = s.mu.v;
  }
};

namespace detail {

// sort descending, then compare prefix sums (totals are equal by
// construction, so only the n first prefixes matter)
inline bool sorted_preceq(std::vector<long long>& a, std::vector<long long>& b) {
  std::sort(a.begin(), a.end(), std::greater<long long>());
  std::sort(b.begin(), b.end(), std::greater<long long>());
  long long pa = 0, pb = 0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) {
    pa += a[k];
    pb += b[k];
    if (pa > pb) return false;
  }
  return true;
}

}  // namespace detail

inline bool leq(const SemidirectView& x, const SemidirectView& y) {
  const int m = x.rank + 1;
  std::vector<long long> va(m), vb(m);
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j <= x.rank; ++j) {
      for (int t = 1; t <= m; ++t) {
        va[t - 1] = x.mu[t - 1] + (t <= i ? 1 : 0) - (x.w[t - 1] <= j ? 1 : 0);
        vb[t - 1] = y.mu[t - 1] + (t <= i ? 1 : 0) - (y.w[t - 1] <= j ? 1 : 0);
      }
      if (!detail::sorted_preceq(va, vb)) return false;
    }
  }
  return true;
}

inline bool leq(const AffinePermutation& x, const AffinePermutation& y) {
  if (x.rank != y.rank) throw std::invalid_argument("bruhat::leq: rank mismatch");
  return leq(SemidirectView(x), SemidirectView(y));
}

// --- dominant specialization -------------------------------------------------

// Per-vertex prefix sums of the Z^{n+1} lifts; enough to run dominance
// comparisons without re-deriving coordinates.
struct VertexPrefixes {
  int rank;
  std::vector<long long> p;  // (rank+1) vertices x (rank+1) prefix sums

  explicit VertexPrefixes(const AffinePermutation& x) : rank(x.rank) {
    const int m = rank + 1;
    p.resize((std::size_t)m * m);
    std::vector<Weight> vs = alcove_vertices(x);
    for (int i = 0; i <= rank; ++i) {
      ZVector z = zvector_lift(vs[i]);
      long long acc = 0;
      for (int k = 0; k < m; ++k) {
        acc += z.v[k];
        p[(std::size_t)i * m + k] = acc;
      }
    }
  }
};

inline bool leq_dominant(const VertexPrefixes& x, const VertexPrefixes& y) {
  const int m = x.rank + 1;
  for (int i = 0; i < m; ++i) {
    const long long* px = &x.p[(std::size_t)i * m];
    const long long* py = &y.p[(std::size_t)i * m];
    long long sdiff = py[m - 1] - px[m - 1];
    for (int k = 1; k <= x.rank; ++k)
      if ((long long)m * (py[k - 1] - px[k - 1]) - (long long)k * sdiff < 0) return false;
  }
  return true;
}

inline bool leq_dominant(const AffinePermutation& x, const AffinePermutation& y) {
  if (x.rank != y.rank) throw std::invalid_argument("bruhat::leq_dominant: rank mismatch");
  if (!is_dominant(x) || !is_dominant(y))
    throw std::invalid_argument("bruhat::leq_dominant: non-dominant argument");
  return leq_dominant(VertexPrefixes(x), VertexPrefixes(y));
}

// --- subword oracle ------------------------------------------------------------

inline constexpr long long kOracleLengthBound = 12;

// All subword products of one fixed reduced word of y, i.e. the lower
// interval of y. Cached per window.
inline std::shared_ptr<const std::unordered_set<std::vector<long long>, VectorHash>>
subword_closure(const AffinePermutation& y, long long length_bound = kOracleLengthBound) {
  if (length(y) > length_bound)
    throw std::invalid_argument("subword_closure: length bound exceeded");
  static std::mutex mtx;
  static std::map<std::vector<long long>,
                  std::shared_ptr<const std::unordered_set<std::vector<long long>, VectorHash>>>
      cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(y.window);
  if (it != cache.end()) return it->second;

  std::vector<int> word = reduced_word(y);
  auto set = std::make_shared<std::unordered_set<std::vector<long long>, VectorHash>>();
  set->insert(AffinePermutation::identity(y.rank).window);
  for (int letter : word) {
    std::vector<std::vector<long long>> fresh;
    for (const auto& wv : *set) {
      AffinePermutation z = compose(AffinePermutation(y.rank, wv),
                                    simple_reflection(y.rank, letter));
      if (!set->count(z.window)) fresh.push_back(z.window);
    }
    for (auto& w : fresh) set->insert(std::move(w));
  }
  cache.emplace(y.window, set);
  return set;
}

inline bool leq_oracle(const AffinePermutation& x, const AffinePermutation& y,
                       long long length_bound = kOracleLengthBound) {
  if (x.rank != y.rank) throw std::invalid_argument("bruhat::leq_oracle: rank mismatch");
  return subword_closure(y, length_bound)->count(x.window) > 0;
}

// --- lower intervals -------------------------------------------------------------

inline std::vector<AffinePermutation> lower_interval(const AffinePermutation& y) {
  const int n = y.rank;
  const long long ly = length(y);
  auto data = ball(n, (int)ly);
  SemidirectView vy(y);
  std::vector<AffinePermutation> out;
  std::size_t cnt = data->count_up_to((int)ly);
  for (std::size_t i = 0; i < cnt; ++i) {
    AffinePermutation x(n, data->windows[i]);
    if (leq(SemidirectView(x), vy)) out.push_back(std::move(x));
  }
  return out;
}

// Cache of the dominant part of length balls with vertex prefix data.
struct DominantBall {
  int rank = 0;
  int max_length = -1;
  std::vector<std::vector<long long>> windows;   // sorted by (length, window)
  std::vector<int> lengths;
  std::vector<VertexPrefixes> prefixes;
};

inline std::shared_ptr<const DominantBall> dominant_ball(int n, int L) {
  static std::mutex mtx;
  static std::map<int, std::shared_ptr<const DominantBall>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = cache[n];
  if (slot && slot->max_length >= L) return slot;
  auto base = ball(n, L);
  auto data = std::make_shared<DominantBall>();
  data->rank = n;
  data->max_length = L;
  for (std::size_t i = 0; i < base->windows.size(); ++i) {
    AffinePermutation x(n, base->windows[i]);
    if (!is_dominant(x)) continue;
    data->windows.push_back(base->windows[i]);
    data->lengths.push_back(base->lengths[i]);
    data->prefixes.emplace_back(x);
  }
  slot = std::move(data);
  return slot;
}

inline std::vector<AffinePermutation> lower_interval_dominant(const AffinePermutation& y) {
  if (!is_dominant(y))
    throw std::invalid_argument("lower_interval_dominant: non-dominant element");
  const int n = y.rank;
  const long long ly = length(y);
  auto data = dominant_ball(n, (int)ly);
  VertexPrefixes py(y);
  std::vector<AffinePermutation> out;
  for (std::size_t i = 0; i < data->windows.size(); ++i) {
    if (data->lengths[i] > ly) break;
    if (leq_dominant(data->prefixes[i], py)) out.emplace_back(n, data->windows[i]);
  }
  return out;
}

inline long long lower_interval_dominant_size(const AffinePermutation& y) {
  if (!is_dominant(y))
    throw std::invalid_argument("lower_interval_dominant_size: non-dominant element");
  const int n = y.rank;
  const long long ly = length(y);
  auto data = dominant_ball(n, (int)ly);
  VertexPrefixes py(y);
  long long cnt = 0;
  for (std::size_t i = 0; i < data->windows.size(); ++i) {
    if (data->lengths[i] > ly) break;
    if (leq_dominant(data->prefixes[i], py)) ++cnt;
  }
  return cnt;
}

}  // namespace alcove::bruhat
