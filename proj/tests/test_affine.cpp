#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "alcove/affine.hpp"

using namespace alcove;

namespace {

Weight W(std::vector<long long> c) {
  int n = (int)c.size();
  return Weight(n, std::move(c));
}

AffinePermutation random_element(std::mt19937& rng, int n, int steps) {
  std::uniform_int_distribution<int> gen(0, n);
  AffinePermutation x = AffinePermutation::identity(n);
  for (int s = 0; s < steps; ++s) x = compose(x, simple_reflection(n, gen(rng)));
  return x;
}

// number of hyperplanes separating the alcove of x from the fundamental
// alcove, computed from vertex pairings root by root
long long separating_hyperplanes(const AffinePermutation& x) {
  auto vs = alcove_vertices(x);
  long long total = 0;
  for (const RootInterval& a : all_positive_roots(x.rank)) {
    long long m = std::numeric_limits<long long>::max();
    for (const Weight& v : vs) {
      long long p = 0;
      for (int k = a.lo; k <= a.hi; ++k) p += v.pairing_simple(k);
      m = std::min(m, p);
    }
    // alcove of x projects to (m, m+1); the fundamental alcove to (-1, 0)
    if (m >= 0)
      total += m + 1;
    else if (m <= -2)
      total += -m - 1;
  }
  return total;
}

long long two_rho_pairing(const Weight& lambda) {
  long long s = 0;
  for (const RootInterval& a : all_positive_roots(lambda.rank))
    for (int k = a.lo; k <= a.hi; ++k) s += lambda.pairing_simple(k);
  return s;
}

}  // namespace

TEST_CASE("simple reflections") {
  CHECK(simple_reflection(2, 0).window == std::vector<long long>{0, 2, 4});
  CHECK(simple_reflection(2, 1).window == std::vector<long long>{2, 1, 3});
  CHECK(simple_reflection(3, 0).window == std::vector<long long>{0, 2, 3, 5});
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      auto s = simple_reflection(n, i);
      CHECK(compose(s, s) == AffinePermutation::identity(n));
      CHECK(length(s) == 1);
    }
  CHECK_THROWS_AS(simple_reflection(2, 3), std::invalid_argument);
}

TEST_CASE("window validity") {
  CHECK_THROWS_AS(AffinePermutation(1, {1, 3}), std::invalid_argument);   // repeated residue
  CHECK_THROWS_AS(AffinePermutation(1, {2, 3}), std::invalid_argument);   // sum violation
  CHECK_NOTHROW(ExtendedAffinePermutation(1, {2, 3}));                    // fine when extended
  CHECK_THROWS_AS(AffinePermutation(2, {1, 2}), std::invalid_argument);   // wrong size
}

TEST_CASE("composition and inverse") {
  CHECK(compose(simple_reflection(2, 0), simple_reflection(2, 1)).window ==
        std::vector<long long>{2, 0, 4});
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    int n = 1 + t % 3;
    AffinePermutation x = random_element(rng, n, 8);
    CHECK(compose(x, AffinePermutation::identity(n)) == x);
    CHECK(compose(AffinePermutation::identity(n), x) == x);
    CHECK(compose(x, inverse(x)) == AffinePermutation::identity(n));
  }
  CHECK_THROWS_AS(compose(simple_reflection(1, 0), simple_reflection(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("semidirect decomposition") {
  const int n = 3;
  auto id = AffinePermutation::identity(n);
  auto sid = to_semidirect(id);
  CHECK(sid.w.is_identity());
  CHECK(sid.mu.v == std::vector<long long>(n + 1, 0));

  auto s0 = to_semidirect(simple_reflection(n, 0));
  CHECK(s0.w.img == std::vector<int>{4, 2, 3, 1});
  CHECK(s0.mu.v == std::vector<long long>{-1, 0, 0, 1});

  std::mt19937 rng(5);
  for (int t = 0; t < 50; ++t) {
    int m = 1 + t % 3;
    AffinePermutation x = random_element(rng, m, 10);
    CHECK(from_semidirect(m, to_semidirect(x)) == x);
  }
}

TEST_CASE("geometric action") {
  std::mt19937 rng(9);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 3;
    Weight v = W([&] {
      std::vector<long long> c(n);
      std::uniform_int_distribution<int> d(-3, 3);
      for (auto& x : c) x = d(rng);
      return c;
    }());
    CHECK(act_on_weight(AffinePermutation::identity(n), v) == v);
  }

  // s0 reflects the origin across the affine wall
  for (int n = 1; n <= 3; ++n) {
    Weight highest = Weight::zero(n);
    highest.coords[0] += 1;
    highest.coords[n - 1] += 1;  // highest root (doubles up for n = 1)
    if (n == 1) highest = W({2});
    CHECK(act_on_weight(simple_reflection(n, 0), Weight::zero(n)) == -highest);
  }

  // translations translate
  std::mt19937 rng2(21);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 3;
    std::uniform_int_distribution<int> d(-2, 2);
    std::vector<Rational> rc(n);
    for (auto& x : rc) x = d(rng2);
    Weight lam = *root_to_fw(RootVector(n, rc));
    Weight v = Weight::fundamental(n, t % (n + 1));
    CHECK(act_on_weight(translation(lam), v) == v + lam);
  }

  // left action law
  std::mt19937 rng3(23);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + t % 3;
    AffinePermutation x = random_element(rng3, n, 6), y = random_element(rng3, n, 6);
    Weight v = Weight::fundamental(n, t % (n + 1));
    CHECK(act_on_weight(compose(x, y), v) == act_on_weight(x, act_on_weight(y, v)));
  }
}

TEST_CASE("alcove vertices") {
  for (int n = 1; n <= 3; ++n) {
    auto vid = alcove_vertices(AffinePermutation::identity(n));
    for (int i = 0; i <= n; ++i) CHECK(vid[i] == -Weight::fundamental(n, i));

    auto vw0 = alcove_vertices(longest_finite(n));
    for (const Weight& v : vw0) CHECK(v.is_dominant());
    std::set<std::vector<long long>> got, expect;
    for (const Weight& v : vw0) got.insert(v.coords);
    for (int i = 0; i <= n; ++i) expect.insert(Weight::fundamental(n, i).coords);
    CHECK(got == expect);
  }

  // translation equivariance for root-lattice translations
  std::mt19937 rng(31);
  for (int t = 0; t < 20; ++t) {
    int n = 1 + t % 3;
    AffinePermutation x = random_element(rng, n, 6);
    Weight lam = *root_to_fw(RootVector(n, std::vector<Rational>(n, Rational(1))));
    auto lhs = alcove_vertices(compose(translation(lam), x));
    auto rhs = alcove_vertices(x);
    for (int i = 0; i <= n; ++i) CHECK(lhs[i] == rhs[i] + lam);
  }
}

TEST_CASE("length") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(length(AffinePermutation::identity(n)) == 0);
    CHECK(length(longest_finite(n)) == (long long)n * (n + 1) / 2);
  }

  // A2: theta_id(1,1) has length l(w0) + 2<lambda,rho> = 3 + 4
  const auto& f2 = enumerate_F(2);
  CHECK(length(theta(f2[0], W({1, 1}))) == 7);

  // window statistic equals the separating-hyperplane count
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : ball_elements(n, 6)) CHECK(length(x) == separating_hyperplanes(x));

  // simple multiplication moves length by exactly one
  for (int n = 1; n <= 3; ++n)
    for (const auto& x : ball_elements(n, 6))
      for (int i = 0; i <= n; ++i) {
        long long d = length(compose(simple_reflection(n, i), x)) - length(x);
        CHECK((d == 1 || d == -1));
      }

  // subadditivity
  std::mt19937 rng(97);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + t % 3;
    AffinePermutation x = random_element(rng, n, 7), y = random_element(rng, n, 7);
    CHECK(length(compose(x, y)) <= length(x) + length(y));
  }
}

TEST_CASE("dominance of elements") {
  CHECK(!is_dominant(AffinePermutation::identity(2)));
  CHECK(is_dominant(longest_finite(2)));
  CHECK(is_dominant(longest_finite(3)));
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : enumerate_F(n))
      for (long long c = 0; c <= 2; ++c)
        CHECK(is_dominant(theta(a, W(std::vector<long long>(n, c)))));
}

TEST_CASE("translations") {
  for (int n = 1; n <= 3; ++n)
    CHECK(translation(Weight::zero(n)) == AffinePermutation::identity(n));

  // rank 1: the simple-root translation window
  Weight alpha1 = *root_to_fw(RootVector(1, {Rational(1)}));
  CHECK(translation(alpha1).window == std::vector<long long>{-1, 4});
  CHECK(act_on_weight(translation(alpha1), Weight::zero(1)) == alpha1);

  std::mt19937 rng(37);
  for (int t = 0; t < 30; ++t) {
    int n = 1 + t % 3;
    std::uniform_int_distribution<int> d(-2, 2);
    std::vector<Rational> ra(n), rb(n);
    for (auto& x : ra) x = d(rng);
    for (auto& x : rb) x = d(rng);
    Weight a = *root_to_fw(RootVector(n, ra)), b = *root_to_fw(RootVector(n, rb));
    CHECK(compose(translation(a), translation(b)) == translation(a + b));
  }
  CHECK_THROWS_AS(translation(Weight::fundamental(2, 1)), std::invalid_argument);
}

TEST_CASE("stabilizer of the fundamental alcove") {
  for (int n = 1; n <= 4; ++n) {
    const auto& omega = omega_elements(n);
    CHECK((int)omega.size() == n + 1);
    for (const auto& s : omega) {
      std::set<std::vector<long long>> img, ref;
      for (int i = 0; i <= n; ++i) {
        img.insert(act_on_weight(s, -Weight::fundamental(n, i)).coords);
        ref.insert((-Weight::fundamental(n, i)).coords);
      }
      CHECK(img == ref);
    }
  }

  for (int n = 1; n <= 3; ++n) {
    // sigma is the identity on the root lattice
    Weight theta_weight = *root_to_fw(RootVector(n, std::vector<Rational>(n, Rational(2))));
    CHECK(sigma_of(theta_weight) == ExtendedAffinePermutation::identity(n));
    // defining property on fundamental weights
    for (int i = 1; i <= n; ++i) {
      auto s = sigma_of(Weight::fundamental(n, i));
      Weight v = -act_on_weight(s, Weight::zero(n));
      CHECK(coset_index(v) == i);
    }
  }
}

TEST_CASE("the set F") {
  const auto& f3 = enumerate_F(3);
  REQUIRE(f3.size() == 6);
  std::vector<std::vector<int>> words;
  for (const auto& a : f3) words.push_back(reduced_word(a));
  CHECK(words == std::vector<std::vector<int>>{
                     {}, {0}, {0, 1}, {0, 3}, {0, 1, 3}, {0, 1, 3, 2}});

  const auto& f2 = enumerate_F(2);
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == AffinePermutation::identity(2));
  CHECK(f2[1] == simple_reflection(2, 0));

  CHECK(enumerate_F(1).size() == 1);
  CHECK(enumerate_F(4).size() == 24);
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_F(n)[0] == AffinePermutation::identity(n));
}

TEST_CASE("theta") {
  for (int n = 1; n <= 3; ++n)
    CHECK(theta(AffinePermutation::identity(n), Weight::zero(n)) == longest_finite(n));

  // length formula and vertex translation over small dominant weights
  for (int n = 2; n <= 3; ++n) {
    for (const auto& a : enumerate_F(n)) {
      AffinePermutation w0a = compose(longest_finite(n), a);
      std::vector<long long> c(n, 0);
      while (true) {
        Weight lam(n, c);
        AffinePermutation th = theta(a, lam);
        CHECK(length(th) == length(a) + (long long)n * (n + 1) / 2 + two_rho_pairing(lam));
        std::multiset<std::vector<long long>> got, expect;
        for (const Weight& v : alcove_vertices(th)) got.insert(v.coords);
        for (const Weight& v : alcove_vertices(w0a)) expect.insert((v + lam).coords);
        CHECK(got == expect);
        int i = n - 1;
        while (i >= 0 && c[i] == 2) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
      }
    }
  }

  // vertex difference property: V(theta_a(lambda - mu)) = V(theta_a(lambda)) - mu
  const auto& f3 = enumerate_F(3);
  Weight lam = W({2, 1, 2});
  for (const auto& a : f3) {
    for (Weight mu : {W({1, 0, 1}), W({0, 1, 0}), W({1, 1, 1})}) {
      REQUIRE((lam - mu).is_dominant());
      std::multiset<std::vector<long long>> got, expect;
      for (const Weight& v : alcove_vertices(theta(a, lam - mu))) got.insert(v.coords);
      for (const Weight& v : alcove_vertices(theta(a, lam))) expect.insert((v - mu).coords);
      CHECK(got == expect);
    }
  }

  CHECK_THROWS_AS(theta(simple_reflection(2, 1), Weight::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(theta(AffinePermutation::identity(2), W({-1, 0})), std::invalid_argument);
}

TEST_CASE("lowest-cell parametrization lengths") {
  // l(a^{-1} theta_b(lambda)) = l(a) + l(b) + l(w0) + 2<lambda,rho>
  for (int n = 2; n <= 3; ++n) {
    const auto& f = enumerate_F(n);
    for (const auto& a : f)
      for (const auto& b : f)
        for (long long c = 0; c <= 2; ++c) {
          Weight lam(n, std::vector<long long>(n, c));
          CHECK(length(theta_cell(a, b, lam)) ==
                length(a) + length(b) + (long long)n * (n + 1) / 2 + two_rho_pairing(lam));
        }
  }
}

TEST_CASE("extended translations compose additively") {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> d(0, 3);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + t % 3;
    std::vector<long long> ca(n), cb(n);
    for (auto& x : ca) x = d(rng);
    for (auto& x : cb) x = d(rng);
    Weight a(n, ca), b(n, cb);
    CHECK(compose(extended_translation(a), extended_translation(b)) ==
          extended_translation(a + b));
  }
}

TEST_CASE("balls") {
  CHECK(ball_elements(2, 0).size() == 1);
  for (int n = 1; n <= 3; ++n) CHECK(ball_elements(n, 1).size() == (std::size_t)n + 2);
  CHECK(ball_elements(1, 2).size() == 5);

  auto data = ball(2, 6);
  for (std::size_t i = 0; i < data->windows.size(); ++i) {
    AffinePermutation x(2, data->windows[i]);
    CHECK(length(x) == data->lengths[i]);
    if (i > 0)
      CHECK(std::tie(data->lengths[i - 1], data->windows[i - 1]) <
            std::tie(data->lengths[i], data->windows[i]));
  }
}
