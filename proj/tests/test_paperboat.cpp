#include <catch2/catch_amalgamated.hpp>

#include "alcove/paperboat.hpp"
#include "alcove/tables_a3.hpp"

using namespace alcove;

namespace {

Weight W(std::vector<long long> c) {
  int n = (int)c.size();
  return Weight(n, std::move(c));
}

std::set<std::vector<long long>> window_set(const std::vector<AffinePermutation>& v) {
  std::set<std::vector<long long>> s;
  for (const auto& x : v) s.insert(x.window);
  return s;
}

}  // namespace

TEST_CASE("paper boats at minimal weights are whole intervals") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& a : enumerate_F(n))
      for (int i = 0; i <= n; ++i) {
        Weight w = Weight::fundamental(n, i);
        CHECK(window_set(paperboat::paper_boat(a, w)) ==
              window_set(bruhat::lower_interval(theta(a, w))));
      }
}

TEST_CASE("rank-3 tile sizes: spot values") {
  const auto& f3 = enumerate_F(3);
  CHECK(paperboat::pb_size_dominant(f3[0], Weight::zero(3)) == 1);
  CHECK(paperboat::pb_size_dominant(f3[4], W({1, 1, 2})) == 34);
  CHECK(paperboat::pb_size(f3[0], Weight::zero(3)) == 24);
  for (const auto& a : f3) CHECK(paperboat::pb_size(a, W({2, 2, 2})) == 576);
}

TEST_CASE("full tile is |W_f| copies of the dominant part") {
  const auto& f2 = enumerate_F(2);
  for (const auto& a : f2)
    for (Weight lam : {W({1, 1}), W({2, 1}), W({2, 2}), W({0, 2})})
      CHECK((long long)paperboat::paper_boat(a, lam).size() ==
            6 * (long long)paperboat::paper_boat_dominant(a, lam).size());
}

TEST_CASE("tiling") {
  // rank 1 end to end
  const auto& f1 = enumerate_F(1);
  for (long long k = 0; k <= 4; ++k) {
    auto rep = paperboat::verify_tiling(f1[0], W({k}));
    INFO(rep.first_failure());
    CHECK(rep.ok());
  }

  const auto& f2 = enumerate_F(2);
  for (const auto& a : f2) {
    CHECK(paperboat::verify_tiling(a, W({2, 2})).ok());
    CHECK(paperboat::verify_tiling(a, W({1, 2})).ok());
  }
  for (const auto& a : enumerate_F(3)) {
    auto rep = paperboat::verify_tiling(a, W({1, 1, 1}));
    INFO(rep.first_failure());
    CHECK(rep.ok());
  }
  // single-tile case
  CHECK(paperboat::verify_tiling(enumerate_F(2)[1], Weight::fundamental(2, 1)).ok());
}

TEST_CASE("zone constancy") {
  const auto& f3 = enumerate_F(3);
  auto rep = paperboat::verify_zone_constancy(
      f3[2], Zone({2, 2, 2}), {W({2, 2, 2}), W({3, 2, 2}), W({2, 3, 4})});
  INFO(rep.first_failure());
  CHECK(rep.ok());
  for (Weight lam : {W({2, 2, 2}), W({3, 2, 2}), W({2, 3, 4})})
    for (const auto& a : f3) CHECK(paperboat::pb_size(a, lam) == 576);

  const auto& f2 = enumerate_F(2);
  auto rep2 = paperboat::verify_zone_constancy(
      f2[1], Zone({2, 1}), {W({2, 1}), W({3, 1}), W({5, 1})});
  INFO(rep2.first_failure());
  CHECK(rep2.ok());

  // singleton zone: vacuously constant
  CHECK(paperboat::verify_zone_constancy(f2[0], Zone({0, 0}), {W({0, 0})}).ok());

  CHECK_THROWS_AS(
      paperboat::verify_zone_constancy(f2[0], Zone({2, 1}), {W({1, 1})}),
      std::invalid_argument);
}

TEST_CASE("inclusion-exclusion recurrence") {
  const auto& f3 = enumerate_F(3);
  // at a fundamental weight the only term is the interval itself
  for (const auto& a : f3)
    CHECK(paperboat::pb_size_via_recurrence(a, Weight::fundamental(3, 2)) ==
          paperboat::interval_size(a, Weight::fundamental(3, 2)));

  // the join over the full cover set of (1,1,1) is alpha_{1,3} = (1,0,1)
  {
    auto phi = phi_plus(W({1, 1, 1}));
    REQUIRE(phi.size() == 2);
    std::vector<long long> rc(3, 0);
    for (const auto& a : phi)
      for (int i = 0; i < 3; ++i) rc[i] = std::max(rc[i], a.root_coords(3)[i]);
    CHECK(root_to_fw(RootVector(3, {Rational(rc[0]), Rational(rc[1]), Rational(rc[2])}))
              ->coords == std::vector<long long>{1, 0, 1});
  }

  CHECK(paperboat::pb_size_via_recurrence(f3[1], W({1, 1, 1})) == 720);
  for (const auto& a : f3)
    for (Weight lam : {W({1, 1, 1}), W({2, 1, 0}), W({1, 0, 2}), W({2, 2, 2})})
      CHECK(paperboat::pb_size_via_recurrence(a, lam) == paperboat::pb_size(a, lam));
}

TEST_CASE("zone tables") {
  const auto& f3 = enumerate_F(3);
  auto zones = all_zones(3);
  const auto& expect = tables_a3::cplus_table();
  for (int ai : {0, 3, 5}) {
    auto table = paperboat::build_zone_table(f3[ai]);
    CHECK(table.a_index == ai + 1);
    CHECK(table.entries.size() == 27);
    for (int z = 0; z < 27; ++z) {
      CHECK(table.at(zones[z]) == 24 * expect[ai][z]);
      CHECK(table.at(zones[z]) % 24 == 0);
    }
  }
  CHECK_THROWS_AS(paperboat::build_zone_table(simple_reflection(2, 1)),
                  std::invalid_argument);
}

TEST_CASE("weighted interval counts") {
  const auto& f3 = enumerate_F(3);
  auto t5 = paperboat::build_zone_table(f3[4]);
  // single-summand case
  for (int i = 0; i <= 3; ++i) {
    Weight w = Weight::fundamental(3, i);
    CHECK(paperboat::weighted_interval_size(f3[4], w, t5) ==
          paperboat::interval_size(f3[4], w));
  }
  CHECK(paperboat::pb_size(f3[4], W({1, 1, 2})) == 816);
  CHECK(paperboat::weighted_interval_size(f3[4], W({1, 1, 2}), t5) ==
        paperboat::interval_size(f3[4], W({1, 1, 2})));

  const auto& f2 = enumerate_F(2);
  auto ts0 = paperboat::build_zone_table(f2[1]);
  CHECK(paperboat::weighted_interval_size(f2[1], W({2, 3}), ts0) ==
        (long long)bruhat::lower_interval(theta(f2[1], W({2, 3}))).size());
}

TEST_CASE("conjectural lowest-cell tilings") {
  // observations only; nothing here is asserted as a theorem beyond a = id
  const auto& f2 = enumerate_F(2);
  for (const auto& a : f2)
    for (const auto& b : f2)
      for (Weight lam : {W({1, 1}), W({2, 0})}) {
        auto rep = paperboat::conjectural_cell_tiling_check(a, b, lam);
        CHECK(rep.suite.rfind("CONJECTURAL", 0) == 0);
        INFO(rep.first_failure());
        CHECK(rep.ok());
      }
  CHECK_THROWS_AS(
      paperboat::conjectural_cell_tiling_check(simple_reflection(2, 1), f2[0], W({1, 1})),
      std::invalid_argument);
}

TEST_CASE("deep-zone law") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<Weight> reps;
    for (long long k = 0; k < 3; ++k) {
      std::vector<long long> c(n, 2);
      c[0] += k;
      reps.emplace_back(n, c);
    }
    for (const auto& a : enumerate_F(n))
      for (const Weight& lam : reps)
        CHECK(paperboat::pb_size_dominant(a, lam) == factorial(n + 1));
  }
}
