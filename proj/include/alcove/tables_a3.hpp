#pragma once

#include <array>

#include "alcove/radical.hpp"
#include "alcove/weights.hpp"

// Reference data for rank 3: the cover sets and dominant Paper-Boat sizes
// per zone, the geometric-formula coefficients, and the enumeration of F by
// reduced words. Zones are ordered lexicographically by (i1,i2,i3), matching
// all_zones(3).

namespace alcove::tables_a3 {

inline const std::array<std::vector<RootInterval>, 27>& phi_plus_table() {
  static const std::array<std::vector<RootInterval>, 27> t = {{
      /* (0,0,0) */ {},
      /* (0,0,1) */ {},
      /* (0,0,2) */ {{3, 3}},
      /* (0,1,0) */ {},
      /* (0,1,1) */ {{2, 3}},
      /* (0,1,2) */ {{3, 3}},
      /* (0,2,0) */ {{2, 2}},
      /* (0,2,1) */ {{2, 2}},
      /* (0,2,2) */ {{2, 2}, {3, 3}},
      /* (1,0,0) */ {},
      /* (1,0,1) */ {{1, 3}},
      /* (1,0,2) */ {{3, 3}},
      /* (1,1,0) */ {{1, 2}},
      /* (1,1,1) */ {{1, 2}, {2, 3}},
      /* (1,1,2) */ {{1, 2}, {3, 3}},
      /* (1,2,0) */ {{2, 2}},
      /* (1,2,1) */ {{2, 2}},
      /* (1,2,2) */ {{2, 2}, {3, 3}},
      /* (2,0,0) */ {{1, 1}},
      /* (2,0,1) */ {{1, 1}},
      /* (2,0,2) */ {{1, 1}, {3, 3}},
      /* (2,1,0) */ {{1, 1}},
      /* (2,1,1) */ {{1, 1}, {2, 3}},
      /* (2,1,2) */ {{1, 1}, {3, 3}},
      /* (2,2,0) */ {{1, 1}, {2, 2}},
      /* (2,2,1) */ {{1, 1}, {2, 2}},
      /* (2,2,2) */ {{1, 1}, {2, 2}, {3, 3}},
  }};
  return t;
}

// c_a^+(i1,i2,i3): dominant Paper-Boat sizes, rows a_1..a_6.
inline const std::array<std::array<long long, 27>, 6>& cplus_table() {
  static const std::array<std::array<long long, 27>, 6> t = {{
      {1, 4, 4, 6, 12, 12, 6, 12, 12, 4, 12, 12, 12, 24, 24, 12, 24, 24,
       4, 12, 12, 12, 24, 24, 12, 24, 24},
      {2, 7, 6, 10, 17, 16, 8, 15, 14, 7, 18, 16, 17, 30, 28, 15, 28, 26,
       6, 16, 14, 16, 28, 26, 14, 26, 24},
      {3, 10, 9, 13, 22, 22, 9, 18, 18, 9, 22, 21, 18, 33, 33, 15, 30, 30,
       6, 16, 15, 15, 27, 27, 12, 24, 24},
      {3, 9, 6, 13, 18, 15, 9, 15, 12, 10, 22, 16, 22, 33, 27, 18, 30, 24,
       9, 21, 15, 22, 33, 27, 18, 30, 24},
      {5, 14, 10, 18, 24, 22, 9, 16, 14, 14, 29, 24, 24, 37, 34, 16, 29, 26,
       10, 24, 20, 22, 34, 32, 14, 26, 24},
      {8, 20, 12, 26, 31, 26, 14, 23, 18, 20, 36, 26, 31, 44, 36, 23, 38, 30,
       12, 26, 18, 26, 36, 30, 18, 30, 24},
  }};
  return t;
}

// Reduced words of a_1..a_6 in F.
inline const std::array<std::vector<int>, 6>& f_words() {
  static const std::array<std::vector<int>, 6> t = {{
      {}, {0}, {0, 1}, {0, 3}, {0, 1, 3}, {0, 1, 3, 2},
  }};
  return t;
}

// Geometric-formula coefficients mu_{J,a}; subsets of {1,2,3} indexed by
// bitmask (bit i-1 for i). Rows a_1..a_6; columns masks 0..7.
inline const std::array<std::array<RadicalScalar, 8>, 6>& mu_table() {
  auto q = [](long long v) { return RadicalScalar(Rational(v)); };
  auto s2 = [](long long v) { return RadicalScalar::sqrt2(Rational(v)); };
  auto s3 = [](long long v) { return RadicalScalar::sqrt3(Rational(v)); };
  static const std::array<std::array<RadicalScalar, 8>, 6> t = {{
      // mask:  {}     {1}     {2}     {1,2}   {3}     {1,3}   {2,3}   {1,2,3}
      {q(24), s2(22), s2(28), s3(16), s2(22), q(36), s3(16), q(12)},
      {q(48), s2(40), s2(52), s3(24), s2(40), q(60), s3(24), q(12)},
      {q(72), s2(52), s2(70), s3(24), s2(58), q(72), s3(32), q(12)},
      {q(72), s2(58), s2(70), s3(32), s2(52), q(72), s3(24), q(12)},
      {q(120), s2(82), s2(100), s3(32), s2(82), q(96), s3(32), q(12)},
      {q(192), s2(112), s2(148), s3(40), s2(112), q(108), s3(40), q(12)},
  }};
  return t;
}

}  // namespace alcove::tables_a3
