#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alcove {

// All geometry in this library is exact. Lattice data lives in 64-bit
// integers; anything that can leave the lattice (change of basis, vertex
// solves, polynomial fits) uses arbitrary-precision rationals.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

template <typename T>
std::string vec_to_string(const std::vector<T>& v, char open = '(', char close = ')') {
  std::ostringstream os;
  os << open;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << close;
  return os.str();
}

// Floor division for possibly negative numerators.
inline long long floor_div(long long a, long long b) {
  assert(b > 0);
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline long long mod_nonneg(long long a, long long b) {
  assert(b > 0);
  long long r = a % b;
  return r < 0 ? r + b : r;
}

struct VectorHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    // splitmix64 over the entries
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (std::uint64_t)v.size();
    for (long long x : v) {
      std::uint64_t z = h + 0x9e3779b97f4a7c15ULL + (std::uint64_t)x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      h = z ^ (z >> 31);
    }
    return (std::size_t)h;
  }
};

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace alcove
