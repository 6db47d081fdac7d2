#pragma once

#include "alcove/core.hpp"

namespace alcove {

// Exact element of Q(sqrt2, sqrt3): q0 + q1*sqrt2 + q2*sqrt3 + q3*sqrt6.
struct RadicalScalar {
  Rational r1, r2, r3, r6;

  RadicalScalar() = default;
  RadicalScalar(int v) : r1(v) {}  // NOLINT: implicit from int for Polynomial<K>
  RadicalScalar(Rational v) : r1(std::move(v)) {}
  RadicalScalar(Rational a, Rational b, Rational c, Rational d)
      : r1(std::move(a)), r2(std::move(b)), r3(std::move(c)), r6(std::move(d)) {}

  static RadicalScalar sqrt2(Rational c = 1) { return {0, std::move(c), 0, 0}; }
  static RadicalScalar sqrt3(Rational c = 1) { return {0, 0, std::move(c), 0}; }
  static RadicalScalar sqrt6(Rational c = 1) { return {0, 0, 0, std::move(c)}; }

  bool is_rational() const { return r2 == 0 && r3 == 0 && r6 == 0; }
  bool is_zero() const { return r1 == 0 && is_rational(); }
  const Rational& rational_part() const { return r1; }

  RadicalScalar operator+(const RadicalScalar& o) const {
    return {r1 + o.r1, r2 + o.r2, r3 + o.r3, r6 + o.r6};
  }
  RadicalScalar operator-(const RadicalScalar& o) const {
    return {r1 - o.r1, r2 - o.r2, r3 - o.r3, r6 - o.r6};
  }
  RadicalScalar operator-() const { return {-r1, -r2, -r3, -r6}; }
  RadicalScalar operator*(const RadicalScalar& o) const {
    return {r1 * o.r1 + 2 * r2 * o.r2 + 3 * r3 * o.r3 + 6 * r6 * o.r6,
            r1 * o.r2 + r2 * o.r1 + 3 * (r3 * o.r6 + r6 * o.r3),
            r1 * o.r3 + r3 * o.r1 + 2 * (r2 * o.r6 + r6 * o.r2),
            r1 * o.r6 + r6 * o.r1 + r2 * o.r3 + r3 * o.r2};
  }
  bool operator==(const RadicalScalar& o) const {
    return r1 == o.r1 && r2 == o.r2 && r3 == o.r3 && r6 == o.r6;
  }
  bool operator!=(const RadicalScalar& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    bool any = false;
    auto piece = [&](const Rational& c, const char* tag) {
      if (c == 0) return;
      if (any) os << " + ";
      os << c << tag;
      any = true;
    };
    piece(r1, "");
    piece(r2, "*sqrt2");
    piece(r3, "*sqrt3");
    piece(r6, "*sqrt6");
    if (!any) os << "0";
    return os.str();
  }
};

inline std::ostream& operator<<(std::ostream& os, const RadicalScalar& s) {
  return os << s.str();
}

}  // namespace alcove
