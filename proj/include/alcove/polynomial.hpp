#pragma once

#include <map>

#include "alcove/core.hpp"

namespace alcove {

// Sparse multivariate polynomial over an exact coefficient ring K.
// K needs +, -, *, == and construction from int.
template <typename K>
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() : nvars_(0) {}
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  static Polynomial constant(int nvars, const K& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Polynomial variable(int nvars, int var, const K& scale = K(1)) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e[var] = 1;
    p.add_term(e, scale);
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, K>& terms() const { return terms_; }

  void add_term(const Exponents& e, const K& c) {
    assert((int)e.size() == nvars_);
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!(c == K(0))) terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second == K(0)) terms_.erase(it);
    }
  }

  K coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? K(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_)
      d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
  }

  Polynomial operator+(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, K(0) - c);
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    assert(nvars_ == o.nvars_);
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  Polynomial operator*(const K& s) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  bool operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  K eval(const std::vector<K>& x) const {
    assert((int)x.size() == nvars_);
    K total(0);
    for (const auto& [e, c] : terms_) {
      K term = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) term = term * x[i];
      total = total + term;
    }
    return total;
  }

  // Substitute a polynomial for one variable.
  Polynomial substitute(int var, const Polynomial& repl) const {
    assert(repl.nvars_ == nvars_);
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Polynomial term = constant(nvars_, c);
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        Polynomial base = (i == var) ? repl : variable(nvars_, i);
        for (int k = 0; k < e[i]; ++k) term = term * base;
      }
      r = r + term;
    }
    return r;
  }

  // x_var -> x_var + c
  Polynomial shift(int var, const K& c) const {
    return substitute(var, variable(nvars_, var) + constant(nvars_, c));
  }

  // x_var -> c
  Polynomial fix(int var, const K& c) const {
    return substitute(var, constant(nvars_, c));
  }

  Polynomial homogeneous_component(int d) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
      if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
    return r;
  }

  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        os << "*" << (i < (int)names.size() ? names[i] : "x" + std::to_string(i));
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  int nvars_;
  std::map<Exponents, K> terms_;
};

}  // namespace alcove
