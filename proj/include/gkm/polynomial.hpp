#pragma once

// Sparse multivariate polynomials with exact rational coefficients, graded
// by total degree (polynomial degree d sits in cohomological degree 2d).
// This is the user-facing representation for tuple membership checks; the
// bulk linear algebra works on coefficient rows instead.

#include <map>
#include <string>
#include <vector>

#include "gkm/monomials.hpp"

namespace gkm {

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    p.add_term(Mono(nvars, 0), c);
    return p;
  }

  // linear form <chi, x>
  static Poly linear(const IVec& chi) {
    Poly p(static_cast<int>(chi.size()));
    for (size_t i = 0; i < chi.size(); ++i) {
      if (chi[i] == 0) continue;
      Mono m(chi.size(), 0);
      m[i] = 1;
      p.add_term(m, Rational(chi[i]));
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Mono, Rational>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rational& c) {
    if (static_cast<int>(m.size()) != nvars_) throw input_error("monomial arity mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Poly operator-(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  Poly operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) {
        Mono m(nvars_);
        for (int i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
        r.add_term(m, c1 * c2);
      }
    return r;
  }

  Poly scaled(const Rational& c) const {
    Poly r(nvars_);
    for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
    return r;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (int e : m) t += e;
      d = std::max(d, t);
    }
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (int e : m) t += e;
      if (t != d) return false;
    }
    return true;
  }

  // substitute x_var := replacement (a polynomial in the same variables,
  // required not to involve x_var)
  Poly substituted(int var, const Poly& replacement) const {
    Poly r(nvars_);
    std::vector<Poly> powers{Poly::constant(nvars_, 1)};
    for (const auto& [m, c] : terms_) {
      int k = m[var];
      while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * replacement);
      Mono rest = m;
      rest[var] = 0;
      Poly base(nvars_);
      base.add_term(rest, c);
      r = r + base * powers[k];
    }
    return r;
  }

  // integer linear change of variables: x_j -> sum_i A[i*n+j] x_i
  Poly transformed(const std::vector<long long>& A) const {
    const int n = nvars_;
    std::vector<Poly> forms;
    for (int j = 0; j < n; ++j) {
      IVec col(n);
      for (int i = 0; i < n; ++i) col[i] = A[i * n + j];
      forms.push_back(Poly::linear(col));
    }
    Poly r(n);
    for (const auto& [m, c] : terms_) {
      Poly t = Poly::constant(n, c);
      for (int j = 0; j < n; ++j)
        for (int e = 0; e < m[j]; ++e) t = t * forms[j];
      r = r + t;
    }
    return r;
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (int i = 0; i < nvars_; ++i)
        for (int e = 0; e < m[i]; ++e) v *= point[i];
      total += v;
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += rational_to_string(c);
      for (int i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        s += "*x" + std::to_string(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
      }
    }
    return s;
  }

 private:
  int nvars_ = 0;
  std::map<Mono, Rational> terms_;
};

// Does the linear form chi divide p? Tested by restriction to the hyperplane
// chi = 0: eliminate the variable with the largest-index nonzero coefficient.
// Valid over the rationals because a nonzero linear form is irreducible.
inline bool linear_form_divides(const IVec& chi, const Poly& p) {
  if (p.is_zero()) return true;
  int pivot = -1;
  for (int i = static_cast<int>(chi.size()) - 1; i >= 0; --i)
    if (chi[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw invariant_error("zero character in divisibility test");
  IVec rest = ivec_neg(chi);
  rest[pivot] = 0;
  Poly repl = Poly::linear(rest).scaled(Rational(1) / Rational(chi[pivot]));
  return p.substituted(pivot, repl).is_zero();
}

}  // namespace gkm
