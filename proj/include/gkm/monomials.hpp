#pragma once

// Enumeration of monomials of a fixed total degree, with index lookup.
// The order is lexicographic descending on exponent vectors, which fixes
// every downstream matrix layout.

#include <map>
#include <vector>

#include "gkm/numeric.hpp"

namespace gkm {

using Mono = std::vector<int>;

namespace detail {

inline void enumerate_monomials(int nvars, int degree, Mono& cur, std::vector<Mono>& out) {
  if (static_cast<int>(cur.size()) == nvars - 1) {
    cur.push_back(degree);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur.push_back(e);
    enumerate_monomials(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

struct MonoTable {
  int nvars = 0;
  int degree = 0;
  std::vector<Mono> list;
  std::map<Mono, int> index;

  int count() const { return static_cast<int>(list.size()); }
  int at(const Mono& m) const {
    auto it = index.find(m);
    if (it == index.end()) throw invariant_error("monomial not in table");
    return it->second;
  }
};

inline MonoTable monomial_table(int nvars, int degree) {
  if (nvars < 1 || degree < 0) throw input_error("bad monomial table parameters");
  MonoTable t;
  t.nvars = nvars;
  t.degree = degree;
  Mono cur;
  detail::enumerate_monomials(nvars, degree, cur, t.list);
  for (int i = 0; i < t.count(); ++i) t.index[t.list[i]] = i;
  return t;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace gkm
