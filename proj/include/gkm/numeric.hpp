#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// rationals, integer lattice vectors, and the two coefficient fields
// (rationals, odd prime field) used by the linear algebra layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkm {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Thrown on malformed user input (bad weights, schema violations, ...).
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal consistency assertion fails. These are the
// "fail loudly" checks; the CLI maps them to exit code 2.
class invariant_error : public std::runtime_error {
 public:
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw input_error("cannot parse rational '" + s + "' (expected p or p/q)");
  }
}

inline std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// ---------------------------------------------------------------------------
// Integer lattice vectors
// ---------------------------------------------------------------------------

using IVec = std::vector<long long>;

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline IVec ivec_neg(const IVec& a) {
  IVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

inline long long ivec_dot(const IVec& a, const IVec& b) {
  long long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool ivec_is_zero(const IVec& a) {
  for (long long x : a)
    if (x != 0) return false;
  return true;
}

// Two integer vectors span the same line.
inline bool ivec_proportional(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  // cross-ratio test: a[i]*b[j] == a[j]*b[i] for all i<j, and supports match
  for (size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
  }
  size_t p = a.size();
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      p = i;
      break;
    }
  if (p == a.size()) return ivec_is_zero(b);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[p] * b[i] != a[i] * b[p]) return false;
  }
  return true;
}

// Canonical sign: first nonzero entry positive. Zero vectors pass through.
inline IVec sign_normalize(IVec v) {
  for (long long x : v) {
    if (x > 0) return v;
    if (x < 0) return ivec_neg(v);
  }
  return v;
}

inline std::string ivec_to_string(const IVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

// Concatenation (left character, right character) -> bi-character in Z^{2r}.
inline IVec bichar(const IVec& left, const IVec& right) {
  IVec v = left;
  v.insert(v.end(), right.begin(), right.end());
  return v;
}

inline IVec bichar_left(const IVec& v) { return IVec(v.begin(), v.begin() + v.size() / 2); }
inline IVec bichar_right(const IVec& v) { return IVec(v.begin() + v.size() / 2, v.end()); }

// ---------------------------------------------------------------------------
// Coefficient fields for the templated linear algebra
// ---------------------------------------------------------------------------

struct RationalField {
  using value_type = Rational;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  Rational from_int(long long x) const { return Rational(x); }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational neg(const Rational& a) const { return -a; }
  Rational inv(const Rational& a) const {
    if (a == 0) throw invariant_error("division by zero in rational field");
    return Rational(1) / a;
  }
  static bool is_zero(const Rational& a) { return a == 0; }
};

// Z/p for an odd prime p; elements stored as uint64_t in [0, p).
struct PrimeField {
  using value_type = std::uint64_t;
  std::uint64_t p;

  explicit PrimeField(std::uint64_t prime) : p(prime) {}
  static std::uint64_t zero() { return 0; }
  static std::uint64_t one() { return 1; }
  std::uint64_t from_int(long long x) const {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<std::uint64_t>(r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return (static_cast<unsigned __int128>(a) * b) % p;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const {
    if (a == 0) throw invariant_error("division by zero mod p");
    return pow(a, p - 2);
  }
  static bool is_zero(std::uint64_t a) { return a == 0; }
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for n < 3.2e18
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) {
    return (unsigned __int128)a * b % n;
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Draws a random prime in (2^30, 2^31) from the given engine.
inline std::uint64_t random_31bit_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist((1ull << 30) + 1, (1ull << 31) - 1);
  for (;;) {
    std::uint64_t c = dist(rng) | 1ull;
    if (is_prime_u64(c)) return c;
  }
}

}  // namespace gkm
