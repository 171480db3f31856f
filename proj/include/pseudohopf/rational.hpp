#ifndef PSEUDOHOPF_RATIONAL_HPP
#define PSEUDOHOPF_RATIONAL_HPP

// Exact rational scalar type and small helpers. Everything downstream
// (matrices, structure constants, curvature) is computed over Q; there is no
// floating point anywhere in the verification paths.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pseudohopf {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Int rat_num(const Rat& x) { return numerator(x); }
inline Int rat_den(const Rat& x) { return denominator(x); }

inline Rat abs_rat(const Rat& x) { return x < 0 ? Rat(-x) : x; }

inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

// Canonical "p/q" rendering; integers drop the "/q" part.
inline std::string to_string(const Rat& x) {
  if (rat_den(x) == 1) return rat_num(x).str();
  return rat_num(x).str() + "/" + rat_den(x).str();
}

// Parse "p", "-p", "p/q". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
    return Rat(num) / Rat(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

// All prime factors of |n| (with multiplicity folded away); trial division up
// to a bound, then Pollard rho for any stubborn cofactor. Desk scale only.
inline void factor_into(Int n, std::vector<Int>& primes);

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return (a * b) % m; }

inline Int powmod(Int base, Int exp, const Int& m) {
  Int r = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) == 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline bool miller_rabin(const Int& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline Int pollard_rho(const Int& n) {
  if ((n & 1) == 0) return 2;
  for (Int c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (mulmod(x, x, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      y = (mulmod(y, y, n) + c) % n;
      d = gcd(Int(x > y ? x - y : y - x), n);
    }
    if (d != n) return d;
  }
}

}  // namespace detail

inline void factor_into(Int n, std::vector<Int>& primes) {
  if (n < 0) n = -n;
  if (n <= 1) return;
  for (long p = 2; p < 100000 && Int(p) * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n == 1) return;
  if (detail::miller_rabin(n)) {
    primes.push_back(n);
    return;
  }
  Int d = detail::pollard_rho(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

// All positive divisors of |n|. Throws if the divisor count explodes past the
// desk-scale budget (never hit by the catalog computations).
inline std::vector<Int> divisors_of(const Int& n, std::size_t budget = 200000) {
  std::vector<Int> primes;
  factor_into(n, primes);
  Int m = n < 0 ? Int(-n) : n;
  std::vector<Int> divs{1};
  for (const Int& p : primes) {
    int mult = 0;
    Int q = m;
    while (q % p == 0) {
      q /= p;
      ++mult;
    }
    std::size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= mult; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) {
        divs.push_back(divs[i] * pk);
        if (divs.size() > budget)
          throw std::runtime_error("divisors_of: divisor budget exceeded");
      }
    }
  }
  return divs;
}

}  // namespace pseudohopf

#endif
