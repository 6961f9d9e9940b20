#pragma once

// Exact scalar types. Int and Rat are GMP's mpz_class / mpq_class; every
// value handed out by the library is kept canonical (mpq denominators > 0,
// lowest terms).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace unilat {

using Int = mpz_class;
using Rat = mpq_class;

/// Canonicalizes in place and returns the value.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Int to_int(unsigned long long v) { return Int(static_cast<unsigned long>(v)); }

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

/// "num" for integers, "num/den" otherwise.
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

inline Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  return Rat(make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e)));
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// Positive divisors of |n|, ascending. n must be nonzero.
std::vector<Int> positive_divisors(const Int& n);

}  // namespace unilat
