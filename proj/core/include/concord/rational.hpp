#pragma once

// Thin helpers around GMP's exact integer and rational types. All arithmetic
// in the library that feeds an invariant is exact; floating point appears
// only inside the interval-certified signature routine.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace concord {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor(num/den) for a canonicalized rational.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

// "n/d" with d >= 1, e.g. "2/1", "-1/6".
inline std::string rat_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline long to_long(const Int& z) { return mpz_get_si(z.get_mpz_t()); }

}  // namespace concord
