#ifndef GENHYPER_RATIONAL_HPP
#define GENHYPER_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace genhyper {

// Exact arbitrary-precision arithmetic. Everything probability-valued in
// this project is a BigRational; no floating point is used anywhere.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRational& q) {
  return q.get_den() == 1;
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt lcm_upto(unsigned m) {
  BigInt l = 1;
  for (unsigned i = 2; i <= m; ++i) {
    BigInt r;
    mpz_lcm_ui(r.get_mpz_t(), l.get_mpz_t(), i);
    l = r;
  }
  return l;
}

}  // namespace genhyper

#endif  // GENHYPER_RATIONAL_HPP
