#include "bmm/rational.hpp"

#include <stdexcept>

namespace bmm {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num_mpz_t(), 2) + mpz_sizeinbase(r.get_den_mpz_t(), 2);
}

Integer binomial(long top, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long j = 0; j < k; ++j) {
    num *= Integer(top - j);
    den *= Integer(j + 1);
  }
  return num / den;
}

}  // namespace bmm
