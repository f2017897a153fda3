#include "hopfq/rational.hpp"

#include <stdexcept>

namespace hopfq {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace hopfq
