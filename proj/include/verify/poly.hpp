#ifndef VERIFY_POLY_HPP
#define VERIFY_POLY_HPP

#include <string>
#include <vector>

#include "verify/basics.hpp"

namespace verify {

// Laurent polynomial in one variable q with exact 64-bit integer
// coefficients. All quantities handled here (KL coefficients, partition
// counts, multiplicities, Hilbert coefficients) are small; arithmetic is
// overflow-checked.
class PolyZ {
 public:
  PolyZ() = default;
  static PolyZ zero() { return PolyZ(); }
  static PolyZ one() { return monomial(1, 0); }
  static PolyZ q() { return monomial(1, 1); }
  static PolyZ monomial(long long coeff, long long exp);

  bool is_zero() const { return c_.empty(); }
  long long lo() const;  // lowest exponent; requires nonzero
  long long hi() const;  // highest exponent; requires nonzero
  long long coeff(long long exp) const;

  PolyZ operator+(const PolyZ& o) const;
  PolyZ operator-(const PolyZ& o) const;
  PolyZ operator*(const PolyZ& o) const;
  PolyZ operator-() const;
  bool operator==(const PolyZ& o) const;
  bool operator!=(const PolyZ& o) const { return !(*this == o); }

  PolyZ& operator+=(const PolyZ& o) { return *this = *this + o; }
  PolyZ& operator-=(const PolyZ& o) { return *this = *this - o; }
  PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

  // q -> 1/q
  PolyZ reversed() const;
  // multiply by q^k
  PolyZ shifted(long long k) const;
  // q -> q^k (k >= 1)
  PolyZ stretched(long long k) const;
  // inverse of stretched(2); requires all exponents even
  PolyZ halved() const;
  // terms with exponent < bound
  PolyZ low_part(long long bound) const;
  // terms with exponent in [lo, hi]
  PolyZ window(long long lo, long long hi) const;

  long long eval_int(long long x) const;
  long long at_one() const { return eval_int(1); }
  bool all_coeffs_nonneg() const;

  // Ascending exponents, e.g. "q^-2 + 1 + q^2", "q + q^2", "2*q^3 - 1".
  std::string to_string() const;

  // Access for serialization: list of (coeff, exp), exponents ascending, coeffs nonzero.
  std::vector<std::pair<long long, long long>> terms() const;
  static PolyZ from_terms(const std::vector<std::pair<long long, long long>>& t);

 private:
  void trim();
  long long lo_ = 0;              // exponent of c_[0]
  std::vector<long long> c_;      // empty <=> zero; ends nonzero after trim
};

}  // namespace verify

#endif
