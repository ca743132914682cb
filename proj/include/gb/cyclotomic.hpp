#ifndef GB_CYCLOTOMIC_HPP
#define GB_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gb/rational.hpp"

namespace gb {

/// Coefficients of the n-th cyclotomic polynomial, monic, constant term first.
std::vector<long long> cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// Element of the cyclotomic field Q(zeta_n), stored as a residue modulo
/// Phi_n in the power basis 1, zeta, ..., zeta^(phi(n)-1). Order-1 elements
/// are plain rationals; mixed-order arithmetic promotes both operands to the
/// lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_(1, Rational(0)) {}
  Cyclotomic(const Rational& r) : order_(1), c_(1, r) {}
  Cyclotomic(long v) : order_(1), c_(1, Rational(v)) {}

  static Cyclotomic zeta(unsigned order, long power = 1);

  unsigned order() const { return order_; }
  const RatVec& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // throws on zero

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Rewrites the element in Q(zeta_n); the current order must divide n.
  Cyclotomic promoted(unsigned n) const;

  std::string to_string() const;

 private:
  Cyclotomic(unsigned order, RatVec c) : order_(order), c_(std::move(c)) {}

  unsigned order_;
  RatVec c_;
};

}  // namespace gb

#endif
