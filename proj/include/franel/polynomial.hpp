#pragma once

#include <vector>

#include "franel/arith.hpp"

namespace franel {

/// Dense integer-coefficient univariate polynomial. coeffs()[i] is the
/// coefficient of x^i; the top coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly constant(Integer c);
  static IntPoly monomial(Integer c, std::size_t degree);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of x^i, zero beyond the degree.
  Integer coeff(std::size_t i) const;

  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_pow(const IntPoly& a, unsigned long e);
IntPoly poly_scale(const IntPoly& a, const Integer& c);
IntPoly poly_derivative(const IntPoly& a);

/// Exact evaluation at x0 by Horner's scheme.
Integer poly_eval(const IntPoly& a, const Integer& x0);

/// sum_k C(n,k)^3 x^k.
IntPoly foata_lhs(long n);

/// sum_{k<=n/2} C(n+k,3k) C(3k,2k) C(2k,k) x^k (1+x)^{n-2k}.
IntPoly foata_rhs(long n);

}  // namespace franel
