#include "franel/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace franel {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::constant(Integer c) {
  return IntPoly(std::vector<Integer>{std::move(c)});
}

IntPoly IntPoly::monomial(Integer c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return IntPoly(std::move(coeffs));
}

Integer IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a.coeff(i) + b.coeff(i);
  }
  return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) {
    return IntPoly();
  }
  std::vector<Integer> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly poly_pow(const IntPoly& a, unsigned long e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = a;
  while (e > 0) {
    if (e & 1) {
      result = poly_mul(result, base);
    }
    e >>= 1;
    if (e > 0) {
      base = poly_mul(base, base);
    }
  }
  return result;
}

IntPoly poly_scale(const IntPoly& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs());
  for (Integer& coeff : out) {
    coeff *= c;
  }
  return IntPoly(std::move(out));
}

IntPoly poly_derivative(const IntPoly& a) {
  if (a.coeffs().size() <= 1) {
    return IntPoly();
  }
  std::vector<Integer> out(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    out[i - 1] = a.coeffs()[i] * Integer(i);
  }
  return IntPoly(std::move(out));
}

Integer poly_eval(const IntPoly& a, const Integer& x0) {
  Integer result = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) {
    result = result * x0 + a.coeffs()[i];
  }
  return result;
}

IntPoly foata_lhs(long n) {
  if (n < 0) {
    throw std::invalid_argument("foata_lhs: n must be nonnegative");
  }
  auto row = binomial_row(static_cast<std::size_t>(n));
  std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    coeffs[k] = (*row)[k] * (*row)[k] * (*row)[k];
  }
  return IntPoly(std::move(coeffs));
}

IntPoly foata_rhs(long n) {
  if (n < 0) {
    throw std::invalid_argument("foata_rhs: n must be nonnegative");
  }
  IntPoly one_plus_x(std::vector<Integer>{1, 1});
  IntPoly acc;
  for (long k = 0; 2 * k <= n; ++k) {
    Integer c = binomial(n + k, 3 * k) * binomial(3 * k, 2 * k) * binomial(2 * k, k);
    IntPoly term = poly_mul(IntPoly::monomial(std::move(c), static_cast<std::size_t>(k)),
                            poly_pow(one_plus_x, static_cast<unsigned long>(n - 2 * k)));
    acc = poly_add(acc, term);
  }
  return acc;
}

}  // namespace franel
