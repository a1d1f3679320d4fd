#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace franel {

/// Universal exact value type: arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// An exact-division or parity assumption baked into an algorithm failed.
/// This is always a bug, never a data condition; callers must not swallow it.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration refused to run because it would exceed its work budget.
/// Recoverable: the caller should switch to the recurrence path.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strictly positive modulus with canonical and balanced residue views.
class Modulus {
 public:
  explicit Modulus(Integer value);

  const Integer& value() const noexcept { return value_; }

  /// Canonical representative of x in [0, value).
  Integer reduce(const Integer& x) const;

  /// Balanced representative of x in (-value/2, value/2].
  Integer balanced(const Integer& x) const;

  bool congruent(const Integer& a, const Integer& b) const;
  bool divides(const Integer& x) const;

 private:
  Integer value_;
};

/// n!/(k!(n-k)!) for 0 <= k <= n, 0 outside that range. Negative n is a
/// usage error. Rows are cached so sweeps over k cost one row build.
Integer binomial(const Integer& n, const Integer& k);
Integer binomial(long n, long k);

/// Shared row of Pascal's triangle: row(n)[k] == C(n,k), length n+1.
std::shared_ptr<const std::vector<Integer>> binomial_row(std::size_t n);

/// n!/(k_1! ... k_m!). parts must be nonnegative and sum to n.
Integer multinomial(const Integer& n, const std::vector<Integer>& parts);

/// Unique b in [0, m) with a*b == 1 (mod m). Non-coprime input throws
/// std::domain_error (signals a misuse such as p dividing a denominator).
Integer mod_inverse(const Integer& a, const Modulus& m);

/// a^e reduced to [0, m), e >= 0.
Integer mod_pow(const Integer& a, const Integer& e, const Modulus& m);

/// Legendre symbol (p/3) for a prime p > 3: +1 if p == 1 (mod 3), else -1.
int legendre3(const Integer& p);

/// Deterministic trial division; exact for all inputs, desk-scale speed.
bool is_prime(const Integer& n);

/// Ascending primes <= limit, limit >= 2.
std::vector<Integer> primes_up_to(const Integer& limit);

/// True iff n == 2^a for some a >= 0 (n == 1 counts).
bool is_power_of_two(const Integer& n);

/// num/den with the divisibility asserted; a remainder throws ExactnessError.
Integer exact_div(const Integer& num, const Integer& den);

/// C(2k,k)/(k+1), integrality asserted via exact_div.
Integer catalan(long k);

/// a^e for e >= 0 (plain integer power, no modulus).
Integer int_pow(const Integer& a, unsigned long e);

}  // namespace franel
