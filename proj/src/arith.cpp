#include "franel/arith.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace franel {

namespace {

// Rows above this are computed per call instead of cached; nothing in the
// workbench's sweeps goes anywhere near it.
constexpr std::size_t kMaxCachedRow = 1u << 16;

std::mutex row_mutex;
std::unordered_map<std::size_t, std::shared_ptr<const std::vector<Integer>>> row_cache;

std::shared_ptr<const std::vector<Integer>> build_row(std::size_t n) {
  auto row = std::make_shared<std::vector<Integer>>();
  row->reserve(n + 1);
  row->emplace_back(1);
  // Multiplicative stepping: C(n,k) = C(n,k-1) * (n-k+1) / k, division exact.
  for (std::size_t k = 1; k <= n; ++k) {
    Integer next = (*row)[k - 1] * Integer(n - k + 1);
    row->push_back(exact_div(next, Integer(k)));
  }
  return row;
}

Integer binomial_direct(const Integer& n, const Integer& k) {
  Integer kk = std::min(k, Integer(n - k));
  if (kk > 50'000'000) {
    throw std::invalid_argument("binomial: arguments beyond supported range");
  }
  Integer result = 1;
  for (Integer i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    result = exact_div(result, i);
  }
  return result;
}

}  // namespace

Modulus::Modulus(Integer value) : value_(std::move(value)) {
  if (value_ < 1) {
    throw std::invalid_argument("Modulus: value must be >= 1");
  }
}

Integer Modulus::reduce(const Integer& x) const {
  Integer r = x % value_;
  if (r < 0) {
    r += value_;
  }
  return r;
}

Integer Modulus::balanced(const Integer& x) const {
  Integer r = reduce(x);
  if (2 * r > value_) {
    r -= value_;
  }
  return r;
}

bool Modulus::congruent(const Integer& a, const Integer& b) const {
  return reduce(a) == reduce(b);
}

bool Modulus::divides(const Integer& x) const { return x % value_ == 0; }

std::shared_ptr<const std::vector<Integer>> binomial_row(std::size_t n) {
  {
    std::lock_guard<std::mutex> lock(row_mutex);
    auto it = row_cache.find(n);
    if (it != row_cache.end()) {
      return it->second;
    }
  }
  auto row = build_row(n);
  std::lock_guard<std::mutex> lock(row_mutex);
  auto [it, inserted] = row_cache.emplace(n, row);
  return it->second;  // idempotent fill: first writer wins
}

Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: n must be nonnegative");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  if (n <= kMaxCachedRow) {
    auto row = binomial_row(static_cast<std::size_t>(n));
    return (*row)[static_cast<std::size_t>(k)];
  }
  return binomial_direct(n, k);
}

Integer binomial(long n, long k) { return binomial(Integer(n), Integer(k)); }

Integer multinomial(const Integer& n, const std::vector<Integer>& parts) {
  if (n < 0) {
    throw std::invalid_argument("multinomial: n must be nonnegative");
  }
  Integer sum = 0;
  for (const Integer& part : parts) {
    if (part < 0) {
      throw std::invalid_argument("multinomial: parts must be nonnegative");
    }
    sum += part;
  }
  if (sum != n) {
    throw std::invalid_argument("multinomial: parts must sum to n");
  }
  Integer result = 1;
  Integer remaining = n;
  for (const Integer& part : parts) {
    result *= binomial(remaining, part);
    remaining -= part;
  }
  return result;
}

Integer mod_inverse(const Integer& a, const Modulus& m) {
  // Extended Euclid on (a mod M, M).
  Integer r0 = m.reduce(a), r1 = m.value();
  Integer s0 = 1, s1 = 0;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != 1) {
    throw std::domain_error("mod_inverse: arguments are not coprime");
  }
  return m.reduce(s0);
}

Integer mod_pow(const Integer& a, const Integer& e, const Modulus& m) {
  if (e < 0) {
    throw std::invalid_argument("mod_pow: exponent must be nonnegative");
  }
  Integer base = m.reduce(a);
  Integer exp = e;
  Integer result = m.reduce(1);
  while (exp > 0) {
    if ((exp & 1) != 0) {
      result = m.reduce(result * base);
    }
    base = m.reduce(base * base);
    exp >>= 1;
  }
  return result;
}

int legendre3(const Integer& p) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument("legendre3: p must be a prime greater than 3");
  }
  return p % 3 == 1 ? 1 : -1;
}

bool is_prime(const Integer& n) {
  if (n < 2) {
    return false;
  }
  if (n < 4) {
    return true;
  }
  if (n % 2 == 0) {
    return false;
  }
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

std::vector<Integer> primes_up_to(const Integer& limit) {
  if (limit < 2) {
    throw std::invalid_argument("primes_up_to: limit must be >= 2");
  }
  std::vector<Integer> primes;
  for (Integer n = 2; n <= limit; ++n) {
    if (is_prime(n)) {
      primes.push_back(n);
    }
  }
  return primes;
}

bool is_power_of_two(const Integer& n) {
  if (n < 1) {
    throw std::invalid_argument("is_power_of_two: n must be >= 1");
  }
  return (n & (n - 1)) == 0;
}

Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw ExactnessError("exact_div: division by zero");
  }
  Integer q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw ExactnessError("exact_div: " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

Integer catalan(long k) {
  return exact_div(binomial(2 * k, k), Integer(k + 1));
}

Integer int_pow(const Integer& a, unsigned long e) {
  if (e == 0) {
    return 1;
  }
  return boost::multiprecision::pow(a, static_cast<unsigned>(e));
}

}  // namespace franel
