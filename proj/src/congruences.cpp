#include "franel/congruences.hpp"

#include <utility>

#include "franel/sequences.hpp"

namespace franel {

namespace {

void require_prime_gt3(long p, const char* who) {
  if (p <= 3 || !is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": p must be a prime greater than 3");
  }
}

const Integer& at(const std::vector<Integer>& row, long k) {
  static const Integer zero = 0;
  if (k < 0 || k >= static_cast<long>(row.size())) {
    return zero;
  }
  return row[static_cast<std::size_t>(k)];
}

Verdict residue_verdict(std::string name, CheckKind kind, std::map<std::string, Integer> params,
                        const Integer& lhs_exact, const Integer& rhs_exact, Modulus modulus) {
  Verdict v;
  v.check_name = std::move(name);
  v.kind = kind;
  v.params = std::move(params);
  v.lhs = modulus.reduce(lhs_exact);
  v.rhs = modulus.reduce(rhs_exact);
  v.lhs_exact = lhs_exact;
  v.modulus = std::move(modulus);
  v.holds = (v.lhs == v.rhs);
  return v;
}

// Parity of r*k without forming the product.
bool rk_odd(long r, long k) { return (r & 1) && (k & 1); }

}  // namespace

Verdict thm_alternating_sum(long n) {
  if (n < 1) {
    throw std::invalid_argument("thm_alternating_sum: n must be >= 1");
  }
  return residue_verdict("alternating_sum", CheckKind::theorem, {{"n", n}},
                         franel_alternating_sum(n), 0, Modulus(2 * Integer(n) * n));
}

Verdict thm_refined(long n) {
  if (n < 1) {
    throw std::invalid_argument("thm_refined: n must be >= 1");
  }
  Integer expected = is_power_of_two(n) ? 2 * Integer(n) * n : Integer(0);
  return residue_verdict("refined", CheckKind::theorem, {{"n", n}}, franel_alternating_sum(n),
                         expected, Modulus(4 * Integer(n) * n));
}

Verdict thm_p5(long p) {
  require_prime_gt3(p, "thm_p5");
  Integer mersenne = (Integer(1) << static_cast<unsigned>(p)) - 1;
  Integer rhs = 2 * Integer(p) * p * mersenne * mersenne;
  return residue_verdict("p5", CheckKind::theorem, {{"p", p}}, franel_alternating_sum(p), rhs,
                         Modulus(int_pow(Integer(p), 5)));
}

Verdict verify_p5_decomposition(long p) {
  require_prime_gt3(p, "verify_p5_decomposition");
  Integer quotient = exact_div(franel_alternating_sum(p), 2 * Integer(p) * p);

  auto row_p = binomial_row(static_cast<std::size_t>(p));
  auto row_q = binomial_row(static_cast<std::size_t>(p - 1));
  Integer mixed = 0, sym = 0, cubes = 0;
  for (long k = 0; k <= p; ++k) {
    const Integer& b = at(*row_q, k - 1);
    mixed += at(*row_p, k) * b * b;
    sym += at(*row_q, k) * b * b;
    cubes += b * b * b;
  }
  Integer rhs_first = 2 * mixed - 1;
  Integer rhs_second = 2 * sym + 2 * cubes - 1;

  Modulus modulus(int_pow(Integer(p), 3));
  const bool h1 = modulus.congruent(quotient, rhs_first);
  const bool h2 = modulus.congruent(quotient, rhs_second);

  Verdict v;
  v.check_name = "p5_decomposition";
  v.kind = CheckKind::lemma;
  v.params["p"] = p;
  v.params["holds_first"] = h1 ? 1 : 0;
  v.params["holds_second"] = h2 ? 1 : 0;
  v.lhs = modulus.reduce(quotient);
  v.rhs = modulus.reduce(h1 ? rhs_second : rhs_first);
  v.lhs_exact = std::move(quotient);
  v.modulus = std::move(modulus);
  v.holds = h1 && h2;
  return v;
}

Verdict lemma_sun(long p) {
  require_prime_gt3(p, "lemma_sun");
  Integer q = (Integer(1) << static_cast<unsigned>(p - 1)) - 1;
  Integer rhs = 1 + 3 * q + 3 * q * q;
  return residue_verdict("lemma_sun", CheckKind::lemma, {{"p", p}}, franel(p - 1), rhs,
                         Modulus(int_pow(Integer(p), 3)));
}

Verdict lemma_sunvar(long p) {
  require_prime_gt3(p, "lemma_sunvar");
  auto row = binomial_row(static_cast<std::size_t>(p - 1));
  Integer lhs = 0;
  for (long k = 1; k < p; ++k) {
    const Integer& b = (*row)[static_cast<std::size_t>(k - 1)];
    lhs += (*row)[static_cast<std::size_t>(k)] * b * b;
  }
  Integer rhs = (Integer(1) << static_cast<unsigned>(p - 1))
              - (Integer(1) << static_cast<unsigned>(2 * p - 2));
  return residue_verdict("lemma_sunvar", CheckKind::lemma, {{"p", p}}, lhs, rhs,
                         Modulus(int_pow(Integer(p), 3)));
}

Verdict lemma_sun2(long p) {
  require_prime_gt3(p, "lemma_sun2");
  auto row_p = binomial_row(static_cast<std::size_t>(p));
  auto row_q = binomial_row(static_cast<std::size_t>(p - 1));
  Integer lhs = 0;
  for (long k = 0; k <= p; ++k) {
    lhs += at(*row_p, k) * at(*row_q, k) * at(*row_q, k - 1);
  }
  Integer rhs = (Integer(1) << static_cast<unsigned>(p))
              - (Integer(1) << static_cast<unsigned>(2 * p - 1));
  return residue_verdict("lemma_sun2", CheckKind::lemma, {{"p", p}}, lhs, rhs,
                         Modulus(int_pow(Integer(p), 3)));
}

Verdict lemma_fpmod(long p) {
  require_prime_gt3(p, "lemma_fpmod");
  auto row = binomial_row(static_cast<std::size_t>(p));
  Integer lhs = 0;
  for (const Integer& c : *row) {
    lhs += c * c * c;
  }
  return residue_verdict("lemma_fpmod", CheckKind::lemma, {{"p", p}}, lhs, 2,
                         Modulus(int_pow(Integer(p), 3)));
}

Verdict jarvis_verrill(long p, long n) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument(
        "jarvis_verrill: p must be an odd prime (the relation fails at p = 2, n = 0)");
  }
  if (n < 0 || n > p - 1) {
    throw std::invalid_argument("jarvis_verrill: n must lie in [0, p-1]");
  }
  Integer rhs = int_pow(Integer(-8), static_cast<unsigned long>(n)) * franel(p - 1 - n);
  return residue_verdict("jarvis_verrill", CheckKind::theorem, {{"p", p}, {"n", n}}, franel(n),
                         rhs, Modulus(p));
}

Verdict sun_intro(long p, int moment) {
  require_prime_gt3(p, "sun_intro");
  if (moment < 0 || moment > 2) {
    throw std::invalid_argument("sun_intro: moment must be 0, 1, or 2");
  }
  auto prefix = family_prefix(FamilyKey{Family::franel, 0, 0}, p);
  Integer sum = 0;
  for (long k = 0; k < p; ++k) {
    Integer term = int_pow(Integer(k), static_cast<unsigned long>(moment))
                 * (*prefix)[static_cast<std::size_t>(k)];
    if (k & 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }

  Modulus modulus(Integer(p) * p);
  Integer eps = legendre3(p);
  Integer rhs;
  switch (moment) {
    case 0: rhs = modulus.reduce(eps); break;
    case 1: rhs = modulus.reduce(-2 * mod_inverse(3, modulus) * eps); break;
    default: rhs = modulus.reduce(10 * mod_inverse(27, modulus) * eps); break;
  }

  Verdict v;
  v.check_name = "sun_intro";
  v.kind = CheckKind::theorem;
  v.params["p"] = p;
  v.params["moment"] = moment;
  v.lhs = modulus.reduce(sum);
  v.rhs = std::move(rhs);
  v.lhs_exact = std::move(sum);
  v.modulus = std::move(modulus);
  v.holds = (v.lhs == v.rhs);
  return v;
}

Verdict franel_mod4(long n) {
  if (n < 1) {
    throw std::invalid_argument("franel_mod4: n must be >= 1");
  }
  Integer expected = is_power_of_two(n) ? 2 : 0;
  return residue_verdict("franel_mod4", CheckKind::theorem, {{"n", n}}, franel(n), expected,
                         Modulus(4));
}

Verdict gz_congruence(long n, long r) {
  if (n < 1 || r < 0) {
    throw std::invalid_argument("gz_congruence: requires n >= 1, r >= 0");
  }
  return residue_verdict("gz", CheckKind::theorem, {{"n", n}, {"r", r}}, power_sum(n, 2 * r), 0,
                         Modulus(n + 1));
}

Verdict calkin_congruence(long n, long m, long r) {
  if (n < 1 || m < 1 || r < 1) {
    throw std::invalid_argument("calkin_congruence: requires n, m, r >= 1");
  }
  // Window n/m < p < (n+1)/m + (n+1-m)/(m(2mr-1)); both comparisons are done
  // cross-multiplied. The right bound over the common denominator m(2mr-1)
  // has numerator (n+1)(2mr-1) + (n+1-m).
  const long denom = m * (2 * m * r - 1);
  const long numer = (n + 1) * (2 * m * r - 1) + (n + 1 - m);
  const long sieve_bound = numer >= 1 ? (numer - 1) / denom : 0;
  std::vector<Integer> window;
  if (sieve_bound >= 2) {
    for (const Integer& p : primes_up_to(sieve_bound)) {
      if (m * p > n && p * denom < numer) {
        window.push_back(p);
      }
    }
  }

  Verdict v;
  v.check_name = "calkin";
  v.kind = CheckKind::theorem;
  v.params["n"] = n;
  v.params["m"] = m;
  v.params["r"] = r;
  v.params["prime_count"] = static_cast<long>(window.size());
  v.params["p_min"] = window.empty() ? Integer(0) : window.front();
  v.params["p_max"] = window.empty() ? Integer(0) : window.back();

  Integer value = power_sum(n, 2 * r);
  if (window.empty()) {
    v.modulus = Modulus(1);
    v.lhs = 0;
    v.rhs = 0;
    v.lhs_exact = std::move(value);
    v.holds = true;
    v.vacuous = true;
    return v;
  }
  Integer product = 1;
  for (const Integer& p : window) {
    product *= p;
  }
  Modulus modulus(std::move(product));
  v.lhs = modulus.reduce(value);
  v.rhs = 0;
  v.lhs_exact = std::move(value);
  v.modulus = std::move(modulus);
  v.holds = (v.lhs == 0);
  return v;
}

Verdict conj1_check(long n, long r) {
  if (n < 1 || r < 0) {
    throw std::invalid_argument("conj1_check: requires n >= 1, r >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::powersum, 0, r}, n);
  Integer sum = 0;
  for (long k = 0; k < n; ++k) {
    Integer term = (3 * k + 2) * (*prefix)[static_cast<std::size_t>(k)];
    if (rk_odd(r, k)) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return residue_verdict("conj1", CheckKind::conjecture, {{"n", n}, {"r", r}}, sum, 0,
                         Modulus(2 * Integer(n)));
}

Verdict conj1_odd_strong(long n, long r) {
  if (n < 2 || r < 0) {
    throw std::invalid_argument("conj1_odd_strong: requires n >= 2, r >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::powersum, 0, 2 * r + 1}, n);
  Integer sum = 0;
  for (long k = 0; k < n; ++k) {
    Integer term = (3 * k + 2) * (*prefix)[static_cast<std::size_t>(k)];
    if (k & 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return residue_verdict("conj1_odd", CheckKind::conjecture, {{"n", n}, {"r", r}}, sum, 0,
                         Modulus(4 * Integer(n)));
}

Verdict conj1_even_combined(long n, long r) {
  if (n < 1 || r < 1) {
    throw std::invalid_argument("conj1_even_combined: requires n >= 1, r >= 1");
  }
  auto prefix = family_prefix(FamilyKey{Family::powersum, 0, 2 * r}, n);
  Integer sum = 0;
  for (long k = 0; k < n; ++k) {
    sum += (3 * k + 2) * (*prefix)[static_cast<std::size_t>(k)];
  }
  return residue_verdict("conj1_even", CheckKind::conjecture, {{"n", n}, {"r", r}}, sum, 0,
                         Modulus(Integer(n) * (n + 1)));
}

Verdict conj2_check(long m, long n, long r) {
  if (m < 1 || n < 1 || r < 0) {
    throw std::invalid_argument("conj2_check: requires m >= 1, n >= 1, r >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::multinomial, m, r}, n);
  Integer sum = 0;
  for (long k = 0; k < n; ++k) {
    Integer term = (Integer(m + 1) * k + m) * (*prefix)[static_cast<std::size_t>(k)];
    if (rk_odd(r, k)) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return residue_verdict("conj2", CheckKind::conjecture, {{"m", m}, {"n", n}, {"r", r}}, sum, 0,
                         Modulus(Integer(m) * n));
}

}  // namespace franel
