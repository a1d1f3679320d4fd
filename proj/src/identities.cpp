#include "franel/identities.hpp"

#include <utility>

#include "franel/polynomial.hpp"
#include "franel/sequences.hpp"

namespace franel {

namespace {

Integer sign(long exponent) {
  return (exponent & 1) ? Integer(-1) : Integer(1);
}

// Row lookup that reads as C(n,k): zero outside [0, row size).
const Integer& at(const std::vector<Integer>& row, long k) {
  static const Integer zero = 0;
  if (k < 0 || k >= static_cast<long>(row.size())) {
    return zero;
  }
  return row[static_cast<std::size_t>(k)];
}

Verdict exact_verdict(std::string name, std::map<std::string, Integer> params, Integer lhs,
                      Integer rhs) {
  Verdict v;
  v.check_name = std::move(name);
  v.kind = CheckKind::identity;
  v.params = std::move(params);
  v.holds = (lhs == rhs);
  v.lhs = std::move(lhs);
  v.rhs = std::move(rhs);
  return v;
}

}  // namespace

Verdict verify_foata(long n) {
  if (n < 0) {
    throw std::invalid_argument("verify_foata: n must be >= 0");
  }
  IntPoly lhs = foata_lhs(n);
  IntPoly rhs = foata_rhs(n);

  Verdict v;
  v.check_name = "foata";
  v.kind = CheckKind::identity;
  v.params["n"] = n;
  v.holds = (lhs == rhs);
  if (v.holds) {
    v.lhs = v.rhs = poly_eval(lhs, 1);
  } else {
    long top = std::max(lhs.degree(), rhs.degree());
    for (long i = 0; i <= top; ++i) {
      if (lhs.coeff(i) != rhs.coeff(i)) {
        v.params["first_diff_index"] = i;
        v.lhs = lhs.coeff(i);
        v.rhs = rhs.coeff(i);
        break;
      }
    }
  }
  return v;
}

Verdict verify_mac(long n) {
  if (n < 0) {
    throw std::invalid_argument("verify_mac: n must be >= 0");
  }
  return exact_verdict("mac", {{"n", n}}, franel(n, FranelMethod::direct),
                       franel(n, FranelMethod::macmahon));
}

Verdict verify_mac2(long n) {
  if (n < 0) {
    throw std::invalid_argument("verify_mac2: n must be >= 0");
  }
  auto row = binomial_row(static_cast<std::size_t>(n));
  Integer lhs = 0;
  for (long k = 2; k <= n; ++k) {
    const Integer& c = at(*row, k);
    lhs += c * c * c * k * (k - 1);
  }
  lhs *= 4;

  Integer rhs = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    Integer term = binomial(n + k, 3 * k) * binomial(3 * k, 2 * k) * binomial(2 * k, k)
                 * (Integer(n) * (n - 1) - 2 * k);
    rhs += term << static_cast<unsigned>(n - 2 * k);
  }
  return exact_verdict("mac2", {{"n", n}}, std::move(lhs), std::move(rhs));
}

Verdict verify_induc(long n, long k) {
  if (k < 0 || 2 * k > n) {
    throw std::invalid_argument("verify_induc: requires 0 <= 2k <= n");
  }
  Integer lhs = 0;
  for (long l = 2 * k; l < n; ++l) {
    Integer term = (3 * l + 2) * binomial(l + k, 3 * k);
    lhs += sign(l) * (term << static_cast<unsigned>(l - 2 * k));
  }
  Integer rhs = sign(n - 1) * (n - 2 * k) * binomial(n + k, 3 * k);
  rhs <<= static_cast<unsigned>(n - 2 * k);
  return exact_verdict("induc", {{"n", n}, {"k", k}}, std::move(lhs), std::move(rhs));
}

Verdict verify_sum1(long n) {
  if (n < 1) {
    throw std::invalid_argument("verify_sum1: n must be >= 1");
  }
  Integer rhs = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    Integer term = (n - 2 * k) * binomial(n + k, 3 * k) * binomial(3 * k, 2 * k)
                 * binomial(2 * k, k);
    rhs += term << static_cast<unsigned>(n - 2 * k);
  }
  rhs *= sign(n - 1);
  return exact_verdict("sum1", {{"n", n}}, franel_alternating_sum(n), std::move(rhs));
}

Verdict verify_sum2(long n) {
  if (n < 1) {
    throw std::invalid_argument("verify_sum2: n must be >= 1");
  }
  Integer half = exact_div(franel(n), 2);
  auto row_n = binomial_row(static_cast<std::size_t>(n));
  auto row_n1 = binomial_row(static_cast<std::size_t>(n - 1));
  Integer inner = 0;
  for (long k = 1; k <= n; ++k) {
    const Integer& b = at(*row_n1, k - 1);
    inner += at(*row_n, k) * b * b;
  }
  Integer rhs = 2 * Integer(n) * n * (sign(n - 1) * 2 * inner + sign(n) * half);
  return exact_verdict("sum2", {{"n", n}}, franel_alternating_sum(n), std::move(rhs));
}

Verdict verify_strehl(long n, int which) {
  if (n < 0) {
    throw std::invalid_argument("verify_strehl: n must be >= 0");
  }
  if (which != 1 && which != 2) {
    throw std::invalid_argument("verify_strehl: which must be 1 or 2");
  }
  auto row = binomial_row(static_cast<std::size_t>(n));
  if (which == 1) {
    Integer rhs = 0;
    for (long k = 0; k <= n; ++k) {
      const Integer& c = at(*row, k);
      rhs += c * c * binomial(2 * k, n);
    }
    return exact_verdict("strehl1", {{"n", n}}, franel(n, FranelMethod::direct), std::move(rhs));
  }
  Integer lhs = 0;
  Integer rhs = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer& c = at(*row, k);
    Integer shifted = binomial(n + k, k);
    lhs += c * c * shifted * shifted;
    auto row_k = binomial_row(static_cast<std::size_t>(k));
    Integer cubes = 0;
    for (const Integer& b : *row_k) {
      cubes += b * b * b;
    }
    rhs += c * shifted * cubes;
  }
  return exact_verdict("strehl2", {{"n", n}}, std::move(lhs), std::move(rhs));
}

Verdict verify_closed_forms(long n) {
  if (n < 1) {
    throw std::invalid_argument("verify_closed_forms: n must be >= 1");
  }
  Integer lhs_a = 0, lhs_b = 0, lhs_c = 0;
  for (long k = 0; k < n; ++k) {
    lhs_a += Integer(3 * k + 2) * (k + 1);
    lhs_b += sign(k) * (Integer(3 * k + 2) << static_cast<unsigned>(k));
    lhs_c += (3 * k + 2) * binomial(2 * k, k);
  }
  Integer rhs_a = Integer(n) * n * (n + 1);
  Integer rhs_b = sign(n - 1) * n * (Integer(1) << static_cast<unsigned>(n));
  Integer rhs_c = n * binomial(2 * n, n);

  Verdict v;
  v.check_name = "closed_forms";
  v.kind = CheckKind::identity;
  v.params["n"] = n;
  v.params["holds_a"] = (lhs_a == rhs_a) ? 1 : 0;
  v.params["holds_b"] = (lhs_b == rhs_b) ? 1 : 0;
  v.params["holds_c"] = (lhs_c == rhs_c) ? 1 : 0;
  v.holds = (lhs_a == rhs_a) && (lhs_b == rhs_b) && (lhs_c == rhs_c);
  if (lhs_a != rhs_a) {
    v.lhs = std::move(lhs_a), v.rhs = std::move(rhs_a);
  } else if (lhs_b != rhs_b) {
    v.lhs = std::move(lhs_b), v.rhs = std::move(rhs_b);
  } else if (lhs_c != rhs_c) {
    v.lhs = std::move(lhs_c), v.rhs = std::move(rhs_c);
  } else {
    v.lhs = std::move(lhs_a), v.rhs = std::move(rhs_a);
  }
  return v;
}

Verdict verify_mnr_identities(long m, long n, long r) {
  if (m < 1 || n < 1 || r < 0) {
    throw std::invalid_argument("verify_mnr_identities: requires m >= 1, n >= 1, r >= 0");
  }
  auto m0 = family_prefix(FamilyKey{Family::multinomial, m, 0}, n);
  auto m1 = family_prefix(FamilyKey{Family::multinomial, m, 1}, n);
  auto even = family_prefix(FamilyKey{Family::multinomial, 1, 2 * r}, n);
  auto odd = family_prefix(FamilyKey{Family::multinomial, 1, 2 * r + 1}, n);

  Integer lhs1 = 0, lhs2 = 0, lhs3 = 0, lhs4 = 0;
  for (long k = 0; k < n; ++k) {
    Integer weight = Integer(m + 1) * k + m;
    lhs1 += weight * (*m0)[static_cast<std::size_t>(k)];
    lhs2 += sign(k) * weight * (*m1)[static_cast<std::size_t>(k)];
    lhs3 += (2 * k + 1) * (*even)[static_cast<std::size_t>(k)];
    lhs4 += sign(k) * (2 * k + 1) * (*odd)[static_cast<std::size_t>(k)];
  }
  Integer rhs1 = Integer(m) * n * binomial(m + n - 1, m);
  Integer rhs2 = sign(n - 1) * n * int_pow(Integer(m), static_cast<unsigned long>(n));
  Integer rhs3 = Integer(n) * n;
  Integer rhs4 = sign(n - 1) * n;

  Verdict v;
  v.check_name = "mnr";
  v.kind = CheckKind::identity;
  v.params["m"] = m;
  v.params["n"] = n;
  v.params["r"] = r;
  const bool h1 = lhs1 == rhs1, h2 = lhs2 == rhs2, h3 = lhs3 == rhs3, h4 = lhs4 == rhs4;
  v.params["holds_mnr1"] = h1 ? 1 : 0;
  v.params["holds_mnr2"] = h2 ? 1 : 0;
  v.params["holds_mnr3"] = h3 ? 1 : 0;
  v.params["holds_mnr4"] = h4 ? 1 : 0;
  v.holds = h1 && h2 && h3 && h4;
  if (!h1) {
    v.lhs = std::move(lhs1), v.rhs = std::move(rhs1);
  } else if (!h2) {
    v.lhs = std::move(lhs2), v.rhs = std::move(rhs2);
  } else if (!h3) {
    v.lhs = std::move(lhs3), v.rhs = std::move(rhs3);
  } else if (!h4) {
    v.lhs = std::move(lhs4), v.rhs = std::move(rhs4);
  } else {
    v.lhs = std::move(lhs1), v.rhs = std::move(rhs1);
  }
  return v;
}

Verdict verify_sunmk3(long n) {
  if (n < 1) {
    throw std::invalid_argument("verify_sunmk3: n must be >= 1");
  }
  auto m32 = family_prefix(FamilyKey{Family::multinomial, 3, 2}, n);
  Integer lhs = 0;
  for (long k = 0; k < n; ++k) {
    lhs += (4 * k + 3) * (*m32)[static_cast<std::size_t>(k)];
  }
  auto row = binomial_row(static_cast<std::size_t>(n - 1));
  Integer inner = 0;
  for (long k = 0; k < n; ++k) {
    const Integer& c = at(*row, k);
    inner += catalan(k) * c * c;
  }
  Integer rhs = 3 * Integer(n) * n * inner;
  return exact_verdict("sunmk3", {{"n", n}}, std::move(lhs), std::move(rhs));
}

Verdict verify_cube_split(long n) {
  if (n < 1) {
    throw std::invalid_argument("verify_cube_split: n must be >= 1");
  }
  auto row_n = binomial_row(static_cast<std::size_t>(n));
  auto row_p = binomial_row(static_cast<std::size_t>(n - 1));
  Integer lhs = 0, cubes_n = 0, cubes_shift = 0, mixed = 0;
  for (long k = 0; k <= n; ++k) {
    const Integer& a = at(*row_p, k);
    const Integer& b = at(*row_p, k - 1);
    const Integer& c = at(*row_n, k);
    lhs += a * a * a;
    cubes_n += c * c * c;
    cubes_shift += b * b * b;
    mixed += c * a * b;
  }
  Integer rhs = cubes_n - cubes_shift - 3 * mixed;
  return exact_verdict("cube_split", {{"n", n}}, std::move(lhs), std::move(rhs));
}

Verdict verify_half_symmetry(long n) {
  if (n < 1) {
    throw std::invalid_argument("verify_half_symmetry: n must be >= 1");
  }
  auto row_p = binomial_row(static_cast<std::size_t>(n - 1));
  auto row_n = binomial_row(static_cast<std::size_t>(n));
  Integer left = 0, right = 0, full = 0;
  for (long k = 1; k < n; ++k) {
    const Integer& a = at(*row_p, k);
    const Integer& b = at(*row_p, k - 1);
    left += a * b * b;
    right += a * a * b;
  }
  for (long k = 0; k <= n; ++k) {
    full += at(*row_n, k) * at(*row_p, k) * at(*row_p, k - 1);
  }
  const bool h_sym = left == right;
  const bool h_double = 2 * left == full;

  Verdict v;
  v.check_name = "half_symmetry";
  v.kind = CheckKind::identity;
  v.params["n"] = n;
  v.params["holds_sym"] = h_sym ? 1 : 0;
  v.params["holds_double"] = h_double ? 1 : 0;
  v.holds = h_sym && h_double;
  if (!h_sym) {
    v.lhs = std::move(left), v.rhs = std::move(right);
  } else if (!h_double) {
    v.lhs = 2 * left, v.rhs = std::move(full);
  } else {
    v.lhs = std::move(left), v.rhs = std::move(right);
  }
  return v;
}

}  // namespace franel
