#pragma once

#include "franel/verdict.hpp"

namespace franel {

// Exact integer (or polynomial-coefficient) identity checks. Each verifier
// recomputes both sides independently and returns a Verdict with kind
// CheckKind::identity; none of them consults a modulus.

// Coefficient-wise equality of the two cube-sum polynomial forms, n >= 0.
Verdict verify_foata(long n);

// f_n against the double-binomial single sum with powers of 2, n >= 0.
Verdict verify_mac(long n);

// Second-derivative companion of verify_mac in 4-cleared integer form:
// 4 * sum_k C(n,k)^3 k(k-1) against the weighted single sum, n >= 0.
Verdict verify_mac2(long n);

// Alternating partial-sum telescoping step, 0 <= 2k <= n (else usage error):
// sum_{l=2k}^{n-1} (-1)^l (3l+2) C(l+k,3k) 2^(l-2k)
//   = (-1)^(n-1) (n-2k) C(n+k,3k) 2^(n-2k).
Verdict verify_induc(long n, long k);

// Alternating weighted Franel partial sum against its single-sum form, n >= 1.
Verdict verify_sum1(long n);

// Same partial sum against the fully cleared 2n^2 * [...] form, n >= 1;
// relies on f_n being even for n >= 1 (violation throws ExactnessError).
Verdict verify_sum2(long n);

// which = 1: f_n = sum_k C(n,k)^2 C(2k,n);
// which = 2: sum_k C(n,k)^2 C(n+k,k)^2 = sum_{k,j} C(n,k) C(n+k,k) C(k,j)^3.
// n >= 0; other which values are a usage error.
Verdict verify_strehl(long n, int which);

// Three closed forms for weighted partial sums (n >= 1), reported as
// sub-checks holds_a, holds_b, holds_c in params:
//   (a) sum_{k<n} (3k+2)(k+1)        = n^3 + n^2
//   (b) sum_{k<n} (-1)^k (3k+2) 2^k  = (-1)^(n-1) 2^n n
//   (c) sum_{k<n} (3k+2) C(2k,k)     = n C(2n,n)
Verdict verify_closed_forms(long n);

// Four multinomial-power-sum closed forms (m >= 1, n >= 1, r >= 0), reported
// as sub-checks holds_mnr1..holds_mnr4 in params:
//   (1) sum_{k<n} ((m+1)k+m) M_{m,k}^(0)        = m n C(m+n-1,m)
//   (2) sum_{k<n} (-1)^k ((m+1)k+m) M_{m,k}^(1) = (-1)^(n-1) m^n n
//   (3) sum_{k<n} (2k+1) M_{1,k}^(2r)           = n^2
//   (4) sum_{k<n} (-1)^k (2k+1) M_{1,k}^(2r+1)  = (-1)^(n-1) n
Verdict verify_mnr_identities(long m, long n, long r);

// sum_{k<n} (4k+3) M_{3,k}^(2) = 3n^2 sum_{k<n} Catalan(k) C(n-1,k)^2, n >= 1.
Verdict verify_sunmk3(long n);

// Cube-sum row split (n >= 1, checked for every integer, not only primes):
// sum_k C(n-1,k)^3 = sum_k C(n,k)^3 - sum_k C(n-1,k-1)^3
//                    - 3 sum_k C(n,k) C(n-1,k) C(n-1,k-1).
Verdict verify_cube_split(long n);

// Row-reflection symmetry (n >= 1), two equalities reported as holds_sym and
// holds_double: sum C(n-1,k) C(n-1,k-1)^2 = sum C(n-1,k)^2 C(n-1,k-1) and
// twice that common value = sum_k C(n,k) C(n-1,k) C(n-1,k-1).
Verdict verify_half_symmetry(long n);

}  // namespace franel
