#pragma once

#include "franel/verdict.hpp"

namespace franel {

// Residue checks. Every sum is accumulated exactly and reduced once at the
// end; verdict lhs/rhs are canonical residues in [0, M) and lhs_exact keeps
// the unreduced sum. Checks requiring a prime (or a prime > 3) throw
// std::invalid_argument when handed anything else — that is a usage error,
// not a counterexample.

// sum_{k<n} (-1)^k (3k+2) f_k == 0 (mod 2n^2), n >= 1.
Verdict thm_alternating_sum(long n);

// The same sum mod 4n^2 is 2n^2 when n is a power of two, else 0, n >= 1.
Verdict thm_refined(long n);

// The same sum at n = p is 2p^2 (2^p - 1)^2 (mod p^5), p prime > 3.
Verdict thm_p5(long p);

// Two decomposition steps behind thm_p5, each mod p^3 (p prime > 3):
// S(p)/(2p^2), whose exactness is asserted, equals both
//   2 sum_k C(p,k) C(p-1,k-1)^2 - 1   and
//   2 sum_k C(p-1,k) C(p-1,k-1)^2 + 2 sum_k C(p-1,k-1)^3 - 1,
// all sums over the full row k = 0..p. Reported as holds_first/holds_second.
Verdict verify_p5_decomposition(long p);

// f_{p-1} == 1 + 3q + 3q^2 (mod p^3) with q = 2^(p-1) - 1, p prime > 3.
Verdict lemma_sun(long p);

// sum_{k=1}^{p-1} C(p-1,k) C(p-1,k-1)^2 == 2^(p-1) - 2^(2p-2) (mod p^3).
Verdict lemma_sunvar(long p);

// sum_{k=0}^{p} C(p,k) C(p-1,k) C(p-1,k-1) == 2^p - 2^(2p-1) (mod p^3).
Verdict lemma_sun2(long p);

// sum_{k=0}^{p} C(p,k)^3 == 2 (mod p^3), p prime > 3.
Verdict lemma_fpmod(long p);

// f_n == (-8)^n f_{p-1-n} (mod p) for odd primes p and 0 <= n <= p-1.
// p = 2 is rejected: the relation already fails there at n = 0.
Verdict jarvis_verrill(long p, long n);

// Moment-weighted alternating sums over k = 0..p-1, each mod p^2, against
// rational residues scaled by the Legendre symbol (p/3); p prime > 3:
//   moment 0: sum (-1)^k     f_k ==        (p/3)
//   moment 1: sum (-1)^k k   f_k == -(2/3) (p/3)
//   moment 2: sum (-1)^k k^2 f_k == (10/27)(p/3)
// Fractions are evaluated with mod_inverse; 3 and 27 are units mod p^2.
Verdict sun_intro(long p, int moment);

// f_n mod 4 is 2 when n is a power of two and 0 otherwise, n >= 1.
Verdict franel_mod4(long n);

// f_n^{(2r)} == 0 (mod n+1), n >= 1, r >= 0.
Verdict gz_congruence(long n, long r);

// f_n^{(2r)} == 0 (mod p) for every prime p in the open window
// n/m < p < (n+1)/m + (n+1-m)/(m(2mr-1)), with n, m, r >= 1. The window
// bounds are compared by integer cross-multiplication. An empty window is a
// vacuous pass; otherwise the verdict's modulus is the product of the window
// primes and params record p_min, p_max, prime_count.
Verdict calkin_congruence(long n, long m, long r);

// Conjecture instances (kind = conjecture; a failure is a discovery, not a
// bug in this library).

// sum_{k<n} (-1)^(rk) (3k+2) f_k^{(r)} == 0 (mod 2n), n >= 1, r >= 0.
Verdict conj1_check(long n, long r);

// sum_{k<n} (-1)^k (3k+2) f_k^{(2r+1)} == 0 (mod 4n), n >= 2, r >= 0.
Verdict conj1_odd_strong(long n, long r);

// sum_{k<n} (3k+2) f_k^{(2r)} == 0 (mod n(n+1)), n >= 1, r >= 1.
Verdict conj1_even_combined(long n, long r);

// sum_{k<n} (-1)^(rk) ((m+1)k+m) M_{m,k}^{(r)} == 0 (mod mn),
// m, n >= 1, r >= 0.
Verdict conj2_check(long m, long n, long r);

}  // namespace franel
