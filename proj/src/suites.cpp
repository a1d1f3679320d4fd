#include "franel/suites.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <thread>

#include "franel/congruences.hpp"
#include "franel/identities.hpp"
#include "franel/sequences.hpp"

namespace franel {

namespace {

const char* kMnrNote =
    "mnr: the second closed form is sum_{k<n} (-1)^k ((m+1)k+m) M_{m,k}^(1) = (-1)^(n-1) m^n n; "
    "the exponent on m is n, not r (the m^r variant fails at m=3, n=2, r=1).";
const char* kP5Note =
    "p5_decomposition: the three binomial sums run over the full row k = 0..p; an upper limit "
    "written n in this display is read as p.";
const char* kJarvisNote =
    "jarvis_verrill: f_n == (-8)^n f_(p-1-n) (mod p) requires p odd; at p = 2, n = 0 it fails "
    "(f_0 = 1, f_1 = 2), so p = 2 is rejected as a usage error.";

std::string range_text(const char* name, long lo, long hi) {
  return std::string(name) + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

void add_identity_verdicts(std::vector<Verdict>& out, long nmax) {
  const long foata_max = std::min(nmax, 60L);
  for (long n = 0; n <= foata_max; ++n) {
    out.push_back(verify_foata(n));
  }
  for (long n = 0; n <= nmax; ++n) {
    out.push_back(verify_mac(n));
    out.push_back(verify_mac2(n));
    out.push_back(verify_strehl(n, 1));
    out.push_back(verify_strehl(n, 2));
    for (long k = 0; 2 * k <= n; ++k) {
      out.push_back(verify_induc(n, k));
    }
  }
  for (long n = 1; n <= nmax; ++n) {
    out.push_back(verify_sum1(n));
    out.push_back(verify_sum2(n));
    out.push_back(verify_closed_forms(n));
    out.push_back(verify_sunmk3(n));
    out.push_back(verify_cube_split(n));
    out.push_back(verify_half_symmetry(n));
  }
  for (long m = 1; m <= 5; ++m) {
    for (long r = 0; r <= 3; ++r) {
      for (long n = 1; n <= nmax; ++n) {
        out.push_back(verify_mnr_identities(m, n, r));
      }
    }
  }
}

void add_theorem_verdicts(std::vector<Verdict>& out, long nmax, long pmax) {
  for (long n = 1; n <= nmax; ++n) {
    out.push_back(thm_alternating_sum(n));
    out.push_back(thm_refined(n));
    out.push_back(franel_mod4(n));
  }
  for (const Integer& p : primes_up_to(pmax)) {
    if (p > 3) {
      out.push_back(thm_p5(static_cast<long>(p)));
    }
  }
  const long small_pmax = std::min(pmax, 100L);
  for (const Integer& prime : primes_up_to(small_pmax)) {
    long p = static_cast<long>(prime);
    if (p == 2) {
      continue;
    }
    for (long n = 0; n < p; ++n) {
      out.push_back(jarvis_verrill(p, n));
    }
    if (p > 3) {
      for (int moment = 0; moment <= 2; ++moment) {
        out.push_back(sun_intro(p, moment));
      }
    }
  }
  for (long n = 1; n <= std::min(nmax, 150L); ++n) {
    for (long r = 0; r <= 5; ++r) {
      out.push_back(gz_congruence(n, r));
    }
  }
  for (long n = 1; n <= std::min(nmax, 60L); ++n) {
    for (long m = 1; m <= 4; ++m) {
      for (long r = 1; r <= 3; ++r) {
        out.push_back(calkin_congruence(n, m, r));
      }
    }
  }
}

void add_lemma_verdicts(std::vector<Verdict>& out, long pmax) {
  for (const Integer& prime : primes_up_to(pmax)) {
    if (prime <= 3) {
      continue;
    }
    long p = static_cast<long>(prime);
    out.push_back(lemma_sun(p));
    out.push_back(lemma_sunvar(p));
    out.push_back(lemma_sun2(p));
    out.push_back(lemma_fpmod(p));
    out.push_back(verify_p5_decomposition(p));
  }
}

// Runs worker(i) for every grid index on `jobs` threads; index i is handled
// by thread i % jobs, so the result layout never depends on scheduling.
void parallel_for(long count, long jobs, const std::function<void(long)>& work) {
  jobs = std::max(1L, std::min(jobs, count));
  if (jobs == 1) {
    for (long i = 0; i < count; ++i) {
      work(i);
    }
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (long t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      try {
        for (long i = t; i < count; i += jobs) {
          work(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (std::thread& thread : threads) {
    thread.join();
  }
  for (const std::exception_ptr& error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
}

// One conjectured partial-sum family, listed for n = 1..nmax at fixed r.
std::vector<Integer> partial_sums(const std::string& conjecture, long r, long nmax) {
  long exponent = r;
  if (conjecture == "conj1-odd") {
    exponent = 2 * r + 1;
  } else if (conjecture == "conj1-even") {
    exponent = 2 * r;
  }
  auto prefix = family_prefix(FamilyKey{Family::powersum, 0, exponent}, nmax);
  std::vector<Integer> sums;
  sums.reserve(static_cast<std::size_t>(nmax));
  Integer running = 0;
  for (long k = 0; k < nmax; ++k) {
    Integer term = (3 * k + 2) * (*prefix)[static_cast<std::size_t>(k)];
    bool negative = false;
    if (conjecture == "conj1") {
      negative = (r & 1) && (k & 1);
    } else if (conjecture == "conj1-odd") {
      negative = (k & 1);
    }
    running += negative ? -term : term;
    sums.push_back(running);
  }
  return sums;
}

}  // namespace

ScanReport run_verify(const VerifyOptions& options) {
  const bool identities =
      options.suite == "identities" || options.suite == "all";
  const bool theorems = options.suite == "theorems" || options.suite == "all";
  const bool lemmas = options.suite == "lemmas" || options.suite == "all";
  if (!identities && !theorems && !lemmas) {
    throw std::invalid_argument("run_verify: unknown suite '" + options.suite + "'");
  }
  if (options.nmax == 0 || options.nmax < -1 || (options.pmax != -1 && options.pmax < 5)) {
    throw std::invalid_argument("run_verify: requires nmax >= 1 and pmax >= 5");
  }

  ScanReport report;
  report.suite = options.suite;
  report.tool_version = kToolVersion;
  report.generated_at = current_timestamp();

  const long pmax = options.pmax == -1 ? 150 : options.pmax;
  std::vector<std::string> grid;
  if (identities) {
    const long nmax = options.nmax == -1 ? 200 : options.nmax;
    add_identity_verdicts(report.results, nmax);
    grid.push_back("identities " + range_text("n", 0, nmax) + " (foata n <= "
                   + std::to_string(std::min(nmax, 60L)) + ", mnr m <= 5, r <= 3)");
    report.errata_notes.push_back(kMnrNote);
  }
  if (theorems) {
    const long nmax = options.nmax == -1 ? 300 : options.nmax;
    add_theorem_verdicts(report.results, nmax, pmax);
    grid.push_back("theorems " + range_text("n", 1, nmax) + ", " + range_text("p", 5, pmax)
                   + " (jarvis_verrill/sun_intro p <= " + std::to_string(std::min(pmax, 100L))
                   + ", gz n <= " + std::to_string(std::min(nmax, 150L)) + " r <= 5, calkin n <= "
                   + std::to_string(std::min(nmax, 60L)) + " m <= 4 r <= 3)");
    report.errata_notes.push_back(kJarvisNote);
  }
  if (lemmas) {
    add_lemma_verdicts(report.results, pmax);
    grid.push_back("lemmas " + range_text("p", 5, pmax));
    report.errata_notes.push_back(kP5Note);
  }
  report.parameter_grid = grid.front();
  for (std::size_t i = 1; i < grid.size(); ++i) {
    report.parameter_grid += "; " + grid[i];
  }

  finalize_report(report);
  return report;
}

ScanReport run_scan(const ScanOptions& options) {
  const std::string& which = options.conjecture;
  const bool is_conj1 = which == "conj1";
  const bool is_odd = which == "conj1-odd";
  const bool is_even = which == "conj1-even";
  const bool is_conj2 = which == "conj2";
  if (!is_conj1 && !is_odd && !is_even && !is_conj2) {
    throw std::invalid_argument("run_scan: unknown conjecture '" + which + "'");
  }

  const long nmax = options.nmax == -1 ? (is_conj2 ? 80 : 150) : options.nmax;
  const long rmax = options.rmax == -1 ? (is_conj1 ? 6 : is_conj2 ? 4 : 3) : options.rmax;
  const long mmax = options.mmax == -1 ? 5 : options.mmax;
  if (nmax < 1 || rmax < (is_even ? 1 : 0) || mmax < 1 || options.jobs < 1) {
    throw std::invalid_argument("run_scan: ranges must be >= 1 (rmax >= 0 where r = 0 applies)");
  }
  if (!is_conj2 && options.mmax != -1) {
    throw std::invalid_argument("run_scan: mmax only applies to conj2");
  }

  ScanReport report;
  report.suite = which;
  report.tool_version = kToolVersion;
  report.generated_at = current_timestamp();

  // Grid rows in canonical (m, r, n) order; each row is one verdict slot.
  struct GridPoint {
    long m, r, n;
  };
  std::vector<GridPoint> points;
  const long r_lo = is_even ? 1 : 0;
  const long n_lo = is_odd ? 2 : 1;
  if (is_conj2) {
    for (long m = 1; m <= mmax; ++m) {
      for (long r = 0; r <= rmax; ++r) {
        for (long n = 1; n <= nmax; ++n) {
          points.push_back({m, r, n});
        }
      }
    }
    report.parameter_grid = range_text("m", 1, mmax) + ", " + range_text("r", 0, rmax) + ", "
                            + range_text("n", 1, nmax);
  } else {
    for (long r = r_lo; r <= rmax; ++r) {
      for (long n = n_lo; n <= nmax; ++n) {
        points.push_back({0, r, n});
      }
    }
    report.parameter_grid = range_text("r", r_lo, rmax) + ", " + range_text("n", n_lo, nmax);
  }

  // Warm the shared tables sequentially so workers only read them.
  if (is_conj2) {
    for (long m = 1; m <= mmax; ++m) {
      for (long r = 0; r <= rmax; ++r) {
        family_prefix(FamilyKey{Family::multinomial, m, r}, nmax);
      }
    }
  } else {
    for (long r = r_lo; r <= rmax; ++r) {
      long exponent = is_odd ? 2 * r + 1 : is_even ? 2 * r : r;
      family_prefix(FamilyKey{Family::powersum, 0, exponent}, nmax);
    }
  }

  report.results.resize(points.size());
  parallel_for(static_cast<long>(points.size()), options.jobs, [&](long i) {
    const GridPoint& g = points[static_cast<std::size_t>(i)];
    Verdict& slot = report.results[static_cast<std::size_t>(i)];
    if (is_conj2) {
      slot = conj2_check(g.m, g.n, g.r);
    } else if (is_conj1) {
      slot = conj1_check(g.n, g.r);
    } else if (is_odd) {
      slot = conj1_odd_strong(g.n, g.r);
    } else {
      slot = conj1_even_combined(g.n, g.r);
    }
  });

  if (!is_conj2) {
    for (long r = r_lo; r <= rmax; ++r) {
      report.data.emplace_back("partial_sums_r" + std::to_string(r),
                               partial_sums(which, r, nmax));
    }
  }

  finalize_report(report);
  return report;
}

}  // namespace franel
