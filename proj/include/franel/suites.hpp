#pragma once

#include <string>

#include "franel/report.hpp"

namespace franel {

// Suite runners. Range fields left at -1 resolve to the per-check default
// sweep ranges; an explicit value overrides them for every check it governs.
// A few grid dimensions are fixed regardless (they are part of the check's
// definition, not of the sweep): foata runs to at most n = 60, gz to at most
// n = 150 with r <= 5, calkin to at most n = 60 with m <= 4 and r <= 3, and
// jarvis_verrill / sun_intro over primes up to at most 100.

struct VerifyOptions {
  std::string suite = "all";  // identities | theorems | lemmas | all
  long nmax = -1;             // default: identities 200, theorems 300
  long pmax = -1;             // default: 150
};

struct ScanOptions {
  std::string conjecture;  // conj1 | conj1-odd | conj1-even | conj2
  long nmax = -1;          // default: conj1 family 150, conj2 80
  long rmax = -1;          // default: conj1 6, conj1-odd/-even 3, conj2 4
  long mmax = -1;          // conj2 only; default 5
  long jobs = 1;
};

// Runs every verifier of the chosen suite over its resolved ranges and
// returns the finalized report. Throws std::invalid_argument for an unknown
// suite name or out-of-range bounds.
ScanReport run_verify(const VerifyOptions& options);

// Sweeps one conjecture's parameter grid, splitting it across options.jobs
// worker threads; the report is byte-identical for every jobs value. The
// conj1-family sweeps attach the raw partial-sum lists (one per r) to the
// report's data section.
ScanReport run_scan(const ScanOptions& options);

}  // namespace franel
