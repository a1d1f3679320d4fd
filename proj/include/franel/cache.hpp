#pragma once

#include <string>
#include <vector>

namespace franel {

// Advisory sequence cache. Loading seeds the memo store from a previously
// saved file; every entry has its first values recomputed and compared before
// it is trusted, so a stale or hand-edited cache degrades to a warning, never
// to wrong results.

// Returns false when the file cannot be read or is not a cache file at all;
// individually invalid entries are skipped. Diagnostics append to warnings.
bool cache_load(const std::string& path, std::vector<std::string>& warnings);

// Writes the current memo store. Returns false with a message on I/O failure.
bool cache_save(const std::string& path, std::string& error);

}  // namespace franel
