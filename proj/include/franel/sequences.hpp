#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "franel/arith.hpp"

namespace franel {

enum class Family { franel, powersum, multinomial, a002893 };

std::string family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

/// Identifies one memoized sequence table. Unused parameters stay zero so
/// keys compare cleanly.
struct FamilyKey {
  Family family = Family::franel;
  long m = 0;
  long r = 0;

  auto operator<=>(const FamilyKey&) const = default;
};

enum class FranelMethod { direct, recurrence, macmahon };

struct SequenceRequest {
  Family family = Family::franel;
  std::optional<long> r;  // power, for powersum and multinomial
  std::optional<long> m;  // parts, for multinomial
  long count = 1;
  std::optional<Modulus> modulus;  // applied at output only
};

struct SequenceTable {
  SequenceRequest request;
  std::vector<Integer> values;
};

/// f_n by the chosen route. All three agree; direct and macmahon recompute
/// every call so they stay independent of the memoized recurrence table.
/// The recurrence divides by (n+1)^2 exactly; a remainder aborts loudly.
Integer franel(long n, FranelMethod method = FranelMethod::recurrence);

/// f_n^{(r)} = sum_k C(n,k)^r.
Integer power_sum(long n, long r);

/// M_{m,n}^{(r)} via the first-part factorization
/// M_{m,n} = sum_j C(n,j)^r M_{m-1,n-j}, base M_{1,n} = 1.
Integer multi_power_sum(long m, long n, long r);

/// Same value by brute-force enumeration of all m-part compositions of n.
/// Refuses (BudgetError) when the composition count C(n+m-1,m-1) exceeds
/// the budget.
Integer multi_power_sum_oracle(long m, long n, long r, long budget = 1'000'000);

/// sum_k C(n,k)^2 C(2k,k); equals multi_power_sum(3, n, 2).
Integer a002893(long n);

/// Partial alternating weighted sum: sum_{k<n} (-1)^k (3k+2) f_k.
Integer franel_alternating_sum(long n);

/// Values 0..count-1 for the requested family; exact internally, reduced by
/// the request's modulus only at output.
SequenceTable table(const SequenceRequest& request);

/// Memoized prefix of length >= count for the family; tables are extended,
/// never recomputed, and filling is idempotent under concurrency.
std::shared_ptr<const std::vector<Integer>> family_prefix(const FamilyKey& key, long count);

/// Current contents of the memo store, key-sorted (for cache persistence).
std::vector<std::pair<FamilyKey, std::vector<Integer>>> store_snapshot();

/// Seeds the store with externally supplied values after re-validating the
/// first entries against freshly computed ones. Returns false (and leaves
/// the store untouched) on any mismatch.
bool store_seed(const FamilyKey& key, const std::vector<Integer>& values);

/// Drops every memoized table (test support).
void store_reset();

}  // namespace franel
