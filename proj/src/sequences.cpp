#include "franel/sequences.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace franel {

namespace {

std::mutex store_mutex;
std::map<FamilyKey, std::shared_ptr<const std::vector<Integer>>>& store_map() {
  static std::map<FamilyKey, std::shared_ptr<const std::vector<Integer>>> map;
  return map;
}

Integer franel_direct(long n) {
  auto row = binomial_row(static_cast<std::size_t>(n));
  Integer sum = 0;
  for (const Integer& c : *row) {
    sum += c * c * c;
  }
  return sum;
}

Integer franel_macmahon(long n) {
  Integer sum = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    Integer term = binomial(n + k, 3 * k) * binomial(3 * k, 2 * k) * binomial(2 * k, k);
    sum += term << static_cast<unsigned>(n - 2 * k);
  }
  return sum;
}

// Extends values in place to length count using the family rule. dep is the
// (m-1)-table for multinomial families, empty otherwise.
void extend_values(const FamilyKey& key, std::vector<Integer>& values, long count,
                   const std::vector<Integer>* dep) {
  switch (key.family) {
    case Family::franel: {
      if (values.empty() && count > 0) values.emplace_back(1);
      if (values.size() < 2 && count > 1) values.emplace_back(2);
      while (static_cast<long>(values.size()) < count) {
        long i = static_cast<long>(values.size());
        Integer n = i - 1;
        Integer numerator = (7 * n * n + 7 * n + 2) * values[i - 1] + 8 * n * n * values[i - 2];
        values.push_back(exact_div(numerator, Integer(i) * Integer(i)));
      }
      break;
    }
    case Family::powersum: {
      while (static_cast<long>(values.size()) < count) {
        long n = static_cast<long>(values.size());
        auto row = binomial_row(static_cast<std::size_t>(n));
        Integer sum = 0;
        for (const Integer& c : *row) {
          sum += int_pow(c, static_cast<unsigned long>(key.r));
        }
        values.push_back(std::move(sum));
      }
      break;
    }
    case Family::multinomial: {
      if (key.m == 1) {
        while (static_cast<long>(values.size()) < count) {
          values.emplace_back(1);
        }
        break;
      }
      while (static_cast<long>(values.size()) < count) {
        long n = static_cast<long>(values.size());
        auto row = binomial_row(static_cast<std::size_t>(n));
        Integer sum = 0;
        for (long j = 0; j <= n; ++j) {
          sum += int_pow((*row)[static_cast<std::size_t>(j)], static_cast<unsigned long>(key.r))
               * (*dep)[static_cast<std::size_t>(n - j)];
        }
        values.push_back(std::move(sum));
      }
      break;
    }
    case Family::a002893: {
      while (static_cast<long>(values.size()) < count) {
        long n = static_cast<long>(values.size());
        auto row = binomial_row(static_cast<std::size_t>(n));
        Integer sum = 0;
        for (long k = 0; k <= n; ++k) {
          const Integer& c = (*row)[static_cast<std::size_t>(k)];
          sum += c * c * binomial(2 * k, k);
        }
        values.push_back(std::move(sum));
      }
      break;
    }
  }
}

// Computes count fresh values for the key without touching the store.
std::vector<Integer> compute_fresh(const FamilyKey& key, long count) {
  std::vector<Integer> values;
  if (key.family == Family::multinomial && key.m > 1) {
    FamilyKey dep_key{Family::multinomial, key.m - 1, key.r};
    auto dep = family_prefix(dep_key, count);
    extend_values(key, values, count, dep.get());
  } else {
    extend_values(key, values, count, nullptr);
  }
  return values;
}

void validate_key(const FamilyKey& key) {
  if (key.r < 0) {
    throw std::invalid_argument("sequence family: r must be >= 0");
  }
  if (key.family == Family::multinomial && key.m < 1) {
    throw std::invalid_argument("sequence family: m must be >= 1");
  }
  if (key.family != Family::multinomial && key.m != 0) {
    throw std::invalid_argument("sequence family: m only applies to multinomial");
  }
  if ((key.family == Family::franel || key.family == Family::a002893) && key.r != 0) {
    throw std::invalid_argument("sequence family: r does not apply to this family");
  }
}

void enumerate_compositions(long remaining, long parts_left, const Integer& coeff, long r,
                            Integer& accumulator) {
  if (parts_left == 1) {
    // Last part is forced; its binomial factor is C(remaining, remaining) = 1.
    accumulator += int_pow(coeff, static_cast<unsigned long>(r));
    return;
  }
  auto row = binomial_row(static_cast<std::size_t>(remaining));
  for (long first = 0; first <= remaining; ++first) {
    enumerate_compositions(remaining - first, parts_left - 1,
                           coeff * (*row)[static_cast<std::size_t>(first)], r, accumulator);
  }
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::franel: return "franel";
    case Family::powersum: return "powersum";
    case Family::multinomial: return "multinomial";
    case Family::a002893: return "a002893";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "franel") return Family::franel;
  if (name == "powersum") return Family::powersum;
  if (name == "multinomial") return Family::multinomial;
  if (name == "a002893") return Family::a002893;
  return std::nullopt;
}

std::shared_ptr<const std::vector<Integer>> family_prefix(const FamilyKey& key, long count) {
  validate_key(key);
  if (count < 0) {
    throw std::invalid_argument("family_prefix: count must be >= 0");
  }
  std::shared_ptr<const std::vector<Integer>> current;
  {
    std::lock_guard<std::mutex> lock(store_mutex);
    auto it = store_map().find(key);
    if (it != store_map().end()) {
      if (static_cast<long>(it->second->size()) >= count) {
        return it->second;
      }
      current = it->second;
    }
  }

  // Extend outside the lock; values are deterministic, so concurrent
  // extenders produce identical entries and whichever installs last wins.
  std::shared_ptr<const std::vector<Integer>> dep;
  if (key.family == Family::multinomial && key.m > 1) {
    dep = family_prefix(FamilyKey{Family::multinomial, key.m - 1, key.r}, count);
  }
  std::vector<Integer> extended = current ? *current : std::vector<Integer>{};
  extend_values(key, extended, count, dep.get());
  auto result = std::make_shared<const std::vector<Integer>>(std::move(extended));

  std::lock_guard<std::mutex> lock(store_mutex);
  auto& slot = store_map()[key];
  if (!slot || slot->size() < result->size()) {
    slot = result;
  }
  return slot;
}

Integer franel(long n, FranelMethod method) {
  if (n < 0) {
    throw std::invalid_argument("franel: n must be >= 0");
  }
  switch (method) {
    case FranelMethod::direct: return franel_direct(n);
    case FranelMethod::macmahon: return franel_macmahon(n);
    case FranelMethod::recurrence: break;
  }
  auto prefix = family_prefix(FamilyKey{Family::franel, 0, 0}, n + 1);
  return (*prefix)[static_cast<std::size_t>(n)];
}

Integer power_sum(long n, long r) {
  if (n < 0 || r < 0) {
    throw std::invalid_argument("power_sum: n and r must be >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::powersum, 0, r}, n + 1);
  return (*prefix)[static_cast<std::size_t>(n)];
}

Integer multi_power_sum(long m, long n, long r) {
  if (m < 1) {
    throw std::invalid_argument("multi_power_sum: m must be >= 1");
  }
  if (n < 0 || r < 0) {
    throw std::invalid_argument("multi_power_sum: n and r must be >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::multinomial, m, r}, n + 1);
  return (*prefix)[static_cast<std::size_t>(n)];
}

Integer multi_power_sum_oracle(long m, long n, long r, long budget) {
  if (m < 1 || n < 0 || r < 0) {
    throw std::invalid_argument("multi_power_sum_oracle: bad parameters");
  }
  Integer compositions = binomial(n + m - 1, m - 1);
  if (compositions > budget) {
    throw BudgetError("enumeration refused: " + compositions.str() + " compositions exceed budget "
                      + std::to_string(budget));
  }
  Integer accumulator = 0;
  enumerate_compositions(n, m, Integer(1), r, accumulator);
  return accumulator;
}

Integer a002893(long n) {
  if (n < 0) {
    throw std::invalid_argument("a002893: n must be >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::a002893, 0, 0}, n + 1);
  return (*prefix)[static_cast<std::size_t>(n)];
}

Integer franel_alternating_sum(long n) {
  if (n < 0) {
    throw std::invalid_argument("franel_alternating_sum: n must be >= 0");
  }
  auto prefix = family_prefix(FamilyKey{Family::franel, 0, 0}, n);
  Integer sum = 0;
  for (long k = 0; k < n; ++k) {
    Integer term = (3 * k + 2) * (*prefix)[static_cast<std::size_t>(k)];
    if (k & 1) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return sum;
}

SequenceTable table(const SequenceRequest& request) {
  if (request.count < 1) {
    throw std::invalid_argument("table: count must be >= 1");
  }
  const bool needs_r = request.family == Family::powersum || request.family == Family::multinomial;
  const bool needs_m = request.family == Family::multinomial;
  if (needs_r != request.r.has_value()) {
    throw std::invalid_argument(needs_r ? "table: family requires r" : "table: r not applicable");
  }
  if (needs_m != request.m.has_value()) {
    throw std::invalid_argument(needs_m ? "table: family requires m" : "table: m not applicable");
  }
  FamilyKey key{request.family, request.m.value_or(0), request.r.value_or(0)};
  auto prefix = family_prefix(key, request.count);

  SequenceTable result{request, {}};
  result.values.reserve(static_cast<std::size_t>(request.count));
  for (long i = 0; i < request.count; ++i) {
    const Integer& value = (*prefix)[static_cast<std::size_t>(i)];
    result.values.push_back(request.modulus ? request.modulus->reduce(value) : value);
  }
  return result;
}

std::vector<std::pair<FamilyKey, std::vector<Integer>>> store_snapshot() {
  std::lock_guard<std::mutex> lock(store_mutex);
  std::vector<std::pair<FamilyKey, std::vector<Integer>>> snapshot;
  snapshot.reserve(store_map().size());
  for (const auto& [key, values] : store_map()) {
    snapshot.emplace_back(key, *values);
  }
  return snapshot;
}

bool store_seed(const FamilyKey& key, const std::vector<Integer>& values) {
  try {
    validate_key(key);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const long check = std::min<long>(10, static_cast<long>(values.size()));
  std::vector<Integer> fresh = compute_fresh(key, check);
  for (long i = 0; i < check; ++i) {
    if (fresh[static_cast<std::size_t>(i)] != values[static_cast<std::size_t>(i)]) {
      return false;
    }
  }
  auto seeded = std::make_shared<const std::vector<Integer>>(values);
  std::lock_guard<std::mutex> lock(store_mutex);
  auto& slot = store_map()[key];
  if (!slot || slot->size() < seeded->size()) {
    slot = seeded;
  }
  return true;
}

void store_reset() {
  std::lock_guard<std::mutex> lock(store_mutex);
  store_map().clear();
}

}  // namespace franel
