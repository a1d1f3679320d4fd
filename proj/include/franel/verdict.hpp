#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "franel/arith.hpp"

namespace franel {

// What class of statement a check asserts. A failed theorem or lemma instance
// is a bug in this library; a failed conjecture instance is a discovery.
enum class CheckKind { identity, theorem, lemma, conjecture };

std::string check_kind_name(CheckKind kind);

// Uniform result record for one identity or congruence check.
//
// For exact checks, lhs and rhs are the two sides and holds means lhs == rhs.
// When modulus is set, lhs and rhs are canonical residues in [0, M) and holds
// means they agree; lhs_exact preserves the unreduced left side for display.
// Checks with several sub-identities record one holds_* entry per sub-check
// in params (1 = held) and surface the first failing pair in lhs/rhs.
struct Verdict {
  std::string check_name;
  CheckKind kind = CheckKind::identity;
  std::map<std::string, Integer> params;
  Integer lhs;
  Integer rhs;
  std::optional<Integer> lhs_exact;
  std::optional<Modulus> modulus;
  bool holds = false;
  bool vacuous = false;
};

// Orders verdicts by (check_name, params); the deterministic report order.
bool verdict_order(const Verdict& a, const Verdict& b);

}  // namespace franel
