#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "franel/identities.hpp"
#include "franel/sequences.hpp"

using franel::CheckKind;
using franel::Integer;
using franel::Verdict;

namespace {

void check_holds(const Verdict& v) {
  CAPTURE(v.check_name);
  CHECK(v.holds);
  CHECK(v.kind == CheckKind::identity);
  CHECK(v.lhs == v.rhs);
  CHECK_FALSE(v.modulus.has_value());
}

}  // namespace

TEST_CASE("foata polynomial identity holds through n = 60") {
  for (long n = 0; n <= 60; ++n) {
    Verdict v = franel::verify_foata(n);
    check_holds(v);
    CHECK(v.params.at("n") == n);
  }
  // at n = 4 both sides evaluate to f_4 at x = 1
  CHECK(franel::verify_foata(4).lhs == 346);
}

TEST_CASE("MacMahon single-sum form and its weighted companion") {
  for (long n = 0; n <= 150; ++n) {
    check_holds(franel::verify_mac(n));
    check_holds(franel::verify_mac2(n));
  }
  CHECK(franel::verify_mac(3).lhs == 56);
  CHECK(franel::verify_mac2(3).lhs == 240);
  CHECK_THROWS_AS((void)franel::verify_mac(-1), std::invalid_argument);
}

TEST_CASE("telescoping induction step across all admissible (n, k)") {
  for (long n = 0; n <= 90; ++n)
    for (long k = 0; 2 * k <= n; ++k) check_holds(franel::verify_induc(n, k));

  CHECK(franel::verify_induc(3, 1).lhs == 8);
  CHECK(franel::verify_induc(2, 0).lhs == -8);
  CHECK_THROWS_AS((void)franel::verify_induc(3, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::verify_induc(2, -1), std::invalid_argument);
}

TEST_CASE("alternating partial-sum closed forms") {
  for (long n = 1; n <= 150; ++n) {
    Verdict a = franel::verify_sum1(n);
    Verdict b = franel::verify_sum2(n);
    check_holds(a);
    check_holds(b);
    // Both verify the same left side, which is the library's partial sum.
    CHECK(a.lhs == franel::franel_alternating_sum(n));
    CHECK(b.lhs == a.lhs);
  }
  CHECK(franel::verify_sum1(2).lhs == -8);
  CHECK(franel::verify_sum1(5).lhs == 4300);
  CHECK_THROWS_AS((void)franel::verify_sum1(0), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::verify_sum2(0), std::invalid_argument);
}

TEST_CASE("both Strehl forms") {
  for (long n = 0; n <= 100; ++n) {
    check_holds(franel::verify_strehl(n, 1));
    check_holds(franel::verify_strehl(n, 2));
  }
  CHECK(franel::verify_strehl(3, 1).lhs == 56);
  CHECK(franel::verify_strehl(2, 2).lhs == 73);
  CHECK_THROWS_AS((void)franel::verify_strehl(2, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::verify_strehl(2, 0), std::invalid_argument);
}

TEST_CASE("three scalar closed forms as one verdict") {
  for (long n = 1; n <= 200; ++n) {
    Verdict v = franel::verify_closed_forms(n);
    check_holds(v);
    CHECK(v.params.at("holds_a") == 1);
    CHECK(v.params.at("holds_b") == 1);
    CHECK(v.params.at("holds_c") == 1);
  }
  CHECK(franel::verify_closed_forms(2).lhs == 12);  // sub-check (a) at n = 2
  CHECK_THROWS_AS((void)franel::verify_closed_forms(0), std::invalid_argument);
}

TEST_CASE("multinomial power-sum closed forms over an (m, r, n) grid") {
  for (long m = 1; m <= 5; ++m)
    for (long r = 0; r <= 3; ++r)
      for (long n = 1; n <= 40; ++n) {
        Verdict v = franel::verify_mnr_identities(m, n, r);
        check_holds(v);
        for (const char* sub : {"holds_mnr1", "holds_mnr2", "holds_mnr3", "holds_mnr4"})
          CHECK(v.params.at(sub) == 1);
      }
  CHECK_THROWS_AS((void)franel::verify_mnr_identities(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::verify_mnr_identities(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::verify_mnr_identities(1, 1, -1), std::invalid_argument);
}

TEST_CASE("mnr spot values pin the first two sub-identities") {
  // m = 2, n = 2: 2 + 5*2 = 12 = 2*2*C(3,2)
  Verdict v22 = franel::verify_mnr_identities(2, 2, 0);
  CHECK(v22.holds);
  // m = 3, n = 2: 3 - 7*3 = -18 = (-1)^1 * 3^2 * 2
  Verdict v32 = franel::verify_mnr_identities(3, 2, 0);
  CHECK(v32.holds);
  // Cross-check the sums the verdicts assert, computed here directly.
  Integer s1 = 0;
  for (long k = 0; k < 2; ++k) s1 += Integer(3 * k + 2) * franel::multi_power_sum(2, k, 0);
  CHECK(s1 == 12);
  Integer s2 = 0;
  for (long k = 0; k < 2; ++k) {
    Integer term = Integer(4 * k + 3) * franel::multi_power_sum(3, k, 1);
    s2 += (k % 2 == 0) ? term : -term;
  }
  CHECK(s2 == -18);
}

TEST_CASE("weighted a002893 partial sums against the Catalan convolution") {
  for (long n = 1; n <= 150; ++n) check_holds(franel::verify_sunmk3(n));
  CHECK(franel::verify_sunmk3(2).lhs == 24);
  CHECK_THROWS_AS((void)franel::verify_sunmk3(0), std::invalid_argument);
}

TEST_CASE("cube-sum row split and half-row symmetry") {
  for (long n = 1; n <= 150; ++n) {
    check_holds(franel::verify_cube_split(n));
    Verdict h = franel::verify_half_symmetry(n);
    check_holds(h);
    CHECK(h.params.at("holds_sym") == 1);
    CHECK(h.params.at("holds_double") == 1);
  }
  CHECK(franel::verify_cube_split(5).lhs == 346);
  CHECK(franel::verify_half_symmetry(5).lhs == 260);
  CHECK(franel::verify_half_symmetry(5).rhs == 260);
  CHECK_THROWS_AS((void)franel::verify_cube_split(0), std::invalid_argument);
  CHECK_THROWS_AS((void)franel::verify_half_symmetry(0), std::invalid_argument);
}
