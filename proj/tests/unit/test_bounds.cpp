#include "doctest.h"

#include <cmath>

#include "shortness/bounds.hpp"
#include "shortness/errors.hpp"

using namespace shortness;
using namespace shortness::bounds;

TEST_CASE("f and c base values") {
  CHECK(f(1, 0) == 102);
  CHECK(c(1, 0) == 94);
  CHECK(f(2, 0) == 15);
  CHECK(c(2, 0) == 14);
  CHECK(f(3, 0) == 9);
  CHECK(c(3, 0) == 9);
  CHECK(c(2, 1) == 79);
  CHECK(f(2, 1) == 99);
  CHECK(f(1, 1) == 3132);
  CHECK(f(3, 1) == 24);
  CHECK(f(3, 2) == 69);
}

TEST_CASE("closed forms agree") {
  for (int i = 1; i <= 3; ++i)
    for (int n = 0; n <= 12; ++n) {
      CHECK(f(i, n) == f_closed(i, n));
      CHECK(c(i, n) == c_closed(i, n));
    }
}

TEST_CASE("s recurrence") {
  CHECK(s_values(0) == SValues{9, 9, 8});
  CHECK(s_values(1) == SValues{24, 22, 16});
  CHECK(s_values(5).s2 == 256);
  for (int n = 0; n <= 12; ++n) {
    CHECK(s_values(n) == s_closed(n));
    CHECK(c(3, n) == s_values(n).s0);
  }
  for (int n = 1; n <= 30; ++n) {
    Nat lhs = 3 * (Nat(1) << (n + 2)) - 9 * (n - 1) - 15;
    Nat rhs = 3 * ((Nat(1) << (n + 3)) - 3 * (n - 1) - 7) - 3;
    CHECK(lhs < rhs);
  }
}

TEST_CASE("lemma bound reproduces c1 and c2") {
  for (int n = 0; n <= 10; ++n) {
    CHECK(lemma_cyc_bound(15, 6, 5, n) == c(2, n));
    CHECK(lemma_cyc_bound(102, 30, 22, n) == c(1, n));
  }
  CHECK(lemma_cyc_bound(5, 1, 1, 0) == 5);
  CHECK_THROWS_AS(lemma_cyc_bound(5, 5, 1, 0), Error);
}

TEST_CASE("path formulas") {
  CHECK(p(3, 0) == 9);
  CHECK(p(1, 0) == 96);
  CHECK(p(3, 1) == 24);
  CHECK(p(2, 1) == 95);
  try {
    (void)p(2, 0);
    FAIL("expected UndefinedForDepth");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndefinedForDepth);
  }
}

TEST_CASE("fan exponent") {
  CHECK(fan_white_bound(10) == 22);
  CHECK(fan_white_bound(3) == 8);
  CHECK(fan_white_bound(2) == 6);
  auto t = minimize_fan_exponent(100);
  CHECK(t.argmin == 10);
  CHECK(t.rows.front().r == 3);
  CHECK(t.rows.front().value.lo == doctest::Approx(std::log(8.0) / std::log(9.0)).epsilon(1e-12));
  CHECK(log_ratio(22, 30).certainly_less(log_ratio(8, 9)));
}

TEST_CASE("shortness estimates") {
  auto lim1 = limit_constant(1);
  // independent value (mpmath, 30 digits): 0.908810076717080235794537969975
  CHECK(lim1.lo == doctest::Approx(0.90881007671708).epsilon(1e-13));
  CHECK(lim1.width() < 1e-14);
  CHECK(limit_constant(3).lo == doctest::Approx(0.63093).epsilon(1e-5));
  auto e20 = shortness_estimate(1, 20);
  CHECK(lim1.certainly_less(e20));
  CHECK(e20.hi - lim1.lo < 0.01);
  for (int i = 1; i <= 2; ++i)
    for (int n = 0; n < 20; ++n) CHECK(shortness_estimate(i, n + 1).certainly_less(shortness_estimate(i, n)));
  CHECK(std::abs(shortness_estimate(2, 20).lo - limit_constant(2).lo) < 0.01);
}
