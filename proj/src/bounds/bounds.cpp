#include "shortness/bounds.hpp"

#include <mpfr.h>

#include <algorithm>

#include "shortness/errors.hpp"

namespace shortness::bounds {

namespace {

void check_family(int family) {
  if (family < 1 || family > 3) throw Error(ErrorKind::InvalidInput, "family must be 1, 2 or 3");
}

void check_depth(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "depth must be non-negative");
}

Nat power(int base, int e) {
  Nat r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// 1 + k + ... + k^n
Nat geom(int k, int n) {
  Nat sum = 0, term = 1;
  for (int t = 0; t <= n; ++t) {
    sum += term;
    term *= k;
  }
  return sum;
}

Nat exact_div(const Nat& num, int den) {
  if (num % den != 0) throw Error(ErrorKind::InvalidInput, "closed form division is not exact");
  return num / den;
}

}  // namespace

std::string to_string(const Nat& x) { return x.str(); }

Nat f(int family, int n) {
  check_family(family);
  check_depth(n);
  switch (family) {
    case 1: return 1 + 101 * geom(30, n);
    case 2: return 1 + 14 * geom(6, n);
    default: return 4 + 5 * geom(3, n);
  }
}

Nat c(int family, int n) {
  check_family(family);
  check_depth(n);
  switch (family) {
    case 1: return 1 + 93 * geom(22, n);
    case 2: return 1 + 13 * geom(5, n);
    default: return 3 * power(2, n + 3) - 9 * n - 15;
  }
}

Nat f_closed(int family, int n) {
  check_family(family);
  check_depth(n);
  switch (family) {
    case 1: return 1 + exact_div(101 * (power(30, n + 1) - 1), 29);
    case 2: return 1 + exact_div(14 * (power(6, n + 1) - 1), 5);
    default: return 4 + exact_div(5 * (power(3, n + 1) - 1), 2);
  }
}

Nat c_closed(int family, int n) {
  check_family(family);
  check_depth(n);
  switch (family) {
    case 1: return 1 + exact_div(93 * (power(22, n + 1) - 1), 21);
    case 2: return 1 + exact_div(13 * (power(5, n + 1) - 1), 4);
    default: return s_values(n).s0;
  }
}

Nat p(int family, int n) {
  check_family(family);
  check_depth(n);
  const int sgn = n > 0 ? 1 : 0;
  switch (family) {
    case 1: {
      Nat sum = 0;
      for (int k = 0; k < n; ++k) sum += c(1, k);
      return 2 + c(1, n) + 2 * sum;
    }
    case 2: {
      if (n == 0) throw Error(ErrorKind::UndefinedForDepth, "p_2(0) refers to c_2(-1); use the oracle value instead");
      Nat sum = 0;
      for (int k = 0; k <= n - 2; ++k) sum += c(2, k);
      return 1 + sgn + c(2, n) + c(2, n - 1) + 2 * sum;
    }
    default: return 7 * power(2, n + 2) + 2 * sgn - 15 * n - 19;
  }
}

SValues s_values(int n) {
  check_depth(n);
  SValues s{9, 9, 8};
  for (int t = 1; t <= n; ++t) s = SValues{3 * s.s1 - 3, 2 * s.s2 + s.s1 - 3, 2 * s.s2};
  return s;
}

SValues s_closed(int n) {
  check_depth(n);
  return SValues{3 * power(2, n + 3) - 9 * n - 15, power(2, n + 4) - 3 * n - 7, power(2, n + 3)};
}

Nat lemma_cyc_bound(int j, int w_size, int k, int n) {
  if (k < 1 || w_size < 1 || j <= w_size) throw Error(ErrorKind::InvalidInput, "lemma_cyc_bound needs k >= 1, |W| >= 1, j > |W|");
  check_depth(n);
  return 1 + Nat(j - w_size + k - 1) * geom(k, n);
}

int fan_white_bound(int r) {
  if (r < 2) throw Error(ErrorKind::InvalidInput, "fan needs r >= 2");
  return 2 * r + 2;
}

namespace {

struct Mp {
  mpfr_t x;
  explicit Mp(int bits) { mpfr_init2(x, bits); }
  ~Mp() { mpfr_clear(x); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
};

void set_nat(Mp& m, const Nat& v, mpfr_rnd_t rnd) { mpfr_set_str(m.x, v.str().c_str(), 10, rnd); }

}  // namespace

Enclosure log_ratio(const Nat& a, const Nat& b, int bits) {
  if (a < 2 || b < 2) throw Error(ErrorKind::InvalidInput, "log_ratio needs arguments >= 2");
  Mp a_lo(bits), a_hi(bits), b_lo(bits), b_hi(bits), lo(bits), hi(bits);
  set_nat(a_lo, a, MPFR_RNDD);
  set_nat(a_hi, a, MPFR_RNDU);
  set_nat(b_lo, b, MPFR_RNDD);
  set_nat(b_hi, b, MPFR_RNDU);
  mpfr_log(a_lo.x, a_lo.x, MPFR_RNDD);
  mpfr_log(a_hi.x, a_hi.x, MPFR_RNDU);
  mpfr_log(b_lo.x, b_lo.x, MPFR_RNDD);
  mpfr_log(b_hi.x, b_hi.x, MPFR_RNDU);
  mpfr_div(lo.x, a_lo.x, b_hi.x, MPFR_RNDD);
  mpfr_div(hi.x, a_hi.x, b_lo.x, MPFR_RNDU);
  Enclosure e;
  e.lo = mpfr_get_d(lo.x, MPFR_RNDD);
  e.hi = mpfr_get_d(hi.x, MPFR_RNDU);
  char* s = nullptr;
  mpfr_asprintf(&s, "%.30RDf", lo.x);
  e.digits = s;
  mpfr_free_str(s);
  return e;
}

FanExponentTable minimize_fan_exponent(int r_max) {
  if (r_max < 10) throw Error(ErrorKind::InvalidInput, "r_max must be at least 10");
  FanExponentTable t;
  for (int r = 3; r <= r_max; ++r) t.rows.push_back({r, log_ratio(2 * r + 2, 3 * r)});
  auto best = std::min_element(t.rows.begin(), t.rows.end(),
                               [](const FanExponentRow& x, const FanExponentRow& y) { return x.value.hi < y.value.hi; });
  for (const auto& row : t.rows)
    if (row.r != best->r && !best->value.certainly_less(row.value))
      throw Error(ErrorKind::InvalidInput, "fan exponent minimum not separated at r = " + std::to_string(row.r));
  t.argmin = best->r;
  return t;
}

Enclosure shortness_estimate(int family, int n, int bits) { return log_ratio(c(family, n), f(family, n), bits); }

Enclosure limit_constant(int family, int bits) {
  check_family(family);
  switch (family) {
    case 1: return log_ratio(22, 30, bits);
    case 2: return log_ratio(5, 6, bits);
    default: return log_ratio(2, 3, bits);
  }
}

}  // namespace shortness::bounds
