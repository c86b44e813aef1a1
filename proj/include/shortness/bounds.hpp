#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shortness::bounds {

using Nat = boost::multiprecision::cpp_int;

/// Vertex count f_i(n) and longest-cycle length c_i(n) of F_{i,n}.
Nat f(int family, int n);
Nat c(int family, int n);
/// The same quantities via the closed fractions; throws if a division is inexact.
Nat f_closed(int family, int n);
Nat c_closed(int family, int n);

/// Longest path p_i(n). (2, 0) throws UndefinedForDepth.
Nat p(int family, int n);

struct SValues {
  Nat s0, s1, s2;
  friend bool operator==(const SValues&, const SValues&) = default;
};
/// Iterates the s-recurrence from (9, 9, 8).
SValues s_values(int n);
SValues s_closed(int n);

/// 1 + (j - w + k - 1)(1 + k + ... + k^n).
Nat lemma_cyc_bound(int j, int w_size, int k, int n);

/// 2r + 2 white vertices per cycle in the r-fan.
int fan_white_bound(int r);

/// Rigorous enclosure [lo, hi] of a real number, rounded outward to doubles.
struct Enclosure {
  double lo = 0;
  double hi = 0;
  /// Decimal digits of the lower end at the working precision.
  std::string digits;

  double width() const noexcept { return hi - lo; }
  bool certainly_less(const Enclosure& o) const noexcept { return hi < o.lo; }
};

/// log(a) / log(b) for integers a, b >= 2, at `bits` of MPFR precision.
Enclosure log_ratio(const Nat& a, const Nat& b, int bits = 256);

struct FanExponentRow {
  int r;
  Enclosure value;  // log_{3r}(2r + 2)
};
struct FanExponentTable {
  int argmin = 0;
  std::vector<FanExponentRow> rows;
};
/// argmin over 3 <= r <= r_max of log_{3r}(2r + 2); the minimum must be
/// separated from every other row by the enclosures, otherwise throws.
FanExponentTable minimize_fan_exponent(int r_max);

/// log c_i(n) / log f_i(n).
Enclosure shortness_estimate(int family, int n, int bits = 256);
/// log_30 22, log_6 5, log_3 2.
Enclosure limit_constant(int family, int bits = 256);

std::string to_string(const Nat& x);

}  // namespace shortness::bounds
