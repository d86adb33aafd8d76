// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdarg>
#include <cstdio>

#include <gmp.h>
#include <mpfr.h>

#include <string>

#include "semilinear/nat_vector.hpp"

namespace semilinear {

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// the lower endpoint down and the upper endpoint up, so the exact real
/// result always lies inside. Endpoints may be infinite (log2 of zero).
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval exact(const Integer& value, mpfr_prec_t precision);
  static Interval exact(long value, mpfr_prec_t precision);
  /// p / q with outward rounding.
  static Interval ratio(long p, long q, mpfr_prec_t precision);
  static Interval euler(mpfr_prec_t precision);
  static Interval log2_e(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Requires b > 0.
  friend Interval operator/(const Interval& a, const Interval& b);

  /// base^exponent for base >= 0, by endpoint corners. 0^0 is 1 and
  /// anything^0 is exactly 1.
  friend Interval pow(const Interval& base, const Interval& exponent);
  friend Interval sqrt(const Interval& a);
  /// Pointwise maximum of the endpoints.
  friend Interval max(const Interval& a, const Interval& b);
  /// log2 for a >= 0; log2(0) = -inf.
  friend Interval log2(const Interval& a);

  bool is_point_zero() const;

  /// Exact comparisons of an integer against the endpoints.
  bool lower_at_least(const Integer& v) const;
  bool upper_below(const Integer& v) const;

  /// Endpoint comparisons between two intervals.
  bool upper_at_most_lower_of(const Interval& other) const;
  bool lower_above_upper_of(const Interval& other) const;

  /// Decimal renderings rounded outward with `digits` significant digits.
  std::string lower_string(int digits) const;
  std::string upper_string(int digits) const;

 private:
  template <class F>
  static Interval corners(mpfr_prec_t prec, F&& eval);

  mpfr_t lo_;
  mpfr_t hi_;
};

/// Widens MPFR's exponent range to its maximum on the calling thread.
void widen_exponent_range();

/// Bits of working precision for `digits` decimal digits.
mpfr_prec_t bits_for_digits(int digits);

}  // namespace semilinear
