// SPDX-License-Identifier: Apache-2.0
#include "semilinear/interval.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace semilinear {

namespace {

mpfr_prec_t joint(const Interval& a, const Interval& b) { return std::max(a.precision(), b.precision()); }

mpfr_srcptr endpoint(const Interval& x, int which) { return which == 0 ? x.lo() : x.hi(); }

}  // namespace

// Smallest corner value rounded down, largest rounded up. NaN corners
// (0 * inf) are skipped.
template <class F>
Interval Interval::corners(mpfr_prec_t prec, F&& eval) {
  Interval out(prec);
  mpfr_t tmp;
  mpfr_init2(tmp, prec);
  bool have_lo = false;
  bool have_hi = false;
  for (int ca = 0; ca < 2; ++ca) {
    for (int cb = 0; cb < 2; ++cb) {
      eval(tmp, ca, cb, MPFR_RNDD);
      if (!mpfr_nan_p(tmp) && (!have_lo || mpfr_less_p(tmp, out.lo_))) {
        mpfr_set(out.lo_, tmp, MPFR_RNDD);
        have_lo = true;
      }
      eval(tmp, ca, cb, MPFR_RNDU);
      if (!mpfr_nan_p(tmp) && (!have_hi || mpfr_greater_p(tmp, out.hi_))) {
        mpfr_set(out.hi_, tmp, MPFR_RNDU);
        have_hi = true;
      }
    }
  }
  mpfr_clear(tmp);
  return out;
}

void widen_exponent_range() {
  mpfr_set_emax(mpfr_get_emax_max());
  mpfr_set_emin(mpfr_get_emin_min());
}

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

Interval::Interval(mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other) {}

Interval& Interval::operator=(Interval other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Integer& value, mpfr_prec_t precision) {
  Interval out(precision);
  mpfr_set_z(out.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(out.hi_, value.get_mpz_t(), MPFR_RNDU);
  return out;
}

Interval Interval::exact(long value, mpfr_prec_t precision) { return exact(Integer(value), precision); }

Interval Interval::ratio(long p, long q, mpfr_prec_t precision) {
  return exact(p, precision) / exact(q, precision);
}

Interval Interval::euler(mpfr_prec_t precision) {
  Interval one = exact(1, precision);
  Interval out(precision);
  mpfr_exp(out.lo_, one.lo_, MPFR_RNDD);
  mpfr_exp(out.hi_, one.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::log2_e(mpfr_prec_t precision) { return log2(euler(precision)); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return out;
}

Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_point_zero() || b.is_point_zero()) return Interval(joint(a, b));
  return Interval::corners(joint(a, b), [&](mpfr_ptr r, int ca, int cb, mpfr_rnd_t rnd) {
    mpfr_mul(r, endpoint(a, ca), endpoint(b, cb), rnd);
  });
}

Interval operator/(const Interval& a, const Interval& b) {
  return Interval::corners(joint(a, b), [&](mpfr_ptr r, int ca, int cb, mpfr_rnd_t rnd) {
    mpfr_div(r, endpoint(a, ca), endpoint(b, cb), rnd);
  });
}

Interval pow(const Interval& base, const Interval& exponent) {
  const mpfr_prec_t prec = joint(base, exponent);
  if (exponent.is_point_zero()) return Interval::exact(1, prec);
  return Interval::corners(prec, [&](mpfr_ptr r, int ca, int cb, mpfr_rnd_t rnd) {
    mpfr_pow(r, endpoint(base, ca), endpoint(exponent, cb), rnd);
  });
}

Interval sqrt(const Interval& a) {
  Interval out(a.precision());
  mpfr_sqrt(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

Interval max(const Interval& a, const Interval& b) {
  Interval out(joint(a, b));
  mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return out;
}

Interval log2(const Interval& a) {
  Interval out(a.precision());
  mpfr_log2(out.lo_, a.lo_, MPFR_RNDD);
  mpfr_log2(out.hi_, a.hi_, MPFR_RNDU);
  return out;
}

bool Interval::is_point_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

bool Interval::lower_at_least(const Integer& v) const { return mpfr_cmp_z(lo_, v.get_mpz_t()) >= 0; }

bool Interval::upper_below(const Integer& v) const { return mpfr_cmp_z(hi_, v.get_mpz_t()) < 0; }

bool Interval::upper_at_most_lower_of(const Interval& other) const { return mpfr_lessequal_p(hi_, other.lo_); }

bool Interval::lower_above_upper_of(const Interval& other) const { return mpfr_greater_p(lo_, other.hi_); }

namespace {

std::string render(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  if (mpfr_inf_p(x)) return mpfr_sgn(x) < 0 ? "-inf" : "inf";
  if (mpfr_integer_p(x) && (mpfr_zero_p(x) || mpfr_get_exp(x) < 60)) {
    return std::to_string(mpfr_get_si(x, MPFR_RNDN));
  }
  char* text = nullptr;
  mpfr_asprintf(&text, rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe", digits - 1, x);
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

}  // namespace

std::string Interval::lower_string(int digits) const { return render(lo_, digits, MPFR_RNDD); }

std::string Interval::upper_string(int digits) const { return render(hi_, digits, MPFR_RNDU); }

}  // namespace semilinear
