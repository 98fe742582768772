#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace dioph {

// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
// lower endpoint toward -inf and the upper toward +inf, so the result
// encloses the exact value for every choice of points in the operands.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(long v, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_int(const mpz_class& n, mpfr_prec_t prec);
  static Interval from_rational(const mpq_class& q, mpfr_prec_t prec);
  // Decimal literal such as "1.9e16"; endpoints are the outward roundings.
  static Interval from_decimal(std::string_view s, mpfr_prec_t prec);
  static Interval hull(const Interval& x, const Interval& y);
  static Interval e(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  double lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double mid_d() const;
  mpq_class lo_q() const;
  mpq_class hi_q() const;
  // Smallest integer >= hi, largest integer <= lo.
  mpz_class ceil_hi() const;
  mpz_class floor_lo() const;

  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains_zero() const { return !positive() && !negative(); }
  bool contains(const Interval& x) const;
  bool contains(const mpq_class& q) const;
  // Certified comparisons: true only if they hold for every point.
  bool lt(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
  bool le(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
  bool gt(const Interval& o) const { return o.lt(*this); }
  bool ge(const Interval& o) const { return o.le(*this); }
  // log2 of the width, or -inf for a point interval.
  double log2_width() const;
  // Relative width (hi - lo) / |lo|, rounded up.
  double rel_width() const;

  std::string str(int digits = 12) const;

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval x, const Interval& y) { return x += y; }
  friend Interval operator-(Interval x, const Interval& y) { return x -= y; }
  friend Interval operator*(Interval x, const Interval& y) { return x *= y; }
  friend Interval operator/(Interval x, const Interval& y) { return x /= y; }
  friend Interval operator+(Interval x, long y);
  friend Interval operator-(Interval x, long y);
  friend Interval operator*(Interval x, long y);
  friend Interval operator/(Interval x, long y);
  friend Interval operator+(long x, const Interval& y) { return y + x; }
  friend Interval operator-(long x, const Interval& y);
  friend Interval operator*(long x, const Interval& y) { return y * x; }
  friend Interval operator/(long x, const Interval& y);
  Interval operator-() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval sqr(const Interval& x);
Interval sqrt(const Interval& x);
Interval log(const Interval& x);
Interval exp(const Interval& x);
Interval abs(const Interval& x);
Interval pow(const Interval& x, const Interval& y);  // x > 0
Interval pow(const Interval& x, unsigned long n);
Interval cbrt(const Interval& x);
Interval min(const Interval& x, const Interval& y);
Interval max(const Interval& x, const Interval& y);
// Upper and lower endpoints as degenerate intervals.
Interval upper(const Interval& x);
Interval lower(const Interval& x);

// Distance to the nearest integer, ||x||, enclosed over the interval.
Interval dist_to_int(const Interval& x);

}  // namespace dioph
