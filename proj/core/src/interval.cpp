#include "dioph/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dioph {

namespace {

// Raises the precision of x to at least p without changing its value.
void widen(Interval& x, mpfr_prec_t p) {
  if (x.precision() >= p) return;
  mpfr_prec_round(x.lo_mut(), p, MPFR_RNDD);
  mpfr_prec_round(x.hi_mut(), p, MPFR_RNDU);
}

class Tmp {
 public:
  explicit Tmp(mpfr_prec_t p) { mpfr_init2(v_, p); }
  ~Tmp() { mpfr_clear(v_); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Nearest-integer distance of a point, rounded in direction rnd.
void point_dist(mpfr_ptr out, mpfr_srcptr v, mpfr_rnd_t rnd) {
  Tmp f(mpfr_get_prec(v) + 2);
  Tmp g(mpfr_get_prec(v) + 2);
  mpfr_frac(f.get(), v, MPFR_RNDN);  // exact at this precision
  if (mpfr_sgn(f.get()) < 0) mpfr_add_ui(f.get(), f.get(), 1, MPFR_RNDN);  // exact
  mpfr_ui_sub(g.get(), 1, f.get(), MPFR_RNDN);                              // exact
  mpfr_min(f.get(), f.get(), g.get(), MPFR_RNDN);
  mpfr_set(out, f.get(), rnd);
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.precision());
  mpfr_set_prec(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_int(const mpz_class& n, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const mpq_class& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(std::string_view s, mpfr_prec_t prec) {
  std::string buf(s);
  Interval r(prec);
  if (mpfr_set_str(r.lo_, buf.c_str(), 10, MPFR_RNDD) != 0 ||
      mpfr_set_str(r.hi_, buf.c_str(), 10, MPFR_RNDU) != 0) {
    // mpfr_set_str returns nonzero only for malformed input
    throw std::invalid_argument("bad decimal literal: " + buf);
  }
  return r;
}

Interval Interval::hull(const Interval& x, const Interval& y) {
  Interval r(std::max(x.precision(), y.precision()));
  mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::e(mpfr_prec_t prec) {
  Interval one(1, prec);
  return exp(one);
}

double Interval::mid_d() const {
  Tmp m(precision() + 1);
  mpfr_add(m.get(), lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return mpfr_get_d(m.get(), MPFR_RNDN);
}

mpq_class Interval::lo_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return q;
}

mpq_class Interval::hi_q() const {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return q;
}

mpz_class Interval::ceil_hi() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
  return z;
}

mpz_class Interval::floor_lo() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), lo_, MPFR_RNDD);
  return z;
}

bool Interval::contains(const Interval& x) const {
  return mpfr_lessequal_p(lo_, x.lo_) && mpfr_lessequal_p(x.hi_, hi_);
}

bool Interval::contains(const mpq_class& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

double Interval::log2_width() const {
  Tmp w(precision() + 2);
  mpfr_sub(w.get(), hi_, lo_, MPFR_RNDU);
  if (mpfr_zero_p(w.get())) return -std::numeric_limits<double>::infinity();
  mpfr_log2(w.get(), w.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

double Interval::rel_width() const {
  Tmp w(precision() + 2);
  mpfr_sub(w.get(), hi_, lo_, MPFR_RNDU);
  if (contains_zero()) return std::numeric_limits<double>::infinity();
  Tmp a(precision());
  mpfr_abs(a.get(), lo_, MPFR_RNDD);
  Tmp b(precision());
  mpfr_abs(b.get(), hi_, MPFR_RNDD);
  mpfr_min(a.get(), a.get(), b.get(), MPFR_RNDD);
  mpfr_div(w.get(), w.get(), a.get(), MPFR_RNDU);
  return mpfr_get_d(w.get(), MPFR_RNDU);
}

std::string Interval::str(int digits) const {
  char* a = nullptr;
  char* b = nullptr;
  mpfr_asprintf(&a, "%.*RDg", digits, lo_);
  mpfr_asprintf(&b, "%.*RUg", digits, hi_);
  std::string s = std::string("[") + a + ", " + b + "]";
  mpfr_free_str(a);
  mpfr_free_str(b);
  return s;
}

Interval& Interval::operator+=(const Interval& o) {
  widen(*this, o.precision());
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  widen(*this, o.precision());
  if (this == &o) {
    Interval c(o);
    return *this -= c;
  }
  mpfr_sub(lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator*=(const Interval& o) {
  widen(*this, o.precision());
  if (this == &o) {
    *this = sqr(*this);
    return *this;
  }
  if (mpfr_sgn(lo_) >= 0 && mpfr_sgn(o.lo_) >= 0) {
    mpfr_mul(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
  }
  const mpfr_prec_t p = precision();
  Tmp l(p), h(p), t(p);
  mpfr_srcptr xs[2] = {lo_, hi_};
  mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  mpfr_mul(l.get(), xs[0], ys[0], MPFR_RNDD);
  mpfr_mul(h.get(), xs[0], ys[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      mpfr_mul(t.get(), xs[i], ys[j], MPFR_RNDD);
      mpfr_min(l.get(), l.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), xs[i], ys[j], MPFR_RNDU);
      mpfr_max(h.get(), h.get(), t.get(), MPFR_RNDU);
    }
  }
  mpfr_set(lo_, l.get(), MPFR_RNDD);
  mpfr_set(hi_, h.get(), MPFR_RNDU);
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  widen(*this, o.precision());
  if (this == &o) {
    Interval c(o);
    return *this /= c;
  }
  if (mpfr_sgn(lo_) >= 0 && o.positive()) {
    mpfr_div(lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_div(hi_, hi_, o.lo_, MPFR_RNDU);
    return *this;
  }
  const mpfr_prec_t p = precision();
  Tmp l(p), h(p), t(p);
  mpfr_srcptr xs[2] = {lo_, hi_};
  mpfr_srcptr ys[2] = {o.lo_, o.hi_};
  mpfr_div(l.get(), xs[0], ys[0], MPFR_RNDD);
  mpfr_div(h.get(), xs[0], ys[0], MPFR_RNDU);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (i == 0 && j == 0) continue;
      mpfr_div(t.get(), xs[i], ys[j], MPFR_RNDD);
      mpfr_min(l.get(), l.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), xs[i], ys[j], MPFR_RNDU);
      mpfr_max(h.get(), h.get(), t.get(), MPFR_RNDU);
    }
  }
  mpfr_set(lo_, l.get(), MPFR_RNDD);
  mpfr_set(hi_, h.get(), MPFR_RNDU);
  return *this;
}

Interval operator+(Interval x, long y) {
  mpfr_add_si(x.lo_, x.lo_, y, MPFR_RNDD);
  mpfr_add_si(x.hi_, x.hi_, y, MPFR_RNDU);
  return x;
}

Interval operator-(Interval x, long y) {
  mpfr_sub_si(x.lo_, x.lo_, y, MPFR_RNDD);
  mpfr_sub_si(x.hi_, x.hi_, y, MPFR_RNDU);
  return x;
}

Interval operator*(Interval x, long y) {
  if (y >= 0) {
    mpfr_mul_si(x.lo_, x.lo_, y, MPFR_RNDD);
    mpfr_mul_si(x.hi_, x.hi_, y, MPFR_RNDU);
    return x;
  }
  Interval r(x.precision());
  mpfr_mul_si(r.lo_, x.hi_, y, MPFR_RNDD);
  mpfr_mul_si(r.hi_, x.lo_, y, MPFR_RNDU);
  return r;
}

Interval operator/(Interval x, long y) {
  if (y == 0) throw std::domain_error("division by zero");
  if (y > 0) {
    mpfr_div_si(x.lo_, x.lo_, y, MPFR_RNDD);
    mpfr_div_si(x.hi_, x.hi_, y, MPFR_RNDU);
    return x;
  }
  return x / Interval(y, x.precision());
}

Interval operator-(long x, const Interval& y) { return Interval(x, y.precision()) - y; }

Interval operator/(long x, const Interval& y) { return Interval(x, y.precision()) / y; }

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& x) {
  Interval r(x.precision());
  if (x.positive() || mpfr_sgn(x.lo()) == 0) {
    mpfr_sqr(r.lo_mut(), x.lo(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut(), x.hi(), MPFR_RNDU);
  } else if (x.negative()) {
    mpfr_sqr(r.lo_mut(), x.hi(), MPFR_RNDD);
    mpfr_sqr(r.hi_mut(), x.lo(), MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_mut(), 1);
    Tmp a(x.precision());
    mpfr_sqr(r.hi_mut(), x.lo(), MPFR_RNDU);
    mpfr_sqr(a.get(), x.hi(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), r.hi_mut(), a.get(), MPFR_RNDU);
  }
  return r;
}

Interval sqrt(const Interval& x) {
  if (x.negative() || mpfr_sgn(x.lo()) < 0) throw std::domain_error("sqrt of a negative interval");
  Interval r(x.precision());
  mpfr_sqrt(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_sqrt(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval cbrt(const Interval& x) {
  Interval r(x.precision());
  mpfr_cbrt(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_cbrt(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval log(const Interval& x) {
  if (!x.positive()) throw std::domain_error("log of a non-positive interval");
  Interval r(x.precision());
  mpfr_log(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_log(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval exp(const Interval& x) {
  Interval r(x.precision());
  mpfr_exp(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_exp(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval abs(const Interval& x) {
  if (x.positive() || mpfr_sgn(x.lo()) == 0) return x;
  if (x.negative()) return -x;
  Interval r(x.precision());
  mpfr_set_zero(r.lo_mut(), 1);
  mpfr_neg(r.hi_mut(), x.lo(), MPFR_RNDU);
  mpfr_max(r.hi_mut(), r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval pow(const Interval& x, const Interval& y) { return exp(y * log(x)); }

Interval pow(const Interval& x, unsigned long n) {
  if (mpfr_sgn(x.lo()) >= 0) {
    Interval r(x.precision());
    mpfr_pow_ui(r.lo_mut(), x.lo(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_mut(), x.hi(), n, MPFR_RNDU);
    return r;
  }
  Interval r(1, x.precision());
  for (unsigned long i = 0; i < n; ++i) r *= x;
  return r;
}

Interval min(const Interval& x, const Interval& y) {
  Interval r(std::max(x.precision(), y.precision()));
  mpfr_min(r.lo_mut(), x.lo(), y.lo(), MPFR_RNDD);
  mpfr_min(r.hi_mut(), x.hi(), y.hi(), MPFR_RNDU);
  return r;
}

Interval max(const Interval& x, const Interval& y) {
  Interval r(std::max(x.precision(), y.precision()));
  mpfr_max(r.lo_mut(), x.lo(), y.lo(), MPFR_RNDD);
  mpfr_max(r.hi_mut(), x.hi(), y.hi(), MPFR_RNDU);
  return r;
}

Interval upper(const Interval& x) {
  Interval r(x.precision());
  mpfr_set(r.lo_mut(), x.hi(), MPFR_RNDD);
  mpfr_set(r.hi_mut(), x.hi(), MPFR_RNDU);
  return r;
}

Interval lower(const Interval& x) {
  Interval r(x.precision());
  mpfr_set(r.lo_mut(), x.lo(), MPFR_RNDD);
  mpfr_set(r.hi_mut(), x.lo(), MPFR_RNDU);
  return r;
}

Interval dist_to_int(const Interval& x) {
  const mpfr_prec_t p = x.precision();
  Interval r(p);
  // integer inside [lo, hi] iff floor(hi) >= ceil(lo); same test shifted by 1/2 for half-integers
  mpz_class fl, ch;
  mpfr_get_z(fl.get_mpz_t(), x.hi(), MPFR_RNDD);
  mpfr_get_z(ch.get_mpz_t(), x.lo(), MPFR_RNDU);
  const bool has_int = fl >= ch;

  // enough bits that subtracting 1/2 is exact
  mpfr_prec_t ps = p;
  for (mpfr_srcptr v : {x.lo(), x.hi()}) {
    if (mpfr_regular_p(v)) ps = std::max<mpfr_prec_t>(ps, mpfr_get_exp(v) + 2);
  }
  ps += 2;
  Tmp lo_s(ps), hi_s(ps);
  mpfr_set(lo_s.get(), x.lo(), MPFR_RNDN);
  mpfr_set(hi_s.get(), x.hi(), MPFR_RNDN);
  mpfr_sub_d(lo_s.get(), lo_s.get(), 0.5, MPFR_RNDN);
  mpfr_sub_d(hi_s.get(), hi_s.get(), 0.5, MPFR_RNDN);
  mpz_class fl2, ch2;
  mpfr_get_z(fl2.get_mpz_t(), hi_s.get(), MPFR_RNDD);
  mpfr_get_z(ch2.get_mpz_t(), lo_s.get(), MPFR_RNDU);
  const bool has_half = fl2 >= ch2;

  Tmp dl(p), dh(p), t(p);
  if (has_int) {
    mpfr_set_zero(r.lo_mut(), 1);
  } else {
    point_dist(dl.get(), x.lo(), MPFR_RNDD);
    point_dist(t.get(), x.hi(), MPFR_RNDD);
    mpfr_min(r.lo_mut(), dl.get(), t.get(), MPFR_RNDD);
  }
  if (has_half) {
    mpfr_set_d(r.hi_mut(), 0.5, MPFR_RNDU);
  } else {
    point_dist(dh.get(), x.lo(), MPFR_RNDU);
    point_dist(t.get(), x.hi(), MPFR_RNDU);
    mpfr_max(r.hi_mut(), dh.get(), t.get(), MPFR_RNDU);
  }
  return r;
}

}  // namespace dioph
