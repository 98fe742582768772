#include "dioph/reduction.hpp"

#include <algorithm>

#include "dioph/tuple.hpp"

namespace dioph {

ConvergentStream::ConvergentStream(const Interval& x, const mpz_class& q_min) : q_min_(q_min) {
  mpq_class lo = x.lo_q();
  mpq_class hi = x.hi_q();
  ln_ = lo.get_num();
  ld_ = lo.get_den();
  hn_ = hi.get_num();
  hd_ = hi.get_den();
  exact_ = lo == hi;
}

ConvergentStream::ConvergentStream(const mpq_class& x, const mpz_class& q_min)
    : ln_(x.get_num()), ld_(x.get_den()), hn_(x.get_num()), hd_(x.get_den()), exact_(true),
      q_min_(q_min) {}

std::optional<Convergent> ConvergentStream::step() {
  if (done_) return std::nullopt;
  const bool lo_end = sgn(ld_) == 0;
  const bool hi_end = sgn(hd_) == 0;
  if (lo_end || hi_end) {
    if (exact_) {
      done_ = true;
      return std::nullopt;
    }
    throw AmbiguousExpansion("enclosure endpoint expansion terminated after " +
                             std::to_string(terms_) + " terms");
  }
  mpz_class al, rl, ah, rh;
  mpz_fdiv_qr(al.get_mpz_t(), rl.get_mpz_t(), ln_.get_mpz_t(), ld_.get_mpz_t());
  mpz_fdiv_qr(ah.get_mpz_t(), rh.get_mpz_t(), hn_.get_mpz_t(), hd_.get_mpz_t());
  if (al != ah) {
    throw AmbiguousExpansion("enclosure endpoints disagree at partial quotient " +
                             std::to_string(terms_));
  }
  ln_ = ld_;
  ld_ = rl;
  hn_ = hd_;
  hd_ = rh;
  mpz_class p = al * p1_ + p2_;
  mpz_class q = al * q1_ + q2_;
  p2_ = p1_;
  q2_ = q1_;
  p1_ = p;
  q1_ = q;
  ++terms_;
  return Convergent{p, q};
}

std::optional<Convergent> ConvergentStream::next() {
  for (;;) {
    auto c = step();
    if (!c) return std::nullopt;
    if (c->q > q_min_) return c;
  }
}

std::vector<Convergent> convergents(const Interval& x, const mpz_class& q_min, std::size_t count) {
  ConvergentStream s(x, q_min);
  std::vector<Convergent> out;
  while (out.size() < count) {
    auto c = s.next();
    if (!c) break;
    out.push_back(std::move(*c));
  }
  return out;
}

ReductionOutcome baker_davenport(const ReductionProblem& p, const ReductionConfig& cfg) {
  if (sgn(p.M) <= 0) throw std::invalid_argument("reduction cap M must be positive");
  if (!p.A.positive()) throw std::invalid_argument("reduction constant A must be positive");
  if (!p.B.gt(Interval(1, p.B.precision()))) throw std::invalid_argument("reduction base B must exceed 1");
  const mpfr_prec_t prec = std::max({p.kappa.precision(), p.mu.precision(), p.A.precision()});
  ConvergentStream stream(p.kappa, 6 * p.M);
  const Interval Mi = Interval::from_int(p.M, prec);
  unsigned attempts = 0;
  while (attempts <= cfg.extra_convergents) {
    auto c = stream.next();
    if (!c) break;
    ++attempts;
    const Interval qi = Interval::from_int(c->q, prec);
    Interval eta = lower(dist_to_int(p.mu * qi)) - Mi * upper(dist_to_int(p.kappa * qi));
    if (!eta.positive()) continue;
    eta = lower(eta);
    Interval x = log(p.A * qi / eta) / log(p.B);
    long j = static_cast<long>(x.ceil_hi().get_si()) - 1;
    ReductionOutcome out;
    out.j_threshold = std::max(0L, j);
    out.convergent_q = c->q;
    out.eta = eta;
    out.attempts = attempts;
    out.precision = prec;
    return out;
  }
  throw EtaNonPositive(attempts, "eta <= 0 for " + std::to_string(attempts) + " convergents");
}

mpfr_prec_t reduction_precision(const mpz_class& M) {
  mpz_class six_m = 6 * M;
  const auto bits = static_cast<mpfr_prec_t>(mpz_sizeinbase(six_m.get_mpz_t(), 2));
  return 2 * bits + 96;
}

ReductionOutcome reduce(const ProblemBuilder& build, mpfr_prec_t start, const ReductionConfig& cfg) {
  std::string last;
  for (mpfr_prec_t prec = start; prec <= cfg.precision_cap; prec *= 2) {
    try {
      return baker_davenport(build(prec), cfg);
    } catch (const AmbiguousExpansion& e) {
      last = e.what();
    } catch (const EtaNonPositive& e) {
      last = e.what();
    }
  }
  throw PrecisionExhausted("precision cap " + std::to_string(cfg.precision_cap) +
                           " bits reached; last failure: " + last);
}

ReductionProblem lambda1_problem(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                 const mpz_class& M) {
  return lambda1_problem(a, b, c, M, reduction_precision(M));
}

ReductionProblem lambda1_problem(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                 const mpz_class& M, mpfr_prec_t prec) {
  const DiophantineTriple t = DiophantineTriple::make(a, b, c);
  const Interval ai = Interval::from_int(t.a(), prec);
  const Interval bi = Interval::from_int(t.b(), prec);
  const Interval ci = Interval::from_int(t.c(), prec);
  const Interval sa = sqrt(ai), sb = sqrt(bi), sc = sqrt(ci);
  const Interval alpha1 = Interval::from_int(t.r(), prec) + sqrt(Interval::from_int(t.a() * t.b(), prec));
  const Interval alpha2 = Interval::from_int(t.s(), prec) + sqrt(Interval::from_int(t.a() * t.c(), prec));
  const Interval alpha3 = sc * (sa + sb) / (sb * (sa + sc));
  const Interval l1 = log(alpha1);
  const Interval l2 = log(alpha2);
  return ReductionProblem{l1 / l2, log(alpha3) / l2, 1L / l2, sqr(alpha1), M};
}

ReductionOutcome reduce_lambda1(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                const mpz_class& M, const ReductionConfig& cfg, mpfr_prec_t floor) {
  const DiophantineTriple t = DiophantineTriple::make(a, b, c);
  auto build = [&](mpfr_prec_t prec) { return lambda1_problem(t.a(), t.b(), t.c(), M, prec); };
  return reduce(build, std::max(floor, reduction_precision(M)), cfg);
}

}  // namespace dioph
