#include "dioph/linforms.hpp"

#include <algorithm>
#include <cmath>

namespace dioph {

namespace {

Interval dec(const std::string& s, mpfr_prec_t prec) { return Interval::from_decimal(s, prec); }

Interval floor_iv(const Interval& x) {
  mpz_class lo = x.floor_lo();
  mpz_class hi;
  mpfr_get_z(hi.get_mpz_t(), x.hi(), MPFR_RNDD);
  return Interval::hull(Interval::from_int(lo, x.precision()), Interval::from_int(hi, x.precision()));
}

Interval two_thirds_pow(const Interval& x) { return cbrt(sqr(x)); }

}  // namespace

bool BoundCertificate::pass() const {
  const double c = claimed;
  switch (kind) {
    case ClaimKind::Upper:
      return recomputed.hi_d() <= c * (1 + tolerance);
    case ClaimKind::Lower:
      return recomputed.lo_d() >= c * (1 - tolerance);
    case ClaimKind::Approx:
      return recomputed.hi_d() <= c * (1 + tolerance) && recomputed.lo_d() >= c * (1 - tolerance);
  }
  return false;
}

double BoundCertificate::margin() const {
  const double up = recomputed.hi_d() / claimed - 1;
  const double down = 1 - recomputed.lo_d() / claimed;
  switch (kind) {
    case ClaimKind::Upper:
      return up;
    case ClaimKind::Lower:
      return down;
    case ClaimKind::Approx:
      return std::max(up, down);
  }
  return 0;
}

BoundCertificate make_certificate(std::string name, double claimed, Interval recomputed,
                                  ClaimKind kind, double tolerance, std::string note) {
  BoundCertificate c;
  c.name = std::move(name);
  c.claimed = claimed;
  c.recomputed = std::move(recomputed);
  c.kind = kind;
  c.tolerance = tolerance;
  c.note = std::move(note);
  return c;
}

bool all_pass(const std::vector<BoundCertificate>& certs) {
  return std::all_of(certs.begin(), certs.end(), [](const auto& c) { return c.pass(); });
}

// ---- Matveev ---------------------------------------------------------------

Interval matveev_C(int N, mpfr_prec_t prec) {
  if (N < 1) throw std::invalid_argument("Matveev: N >= 1");
  Interval fact(1, prec);
  for (int i = 2; i < N; ++i) fact = fact * static_cast<long>(i);
  const Interval e = Interval::e(prec);
  Interval base = e * static_cast<long>(4 * (N + 1));
  return Interval(8, prec) / fact * static_cast<long>((N + 2) * (2 * N + 3)) *
         pow(base, static_cast<unsigned long>(N + 1));
}

Interval matveev_C0(int N, int D, mpfr_prec_t prec) {
  if (N < 1 || D < 1) throw std::invalid_argument("Matveev: N, D >= 1");
  const Interval n(N, prec), d(D, prec);
  const Interval lin = dec("4.4", prec) * n + 7L;
  return lin + dec("5.5", prec) * log(n) + 2L * log(d) + log(1L + log(d));
}

Interval matveev_constant(int N, int D, mpfr_prec_t prec) {
  return matveev_C(N, prec) * matveev_C0(N, D, prec) * sqr(Interval(D, prec));
}

Interval matveev_w0_factor(int D, mpfr_prec_t prec) {
  const Interval e = Interval::e(prec);
  const Interval d(D, prec);
  return dec("1.5", prec) * e * d * (1L + log(d));
}

Interval matveev_lower_bound(const MatveevInput& in) {
  const std::size_t N = in.b.size();
  if (N == 0 || in.A.size() != N) throw std::invalid_argument("Matveev: b and A must match");
  const mpfr_prec_t prec = in.A.front().precision();
  Interval prod(1, prec);
  for (const Interval& a : in.A) {
    if (!a.positive()) throw HypothesisViolation("Matveev: A_j must be positive");
    prod *= a;
  }
  long B = 1;
  for (long b : in.b) B = std::max(B, std::labs(b));
  const Interval W0 = log(matveev_w0_factor(in.D, prec) * Interval(B, prec));
  return -(matveev_constant(static_cast<int>(N), in.D, prec) * W0 * prod);
}

// ---- fixed points ----------------------------------------------------------

FixedPoint certified_crossing(const std::function<Interval(const Interval&)>& F, const Interval& x0,
                              unsigned max_iter) {
  const mpfr_prec_t prec = x0.precision();
  const Interval cap = dec("1e300", prec);
  Interval x = upper(x0);
  unsigned it = 0;
  for (; it < max_iter; ++it) {
    Interval nx = upper(F(x));
    if (!nx.lt(cap)) throw ConvergenceFailure("fixed-point iteration diverged past 1e300");
    const double rel = std::fabs(nx.hi_d() / x.hi_d() - 1);
    x = nx;
    if (rel < 1e-4) break;
  }
  if (it == max_iter) throw ConvergenceFailure("fixed-point iteration did not settle");
  Interval hi = upper(x * dec("1.0002", prec));
  Interval lo = lower(x * dec("0.9998", prec));
  if (!F(hi).le(hi)) throw ConvergenceFailure("candidate bound fails F(x) <= x");
  if (!F(lo).gt(lo)) throw ConvergenceFailure("lower bracket fails F(x) > x");
  // Bisect the bracket down to about 2^-48 relative width.
  for (int k = 0; k < 40; ++k) {
    const Interval m = upper((lo + hi) / 2L);
    if (!m.lt(hi) || !lower(m).gt(lo)) break;
    const Interval fm = F(m);
    if (fm.le(m)) {
      hi = m;
    } else if (fm.gt(m)) {
      lo = lower(m);
    } else {
      break;
    }
  }
  return FixedPoint{Interval::hull(lo, hi), it + 1};
}

FixedPoint solve_self_referential(const Interval& coef, const Interval& shift) {
  if (!coef.positive()) throw std::invalid_argument("self-referential bound: coef must be positive");
  auto F = [&](const Interval& X) { return coef * sqr(log(X) + shift); };
  FixedPoint fp = certified_crossing(F, exp(upper(shift)));
  // coef (log X + s)^2 / X decreases once log X + s > 2.
  if (!(log(lower(fp.x)) + shift).gt(Interval(2, coef.precision()))) {
    throw ConvergenceFailure("self-referential bound: crossing below the monotone range");
  }
  return fp;
}

// ---- kit -------------------------------------------------------------------

namespace {

struct KitConsts {
  Interval rho, chi, M, lambda, L;
  int D;
};

KitConsts kit_consts(const KitParams& p, mpfr_prec_t prec) {
  if (p.L < 4 + p.D) throw std::invalid_argument("kit: L must be >= 4 + D");
  KitConsts k{dec(p.rho, prec), dec(p.chi, prec), dec(p.M, prec), Interval(prec),
              Interval(p.L, prec), p.D};
  if (!k.rho.ge(Interval::e(prec))) throw std::invalid_argument("kit: rho must be >= e");
  if (!k.M.ge(Interval(3, prec))) throw std::invalid_argument("kit: M must be >= 3");
  if (!k.chi.positive() || !k.chi.le(Interval(2, prec))) {
    throw std::invalid_argument("kit: chi must lie in (0, 2]");
  }
  k.lambda = log(k.rho);
  return k;
}

}  // namespace

KitCondition kit_condition(const KitParams& p, const Interval& la1, const Interval& la2,
                           const Interval& lc, const Interval& h_cap) {
  const mpfr_prec_t prec = std::max(la1.precision(), lc.precision());
  const KitConsts k = kit_consts(p, prec);
  const Interval& L = k.L;
  const Interval a1 = (k.rho + 3L) * la1;
  const Interval a2 = (k.rho + 3L) * la2;
  const Interval a3 = dec("0.46", prec) * (k.rho - 1L) + 8L * lc;
  const Interval Omega = a1 * a2 * a3;
  const Interval A = min(min(a1, a2), a3);
  if (!Omega.ge(dec("2.5", prec)) || !A.ge(dec("0.62", prec))) {
    throw HypothesisViolation("kit: need Omega >= 2.5 and min a_i >= 0.62");
  }
  const Interval ML = k.M * L;
  const Interval K = floor_iv(ML * Omega);
  const Interval c1 = max(two_thirds_pow(k.chi * ML), sqrt(2L * ML / A));
  const Interval c2 = max(cbrt(Interval(2, prec)) * two_thirds_pow(ML), sqrt(k.M / A) * L);
  const Interval c3 = cbrt(6L * sqr(k.M)) * L;
  const Interval R = floor_iv(c1 * a2 * a3) + floor_iv(c2 * a2 * a3) + floor_iv(c3 * a2 * a3) + 1L;
  const Interval S = floor_iv(c1 * a1 * a3) + floor_iv(c2 * a1 * a3) + floor_iv(c3 * a1 * a3) + 1L;
  const Interval T = floor_iv(c1 * a1 * a2) + floor_iv(c2 * a1 * a2) + floor_iv(c3 * a1 * a2) + 1L;
  const Interval c0 = max(max(R / (L * a2 * a3), S / (L * a1 * a3)), T / (L * a1 * a2));
  const Interval g = Interval(1, prec) / 4L - sqr(K) * L / (12L * R * S * T);

  // b_1 = 2h, b_2 = 2j <= 2h, b_3 = 1; gcd reductions only shrink b'.
  const Interval h2 = 2L * h_cap;
  const Interval bp = (h2 / a2 + h2 / a1) * (1L / a2 + h2 / a3);
  const Interval bt = exp(Interval(3, prec)) * sqr(c0) * sqr(Omega) * sqr(L) / (4L * sqr(K)) * bp;

  KitCondition out;
  out.lhs = (K * L / 2L + L / 4L - 1L - 2L * K / (3L * L)) * k.lambda +
            static_cast<long>(2 * k.D) * log(dec("1.36", prec));
  out.part_ii = static_cast<long>(k.D + 1) * log(L) + 2L * log(K);
  out.part_iii = 3L * g * sqr(L) * c0 * Omega;
  out.part_iv = static_cast<long>(k.D) * (K - 1L) * log(bt);
  out.holds = out.lhs.gt(out.part_ii + out.part_iii + out.part_iv);
  return out;
}

bool kit_condition_holds(const KitParams& p, const Interval& la1, const Interval& la2,
                         const Interval& lc, const Interval& h_cap) {
  return kit_condition(p, la1, la2, lc, h_cap).holds;
}

KitDomainCheck kit_condition_domain(const KitParams& p, const KitDomain& dom, mpfr_prec_t prec) {
  const KitConsts k = kit_consts(p, prec);
  const Interval& L = k.L;
  const Interval& M = k.M;
  const Interval D(k.D, prec);
  const Interval kk = dec("0.46", prec) * (k.rho - 1L) / 8L;  // a_3 = 8 (log c + kk)
  const Interval W = sqr(k.rho + 3L) * 8L;                     // Omega = W (X + kk Y)

  // b > c^{1/3} gives alpha_1 > 2 sqrt(b) > c^{1/6}; alpha_2 > 2 sqrt(c).
  const Interval lcmin = log(dom.c_min);
  const Interval l1min = lcmin / 6L;
  const Interval l2min = log(2L * sqrt(dom.c_min));
  const Interval l2max = log(2L * sqrt(dom.ac_max + 1L));
  const Interval lcmax = log(dom.ac_max);

  KitDomainCheck r;
  r.a1_min = (k.rho + 3L) * l1min;
  r.a2_min = (k.rho + 3L) * l2min;
  r.a3_min = 8L * (lcmin + kk);
  const Interval Amin = min(min(r.a1_min, r.a2_min), r.a3_min);
  const Interval minpair = min(min(r.a1_min * r.a2_min, r.a1_min * r.a3_min), r.a2_min * r.a3_min);
  const Interval ML = M * L;

  // On this domain the first branch of each max is the larger one.
  const Interval c1a = two_thirds_pow(k.chi * ML), c1b = sqrt(2L * ML / Amin);
  const Interval c2a = cbrt(Interval(2, prec)) * two_thirds_pow(ML), c2b = sqrt(M / Amin) * L;
  if (!c1a.gt(c1b) || !c2a.gt(c2b)) {
    throw HypothesisViolation("kit domain: c_1/c_2 branch is not the power term");
  }
  r.c1 = c1a;
  r.c2 = c2a;
  r.c3 = cbrt(6L * sqr(M)) * L;
  const Interval sc = r.c1 + r.c2 + r.c3;
  r.c0 = sc / L + 1L / (L * minpair);

  const Interval Omin = W * l1min * l2min * (lcmin + kk);
  const Interval Omax = W * sqr(l2max) * (lcmax + kk);
  r.part_ii = (D + 1L) * log(L) + 2L * log(ML * Omax);

  // b' <= (4h+2)(2h+2) / (a_2 a_3) <= (4h+2)(2h+2) / (8 (rho+3) log a2 log c).
  const Interval& h = dom.h_cap;
  Interval rel = dom.relation.coef;
  if (dom.relation.with_log) rel = rel * log(dom.relation.w * h);
  r.b_prime = (4L * h + 2L) * (2L * h + 2L) / ((k.rho + 3L) * 8L) * rel / h;
  r.log_b_tilde = 3L + 2L * log(r.c0) + log(r.b_prime) - log(4L * sqr(M - 1L / (Omin * L)));

  const Interval Lfac = L / 2L - 2L / (3L * L);
  r.lhs_x = M * W * L * Lfac * k.lambda;
  r.lhs_y = r.lhs_x * kk;
  r.gamma = Lfac * k.lambda - (L / 4L - 1L) * k.lambda - 2L * D * log(dec("1.36", prec));

  r.g_max = Interval(1, prec) / 4L -
            sqr(M) * pow(L, 3UL) * sqr(1L - 1L / (M * Omin * L)) /
                (12L * pow(sc, 3UL) * pow(1L + 1L / (sc * minpair), 3UL));
  r.part_iii_x = 3L * r.g_max * sqr(L) * r.c0 * W;
  r.part_iii_y = r.part_iii_x * kk;
  r.part_iv_x = D * M * W * L * r.log_b_tilde;
  r.part_iv_y = r.part_iv_x * kk;

  const Interval cx = r.lhs_x - r.part_iii_x - r.part_iv_x;
  const Interval cy = r.lhs_y - r.part_iii_y - r.part_iv_y;
  const Interval Xmin = l1min * l2min * lcmin;
  const Interval Ymin = l1min * l2min;
  r.margin = cx * Xmin + cy * Ymin - r.gamma - r.part_ii;
  r.holds = cx.positive() && cy.positive() && r.margin.positive();
  return r;
}

Interval kit_main_bound(const KitParams& p, const KitDomain& dom, mpfr_prec_t prec) {
  const KitDomainCheck chk = kit_condition_domain(p, dom, prec);
  if (!chk.holds) throw HypothesisViolation("kit: condition not certified on the domain");
  const KitConsts k = kit_consts(p, prec);
  const Interval kk = dec("0.46", prec) * (k.rho - 1L) / 8L;
  const Interval W = sqr(k.rho + 3L) * 8L;
  const Interval lcmin = log(dom.c_min);
  const Interval Xmin = lcmin / 6L * log(2L * sqrt(dom.c_min)) * lcmin;
  const Interval l2max = log(2L * sqrt(dom.ac_max + 1L));
  const Interval Omax = W * sqr(l2max) * (log(dom.ac_max) + kk);
  const Interval ML2 = k.M * sqr(k.L);
  return k.lambda * (ML2 * W * (1L + kk / lcmin) + log(3L * ML2 * Omax) / Xmin);
}

// ---- Laurent ---------------------------------------------------------------

Interval laurent_sigma(const std::string& mu, mpfr_prec_t prec) {
  const Interval m = dec(mu, prec);
  return (1L + 2L * m - sqr(m)) / 2L;
}

Interval laurent_lambda(const std::string& varrho, const std::string& mu, mpfr_prec_t prec) {
  return laurent_sigma(mu, prec) * log(dec(varrho, prec));
}

LaurentConstants laurent_constants(const std::string& varrho, const std::string& mu,
                                   const Interval& hp, const Interval& a1p, const Interval& a2p) {
  const mpfr_prec_t prec = hp.precision();
  const Interval m = dec(mu, prec);
  LaurentConstants c;
  c.sigma = laurent_sigma(mu, prec);
  c.lambda_p = laurent_lambda(varrho, mu, prec);
  const Interval& lp = c.lambda_p;
  c.H = hp / lp + 1L / c.sigma;
  const Interval root = sqrt(1L + 1L / (4L * sqr(c.H)));
  c.omega = 2L * (1L + root);
  c.theta = root + 1L / (2L * c.H);
  const Interval& om = c.omega;
  const Interval inner = sqr(om) / 9L +
                         8L * lp * pow(om, dec("1.25", prec)) * pow(c.theta, dec("0.25", prec)) /
                             (3L * sqrt(a1p * a2p) * sqrt(c.H)) +
                         Interval(4, prec) / 3L * (1L / a1p + 1L / a2p) * lp * om / c.H;
  c.C = m / (pow(lp, 3UL) * c.sigma) * sqr(om / 6L + sqrt(inner) / 2L);
  c.C_prime = sqrt(c.C * c.sigma * om * c.theta / (pow(lp, 3UL) * m));
  return c;
}

Interval laurent_lower_bound(const LaurentParams& p, const mpz_class& b1, const mpz_class& b2) {
  const mpfr_prec_t prec = p.hp.precision();
  if (sgn(b1) <= 0 || sgn(b2) <= 0) throw std::invalid_argument("Laurent: b1, b2 must be positive");
  const Interval D(p.D, prec);
  const Interval lp = laurent_lambda(p.varrho, p.mu, prec);
  const Interval one(1, prec);
  if (!p.a1p.ge(one) || !p.a2p.ge(one)) throw HypothesisViolation("Laurent: a_i' >= 1 violated");
  if (!(p.a1p * p.a2p).ge(sqr(lp))) throw HypothesisViolation("Laurent: a_1' a_2' >= lambda^2 violated");
  const Interval B1 = Interval::from_int(b1, prec), B2 = Interval::from_int(b2, prec);
  const Interval need = D * (log(B1 / p.a2p + B2 / p.a1p) + log(lp) + dec("1.75", prec)) +
                        dec("0.06", prec);
  if (!p.hp.ge(need)) throw HypothesisViolation("Laurent: h' >= D(log(b') + log lambda + 1.75) + 0.06 violated");
  if (!p.hp.ge(lp)) throw HypothesisViolation("Laurent: h' >= lambda violated");
  if (!p.hp.ge(D * log(Interval(2, prec)) / 2L)) throw HypothesisViolation("Laurent: h' >= D log 2 / 2 violated");
  const LaurentConstants c = laurent_constants(p.varrho, p.mu, p.hp, p.a1p, p.a2p);
  const Interval Z = p.hp + lp / c.sigma;
  const Interval P = p.a1p * p.a2p;
  return -(c.C * sqr(Z) * P) - sqrt(c.omega * c.theta) * Z - log(c.C_prime * sqr(Z) * P);
}

}  // namespace dioph
