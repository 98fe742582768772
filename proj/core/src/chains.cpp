#include <algorithm>
#include <cmath>

#include "dioph/linforms.hpp"

namespace dioph {

namespace {

Interval dec(const std::string& s, mpfr_prec_t prec) { return Interval::from_decimal(s, prec); }

constexpr double kChainTol = 0.01;
constexpr double kConstTol = 1e-6;

// h > (2 sqrt 17 - 2) sqrt(ac).
Interval gap_constant(mpfr_prec_t prec) { return 2L * sqrt(Interval(17, prec)) - 2L; }

// Largest ac with k sqrt(ac) < hc log(2 sqrt(ac+1)) log(ac).
FixedPoint ac_from_hcoef(const Interval& hc, mpfr_prec_t prec) {
  const Interval k = gap_constant(prec);
  auto F = [&](const Interval& X) { return sqr(hc * log(2L * sqrt(X + 1L)) * log(X) / k); };
  return certified_crossing(F, dec("1e20", prec));
}

Interval h_from(const Interval& hc, const Interval& X) {
  const Interval x = upper(X);
  return upper(hc * log(2L * sqrt(x + 1L)) * log(x));
}

}  // namespace

// ---- first bound: Matveev ---------------------------------------------------

Prop1Result prop1_chain(mpfr_prec_t prec) {
  Prop1Result r;
  auto& cert = r.certificates;
  // Heights: A_1 = 2 log a1, A_2 = 2 log a2, A_3 = 4 log c, so Omega = 16 X.
  r.matveev_coef = matveev_constant(3, 4, prec) * 16L;
  r.w = matveev_w0_factor(4, prec);
  r.h_coef = r.matveev_coef / 4L;
  cert.push_back(make_certificate("prop1.matveev_coefficient", 4.928e12, r.matveev_coef,
                                  ClaimKind::Approx, 0.002));
  cert.push_back(make_certificate("prop1.w0_factor", 38.92, r.w, ClaimKind::Upper, 0));
  cert.push_back(make_certificate("prop1.h_coefficient", 1.232e12, r.h_coef, ClaimKind::Upper, kChainTol));

  const Interval k = gap_constant(prec);
  cert.push_back(make_certificate("prop1.sqrt_ac_coefficient", 1.98e11, r.h_coef / k, ClaimKind::Upper, kChainTol));
  cert.push_back(make_certificate("prop1.sqrt_ac_log_factor", 243.11, r.w * k, ClaimKind::Upper, kChainTol));

  auto F = [&](const Interval& X) {
    return sqr(r.h_coef * log(2L * sqrt(X + 1L)) * log(X) * log(r.w * k * sqrt(X)) / k);
  };
  const FixedPoint ac = certified_crossing(F, dec("1e20", prec));
  r.ac = ac.x;
  const Interval X = upper(ac.x);
  cert.push_back(make_certificate("prop1.ac", 6.18e32, r.ac, ClaimKind::Upper, kChainTol));

  const Interval Y = r.h_coef * log(2L * sqrt(X + 1L)) * log(X);
  cert.push_back(make_certificate("prop1.h_over_log", 3.577e15, Y, ClaimKind::Upper, kChainTol));
  auto G = [&](const Interval& h) { return Y * log(r.w * h); };
  r.h = certified_crossing(G, upper(Y)).x;
  cert.push_back(make_certificate("prop1.h", 1.55e17, r.h, ClaimKind::Upper, kChainTol));

  r.d = 4L * sqr(X) + 4L * X;
  cert.push_back(make_certificate("prop1.d", 1.53e66, r.d, ClaimKind::Upper, kChainTol));
  return r;
}

// ---- second bound: kit + Laurent -------------------------------------------

namespace {

struct PassSpec {
  KitParams kit;
  std::string varrho;
};

const std::string kMu2 = "0.61";

void laurent_domain_checks(const LaurentConstants& lc, const Interval& hp_min, const Interval& a1m,
                           const Interval& a2m, int D) {
  const mpfr_prec_t prec = hp_min.precision();
  if (!hp_min.ge(lc.lambda_p)) throw HypothesisViolation("Laurent: h' >= lambda fails at the domain minimum");
  if (!hp_min.ge(Interval(D, prec) * log(Interval(2, prec)) / 2L)) {
    throw HypothesisViolation("Laurent: h' >= D log 2 / 2 fails at the domain minimum");
  }
  if (!a1m.ge(Interval(1, prec)) || !a2m.ge(Interval(1, prec))) {
    throw HypothesisViolation("Laurent: a_i' >= 1 fails at the domain minimum");
  }
  if (!(a1m * a2m).ge(sqr(lc.lambda_p))) throw HypothesisViolation("Laurent: a_1' a_2' >= lambda^2 fails");
}

Prop2Pass run_pass(const PassSpec& ps, const KitDomain& dom, const Prop2Options& opt, bool converge,
                   mpfr_prec_t prec) {
  Prop2Pass P;
  P.kit = ps.kit;
  P.varrho = ps.varrho;
  P.condition = kit_condition_domain(ps.kit, dom, prec);
  P.kit_coef = kit_main_bound(ps.kit, dom, prec);
  P.h_kit = P.kit_coef / 4L;

  const KitDomainCheck& kd = P.condition;
  const Interval rho = dec(ps.kit.rho, prec);
  const Interval kk = dec("0.46", prec) * (rho - 1L) / 8L;
  const Interval lcmin = log(dom.c_min);
  const Interval l2min = log(2L * sqrt(dom.c_min));
  const Interval& a1min = kd.a1_min;
  const Interval& a2min = kd.a2_min;
  const Interval& a3min = kd.a3_min;

  // (A2): r_0 b_2 = s_0 b_1 etc. with M = 2V; B_i as multiples of log c, log a2.
  const Interval sc = sqrt(kd.c1);
  const Interval half(1, prec);
  const Interval h5 = half / 2L;
  const Interval fac1 = (1L + 1L / (kd.c1 * a2min * a3min)) / (1L - 1L / (2L * sc * a1min));
  P.b1c = (h5 * sc * 8L * (1L + kk / lcmin) + 1L / (2L * sc * a1min * lcmin)) * fac1;
  P.b2c = (h5 * sc * (rho + 3L) + 1L / (2L * sc * a2min * l2min)) *
          (1L + 1L / (kd.c1 * a1min * a3min)) / (1L - 1L / (2L * sc * a2min));
  P.b3c = (h5 * sc * (rho + 3L) + 1L / (2L * sc * a1min * l2min)) * fac1;
  P.h_gamma1 = h5 * P.b1c + P.b3c;
  P.h_gamma2 = h5 * (P.b2c + P.b3c);
  P.log_gamma1 = opt.published_log_gamma1 ? P.b1c + dec("0.06", prec)
                                          : P.b1c + dec("0.46", prec) * P.b3c / lcmin;
  P.log_gamma2 = (P.b3c / lcmin + P.log_gamma1) / (2L * P.h_kit);

  const int D = ps.kit.D;
  const Interval vr = dec(ps.varrho, prec);
  P.a1p_coef = (vr + 1L) * P.log_gamma1 + static_cast<long>(2 * D) * P.h_gamma1;
  P.a2p_coef = static_cast<long>(2 * D) * P.h_gamma2 + (vr + 1L) * P.log_gamma2 / sqr(l2min);
  P.F_coef = 2L / P.a1p_coef + 1L / (P.a2p_coef * sqr(l2min) * P.h_kit);

  const Interval lp = laurent_lambda(ps.varrho, kMu2, prec);
  const Interval sigma = laurent_sigma(kMu2, prec);
  const Interval hshift = static_cast<long>(D) * (log(lp) + dec("1.75", prec)) + dec("0.06", prec);
  const Interval hp_min = static_cast<long>(D) * log(P.F_coef * P.h_kit) + hshift;
  const Interval a1m = P.a1p_coef * l2min * lcmin;
  const Interval a2m = P.a2p_coef * sqr(l2min);
  P.laurent = laurent_constants(ps.varrho, kMu2, hp_min, a1m, a2m);
  laurent_domain_checks(P.laurent, hp_min, a1m, a2m, D);
  const LaurentConstants& L = P.laurent;

  // Additive terms relative to Z^2 log^3 a2 log c; each ratio decreases, so take minima.
  const Interval Z = hp_min + lp / sigma;
  const Interval den = sqr(Z) * pow(l2min, 3UL) * lcmin;
  const Interval small =
      (sqrt(L.omega * L.theta) * Z + log(L.C_prime * sqr(Z) * a1m * a2m) + log(P.b3c * l2min)) / den;
  const Interval Q = Interval(3, prec) / 4L * (L.C * P.a1p_coef * P.a2p_coef + small);
  const Interval shift = (hshift + lp / sigma) / 4L;

  Interval l2max = log(2L * sqrt(dom.ac_max + 1L));
  FixedPoint X;
  const unsigned rounds = converge ? 12 : 2;
  for (unsigned it = 0; it < rounds; ++it) {
    const FixedPoint F = solve_self_referential(16L * P.F_coef * Q * l2max, shift);
    P.F_bounds.push_back(F.x);
    const Interval hA2 = upper(F.x) / P.F_coef;
    P.h_A2.push_back(hA2);
    const Interval hc = max(upper(P.h_kit), upper(hA2));
    X = ac_from_hcoef(hc, prec);
    const bool settled = !P.ac_bounds.empty() &&
                         std::fabs(X.x.hi_d() / P.ac_bounds.back().hi_d() - 1) < 1e-9;
    P.ac_bounds.push_back(X.x);
    P.h_coef = hc;
    l2max = log(2L * sqrt(upper(X.x) + 1L));
    if (settled) break;
  }
  P.ac = X.x;
  P.h = h_from(P.h_coef, X.x);
  const Interval x = upper(X.x);
  P.d = 4L * sqr(x) + 4L * x;
  return P;
}

void pass1_certificates(const Prop2Pass& P, std::vector<BoundCertificate>& cert, bool published) {
  const auto& kd = P.condition;
  const auto up = ClaimKind::Upper;
  cert.push_back(make_certificate("prop2.pass1.c1", 611.59452, kd.c1, ClaimKind::Approx, kConstTol));
  cert.push_back(make_certificate("prop2.pass1.c2", 485.42289, kd.c2, ClaimKind::Approx, kConstTol));
  cert.push_back(make_certificate("prop2.pass1.c3", 5985.77903, kd.c3, ClaimKind::Approx, kConstTol));
  cert.push_back(make_certificate("prop2.pass1.c0", 11.3341, kd.c0, up, 0));
  cert.push_back(make_certificate("prop2.pass1.part_i_x", 7.357094e9, kd.lhs_x, ClaimKind::Lower, 1e-4));
  cert.push_back(make_certificate("prop2.pass1.part_i_y", 3.807296e9, kd.lhs_y, ClaimKind::Lower, 1e-4));
  cert.push_back(make_certificate("prop2.pass1.part_ii", 87.73, kd.part_ii, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.part_iii_x", 4.4894e9, kd.part_iii_x, up, kChainTol,
                                  "g bounded by its domain maximum instead of 1/4"));
  cert.push_back(make_certificate("prop2.pass1.part_iii_y", 2.3233e9, kd.part_iii_y, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.b_prime", 6.324e29, kd.b_prime, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.log_b_tilde", 70.1024, kd.log_b_tilde, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.part_iv_x", 2.8671e9, kd.part_iv_x, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.part_iv_y", 1.4837e9, kd.part_iv_y, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.kit_coefficient", 1.52656e10, P.kit_coef, ClaimKind::Approx, 1e-3));
  cert.push_back(make_certificate("prop2.pass1.h_kit", 3.8164e9, P.h_kit, ClaimKind::Approx, 1e-3));
  cert.push_back(make_certificate("prop2.pass1.B1", 102.734, P.b1c, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.B2", 160.814, P.b2c, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.B3", 160.915, P.b3c, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.h_gamma1", 212.2811, P.h_gamma1, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.h_gamma2", 160.8641, P.h_gamma2, up, kChainTol));
  const std::string lg1_note =
      published ? "replayed with the printed constant b1c + 0.06"
                : "includes 0.46 B_3 <= 0.46 b3c log a2 log c / log c_min";
  cert.push_back(make_certificate("prop2.pass1.log_gamma1", 102.794, P.log_gamma1, up, kChainTol, lg1_note));
  cert.push_back(make_certificate("prop2.pass1.a1_prime", 7146.331, P.a1p_coef, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.a2_prime", 1286.913, P.a2p_coef, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.sigma", 0.92395, P.laurent.sigma, ClaimKind::Approx, 1e-5));
  cert.push_back(make_certificate("prop2.pass1.lambda", 3.651, P.laurent.lambda_p, up, 0));
  cert.push_back(make_certificate("prop2.pass1.H", 19.6429, P.laurent.H, ClaimKind::Lower, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.omega", 4.00065, P.laurent.omega, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.theta", 1.02578, P.laurent.theta, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.C", 0.02413, P.laurent.C, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.C_prime", 0.05551, P.laurent.C_prime, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.iter1.F", 1.18493e7, P.F_bounds.at(0), up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.iter1.h_coefficient", 4.234e10, P.h_A2.at(0), up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.iter1.ac", 1.6e26, P.ac_bounds.at(0), up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.iter2.F", 9.2851e6, P.F_bounds.at(1), up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.iter2.h_coefficient", 3.3178e10, P.h_A2.at(1), up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.ac", 9.45e25, P.ac, up, kChainTol));
  cert.push_back(make_certificate("prop2.pass1.h", 6.08e13, P.h, up, kChainTol));
}

}  // namespace

Prop2Result prop2_chain(const Prop2Options& opt, mpfr_prec_t prec) {
  const Prop1Result p1 = prop1_chain(prec);
  Prop2Result r;
  r.certificates = p1.certificates;
  const std::vector<PassSpec> specs = {
      {KitParams{"10", "2", 625, "12.1", 4}, "52"},
      {KitParams{"9", "2", 519, "14.02", 4}, "57"},
      {KitParams{"9", "2", 518, "13.92", 4}, "56"},
  };
  KitDomain dom;
  dom.c_min = dec("1e6", prec);
  dom.ac_max = upper(p1.ac);
  dom.h_cap = upper(p1.h);
  dom.relation = HeightRelation{upper(p1.h_coef), true, upper(p1.w)};
  for (std::size_t i = 0; i < specs.size(); ++i) {
    Prop2Pass P = run_pass(specs[i], dom, opt, /*converge=*/i > 0, prec);
    if (i == 0) pass1_certificates(P, r.certificates, opt.published_log_gamma1);
    dom.ac_max = upper(P.ac);
    dom.h_cap = upper(P.h);
    dom.relation = HeightRelation{upper(P.h_coef), false, Interval(prec)};
    r.passes.push_back(std::move(P));
  }
  const auto up = ClaimKind::Upper;
  auto& c = r.certificates;
  c.push_back(make_certificate("prop2.pass2.ac", 6.87e25, r.passes[1].ac, up, kChainTol));
  c.push_back(make_certificate("prop2.pass2.h", 5.18e13, r.passes[1].h, up, kChainTol));
  const Prop2Pass& last = r.passes.back();
  r.h_coef = last.h_coef;
  r.ac = last.ac;
  r.h = last.h;
  r.d = last.d;
  c.push_back(make_certificate("prop2.h_coefficient", 2.8376e10, r.h_coef, up, kChainTol));
  c.push_back(make_certificate("prop2.ac", 6.77e25, r.ac, up, kChainTol));
  c.push_back(make_certificate("prop2.h", 5.136e13, r.h, up, kChainTol));
  c.push_back(make_certificate("prop2.d", 1.83e52, r.d, up, kChainTol));
  return r;
}

// ---- Euler triples -----------------------------------------------------------

namespace {

const std::string kVarrhoE = "61";
const std::string kMuE = "0.7";

// Shape of the Laurent step for Lambda = log(beta) - 2u log(gamma_1):
//   a_1' = 4 n log(beta_1) + k1,  a_2' = a2c log(beta_3) + a2add,  log beta_3 < log_b3(u),
//   b' = 2u / a_2' + 1 / a_1'_min,  log|Lambda| < -u (a_1' - k1) + log(8/3 x d) with
//   log(8/3 x d) < (a_1' - k1) / 2.
struct EulerShape {
  Interval u_min, eps, a1_base, a2c, a2add, lb3_min;
  std::function<Interval(const Interval&)> log_b3;
};

EulerLaurentStep euler_step(const EulerShape& sh, mpfr_prec_t prec) {
  EulerLaurentStep st;
  const Interval vr = dec(kVarrhoE, prec);
  const Interval lp = laurent_lambda(kVarrhoE, kMuE, prec);
  const Interval sigma = laurent_sigma(kMuE, prec);
  st.eps = sh.eps;
  // rho |log g| - log|g| <= (rho + 1)|log g|, 8 h(g) <= 4 n log beta_1 + 4 eps.
  st.k1 = (vr + 5L) * sh.eps;
  st.a1p_min = sh.a1_base + st.k1;
  st.a2p_min = sh.a2c * sh.lb3_min + sh.a2add;
  st.b_add = 1L / st.a1p_min;
  st.b_min = 2L * sh.u_min / (sh.a2c * sh.log_b3(sh.u_min) + sh.a2add) + st.b_add;
  const Interval hshift = 4L * (log(lp) + dec("1.75", prec)) + dec("0.06", prec);
  st.hp_min = 4L * log(st.b_min) + hshift;
  st.laurent = laurent_constants(kVarrhoE, kMuE, st.hp_min, st.a1p_min, st.a2p_min);
  laurent_domain_checks(st.laurent, st.hp_min, st.a1p_min, st.a2p_min, 4);
  const LaurentConstants& L = st.laurent;

  st.shift = (hshift + lp / sigma) / 4L;
  const Interval Ymin = log(st.b_min) + st.shift;
  const Interval P = st.a1p_min * st.a2p_min;
  if (!Ymin.gt(sqrt(Interval::e(prec))) || !(16L * L.C_prime * P).gt(Interval::e(prec))) {
    throw HypothesisViolation("Euler step: monotonicity range not reached");
  }
  // (b' - b_add)(1 - k1/a_1') < 32 C Y^2 + 8 sqrt(omega theta) Y / P
  //   + 2 log(16 C' Y^2 P) / P + 1 / a_2',  Y = log b' + shift.
  const Interval tail = 8L * sqrt(L.omega * L.theta) / (P * Ymin) +
                        (2L * log(16L * L.C_prime * P) + 4L * log(Ymin)) / (P * sqr(Ymin)) +
                        1L / (st.a2p_min * sqr(Ymin));
  st.coef = (32L * L.C + tail) / (1L - st.k1 / st.a1p_min) + st.b_add / sqr(Ymin);
  st.b_star = solve_self_referential(st.coef, st.shift);

  const Interval bs = upper(st.b_star.x) - st.b_add;
  auto G = [&](const Interval& u) { return bs / 2L * (sh.a2c * sh.log_b3(u) + sh.a2add); };
  st.bound = certified_crossing(G, dec("1e5", prec));
  return st;
}

}  // namespace

EulerResult euler_case_bounds(const Prop1Result& p1, const Interval& h_coef, mpfr_prec_t prec) {
  EulerResult r;
  auto& cert = r.certificates;
  const auto up = ClaimKind::Upper;
  const Interval vr = dec(kVarrhoE, prec);

  {  // s-case, r > 10000.
    const Interval rmin(10001, prec);
    EulerShape sh;
    sh.u_min = rmin + 1L;
    // |log gamma_1| < (log(2 sqrt(c/a)) + 1/(a d)) / s with sqrt(c) <= s and d > 4(r^2 - 1).
    sh.eps = (log(2L * sh.u_min) + 1L / (4L * (sqr(rmin) - 1L))) / sh.u_min;
    // beta_1 > 2 sqrt(ad) >= 2 sqrt(4 r^3).
    sh.a1_base = 4L * log(4L * rmin * sqrt(rmin));
    sh.a2c = 8L + (vr - 1L) / 3L;
    sh.a2add = Interval(0, prec);
    const Interval cmin = 2L * rmin + 2L * sqrt(sqr(rmin) - 1L);
    sh.lb3_min = log(2L * sqrt(cmin * 4L * rmin * (rmin + 1L) * (rmin + 2L)));
    sh.log_b3 = [](const Interval& u) { return log(4L * pow(u, 3UL) + 2L); };
    r.case1 = euler_step(sh, prec);
    r.s_bound = max(Interval(20000, prec), upper(r.case1.bound.x));
    const auto& L = r.case1.laurent;
    cert.push_back(make_certificate("euler1.a1_prime_min", 60, r.case1.a1p_min, ClaimKind::Lower, 0));
    cert.push_back(make_certificate("euler1.a2_prime_min", 574, r.case1.a2p_min, ClaimKind::Lower, 0));
    cert.push_back(make_certificate("euler1.h_prime_min", 25.4, r.case1.hp_min, ClaimKind::Lower, kChainTol));
    cert.push_back(make_certificate("euler1.H", 7.5, L.H, ClaimKind::Lower, 0));
    cert.push_back(make_certificate("euler1.omega", 4.01, L.omega, up, 0));
    cert.push_back(make_certificate("euler1.theta", 1.07, L.theta, up, 0));
    cert.push_back(make_certificate("euler1.C", 0.0226, L.C, up, kChainTol));
    cert.push_back(make_certificate("euler1.C_prime", 0.047, L.C_prime, up, kChainTol));
    cert.push_back(make_certificate("euler1.shift", 4.2, r.case1.shift, up, kChainTol));
    cert.push_back(make_certificate("euler1.coefficient", 0.725, r.case1.coef, up, kChainTol));
    cert.push_back(make_certificate("euler1.b_prime", 46.98, r.case1.b_star.x, up, kChainTol));
    cert.push_back(make_certificate("euler1.s", 20493, r.s_bound, up, kChainTol));
  }

  {  // t-case, r >= 145; r <= 144 gives t <= r + r^2 - 1 = 20879.
    const Interval rmin(145, prec);
    EulerShape sh;
    sh.u_min = 2L * rmin + 1L;
    const Interval bd_min = (rmin + 1L) * 4L * rmin * (rmin + 1L) * (2L * rmin + 1L);
    const Interval log73 = log(Interval(7, prec) / 3L);
    sh.eps = (log73 + 1L / bd_min) / sh.u_min;
    // beta_2 > 2 sqrt(bd) > 4 sqrt(2) r^2.
    sh.a1_base = 4L * log(4L * sqrt(Interval(2, prec)) * sqr(rmin));
    sh.a2c = Interval(8, prec);
    sh.a2add = (vr - 1L) * log73;
    const Interval cmin = 2L * rmin + 2L * sqrt(sqr(rmin) - 1L);
    sh.lb3_min = log(2L * sqrt(cmin * 4L * rmin * (rmin + 1L) * (2L * rmin + 1L)));
    sh.log_b3 = [](const Interval& u) { return log(4L * sqr(u) + 2L); };
    r.case2 = euler_step(sh, prec);
    r.t_bound = max(Interval(20879, prec), upper(r.case2.bound.x));
    cert.push_back(make_certificate("euler2.t", 22023, r.t_bound, up, kChainTol));
  }

  {  // Large r via the three-logarithm h-coefficient; h >= 2c(r - 1).
    const Interval r0(900000, prec);
    auto F = [&](const Interval& X) {
      return h_coef / 2L * log(2L * sqrt(X + 1L)) * log(X / r0);
    };
    r.X = certified_crossing(F, dec("1e12", prec)).x;
    cert.push_back(make_certificate("euler3.c_r_minus_1", 3.233e12, r.X, up, kChainTol));
    const Interval k399 = dec("3.99", prec);
    const Interval rstar = (1L + sqrt(1L + 4L * upper(r.X) / k399)) / 2L;
    r.r_bound = max(r0, rstar);
    cert.push_back(make_certificate("euler3.r", 900154, r.r_bound, up, kChainTol));

    const Interval R = upper(r.r_bound);
    r.h_large_c = h_coef * log(4L * R - 2L) * log(sqr(R) + 3L * R);
    cert.push_back(make_certificate("euler3.h_large_c", 1.2e13, r.h_large_c, up, kChainTol));

    const Interval cap = dec("2e8", prec);
    const Interval acmax = sqr(cap) / k399;
    r.h_over_log_small_c = p1.h_coef * log(2L * sqrt(acmax + 1L)) * log(cap);
    cert.push_back(make_certificate("euler3.h_over_log_small_c", 4.51e14, r.h_over_log_small_c, up, kChainTol));
    auto G = [&](const Interval& h) { return r.h_over_log_small_c * log(p1.w * h); };
    r.h_small_c = certified_crossing(G, upper(r.h_over_log_small_c)).x;
    cert.push_back(make_certificate("euler3.h_small_c", 1.9e16, r.h_small_c, up, kChainTol,
                                    "the lemma statement prints 9.6e15; its proof derives 1.9e16"));
    r.note = "Euler h cap: statement 9.6e15, proof 1.9e16; the proof value is certified.";
  }
  return r;
}

EulerResult euler_case_bounds(mpfr_prec_t prec) {
  const Prop1Result p1 = prop1_chain(prec);
  const Prop2Result p2 = prop2_chain({}, prec);
  return euler_case_bounds(p1, p2.h_coef, prec);
}

}  // namespace dioph
