#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dioph/interval.hpp"

namespace dioph {

class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ClaimKind {
  Upper,   // recomputed <= claimed * (1 + tolerance)
  Lower,   // recomputed >= claimed * (1 - tolerance)
  Approx,  // |recomputed / claimed - 1| <= tolerance
};

struct BoundCertificate {
  std::string name;
  double claimed = 0;
  Interval recomputed;
  ClaimKind kind = ClaimKind::Upper;
  double tolerance = 0;
  std::string note;

  bool pass() const;
  // Relative excess over the claim in the failing direction; <= tolerance when passing.
  double margin() const;
};

BoundCertificate make_certificate(std::string name, double claimed, Interval recomputed,
                                  ClaimKind kind, double tolerance, std::string note = {});

bool all_pass(const std::vector<BoundCertificate>& certs);

// ---- Matveev ---------------------------------------------------------------

// C(N) * C0 * D^2, i.e. everything except W0 and Omega.
Interval matveev_constant(int N, int D, mpfr_prec_t prec = 128);
Interval matveev_C(int N, mpfr_prec_t prec = 128);
Interval matveev_C0(int N, int D, mpfr_prec_t prec = 128);
// 1.5 e D log(eD); W0 = log(this * E).
Interval matveev_w0_factor(int D, mpfr_prec_t prec = 128);

struct MatveevInput {
  int D = 1;
  std::vector<long> b;
  std::vector<Interval> A;  // A_j >= max(D h(alpha_j), |log alpha_j|)
};

// Lower bound for log|Lambda|: -C(N) C0 W0 D^2 A_1 ... A_N.
Interval matveev_lower_bound(const MatveevInput& in);

// ---- fixed points ----------------------------------------------------------

struct FixedPoint {
  Interval x;        // encloses the crossing; x.hi() is the certified bound
  unsigned iterations = 0;
};

// Largest x with x <= F(x), for F increasing with F(x)/x decreasing past the
// crossing. Iterates x <- F(x) from x0 until successive values agree to 1e-4,
// then certifies F(hi) <= hi and F(lo) > lo.
FixedPoint certified_crossing(const std::function<Interval(const Interval&)>& F, const Interval& x0,
                              unsigned max_iter = 200);

// Largest X with X <= coef (log X + shift)^2, iterated from e^shift.
FixedPoint solve_self_referential(const Interval& coef, const Interval& shift);

// ---- Mignotte's three-logarithm kit ---------------------------------------

struct KitParams {
  std::string rho = "10";
  std::string chi = "2";
  long L = 625;
  std::string M = "12.1";
  int D = 4;
};

// Pointwise condition for given enclosures of log alpha_1, log alpha_2, log c
// with a_1 = (rho+3) log alpha_1, a_2 = (rho+3) log alpha_2, a_3 = 0.46 (rho-1) + 8 log c.
struct KitCondition {
  Interval lhs;       // (i)
  Interval part_ii;   // (D+1) log L + 2 log K
  Interval part_iii;  // 3 g L^2 c0 Omega
  Interval part_iv;   // D (K-1) log b~
  bool holds = false;
};

KitCondition kit_condition(const KitParams& p, const Interval& log_alpha1, const Interval& log_alpha2,
                           const Interval& log_c, const Interval& h_cap);
bool kit_condition_holds(const KitParams& p, const Interval& log_alpha1, const Interval& log_alpha2,
                         const Interval& log_c, const Interval& h_cap);

// Upper bound on log alpha_2 log c in terms of h, used to bound b'. Either
//   h / log(w h) < coef * log alpha_2 log c   (with_log)  or
//   h < coef * log alpha_2 log c.
struct HeightRelation {
  Interval coef;
  bool with_log = false;
  Interval w;
};

// The domain c >= c_min, ac <= ac_max, h <= h_cap.
struct KitDomain {
  Interval c_min;
  Interval ac_max;
  Interval h_cap;
  HeightRelation relation;
};

// Linear form in X = log a1 log a2 log c and Y = log a1 log a2 of each part:
// the condition reads lhs_x X + lhs_y Y - gamma > (rhs_x X + rhs_y Y) + part_ii.
struct KitDomainCheck {
  Interval c1, c2, c3, c0;
  Interval a1_min, a2_min, a3_min;
  Interval b_prime, log_b_tilde, g_max;
  Interval lhs_x, lhs_y, gamma;
  Interval part_ii;
  Interval part_iii_x, part_iii_y;
  Interval part_iv_x, part_iv_y;
  Interval margin;  // value of lhs - rhs at the domain minimum
  bool holds = false;
};

KitDomainCheck kit_condition_domain(const KitParams& p, const KitDomain& dom,
                                    mpfr_prec_t prec = 128);

// Coefficient kc with log|Lambda| > -kc log a1 log a2 log c over the domain.
// Throws HypothesisViolation if the condition is not certified.
Interval kit_main_bound(const KitParams& p, const KitDomain& dom, mpfr_prec_t prec = 128);

// ---- Laurent's two-logarithm bound ----------------------------------------

struct LaurentParams {
  std::string varrho = "52";
  std::string mu = "0.61";
  int D = 4;
  Interval a1p;  // a_1'
  Interval a2p;  // a_2'
  Interval hp;   // h'
};

struct LaurentConstants {
  Interval sigma, lambda_p, H, omega, theta, C, C_prime;
};

Interval laurent_sigma(const std::string& mu, mpfr_prec_t prec = 128);
Interval laurent_lambda(const std::string& varrho, const std::string& mu, mpfr_prec_t prec = 128);

// Constants at the given (lower bounds for) h', a_1', a_2'. omega, theta and
// C decrease in each argument, so the results are upper bounds on the domain.
LaurentConstants laurent_constants(const std::string& varrho, const std::string& mu,
                                   const Interval& hp_min, const Interval& a1p_min,
                                   const Interval& a2p_min);

// Lower bound for log|b2 log g2 - b1 log g1|; throws HypothesisViolation
// naming the failing inequality.
Interval laurent_lower_bound(const LaurentParams& p, const mpz_class& b1, const mpz_class& b2);

// ---- bound chains ----------------------------------------------------------

struct Prop1Result {
  std::vector<BoundCertificate> certificates;
  Interval matveev_coef;  // log|L1| > -coef log(w h) log a1 log a2 log c
  Interval w;             // 1.5 e D log(eD)
  Interval h_coef;        // h / log(w h) < h_coef log a2 log c
  Interval ac, h, d;
};

Prop1Result prop1_chain(mpfr_prec_t prec = 128);

struct Prop2Options {
  // Replace the bound on |log gamma_1| by the one printed alongside the B_i
  // constants. Diagnostic only: that constant omits the 0.46 B_3 term.
  bool published_log_gamma1 = false;
};

struct Prop2Pass {
  KitParams kit;
  std::string varrho;
  KitDomainCheck condition;
  Interval kit_coef, h_kit;
  Interval b1c, b2c, b3c, h_gamma1, h_gamma2, log_gamma1, log_gamma2;
  Interval a1p_coef, a2p_coef;
  LaurentConstants laurent;
  Interval F_coef;
  std::vector<Interval> F_bounds, h_A2, ac_bounds;
  Interval h_coef, ac, h, d;
};

struct Prop2Result {
  std::vector<BoundCertificate> certificates;
  std::vector<Prop2Pass> passes;
  Interval h_coef, ac, h, d;
};

Prop2Result prop2_chain(const Prop2Options& opt = {}, mpfr_prec_t prec = 128);

struct EulerLaurentStep {
  Interval eps, k1, a1p_min, a2p_min, b_add, b_min, hp_min;
  LaurentConstants laurent;
  Interval shift, coef;
  FixedPoint b_star;
  FixedPoint bound;  // s or t
};

struct EulerResult {
  std::vector<BoundCertificate> certificates;
  EulerLaurentStep case1, case2;
  Interval s_bound, t_bound;
  Interval X, r_bound;
  Interval h_large_c, h_over_log_small_c, h_small_c;
  std::string note;
};

// h_coef: the h-coefficient from the final three-logarithm pass.
EulerResult euler_case_bounds(const Prop1Result& p1, const Interval& h_coef, mpfr_prec_t prec = 128);
// Runs prop1_chain and prop2_chain first.
EulerResult euler_case_bounds(mpfr_prec_t prec = 128);

// Runs fn at 128, 256, ... bits up to 1024 until every certificate is
// narrower than 2^-40 relative width.
template <class R>
R with_precision_ladder(const std::function<R(mpfr_prec_t)>& fn) {
  R r = fn(128);
  for (mpfr_prec_t prec = 256; prec <= 1024; prec *= 2) {
    bool narrow = true;
    for (const auto& c : r.certificates) {
      if (!(c.recomputed.rel_width() < 0x1p-40)) narrow = false;
    }
    if (narrow) break;
    r = fn(prec);
  }
  return r;
}

}  // namespace dioph
