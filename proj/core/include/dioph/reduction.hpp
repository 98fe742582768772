#pragma once

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dioph/interval.hpp"

namespace dioph {

class AmbiguousExpansion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EtaNonPositive : public std::runtime_error {
 public:
  EtaNonPositive(unsigned attempts, const std::string& what)
      : std::runtime_error(what), attempts_(attempts) {}
  unsigned attempts() const { return attempts_; }

 private:
  unsigned attempts_;
};

class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Convergent {
  mpz_class p, q;
};

// Convergents p/q that are convergents of every point of an enclosure,
// starting with the first q > q_min.
class ConvergentStream {
 public:
  ConvergentStream(const Interval& x, const mpz_class& q_min);
  ConvergentStream(const mpq_class& x, const mpz_class& q_min);

  // nullopt once a rational input's expansion has terminated.
  // Throws AmbiguousExpansion when the endpoints' expansions part.
  std::optional<Convergent> next();

  std::size_t terms() const { return terms_; }

 private:
  std::optional<Convergent> step();

  mpz_class ln_, ld_, hn_, hd_;
  bool exact_ = false;
  bool done_ = false;
  mpz_class q_min_;
  mpz_class p1_ = 1, q1_ = 0, p2_ = 0, q2_ = 1;
  std::size_t terms_ = 0;
};

// Convenience: the first `count` convergents with q > q_min.
std::vector<Convergent> convergents(const Interval& x, const mpz_class& q_min, std::size_t count);

// 0 < J kappa - K + mu < A B^{-J}, 0 < J <= M.
struct ReductionProblem {
  Interval kappa;
  Interval mu;
  Interval A;
  Interval B;
  mpz_class M;
};

struct ReductionOutcome {
  long j_threshold = 0;
  mpz_class convergent_q;
  Interval eta;
  unsigned attempts = 0;
  mpfr_prec_t precision = 0;
};

struct ReductionConfig {
  unsigned extra_convergents = 20;
  mpfr_prec_t precision_cap = 8192;
};

// Throws EtaNonPositive or AmbiguousExpansion; both mean "retry at higher precision".
ReductionOutcome baker_davenport(const ReductionProblem& p, const ReductionConfig& cfg = {});

// Default working precision for cap M: 2 log2(6M) + 96 bits.
mpfr_prec_t reduction_precision(const mpz_class& M);

using ProblemBuilder = std::function<ReductionProblem(mpfr_prec_t)>;

// baker_davenport with the precision doubled on each retryable failure.
// Throws PrecisionExhausted past cfg.precision_cap.
ReductionOutcome reduce(const ProblemBuilder& build, mpfr_prec_t start,
                        const ReductionConfig& cfg = {});

// kappa = log a1 / log a2, mu = log a3 / log a2, A = 1 / log a2, B = a1^2 with
//   a1 = r + sqrt(ab), a2 = s + sqrt(ac), a3 = sqrt(c)(sqrt a + sqrt b) / (sqrt(b)(sqrt a + sqrt c)).
// The unknown J is 2h. Throws InvalidTuple unless {a, b, c} is a triple.
ReductionProblem lambda1_problem(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                 const mpz_class& M);
ReductionProblem lambda1_problem(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                 const mpz_class& M, mpfr_prec_t prec);

// lambda1_problem + reduce with the default precision ladder.
ReductionOutcome reduce_lambda1(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                                const mpz_class& M, const ReductionConfig& cfg = {},
                                mpfr_prec_t floor = 0);

}  // namespace dioph
