#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace dioph {

// A V^2 - B U^2 = A - B with A < B and A B + 1 = R^2, R > 1.
struct PellProblem {
  mpz_class A, B, R;

  // Throws std::invalid_argument unless A < B and AB + 1 is a square > 1.
  static PellProblem make(const mpz_class& A, const mpz_class& B);
};

struct FundamentalSolution {
  mpz_class V0, U0;
  friend bool operator==(const FundamentalSolution&, const FundamentalSolution&) = default;
};

struct PellSolution {
  mpz_class V, U;
  unsigned q = 0;
  FundamentalSolution origin;
};

// (V, U) -> (R V + B U, A V + R U), i.e. multiplication by R + sqrt(AB).
void pell_step(const PellProblem& p, mpz_class& V, mpz_class& U);

// Every (V0, U0) with both signs of V0 inside the bounds
//   1 <= U0 <= sqrt(A(B-A) / (2(R-1))),  |V0| <= sqrt((R-1)(B-A) / (2A)).
// Endpoints are included. No normalization or orbit merging.
std::vector<FundamentalSolution> scan_fundamentals(const PellProblem& p);

// scan_fundamentals, each start advanced until U strictly increases along
// its orbit, and starts lying on another start's orbit removed.
std::vector<FundamentalSolution> fundamental_solutions(const PellProblem& p);

// All solutions with V > 0 and 1 <= U <= u_max, sorted by U then V.
std::vector<PellSolution> solutions_up_to(const PellProblem& p, const mpz_class& u_max);

struct ThirdElement {
  mpz_class C, U;
};

enum class ThirdElementFilter {
  AboveB,       // C > B
  AnyDistinct,  // C >= 1 and C not in {A, B}
};

// C = (U^2 - 1) / A for solutions U <= u_max with A | U^2 - 1.
std::vector<ThirdElement> third_elements(const PellProblem& p, const mpz_class& u_max,
                                         ThirdElementFilter filter = ThirdElementFilter::AboveB);

// Divisors of n in increasing order; n < 2^64.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Divisors of R^2 - 1 up to R, from the factorizations of R - 1 and R + 1.
std::vector<std::uint64_t> small_divisors_r2m1(std::uint64_t R);

// (d, (R^2 - 1)/d) for every divisor d <= R of R^2 - 1. R < 2^32.
std::vector<PellProblem> divisor_pairs(std::uint64_t R);

}  // namespace dioph
