#include "dioph/pell.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dioph/tuple.hpp"

namespace dioph {

PellProblem PellProblem::make(const mpz_class& A, const mpz_class& B) {
  if (sgn(A) <= 0 || A >= B) throw std::invalid_argument("Pell problem needs 0 < A < B");
  auto R = isqrt_exact(A * B + 1);
  if (!R) throw std::invalid_argument("AB + 1 is not a square");
  return PellProblem{A, B, *R};
}

void pell_step(const PellProblem& p, mpz_class& V, mpz_class& U) {
  mpz_class v2 = p.R * V + p.B * U;
  U = p.A * V + p.R * U;
  V = std::move(v2);
}

std::vector<FundamentalSolution> scan_fundamentals(const PellProblem& p) {
  std::vector<FundamentalSolution> out;
  const mpz_class u_rhs = p.A * (p.B - p.A);
  const mpz_class u_den = 2 * (p.R - 1);
  const mpz_class v_rhs = (p.R - 1) * (p.B - p.A);
  const mpz_class v_den = 2 * p.A;
  for (mpz_class u = 1; u_den * u * u <= u_rhs; ++u) {
    mpz_class num = p.A - p.B + p.B * u * u;
    if (!mpz_divisible_p(num.get_mpz_t(), p.A.get_mpz_t())) continue;
    mpz_class v2 = num / p.A;
    auto v = isqrt_exact(v2);
    if (!v || sgn(*v) == 0) continue;
    if (v_den * v2 > v_rhs) continue;
    out.push_back({*v, u});
    out.push_back({-*v, u});
  }
  return out;
}

std::vector<FundamentalSolution> fundamental_solutions(const PellProblem& p) {
  std::vector<FundamentalSolution> starts;
  for (FundamentalSolution f : scan_fundamentals(p)) {
    for (;;) {
      mpz_class v = f.V0, u = f.U0;
      pell_step(p, v, u);
      if (u > f.U0) break;
      f = {v, u};
    }
    if (std::find(starts.begin(), starts.end(), f) == starts.end()) starts.push_back(f);
  }
  std::sort(starts.begin(), starts.end(), [](const auto& x, const auto& y) {
    return x.U0 != y.U0 ? x.U0 < y.U0 : x.V0 < y.V0;
  });
  mpz_class top = 0;
  for (const auto& f : starts) top = std::max(top, f.U0);
  std::vector<FundamentalSolution> out;
  std::vector<bool> dropped(starts.size(), false);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (dropped[i]) continue;
    out.push_back(starts[i]);
    mpz_class v = starts[i].V0, u = starts[i].U0;
    for (;;) {
      pell_step(p, v, u);
      if (u > top) break;
      for (std::size_t j = i + 1; j < starts.size(); ++j) {
        if (starts[j].V0 == v && starts[j].U0 == u) dropped[j] = true;
      }
    }
  }
  return out;
}

std::vector<PellSolution> solutions_up_to(const PellProblem& p, const mpz_class& u_max) {
  std::map<std::pair<mpz_class, mpz_class>, PellSolution> found;
  for (const FundamentalSolution& f : fundamental_solutions(p)) {
    mpz_class v = f.V0, u = f.U0;
    for (unsigned q = 0; u <= u_max; ++q) {
      if (p.A * v * v - p.B * u * u != p.A - p.B) {
        throw std::logic_error("Pell recurrence left the solution set");
      }
      if (sgn(v) > 0) found.try_emplace({u, v}, PellSolution{v, u, q, f});
      pell_step(p, v, u);
    }
  }
  std::vector<PellSolution> out;
  out.reserve(found.size());
  for (auto& kv : found) out.push_back(std::move(kv.second));
  return out;
}

std::vector<ThirdElement> third_elements(const PellProblem& p, const mpz_class& u_max,
                                         ThirdElementFilter filter) {
  std::vector<ThirdElement> out;
  for (const PellSolution& s : solutions_up_to(p, u_max)) {
    mpz_class num = s.U * s.U - 1;
    if (!mpz_divisible_p(num.get_mpz_t(), p.A.get_mpz_t())) continue;
    mpz_class c = num / p.A;
    if (filter == ThirdElementFilter::AboveB) {
      if (c <= p.B) continue;
    } else if (sgn(c) <= 0 || c == p.A || c == p.B) {
      continue;
    }
    if (!is_diophantine_tuple({p.A, p.B, c})) {
      throw std::logic_error("third element does not extend the pair");
    }
    out.push_back({c, s.U});
  }
  return out;
}

namespace {

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& f) {
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++f[d];
      n /= d;
    }
  }
  if (n > 1) ++f[n];
}

std::vector<std::uint64_t> expand(const std::map<std::uint64_t, unsigned>& f) {
  std::vector<std::uint64_t> ds{1};
  for (auto [prime, e] : f) {
    const std::size_t n = ds.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors of 0");
  std::map<std::uint64_t, unsigned> f;
  factor_into(n, f);
  return expand(f);
}

std::vector<std::uint64_t> small_divisors_r2m1(std::uint64_t R) {
  if (R < 2 || R >= (std::uint64_t{1} << 32)) throw std::invalid_argument("R out of range");
  std::map<std::uint64_t, unsigned> f;
  factor_into(R - 1, f);
  factor_into(R + 1, f);
  std::vector<std::uint64_t> ds = expand(f);
  ds.erase(std::upper_bound(ds.begin(), ds.end(), R), ds.end());
  return ds;
}

std::vector<PellProblem> divisor_pairs(std::uint64_t R) {
  const std::uint64_t n = R * R - 1;
  std::vector<PellProblem> out;
  for (std::uint64_t d : small_divisors_r2m1(R)) {
    mpz_class A = static_cast<unsigned long>(d);
    mpz_class B = static_cast<unsigned long>(n / d);
    out.push_back(PellProblem{A, B, static_cast<unsigned long>(R)});
  }
  return out;
}

}  // namespace dioph
