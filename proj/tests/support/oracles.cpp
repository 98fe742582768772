#include "oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>

#include "dioph/reduction.hpp"

namespace dioph::testing {

namespace {

using big = boost::multiprecision::cpp_bin_float_50;

}  // namespace

SoundnessResult baker_davenport_soundness(unsigned count, std::uint64_t m_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  SoundnessResult res;
  while (res.instances < count) {
    long u = uni(2, 500), v = uni(2, 500);
    if (u == v || std::gcd(u, v) != 1) continue;
    const long pn = uni(1, 99), pd = uni(1, 99);
    if (pn == pd) continue;
    const long an = uni(1, 20), ad = uni(1, 10);
    const long bn = uni(3, 60);
    const long M = uni(10, static_cast<long>(m_max));

    auto build = [&](mpfr_prec_t prec) {
      const Interval lv = log(Interval(v, prec));
      return ReductionProblem{log(Interval(u, prec)) / lv,
                              log(Interval::from_rational(mpq_class(pn, pd), prec)) / lv,
                              Interval::from_rational(mpq_class(an, ad), prec), Interval(bn, prec),
                              mpz_class(M)};
    };
    ReductionOutcome out;
    try {
      out = reduce(build, reduction_precision(mpz_class(M)), ReductionConfig{});
    } catch (const PrecisionExhausted&) {
      ++res.unreduced;
      continue;
    }
    ++res.instances;

    const big kappa = log(big(u)) / log(big(v));
    const big mu = log(big(pn) / big(pd)) / log(big(v));
    const big A = big(an) / big(ad);
    const big inv_b = 1 / big(bn);
    big bound = A * pow(inv_b, out.j_threshold + 1);
    for (long J = out.j_threshold + 1; J <= M; ++J, bound *= inv_b) {
      const big x = J * kappa + mu;
      const long k_hi = static_cast<long>(floor(x));
      const long k_lo = static_cast<long>(ceil(x - bound));
      for (long K = k_lo; K <= k_hi; ++K) {
        const big val = x - K;
        if (val > 0 && val < bound) {
          res.violations.push_back("u=" + std::to_string(u) + " v=" + std::to_string(v) + " J=" +
                                   std::to_string(J) + " K=" + std::to_string(K) + " threshold=" +
                                   std::to_string(out.j_threshold));
        }
      }
    }
  }
  return res;
}

double kappa_oracle(long a, long b, long c) {
  const big r = sqrt(big(a * b + 1)), s = sqrt(big(a * c + 1));
  return static_cast<double>(log(r + sqrt(big(a * b))) / log(s + sqrt(big(a * c))));
}

double matveev_constant_oracle(int N, int D) {
  const big e = boost::math::constants::e<big>();
  big fact = 1;
  for (int i = 2; i < N; ++i) fact *= i;
  const big C = big(8) / fact * (N + 2) * (2 * N + 3) * pow(4 * e * (N + 1), N + 1);
  const big C0 = log(exp(big("4.4") * N + 7) * pow(big(N), big("5.5")) * big(D) * D * log(e * D));
  return static_cast<double>(C * C0 * D * D);
}

namespace {

using Z = mpz_class;
using Key = std::tuple<Z, Z, Z>;

std::optional<Z> exact_root(const Z& n) {
  if (n < 0) return std::nullopt;
  const Z s = sqrt(n);
  if (s * s != n) return std::nullopt;
  return s;
}

// x + y + z + 2xyz + 2 sqrt((xy+1)(xz+1)(yz+1)); nullopt unless the product is a square.
std::optional<Z> dplus(const Z& x, const Z& y, const Z& z) {
  const auto root = exact_root((x * y + 1) * (x * z + 1) * (y * z + 1));
  if (!root) return std::nullopt;
  return x + y + z + 2 * x * y * z + 2 * *root;
}

bool triple_ok(const Z& x, const Z& y, const Z& z) {
  if (x <= 0 || y <= 0 || z <= 0 || x == y || x == z || y == z) return false;
  return exact_root(x * y + 1) && exact_root(x * z + 1) && exact_root(y * z + 1);
}

// Proper-triple extension as the campaigns use it.
std::optional<Z> extend(const Z& x, const Z& y, const Z& z, EnumerationCounts& n) {
  if (!triple_ok(x, y, z)) {
    ++n.invalid;
    return std::nullopt;
  }
  return dplus(x, y, z);
}

struct Unit {
  EnumerationCounts& n;
  std::set<Key> seen;
  std::vector<std::string>* emitted = nullptr;

  void check(Z x, Z y, Z z) {
    ++n.triples_raw;
    if (!triple_ok(x, y, z)) {
      ++n.invalid;
      return;
    }
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    if (!seen.emplace(x, y, z).second) return;
    ++n.triples;
    if (emitted) emitted->push_back("{" + x.get_str() + "," + y.get_str() + "," + z.get_str() + "}");
  }
};

Z zu(std::uint64_t v) { return Z(std::to_string(v)); }

}  // namespace

EnumerationCounts euler_oracle(std::uint64_t r_lo, std::uint64_t r_hi) {
  EnumerationCounts n;
  for (std::uint64_t r = r_lo; r <= r_hi; ++r) {
    Unit u{n, {}};
    const Z R = zu(r), N = R * R - 1;
    const std::uint64_t n64 = r * r - 1;
    for (std::uint64_t a = 1; a < r; ++a) {
      if (n64 % a != 0) continue;
      ++n.pairs;
      const Z b = N / zu(a);
      u.check(zu(a), b, zu(a) + b + 2 * R);
    }
  }
  return n;
}

EnumerationCounts degree1_oracle(std::uint64_t r_lo, std::uint64_t r_hi, std::uint64_t a_max,
                                 std::uint64_t ab_max) {
  EnumerationCounts n;
  for (std::uint64_t r = r_lo; r <= r_hi; ++r) {
    const Z R = zu(r), N = R * R - 1;
    if (N > zu(ab_max)) continue;
    Unit u{n, {}};
    const std::uint64_t n64 = r * r - 1;
    for (std::uint64_t a = 1; a <= a_max && a <= n64; ++a) {
      if (n64 % a != 0) continue;
      ++n.pairs;
      const Z A = zu(a), B = N / A;
      for (int sign : {1, -1}) {
        const Z d1 = A + B + sign * 2 * R;
        if (d1 <= 0 || d1 == A || d1 == B) {
          ++n.skipped;
          continue;
        }
        ++n.cases;
        if (auto c = extend(A, d1, B, n)) u.check(A, B, *c);
      }
    }
  }
  return n;
}

EnumerationCounts case_v_oracle(std::uint64_t r_lo, std::uint64_t r_hi, std::uint64_t a_max) {
  EnumerationCounts n;
  for (std::uint64_t r = r_lo; r <= r_hi; ++r) {
    const Z R = zu(r), N = R * R - 1;
    Unit u{n, {}};
    const std::uint64_t n64 = r * r - 1;
    for (std::uint64_t a = 1; a <= a_max; ++a) {
      if (n64 % a != 0) continue;
      ++n.pairs;
      const Z A = zu(a), B = N / A;
      for (int sign : {1, -1}) {
        const Z d2 = A + B + sign * 2 * R;
        if (d2 < 0) {
          ++n.skipped;
          continue;
        }
        ++n.cases;
        const auto d1 = d2 == 0 ? dplus(A, d2, B) : extend(A, d2, B, n);
        if (!d1) continue;
        if (auto c = extend(A, B, *d1, n)) u.check(A, B, *c);
      }
    }
  }
  return n;
}

EnumerationCounts pell_case_oracle(int kind, std::uint64_t R_lo, std::uint64_t R_hi,
                                   std::uint64_t u_max, std::uint64_t ad_max,
                                   std::vector<std::string>* emitted) {
  EnumerationCounts n;
  for (std::uint64_t Rv = R_lo; Rv <= R_hi; ++Rv) {
    const Z R = zu(Rv), N = R * R - 1;
    if (N > zu(ad_max)) continue;
    Unit u{n, {}, emitted};
    for (std::uint64_t av = 1; zu(av) * zu(av) < N; ++av) {
      if (N % zu(av) != 0) continue;
      const Z A = zu(av), B = N / A;
      std::vector<Z> thirds;
      for (std::uint64_t U = 2; U <= u_max; ++U) {
        const Z num = zu(U) * zu(U) - 1;
        if (num % A != 0) continue;
        const Z C = num / A;
        if (C == A || C == B) continue;
        if (exact_root(B * C + 1)) thirds.push_back(C);
      }
      for (int orient = 0; orient < 2; ++orient) {
        const Z& a = orient == 0 ? A : B;
        const Z& d = orient == 0 ? B : A;
        ++n.pairs;
        for (const Z& C : thirds) {
          switch (kind) {
            case 1:
              if (auto c = extend(a, d, C, n)) u.check(a, C, *c);
              break;
            case 2:
              if (auto b = extend(a, C, d, n)) {
                if (auto c = extend(a, *b, C, n)) u.check(a, *b, *c);
              }
              break;
            case 3:
              if (auto d1 = extend(a, d, C, n)) {
                if (auto c = extend(a, C, *d1, n)) u.check(a, C, *c);
              }
              break;
            default:
              if (auto b = extend(a, d, C, n)) {
                if (auto d1 = extend(a, C, *b, n)) {
                  if (auto c = extend(a, *b, *d1, n)) u.check(a, *b, *c);
                }
              }
          }
        }
      }
    }
  }
  return n;
}

}  // namespace dioph::testing
