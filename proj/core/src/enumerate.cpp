#include <algorithm>
#include <set>
#include <stdexcept>

#include "dioph/campaign.hpp"
#include "dioph/pell.hpp"
#include "dioph/reduction.hpp"

namespace dioph {

namespace {

class Unit {
 public:
  Unit(const CampaignSpec& spec, std::uint64_t r, UnitTally& t, const TripleSink& sink)
      : spec_(spec), r_(r), t_(t), sink_(sink) {}

  void fail(const std::string& triple, const std::string& msg) {
    t_.failures.push_back(Failure{r_, triple, msg});
  }

  // d+ of a proper triple, checked against 4xyz + z < d+ < 4xyz + 4z.
  std::optional<mpz_class> extend(const mpz_class& x, const mpz_class& y, const mpz_class& z) {
    try {
      const DiophantineTriple tr = DiophantineTriple::make(x, y, z);
      mpz_class d = d_plus(tr);
      const mpz_class base = 4 * tr.a() * tr.b() * tr.c();
      if (!(base + tr.c() < d && d < base + 4 * tr.c())) {
        fail(tr.str(), "d+ outside (4abc + c, 4abc + 4c)");
        return std::nullopt;
      }
      return d;
    } catch (const InvalidTuple& e) {
      fail("{" + x.get_str() + ", " + y.get_str() + ", " + z.get_str() + "}", e.what());
      return std::nullopt;
    }
  }

  void check(const mpz_class& x, const mpz_class& y, const mpz_class& z) {
    ++t_.triples_raw;
    std::optional<DiophantineTriple> tr;
    try {
      tr = DiophantineTriple::make(x, y, z);
    } catch (const InvalidTuple& e) {
      fail("{" + x.get_str() + ", " + y.get_str() + ", " + z.get_str() + "}", e.what());
      return;
    }
    if (!seen_.insert(*tr).second) return;
    ++t_.triples;
    if (sink_) sink_(r_, *tr);
    try {
      const ReductionOutcome out =
          reduce_lambda1(tr->a(), tr->b(), tr->c(), spec_.m_cap, ReductionConfig{}, spec_.precision_floor);
      ++t_.j_histogram[out.j_threshold];
      t_.max_j = std::max(t_.max_j, out.j_threshold);
    } catch (const std::exception& e) {
      fail(tr->str(), e.what());
    }
  }

  void euler() {
    const mpz_class r = mpz_from(r_);
    const std::uint64_t n = r_ * r_ - 1;
    for (std::uint64_t a : small_divisors_r2m1(r_)) {
      if (a >= r_) continue;
      ++t_.pairs;
      const mpz_class ai = mpz_from(a), bi = mpz_from(n / a);
      check(ai, bi, ai + bi + 2 * r);
    }
  }

  void degree1() {
    const mpz_class r = mpz_from(r_);
    const mpz_class n = r * r - 1;
    if (n > spec_.ad_max) return;
    std::vector<std::uint64_t> as;
    for (std::uint64_t d : small_divisors_r2m1(r_)) {
      as.push_back(d);
      as.push_back((r_ * r_ - 1) / d);
    }
    std::sort(as.begin(), as.end());
    as.erase(std::unique(as.begin(), as.end()), as.end());
    for (std::uint64_t av : as) {
      if (av > spec_.a_max) break;
      ++t_.pairs;
      const mpz_class a = mpz_from(av);
      const mpz_class b = n / a;
      for (int sign : {1, -1}) {
        const mpz_class d1 = a + b + sign * 2 * r;
        if (sgn(d1) <= 0 || d1 == a || d1 == b) {
          ++t_.skipped;
          continue;
        }
        ++t_.cases;
        auto c = extend(a, d1, b);
        if (!c) continue;
        // c = 4r(r + sign a)(b + sign r) by direct expansion.
        const mpz_class direct = 4 * r * (r + sign * a) * (b + sign * r);
        if (*c != direct) {
          fail("{" + a.get_str() + ", " + d1.get_str() + ", " + b.get_str() + "}",
               "d+ disagrees with 4r(r+-a)(b+-r)");
          continue;
        }
        check(a, b, *c);
      }
    }
  }

  void case_v() {
    const mpz_class r = mpz_from(r_);
    const mpz_class n = r * r - 1;
    for (std::uint64_t av = 1; av <= spec_.a_max; ++av) {
      const mpz_class a = mpz_from(av);
      if (n % a != 0) continue;
      ++t_.pairs;
      const mpz_class b = n / a;
      for (int sign : {1, -1}) {
        const mpz_class d2 = a + b + sign * 2 * r;
        if (sgn(d2) < 0) {
          ++t_.skipped;
          continue;
        }
        ++t_.cases;
        std::optional<mpz_class> d1;
        if (sgn(d2) == 0) {
          d1 = d_plus_raw(a, d2, b);
        } else {
          d1 = extend(a, d2, b);
        }
        if (!d1) continue;
        auto c = extend(a, b, *d1);
        if (!c) continue;
        check(a, b, *c);
      }
    }
  }

  void cases_i_to_iv() {
    const mpz_class R = mpz_from(r_);
    if (R * R - 1 > spec_.ad_max) return;
    for (const PellProblem& p : divisor_pairs(r_)) {
      const auto thirds = third_elements(p, spec_.u_max, ThirdElementFilter::AnyDistinct);
      for (int orient = 0; orient < 2; ++orient) {
        const mpz_class& a = orient == 0 ? p.A : p.B;
        const mpz_class& d = orient == 0 ? p.B : p.A;
        ++t_.pairs;
        for (const ThirdElement& te : thirds) chain(a, d, te.C);
      }
    }
  }

  // (a, d, C): the pair (a, d) and third element C of the Pell equation.
  void chain(const mpz_class& a, const mpz_class& d, const mpz_class& C) {
    switch (spec_.kind) {
      case CampaignKind::CaseI: {
        auto c = extend(a, d, C);
        if (c) check(a, C, *c);
        break;
      }
      case CampaignKind::CaseII: {
        auto b = extend(a, C, d);
        if (!b) break;
        auto c = extend(a, *b, C);
        if (c) check(a, *b, *c);
        break;
      }
      case CampaignKind::CaseIII: {
        auto d1 = extend(a, d, C);
        if (!d1) break;
        auto c = extend(a, C, *d1);
        if (c) check(a, C, *c);
        break;
      }
      case CampaignKind::CaseIV: {
        auto b = extend(a, d, C);
        if (!b) break;
        auto d1 = extend(a, C, *b);
        if (!d1) break;
        auto c = extend(a, *b, *d1);
        if (c) check(a, *b, *c);
        break;
      }
      default:
        throw std::logic_error("not a Pell case");
    }
  }

 private:
  static mpz_class mpz_from(std::uint64_t v) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return z;
  }

  const CampaignSpec& spec_;
  std::uint64_t r_;
  UnitTally& t_;
  const TripleSink& sink_;
  std::set<DiophantineTriple> seen_;
};

}  // namespace

UnitTally run_unit(const CampaignSpec& spec, std::uint64_t r, const TripleSink& sink) {
  UnitTally t;
  t.units = 1;
  Unit u(spec, r, t, sink);
  switch (spec.kind) {
    case CampaignKind::Euler: u.euler(); break;
    case CampaignKind::Degree1: u.degree1(); break;
    case CampaignKind::CaseV: u.case_v(); break;
    case CampaignKind::CaseI:
    case CampaignKind::CaseII:
    case CampaignKind::CaseIII:
    case CampaignKind::CaseIV: u.cases_i_to_iv(); break;
    case CampaignKind::BruteForce:
      throw std::invalid_argument("brute force search has no work units");
  }
  std::sort(t.failures.begin(), t.failures.end());
  return t;
}

}  // namespace dioph
