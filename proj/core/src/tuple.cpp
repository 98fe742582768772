#include "dioph/tuple.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dioph {

std::optional<mpz_class> isqrt_exact(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  mpz_class k;
  mpz_sqrt(k.get_mpz_t(), n.get_mpz_t());
  if (k * k != n) return std::nullopt;
  return k;
}

bool is_diophantine_tuple(const std::vector<mpz_class>& elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (sgn(elements[i]) <= 0) throw InvalidTuple("tuple element must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (elements[i] == elements[j]) throw InvalidTuple("tuple elements must be distinct");
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!isqrt_exact(elements[i] * elements[j] + 1)) return false;
    }
  }
  return true;
}

std::optional<DiophantinePair> DiophantinePair::make(const mpz_class& x, const mpz_class& y) {
  if (sgn(x) <= 0 || sgn(y) <= 0 || x == y) return std::nullopt;
  auto r = isqrt_exact(x * y + 1);
  if (!r) return std::nullopt;
  DiophantinePair p;
  p.a_ = std::min(x, y);
  p.b_ = std::max(x, y);
  p.r_ = *r;
  return p;
}

std::optional<DiophantineTriple> DiophantineTriple::try_make(const mpz_class& x,
                                                             const mpz_class& y,
                                                             const mpz_class& z) {
  std::array<mpz_class, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (sgn(v[0]) <= 0 || v[0] == v[1] || v[1] == v[2]) return std::nullopt;
  auto r = isqrt_exact(v[0] * v[1] + 1);
  if (!r) return std::nullopt;
  auto s = isqrt_exact(v[0] * v[2] + 1);
  if (!s) return std::nullopt;
  auto t = isqrt_exact(v[1] * v[2] + 1);
  if (!t) return std::nullopt;
  DiophantineTriple out;
  out.a_ = v[0];
  out.b_ = v[1];
  out.c_ = v[2];
  out.r_ = *r;
  out.s_ = *s;
  out.t_ = *t;
  return out;
}

DiophantineTriple DiophantineTriple::make(const mpz_class& x, const mpz_class& y,
                                          const mpz_class& z) {
  auto t = try_make(x, y, z);
  if (!t) {
    throw InvalidTuple("not a Diophantine triple: {" + x.get_str() + ", " + y.get_str() + ", " +
                       z.get_str() + "}");
  }
  return *t;
}

std::string DiophantineTriple::str() const {
  std::ostringstream os;
  os << '{' << a_ << ',' << b_ << ',' << c_ << '}';
  return os.str();
}

std::strong_ordering operator<=>(const DiophantineTriple& x, const DiophantineTriple& y) {
  if (int k = cmp(x.a_, y.a_); k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  if (int k = cmp(x.b_, y.b_); k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int k = cmp(x.c_, y.c_);
  if (k == 0) return std::strong_ordering::equal;
  return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

mpz_class d_plus(const DiophantineTriple& t) {
  return t.a() + t.b() + t.c() + 2 * t.a() * t.b() * t.c() + 2 * t.r() * t.s() * t.t();
}

mpz_class d_minus(const DiophantineTriple& t) {
  return t.a() + t.b() + t.c() + 2 * t.a() * t.b() * t.c() - 2 * t.r() * t.s() * t.t();
}

namespace {

mpz_class root_product(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0) throw InvalidTuple("negative element");
  auto r = isqrt_exact(a * b + 1);
  auto s = isqrt_exact(a * c + 1);
  auto t = isqrt_exact(b * c + 1);
  if (!r || !s || !t) throw InvalidTuple("pairwise product plus one is not a square");
  return *r * *s * *t;
}

}  // namespace

mpz_class d_plus_raw(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  return a + b + c + 2 * a * b * c + 2 * root_product(a, b, c);
}

mpz_class d_minus_raw(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  return a + b + c + 2 * a * b * c - 2 * root_product(a, b, c);
}

bool is_euler_triple(const DiophantineTriple& t) { return t.c() == t.a() + t.b() + 2 * t.r(); }

DiophantineTriple partial_operator(const DiophantineTriple& t) {
  mpz_class dm = d_minus(t);
  if (sgn(dm) == 0) throw InvalidTuple("partial operator is undefined on Euler triple " + t.str());
  return DiophantineTriple::make(t.a(), t.b(), dm);
}

TripleClassification classify(const DiophantineTriple& t) {
  TripleClassification out;
  out.chain.push_back(t);
  for (;;) {
    const DiophantineTriple& cur = out.chain.back();
    mpz_class dm = d_minus(cur);
    out.d_minus_values.push_back(dm);
    if (sgn(dm) == 0) break;
    out.chain.push_back(DiophantineTriple::make(cur.a(), cur.b(), dm));
  }
  out.degree = static_cast<unsigned>(out.chain.size() - 1);
  return out;
}

RegularQuadruple extend_regular(const DiophantineTriple& t) {
  RegularQuadruple q{t, d_plus(t), 0, 0, 0};
  q.x = t.a() * t.t() + t.r() * t.s();
  q.y = t.b() * t.s() + t.r() * t.t();
  q.z = t.c() * t.r() + t.s() * t.t();
  if (q.x * q.x != t.a() * q.d + 1 || q.y * q.y != t.b() * q.d + 1 ||
      q.z * q.z != t.c() * q.d + 1) {
    throw std::logic_error("closed-form roots disagree for " + t.str());
  }
  return q;
}

}  // namespace dioph
