#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dioph {

class InvalidTuple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Root k with k*k == n, or nullopt. Negative n has no root.
std::optional<mpz_class> isqrt_exact(const mpz_class& n);

// Throws InvalidTuple on duplicates or non-positive entries.
bool is_diophantine_tuple(const std::vector<mpz_class>& elements);

class DiophantinePair {
 public:
  static std::optional<DiophantinePair> make(const mpz_class& x, const mpz_class& y);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& r() const { return r_; }

 private:
  DiophantinePair() = default;
  mpz_class a_, b_, r_;
};

// Sorted triple a < b < c with cached roots r, s, t of ab+1, ac+1, bc+1.
class DiophantineTriple {
 public:
  // Accepts the elements in any order. Throws InvalidTuple.
  static DiophantineTriple make(const mpz_class& x, const mpz_class& y, const mpz_class& z);
  static std::optional<DiophantineTriple> try_make(const mpz_class& x, const mpz_class& y,
                                                   const mpz_class& z);

  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }
  const mpz_class& r() const { return r_; }
  const mpz_class& s() const { return s_; }
  const mpz_class& t() const { return t_; }

  std::string str() const;

  friend bool operator==(const DiophantineTriple& x, const DiophantineTriple& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend std::strong_ordering operator<=>(const DiophantineTriple& x, const DiophantineTriple& y);

 private:
  DiophantineTriple() = default;
  mpz_class a_, b_, c_, r_, s_, t_;
};

mpz_class d_plus(const DiophantineTriple& t);
mpz_class d_minus(const DiophantineTriple& t);

// d+/d- for non-negative a, b, c whose pairwise products plus one are squares.
// Campaign enumerations pass through degenerate sets containing 0 or repeats.
mpz_class d_plus_raw(const mpz_class& a, const mpz_class& b, const mpz_class& c);
mpz_class d_minus_raw(const mpz_class& a, const mpz_class& b, const mpz_class& c);

bool is_euler_triple(const DiophantineTriple& t);

// {a, b, c, d-} minus its maximum. Throws InvalidTuple on an Euler triple.
DiophantineTriple partial_operator(const DiophantineTriple& t);

struct TripleClassification {
  unsigned degree = 0;
  std::vector<DiophantineTriple> chain;    // chain.front() is the input
  std::vector<mpz_class> d_minus_values;  // d-(chain[i]); the last one is 0
};

TripleClassification classify(const DiophantineTriple& t);

struct RegularQuadruple {
  DiophantineTriple triple;
  mpz_class d, x, y, z;
};

RegularQuadruple extend_regular(const DiophantineTriple& t);

}  // namespace dioph
