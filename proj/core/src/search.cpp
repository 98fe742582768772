#include <algorithm>
#include <cmath>

#include "dioph/campaign.hpp"

namespace dioph {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
  auto x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

struct Cliques {
  const std::vector<std::vector<std::uint32_t>>& up;  // neighbours greater than the vertex
  SearchResult& out;
  std::vector<std::uint64_t> stack;

  void grow(const std::vector<std::uint32_t>& cand) {
    if (stack.size() >= 3) record();
    if (stack.size() == 5) return;
    for (std::uint32_t v : cand) {
      std::vector<std::uint32_t> next;
      const auto& nv = up[v];
      std::set_intersection(cand.begin(), cand.end(), nv.begin(), nv.end(), std::back_inserter(next));
      stack.push_back(v);
      grow(next);
      stack.pop_back();
    }
  }

  void record() {
    FoundTuple t{stack, false};
    if (stack.size() == 3) {
      const mpz_class r = sqrt(mpz_class(stack[0]) * stack[1] + 1);
      t.regular = mpz_class(stack[2]) == stack[0] + stack[1] + 2 * r;
      out.triples.push_back(std::move(t));
    } else if (stack.size() == 4) {
      const auto tr = DiophantineTriple::make(stack[0], stack[1], stack[2]);
      t.regular = d_plus(tr) == stack[3];
      out.quadruples.push_back(std::move(t));
    } else {
      out.quintuples.push_back(std::move(t));
    }
  }
};

}  // namespace

SearchResult brute_force_search(std::uint64_t limit) {
  SearchResult res;
  res.limit = limit;
  if (limit < 3) return res;
  if (limit >= (std::uint64_t{1} << 31)) throw std::invalid_argument("search limit too large");
  std::vector<std::vector<std::uint32_t>> up(limit + 1);
  for (std::uint64_t a = 1; a <= limit; ++a) {
    // b > a with a b + 1 = x^2
    for (std::uint64_t x = isqrt64(a * a + a) + 1; x * x <= a * limit + 1; ++x) {
      const std::uint64_t m = x * x - 1;
      if (m % a != 0) continue;
      const std::uint64_t b = m / a;
      if (b <= a) continue;
      up[a].push_back(static_cast<std::uint32_t>(b));
      ++res.pairs;
    }
  }
  SearchResult& out = res;
  Cliques c{up, out, {}};
  for (std::uint64_t a = 1; a <= limit; ++a) {
    c.stack = {a};
    c.grow(up[a]);
  }
  auto by_elements = [](const FoundTuple& x, const FoundTuple& y) { return x.elements < y.elements; };
  std::sort(res.triples.begin(), res.triples.end(), by_elements);
  std::sort(res.quadruples.begin(), res.quadruples.end(), by_elements);
  std::sort(res.quintuples.begin(), res.quintuples.end(), by_elements);
  return res;
}

}  // namespace dioph
