#pragma once

// Deterministic, platform-independent randomness for the property suites
// (splitmix64).  Standard-library distributions are avoided on purpose:
// their outputs differ between implementations.

#include <cstdint>
#include <vector>

#include "gamma2/catalog.hpp"
#include "gamma2/word.hpp"

namespace gamma2 {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

inline Word random_word(int g, int max_len, Rng& rng) {
  std::vector<int> letters;
  const int len = rng.range(0, max_len);
  for (int k = 0; k < len; ++k) {
    int idx = rng.range(1, g);
    letters.push_back(rng.coin() ? idx : -idx);
  }
  return reduce(g, letters);
}

// A random non-formal expression: slides, two-index squared twists and
// short pushes, with random exponent signs.
inline McgExpr random_expr(int g, int max_factors, Rng& rng) {
  McgExpr e{g, {}};
  const int n = rng.range(1, max_factors);
  for (int k = 0; k < n; ++k) {
    McgGen gen = McgGen::y_slide(g, 1, 2);
    switch (rng.range(0, 3)) {
      case 0:
      case 1: {
        int i = rng.range(1, g);
        int j = rng.range(1, g - 1);
        if (j >= i) ++j;
        gen = McgGen::y_slide(g, i, j);
        break;
      }
      case 2: {
        int i = rng.range(1, g);
        int j = rng.range(1, g - 1);
        if (j >= i) ++j;
        gen = McgGen::t_square_pair(g, i, j);
        break;
      }
      case 3:
        gen = McgGen::push(random_word(g, 4, rng));
        break;
    }
    e.factors.push_back({std::move(gen), rng.coin() ? 1 : -1});
  }
  return e;
}

}  // namespace gamma2
