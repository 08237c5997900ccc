#pragma once

// Degree-2 truncation of the standard Magnus expansion theta(gamma_i) = 1 + C_i
// over GF(2), and the induced equality test modulo <omega>.

#include "gamma2/gf2.hpp"
#include "gamma2/tensor.hpp"
#include "gamma2/word.hpp"

namespace gamma2 {

// The jet (1 + deg1 + deg2) truncated after degree 2.
struct Jet2 {
  HClass deg1;
  Tensor deg2;  // degree 2

  bool operator==(const Jet2&) const = default;
};

inline Jet2 jet_one(int g) {
  return {HClass::zero(g), Tensor::zero(g, 2)};
}

inline Jet2 jet_mul(const Jet2& a, const Jet2& b) {
  Jet2 out{a.deg1 + b.deg1, a.deg2 + b.deg2 + tensor2(a.deg1, b.deg1)};
  return out;
}

inline Jet2 jet_inv(const Jet2& a) {
  return {a.deg1, a.deg2 + tensor2(a.deg1, a.deg1)};
}

// Streaming left-to-right fold of letter jets; a letter -i carries the
// inverse jet (C_i, C_i (x) C_i) of 1 + C_i.
inline Jet2 theta2(const Word& w) {
  const int g = w.genus;
  Jet2 acc = jet_one(g);
  for (int l : w.letters) {
    const std::size_t i = static_cast<std::size_t>((l < 0 ? -l : l) - 1);
    if (l < 0) acc.deg2.coords.flip(i * g + i);
    // cross term deg1 (x) C_i
    acc.deg1.coords.for_each_set(
        [&](std::size_t a) { acc.deg2.coords.flip(a * g + i); });
    acc.deg1.coords.flip(i);
  }
  return acc;
}

// Equality of the induced values on the surface group: degree-1 parts agree
// and the degree-2 parts differ by a multiple of omega.
inline bool theta2_bar_eq(const Word& u, const Word& v) {
  detail::require(u.genus == v.genus, "theta2_bar_eq: genus mismatch");
  const Jet2 ju = theta2(u);
  const Jet2 jv = theta2(v);
  if (!(ju.deg1 == jv.deg1)) return false;
  const BitVec diff = ju.deg2.coords ^ jv.deg2.coords;
  return diff.is_zero() || diff == omega(u.genus).coords;
}

}  // namespace gamma2
