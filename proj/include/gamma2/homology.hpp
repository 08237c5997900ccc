#pragma once

// H_1(N_g; Z/2Z) with the mod-2 intersection form, the parity functional w1,
// and the induced homology action of a substitution endomorphism.
//
// In the C-basis the intersection form matrix is the identity: each gamma_i
// is one-sided with self-intersection 1 and the curves are pairwise disjoint.

#include <vector>

#include "gamma2/endo.hpp"
#include "gamma2/gf2.hpp"
#include "gamma2/tensor.hpp"

namespace gamma2 {

// Mod-2 abelianization: coordinate i is the parity of +-i letters.
inline HClass homology_class(const Word& w) {
  HClass c = HClass::zero(w.genus);
  for (int l : w.letters)
    c.coords.flip(static_cast<std::size_t>((l < 0 ? -l : l) - 1));
  return c;
}

inline int w1(const HClass& x) { return static_cast<int>(x.coords.count() & 1); }

inline int intersection_form(const HClass& x, const HClass& y) {
  detail::require(x.genus == y.genus, "intersection_form: genus mismatch");
  return x.coords.dot(y.coords);
}

// g x g matrix over GF(2); column i is the class of the image of gamma_i.
inline BitMatrix action_matrix(const SubstEndo& e) {
  const int g = e.genus;
  BitMatrix m(static_cast<std::size_t>(g));
  for (int r = 0; r < g; ++r) m.add_row(BitVec(static_cast<std::size_t>(g)));
  for (int i = 1; i <= g; ++i) {
    const HClass c = homology_class(e.image(i));
    c.coords.for_each_set([&](std::size_t r) {
      m.rows[r].set(static_cast<std::size_t>(i - 1));
    });
  }
  return m;
}

inline BitMatrix action_product(const BitMatrix& m1, const BitMatrix& m2) {
  detail::require(m1.ncols == m2.ncols && m1.nrows() == m2.ncols,
                  "action_product: shape mismatch");
  BitMatrix out(m1.ncols);
  for (std::size_t r = 0; r < m1.nrows(); ++r) {
    BitVec row(m1.ncols);
    m1.rows[r].for_each_set([&](std::size_t k) { row ^= m2.rows[k]; });
    out.add_row(std::move(row));
  }
  return out;
}

inline bool is_level2(const SubstEndo& e) {
  return action_matrix(e) == BitMatrix::identity(static_cast<std::size_t>(e.genus));
}

// M^T Q M = Q with Q the identity: pairwise dot products of columns.
inline bool preserves_form(const SubstEndo& e) {
  const int g = e.genus;
  const BitMatrix m = action_matrix(e);
  std::vector<BitVec> cols(static_cast<std::size_t>(g),
                           BitVec(static_cast<std::size_t>(g)));
  for (std::size_t r = 0; r < m.nrows(); ++r)
    m.rows[r].for_each_set([&](std::size_t c) { cols[c].set(r); });
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = i; j < cols.size(); ++j)
      if (cols[i].dot(cols[j]) != (i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace gamma2
