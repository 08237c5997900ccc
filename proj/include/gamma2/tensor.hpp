#pragma once

// Tensor powers H^(x)n (n <= 3) of H = H_1(N_g; Z/2Z) as packed GF(2)
// coordinate vectors.
//
// Indexing convention, frozen project-wide: the basis element
// C_i (x) C_j (x) C_k sits at flat coordinate (i-1)*g^2 + (j-1)*g + (k-1)
// with 1-based mathematical indices i,j,k, and analogously in degree 2.
// Flat index order therefore equals lexicographic order on (i,j,k).

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "gamma2/gf2.hpp"

namespace gamma2 {

// A mod-2 homology class in the basis C_1..C_g of one-sided generators.
struct HClass {
  int genus = 0;
  BitVec coords;

  static HClass zero(int g) { return {g, BitVec(static_cast<std::size_t>(g))}; }
  static HClass basis(int g, int i) {  // C_i, 1-based
    detail::require(1 <= i && i <= g, "HClass: generator index out of range");
    return {g, BitVec::unit(static_cast<std::size_t>(g),
                            static_cast<std::size_t>(i - 1))};
  }

  HClass operator+(const HClass& o) const {
    detail::require(genus == o.genus, "HClass: genus mismatch");
    return {genus, coords ^ o.coords};
  }
  bool operator==(const HClass&) const = default;
};

struct Tensor {
  int genus = 0;
  int degree = 1;
  BitVec coords;  // length genus^degree

  static std::size_t ambient_dim(int g, int n) {
    std::size_t d = 1;
    for (int k = 0; k < n; ++k) d *= static_cast<std::size_t>(g);
    return d;
  }
  static Tensor zero(int g, int n) { return {g, n, BitVec(ambient_dim(g, n))}; }

  Tensor operator+(const Tensor& o) const {
    detail::require(genus == o.genus && degree == o.degree,
                    "Tensor: genus/degree mismatch");
    return {genus, degree, coords ^ o.coords};
  }
  Tensor& operator+=(const Tensor& o) {
    detail::require(genus == o.genus && degree == o.degree,
                    "Tensor: genus/degree mismatch");
    coords ^= o.coords;
    return *this;
  }
  bool is_zero() const { return coords.is_zero(); }
  bool operator==(const Tensor&) const = default;
};

// omega = sum of C_i (x) C_i.
inline Tensor omega(int g) {
  detail::require(g >= 1, "omega: genus must be positive");
  Tensor t = Tensor::zero(g, 2);
  for (int i = 0; i < g; ++i)
    t.coords.set(static_cast<std::size_t>(i) * g + i);
  return t;
}

inline Tensor tensor2(const HClass& x, const HClass& y) {
  detail::require(x.genus == y.genus, "tensor2: genus mismatch");
  const int g = x.genus;
  Tensor t = Tensor::zero(g, 2);
  x.coords.for_each_set([&](std::size_t a) {
    y.coords.for_each_set(
        [&](std::size_t b) { t.coords.flip(a * g + b); });
  });
  return t;
}

inline Tensor tensor3(const HClass& x, const HClass& y, const HClass& z) {
  detail::require(x.genus == y.genus && y.genus == z.genus,
                  "tensor3: genus mismatch");
  const int g = x.genus;
  const std::size_t gg = static_cast<std::size_t>(g) * g;
  Tensor t = Tensor::zero(g, 3);
  x.coords.for_each_set([&](std::size_t a) {
    y.coords.for_each_set([&](std::size_t b) {
      z.coords.for_each_set(
          [&](std::size_t c) { t.coords.flip(a * gg + b * g + c); });
    });
  });
  return t;
}

// x (x) t for a degree-2 tensor t.
inline Tensor tensor(const HClass& x, const Tensor& t2) {
  detail::require(x.genus == t2.genus && t2.degree == 2,
                  "tensor: expected degree-2 right factor");
  const int g = x.genus;
  const std::size_t gg = static_cast<std::size_t>(g) * g;
  Tensor t = Tensor::zero(g, 3);
  x.coords.for_each_set([&](std::size_t a) {
    t2.coords.for_each_set(
        [&](std::size_t bc) { t.coords.flip(a * gg + bc); });
  });
  return t;
}

// S(X,Y) = X(x)X(x)Y + X(x)Y(x)X + Y(x)X(x)X.
inline Tensor s2(const HClass& x, const HClass& y) {
  return tensor3(x, x, y) + tensor3(x, y, x) + tensor3(y, x, x);
}

// S(X,Y,Z): the sum over all six arrangements of the three factors.
inline Tensor s3(const HClass& x, const HClass& y, const HClass& z) {
  return tensor3(x, y, z) + tensor3(y, z, x) + tensor3(z, x, y) +
         tensor3(x, z, y) + tensor3(z, y, x) + tensor3(y, x, z);
}

inline Tensor cube(const HClass& x) { return tensor3(x, x, x); }

// c(X(x)Y(x)Z) = w1(X) Y(x)Z, with w1(C_i) = 1 for every i.
inline Tensor c_map(const Tensor& t3) {
  detail::require(t3.degree == 3, "c_map: expected degree 3");
  const int g = t3.genus;
  const std::size_t gg = static_cast<std::size_t>(g) * g;
  Tensor out = Tensor::zero(g, 2);
  t3.coords.for_each_set(
      [&](std::size_t abc) { out.coords.flip(abc % gg); });
  return out;
}

// f(X(x)Y(x)Z) = w1(X) Y(x)Z + w1(Y) Z(x)X.
inline Tensor f_map(const Tensor& t3) {
  detail::require(t3.degree == 3, "f_map: expected degree 3");
  const int g = t3.genus;
  const std::size_t gg = static_cast<std::size_t>(g) * g;
  Tensor out = Tensor::zero(g, 2);
  t3.coords.for_each_set([&](std::size_t abc) {
    const std::size_t a = abc / gg;
    const std::size_t b = (abc / g) % g;
    const std::size_t c = abc % g;
    out.coords.flip(b * g + c);
    out.coords.flip(c * g + a);
  });
  return out;
}

// Permute tensor factors: factor p in the output reads factor perm[p] of the
// input.  Used by the fixedness checks on symmetric-part bases.
inline Tensor permute_factors(const Tensor& t, const std::array<int, 3>& perm) {
  detail::require(t.degree == 3, "permute_factors: expected degree 3");
  const int g = t.genus;
  const std::size_t gg = static_cast<std::size_t>(g) * g;
  Tensor out = Tensor::zero(g, 3);
  t.coords.for_each_set([&](std::size_t abc) {
    std::size_t idx[3] = {abc / gg, (abc / g) % g, abc % g};
    out.coords.flip(idx[perm[0]] * gg + idx[perm[1]] * g + idx[perm[2]]);
  });
  return out;
}

inline const std::array<std::array<int, 3>, 6>& all_factor_permutations() {
  static const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                           {0, 2, 1},
                                                           {1, 0, 2},
                                                           {1, 2, 0},
                                                           {2, 0, 1},
                                                           {2, 1, 0}}};
  return perms;
}

// H_even = Ker w1 is spanned by X_i = C_i + C_{i+1}.
inline std::vector<HClass> h_even_basis(int g) {
  std::vector<HClass> xs;
  for (int i = 1; i < g; ++i)
    xs.push_back(HClass::basis(g, i) + HClass::basis(g, i + 1));
  return xs;
}

// Canonical bases of the symmetric parts and of H (x) <omega>, built from
// the explicit spanning sets; the fixed-point solver lives in tests only.
struct InvariantBases {
  int genus = 0;
  Subspace sym2;       // (H^(x)2)^{S_2}
  Subspace sym3;       // (H^(x)3)^{S_3}
  Subspace even_sym3;  // (H_even^(x)3)^{S_3}
  Subspace h_omega;    // H (x) <omega>
};

inline InvariantBases invariant_bases(int g) {
  detail::require(g >= 2, "invariant_bases: genus must be at least 2");
  InvariantBases ib;
  ib.genus = g;

  std::vector<BitVec> rows;
  for (int i = 1; i <= g; ++i)
    rows.push_back(tensor2(HClass::basis(g, i), HClass::basis(g, i)).coords);
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      rows.push_back((tensor2(HClass::basis(g, i), HClass::basis(g, j)) +
                      tensor2(HClass::basis(g, j), HClass::basis(g, i)))
                         .coords);
  ib.sym2 = Subspace::span(Tensor::ambient_dim(g, 2), rows);

  auto symmetric_cube_span = [g](const std::vector<HClass>& basis) {
    std::vector<BitVec> out;
    const int n = static_cast<int>(basis.size());
    for (int i = 0; i < n; ++i) out.push_back(cube(basis[i]).coords);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) out.push_back(s2(basis[i], basis[j]).coords);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
          out.push_back(s3(basis[i], basis[j], basis[k]).coords);
    return Subspace::span(Tensor::ambient_dim(g, 3), out);
  };

  std::vector<HClass> cs;
  for (int i = 1; i <= g; ++i) cs.push_back(HClass::basis(g, i));
  ib.sym3 = symmetric_cube_span(cs);
  ib.even_sym3 = symmetric_cube_span(h_even_basis(g));

  std::vector<BitVec> ho;
  const Tensor w = omega(g);
  for (int i = 1; i <= g; ++i)
    ho.push_back(tensor(HClass::basis(g, i), w).coords);
  ib.h_omega = Subspace::span(Tensor::ambient_dim(g, 3), ho);
  return ib;
}

// "C1.C2.C3 + ..." with monomials in lexicographic order; "0" when zero.
inline std::string format_monomials(const Tensor& t) {
  if (t.is_zero()) return "0";
  const int g = t.genus;
  std::string out;
  t.coords.for_each_set([&](std::size_t idx) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(t.degree));
    for (int p = t.degree - 1; p >= 0; --p) {
      digits[static_cast<std::size_t>(p)] = idx % g + 1;
      idx /= g;
    }
    if (!out.empty()) out += " + ";
    for (std::size_t p = 0; p < digits.size(); ++p) {
      if (p) out += '.';
      out += 'C';
      out += std::to_string(digits[p]);
    }
  });
  return out;
}

}  // namespace gamma2
