#pragma once

// The mod-2 Johnson homomorphism tau_1 on the level-2 mapping class group,
// in three computable forms:
//
//   tau1_hom       Hom-valued from the free-group action,
//                  values[k] = theta2(gamma_k) + theta2(phi^-1(gamma_k))
//                  as representatives modulo <omega>;
//   tau1           tensor-valued in (H^(x)3)^{S_3}: assemble the Hom value
//                  through h -> sum_k C_k (x) h(gamma_k) and lift against
//                  H (x) <omega> (the lift is unique because the two
//                  subspaces meet trivially);
//   tau1_appendix  Johnson's original style, values[k] represented by
//                  theta2(phi^-1(gamma_k) gamma_k^-1).
//
// Representatives modulo <omega> are never canonicalized; equality is always
// a span-membership test on the difference.

#include <stdexcept>
#include <string>
#include <vector>

#include "gamma2/catalog.hpp"
#include "gamma2/gf2.hpp"
#include "gamma2/homology.hpp"
#include "gamma2/magnus.hpp"
#include "gamma2/tensor.hpp"

namespace gamma2 {

struct NotLevel2 : std::runtime_error {
  BitMatrix action;
  NotLevel2(std::string msg, BitMatrix m)
      : std::runtime_error(std::move(msg)), action(std::move(m)) {}
};

struct NotLiftable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value of tau_1 on each generator, as degree-2 representatives mod <omega>.
struct Tau1Hom {
  int genus = 0;
  std::vector<Tensor> values;
};

// The unique S_3-invariant representative.
struct Tau1Tensor {
  Tensor value;
  bool operator==(const Tau1Tensor&) const = default;
};

namespace detail {
inline void require_level2(const SubstEndo& e, const char* what) {
  BitMatrix m = action_matrix(e);
  if (!(m == BitMatrix::identity(static_cast<std::size_t>(e.genus))))
    throw NotLevel2(std::string(what) + ": homology action is not the identity",
                    std::move(m));
}
}  // namespace detail

inline Tau1Hom tau1_hom(const SubstEndo& e) {
  detail::require_level2(e, "tau1_hom");
  const int g = e.genus;
  Tau1Hom h{g, {}};
  h.values.reserve(static_cast<std::size_t>(g));
  for (int k = 1; k <= g; ++k)
    h.values.push_back(theta2(gen(g, k)).deg2 + theta2(apply(e, gen(g, k))).deg2);
  return h;
}

inline Tau1Hom tau1_appendix(const SubstEndo& e) {
  detail::require_level2(e, "tau1_appendix");
  const int g = e.genus;
  Tau1Hom h{g, {}};
  h.values.reserve(static_cast<std::size_t>(g));
  for (int k = 1; k <= g; ++k) {
    const Word gk = gen(g, k);
    h.values.push_back(theta2(concat(apply(e, gk), invert(gk))).deg2);
  }
  return h;
}

// Componentwise equality modulo <omega>.
inline bool tau1_hom_equal(const Tau1Hom& a, const Tau1Hom& b) {
  detail::require(a.genus == b.genus, "tau1_hom_equal: genus mismatch");
  const BitVec w = omega(a.genus).coords;
  for (int k = 0; k < a.genus; ++k) {
    const BitVec diff = a.values[static_cast<std::size_t>(k)].coords ^
                        b.values[static_cast<std::size_t>(k)].coords;
    if (!diff.is_zero() && !(diff == w)) return false;
  }
  return true;
}

// Poincare-duality assembly h -> sum_k C_k (x) h(gamma_k); the C-basis is
// self-dual for the intersection form, so no Gram correction appears.
inline Tensor assemble(const Tau1Hom& h) {
  const int g = h.genus;
  Tensor t = Tensor::zero(g, 3);
  for (int k = 1; k <= g; ++k)
    t += tensor(HClass::basis(g, k), h.values[static_cast<std::size_t>(k - 1)]);
  return t;
}

// Per-genus shared state: invariant bases plus the solver that splits
// representatives into (symmetric part) + (H (x) <omega> part).
class Tau1Context {
 public:
  explicit Tau1Context(int g)
      : bases_(invariant_bases(g)),
        lift_(bases_.sym3, bases_.h_omega),
        omega_span_(Subspace::span(Tensor::ambient_dim(g, 2),
                                   {omega(g).coords})) {}

  int genus() const { return bases_.genus; }
  const InvariantBases& bases() const { return bases_; }
  const Subspace& omega_span() const { return omega_span_; }

  Tensor sym_lift(const Tensor& t) const {
    detail::require(t.degree == 3 && t.genus == bases_.genus,
                    "sym_lift: expected degree-3 tensor of matching genus");
    auto d = lift_.solve(t.coords);
    if (!d)
      throw NotLiftable(
          "sym_lift: value is not congruent to a symmetric tensor modulo "
          "H (x) <omega>");
    return Tensor{t.genus, 3, std::move(d->in_first)};
  }

 private:
  InvariantBases bases_;
  SumSolver lift_;
  Subspace omega_span_;
};

inline Tensor sym_lift(const Tensor& t, const InvariantBases& ib) {
  detail::require(t.degree == 3 && t.genus == ib.genus,
                  "sym_lift: expected degree-3 tensor of matching genus");
  auto d = solve_in_sum(t.coords, ib.sym3, ib.h_omega);
  if (!d)
    throw NotLiftable(
        "sym_lift: value is not congruent to a symmetric tensor modulo "
        "H (x) <omega>");
  return Tensor{t.genus, 3, std::move(d->in_first)};
}

// tau_1 of a catalog expression.  Non-formal factors are composed into a
// single free-group action and evaluated through the Magnus pipeline; each
// four-index squared twist contributes the derived closed form
// (C_i+C_j+C_k+C_l)^(x)3.  The image is 2-torsion, so exponent signs and
// factor order do not affect the value.
inline Tau1Tensor tau1(const McgExpr& x, const Tau1Context& ctx) {
  detail::require(x.genus == ctx.genus(), "tau1: genus mismatch");
  Tensor total = Tensor::zero(x.genus, 3);
  SubstEndo acc = identity_endo(x.genus);
  bool have_action = false;
  for (const McgFactor& f : x.factors) {
    if (f.gen.formal()) {
      total += cube(quad_class(f.gen));
    } else {
      acc = compose(acc, inverse_endo(f.gen));
      have_action = true;
    }
  }
  if (have_action) total += ctx.sym_lift(assemble(tau1_hom(acc)));
  return Tau1Tensor{std::move(total)};
}

inline Tau1Tensor tau1(const McgExpr& x) { return tau1(x, Tau1Context(x.genus)); }

}  // namespace gamma2
