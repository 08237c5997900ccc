// Acceptance suite: every certificate the library is expected to produce,
// run end to end at the stated genus ranges and time budgets.  One line per
// criterion; exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gamma2/gamma2.hpp"

using namespace gamma2;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check_eq(bool cond, const char* what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

// [1] closed-form slide/twist/push values from the free-group action, g 2..8
bool criterion_closed_forms(std::string& detail) {
  bool ok = true;
  for (int g = 2; g <= 8; ++g) {
    const SuiteReport rep = run_lemma34(g, VerifyOptions{});
    ok &= check_eq(!rep.failed(), "closed-form mismatch", detail);
  }
  return ok;
}

// [2] relator conjugates expand to omega; quotient well-definedness, g 2..6
bool criterion_magnus(std::string& detail) {
  bool ok = true;
  for (int g = 2; g <= 6; ++g) {
    const SuiteReport rep = run_magnus(g, VerifyOptions{}, 1000, 500);
    ok &= check_eq(!rep.failed(), "magnus violation", detail);
  }
  return ok;
}

// [3] trivial intersection by both routes, g 2..12
bool criterion_intersection(std::string& detail) {
  bool ok = true;
  for (int g = 2; g <= 12; ++g)
    ok &= check_eq(lemma35_check(g).ok(), "nontrivial intersection", detail);
  return ok;
}

// [4] contraction exact sequence, g 3..12
bool criterion_contraction(std::string& detail) {
  bool ok = true;
  for (int g = 3; g <= 12; ++g) {
    const Lemma42Result r = lemma42_check(g);
    ok &= check_eq(r.surjective, "contraction not surjective", detail);
    ok &= check_eq(r.kernel_eq, "kernel differs from even symmetric part", detail);
    ok &= check_eq(r.dims_match, "dimension triple mismatch", detail);
  }
  return ok;
}

// [5] span of computed values equals the bound exactly, g 4..10
bool criterion_value_span(std::string& detail) {
  bool ok = true;
  for (int g = 4; g <= 10; ++g) {
    const Tau1Context ctx(g);
    const Lemma43Result r = lemma43_check(g, ctx, true);
    ok &= check_eq(r.exact(), "span dimension differs from the bound", detail);
    ok &= check_eq(r.iota_rank == static_cast<std::size_t>(g),
                   "push span not full", detail);
  }
  return ok;
}

// [6] minimality certificate, g 4..8
bool criterion_minimality(std::string& detail) {
  bool ok = true;
  for (int g = 4; g <= 8; ++g) {
    const MinimalityResult r = minimality_check(g);
    ok &= check_eq(r.ok(), "generators dependent modulo pushes", detail);
    ok &= check_eq(r.quotient_dim == static_cast<std::size_t>(r.expected),
                   "quotient dimension mismatch", detail);
  }
  return ok;
}

// [7] the two definitions agree; raw values symmetric, g 2..6
bool criterion_appendix(std::string& detail) {
  bool ok = true;
  for (int g = 2; g <= 6; ++g) {
    const SuiteReport rep = run_appendix(g, VerifyOptions{}, 100);
    ok &= check_eq(!rep.failed(), "appendix-route disagreement", detail);
  }
  return ok;
}

// [8] structural property suites at the per-module fuzz budgets
bool criterion_structure(std::string& detail) {
  bool ok = true;

  // word reduction: idempotent, no cancelling pairs, apply distributes
  {
    Rng rng(81);
    for (int g = 2; g <= 6; ++g) {
      for (int t = 0; t < 500; ++t) {
        std::vector<int> letters;
        const int len = rng.range(0, 200);
        for (int k = 0; k < len; ++k) {
          int idx = rng.range(1, g);
          letters.push_back(rng.coin() ? idx : -idx);
        }
        const Word w = reduce(g, letters);
        for (std::size_t k = 0; k + 1 < w.letters.size(); ++k)
          ok &= check_eq(w.letters[k] != -w.letters[k + 1],
                         "reduction left a cancelling pair", detail);
        ok &= check_eq(reduce(g, w.letters) == w, "reduction not idempotent",
                       detail);
      }
      for (int t = 0; t < 200; ++t) {
        const SubstEndo e = inverse_endo(random_expr(g, 3, rng));
        const Word u = random_word(g, 30, rng);
        const Word v = random_word(g, 30, rng);
        ok &= check_eq(
            apply(e, concat(u, v)) == concat(apply(e, u), apply(e, v)),
            "apply does not distribute over concat", detail);
        ok &= check_eq(apply(e, invert(u)) == invert(apply(e, u)),
                       "apply does not commute with invert", detail);
      }
    }
  }

  // magnus: multiplicativity at the stated budget
  {
    for (int g = 2; g <= 6; ++g) {
      Rng rng(82 + static_cast<std::uint64_t>(g));
      for (int t = 0; t < 1000; ++t) {
        const Word u = random_word(g, 40, rng);
        const Word v = random_word(g, 40, rng);
        ok &= check_eq(theta2(concat(u, v)) == jet_mul(theta2(u), theta2(v)),
                       "theta2 not multiplicative", detail);
      }
      for (int t = 0; t < 200; ++t) {
        const Word u = random_word(g, 40, rng);
        ok &= check_eq(theta2(invert(u)) == jet_inv(theta2(u)),
                       "inverse-jet identity fails", detail);
      }
    }
  }

  // catalog: every generator action is level-2, form-preserving, descends;
  // expression action equals factor-by-factor application
  {
    for (int g = 2; g <= 8; ++g) {
      std::vector<SubstEndo> endos;
      for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
          if (i != j) endos.push_back(y_slide_inverse_endo(g, i, j));
      for (int i = 1; i <= g; ++i) endos.push_back(push_inverse_endo(gen(g, i)));
      for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
          endos.push_back(inverse_endo(McgGen::t_square_pair(g, i, j)));
      for (const SubstEndo& e : endos) {
        ok &= check_eq(is_level2(e), "catalog action not level 2", detail);
        ok &= check_eq(preserves_form(e), "catalog action breaks the form",
                       detail);
        ok &= check_eq(descends_to_pi(e),
                       "catalog action does not descend", detail);
      }
    }
    Rng rng(83);
    for (int g = 2; g <= 6; ++g)
      for (int t = 0; t < 200; ++t) {
        const McgExpr x = random_expr(g, 4, rng);
        const Word w = random_word(g, 12, rng);
        Word acc = w;
        for (auto it = x.factors.rbegin(); it != x.factors.rend(); ++it)
          acc = apply(inverse_endo(it->gen), acc);
        ok &= check_eq(apply(inverse_endo(x), w) == acc,
                       "expression action mismatch", detail);
      }
  }

  // johnson: homomorphism, 2-torsion and conjugation laws
  {
    Rng rng(84);
    for (int g = 2; g <= 6; ++g) {
      const Tau1Context ctx(g);
      for (int t = 0; t < 200; ++t) {
        const McgExpr x = random_expr(g, 3, rng);
        const McgExpr y = random_expr(g, 3, rng);
        const Tensor tx = tau1(x, ctx).value;
        const Tensor ty = tau1(y, ctx).value;
        ok &= check_eq(tau1(expr_mul(x, y), ctx).value == tx + ty,
                       "homomorphism law fails", detail);
        ok &= check_eq(tau1(expr_inverse(x), ctx).value == tx,
                       "self-inverse law fails", detail);
        ok &= check_eq(tau1(expr_conjugate(x, y), ctx).value == tx,
                       "conjugation invariance fails", detail);
        for (const auto& p : all_factor_permutations())
          ok &= check_eq(permute_factors(tx, p) == tx,
                         "value not factor-permutation fixed", detail);
      }
    }
  }

  // tensor: cube expansion identity
  {
    Rng rng(85);
    for (int g = 2; g <= 6; ++g)
      for (int t = 0; t < 100; ++t) {
        HClass x = HClass::zero(g), y = HClass::zero(g);
        for (int i = 0; i < g; ++i) {
          if (rng.coin()) x.coords.set(static_cast<std::size_t>(i));
          if (rng.coin()) y.coords.set(static_cast<std::size_t>(i));
        }
        ok &= check_eq(cube(x + y) + cube(x) + cube(y) == s2(x, y) + s2(y, x),
                       "cube expansion identity fails", detail);
      }
  }

  // gf2: modular law and membership-vs-enumeration
  {
    Rng rng(86);
    for (int t = 0; t < 200; ++t) {
      const std::size_t ambient = 4 + rng.below(61);
      auto rand_space = [&](int nrows) {
        std::vector<BitVec> rows;
        for (int k = 0; k < nrows; ++k) {
          BitVec v(ambient);
          for (std::size_t i = 0; i < ambient; ++i)
            if (rng.coin()) v.set(i);
          rows.push_back(std::move(v));
        }
        return Subspace::span(ambient, rows);
      };
      const Subspace a = rand_space(rng.range(0, 10));
      const Subspace b = rand_space(rng.range(0, 10));
      const SubspaceOps ops = subspace_ops(a, b);
      ok &= check_eq(
          a.dim() + b.dim() == ops.sum.dim() + ops.intersection.dim(),
          "modular law fails", detail);
    }
    for (int t = 0; t < 50; ++t) {
      const std::size_t ambient = 6 + rng.below(7);
      std::vector<BitVec> rows;
      for (int k = 0; k < rng.range(0, 6); ++k) {
        BitVec v(ambient);
        for (std::size_t i = 0; i < ambient; ++i)
          if (rng.coin()) v.set(i);
        rows.push_back(std::move(v));
      }
      const Subspace s = Subspace::span(ambient, rows);
      BitVec probe(ambient);
      for (std::size_t i = 0; i < ambient; ++i)
        if (rng.coin()) probe.set(i);
      bool found = false;
      for (std::size_t mask = 0; mask < (std::size_t(1) << s.dim()); ++mask) {
        BitVec acc(ambient);
        for (std::size_t bb = 0; bb < s.dim(); ++bb)
          if (mask & (std::size_t(1) << bb)) acc ^= s.basis()[bb];
        if (acc == probe) {
          found = true;
          break;
        }
      }
      ok &= check_eq(span_membership(probe, s) == found,
                     "membership disagrees with enumeration", detail);
    }
  }

  return ok;
}

// [9] genus-32 dimension table inside the time budget
bool criterion_scale(std::string& detail) {
  const DimsRow d = dims_row(32);
  bool ok = check_eq(d.all_match, "genus-32 table mismatch", detail);
  ok &= check_eq(d.sym3 == static_cast<std::size_t>(d.sym3_formula),
                 "genus-32 sym3 rank mismatch", detail);
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"closed-form slide/twist/push values from the group action (g 2..8)", 5,
       criterion_closed_forms},
      {"relator conjugates expand to omega; quotient well-defined (g 2..6)", 5,
       criterion_magnus},
      {"trivial intersection with the omega line, both routes (g 2..12)", 10,
       criterion_intersection},
      {"contraction exact sequence and dimension triple (g 3..12)", 10,
       criterion_contraction},
      {"computed value span meets the bound exactly (g 4..10)", 20,
       criterion_value_span},
      {"minimality certificate for the reduced generating set (g 4..8)", 20,
       criterion_minimality},
      {"both definitions of the homomorphism agree (g 2..6)", 10,
       criterion_appendix},
      {"structural property suites at full fuzz budgets", 30,
       criterion_structure},
      {"genus-32 dimension table inside 60 s", 60, criterion_scale},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[k].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    const bool in_budget = secs < criteria[k].budget_seconds;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %zu: %s (%.2fs / budget %.0fs) %s%s%s\n", k + 1,
                pass ? "PASS" : "FAIL", secs, criteria[k].budget_seconds,
                criteria[k].label.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (ok && !in_budget)
      std::printf("criterion %zu: over time budget\n", k + 1);
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
