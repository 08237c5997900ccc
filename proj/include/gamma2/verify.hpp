#pragma once

// Named verification suites over a genus, with uniform reporting.  Every
// check carries a flat payload of numbers/booleans that serializes
// identically to text, CSV and JSON.  FINDING marks a computation that is
// consistent with the certified bounds but sharper than asserted; findings
// do not fail a run.

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gamma2/catalog.hpp"
#include "gamma2/homology.hpp"
#include "gamma2/johnson.hpp"
#include "gamma2/magnus.hpp"
#include "gamma2/ranks.hpp"
#include "gamma2/rng.hpp"
#include "gamma2/tensor.hpp"

namespace gamma2 {

using json = nlohmann::json;

enum class Status { pass, fail, finding };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::finding: return "FINDING";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::pass;
  json data;  // flat object: string -> number | bool | string
};

struct SuiteReport {
  int genus = 0;
  std::string suite;
  double seconds = 0.0;
  std::vector<Check> checks;

  bool failed() const {
    for (const Check& c : checks)
      if (c.status == Status::fail) return true;
    return false;
  }
};

inline constexpr std::uint64_t kDefaultSeed = 20240817;

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "magnus",  "lemma34",    "lemma35", "lemma42",
      "lemma43", "minimality", "appendix"};
  return names;
}

inline int suite_min_genus(std::string_view name) {
  if (name == "lemma42") return 3;
  if (name == "lemma43" || name == "minimality") return 4;
  return 2;
}

namespace detail {

inline Rng suite_rng(const VerifyOptions& opts, std::string_view suite, int g) {
  std::uint64_t h = opts.seed ^ 0xcbf29ce484222325ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
  return Rng(h + static_cast<std::uint64_t>(g) * 0x9e3779b97f4a7c15ull);
}

inline bool status_ok(bool ok) { return ok; }

inline bool symmetric2(const Tensor& t) {
  const int g = t.genus;
  for (int a = 0; a < g; ++a)
    for (int b = a + 1; b < g; ++b)
      if (t.coords.get(static_cast<std::size_t>(a) * g + b) !=
          t.coords.get(static_cast<std::size_t>(b) * g + a))
        return false;
  return true;
}

}  // namespace detail

// ---- magnus: conjugated relators expand to omega on the nose; the induced
// value on the surface group is insensitive to relator insertions.
inline SuiteReport run_magnus(int g, const VerifyOptions& opts,
                              int conjugator_trials = 1000,
                              int insertion_pairs = 500) {
  SuiteReport rep{g, "magnus", 0.0, {}};
  Rng rng = detail::suite_rng(opts, "magnus", g);
  const Word r = relator(g);
  const Tensor w = omega(g);

  int violations = 0;
  for (int t = 0; t < conjugator_trials; ++t) {
    const Word x = random_word(g, 30, rng);
    const Jet2 jet = theta2(concat(concat(x, r), invert(x)));
    if (!(jet.deg2 == w) || !jet.deg1.coords.is_zero()) ++violations;
  }
  rep.checks.push_back({"conjugate_relator_exact",
                        violations == 0 ? Status::pass : Status::fail,
                        json{{"trials", conjugator_trials},
                             {"max_conjugator_len", 30},
                             {"violations", violations}}});

  violations = 0;
  for (int t = 0; t < insertion_pairs; ++t) {
    const Word a = random_word(g, 20, rng);
    const Word b = random_word(g, 20, rng);
    const Word x = random_word(g, 20, rng);
    const Word ins = concat(concat(x, r), invert(x));
    const Word u = concat(concat(a, ins), b);
    const Word v = concat(a, b);
    if (!theta2_bar_eq(u, v)) ++violations;
  }
  rep.checks.push_back({"quotient_well_defined",
                        violations == 0 ? Status::pass : Status::fail,
                        json{{"pairs", insertion_pairs},
                             {"violations", violations}}});

  const bool detected = !theta2_bar_eq(concat(gen(g, 1), gen(g, 2)),
                                       concat(gen(g, 2), gen(g, 1)));
  rep.checks.push_back({"noncommuting_pair_detected",
                        detected ? Status::pass : Status::fail,
                        json{{"detected", detected}}});
  return rep;
}

// ---- lemma34: the three closed forms, each derived from the free-group
// action rather than the formula.
inline SuiteReport run_lemma34(int g, const VerifyOptions&) {
  SuiteReport rep{g, "lemma34", 0.0, {}};
  const Tau1Context ctx(g);

  int cases = 0, mism = 0;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (i == j) continue;
      ++cases;
      const Tensor got = tau1(expr_of(McgGen::y_slide(g, i, j)), ctx).value;
      const Tensor want =
          s2(HClass::basis(g, i), HClass::basis(g, i) + HClass::basis(g, j));
      if (!(got == want)) ++mism;
    }
  rep.checks.push_back({"y_slide_closed_forms",
                        mism == 0 ? Status::pass : Status::fail,
                        json{{"cases", cases}, {"mismatches", mism}}});

  cases = mism = 0;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j) {
      if (i == j) continue;
      ++cases;
      const Tensor got = tau1(expr_of(McgGen::t_square_pair(g, i, j)), ctx).value;
      if (!(got == cube(HClass::basis(g, i) + HClass::basis(g, j)))) ++mism;
    }
  rep.checks.push_back({"t_square_closed_forms",
                        mism == 0 ? Status::pass : Status::fail,
                        json{{"cases", cases}, {"mismatches", mism}}});

  cases = mism = 0;
  for (int i = 1; i <= g; ++i) {
    ++cases;
    const Tensor got = tau1(expr_of(McgGen::push(gen(g, i))), ctx).value;
    Tensor want = Tensor::zero(g, 3);
    for (int j = 1; j <= g; ++j)
      want += s2(HClass::basis(g, j), HClass::basis(g, i));
    if (!(got == want)) ++mism;
  }
  rep.checks.push_back({"push_closed_forms",
                        mism == 0 ? Status::pass : Status::fail,
                        json{{"cases", cases}, {"mismatches", mism}}});
  return rep;
}

inline SuiteReport run_lemma35(int g, const VerifyOptions&) {
  SuiteReport rep{g, "lemma35", 0.0, {}};
  const Lemma35Result r = lemma35_check(g);
  rep.checks.push_back({"direct_intersection",
                        r.intersection_dim == 0 ? Status::pass : Status::fail,
                        json{{"dim", r.intersection_dim}, {"expected", 0}}});
  rep.checks.push_back(
      {"f_route",
       r.f_kills_sym3 && r.f_injective_on_h_omega ? Status::pass : Status::fail,
       json{{"kills_sym3", r.f_kills_sym3},
            {"injective_on_h_omega", r.f_injective_on_h_omega}}});
  return rep;
}

inline SuiteReport run_lemma42(int g, const VerifyOptions&) {
  SuiteReport rep{g, "lemma42", 0.0, {}};
  const Lemma42Result r = lemma42_check(g);
  rep.checks.push_back({"c_surjective_onto_sym2",
                        r.surjective ? Status::pass : Status::fail,
                        json{{"surjective", r.surjective}}});
  rep.checks.push_back({"kernel_equals_even_sym3",
                        r.kernel_eq ? Status::pass : Status::fail,
                        json{{"equal", r.kernel_eq}}});
  rep.checks.push_back(
      {"dimension_triple", r.dims_match ? Status::pass : Status::fail,
       json{{"sym3", r.dim_sym3},
            {"sym2", r.dim_sym2},
            {"even_sym3", r.dim_even_sym3},
            {"sym3_formula", binomial(g, 3) + 2 * binomial(g, 2) + g},
            {"sym2_formula", binomial(g, 2) + g},
            {"even_sym3_formula",
             binomial(g - 1, 3) + 2 * binomial(g - 1, 2) + (g - 1)}}});
  return rep;
}

inline SuiteReport run_lemma43(int g, const VerifyOptions&) {
  SuiteReport rep{g, "lemma43", 0.0, {}};
  const Lemma43Result r = lemma43_check(g, g <= 16);
  // The certified statement is a lower bound; a computed excess would be a
  // finding, a shortfall a failure.
  Status st = Status::pass;
  if (r.span_dim > static_cast<std::size_t>(r.expected)) st = Status::finding;
  if (r.span_dim < static_cast<std::size_t>(r.expected)) st = Status::fail;
  rep.checks.push_back({"span_dimension", st,
                        json{{"computed", r.span_dim},
                             {"expected", r.expected},
                             {"cube_family_full", r.cube_family_full}}});
  rep.checks.push_back(
      {"push_span_dimension",
       r.iota_rank == static_cast<std::size_t>(g) ? Status::pass : Status::fail,
       json{{"computed", r.iota_rank}, {"expected", g}}});
  return rep;
}

inline SuiteReport run_minimality(int g, const VerifyOptions&) {
  SuiteReport rep{g, "minimality", 0.0, {}};
  const MinimalityResult r = minimality_check(g);
  rep.checks.push_back(
      {"independent_modulo_pushes", r.ok() ? Status::pass : Status::fail,
       json{{"generators", r.generator_count},
            {"quotient_dim", r.quotient_dim},
            {"expected", r.expected},
            {"independent", r.independent},
            {"derived_closed_form_quads", r.derived_closed_form_quads}}});
  return rep;
}

// ---- appendix: the original-style definition agrees with the Magnus one on
// every catalog generator and on random products; raw values land in the
// symmetric part of degree 2.
inline SuiteReport run_appendix(int g, const VerifyOptions& opts,
                                int product_trials = 100) {
  SuiteReport rep{g, "appendix", 0.0, {}};
  Rng rng = detail::suite_rng(opts, "appendix", g);

  std::vector<SubstEndo> endos;
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      if (i != j) endos.push_back(y_slide_inverse_endo(g, i, j));
  for (int i = 1; i <= g; ++i)
    for (int j = i + 1; j <= g; ++j)
      endos.push_back(inverse_endo(McgGen::t_square_pair(g, i, j)));
  for (int i = 1; i <= g; ++i) endos.push_back(push_inverse_endo(gen(g, i)));

  int mism = 0, asym = 0;
  for (const SubstEndo& e : endos) {
    const Tau1Hom a = tau1_appendix(e);
    if (!tau1_hom_equal(a, tau1_hom(e))) ++mism;
    for (const Tensor& v : a.values)
      if (!detail::symmetric2(v)) ++asym;
  }
  rep.checks.push_back({"catalog_agreement",
                        mism == 0 ? Status::pass : Status::fail,
                        json{{"cases", endos.size()}, {"mismatches", mism}}});

  int pmism = 0;
  for (int t = 0; t < product_trials; ++t) {
    const SubstEndo e = inverse_endo(random_expr(g, 4, rng));
    const Tau1Hom a = tau1_appendix(e);
    if (!tau1_hom_equal(a, tau1_hom(e))) ++pmism;
    for (const Tensor& v : a.values)
      if (!detail::symmetric2(v)) ++asym;
  }
  rep.checks.push_back({"random_products_agreement",
                        pmism == 0 ? Status::pass : Status::fail,
                        json{{"trials", product_trials}, {"mismatches", pmism}}});
  rep.checks.push_back({"raw_values_symmetric",
                        asym == 0 ? Status::pass : Status::fail,
                        json{{"violations", asym}}});
  return rep;
}

inline SuiteReport run_suite(const std::string& name, int g,
                             const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  if (name == "magnus")
    rep = run_magnus(g, opts);
  else if (name == "lemma34")
    rep = run_lemma34(g, opts);
  else if (name == "lemma35")
    rep = run_lemma35(g, opts);
  else if (name == "lemma42")
    rep = run_lemma42(g, opts);
  else if (name == "lemma43")
    rep = run_lemma43(g, opts);
  else if (name == "minimality")
    rep = run_minimality(g, opts);
  else if (name == "appendix")
    rep = run_appendix(g, opts);
  else
    throw std::invalid_argument("unknown suite: " + name);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

// Expand "all", honor per-suite genus thresholds, keep genus-major order.
inline std::vector<SuiteReport> run_suites(const std::vector<std::string>& suites,
                                           int g_lo, int g_hi,
                                           const VerifyOptions& opts) {
  std::vector<std::string> expanded;
  for (const std::string& s : suites) {
    if (s == "all") {
      for (const std::string& n : suite_names()) expanded.push_back(n);
    } else {
      expanded.push_back(s);
    }
  }
  std::vector<SuiteReport> out;
  for (int g = g_lo; g <= g_hi; ++g)
    for (const std::string& s : expanded)
      if (g >= suite_min_genus(s)) out.push_back(run_suite(s, g, opts));
  return out;
}

inline int count_failures(const std::vector<SuiteReport>& reps) {
  int n = 0;
  for (const SuiteReport& r : reps)
    for (const Check& c : r.checks)
      if (c.status == Status::fail) ++n;
  return n;
}

// ---- serialization ----

inline json to_json(const SuiteReport& r) {
  json checks = json::array();
  for (const Check& c : r.checks)
    checks.push_back(
        json{{"name", c.name}, {"status", status_name(c.status)}, {"data", c.data}});
  return json{{"genus", r.genus},
              {"suite", r.suite},
              {"seconds", r.seconds},
              {"checks", checks}};
}

inline Status status_from_name(std::string_view name) {
  if (name == "PASS") return Status::pass;
  if (name == "FAIL") return Status::fail;
  if (name == "FINDING") return Status::finding;
  throw std::invalid_argument("unknown status: " + std::string(name));
}

inline SuiteReport suite_report_from_json(const json& j) {
  SuiteReport r;
  r.genus = j.at("genus").get<int>();
  r.suite = j.at("suite").get<std::string>();
  r.seconds = j.at("seconds").get<double>();
  for (const json& cj : j.at("checks"))
    r.checks.push_back({cj.at("name").get<std::string>(),
                        status_from_name(cj.at("status").get<std::string>()),
                        cj.at("data")});
  return r;
}

inline std::string payload_text(const json& data) {
  std::string out;
  for (auto it = data.begin(); it != data.end(); ++it) {
    if (!out.empty()) out += ' ';
    out += it.key();
    out += '=';
    out += it.value().is_string() ? it.value().get<std::string>()
                                  : it.value().dump();
  }
  return out;
}

inline std::string to_text(const SuiteReport& r) {
  std::string out;
  char buf[64];
  for (const Check& c : r.checks) {
    out += "g=" + std::to_string(r.genus) + " suite=" + r.suite +
           " check=" + c.name + " status=" + status_name(c.status);
    const std::string payload = payload_text(c.data);
    if (!payload.empty()) out += ' ' + payload;
    out += '\n';
  }
  std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
  out += "g=" + std::to_string(r.genus) + " suite=" + r.suite +
         " done checks=" + std::to_string(r.checks.size()) +
         " failures=" + std::to_string(r.failed() ? 1 : 0) + " seconds=" + buf +
         "\n";
  return out;
}

inline std::string csv_header() { return "genus,suite,check,status,data\n"; }

inline std::string to_csv(const SuiteReport& r) {
  std::string out;
  for (const Check& c : r.checks) {
    std::string payload;
    for (auto it = c.data.begin(); it != c.data.end(); ++it) {
      if (!payload.empty()) payload += ';';
      payload += it.key() + "=" +
                 (it.value().is_string() ? it.value().get<std::string>()
                                         : it.value().dump());
    }
    out += std::to_string(r.genus) + "," + r.suite + "," + c.name + "," +
           status_name(c.status) + "," + payload + "\n";
  }
  return out;
}

inline json dims_to_json(const DimsRow& d) {
  return json{{"genus", d.genus},
              {"abelianization", d.abelianization},
              {"lemma43_span", d.lemma43_span},
              {"lemma43_formula", d.lemma43_formula},
              {"sym2", d.sym2},
              {"sym2_formula", d.sym2_formula},
              {"sym3", d.sym3},
              {"sym3_formula", d.sym3_formula},
              {"even_sym3", d.even_sym3},
              {"even_sym3_formula", d.even_sym3_formula},
              {"generator_count", d.generator_count},
              {"cube_family_full", d.cube_family_full},
              {"all_match", d.all_match}};
}

}  // namespace gamma2
