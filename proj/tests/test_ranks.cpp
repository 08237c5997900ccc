#include <doctest.h>

#include "gamma2/ranks.hpp"

using namespace gamma2;

TEST_SUITE_BEGIN("ranks");

TEST_CASE("trivial intersection, both routes, small genera") {
  for (int g = 2; g <= 8; ++g) {
    const Lemma35Result r = lemma35_check(g);
    CHECK(r.intersection_dim == 0);
    CHECK(r.f_kills_sym3);
    CHECK(r.f_injective_on_h_omega);
    CHECK(r.ok());
  }
  CHECK_THROWS_AS(lemma35_check(1), std::invalid_argument);
}

TEST_CASE("contraction sequence checks") {
  for (int g = 3; g <= 8; ++g) {
    const Lemma42Result r = lemma42_check(g);
    CHECK(r.surjective);
    CHECK(r.kernel_eq);
    CHECK(r.dims_match);
  }
  const Lemma42Result r4 = lemma42_check(4);
  CHECK(r4.dim_sym3 == 20);
  CHECK(r4.dim_sym2 == 10);
  CHECK(r4.dim_even_sym3 == 10);
  CHECK_THROWS_AS(lemma42_check(2), std::invalid_argument);
}

TEST_CASE("value span dimensions at genus 4 and 5") {
  const Lemma43Result r4 = lemma43_check(4);
  CHECK(r4.span_dim == 14);  // C(4,3)+C(4,2)+4
  CHECK(r4.iota_rank == 4);
  CHECK(r4.exact());

  const Lemma43Result r5 = lemma43_check(5);
  CHECK(r5.span_dim == 25);  // C(5,3)+C(5,2)+5
  CHECK(r5.iota_rank == 5);
  CHECK(r5.exact());

  CHECK_THROWS_AS(lemma43_check(3), std::invalid_argument);
}

TEST_CASE("reduced cube family spans the same subspace as full enumeration") {
  for (int g = 4; g <= 7; ++g) {
    const std::size_t n3 = Tensor::ambient_dim(g, 3);
    Echelon full(n3), reduced(n3);
    for (const Tensor& t : even_cube_family(g, true)) full.insert(t.coords);
    for (const Tensor& t : even_cube_family(g, false)) reduced.insert(t.coords);
    CHECK(full.rank() == reduced.rank());
    // and the spans literally coincide
    std::vector<BitVec> fr, rr;
    for (const Tensor& t : even_cube_family(g, true)) fr.push_back(t.coords);
    for (const Tensor& t : even_cube_family(g, false)) rr.push_back(t.coords);
    CHECK(Subspace::span(n3, fr) == Subspace::span(n3, rr));

    const Tau1Context ctx(g);
    CHECK(lemma43_check(g, ctx, true).span_dim ==
          lemma43_check(g, ctx, false).span_dim);
  }
}

TEST_CASE("minimality certificate") {
  const MinimalityResult r4 = minimality_check(4);
  CHECK(r4.generator_count == 10);
  CHECK(r4.quotient_dim == 10);
  CHECK(r4.expected == 10);
  CHECK(r4.derived_closed_form_quads == 1);
  CHECK(r4.independent);
  CHECK(r4.ok());

  const MinimalityResult r5 = minimality_check(5);
  CHECK(r5.generator_count == 20);
  CHECK(r5.quotient_dim == 20);
  CHECK(r5.independent);

  CHECK_THROWS_AS(minimality_check(3), std::invalid_argument);
}

TEST_CASE("aggregate rank suite at genus 4") {
  const RankSuite s = rank_suite(4);
  CHECK(s.lemma35_ok);
  CHECK(s.lemma42.ok());
  CHECK(s.lemma43_rank == 14);
  CHECK(s.iota_rank == 4);
  CHECK(s.minimality.ok());
  CHECK_THROWS_AS(rank_suite(3), std::invalid_argument);
}

TEST_CASE("dimension rows carry matching formula and computed columns") {
  const DimsRow d4 = dims_row(4);
  CHECK(d4.abelianization == 10);
  CHECK(d4.lemma43_span == 14);
  CHECK(d4.sym2 == 10);
  CHECK(d4.sym3 == 20);
  CHECK(d4.even_sym3 == 10);
  CHECK(d4.generator_count == 10);
  CHECK(d4.all_match);

  const DimsRow d5 = dims_row(5);
  CHECK(d5.abelianization == 20);
  CHECK(d5.all_match);

  const DimsRow d6 = dims_row(6);
  CHECK(d6.abelianization == 35);
  CHECK(d6.generator_count == 35);
  CHECK(d6.all_match);

  // genus 3: no abelianization/generator columns, ranks still check out
  const DimsRow d3 = dims_row(3);
  CHECK(d3.abelianization == -1);
  CHECK(d3.all_match);
  CHECK_THROWS_AS(dims_row(2), std::invalid_argument);
}

TEST_SUITE_END();
