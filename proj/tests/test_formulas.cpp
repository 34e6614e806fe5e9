#include "torus/dataset.hpp"
#include "torus/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <random>

using namespace torus;

namespace {

ExtensionInputs quadratic(long d, PrimeSet S = {}) { return quadratic_inputs(QuadraticField(Integer(d)), S); }

IntMatrix random_nonsingular(std::mt19937& rng, Index n) {
  std::uniform_int_distribution<int> entry(-4, 4);
  for (;;) {
    IntMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) m(i, j) = entry(rng);
    if (cokernel(m).free_rank == 0) return m;
  }
}

}  // namespace

TEST_SUITE("torus-formulas") {
  TEST_CASE("global term") {
    const GlobalH1Term z2n = global_h1_term(FiniteGroup::cyclic(2), TorusKind::norm);
    CHECK(z2n.value == 2);
    CHECK(z2n.brute_force == 2);
    const GlobalH1Term s3n = global_h1_term(FiniteGroup::symmetric3(), TorusKind::norm);
    CHECK(s3n.value == 2);
    CHECK(s3n.brute_force == 2);
    const GlobalH1Term z2d = global_h1_term(FiniteGroup::cyclic(2), TorusKind::dual);
    CHECK(z2d.value == 2);
    CHECK(z2d.brute_force == 2);
    const GlobalH1Term s3d = global_h1_term(FiniteGroup::symmetric3(), TorusKind::dual);
    CHECK(s3d.value == 6);
    CHECK(s3d.brute_force == 6);
  }

  TEST_CASE("local terms") {
    const ExtensionInputs m5 = quadratic(-5);
    const LocalTerms a = local_terms(m5.places, m5.S, m5.group, TorusKind::norm);
    CHECK(a.product_S == 2);
    CHECK(a.product_not_S == 4);

    const ExtensionInputs i5 = quadratic(-1, {5});
    const LocalTerms b = local_terms(i5.places, i5.S, i5.group, TorusKind::norm);
    CHECK(b.product_S == 2);
    CHECK(b.product_not_S == 2);

    const ExtensionInputs all = quadratic(-5, {2, 5});
    CHECK(local_terms(all.places, all.S, all.group, TorusKind::dual).product_not_S == 1);
    CHECK(local_terms(all.places, all.S, all.group, TorusKind::dual).product_S == 1);

    for (const LocalTerms& t : {a, b})
      for (const LocalDetail& d : t.details) CHECK(d.closed_form == d.brute_force);
  }

  TEST_CASE("norm torus class numbers") {
    const ClassNumberReport i = norm_torus_class_number(quadratic(-1));
    CHECK(i.h == 1);
    CHECK(i.term("unit_cohomology") == 2);
    CHECK(i.tamagawa == 2);
    CHECK(norm_torus_class_number(quadratic(-47)).h == 5);
    const ClassNumberReport i5 = norm_torus_class_number(quadratic(-1, {5}));
    CHECK(i5.h == 1);
    CHECK(i5.term("unit_cohomology") == 2);
    CHECK(i5.term("local_product") == 2);
    for (const ClassNumberReport& r : {i, i5}) {
      CHECK(r.is_integral());
      CHECK(r.crosschecks_agree());
    }
  }

  TEST_CASE("dual torus class numbers") {
    const ClassNumberReport i = dual_torus_class_number(quadratic(-1));
    CHECK(i.h == 1);
    CHECK(i.term("unit_cohomology") == 2);
    CHECK(i.tamagawa == 2);
    const ClassNumberReport r2 = dual_torus_class_number(quadratic(2));
    CHECK(r2.h == 1);
    CHECK(r2.term("unit_cohomology") == 2);
    CHECK(dual_torus_class_number(quadratic(-47)).h == 5);
  }

  TEST_CASE("Herbrand identity") {
    const HerbrandCheck a = herbrand_identity_check(quadratic(2));
    CHECK(a.lhs == Rational(1, 2));
    CHECK(a.agree());
    CHECK(herbrand_identity_check(quadratic(-5)).lhs == 1);
    CHECK(herbrand_identity_check(quadratic(-1, {5})).rhs == 1);
    CHECK(herbrand_identity_check(quadratic(-1, {5})).agree());
    const Dataset data = load_dataset(bundled_dataset_path());
    CHECK_THROWS_AS(herbrand_identity_check(datum_to_inputs(*data.find("Q-zeta8"), {})), FormulaError);
    CHECK(herbrand_identity_check(datum_to_inputs(*data.find("Q-zeta7-cubic"), {7})).agree());
  }

  TEST_CASE("dataset entries") {
    const Dataset data = load_dataset(bundled_dataset_path());
    for (const ExtensionDatum& E : data.entries) {
      const ExtensionInputs in = datum_to_inputs(E, {});
      const ClassNumberReport n = norm_torus_class_number(in);
      const ClassNumberReport d = dual_torus_class_number(in);
      CAPTURE(E.label);
      CHECK(n.h == 1);
      CHECK(d.h == 1);
      CHECK(n.crosschecks_agree());
      CHECK(d.crosschecks_agree());
    }
    const ExtensionInputs z8 = datum_to_inputs(*data.find("Q-zeta8"), {});
    CHECK(norm_torus_class_number(z8).term("unit_cohomology") == 2);
    CHECK(norm_torus_class_number(z8).term("ramification_product") == 4);
  }

  TEST_CASE("knot handling") {
    ExtensionInputs in = quadratic(-1);
    in.knot = Integer(2);
    CHECK_THROWS_WITH_AS(norm_torus_class_number(in), "knot number must be 1 for a cyclic group", FormulaError);
    const Dataset data = load_dataset(bundled_dataset_path());
    ExtensionInputs z8 = datum_to_inputs(*data.find("Q-zeta8"), {});
    z8.knot.reset();
    CHECK_THROWS_WITH_AS(norm_torus_class_number(z8), "knot number required for non-cyclic group", FormulaError);
    // a knot of 2 turns an integral result into a visible diagnostic
    z8.knot = Integer(2);
    const ClassNumberReport r = norm_torus_class_number(z8);
    CHECK(r.h == Rational(1, 2));
    CHECK_FALSE(r.is_integral());
  }

  TEST_CASE("q quotient") {
    CHECK(q_quotient(AbelianPresentation::free(2), AbelianPresentation::free(2), identity_matrix(2)) == 1);
    IntMatrix five(1, 1);
    five << 5;
    CHECK(q_quotient(AbelianPresentation::free(1), AbelianPresentation::free(1), five) == 5);
    const AbelianPresentation z_z4 = AbelianPresentation::mixed(1, {Integer(4)});
    CHECK(q_quotient(z_z4, z_z4, identity_matrix(2) * Integer(2)) == 2);
    IntMatrix zero = IntMatrix::Zero(1, 1);
    CHECK_THROWS_WITH_AS(q_quotient(AbelianPresentation::free(1), AbelianPresentation::free(1), zero),
                         "infinite kernel or cokernel", FormulaError);
    IntMatrix to_free(1, 1);
    to_free << 1;
    CHECK_THROWS_AS(q_quotient(AbelianPresentation::mixed(0, {Integer(2)}), AbelianPresentation::free(1), to_free),
                    FormulaError);
  }

  TEST_CASE("q quotient is multiplicative") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      const Index n = 1 + trial % 4;
      const IntMatrix a = random_nonsingular(rng, n), b = random_nonsingular(rng, n);
      const AbelianPresentation F = AbelianPresentation::free(n);
      CHECK(q_quotient(F, F, b * a) == q_quotient(F, F, b) * q_quotient(F, F, a));
    }
    // maps on Z + Z/m given by multiplication
    for (long m : {2, 3, 4, 6, 9})
      for (long x : {1, 2, 3})
        for (long y : {1, 2, 5}) {
          const AbelianPresentation P = AbelianPresentation::mixed(1, {Integer(m)});
          const IntMatrix X = identity_matrix(2) * Integer(x), Y = identity_matrix(2) * Integer(y);
          CHECK(q_quotient(P, P, Y * X) == q_quotient(P, P, Y) * q_quotient(P, P, X));
        }
  }

  TEST_CASE("reports") {
    const ClassNumberReport r = norm_torus_class_number(quadratic(-47));
    const std::string text = render_text(r);
    CHECK(text.find("h_{T,S} = 5") != std::string::npos);
    const auto j = nlohmann::json::parse(render_json(r));
    CHECK(j["schema"] == kReportSchema);
    CHECK(j["h_result"]["num"] == 5);
    CHECK(j["is_integral"] == true);
    CHECK(j["S"] == nlohmann::json::array({"inf"}));
    CHECK(result_symbol(TorusKind::dual) == "h_{T',S}");
    for (const NamedValue& t : r.terms) {
      CHECK(j["terms"].contains(t.name));
      CHECK(j["terms"][t.name]["num"] == static_cast<long>(numerator(t.value)));
    }
  }
}
