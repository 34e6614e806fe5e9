#include "random_modules.hpp"
#include "torus/cohomology.hpp"

#include <doctest.h>

#include <random>

using namespace torus;

using testkit::small_groups;

TEST_SUITE("cohomology") {
  TEST_CASE("trivial module over cyclic groups") {
    for (int n = 1; n <= 6; ++n) {
      const FiniteGroup G = FiniteGroup::cyclic(n);
      const GModule Z = standard_module(G, StandardKind::trivial);
      CHECK(tate_cohomology(G, Z, 0).group.order() == n);
      CHECK(tate_cohomology(G, Z, 1).group.order() == 1);
      CHECK(herbrand_quotient(G, Z) == Rational(n));
    }
  }

  TEST_CASE("regular module is acyclic") {
    for (const FiniteGroup& G : small_groups())
      for (int n : {-1, 0, 1, 2}) CHECK(tate_cohomology(G, standard_module(G, StandardKind::regular), n).group.order() == 1);
  }

  TEST_CASE("first cohomology of the character lattices") {
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    CHECK(tate_cohomology(s3, standard_module(s3, StandardKind::norm_torus), 1).group.order() == 2);
    CHECK(tate_cohomology(s3, standard_module(s3, StandardKind::dual_torus), 1).group.order() == 6);
    const FiniteGroup v4 = FiniteGroup::klein_four();
    CHECK(tate_cohomology(v4, standard_module(v4, StandardKind::norm_torus), 1).group.invariant_factors() ==
          std::vector<Integer>{2, 2});
  }

  TEST_CASE("inversion on Z/4") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix minus(1, 1);
    minus << -1;
    const GModule mu4(z2, 0, {Integer(4)}, {identity_matrix(1), minus});
    CHECK(tate_cohomology(z2, mu4, 1).group.order() == 2);
    CHECK(tate_cohomology(z2, mu4, 0).group.order() == 2);
    CHECK(herbrand_quotient(z2, mu4) == 1);
  }

  TEST_CASE("units of Q(sqrt 2)") {
    // {+-1} x eps^Z with sigma(eps) = -1/eps
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix sigma(2, 2);
    sigma << -1, 0, 1, 1;
    const GModule units(z2, 1, {Integer(2)}, {identity_matrix(2), sigma});
    CHECK(tate_cohomology(z2, units, 0).group.order() == 1);
    CHECK(tate_cohomology(z2, units, 1).group.order() == 2);
    CHECK(herbrand_quotient(z2, units) == Rational(1, 2));
  }

  TEST_CASE("unsupported degrees and group mismatch") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GModule Z = standard_module(z2, StandardKind::trivial);
    CHECK_THROWS_AS(tate_cohomology(z2, Z, 3), CohomologyError);
    CHECK_THROWS_AS(tate_cohomology(z2, Z, -2), CohomologyError);
    CHECK_THROWS_AS(tate_cohomology(FiniteGroup::cyclic(3), Z, 1), CohomologyError);
    CHECK_THROWS_AS(herbrand_quotient(FiniteGroup::klein_four(),
                                      standard_module(FiniteGroup::klein_four(), StandardKind::trivial)),
                    CohomologyError);
  }

  TEST_CASE("representatives are cocycles") {
    const FiniteGroup v4 = FiniteGroup::klein_four();
    const GModule T = standard_module(v4, StandardKind::norm_torus);
    const CohomologyResult h1 = tate_cohomology(v4, T, 1);
    const IntMatrix image = bar_differential(v4, T, 1) * h1.representatives;
    CHECK(image.isZero());
    const CohomologyResult h2 = tate_cohomology(v4, T, 2);
    CHECK((bar_differential(v4, T, 2) * h2.representatives).isZero());
  }

  TEST_CASE("cyclic fast path agrees with the bar complex") {
    std::vector<GModule> modules;
    for (int n = 1; n <= 6; ++n) {
      const FiniteGroup G = FiniteGroup::cyclic(n);
      for (StandardKind k : {StandardKind::trivial, StandardKind::regular, StandardKind::norm_torus,
                             StandardKind::dual_torus})
        modules.push_back(standard_module(G, k));
      for (const Subgroup& H : all_subgroups(G)) modules.push_back(permutation_module(G, H));
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
      GModule M = testkit::random_finite_module(rng, true);
      modules.push_back(std::move(M));
    }
    for (const GModule& M : modules)
      for (int n : {-1, 0, 1, 2})
        CHECK(tate_cohomology(M.group(), M, n).group == tate_cohomology_cyclic(M.group(), M, n).group);
  }

  TEST_CASE("Shapiro: permutation modules") {
    for (const FiniteGroup& G : {FiniteGroup::cyclic(4), FiniteGroup::symmetric3()}) {
      for (const Subgroup& H : all_subgroups(G)) {
        const GModule P = permutation_module(G, H);
        const FiniteGroup Hg = H.as_group();
        const GModule Z = standard_module(Hg, StandardKind::trivial);
        for (int n : {1, 2}) CHECK(tate_cohomology(G, P, n).group.order() == tate_cohomology(Hg, Z, n).group.order());
      }
    }
  }

  TEST_CASE("Herbrand quotient along 0 -> Z -> Z[G] -> T -> 0") {
    for (int n = 2; n <= 6; ++n) {
      const FiniteGroup G = FiniteGroup::cyclic(n);
      const Rational hZ = herbrand_quotient(G, standard_module(G, StandardKind::trivial));
      const Rational hReg = herbrand_quotient(G, standard_module(G, StandardKind::regular));
      const Rational hT = herbrand_quotient(G, standard_module(G, StandardKind::norm_torus));
      CHECK(hReg == 1);
      CHECK(hT * hZ == hReg);
      CHECK(hT == Rational(1, n));
    }
  }

  TEST_CASE("finite modules over cyclic groups: [H^0_T] = [H^-1_T]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
      const GModule M = testkit::random_finite_module(rng, true);
      CAPTURE(trial);
      CHECK(tate_cohomology(M.group(), M, 0).group.order() == tate_cohomology(M.group(), M, -1).group.order());
      CHECK(herbrand_quotient(M.group(), M) == 1);
    }
  }

  TEST_CASE("finite modules over V4 can break [H^0_T] = [H^-1_T]") {
    // augmentation ideal mod 2: orders 2 and 4
    const FiniteGroup V = FiniteGroup::klein_four();
    const GModule L = standard_module(V, StandardKind::dual_torus);
    std::vector<IntMatrix> action;
    for (int g = 0; g < V.order(); ++g) action.push_back(L.action(g));
    const GModule M(V, 0, std::vector<Integer>(static_cast<std::size_t>(L.rank()), Integer(2)), action);
    CHECK(tate_cohomology(V, M, 0).group.order() == 2);
    CHECK(tate_cohomology(V, M, -1).group.order() == 4);
  }

  TEST_CASE("residual action on H^1 of a normal subgroup") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GModule T2 = standard_module(z2, StandardKind::norm_torus);
    const FiniteModuleWithAction none = h1_with_residual_action(z2, trivial_subgroup(z2), T2);
    CHECK(none.structure.order() == 1);
    CHECK(fixed_points(none).order() == 1);

    const FiniteModuleWithAction full = h1_with_residual_action(z2, whole_group(z2), T2);
    CHECK(full.structure.invariant_factors() == std::vector<Integer>{2});
    CHECK(full.actors.order() == 1);
    CHECK(fixed_points(full).order() == 2);

    const FiniteGroup z4 = FiniteGroup::cyclic(4);
    const Subgroup two = subgroup_generated(z4, {2});
    const FiniteModuleWithAction mid =
        h1_with_residual_action(z4, two, standard_module(z4, StandardKind::norm_torus));
    CHECK(mid.actors.order() == 2);
    // image of the inertia subgroup in (Z/4)^ab
    CHECK(fixed_points(mid).order() == 2);

    const FiniteGroup s3 = FiniteGroup::symmetric3();
    const Subgroup order_two = all_subgroups(s3)[1];
    CHECK_THROWS_AS(h1_with_residual_action(s3, order_two, standard_module(s3, StandardKind::norm_torus)),
                    CohomologyError);
  }

  TEST_CASE("fixed points of explicit actions") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    IntMatrix minus(1, 1);
    minus << -1;
    const FiniteAbelianGroup z4({Integer(4)});
    CHECK(fixed_points({z4, z2, {identity_matrix(1), minus}}).order() == 2);
    CHECK(fixed_points({z4, z2, {identity_matrix(1), identity_matrix(1)}}).order() == 4);
    CHECK(fixed_points({FiniteAbelianGroup(), z2, {IntMatrix(0, 0), IntMatrix(0, 0)}}).order() == 1);
  }
}
