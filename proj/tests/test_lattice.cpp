#include "torus/cohomology.hpp"
#include "torus/smith.hpp"

#include <doctest.h>

#include <random>

using namespace torus;

namespace {

IntMatrix ints(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Bareiss fraction-free determinant, independent of the Smith code
Integer determinant(IntMatrix a) {
  const Index n = a.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void check_smith(const IntMatrix& A) {
  const SmithForm<Integer> s = smith_normal_form(A);
  CHECK(s.U * A * s.V == s.D);
  CHECK(abs(determinant(s.U)) == 1);
  CHECK(abs(determinant(s.V)) == 1);
  const std::vector<Integer> d = s.diagonal();
  for (Index i = 0; i < s.D.rows(); ++i)
    for (Index j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    if (i + 1 < d.size() && d[i] == 0) CHECK(d[i + 1] == 0);
  }
}

}  // namespace

TEST_SUITE("zg-lattice") {
  TEST_CASE("smith normal form examples") {
    CHECK(smith_normal_form(ints({{0}})).D == ints({{0}}));
    CHECK(smith_normal_form(ints({{2, 4}, {6, 8}})).diagonal() == std::vector<Integer>{2, 4});
    CHECK(smith_normal_form(identity_matrix(5)).D == identity_matrix(5));
    const SmithForm<Integer> empty = smith_normal_form(IntMatrix(0, 3));
    CHECK(empty.D.size() == 0);
  }

  TEST_CASE("smith normal form on random matrices") {
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> dim(1, 12), entry(-50, 50), sparse(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix A(dim(rng), dim(rng));
      const bool thin = trial % 4 == 0;  // force some rank deficiency
      for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < A.cols(); ++j) A(i, j) = thin && sparse(rng) ? 0 : entry(rng);
      check_smith(A);
    }
  }

  TEST_CASE("smith normal form is deterministic") {
    const IntMatrix A = ints({{3, 5, 7}, {2, 4, 6}, {1, 1, 1}});
    const SmithForm<Integer> a = smith_normal_form(A);
    const SmithForm<Integer> b = smith_normal_form(A);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
  }

  TEST_CASE("smith normal form over machine integers") {
    Matrix<long> A(2, 2);
    A << 2, 4, 6, 8;
    const SmithForm<long> s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.D);
    CHECK(s.D(1, 1) == 4);
  }

  TEST_CASE("finite abelian groups") {
    const FiniteAbelianGroup g({Integer(6), Integer(4), Integer(1)});
    CHECK(g.invariant_factors() == std::vector<Integer>{2, 12});
    CHECK(g.order() == 24);
    CHECK(g.to_string() == "Z/2 + Z/12");
    CHECK(FiniteAbelianGroup().to_string() == "trivial");
    CHECK(structure_from_element_orders({1, 2, 2, 2}) == FiniteAbelianGroup({Integer(2), Integer(2)}));
    CHECK(structure_from_element_orders({1, 2, 4, 4}) == FiniteAbelianGroup({Integer(4)}));
  }

  TEST_CASE("subquotients") {
    const AbelianPresentation z2 = AbelianPresentation::free(2);
    CHECK(subquotient_structure(z2, identity_matrix(2), identity_matrix(2)).order() == 1);
    const IntMatrix twice = identity_matrix(2) * Integer(2);
    CHECK(subquotient_structure(z2, identity_matrix(2), twice).invariant_factors() == std::vector<Integer>{2, 2});
    CHECK_THROWS_WITH_AS(subquotient_structure(z2, twice, identity_matrix(2)), "denominator not contained in numerator",
                         LatticeError);
    CHECK_THROWS_WITH_AS(subquotient_structure(z2, identity_matrix(2), IntMatrix(2, 0)), "infinite quotient",
                         LatticeError);

    // Z + Z/4 modulo the element (2, 2): finite, of order 8
    const AbelianPresentation mixed = AbelianPresentation::mixed(1, {Integer(4)});
    const FiniteAbelianGroup q = subquotient_structure(mixed, identity_matrix(2), ints({{2}, {2}}));
    CHECK(q.invariant_factors() == std::vector<Integer>{2, 4});
  }

  TEST_CASE("standard modules") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GModule n = standard_module(z2, StandardKind::norm_torus);
    CHECK(n.rank() == 1);
    CHECK(n.action(1) == ints({{-1}}));
    const GModule d = standard_module(z2, StandardKind::dual_torus);
    CHECK(d.rank() == 1);
    CHECK(d.action(1) == ints({{-1}}));

    for (const FiniteGroup& G : {FiniteGroup::cyclic(4), FiniteGroup::symmetric3(), FiniteGroup::klein_four()}) {
      CHECK(standard_module(G, StandardKind::norm_torus).rank() == G.order() - 1);
      CHECK(standard_module(G, StandardKind::dual_torus).rank() == G.order() - 1);
      CHECK(standard_module(G, StandardKind::regular).rank() == G.order());
      const GModule whole = permutation_module(G, whole_group(G));
      CHECK(whole.rank() == 1);
      CHECK(whole.action(G.order() - 1) == identity_matrix(1));
      for (const Subgroup& H : all_subgroups(G))
        CHECK(permutation_module(G, H).rank() == G.order() / H.order());
    }
  }

  TEST_CASE("action axioms are enforced") {
    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    CHECK_THROWS_AS(GModule(z2, 1, {}, {identity_matrix(1), ints({{2}})}), ModuleError);
    CHECK_THROWS_AS(GModule(z2, 1, {}, {ints({{-1}}), ints({{-1}})}), ModuleError);
    // torsion mapping into the free block
    CHECK_THROWS_AS(GModule(z2, 1, {Integer(2)}, {identity_matrix(2), ints({{1, 1}, {0, 1}})}), ModuleError);
    // inversion on Z/4 is fine
    CHECK_NOTHROW(GModule(z2, 0, {Integer(4)}, {identity_matrix(1), ints({{-1}})}));
  }

  TEST_CASE("restriction") {
    const FiniteGroup s3 = FiniteGroup::symmetric3();
    const GModule reg = standard_module(s3, StandardKind::regular);
    const GModule to_trivial = restrict_module(reg, trivial_subgroup(s3));
    CHECK(to_trivial.rank() == 6);
    CHECK(to_trivial.group().order() == 1);

    const Subgroup a3 = commutator_subgroup(s3);
    const GModule r = restrict_module(reg, a3);
    const FiniteGroup z3 = a3.as_group();
    // Z[Z/3]^2 has H^0_T = 0 and H^-1_T = 0; so does the restriction
    for (int n : {-1, 0, 1, 2}) CHECK(tate_cohomology(z3, r, n).group.order() == 1);
    CHECK(tate_cohomology(z3, r, 0).group == tate_cohomology(FiniteGroup::cyclic(3),
                                                             standard_module(FiniteGroup::cyclic(3), StandardKind::regular),
                                                             0).group);

    const FiniteGroup z2 = FiniteGroup::cyclic(2);
    const GModule n = standard_module(z2, StandardKind::norm_torus);
    const GModule same = restrict_module(n, whole_group(z2));
    CHECK(same.action(1) == n.action(1));
  }

  TEST_CASE("norm and dual tori of cyclic groups have equal cohomology") {
    for (int order = 2; order <= 6; ++order) {
      const FiniteGroup G = FiniteGroup::cyclic(order);
      const GModule n = standard_module(G, StandardKind::norm_torus);
      const GModule d = standard_module(G, StandardKind::dual_torus);
      for (int k : {-1, 0, 1, 2}) CHECK(tate_cohomology(G, n, k).group == tate_cohomology(G, d, k).group);
    }
  }
}
