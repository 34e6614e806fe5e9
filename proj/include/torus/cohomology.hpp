#pragma once

// Tate cohomology of finite groups in degrees -1..2.
//
// Degrees 0 and -1 come straight from the norm map; degrees 1 and 2 use the
// full (unnormalised) inhomogeneous bar complex C^k = M^{|G|^k}. For cyclic
// groups an independent periodic computation is available for cross-checks.

#include "torus/gmodule.hpp"

#include <stdexcept>

namespace torus {

class CohomologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CohomologyResult {
  int degree = 0;
  FiniteAbelianGroup group;
  /// Columns are cochain-level representatives of the generators (ambient
  /// coordinates of M for degrees <= 0, of M^{|G|^n} for n >= 1).
  IntMatrix representatives;
};

CohomologyResult tate_cohomology(const FiniteGroup& G, const GModule& M, int degree);

/// Periodic computation through a generator s of a cyclic group:
/// even degrees ker(s - 1)/N M, odd degrees ker N/(s - 1)M.
CohomologyResult tate_cohomology_cyclic(const FiniteGroup& G, const GModule& M, int degree);

/// [H^0_T] / [H^1] for cyclic G.
Rational herbrand_quotient(const FiniteGroup& G, const GModule& M);

/// Finite abelian group with a group of automorphisms given by matrices acting
/// on residue coordinates (column vectors modulo the invariant factors).
struct FiniteModuleWithAction {
  FiniteAbelianGroup structure;
  FiniteGroup actors;
  std::vector<IntMatrix> action;  // one per element of actors
};

/// H^1(I, M) for I normal in D, with D/I acting by (d.c)(x) = d c(d^{-1} x d).
/// Verifies that the action is well defined on classes.
FiniteModuleWithAction h1_with_residual_action(const FiniteGroup& D, const Subgroup& I, const GModule& M);

FiniteAbelianGroup fixed_points(const FiniteModuleWithAction& F);

/// Coboundary matrix d^k : C^k -> C^{k+1} of the bar complex, k in {0, 1, 2}.
IntMatrix bar_differential(const FiniteGroup& G, const GModule& M, int k);

/// Block-diagonal torsion relations for `copies` copies of M.
IntMatrix repeated_relations(const GModule& M, Index copies);

}  // namespace torus
