#pragma once

// G-modules: Z^rank + Z/t_1 + ... + Z/t_k with G acting by integer matrices on
// column coordinates (free coordinates first, torsion coordinates read modulo
// their orders).

#include "torus/group.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

class ModuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GModule {
 public:
  /// The zero module over the trivial group.
  GModule() : GModule(FiniteGroup(), 0, {}, {IntMatrix(0, 0)}) {}
  /// `action[g]` for every element g of `group`. Torsion rows are reduced into
  /// [0, t_i). Throws ModuleError when any action axiom fails.
  GModule(FiniteGroup group, Index rank, std::vector<Integer> torsion, std::vector<IntMatrix> action);

  /// Extends generator matrices to the whole group along a breadth-first
  /// closure, then validates the result (so inconsistent generator matrices are
  /// rejected).
  static GModule from_generators(FiniteGroup group, Index rank, std::vector<Integer> torsion,
                                 const std::vector<int>& generators,
                                 const std::vector<IntMatrix>& matrices);

  const FiniteGroup& group() const { return group_; }
  Index rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  Index dimension() const { return rank_ + static_cast<Index>(torsion_.size()); }
  const IntMatrix& action(int g) const { return action_[static_cast<std::size_t>(g)]; }

  /// dimension x |torsion| matrix whose columns span the torsion relations.
  IntMatrix relations() const;
  AbelianPresentation presentation() const { return {relations()}; }

  /// True when x and y agree as elements of the module.
  bool equal_elements(const IntVector& x, const IntVector& y) const;
  /// Reduces torsion coordinates into [0, t_i).
  IntVector normalize(IntVector x) const;

 private:
  FiniteGroup group_;
  Index rank_;
  std::vector<Integer> torsion_;
  std::vector<IntMatrix> action_;
};

enum class StandardKind { trivial, regular, norm_torus, dual_torus, permutation };

/// trivial: Z. regular: Z[G]. norm_torus: Z[G]/(sum of g) with basis the images
/// of the non-identity elements. dual_torus: augmentation ideal with basis
/// {g - 1 : g != 1}. permutation: Z[G/H], cosets numbered by smallest element.
GModule standard_module(const FiniteGroup& G, StandardKind kind);
GModule permutation_module(const FiniteGroup& G, const Subgroup& H);

/// Same abelian group, action restricted to H (re-indexed by H.as_group()).
GModule restrict_module(const GModule& M, const Subgroup& H);

StandardKind parse_standard_kind(const std::string& name);
std::string to_string(StandardKind kind);

}  // namespace torus
