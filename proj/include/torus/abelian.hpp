#pragma once

// Finitely generated abelian groups and lattice subquotients.

#include "torus/integer.hpp"
#include "torus/smith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite abelian group  Z/d_1 + ... + Z/d_k  with d_i >= 2 and d_i | d_{i+1}.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Accepts any list of positive orders (1s dropped) and normalises it to
  /// invariant-factor form.
  explicit FiniteAbelianGroup(std::vector<Integer> cyclic_orders);

  const std::vector<Integer>& invariant_factors() const { return factors_; }
  Integer order() const;
  bool is_trivial() const { return factors_.empty(); }
  /// "trivial" or "Z/2 + Z/4".
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<Integer> factors_;
};

/// Z^n modulo the column span of `relations` (n x k).
struct AbelianPresentation {
  IntMatrix relations;

  Index ambient_dimension() const { return relations.rows(); }
  static AbelianPresentation free(Index n) { return {IntMatrix(n, 0)}; }
  /// Z^free_rank + Z/t_1 + ... in coordinates (free first).
  static AbelianPresentation mixed(Index free_rank, const std::vector<Integer>& torsion);
};

/// Column-concatenation helper for generator matrices with equal row count.
IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

/// Generators of { x in Z^n : F x in span(target) }, F is p x n, target p x k.
IntMatrix lattice_preimage(const IntMatrix& F, const IntMatrix& target);

/// A finite subquotient  span(numerator) / span(denominator)  of Z^m, together
/// with an explicit isomorphism to its invariant-factor form.
class Subquotient {
 public:
  /// Throws LatticeError("denominator not contained in numerator") or
  /// LatticeError("infinite quotient").
  Subquotient(const IntMatrix& numerator, const IntMatrix& denominator);

  const FiniteAbelianGroup& structure() const { return structure_; }
  Index ambient_dimension() const { return ambient_; }

  /// One ambient vector per invariant factor, generating the quotient.
  const IntMatrix& generators() const { return generators_; }

  bool contains(const IntVector& y) const;
  /// Residues of y's class w.r.t. generators(); throws if y is not in the numerator.
  IntVector coordinates(const IntVector& y) const;

 private:
  Index ambient_ = 0;
  ColumnEchelon<Integer> basis_;
  IntMatrix left_;            // rows of U selecting the nontrivial factors
  std::vector<Integer> mods_;  // matching invariant factors
  IntMatrix generators_;
  FiniteAbelianGroup structure_;
};

/// Subgroup generated by numerator_gens modulo denominator_gens inside the
/// presented group (coordinates are ambient vectors as columns).
FiniteAbelianGroup subquotient_structure(const AbelianPresentation& ambient,
                                         const IntMatrix& numerator_gens,
                                         const IntMatrix& denominator_gens);

/// Cokernel of a presentation matrix: structure and free rank.
struct CokernelInfo {
  FiniteAbelianGroup torsion;
  Index free_rank = 0;
};
CokernelInfo cokernel(const IntMatrix& relations);

/// Structure of a finite abelian group given the multiset of its element orders.
FiniteAbelianGroup structure_from_element_orders(const std::vector<Integer>& orders);

}  // namespace torus
