#pragma once

// Finite groups stored as full multiplication tables. Element 0 is always the
// identity. Desk scale only (tables are |G|^2 ints).

#include "torus/abelian.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace torus {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Permutation = std::vector<int>;

class FiniteGroup {
 public:
  /// Trivial group.
  FiniteGroup();
  /// Validates associativity, identity 0 and two-sided inverses.
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric3();

  int order() const { return data_->order; }
  int mul(int a, int b) const { return data_->table[static_cast<std::size_t>(a * data_->order + b)]; }
  int inv(int a) const { return data_->inverse[static_cast<std::size_t>(a)]; }
  /// g x g^{-1}
  int conjugate(int x, int g) const { return mul(mul(g, x), inv(g)); }
  int element_order(int a) const;

  bool is_abelian() const;
  bool is_cyclic() const;
  /// An element of order |G|; throws for non-cyclic groups.
  int cyclic_generator() const;

  std::vector<std::vector<int>> table() const;
  bool same_as(const FiniteGroup& other) const;

 private:
  struct Data {
    int order = 1;
    std::vector<int> table;
    std::vector<int> inverse;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Closure of the generators (permutations of {0..degree-1}) under composition.
/// Breadth-first from the identity, generators applied in input order;
/// table(i, j) is the index of perm_i o perm_j (apply perm_j first).
FiniteGroup group_from_permutations(const std::vector<Permutation>& generators, int degree);

class Subgroup {
 public:
  /// Validates closure; elements need not be sorted.
  Subgroup(FiniteGroup parent, std::vector<int> elements);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const;
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_normal() const;

  /// The subgroup as a standalone group; local index k is elements()[k].
  FiniteGroup as_group() const;
  /// Local index of a parent element (throws if absent).
  int local_index(int g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.elements_ == b.elements_;
  }

 private:
  FiniteGroup parent_;
  std::vector<int> elements_;  // sorted, starts with 0
};

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& generators);
Subgroup whole_group(const FiniteGroup& G);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup commutator_subgroup(const FiniteGroup& G);
/// Every subgroup, ordered by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

/// G/N for normal N. Cosets are numbered by their smallest element.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> coset_of;        // element -> coset index
  std::vector<int> representative;  // coset index -> smallest element
};
QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

/// G^ab in invariant-factor form with the quotient map into its coordinates.
struct Abelianization {
  FiniteAbelianGroup group;
  std::vector<IntVector> coordinates;  // per element of G, residues mod the factors
};
Abelianization abelianization(const FiniteGroup& G);

/// |image of H in G^ab|.
int abelian_image_order(const Abelianization& ab, const Subgroup& H);

}  // namespace torus
