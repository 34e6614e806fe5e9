#include "torus/abelian.hpp"

#include <algorithm>
#include <map>

namespace torus {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> cyclic_orders) {
  for (const Integer& d : cyclic_orders) {
    if (d <= 0) throw LatticeError("cyclic factor orders must be positive");
  }
  const Index k = static_cast<Index>(cyclic_orders.size());
  IntMatrix diag = IntMatrix::Zero(k, k);
  for (Index i = 0; i < k; ++i) diag(i, i) = cyclic_orders[static_cast<std::size_t>(i)];
  const auto snf = smith_normal_form(diag, {.left = false, .right = false});
  for (const Integer& d : snf.diagonal()) {
    if (d != 1) factors_.push_back(d);
  }
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const Integer& d : factors_) n *= d;
  return n;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " + ";
    s += "Z/" + factors_[i].str();
  }
  return s;
}

AbelianPresentation AbelianPresentation::mixed(Index free_rank,
                                               const std::vector<Integer>& torsion) {
  const Index t = static_cast<Index>(torsion.size());
  IntMatrix rel = IntMatrix::Zero(free_rank + t, t);
  for (Index i = 0; i < t; ++i) rel(free_rank + i, i) = torsion[static_cast<std::size_t>(i)];
  return {rel};
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw LatticeError("hcat: row count mismatch");
  IntMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

IntMatrix lattice_preimage(const IntMatrix& F, const IntMatrix& target) {
  const Index n = F.cols();
  if (F.rows() == 0) return identity_matrix(n);
  const IntMatrix stacked = target.cols() == 0 ? F : hcat(F, target);
  return column_echelon(stacked, true, n).kernel();
}

Subquotient::Subquotient(const IntMatrix& numerator, const IntMatrix& denominator)
    : ambient_(numerator.rows()) {
  if (denominator.rows() != numerator.rows())
    throw LatticeError("numerator and denominator live in different ambient lattices");
  basis_ = column_echelon(numerator, false);
  const Index r = basis_.rank();

  IntMatrix coords(r, denominator.cols());
  for (Index j = 0; j < denominator.cols(); ++j) {
    const auto c = solve_echelon(basis_, IntVector(denominator.col(j)));
    if (!c) throw LatticeError("denominator not contained in numerator");
    coords.col(j) = *c;
  }

  const auto snf = smith_normal_form(coords, {.left = true, .right = false, .left_inverse = true});
  if (snf.rank < r) throw LatticeError("infinite quotient");

  std::vector<Index> keep;
  for (Index i = 0; i < r; ++i) {
    if (snf.D(i, i) != 1) {
      keep.push_back(i);
      mods_.push_back(snf.D(i, i));
    }
  }
  left_.resize(static_cast<Index>(keep.size()), r);
  generators_.resize(ambient_, static_cast<Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const Index i = keep[k];
    left_.row(static_cast<Index>(k)) = snf.U.row(i);
    generators_.col(static_cast<Index>(k)) = basis_.E * snf.U_inverse.col(i);
  }
  structure_ = FiniteAbelianGroup(mods_);
}

bool Subquotient::contains(const IntVector& y) const {
  return solve_echelon(basis_, y).has_value();
}

IntVector Subquotient::coordinates(const IntVector& y) const {
  const auto c = solve_echelon(basis_, y);
  if (!c) throw LatticeError("vector is not in the numerator lattice");
  IntVector z = left_ * (*c);
  for (Index i = 0; i < z.size(); ++i) z(i) = floor_mod(z(i), mods_[static_cast<std::size_t>(i)]);
  return z;
}

FiniteAbelianGroup subquotient_structure(const AbelianPresentation& ambient,
                                         const IntMatrix& numerator_gens,
                                         const IntMatrix& denominator_gens) {
  const IntMatrix& rel = ambient.relations;
  return Subquotient(hcat(numerator_gens, rel), hcat(denominator_gens, rel)).structure();
}

CokernelInfo cokernel(const IntMatrix& relations) {
  const auto snf = smith_normal_form(relations, {.left = false, .right = false});
  CokernelInfo out;
  std::vector<Integer> tors;
  for (Index i = 0; i < snf.rank; ++i) tors.push_back(snf.D(i, i));
  out.torsion = FiniteAbelianGroup(tors);
  out.free_rank = relations.rows() - snf.rank;
  return out;
}

FiniteAbelianGroup structure_from_element_orders(const std::vector<Integer>& orders) {
  const Integer n = static_cast<unsigned long>(orders.size());
  std::vector<Integer> prime_powers;
  for (const Integer& p : prime_divisors(n)) {
    const unsigned top = valuation(n, p);
    // count[j] = #{x : v_p(order x) <= j} = p^{sum_i min(j, e_i)}
    std::vector<unsigned> log_count(top + 1, 0);
    std::vector<Integer> count(top + 1, 0);
    for (const Integer& o : orders) {
      const unsigned v = valuation(o, p);
      for (unsigned j = v; j <= top; ++j) count[j] += 1;
    }
    for (unsigned j = 0; j <= top; ++j) log_count[j] = valuation(count[j], p);
    // at_least[j] = #{i : e_i >= j}
    std::vector<unsigned> exps;
    for (unsigned j = 1; j <= top; ++j) {
      const unsigned at_least = log_count[j] - log_count[j - 1];
      const unsigned at_least_next = j < top ? log_count[j + 1] - log_count[j] : 0;
      for (unsigned k = at_least_next; k < at_least; ++k) exps.push_back(j);
    }
    for (unsigned e : exps) prime_powers.push_back(pow(p, e));
  }
  return FiniteAbelianGroup(prime_powers);
}

}  // namespace torus
