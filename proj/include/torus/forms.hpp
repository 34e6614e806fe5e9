#pragma once

// Primitive integral binary quadratic forms a x^2 + b x y + c y^2.

#include "torus/abelian.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace torus {

struct BinaryForm {
  Integer a, b, c;

  Integer discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
  auto key() const { return std::tie(a, b, c); }
  friend bool operator==(const BinaryForm& x, const BinaryForm& y) { return x.key() == y.key(); }
  friend bool operator<(const BinaryForm& x, const BinaryForm& y) { return x.key() < y.key(); }
};

/// Representative of b mod 2|a| in (-|a|, |a|].
Integer centered_residue(const Integer& b, const Integer& a);
/// (a, b, (b^2 - D)/(4a)); throws std::logic_error when c is not integral.
BinaryForm with_b(const Integer& a, const Integer& b, const Integer& D);

/// (1, s, (s^2 - D)/4) with s = D mod 2.
BinaryForm principal_form(const Integer& D);
/// (a, -b, c)
BinaryForm opposite(const BinaryForm& f);

/// Dirichlet composition; the result is not reduced.
BinaryForm compose_raw(const BinaryForm& f, const BinaryForm& g);

// ---- positive definite (D < 0) ----

bool is_reduced_definite(const BinaryForm& f);
/// |b| <= a <= c, b >= 0 if |b| = a or a = c.
BinaryForm reduce_definite(BinaryForm f);
BinaryForm compose_definite(const BinaryForm& f, const BinaryForm& g);
BinaryForm power_definite(const BinaryForm& f, Integer n);
/// All reduced primitive positive definite forms, sorted.
std::vector<BinaryForm> reduced_definite_forms(const Integer& D);

// ---- indefinite (D > 0, not a square) ----

bool is_reduced_indefinite(const BinaryForm& f);
/// The reduction operator rho(a, b, c) = (c, r(-b, c), (r^2 - D)/(4c)).
BinaryForm rho(const BinaryForm& f);
BinaryForm reduce_indefinite(BinaryForm f);
/// All reduced primitive indefinite forms, sorted.
std::vector<BinaryForm> reduced_indefinite_forms(const Integer& D);

/// The rho-cycles of reduced indefinite forms; one per narrow class.
struct FormCycles {
  std::vector<std::vector<BinaryForm>> cycles;
  std::map<BinaryForm, std::size_t> index;
  /// Index of the cycle containing a reduced form.
  std::size_t cycle_of(const BinaryForm& reduced) const;
};
FormCycles indefinite_cycles(const Integer& D);

}  // namespace torus
