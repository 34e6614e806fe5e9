#pragma once

// Quadratic fields Q(sqrt d): class groups from binary forms, fundamental units
// from continued fractions, splitting of primes, and the Galois module of
// S-units. Everything here is exact; no analytic input is used.

#include "torus/forms.hpp"
#include "torus/gmodule.hpp"
#include "torus/places.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

class QuadraticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kDefaultDiscriminantBound = 1'000'000;

class QuadraticField {
 public:
  /// Throws QuadraticError unless d is squarefree, d != 0, 1 and |disc| <= bound.
  explicit QuadraticField(Integer d, Integer discriminant_bound = kDefaultDiscriminantBound);

  const Integer& d() const { return d_; }
  const Integer& discriminant() const { return disc_; }
  bool is_real() const { return d_ > 0; }
  /// Discriminant mod 2: the integral basis is 1, w = (s + sqrt(D))/2.
  int s() const { return disc_ % 2 == 0 ? 0 : 1; }
  std::string name() const { return "Q(sqrt(" + d_.str() + "))"; }
  /// The Galois group Z/2; element 1 is conjugation.
  const FiniteGroup& galois_group() const { return group_; }

 private:
  Integer d_;
  Integer disc_;
  FiniteGroup group_;
};

/// a + b sqrt(d) with rational a, b.
struct QuadraticNumber {
  Rational a, b;
  Integer d;

  static QuadraticNumber from_half_coordinates(const Integer& x, const Integer& y, const Integer& d) {
    return {Rational(x, 2), Rational(y, 2), d};
  }
  QuadraticNumber conjugate() const { return {a, -b, d}; }
  Rational norm() const { return a * a - Rational(d) * b * b; }
  QuadraticNumber inverse() const { return conjugate().scaled(1 / norm()); }
  QuadraticNumber scaled(const Rational& q) const { return {a * q, b * q, d}; }
  QuadraticNumber pow(long n) const;
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a * y.a + Rational(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
  }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a == y.a && x.b == y.b && x.d == y.d;
  }
  /// Exact sign for real fields.
  int sign() const;
  std::string to_string() const;
};

struct ClassGroupResult {
  Integer h;
  FiniteAbelianGroup class_group;
  /// Narrow class number (real fields); equals h for imaginary fields.
  Integer narrow_h;
};

ClassGroupResult class_number(const QuadraticField& F);

/// Fundamental unit (x + y sqrt(d))/2 > 1 and its norm.
struct FundamentalUnit {
  Integer x, y;
  int norm = 0;

  QuadraticNumber value(const Integer& d) const { return QuadraticNumber::from_half_coordinates(x, y, d); }
};

FundamentalUnit fundamental_unit(const QuadraticField& F);

/// Kronecker symbol (D | p) for a prime p.
int kronecker(const Integer& D, const Integer& p);

PlaceDatum splitting(const QuadraticField& F, const Place& v);

/// Places relevant to a quadratic extension: infinity, ramified primes, S.
std::vector<PlaceDatum> relevant_places(const QuadraticField& F, const PrimeSet& S);

struct UnitModuleDescription {
  GModule module;
  std::vector<std::string> generator_labels;  // free generators first, then the root of unity
  std::optional<int> norm_of_fundamental_unit;
  std::vector<QuadraticNumber> generators;
};

/// The Z/2-module of S-units O*_{L,S'}. Generators of S-unit ideals come from
/// reducing the ideal while tracking the multiplier, so no search bound is
/// involved.
UnitModuleDescription unit_module(const QuadraticField& F, const PrimeSet& S);

/// h_{L,S'}: class number divided by the order of the subgroup generated by the
/// primes above S.
Integer s_class_number(const QuadraticField& F, const PrimeSet& S);

/// Order of the class of a prime above p. Throws for inert p.
Integer ideal_class_order(const QuadraticField& F, const Integer& p);

/// A generator of the prime above p when that prime is principal.
std::optional<QuadraticNumber> prime_generator(const QuadraticField& F, const Integer& p);

/// True when (x + y sqrt(d))/2 style coordinates describe an algebraic integer.
bool is_algebraic_integer(const QuadraticNumber& x);

}  // namespace torus
