#pragma once

// Class numbers of the norm torus T = R^1_{L/K}(G_m) and its dual
// T' = R_{L/K}(G_m)/G_m over K = Q, with each closed-form term paired to a
// brute-force cohomology computation.

#include "torus/cohomology.hpp"
#include "torus/places.hpp"
#include "torus/quadratic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torus {

class FormulaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TorusKind { norm, dual };

std::string to_string(TorusKind kind);

/// Everything the formulas consume, independent of where it came from.
struct ExtensionInputs {
  std::string label;
  FiniteGroup group;
  GModule units;  // O*_{L,S'} as a G-module
  std::vector<PlaceDatum> places;  // every place of S and every ramified place
  PrimeSet S;
  Integer h_L_S = 1;
  Integer h_K_S = 1;
  std::optional<Integer> knot;
};

/// Inputs for L = Q(sqrt d) from the quadratic oracle; knot = 1.
ExtensionInputs quadratic_inputs(const QuadraticField& F, const PrimeSet& S);

/// T-hat for the norm torus, T-hat' for the dual torus.
GModule character_lattice(const FiniteGroup& G, TorusKind kind);

struct GlobalH1Term {
  Integer value;        // |G^ab| or |G|
  Integer brute_force;  // [H^1(G, character lattice)] from the bar complex
};

GlobalH1Term global_h1_term(const FiniteGroup& G, TorusKind kind);

struct LocalDetail {
  Place place;
  std::string quantity;  // "local_degree" or "ramification"
  Integer closed_form;
  Integer brute_force;
};

struct LocalTerms {
  Integer product_S = 1;
  Integer product_not_S = 1;
  std::vector<LocalDetail> details;
};

/// norm: product_S = prod_{v in S} |image of D_w in G^ab|, product_not_S =
/// prod over ramified v outside S of |image of I_w in G^ab|.
/// dual: product_S = 1, product_not_S = prod over ramified v outside S of |I_w|.
/// Details pair each factor with |H^1(D_w, T-hat)| or with the fixed points of
/// H^1(I_w, T-hat) under D_w/I_w.
LocalTerms local_terms(const std::vector<PlaceDatum>& places, const PrimeSet& S, const FiniteGroup& G,
                       TorusKind kind);

struct Crosscheck {
  std::string term;
  Integer closed_form;
  Integer brute_force;
  bool enforced = true;  // false where the identification is only conjectural (non-abelian G)

  bool agree() const { return closed_form == brute_force; }
};

struct NamedValue {
  std::string name;
  Rational value;
};

struct ClassNumberReport {
  TorusKind kind = TorusKind::norm;
  std::string label;
  PrimeSet S;
  std::vector<NamedValue> terms;
  Rational h;
  Rational tamagawa;
  std::vector<Crosscheck> crosschecks;

  bool is_integral() const { return torus::is_integral(h) && h > 0; }
  bool crosschecks_agree() const;
  const Rational& term(const std::string& name) const;
};

ClassNumberReport norm_torus_class_number(const ExtensionInputs& in);
ClassNumberReport dual_torus_class_number(const ExtensionInputs& in);

struct HerbrandCheck {
  Rational lhs;  // Herbrand quotient of the S-unit module
  Rational rhs;  // prod_{v in S} [L_w : K_v] / [L : K]
  bool agree() const { return lhs == rhs; }
};

HerbrandCheck herbrand_identity_check(const ExtensionInputs& in);

/// [cok alpha] / [ker alpha] for alpha: source -> target, both presented
/// groups; alpha acts on coordinate columns.
Rational q_quotient(const AbelianPresentation& source, const AbelianPresentation& target, const IntMatrix& alpha);

}  // namespace torus
