#include "torus/formulas.hpp"

#include <algorithm>

namespace torus {

namespace {

bool in_S(const Place& v, const PrimeSet& S) {
  return v.is_infinite() || std::binary_search(S.begin(), S.end(), v.prime);
}

void check_places(const std::vector<PlaceDatum>& places, const PrimeSet& S, const FiniteGroup& G) {
  bool infinite = false;
  for (const PlaceDatum& pd : places) {
    if (!pd.decomposition.parent().same_as(G) || !pd.inertia.parent().same_as(G))
      throw FormulaError("subgroup data of place " + pd.place.to_string() + " is inconsistent with G");
    if (!pd.inertia.is_subgroup_of(pd.decomposition))
      throw FormulaError("inertia is not contained in decomposition at place " + pd.place.to_string());
    infinite = infinite || pd.place.is_infinite();
  }
  if (!infinite) throw FormulaError("the infinite place has no splitting data");
  for (const Integer& p : S) {
    const bool found = std::any_of(places.begin(), places.end(),
                                   [&](const PlaceDatum& pd) { return pd.place.prime == p; });
    if (!found) throw FormulaError("place " + p.str() + " of S has no splitting data");
  }
}

// D_w as a standalone group with I_w inside it
struct LocalGroups {
  FiniteGroup D;
  Subgroup I;
};

LocalGroups local_groups(const PlaceDatum& pd) {
  FiniteGroup D = pd.decomposition.as_group();
  std::vector<int> inertia;
  for (int g : pd.inertia.elements()) inertia.push_back(pd.decomposition.local_index(g));
  Subgroup I(D, std::move(inertia));
  return {std::move(D), std::move(I)};
}

Integer resolve_knot(const ExtensionInputs& in) {
  if (!in.knot) {
    if (!in.group.is_cyclic()) throw FormulaError("knot number required for non-cyclic group");
    return 1;
  }
  if (*in.knot < 1) throw FormulaError("knot number must be positive");
  if (in.group.is_cyclic() && *in.knot != 1) throw FormulaError("knot number must be 1 for a cyclic group");
  return *in.knot;
}

void check_units(const ExtensionInputs& in) {
  if (!in.units.group().same_as(in.group)) throw FormulaError("unit module is not a module over G");
  if (in.h_L_S < 1 || in.h_K_S < 1) throw FormulaError("class numbers must be positive");
}

}  // namespace

std::string to_string(TorusKind kind) { return kind == TorusKind::norm ? "norm" : "dual"; }

ExtensionInputs quadratic_inputs(const QuadraticField& F, const PrimeSet& S) {
  UnitModuleDescription units = unit_module(F, S);
  return {F.name(),       F.galois_group(), std::move(units.module), relevant_places(F, S), S,
          s_class_number(F, S), Integer(1), Integer(1)};
}

GModule character_lattice(const FiniteGroup& G, TorusKind kind) {
  return standard_module(G, kind == TorusKind::norm ? StandardKind::norm_torus : StandardKind::dual_torus);
}

GlobalH1Term global_h1_term(const FiniteGroup& G, TorusKind kind) {
  const Integer value = kind == TorusKind::norm ? abelianization(G).group.order() : Integer(G.order());
  return {value, tate_cohomology(G, character_lattice(G, kind), 1).group.order()};
}

LocalTerms local_terms(const std::vector<PlaceDatum>& places, const PrimeSet& S, const FiniteGroup& G,
                       TorusKind kind) {
  check_places(places, S, G);
  const Abelianization ab = abelianization(G);
  const GModule lattice = character_lattice(G, kind);
  LocalTerms out;
  for (const PlaceDatum& pd : places) {
    if (in_S(pd.place, S)) {
      if (kind == TorusKind::dual) continue;
      const Integer closed = abelian_image_order(ab, pd.decomposition);
      const LocalGroups lg = local_groups(pd);
      const Integer brute =
          tate_cohomology(lg.D, restrict_module(lattice, pd.decomposition), 1).group.order();
      out.product_S *= closed;
      out.details.push_back({pd.place, "local_degree", closed, brute});
    } else if (pd.ramified()) {
      const Integer closed =
          kind == TorusKind::norm ? Integer(abelian_image_order(ab, pd.inertia)) : Integer(pd.inertia.order());
      const LocalGroups lg = local_groups(pd);
      const Integer brute =
          fixed_points(h1_with_residual_action(lg.D, lg.I, restrict_module(lattice, pd.decomposition))).order();
      out.product_not_S *= closed;
      out.details.push_back({pd.place, "ramification", closed, brute});
    }
  }
  return out;
}

bool ClassNumberReport::crosschecks_agree() const {
  return std::all_of(crosschecks.begin(), crosschecks.end(),
                     [](const Crosscheck& c) { return !c.enforced || c.agree(); });
}

const Rational& ClassNumberReport::term(const std::string& name) const {
  for (const NamedValue& t : terms)
    if (t.name == name) return t.value;
  throw std::out_of_range("report has no term " + name);
}

ClassNumberReport norm_torus_class_number(const ExtensionInputs& in) {
  check_units(in);
  const FiniteGroup& G = in.group;
  const Integer knot = resolve_knot(in);
  const GlobalH1Term global = global_h1_term(G, TorusKind::norm);
  const Integer h0 = tate_cohomology(G, in.units, 0).group.order();
  const LocalTerms local = local_terms(in.places, in.S, G, TorusKind::norm);

  ClassNumberReport r;
  r.kind = TorusKind::norm;
  r.label = in.label;
  r.S = in.S;
  r.terms = {{"h_L_S", Rational(in.h_L_S)},
             {"h_K_S", Rational(in.h_K_S)},
             {"global_H1", Rational(global.value)},
             {"unit_cohomology", Rational(h0)},
             {"knot", Rational(knot)}};
  for (const LocalDetail& d : local.details)
    if (d.quantity == "local_degree") r.terms.push_back({"local_degree[" + d.place.to_string() + "]", Rational(d.closed_form)});
  r.terms.push_back({"local_product", Rational(local.product_S)});
  r.terms.push_back({"ramification_product", Rational(local.product_not_S)});
  r.tamagawa = Rational(global.value, knot);
  r.terms.push_back({"tamagawa", r.tamagawa});
  r.h = Rational(in.h_L_S * global.value * h0, in.h_K_S * knot * local.product_S * local.product_not_S);

  r.crosschecks.push_back({"global_H1", global.value, global.brute_force, true});
  if (G.is_cyclic())
    r.crosschecks.push_back({"unit_cohomology", h0, tate_cohomology_cyclic(G, in.units, 0).group.order(), true});
  for (const LocalDetail& d : local.details)
    r.crosschecks.push_back({d.quantity + "[" + d.place.to_string() + "]", d.closed_form, d.brute_force, G.is_abelian()});
  return r;
}

ClassNumberReport dual_torus_class_number(const ExtensionInputs& in) {
  check_units(in);
  const FiniteGroup& G = in.group;
  const GlobalH1Term global = global_h1_term(G, TorusKind::dual);
  const Integer h1 = tate_cohomology(G, in.units, 1).group.order();
  const LocalTerms local = local_terms(in.places, in.S, G, TorusKind::dual);

  ClassNumberReport r;
  r.kind = TorusKind::dual;
  r.label = in.label;
  r.S = in.S;
  r.terms = {{"h_L_S", Rational(in.h_L_S)},
             {"h_K_S", Rational(in.h_K_S)},
             {"global_H1", Rational(global.value)},
             {"unit_cohomology", Rational(h1)},
             {"ramification_product", Rational(local.product_not_S)}};
  r.tamagawa = Rational(G.order());
  r.terms.push_back({"tamagawa", r.tamagawa});
  r.h = Rational(in.h_L_S * h1, in.h_K_S * local.product_not_S);

  r.crosschecks.push_back({"global_H1", global.value, global.brute_force, true});
  if (G.is_cyclic())
    r.crosschecks.push_back({"unit_cohomology", h1, tate_cohomology_cyclic(G, in.units, 1).group.order(), true});
  for (const LocalDetail& d : local.details)
    r.crosschecks.push_back({d.quantity + "[" + d.place.to_string() + "]", d.closed_form, d.brute_force, G.is_abelian()});
  return r;
}

HerbrandCheck herbrand_identity_check(const ExtensionInputs& in) {
  if (!in.group.is_cyclic()) throw FormulaError("Herbrand identity requires a cyclic group");
  check_places(in.places, in.S, in.group);
  Integer product = 1;
  for (const PlaceDatum& pd : in.places)
    if (in_S(pd.place, in.S)) product *= pd.local_degree();
  return {herbrand_quotient(in.group, in.units), Rational(product, in.group.order())};
}

Rational q_quotient(const AbelianPresentation& source, const AbelianPresentation& target, const IntMatrix& alpha) {
  const IntMatrix& Rs = source.relations;
  const IntMatrix& Rt = target.relations;
  if (alpha.rows() != target.ambient_dimension() || alpha.cols() != source.ambient_dimension())
    throw FormulaError("map has the wrong shape for its presentations");
  const IntMatrix image_of_relations = alpha * Rs;
  const ColumnEchelon<Integer> span = column_echelon(Rt, false);
  for (Index j = 0; j < image_of_relations.cols(); ++j)
    if (!solve_echelon(span, IntVector(image_of_relations.col(j))))
      throw FormulaError("map is not well defined on the source presentation");
  const CokernelInfo cok = cokernel(hcat(alpha, Rt));
  if (cok.free_rank != 0) throw FormulaError("infinite kernel or cokernel");
  try {
    const IntMatrix ker = lattice_preimage(alpha, Rt);
    const Subquotient kernel(hcat(ker, Rs), Rs);
    return Rational(cok.torsion.order(), kernel.structure().order());
  } catch (const LatticeError&) {
    throw FormulaError("infinite kernel or cokernel");
  }
}

}  // namespace torus
