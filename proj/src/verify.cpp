#include "torus/verify.hpp"

namespace torus {

void IdentityTally::record(bool pass, const std::string& what) {
  ++total;
  if (pass)
    ++passed;
  else
    failures.push_back(what);
}

std::vector<Integer> quadratic_corpus(const Integer& disc_bound, const std::optional<Integer>& d_min,
                                      const std::optional<Integer>& d_max) {
  std::vector<Integer> out;
  for (Integer d = -disc_bound; d <= disc_bound; ++d) {
    if (d == 0 || d == 1 || !is_squarefree(d)) continue;
    if ((d_min && d < *d_min) || (d_max && d > *d_max)) continue;
    const Integer disc = floor_mod(d, 4) == 1 ? d : 4 * d;
    if (abs(disc) <= disc_bound) out.push_back(d);
  }
  return out;
}

std::vector<std::pair<std::string, FiniteGroup>> test_groups() {
  return {{"Z/2", FiniteGroup::cyclic(2)},
          {"Z/3", FiniteGroup::cyclic(3)},
          {"Z/4", FiniteGroup::cyclic(4)},
          {"Z/2xZ/2", FiniteGroup::klein_four()},
          {"S3", FiniteGroup::symmetric3()}};
}

namespace {

std::string describe(const QuadraticField& F, const PrimeSet& S) { return F.name() + " S=" + to_string(S); }

bool report_ok(const ClassNumberReport& r) { return r.is_integral() && r.crosschecks_agree(); }

// One tally entry per field; every S = {inf} and {inf, p} must pass.
void check_field(const QuadraticField& F, const std::vector<Integer>& primes, IdentityTally& herbrand,
                 IdentityTally& cyclic) {
  std::vector<PrimeSet> sets{{}};
  for (const Integer& p : primes) sets.push_back({p});
  std::string herbrand_bad, cyclic_bad;
  const auto note = [](std::string& acc, const std::string& msg) { acc += (acc.empty() ? "" : "; ") + msg; };
  for (const PrimeSet& S : sets) {
    const std::string what = describe(F, S);
    try {
      const ExtensionInputs in = quadratic_inputs(F, S);
      if (!herbrand_identity_check(in).agree()) note(herbrand_bad, what);
      const ClassNumberReport n = norm_torus_class_number(in);
      const ClassNumberReport d = dual_torus_class_number(in);
      if (!(report_ok(n) && report_ok(d) && n.h == d.h)) note(cyclic_bad, what);
    } catch (const std::exception& e) {
      note(herbrand_bad, what + ": " + e.what());
      note(cyclic_bad, what + ": " + e.what());
    }
  }
  herbrand.record(herbrand_bad.empty(), herbrand_bad);
  cyclic.record(cyclic_bad.empty(), cyclic_bad);
}

void check_groups(IdentityTally& global, IdentityTally& local) {
  for (const auto& [name, G] : test_groups()) {
    for (TorusKind kind : {TorusKind::norm, TorusKind::dual}) {
      const GlobalH1Term t = global_h1_term(G, kind);
      global.record(t.value == t.brute_force, name + " " + to_string(kind));
    }
    if (!G.is_abelian()) continue;
    const Abelianization ab = abelianization(G);
    for (const Subgroup& D : all_subgroups(G)) {
      for (const Subgroup& I : all_subgroups(G)) {
        if (!I.is_subgroup_of(D)) continue;
        PlaceDatum pd{Place::finite(2), I.order(), D.order() / I.order(), G.order() / D.order(), D, I};
        for (TorusKind kind : {TorusKind::norm, TorusKind::dual}) {
          const LocalTerms lt = local_terms({PlaceDatum{Place::infinite(), 1, 1, G.order(), trivial_subgroup(G),
                                                        trivial_subgroup(G)},
                                             pd},
                                            {}, G, kind);
          bool pass = true;
          int finite_details = 0;
          for (const LocalDetail& detail : lt.details) {
            pass = pass && detail.closed_form == detail.brute_force;
            if (!detail.place.is_infinite()) ++finite_details;
          }
          // an unramified place outside S contributes nothing
          pass = pass && finite_details == (pd.ramified() ? 1 : 0);
          local.record(pass, name + " |D|=" + std::to_string(D.order()) + " |I|=" + std::to_string(I.order()) + " " +
                                 to_string(kind));
        }
      }
    }
  }
}

void check_dataset(const std::string& path, IdentityTally& tally) {
  Dataset data;
  try {
    data = load_dataset(path);
  } catch (const DatasetError& e) {
    tally.record(false, e.what());
    return;
  }
  for (const DatasetEntryError& err : data.errors) tally.record(false, err.label + ": " + err.message);
  for (const ExtensionDatum& E : data.entries) {
    std::vector<PrimeSet> sets{{}};
    for (const SClassOverride& o : E.overrides) sets.push_back(o.S);
    for (const PrimeSet& S : sets) {
      const std::string what = E.label + " S=" + to_string(S);
      try {
        const ExtensionInputs in = datum_to_inputs(E, S);
        const ClassNumberReport n = norm_torus_class_number(in);
        const ClassNumberReport d = dual_torus_class_number(in);
        bool pass = report_ok(n) && report_ok(d);
        if (E.group.is_cyclic()) pass = pass && n.h == d.h && herbrand_identity_check(in).agree();
        tally.record(pass, what);
      } catch (const std::exception& e) {
        tally.record(false, what + ": " + e.what());
      }
    }
  }
}

}  // namespace

std::vector<IdentityTally> run_verification(const VerifyOptions& options) {
  IdentityTally herbrand{"herbrand-identity", 0, 0, {}};
  IdentityTally cyclic{"cyclic-consistency", 0, 0, {}};
  IdentityTally global{"global-H1", 0, 0, {}};
  IdentityTally local{"local-term", 0, 0, {}};
  std::vector<Integer> primes;
  for (Integer p = 2; p <= options.prime_bound; ++p)
    if (is_prime(p)) primes.push_back(p);
  for (const Integer& d : quadratic_corpus(options.disc_bound, options.d_min, options.d_max)) {
    const QuadraticField F(d, options.disc_bound);
    check_field(F, primes, herbrand, cyclic);
  }
  check_groups(global, local);
  std::vector<IdentityTally> out{herbrand, cyclic, global, local};
  if (options.dataset_path) {
    IdentityTally data{"dataset", 0, 0, {}};
    check_dataset(*options.dataset_path, data);
    out.push_back(data);
  }
  return out;
}

}  // namespace torus
