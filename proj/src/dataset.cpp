#include "torus/dataset.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#ifndef TORUS_DATA_DIR
#define TORUS_DATA_DIR "data"
#endif

namespace torus {

using Json = nlohmann::ordered_json;

namespace {

// Entry-level validation failure; the message names the violated invariant.
struct Invalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Invalid(std::string("missing field '") + key + "'");
  return j.at(key);
}

Integer read_integer(const Json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Invalid(what + " must be an integer");
}

Json write_integer(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

int read_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Invalid(what + " must be an integer");
  return j.get<int>();
}

IntMatrix read_matrix(const Json& j, Index n, const std::string& what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) throw Invalid(what + " must have " + std::to_string(n) + " rows");
  IntMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw Invalid(what + " must have " + std::to_string(n) + " columns");
    for (Index k = 0; k < n; ++k) m(i, k) = read_integer(row[static_cast<std::size_t>(k)], what);
  }
  return m;
}

Json write_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(write_integer(m(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

FiniteGroup read_group(const Json& j) {
  const Json& table = field(j, "table");
  if (!table.is_array()) throw Invalid("group table must be an array");
  std::vector<std::vector<int>> rows;
  for (const Json& row : table) {
    if (!row.is_array()) throw Invalid("group table rows must be arrays");
    std::vector<int> r;
    for (const Json& x : row) r.push_back(read_int(x, "group table entry"));
    rows.push_back(std::move(r));
  }
  try {
    return FiniteGroup::from_table(rows);
  } catch (const GroupError& e) {
    throw Invalid(std::string("group table invalid: ") + e.what());
  }
}

Subgroup read_subgroup(const FiniteGroup& G, const Json& j, const std::string& what) {
  if (!j.is_array()) throw Invalid(what + " must be a list of elements");
  std::vector<int> elements;
  for (const Json& x : j) {
    const int g = read_int(x, what + " element");
    if (g < 0 || g >= G.order()) throw Invalid(what + " element out of range");
    elements.push_back(g);
  }
  try {
    return Subgroup(G, std::move(elements));
  } catch (const GroupError& e) {
    throw Invalid(what + " is not a subgroup: " + e.what());
  }
}

Json write_subgroup(const Subgroup& H) { return Json(H.elements()); }

UnitData read_units(const FiniteGroup& G, const Json& j) {
  const Json& rank_json = field(j, "rank");
  const int rank = read_int(rank_json, "unit_module rank");
  if (rank < 0) throw Invalid("unit_module rank must be nonnegative");
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    for (const Json& t : j.at("torsion")) torsion.push_back(read_integer(t, "unit_module torsion"));
  }
  const Index n = rank + static_cast<Index>(torsion.size());
  std::vector<int> generators;
  for (const Json& g : field(j, "generators")) {
    const int x = read_int(g, "unit_module generator");
    if (x < 0 || x >= G.order()) throw Invalid("unit_module generator out of range");
    generators.push_back(x);
  }
  const Json& mats = field(j, "matrices");
  if (!mats.is_array() || mats.size() != generators.size())
    throw Invalid("unit_module needs one matrix per generator");
  std::vector<IntMatrix> matrices;
  for (const Json& m : mats) matrices.push_back(read_matrix(m, n, "unit_module matrix"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const Json& l : j.at("labels")) {
      if (!l.is_string()) throw Invalid("unit_module labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (static_cast<Index>(labels.size()) != n) throw Invalid("unit_module needs one label per coordinate");
  }
  try {
    GModule module = GModule::from_generators(G, rank, torsion, generators, matrices);
    return {std::move(module), std::move(generators), std::move(labels)};
  } catch (const ModuleError& e) {
    throw Invalid(std::string("unit_module is not a G-module: ") + e.what());
  }
}

Json write_units(const UnitData& u) {
  Json out;
  out["rank"] = u.module.rank();
  Json torsion = Json::array();
  for (const Integer& t : u.module.torsion()) torsion.push_back(write_integer(t));
  out["torsion"] = std::move(torsion);
  out["generators"] = u.generators;
  Json mats = Json::array();
  for (int g : u.generators) mats.push_back(write_matrix(u.module.action(g)));
  out["matrices"] = std::move(mats);
  if (!u.labels.empty()) out["labels"] = u.labels;
  return out;
}

PrimeSet read_prime_set(const Json& j) {
  if (!j.is_array()) throw Invalid("S must be a list of primes");
  std::vector<Integer> primes;
  for (const Json& p : j) primes.push_back(read_integer(p, "S entry"));
  try {
    return normalize_prime_set(std::move(primes));
  } catch (const std::invalid_argument& e) {
    throw Invalid(e.what());
  }
}

PlaceDatum read_place(const FiniteGroup& G, const Json& j) {
  const Json& name = field(j, "place");
  Place v;
  if (name.is_string() && name.get<std::string>() == "inf") {
    v = Place::infinite();
  } else {
    v = Place::finite(read_integer(name, "place"));
    if (!is_prime(v.prime)) throw Invalid("place " + v.prime.str() + " is not a prime");
  }
  const std::string where = "place " + v.to_string();
  PlaceDatum pd{v,
                read_int(field(j, "e"), where + " e"),
                read_int(field(j, "f"), where + " f"),
                read_int(field(j, "g"), where + " g"),
                read_subgroup(G, field(j, "decomposition"), where + " decomposition"),
                read_subgroup(G, field(j, "inertia"), where + " inertia")};
  if (pd.e < 1 || pd.f < 1 || pd.g < 1) throw Invalid(where + ": e, f, g must be positive");
  if (pd.e * pd.f * pd.g != G.order()) throw Invalid(where + ": e*f*g differs from |G|");
  if (pd.inertia.order() != pd.e) throw Invalid(where + ": |inertia| differs from e");
  if (pd.decomposition.order() != pd.e * pd.f) throw Invalid(where + ": |decomposition| differs from e*f");
  if (!pd.inertia.is_subgroup_of(pd.decomposition)) throw Invalid(where + ": inertia not contained in decomposition");
  if (!Subgroup(pd.decomposition.as_group(), [&] {
         std::vector<int> local;
         for (int g : pd.inertia.elements()) local.push_back(pd.decomposition.local_index(g));
         return local;
       }()).is_normal())
    throw Invalid(where + ": inertia not normal in decomposition");
  return pd;
}

Json write_place(const PlaceDatum& pd) {
  Json out;
  out["place"] = pd.place.is_infinite() ? Json("inf") : write_integer(pd.place.prime);
  out["e"] = pd.e;
  out["f"] = pd.f;
  out["g"] = pd.g;
  out["decomposition"] = write_subgroup(pd.decomposition);
  out["inertia"] = write_subgroup(pd.inertia);
  return out;
}

bool has_place(const std::vector<PlaceDatum>& places, const Integer& p) {
  for (const PlaceDatum& pd : places)
    if (pd.place.prime == p) return true;
  return false;
}

ExtensionDatum read_entry(const Json& j) {
  ExtensionDatum E;
  const Json& label = field(j, "label");
  if (!label.is_string() || label.get<std::string>().empty()) throw Invalid("label must be a nonempty string");
  E.label = label.get<std::string>();
  if (j.contains("base_field")) {
    if (!j.at("base_field").is_string()) throw Invalid("base_field must be a string");
    E.base_field = j.at("base_field").get<std::string>();
  }
  if (E.base_field != "Q") throw Invalid("base_field must be \"Q\"");
  E.group = read_group(field(j, "group"));
  E.class_number_L = read_integer(field(j, "class_number_L"), "class_number_L");
  E.class_number_K = read_integer(field(j, "class_number_K"), "class_number_K");
  if (E.class_number_L < 1) throw Invalid("class_number_L must be positive");
  if (E.class_number_K != 1) throw Invalid("class_number_K must be 1 for base field Q");
  E.units = read_units(E.group, field(j, "unit_module"));
  const Json& places = field(j, "places");
  if (!places.is_array()) throw Invalid("places must be a list");
  for (const Json& p : places) {
    PlaceDatum pd = read_place(E.group, p);
    for (const PlaceDatum& other : E.places)
      if (other.place == pd.place) throw Invalid("place " + pd.place.to_string() + " listed twice");
    E.places.push_back(std::move(pd));
  }
  std::sort(E.places.begin(), E.places.end(),
            [](const PlaceDatum& a, const PlaceDatum& b) { return a.place.prime < b.place.prime; });
  if (E.places.empty() || !E.places.front().place.is_infinite()) throw Invalid("the infinite place must be listed");
  if (j.contains("knot_number") && !j.at("knot_number").is_null()) {
    const Integer knot = read_integer(j.at("knot_number"), "knot_number");
    if (knot < 1) throw Invalid("knot_number must be positive");
    if (E.group.is_cyclic() && knot != 1) throw Invalid("knot_number must be 1 for a cyclic group");
    E.knot_number = knot;
  }
  if (j.contains("s_class_number_overrides")) {
    for (const Json& o : j.at("s_class_number_overrides")) {
      SClassOverride ov{read_prime_set(field(o, "S")), read_integer(field(o, "h_K_S"), "h_K_S"),
                        read_integer(field(o, "h_L_S"), "h_L_S"), read_units(E.group, field(o, "unit_module"))};
      if (ov.h_K_S < 1 || ov.h_L_S < 1) throw Invalid("override class numbers must be positive");
      for (const Integer& p : ov.S)
        if (!has_place(E.places, p)) throw Invalid("override prime " + p.str() + " has no place data");
      for (const SClassOverride& other : E.overrides)
        if (other.S == ov.S) throw Invalid("override for S = " + to_string(ov.S) + " listed twice");
      E.overrides.push_back(std::move(ov));
    }
  }
  return E;
}

Json write_entry(const ExtensionDatum& E) {
  Json out;
  out["label"] = E.label;
  out["base_field"] = E.base_field;
  out["group"] = Json{{"table", E.group.table()}};
  out["class_number_L"] = write_integer(E.class_number_L);
  out["class_number_K"] = write_integer(E.class_number_K);
  out["unit_module"] = write_units(E.units);
  Json places = Json::array();
  for (const PlaceDatum& pd : E.places) places.push_back(write_place(pd));
  out["places"] = std::move(places);
  if (E.knot_number) out["knot_number"] = write_integer(*E.knot_number);
  if (!E.overrides.empty()) {
    Json overrides = Json::array();
    for (const SClassOverride& o : E.overrides) {
      Json S = Json::array();
      for (const Integer& p : o.S) S.push_back(write_integer(p));
      overrides.push_back(Json{{"S", std::move(S)},
                               {"h_K_S", write_integer(o.h_K_S)},
                               {"h_L_S", write_integer(o.h_L_S)},
                               {"unit_module", write_units(o.units)}});
    }
    out["s_class_number_overrides"] = std::move(overrides);
  }
  return out;
}

}  // namespace

const ExtensionDatum* Dataset::find(const std::string& label) const {
  for (const ExtensionDatum& E : entries)
    if (E.label == label) return &E;
  return nullptr;
}

Dataset parse_dataset(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DatasetError(std::string("dataset parse error: ") + e.what());
  }
  const Json* entries = &doc;
  if (doc.is_object()) {
    if (!doc.contains("schema") || doc.at("schema") != kDatasetSchema)
      throw DatasetError(std::string("dataset schema must be \"") + kDatasetSchema + "\"");
    if (!doc.contains("entries") || !doc.at("entries").is_array()) throw DatasetError("dataset needs an entries list");
    entries = &doc.at("entries");
  } else if (!doc.is_array()) {
    throw DatasetError("dataset must be an object or a list of entries");
  }
  Dataset out;
  std::set<std::string> labels;
  std::size_t k = 0;
  for (const Json& j : *entries) {
    std::string name = "#" + std::to_string(k++);
    if (j.is_object() && j.contains("label") && j.at("label").is_string()) name = j.at("label").get<std::string>();
    try {
      ExtensionDatum E = read_entry(j);
      if (!labels.insert(E.label).second) throw Invalid("duplicate label");
      out.entries.push_back(std::move(E));
    } catch (const Invalid& e) {
      out.errors.push_back({name, e.what()});
    } catch (const Json::exception& e) {
      out.errors.push_back({name, std::string("malformed entry: ") + e.what()});
    }
  }
  return out;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DatasetError("cannot open dataset " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_dataset(text.str());
}

std::string serialize_dataset(const std::vector<ExtensionDatum>& entries) {
  Json doc;
  doc["schema"] = kDatasetSchema;
  Json list = Json::array();
  for (const ExtensionDatum& E : entries) list.push_back(write_entry(E));
  doc["entries"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string bundled_dataset_path() { return std::string(TORUS_DATA_DIR) + "/extensions.json"; }

ExtensionInputs datum_to_inputs(const ExtensionDatum& E, const PrimeSet& S, const std::optional<Integer>& knot) {
  for (const Integer& p : S)
    if (!has_place(E.places, p)) throw DatasetError("place " + p.str() + " of S is missing from entry " + E.label);
  const UnitData* units = &E.units;
  Integer h_L_S = E.class_number_L, h_K_S = E.class_number_K;
  if (!S.empty()) {
    const auto it = std::find_if(E.overrides.begin(), E.overrides.end(),
                                 [&](const SClassOverride& o) { return o.S == S; });
    if (it == E.overrides.end())
      throw DatasetError("entry " + E.label + " has no S-unit data for S = " + to_string(S));
    units = &it->units;
    h_L_S = it->h_L_S;
    h_K_S = it->h_K_S;
  }
  std::optional<Integer> k = knot ? knot : E.knot_number;
  if (!k) {
    if (!E.group.is_cyclic()) throw DatasetError("knot number required for non-cyclic group");
    k = Integer(1);
  }
  return {E.label, E.group, units->module, E.places, S, h_L_S, h_K_S, k};
}

}  // namespace torus
