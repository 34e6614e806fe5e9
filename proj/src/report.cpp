#include "torus/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace torus {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(x));
  return Json(x.str());
}

Json rational_json(const Rational& q) {
  return Json{{"num", integer_json(numerator(q))}, {"den", integer_json(denominator(q))}};
}

std::size_t name_width(const ClassNumberReport& r) {
  std::size_t w = 4;
  for (const NamedValue& t : r.terms) w = std::max(w, t.name.size());
  for (const Crosscheck& c : r.crosschecks) w = std::max(w, c.term.size());
  return w + 2;
}

}  // namespace

std::string result_symbol(TorusKind kind) { return kind == TorusKind::norm ? "h_{T,S}" : "h_{T',S}"; }

std::string render_text(const ClassNumberReport& r) {
  const std::size_t w = name_width(r);
  std::ostringstream out;
  out << to_string(r.kind) << " torus  " << r.label << "  S = " << to_string(r.S) << "\n";
  out << "  " << std::left << std::setw(static_cast<int>(w)) << "term" << "value\n";
  for (const NamedValue& t : r.terms)
    out << "  " << std::setw(static_cast<int>(w)) << t.name << to_string(t.value) << "\n";
  if (!r.crosschecks.empty()) {
    out << "crosschecks (closed form / brute force)\n";
    for (const Crosscheck& c : r.crosschecks) {
      out << "  " << std::setw(static_cast<int>(w)) << c.term << c.closed_form << " / " << c.brute_force << "  "
          << (c.agree() ? "agree" : (c.enforced ? "DISAGREE" : "differ (reported only)")) << "\n";
    }
  }
  if (!r.is_integral()) out << "warning: result is not a positive integer; input data is inconsistent\n";
  out << result_symbol(r.kind) << " = " << to_string(r.h) << "\n";
  return out.str();
}

std::string render_json(const ClassNumberReport& r) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["torus_kind"] = to_string(r.kind);
  doc["extension_label"] = r.label;
  Json S = Json::array({"inf"});
  for (const Integer& p : r.S) S.push_back(integer_json(p));
  doc["S"] = std::move(S);
  Json terms = Json::object();
  for (const NamedValue& t : r.terms) terms[t.name] = rational_json(t.value);
  doc["terms"] = std::move(terms);
  doc["h_result"] = rational_json(r.h);
  doc["is_integral"] = r.is_integral();
  Json checks = Json::array();
  for (const Crosscheck& c : r.crosschecks) {
    checks.push_back(Json{{"term", c.term},
                          {"closed_form", integer_json(c.closed_form)},
                          {"brute_force", integer_json(c.brute_force)},
                          {"agree", c.agree()},
                          {"enforced", c.enforced}});
  }
  doc["crosschecks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace torus
