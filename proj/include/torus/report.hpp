#pragma once

#include "torus/formulas.hpp"

#include <string>

namespace torus {

inline constexpr const char* kReportSchema = "torus-report/1";

/// "h_{T,S}" or "h_{T',S}".
std::string result_symbol(TorusKind kind);

/// Aligned plain-text table of terms and crosschecks, ending with the result line.
std::string render_text(const ClassNumberReport& r);

/// Rationals as {"num": .., "den": ..}; big values are emitted as strings.
std::string render_json(const ClassNumberReport& r);

}  // namespace torus
