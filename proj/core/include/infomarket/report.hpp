#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "infomarket/complement.hpp"
#include "infomarket/mechanism.hpp"
#include "infomarket/rational.hpp"
#include "infomarket/value.hpp"

namespace infomarket {

/// Reports are assembled as ordered JSON documents and rendered to one of
/// three formats. Field order is fixed at construction, so identical inputs
/// produce byte-identical output in every format.
using Json = nlohmann::ordered_json;

enum class Format { text, csv, json_like };

/// Accepts "text", "csv", "json-like".
Format parse_format(std::string_view name);

/// Encodes a rational as {"exact": "p/q", "decimal": "..."}. The exact field
/// round-trips through Rational::parse without loss; the decimal one carries
/// up to 20 significant digits and marks truncation with "...".
Json rational_json(const Rational& value);

/// True for objects produced by rational_json.
bool is_rational_json(const Json& value);

Json signal_json(const Signal& sig, const DecisionProblem& problem);
Json value_report_json(const ValueReport& report);
Json complement_json(const ComplementResult& result, const DecisionProblem& problem);
Json audit_json(const AuditReport& report);

std::string render_report(const Json& document, Format format);

}  // namespace infomarket
