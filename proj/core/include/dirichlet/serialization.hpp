#pragma once

#include <string>

#include "dirichlet/hardy.hpp"
#include "dirichlet/jsonio.hpp"
#include "dirichlet/space.hpp"

namespace dirichlet {

/// DirichletFunction wire format:
///   {"anchor": <number>, "anchor_value": <number>,
///    "derivative": <DSL string>, "label": <string>}
/// Writing requires the derivative to carry a DSL representation.
std::string function_to_json(const DirichletFunction& u);
DirichletFunction function_from_json(const std::string& json_text);

jsonio::Value quad_outcome_value(const quad::QuadOutcome& outcome);
jsonio::Value condition_report_value(const ConditionReport& report);

/// ConditionReport serialized with every named quantity and its quadrature
/// provenance.
std::string condition_report_to_json(const ConditionReport& report, int indent = 2);

}  // namespace dirichlet
