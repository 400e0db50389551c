#include "dirichlet/serialization.hpp"

#include <json.hpp>

#include "dirichlet/classify.hpp"
#include "dirichlet/expr.hpp"

namespace dirichlet {

std::string function_to_json(const DirichletFunction& u) {
    if (!u.derivative_dsl)
        throw Error("function_to_json: the derivative has no DSL representation");
    auto v = jsonio::Value::object();
    v.set("anchor", jsonio::Value::number(u.anchor));
    v.set("anchor_value", jsonio::Value::number(u.anchor_value));
    v.set("derivative", jsonio::Value::string(*u.derivative_dsl));
    v.set("label", jsonio::Value::string(u.label));
    return v.dump();
}

DirichletFunction function_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid DirichletFunction JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("anchor") || !j.contains("anchor_value") ||
        !j.contains("derivative"))
        throw Error("DirichletFunction JSON must have anchor, anchor_value, derivative");

    DirichletFunction u;
    u.anchor = j.at("anchor").get<double>();
    u.anchor_value = j.at("anchor_value").get<double>();
    if (!(u.anchor > 0.0))
        throw Error("DirichletFunction anchor must lie in (0, infinity)");
    const std::string dsl = j.at("derivative").get<std::string>();
    expr::Expression e = expr::Expression::parse(dsl);
    u.derivative = [e](double t) { return e(t); };
    u.derivative_dsl = dsl;
    if (j.contains("label")) u.label = j.at("label").get<std::string>();
    return u;
}

jsonio::Value quad_outcome_value(const quad::QuadOutcome& outcome) {
    auto v = jsonio::Value::object();
    v.set("value", jsonio::Value::number(outcome.value));
    v.set("error_estimate", jsonio::Value::number(outcome.error_estimate));
    v.set("verdict", jsonio::Value::string(to_string(outcome.verdict)));
    v.set("evaluations", jsonio::Value::integer(outcome.evaluations));
    return v;
}

jsonio::Value condition_report_value(const ConditionReport& report) {
    auto v = jsonio::Value::object();
    v.set("case", jsonio::Value::string(to_string(report.applicable_case)));
    v.set("bounded", jsonio::Value::string(to_string(report.bounded)));
    auto quantities = jsonio::Value::array();
    for (const auto& q : report.quantities) {
        auto item = jsonio::Value::object();
        item.set("name", jsonio::Value::string(q.name));
        item.set("value", jsonio::Value::number(q.value));
        item.set("provenance", quad_outcome_value(q.provenance));
        quantities.push(std::move(item));
    }
    v.set("quantities", std::move(quantities));
    v.set("note", jsonio::Value::string(report.note));
    return v;
}

std::string condition_report_to_json(const ConditionReport& report, int indent) {
    return condition_report_value(report).dump(indent);
}

}  // namespace dirichlet
