// dirichlet-lab: weighted Dirichlet space analysis on the half-line.
//
// Subcommands: classify, omega, trace, minimize, approx, hardy, morrey,
// interp. Reports are JSON (or CSV for the plot-data commands) on stdout
// with fixed field order and 17-significant-digit floats, so identical
// configurations produce byte-identical output. Exit status: 0 for a
// determinate verdict, 2 when a verdict is Unknown/Inconclusive, 1 on error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dirichlet/approx.hpp"
#include "dirichlet/classify.hpp"
#include "dirichlet/hardy.hpp"
#include "dirichlet/jsonio.hpp"
#include "dirichlet/serialization.hpp"
#include "dirichlet/space.hpp"
#include "dirichlet/varmin.hpp"
#include "dirichlet/version.hpp"
#include "dirichlet/weights.hpp"

namespace {

using dirichlet::jsonio::Value;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndetermined = 2;

void emit_error(const std::string& code, const std::string& message) {
    auto err = Value::object();
    err.set("schema", Value::string(dirichlet::kReportSchema));
    auto detail = Value::object();
    detail.set("code", Value::string(code));
    detail.set("message", Value::string(message));
    err.set("error", std::move(detail));
    std::cout << err.dump() << "\n";
}

Value report_shell(const std::string& command, Value config) {
    auto report = Value::object();
    report.set("schema", Value::string(dirichlet::kReportSchema));
    report.set("version", Value::string(dirichlet::kVersion));
    report.set("command", Value::string(command));
    report.set("config", std::move(config));
    return report;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

dirichlet::DirichletFunction load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dirichlet::Error("cannot open function file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return dirichlet::function_from_json(buffer.str());
}

Value membership_value(dirichlet::Membership m) {
    return Value::string(dirichlet::to_string(m));
}

Value bp_verdict_value(const dirichlet::BpVerdict& v) {
    auto out = Value::object();
    out.set("member", membership_value(v.member));
    out.set("integral", dirichlet::quad_outcome_value(v.integral));
    return out;
}

// ---------------------------------------------------------------------------
// Per-command option blocks and runners.
// ---------------------------------------------------------------------------

struct ClassifyOptions {
    std::string weight;
    double p = 2.0;
    double tol = 1e-8;
    std::string output = "json";
};

int run_classify(const ClassifyOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    auto report = dirichlet::density_report(w, opt.p, opt.tol);

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("p", Value::number(opt.p));
    config.set("tol", Value::number(opt.tol));
    config.set("output", Value::string(opt.output));

    auto result = Value::object();
    result.set("regime", Value::string(dirichlet::to_string(report.regime.tag)));
    result.set("d0", Value::string(dirichlet::to_string(report.d0)));
    result.set("trace_zero_wellposed", membership_value(report.trace_zero_wellposed));
    result.set("trace_infinity_wellposed",
               membership_value(report.trace_infinity_wellposed));
    result.set("notes", Value::string(report.notes));

    auto provenance = Value::object();
    provenance.set("bp_zero", bp_verdict_value(report.regime.zero));
    provenance.set("bp_infinity", bp_verdict_value(report.regime.infinity));

    auto out = report_shell("classify", std::move(config));
    out.set("result", std::move(result));
    out.set("provenance", std::move(provenance));
    std::cout << out.dump(2) << "\n";
    return report.regime.tag == dirichlet::RegimeTag::Unknown ? kExitUndetermined
                                                              : kExitOk;
}

struct OmegaOptions {
    std::string weight;
    double p = 2.0;
    std::string grid = "0.125,0.25,0.5,1,2,4,8";
    std::string output = "json";
};

int run_omega(const OmegaOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    const auto points = parse_double_list(opt.grid);
    const bool has_zero =
        dirichlet::bp_zero(w, opt.p).member == dirichlet::Membership::Yes;
    const bool has_inf =
        dirichlet::bp_infinity(w, opt.p).member == dirichlet::Membership::Yes;

    if (opt.output == "csv") {
        std::cout << "t,omega0,omega_inf\n";
        for (double t : points) {
            std::cout << dirichlet::jsonio::format_double(t) << ",";
            if (has_zero)
                std::cout << dirichlet::jsonio::format_double(
                    dirichlet::omega0(w, opt.p, t));
            std::cout << ",";
            if (has_inf)
                std::cout << dirichlet::jsonio::format_double(
                    dirichlet::omega_inf(w, opt.p, t));
            std::cout << "\n";
        }
        return kExitOk;
    }

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("p", Value::number(opt.p));
    config.set("grid", Value::string(opt.grid));
    config.set("output", Value::string(opt.output));

    auto sigma = [&](double t) { return dirichlet::dual_density(w, opt.p, t); };
    auto rows = Value::array();
    for (double t : points) {
        auto row = Value::object();
        row.set("t", Value::number(t));
        row.set("omega0", has_zero ? Value::number(dirichlet::omega0(w, opt.p, t))
                                   : Value::null());
        row.set("omega_inf", has_inf ? Value::number(dirichlet::omega_inf(w, opt.p, t))
                                     : Value::null());
        if (has_zero)
            row.set("sigma_mass_from_zero",
                    dirichlet::quad_outcome_value(
                        dirichlet::quad::improper_to_zero(sigma, t, 1e-10)));
        if (has_inf)
            row.set("sigma_mass_to_infinity",
                    dirichlet::quad_outcome_value(
                        dirichlet::quad::improper_to_infinity(sigma, t, 1e-10)));
        rows.push(std::move(row));
    }
    auto result = Value::object();
    result.set("bp_zero", membership_value(has_zero ? dirichlet::Membership::Yes
                                                    : dirichlet::Membership::No));
    result.set("bp_infinity", membership_value(has_inf ? dirichlet::Membership::Yes
                                                       : dirichlet::Membership::No));
    result.set("table", std::move(rows));

    auto out = report_shell("omega", std::move(config));
    out.set("result", std::move(result));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct TraceOptions {
    std::string weight;
    std::string function;
    double p = 2.0;
    double tol = 1e-8;
    std::string side = "zero";
    std::string output = "json";
};

int run_trace(const TraceOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    auto u = load_function(opt.function);
    const bool at_zero = opt.side == "zero";
    auto tr = at_zero ? dirichlet::trace_zero(u, w, opt.p, opt.tol)
                      : dirichlet::trace_infinity(u, w, opt.p, opt.tol);

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("function", Value::string(opt.function));
    config.set("p", Value::number(opt.p));
    config.set("tol", Value::number(opt.tol));
    config.set("side", Value::string(opt.side));
    config.set("output", Value::string(opt.output));

    auto result = Value::object();
    result.set("value", Value::number(tr.value));
    result.set("certified_error", Value::number(tr.certified_error));
    result.set("probe", Value::number(tr.probe));
    result.set("converged", Value::boolean(tr.converged));
    result.set("residual_sup_diagnostic",
               Value::number(dirichlet::residual_sup(
                   u, w, opt.p,
                   at_zero ? dirichlet::Side::Zero : dirichlet::Side::Infinity)));

    // Provenance: the two certified factors of the bound at the final probe.
    auto sigma = [&](double t) { return dirichlet::dual_density(w, opt.p, t); };
    auto energy = [&](double t) {
        const double d = u.derivative(t);
        return std::pow(std::fabs(d), opt.p) * w(t);
    };
    auto sigma_mass = at_zero
                          ? dirichlet::quad::improper_to_zero(sigma, tr.probe, 1e-10)
                          : dirichlet::quad::improper_to_infinity(sigma, tr.probe, 1e-10);
    auto tail_energy =
        at_zero ? dirichlet::quad::improper_to_zero(energy, tr.probe, 1e-10)
                : dirichlet::quad::improper_to_infinity(energy, tr.probe, 1e-10);
    auto provenance = Value::object();
    provenance.set("sigma_mass_at_probe", dirichlet::quad_outcome_value(sigma_mass));
    provenance.set("tail_energy_at_probe", dirichlet::quad_outcome_value(tail_energy));

    auto out = report_shell("trace", std::move(config));
    out.set("result", std::move(result));
    out.set("provenance", std::move(provenance));
    std::cout << out.dump(2) << "\n";
    return tr.converged ? kExitOk : kExitUndetermined;
}

struct MinimizeOptions {
    std::string weight;
    double p = 2.0;
    double k = 1.0;
    double K = 2.0;
    double a = 1.0;
    std::string side = "left";
    int n = 256;
    std::string output = "json";
};

int run_minimize(const MinimizeOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    dirichlet::MinimizerProblem prob{
        opt.k,
        opt.K,
        opt.a,
        opt.side == "left" ? dirichlet::ConstraintSide::LeftConstraint
                           : dirichlet::ConstraintSide::RightConstraint,
        opt.p,
        w};
    auto sol = dirichlet::closed_form_minimizer(prob);

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("p", Value::number(opt.p));
    config.set("k", Value::number(opt.k));
    config.set("K", Value::number(opt.K));
    config.set("a", Value::number(opt.a));
    config.set("side", Value::string(opt.side));
    config.set("n", Value::integer(opt.n));
    config.set("output", Value::string(opt.output));

    auto result = Value::object();
    result.set("energy", Value::number(sol.minimal_energy));
    result.set("normalizer", Value::number(sol.normalizer));
    result.set("phi_at_k", Value::number(sol.evaluate(opt.k)));
    result.set("phi_at_K", Value::number(sol.evaluate(opt.K)));
    if (opt.n >= 3) {
        auto oracle = dirichlet::discrete_minimizer(prob, opt.n);
        result.set("oracle_energy", Value::number(oracle.energy));
        result.set("oracle_iterations", Value::integer(oracle.iterations));
        result.set("oracle_excess", Value::number(oracle.energy - sol.minimal_energy));
    }

    auto provenance = Value::object();
    auto normalizer_quad = dirichlet::quad::integrate(
        [&](double t) { return dirichlet::dual_density(w, opt.p, t); }, opt.k, opt.K,
        1e-11);
    provenance.set("normalizer_integral",
                   dirichlet::quad_outcome_value(normalizer_quad));

    auto out = report_shell("minimize", std::move(config));
    out.set("result", std::move(result));
    out.set("provenance", std::move(provenance));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct ApproxOptions {
    std::string weight;
    std::string function;
    double p = 2.0;
    std::string builder = "caloric-inf";
    std::string grid = "1,2,3,4,5,6,7,8";
    double cut = 1.0;
    double tol = 1e-8;
    std::string output = "csv";
};

int run_approx(const ApproxOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    auto u = load_function(opt.function);
    dirichlet::ApproxBuilder builder;
    if (opt.builder == "truncate")
        builder = dirichlet::ApproxBuilder::Truncate;
    else if (opt.builder == "caloric-inf")
        builder = dirichlet::ApproxBuilder::CaloricToInfinity;
    else if (opt.builder == "caloric-zero")
        builder = dirichlet::ApproxBuilder::CaloricToZero;
    else if (opt.builder == "zero-mean")
        builder = dirichlet::ApproxBuilder::ZeroMean;
    else
        throw dirichlet::Error("unknown builder '" + opt.builder + "'");

    dirichlet::DiagnosticOptions diag_opts{opt.tol, opt.cut};
    auto diag = dirichlet::convergence_diagnostic(u, builder, w, opt.p,
                                                  parse_int_list(opt.grid), diag_opts);

    if (opt.output == "csv") {
        std::cout << "n,s_n,t_n,gap,predicted_gap,verdict\n";
        for (const auto& step : diag.steps) {
            std::cout << step.index << ","
                      << dirichlet::jsonio::format_double(step.support_lo) << ","
                      << dirichlet::jsonio::format_double(step.support_hi) << ","
                      << dirichlet::jsonio::format_double(step.gap) << ",";
            if (step.predicted_gap)
                std::cout << dirichlet::jsonio::format_double(*step.predicted_gap);
            std::cout << "," << dirichlet::to_string(diag.verdict) << "\n";
        }
        return diag.verdict == dirichlet::ConvergenceVerdict::Undetermined
                   ? kExitUndetermined
                   : kExitOk;
    }

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("function", Value::string(opt.function));
    config.set("p", Value::number(opt.p));
    config.set("builder", Value::string(opt.builder));
    config.set("grid", Value::string(opt.grid));
    config.set("cut", Value::number(opt.cut));
    config.set("tol", Value::number(opt.tol));
    config.set("output", Value::string(opt.output));

    auto steps = Value::array();
    for (const auto& step : diag.steps) {
        auto row = Value::object();
        row.set("n", Value::integer(step.index));
        row.set("s_n", Value::number(step.support_lo));
        row.set("t_n", Value::number(step.support_hi));
        row.set("gap", Value::number(step.gap));
        row.set("predicted_gap",
                step.predicted_gap ? Value::number(*step.predicted_gap) : Value::null());
        steps.push(std::move(row));
    }
    auto result = Value::object();
    result.set("verdict", Value::string(dirichlet::to_string(diag.verdict)));
    result.set("steps", std::move(steps));

    auto out = report_shell("approx", std::move(config));
    out.set("result", std::move(result));
    std::cout << out.dump(2) << "\n";
    return diag.verdict == dirichlet::ConvergenceVerdict::Undetermined
               ? kExitUndetermined
               : kExitOk;
}

struct HardyOptions {
    std::string weight;
    std::string target;
    double p = 2.0;
    double q = 2.0;
    std::string side = "hardy";
    bool estimate = false;
    int trials = 40;
    std::uint64_t seed = 42;
    std::string output = "json";
};

int run_hardy(const HardyOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    auto h = dirichlet::parse_weight(opt.target);
    const auto side = opt.side == "hardy" ? dirichlet::HardyOperator::Hardy
                                          : dirichlet::HardyOperator::Conjugate;
    auto report = side == dirichlet::HardyOperator::Hardy
                      ? dirichlet::condition_C(w, h, opt.p, opt.q)
                      : dirichlet::condition_Cstar(w, h, opt.p, opt.q);

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("h", Value::string(opt.target));
    config.set("p", Value::number(opt.p));
    config.set("q", Value::number(opt.q));
    config.set("side", Value::string(opt.side));
    config.set("estimate", Value::boolean(opt.estimate));
    config.set("trials", Value::integer(opt.trials));
    config.set("seed", Value::integer(static_cast<long long>(opt.seed)));
    config.set("output", Value::string(opt.output));

    auto result = Value::object();
    result.set("condition", dirichlet::condition_report_value(report));
    if (opt.estimate && report.bounded == dirichlet::Membership::Yes) {
        result.set("constant_estimate",
                   Value::number(dirichlet::estimate_best_constant(
                       w, h, opt.p, opt.q, side, opt.trials, opt.seed)));
    }

    auto out = report_shell("hardy", std::move(config));
    out.set("result", std::move(result));
    std::cout << out.dump(2) << "\n";
    return report.bounded == dirichlet::Membership::Unknown ? kExitUndetermined
                                                            : kExitOk;
}

struct MorreyOptions {
    std::string weight;
    std::string function;
    double p = 2.0;
    std::string grid = "0.5,1,2,4";
    std::string output = "json";
};

int run_morrey(const MorreyOptions& opt) {
    auto w = dirichlet::parse_weight(opt.weight);
    auto u = load_function(opt.function);
    const auto grid = parse_double_list(opt.grid);
    const double modulus = dirichlet::morrey_modulus(u, w, opt.p, grid);
    const double semi = dirichlet::seminorm(u, w, opt.p);

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight));
    config.set("function", Value::string(opt.function));
    config.set("p", Value::number(opt.p));
    config.set("grid", Value::string(opt.grid));
    config.set("output", Value::string(opt.output));

    auto result = Value::object();
    result.set("modulus", Value::number(modulus));
    result.set("seminorm", Value::number(semi));
    result.set("bound_holds", Value::boolean(modulus <= semi + 1e-6));

    // Provenance: the three pieces the seminorm is assembled from.
    auto energy = [&](double t) {
        const double d = u.derivative(t);
        return std::pow(std::fabs(d), opt.p) * w(t);
    };
    const double s0 = std::min(0.5, u.anchor * 0.5);
    const double s1 = std::max(2.0, u.anchor * 2.0);
    auto provenance = Value::object();
    provenance.set("energy_head", dirichlet::quad_outcome_value(
                                      dirichlet::quad::improper_to_zero(energy, s0, 1e-10)));
    provenance.set("energy_mid", dirichlet::quad_outcome_value(
                                     dirichlet::quad::integrate(energy, s0, s1, 1e-10)));
    provenance.set("energy_tail",
                   dirichlet::quad_outcome_value(
                       dirichlet::quad::improper_to_infinity(energy, s1, 1e-10)));

    auto out = report_shell("morrey", std::move(config));
    out.set("result", std::move(result));
    out.set("provenance", std::move(provenance));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct InterpOptions {
    std::string weight0;
    std::string weight1;
    double p0 = 2.0;
    double p1 = 2.0;
    double theta = 0.5;
    std::string output = "json";
};

int run_interp(const InterpOptions& opt) {
    auto w0 = dirichlet::parse_weight(opt.weight0);
    auto w1 = dirichlet::parse_weight(opt.weight1);
    auto [w, p_theta] =
        dirichlet::interpolate_weights(w0, opt.p0, w1, opt.p1, opt.theta);

    auto config = Value::object();
    config.set("weight", Value::string(opt.weight0));
    config.set("weight2", Value::string(opt.weight1));
    config.set("p", Value::number(opt.p0));
    config.set("p2", Value::number(opt.p1));
    config.set("theta", Value::number(opt.theta));
    config.set("output", Value::string(opt.output));

    auto result = Value::object();
    result.set("omega_theta_dsl", w.dsl ? Value::string(*w.dsl) : Value::null());
    result.set("p_theta", Value::number(p_theta));

    auto out = report_shell("interp", std::move(config));
    out.set("result", std::move(result));
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Dirichlet space toolkit on the half-line (0, infinity)"};
    app.require_subcommand(1);

    ClassifyOptions classify_opt;
    auto* classify = app.add_subcommand(
        "classify", "B_p membership at both endpoints and the density regime");
    classify->add_option("--weight", classify_opt.weight, "weight DSL expression")
        ->required();
    classify->add_option("--p", classify_opt.p, "exponent p in (1, inf)");
    classify->add_option("--tol", classify_opt.tol, "quadrature tolerance");
    classify->add_option("--output", classify_opt.output)
        ->check(CLI::IsMember({"json"}));

    OmegaOptions omega_opt;
    auto* omega = app.add_subcommand(
        "omega", "endpoint modulus table over a t-grid (CSV columns: t, omega0, "
                 "omega_inf; a column is empty where the B_p condition fails)");
    omega->add_option("--weight", omega_opt.weight)->required();
    omega->add_option("--p", omega_opt.p);
    omega->add_option("--grid", omega_opt.grid, "comma-separated t values");
    omega->add_option("--output", omega_opt.output)
        ->check(CLI::IsMember({"json", "csv"}));

    TraceOptions trace_opt;
    auto* trace =
        app.add_subcommand("trace", "endpoint trace with certified error bound");
    trace->add_option("--weight", trace_opt.weight)->required();
    trace
        ->add_option("--function", trace_opt.function,
                     "path to a DirichletFunction JSON file")
        ->required();
    trace->add_option("--p", trace_opt.p);
    trace->add_option("--tol", trace_opt.tol, "target certified error");
    trace->add_option("--side", trace_opt.side)
        ->check(CLI::IsMember({"zero", "infinity"}));
    trace->add_option("--output", trace_opt.output)->check(CLI::IsMember({"json"}));

    MinimizeOptions minimize_opt;
    auto* minimize = app.add_subcommand(
        "minimize", "closed-form weighted p-energy minimizer with the discrete "
                    "oracle comparison");
    minimize->add_option("--weight", minimize_opt.weight)->required();
    minimize->add_option("--p", minimize_opt.p);
    minimize->add_option("--k", minimize_opt.k, "left endpoint")->required();
    minimize->add_option("--K", minimize_opt.K, "right endpoint")->required();
    minimize->add_option("--a", minimize_opt.a, "nonzero boundary value")->required();
    minimize->add_option("--side", minimize_opt.side)
        ->check(CLI::IsMember({"left", "right"}));
    minimize->add_option("--n", minimize_opt.n,
                         "oracle grid points (< 3 skips the oracle)");
    minimize->add_option("--output", minimize_opt.output)
        ->check(CLI::IsMember({"json"}));

    ApproxOptions approx_opt;
    auto* approx = app.add_subcommand(
        "approx", "approximation-sequence diagnostic (CSV columns: n, s_n, t_n, "
                  "gap, predicted_gap, verdict)");
    approx->add_option("--weight", approx_opt.weight)->required();
    approx->add_option("--function", approx_opt.function)->required();
    approx->add_option("--p", approx_opt.p);
    approx->add_option("--builder", approx_opt.builder)
        ->check(CLI::IsMember({"truncate", "caloric-inf", "caloric-zero", "zero-mean"}));
    approx->add_option("--grid", approx_opt.grid,
                       "comma-separated schedule (window n, or horizon exponents)");
    approx->add_option("--k", approx_opt.cut,
                       "cut point for the caloric builders (horizon = k*2^n)");
    approx->add_option("--tol", approx_opt.tol);
    approx->add_option("--output", approx_opt.output)
        ->check(CLI::IsMember({"json", "csv"}));

    HardyOptions hardy_opt;
    auto* hardy = app.add_subcommand(
        "hardy", "two-weight boundedness conditions for the Hardy or conjugate "
                 "Hardy operator, with optional best-constant estimation");
    hardy->set_help_flag("--help", "print help");  // frees --h for the target weight
    hardy->add_option("--weight", hardy_opt.weight, "source weight omega")->required();
    hardy->add_option("--h", hardy_opt.target, "target weight h")->required();
    hardy->add_option("--p", hardy_opt.p);
    hardy->add_option("--q", hardy_opt.q);
    hardy->add_option("--side", hardy_opt.side)
        ->check(CLI::IsMember({"hardy", "conjugate"}));
    hardy->add_flag("--estimate", hardy_opt.estimate,
                    "also estimate the best constant from below");
    hardy->add_option("--trials", hardy_opt.trials, "random candidates");
    hardy->add_option("--seed", hardy_opt.seed);
    hardy->add_option("--output", hardy_opt.output)->check(CLI::IsMember({"json"}));

    MorreyOptions morrey_opt;
    auto* morrey = app.add_subcommand(
        "morrey", "weighted Morrey modulus over a grid against the seminorm");
    morrey->add_option("--weight", morrey_opt.weight)->required();
    morrey->add_option("--function", morrey_opt.function)->required();
    morrey->add_option("--p", morrey_opt.p);
    morrey->add_option("--grid", morrey_opt.grid, "comma-separated points")->required();
    morrey->add_option("--output", morrey_opt.output)->check(CLI::IsMember({"json"}));

    InterpOptions interp_opt;
    auto* interp = app.add_subcommand(
        "interp", "complex-interpolation weight (omega_theta DSL, p_theta)");
    interp->add_option("--weight", interp_opt.weight0, "first weight")->required();
    interp->add_option("--weight2", interp_opt.weight1, "second weight")->required();
    interp->add_option("--p", interp_opt.p0);
    interp->add_option("--p2", interp_opt.p1);
    interp->add_option("--theta", interp_opt.theta)->required();
    interp->add_option("--output", interp_opt.output)->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return kExitError;
    }

    try {
        if (classify->parsed()) return run_classify(classify_opt);
        if (omega->parsed()) return run_omega(omega_opt);
        if (trace->parsed()) return run_trace(trace_opt);
        if (minimize->parsed()) return run_minimize(minimize_opt);
        if (approx->parsed()) return run_approx(approx_opt);
        if (hardy->parsed()) return run_hardy(hardy_opt);
        if (morrey->parsed()) return run_morrey(morrey_opt);
        if (interp->parsed()) return run_interp(interp_opt);
    } catch (const dirichlet::ParseError& e) {
        emit_error("dsl", e.what());
        return kExitError;
    } catch (const dirichlet::PreconditionError& e) {
        emit_error("precondition", e.what());
        return kExitError;
    } catch (const dirichlet::Error& e) {
        emit_error("runtime", e.what());
        return kExitError;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitError;
    }
    emit_error("usage", "no subcommand given");
    return kExitError;
}
