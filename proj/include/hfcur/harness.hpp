#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfcur/ansatz.hpp"
#include "hfcur/currents.hpp"
#include "hfcur/reference.hpp"

namespace hfcur {

struct RunConfig {
    CurveGeometry geom = CurveGeometry::circle(1.0);
    double k = 150.0;
    double omega_deg = 0.0;
    int samples = 2048;
    std::vector<CurrentKind> kinds = {CurrentKind::exact, CurrentKind::kirchhoff,
                                      CurrentKind::bt1};
    std::vector<double> k_list = {100.0, 200.0, 400.0, 800.0};
    LeadingCoeff convention = LeadingCoeff::calibrated;
    double tau_switch = 8.0;
    double eps_region = 0.05;
    ShadowMode kirchhoff_mode = ShadowMode::zero;

    WaveConfig wave() const;
    ExpansionConfig expansion() const;
};

// Flat key = value text.  Unknown keys and malformed values are errors.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

struct TraceRow {
    double theta;
    double n_dot_omega;
    Region region;
    std::vector<Complex> values;  // one per requested kind
};

struct CurrentTrace {
    std::vector<CurrentKind> kinds;
    std::vector<TraceRow> rows;
};

CurrentTrace run_trace(const RunConfig& cfg);
std::string trace_to_csv(const CurrentTrace& trace);

struct SweepResult {
    std::vector<double> k_list;
    Prop1Result prop1;
    Prop2Result prop2_ansatz;
    std::optional<Prop2Result> prop2_exact;  // circle only
    std::optional<FitResult> envelope_shadow_boundary;  // d(envelope)/d tau scaling
    std::optional<FitResult> envelope_illuminated;      // d(envelope/k)/d theta scaling
};

SweepResult run_sweep(const RunConfig& cfg);
std::string sweep_to_csv(const SweepResult& s);

// CSV table of Psi^{(l)}, l = 0..2.
std::string dump_psi_table(double tau_min, double tau_max, double step,
                           double tau_switch = 8.0);

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<CheckResult> run_validation(const RunConfig& cfg);
std::string validation_report(const std::vector<CheckResult>& checks);

}  // namespace hfcur
