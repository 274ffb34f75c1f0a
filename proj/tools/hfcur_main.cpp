#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hfcur/harness.hpp"

namespace {

int write_output(const std::string& out_path, const std::string& content, bool quiet) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    out << content;
    if (!quiet) std::cerr << "wrote " << out_path << " (" << content.size() << " bytes)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface current traces for high-frequency convex scattering"};
    app.require_subcommand(1);
    app.fallthrough(true);

    std::string config_path, out_path, kinds_arg;
    double k_override = 0.0;
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress progress messages");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--out", out_path, "output file ('-' or empty for stdout)");
    };

    CLI::App* trace = app.add_subcommand("trace", "boundary current trace as CSV");
    add_common(trace);
    trace->add_option("--kinds", kinds_arg, "comma-separated current kinds");
    trace->add_option("--k", k_override, "override the wavenumber");

    CLI::App* sweep = app.add_subcommand("sweep", "wavenumber sweep: rates and gaps");
    add_common(sweep);

    CLI::App* fock = app.add_subcommand("fock-table", "tabulate Psi and derivatives");
    add_common(fock);
    double tau_min = -10.0, tau_max = 20.0, step = 0.5, tau_switch = 8.0;
    fock->add_option("--tau-min", tau_min, "lower end of the tau range");
    fock->add_option("--tau-max", tau_max, "upper end of the tau range");
    fock->add_option("--step", step, "tau step");
    fock->add_option("--tau-switch", tau_switch, "quadrature/asymptotic switch point");

    CLI::App* validate = app.add_subcommand("validate", "run the self-check suite");
    add_common(validate);

    CLI11_PARSE(app, argc, argv);

    try {
        hfcur::RunConfig cfg;
        if (!config_path.empty()) cfg = hfcur::load_config(config_path);

        if (trace->parsed()) {
            if (!kinds_arg.empty()) {
                cfg.kinds.clear();
                std::stringstream ss(kinds_arg);
                std::string item;
                while (std::getline(ss, item, ','))
                    cfg.kinds.push_back(hfcur::parse_current_kind(item));
            }
            if (k_override > 0.0) cfg.k = k_override;
            return write_output(out_path, hfcur::trace_to_csv(hfcur::run_trace(cfg)),
                                quiet);
        }
        if (sweep->parsed()) {
            return write_output(out_path, hfcur::sweep_to_csv(hfcur::run_sweep(cfg)),
                                quiet);
        }
        if (fock->parsed()) {
            return write_output(
                out_path, hfcur::dump_psi_table(tau_min, tau_max, step, tau_switch),
                quiet);
        }
        if (validate->parsed()) {
            std::vector<hfcur::CheckResult> checks = hfcur::run_validation(cfg);
            int rc = write_output(out_path, hfcur::validation_report(checks), quiet);
            if (rc != 0) return rc;
            for (const hfcur::CheckResult& c : checks)
                if (!c.pass) return 2;
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
