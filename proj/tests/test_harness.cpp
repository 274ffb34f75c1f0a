#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "hfcur/harness.hpp"

using hfcur::CurrentKind;
using hfcur::RunConfig;

TEST_CASE("config parsing") {
    RunConfig cfg = hfcur::parse_config_text(
        "# comment\n"
        "geometry.kind = ellipse\n"
        "geometry.a = 2.5\n"
        "geometry.b = 1.5\n"
        "wave.k = 90\n"
        "wave.omega_deg = 30\n"
        "trace.samples = 256\n"
        "trace.kinds = bt1, bt2_2d\n"
        "trace.kirchhoff_mode = extended\n"
        "sweep.k_list = 100, 200\n"
        "ansatz.convention = kirchhoff\n"
        "fock.tau_switch = 9\n"
        "region.epsilon = 0.1\n");
    CHECK(cfg.geom.kind == hfcur::CurveGeometry::Kind::ellipse);
    CHECK(cfg.geom.a == 2.5);
    CHECK(cfg.geom.b == 1.5);
    CHECK(cfg.k == 90.0);
    CHECK(cfg.omega_deg == 30.0);
    CHECK(cfg.samples == 256);
    CHECK(cfg.kinds == std::vector<CurrentKind>{CurrentKind::bt1, CurrentKind::bt2_2d});
    CHECK(cfg.kirchhoff_mode == hfcur::ShadowMode::extended);
    CHECK(cfg.k_list == std::vector<double>{100.0, 200.0});
    CHECK(cfg.convention == hfcur::LeadingCoeff::kirchhoff);
    CHECK(cfg.tau_switch == 9.0);
    CHECK(cfg.eps_region == 0.1);
}

TEST_CASE("config rejects unknown and malformed input") {
    CHECK_THROWS_AS(hfcur::parse_config_text("wave.kk = 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(hfcur::parse_config_text("wave.k = abc\n"), std::invalid_argument);
    CHECK_THROWS_AS(hfcur::parse_config_text("wave.k 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(hfcur::parse_config_text("trace.kinds = bogus\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(hfcur::parse_config_text("geometry.kind = square\n"),
                    std::invalid_argument);
    CHECK_THROWS_AS(hfcur::load_config("/nonexistent/path.cfg"), std::runtime_error);
}

TEST_CASE("trace structure and csv schema") {
    RunConfig cfg;
    cfg.k = 40.0;
    cfg.samples = 64;
    cfg.kinds = {CurrentKind::kirchhoff, CurrentKind::bt1};
    hfcur::CurrentTrace t = hfcur::run_trace(cfg);
    CHECK(t.rows.size() == 64);
    CHECK(t.rows[0].values.size() == 2);
    std::string csv = hfcur::trace_to_csv(t);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "theta,n_dot_omega,region,kirchhoff_re,kirchhoff_im,kirchhoff_abs,"
          "bt1_re,bt1_im,bt1_abs");
    // 1 header + 64 rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);
}

TEST_CASE("trace is deterministic") {
    RunConfig cfg;
    cfg.k = 40.0;
    cfg.samples = 64;
    cfg.kinds = {CurrentKind::bt1, CurrentKind::bt2_2d};
    std::string a = hfcur::trace_to_csv(hfcur::run_trace(cfg));
    std::string b = hfcur::trace_to_csv(hfcur::run_trace(cfg));
    CHECK(a == b);
}

TEST_CASE("trace guards") {
    RunConfig cfg;
    cfg.samples = 16;
    CHECK_THROWS_AS(hfcur::run_trace(cfg), std::invalid_argument);
    cfg.samples = 128;
    cfg.kinds = {CurrentKind::exact};
    cfg.geom = hfcur::CurveGeometry::ellipse(2.0, 1.0);
    CHECK_THROWS_AS(hfcur::run_trace(cfg), std::invalid_argument);
}

TEST_CASE("psi table layout") {
    std::string table = hfcur::dump_psi_table(-2.0, 2.0, 1.0);
    std::stringstream ss(table);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "tau,l,re,im,path,err_estimate");
    int rows = 0;
    while (std::getline(ss, line)) ++rows;
    CHECK(rows == 15);  // 5 tau values x 3 derivative orders
    CHECK_THROWS_AS(hfcur::dump_psi_table(0.0, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(hfcur::dump_psi_table(-30.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("sweep requires at least two wavenumbers") {
    RunConfig cfg;
    cfg.k_list = {100.0};
    CHECK_THROWS_AS(hfcur::run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("sweep csv formats a hand-built result") {
    hfcur::SweepResult s;
    s.k_list = {100.0, 200.0};
    s.prop1.fit.rate = -1.0;
    s.prop1.fit.constant = 2.0;
    s.prop1.fit.r_squared = 0.99;
    s.prop1.rel_gap = {0.02, 0.01};
    s.prop1.abs_gap = {{1.0, 2.0, 0.5}, {1.25, 2.5, 0.75}};
    s.prop2_ansatz.fit.rate = 0.01;
    s.prop2_ansatz.fit.r_squared = 0.5;
    s.prop2_ansatz.band_sup = {0.8, 0.81};
    std::string csv = hfcur::sweep_to_csv(s);
    CHECK(csv.substr(0, csv.find('\n')) == "metric,k,value");
    CHECK(csv.find("prop1_rate,,-1\n") != std::string::npos);
    CHECK(csv.find("prop1_rel_gap,100,0.02") != std::string::npos);
    CHECK(csv.find("prop1_abs_gap_deep_shadow,200,0.75") != std::string::npos);
    CHECK(csv.find("prop2_ansatz_band_sup,200,0.81") != std::string::npos);
    CHECK(csv.find("prop2_exact_rate") == std::string::npos);
}
