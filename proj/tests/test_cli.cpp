#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "coex/cli.hpp"
#include "coex/csv.hpp"

using namespace coex;

namespace {

std::string tmp_path(const char* name) {
    return std::string("/tmp/coex_cli_test_") + name;
}

std::string write_config(const char* name, const std::string& text) {
    std::string path = tmp_path(name);
    std::ofstream out(path);
    out << text;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kSmallSweep = R"({
    "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
    "sweep_var": "packet_bytes",
    "values": [500, 1500],
    "alpha_grid": [0.4, 0.6],
    "modes": ["analytical", "simulate"]
})";

const char* kFairnessSweep = R"({
    "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
    "sweep_var": "n_w",
    "values": [1, 2],
    "modes": ["fairness_access", "fairness_throughput"]
})";

} // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze writes one row per grid point") {
    std::string cfg = write_config("an.json", kSmallSweep);
    std::string out = tmp_path("an.csv");
    REQUIRE(cmd_analyze(cfg, out) == kExitOk);
    CsvTable t = CsvTable::read(out);
    CHECK(t.rows() == 4); // 2 packet sizes x 2 duty cycles
    CHECK(t.has_column("p_cwl"));
    CHECK(t.has_column("tput_wifi_mbps"));
    CHECK(t.num(0, "sweep_value") == 500);
    CHECK(t.num(0, "alpha") == 0.4);
    CHECK(t.num(3, "sweep_value") == 1500);
    CHECK(t.num(3, "alpha") == 0.6);
    // Header carries the tool version and config hash.
    std::string text = slurp(out);
    CHECK(text.find("# coexctl") == 0);
    CHECK(text.find("config=0x") != std::string::npos);
    std::remove(cfg.c_str());
    std::remove(out.c_str());
}

TEST_CASE("analyze is deterministic byte for byte") {
    std::string cfg = write_config("det.json", kSmallSweep);
    std::string out1 = tmp_path("det1.csv");
    std::string out2 = tmp_path("det2.csv");
    REQUIRE(cmd_analyze(cfg, out1) == kExitOk);
    REQUIRE(cmd_analyze(cfg, out2) == kExitOk);
    CHECK(slurp(out1) == slurp(out2));
    std::remove(cfg.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("analyze rejects configs that violate enforced duty limits") {
    std::string cfg = write_config("lteu.json", R"({
        "base": {"lte": {"alpha": 0.95, "t_cycle": 10000},
                 "enforce_lteu_limits": true},
        "sweep_var": "packet_bytes",
        "values": [1500],
        "modes": ["analytical"]
    })");
    std::string out = tmp_path("lteu.csv");
    CHECK(cmd_analyze(cfg, out) == kExitUsage);
    std::remove(cfg.c_str());
}

TEST_CASE("analyze requires its mode in the spec") {
    std::string cfg = write_config("nomode.json", R"({
        "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
        "sweep_var": "packet_bytes",
        "values": [1500],
        "modes": ["simulate"]
    })");
    CHECK(cmd_analyze(cfg, tmp_path("nomode.csv")) == kExitUsage);
    std::remove(cfg.c_str());
}

TEST_CASE("simulate writes rows, is seed-deterministic, and ci is blank for one run") {
    std::string cfg = write_config("sim.json", kSmallSweep);
    std::string out1 = tmp_path("sim1.csv");
    std::string out2 = tmp_path("sim2.csv");
    SimulateOptions opts;
    opts.runs = 1;
    opts.sim_time_s = 2.0;
    opts.seed = 7;
    REQUIRE(cmd_simulate(cfg, out1, opts) == kExitOk);
    REQUIRE(cmd_simulate(cfg, out2, opts) == kExitOk);
    CHECK(slurp(out1) == slurp(out2));
    CsvTable t = CsvTable::read(out1);
    CHECK(t.rows() == 4);
    CHECK(t.num(0, "runs") == 1);
    CHECK(t.num(0, "ci95_tput_mbps") == 0.0);
    CHECK(t.num(0, "tput_wifi_mbps") > 0.0);

    // A different seed moves the sample statistics.
    opts.seed = 8;
    std::string out3 = tmp_path("sim3.csv");
    REQUIRE(cmd_simulate(cfg, out3, opts) == kExitOk);
    CHECK(slurp(out3) != slurp(out1));
    std::remove(cfg.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    std::remove(out3.c_str());
}

TEST_CASE("simulate can dump an event trace for the first point") {
    std::string cfg = write_config("trace.json", R"({
        "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
        "sweep_var": "packet_bytes",
        "values": [1500],
        "modes": ["simulate"]
    })");
    std::string out = tmp_path("trace.csv");
    SimulateOptions opts;
    opts.runs = 1;
    opts.sim_time_s = 1.0;
    opts.trace = true;
    REQUIRE(cmd_simulate(cfg, out, opts) == kExitOk);
    std::string trace = slurp(out + ".trace");
    CHECK(trace.find("success") != std::string::npos);
    std::remove(cfg.c_str());
    std::remove(out.c_str());
    std::remove((out + ".trace").c_str());
}

TEST_CASE("fairness emits alpha_star per sweep value and checks its mode") {
    std::string cfg = write_config("fair.json", kFairnessSweep);
    std::string out = tmp_path("fair.csv");
    REQUIRE(cmd_fairness(cfg, "access", out) == kExitOk);
    CsvTable t = CsvTable::read(out);
    CHECK(t.rows() == 2);
    CHECK(t.cell(0, "mode") == "access");
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(t.num(i, "alpha_star") > 0.0);
        CHECK(t.num(i, "alpha_star") < 1.0);
        CHECK(t.num(i, "residual") >= 0.0);
    }

    REQUIRE(cmd_fairness(cfg, "throughput", out) == kExitOk);
    t = CsvTable::read(out);
    CHECK(t.cell(1, "mode") == "throughput");

    CHECK(cmd_fairness(cfg, "jas", out) == kExitUsage);
    std::remove(cfg.c_str());
    std::remove(out.c_str());
}

TEST_CASE("fairness refuses alpha sweeps and specs without the fairness mode") {
    std::string cfg = write_config("fair_alpha.json", R"({
        "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
        "sweep_var": "alpha",
        "values": [0.4, 0.5],
        "modes": ["fairness_access"]
    })");
    CHECK(cmd_fairness(cfg, "access", tmp_path("fa.csv")) == kExitUsage);
    std::remove(cfg.c_str());

    cfg = write_config("fair_missing.json", kSmallSweep);
    CHECK(cmd_fairness(cfg, "access", tmp_path("fm.csv")) == kExitUsage);
    std::remove(cfg.c_str());
}

TEST_CASE("compare passes a model against its own numbers and flags inflation") {
    std::string cfg = write_config("cmp.json", kSmallSweep);
    std::string model_csv = tmp_path("cmp_model.csv");
    std::string sim_csv = tmp_path("cmp_sim.csv");
    REQUIRE(cmd_analyze(cfg, model_csv) == kExitOk);

    // Fabricate a "simulation" that agrees exactly by renaming columns.
    CsvTable model = CsvTable::read(model_csv);
    {
        CsvWriter out(sim_csv,
                      {"sweep_value", "alpha", "n_w", "p_coll_lte",
                       "p_coll_total", "tput_wifi_mbps"},
                      {});
        for (std::size_t i = 0; i < model.rows(); ++i) {
            out.row(std::vector<std::string>{
                model.cell(i, "sweep_value"), model.cell(i, "alpha"),
                model.cell(i, "n_w"), model.cell(i, "p_cwl"),
                model.cell(i, "p_c_total"), model.cell(i, "tput_wifi_mbps")});
        }
    }
    std::string report = tmp_path("cmp_report.csv");
    CHECK(cmd_compare(model_csv, sim_csv, report, CompareOptions{}) == kExitOk);
    CsvTable rep = CsvTable::read(report);
    CHECK(rep.rows() == 4);

    // Inflate one throughput cell beyond the relative tolerance.
    {
        CsvWriter out(sim_csv,
                      {"sweep_value", "alpha", "n_w", "p_coll_lte",
                       "p_coll_total", "tput_wifi_mbps"},
                      {});
        for (std::size_t i = 0; i < model.rows(); ++i) {
            double tput = model.num(i, "tput_wifi_mbps");
            if (i == 2) tput *= 1.5;
            out.row(std::vector<std::string>{
                model.cell(i, "sweep_value"), model.cell(i, "alpha"),
                model.cell(i, "n_w"), model.cell(i, "p_cwl"),
                model.cell(i, "p_c_total"), CsvWriter::format(tput)});
        }
    }
    CHECK(cmd_compare(model_csv, sim_csv, "", CompareOptions{}) == kExitTolerance);

    std::remove(cfg.c_str());
    std::remove(model_csv.c_str());
    std::remove(sim_csv.c_str());
    std::remove(report.c_str());
}

TEST_CASE("compare rejects unmatched or duplicated points") {
    std::string model_csv = tmp_path("join_model.csv");
    std::string sim_csv = tmp_path("join_sim.csv");
    {
        CsvWriter out(model_csv,
                      {"sweep_value", "alpha", "n_w", "p_cwl", "p_c_total",
                       "tput_wifi_mbps"},
                      {});
        out.row(std::vector<std::string>{"500", "0.4", "1", "0.3", "0.3", "2.0"});
    }
    {
        CsvWriter out(sim_csv,
                      {"sweep_value", "alpha", "n_w", "p_coll_lte",
                       "p_coll_total", "tput_wifi_mbps"},
                      {});
        out.row(std::vector<std::string>{"999", "0.4", "1", "0.3", "0.3", "2.0"});
    }
    CHECK(cmd_compare(model_csv, sim_csv, "", CompareOptions{}) == kExitUsage);
    std::remove(model_csv.c_str());
    std::remove(sim_csv.c_str());
}

TEST_CASE("missing config file exits with the usage code") {
    CHECK(cmd_analyze("/tmp/definitely_missing_coex.json", tmp_path("x.csv")) ==
          kExitUsage);
}

#ifdef COEXCTL_BIN
TEST_CASE("binary answers --version and rejects bare invocation") {
    std::string quiet = " > /dev/null 2>&1";
    CHECK(std::system((std::string(COEXCTL_BIN) + " --version" + quiet).c_str()) == 0);
    CHECK(std::system((std::string(COEXCTL_BIN) + quiet).c_str()) != 0);
    CHECK(std::system((std::string(COEXCTL_BIN) + " analyze" + quiet).c_str()) != 0);
}
#endif

} // TEST_SUITE
