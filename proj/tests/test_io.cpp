#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "coex/csv.hpp"
#include "coex/errors.hpp"
#include "coex/scenario_io.hpp"
#include "coex/sweep.hpp"

using namespace coex;

namespace {

std::string tmp_path(const char* name) {
    return std::string("/tmp/coex_io_test_") + name;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kMinimalScenario = R"({"lte": {"alpha": 0.5, "t_cycle": 10000}})";

} // namespace

TEST_SUITE("io") {

TEST_CASE("minimal scenario takes all the defaults") {
    ScenarioConfig cfg = scenario_from_json_string(kMinimalScenario);
    CHECK(cfg.wifi == WifiMacParams{});
    CHECK(cfg.lte.alpha == 0.5);
    CHECK(cfg.lte.t_cycle == 10000.0);
    CHECK(cfg.lte.r_l == 100.0);
    CHECK(cfg.n_w == 1);
    CHECK(cfg.r_w == 6.0);
    CHECK(cfg.packet_bytes == 1500);
    CHECK(cfg.enforce_lteu_limits == false);
}

TEST_CASE("scenario JSON round-trips field-exactly") {
    ScenarioConfig cfg;
    cfg.wifi.w0 = 32;
    cfg.wifi.basic_rates = {6.0, 9.0, 12.0, 24.0};
    cfg.lte.alpha = 0.35;
    cfg.lte.t_cycle = 30000.0;
    cfg.n_w = 7;
    cfg.r_w = 54.0;
    cfg.packet_bytes = 800;
    ScenarioConfig back = scenario_from_json_string(to_json_string(cfg));
    CHECK(back == cfg);
}

TEST_CASE("lte block and its alpha/t_cycle are required") {
    CHECK_THROWS_WITH_AS(scenario_from_json_string("{}"),
                         doctest::Contains("lte"), ConfigError);
    CHECK_THROWS_WITH_AS(
        scenario_from_json_string(R"({"lte": {"t_cycle": 10000}})"),
        doctest::Contains("alpha"), ConfigError);
    CHECK_THROWS_WITH_AS(
        scenario_from_json_string(R"({"lte": {"alpha": 0.5}})"),
        doctest::Contains("t_cycle"), ConfigError);
}

TEST_CASE("unknown keys are named in the error") {
    CHECK_THROWS_WITH_AS(
        scenario_from_json_string(
            R"({"lte": {"alpha": 0.5, "t_cycle": 10000}, "surprise": 1})"),
        doctest::Contains("surprise"), ConfigError);
    CHECK_THROWS_WITH_AS(
        scenario_from_json_string(
            R"({"wifi": {"cw_min": 16}, "lte": {"alpha": 0.5, "t_cycle": 10000}})"),
        doctest::Contains("cw_min"), ConfigError);
}

TEST_CASE("wrong types point at the offending field") {
    CHECK_THROWS_WITH_AS(
        scenario_from_json_string(
            R"({"lte": {"alpha": "half", "t_cycle": 10000}})"),
        doctest::Contains("alpha"), ConfigError);
    CHECK_THROWS_WITH_AS(
        scenario_from_json_string(
            R"({"wifi": {"w0": "big"}, "lte": {"alpha": 0.5, "t_cycle": 10000}})"),
        doctest::Contains("w0"), ConfigError);
}

TEST_CASE("values are validated at parse time") {
    CHECK_THROWS_AS(
        scenario_from_json_string(R"({"lte": {"alpha": 1.5, "t_cycle": 10000}})"),
        ConfigError);
    CHECK_THROWS_AS(
        scenario_from_json_string(
            R"({"wifi": {"w0": 10}, "lte": {"alpha": 0.5, "t_cycle": 10000}})"),
        ConfigError);
}

TEST_CASE("malformed JSON and missing files are config errors") {
    CHECK_THROWS_AS(scenario_from_json_string("{nope"), ConfigError);
    CHECK_THROWS_AS(scenario_from_json_file("/tmp/does_not_exist_coex.json"),
                    ConfigError);
}

TEST_CASE("config hash tracks content") {
    ScenarioConfig a = scenario_from_json_string(kMinimalScenario);
    ScenarioConfig b = a;
    CHECK(config_hash(a) == config_hash(b));
    b.packet_bytes = 1501;
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("sweep spec parses, validates, and expands in file order") {
    std::string text = R"({
        "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
        "sweep_var": "packet_bytes",
        "values": [500, 1000],
        "alpha_grid": [0.4, 0.6],
        "modes": ["analytical", "simulate"]
    })";
    SweepSpec spec = sweep_from_json_string(text);
    CHECK(spec.var == SweepVar::packet_bytes);
    CHECK(spec.has_mode("analytical"));
    CHECK(spec.has_mode("simulate"));
    CHECK(!spec.has_mode("fairness_access"));

    std::vector<GridPoint> grid = expand_grid(spec);
    REQUIRE(grid.size() == 4);
    // Sweep values outermost, duty cycles within.
    CHECK(grid[0].sweep_value == 500);
    CHECK(grid[0].cfg.packet_bytes == 500);
    CHECK(grid[0].cfg.lte.alpha == 0.4);
    CHECK(grid[1].cfg.packet_bytes == 500);
    CHECK(grid[1].cfg.lte.alpha == 0.6);
    CHECK(grid[3].cfg.packet_bytes == 1000);
    CHECK(grid[3].cfg.lte.alpha == 0.6);

    // Round trip through the canonical serialization.
    SweepSpec back = sweep_from_json_string(to_json_string(spec));
    CHECK(back.values == spec.values);
    CHECK(back.alpha_grid == spec.alpha_grid);
    CHECK(sweep_hash(back) == sweep_hash(spec));
}

TEST_CASE("sweeping n_w or alpha patches the right field") {
    std::string n_text = R"({
        "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
        "sweep_var": "n_w", "values": [1, 5], "modes": ["analytical"]
    })";
    std::vector<GridPoint> grid = expand_grid(sweep_from_json_string(n_text));
    REQUIRE(grid.size() == 2);
    CHECK(grid[1].cfg.n_w == 5);
    CHECK(grid[1].cfg.packet_bytes == 1500); // base untouched

    std::string a_text = R"({
        "base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},
        "sweep_var": "alpha", "values": [0.3, 0.7], "modes": ["analytical"]
    })";
    grid = expand_grid(sweep_from_json_string(a_text));
    REQUIRE(grid.size() == 2);
    CHECK(grid[0].cfg.lte.alpha == 0.3);
    CHECK(grid[1].cfg.lte.alpha == 0.7);
}

TEST_CASE("sweep validation rejects bad grids") {
    auto sweep_with = [](const std::string& mid) {
        return std::string(R"({"base": {"lte": {"alpha": 0.5, "t_cycle": 10000}},)") +
               mid + "}";
    };
    // Non-integer packet size.
    CHECK_THROWS_AS(sweep_from_json_string(sweep_with(
                        R"("sweep_var": "packet_bytes", "values": [500.5], "modes": ["analytical"])")),
                    ConfigError);
    // Alpha outside (0,1).
    CHECK_THROWS_AS(sweep_from_json_string(sweep_with(
                        R"("sweep_var": "alpha", "values": [1.0], "modes": ["analytical"])")),
                    ConfigError);
    // Empty values.
    CHECK_THROWS_AS(sweep_from_json_string(sweep_with(
                        R"("sweep_var": "n_w", "values": [], "modes": ["analytical"])")),
                    ConfigError);
    // Unknown mode.
    CHECK_THROWS_AS(sweep_from_json_string(sweep_with(
                        R"("sweep_var": "n_w", "values": [1], "modes": ["plot"])")),
                    ConfigError);
    // Missing modes.
    CHECK_THROWS_AS(sweep_from_json_string(sweep_with(
                        R"("sweep_var": "n_w", "values": [1])")),
                    ConfigError);
    // alpha_grid together with an alpha sweep.
    CHECK_THROWS_AS(sweep_from_json_string(sweep_with(
                        R"("sweep_var": "alpha", "values": [0.5], "modes": ["analytical"], "alpha_grid": [0.4])")),
                    ConfigError);
}

TEST_CASE("csv writer and reader round trip") {
    std::string path = tmp_path("round.csv");
    {
        CsvWriter out(path, {"a", "b"}, {"tool 1.0", "second comment"});
        out.row(std::vector<double>{1.5, 2.0});
        out.row(std::vector<std::string>{"x", ""});
    }
    CsvTable t = CsvTable::read(path);
    CHECK(t.rows() == 2);
    CHECK(t.has_column("a"));
    CHECK(!t.has_column("z"));
    CHECK(t.num(0, "a") == 1.5);
    CHECK(t.num(0, "b") == 2.0);
    CHECK(t.cell(1, "a") == "x");
    CHECK(t.cell(1, "b") == "");
    CHECK_THROWS_AS(t.num(1, "a"), ConfigError); // "x" is not a number
    std::remove(path.c_str());
}

TEST_CASE("csv writer checks the row width") {
    std::string path = tmp_path("width.csv");
    CsvWriter out(path, {"a", "b"}, {});
    CHECK_THROWS_AS(out.row(std::vector<double>{1.0}), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("csv reader skips comments and blank lines") {
    std::string path = tmp_path("comments.csv");
    write_text(path, "# leading comment\n\na,b\n1,2\n# mid comment\n3,4\n");
    CsvTable t = CsvTable::read(path);
    CHECK(t.rows() == 2);
    CHECK(t.num(1, "b") == 4.0);
    std::remove(path.c_str());
}

TEST_CASE("csv reader rejects ragged rows and unknown columns") {
    std::string path = tmp_path("ragged.csv");
    write_text(path, "a,b\n1,2,3\n");
    CHECK_THROWS_AS(CsvTable::read(path), ConfigError);
    write_text(path, "a,b\n1,2\n");
    CsvTable t = CsvTable::read(path);
    CHECK_THROWS_AS(t.cell(0, "missing"), ConfigError);
    CHECK_THROWS_AS(t.cell(5, "a"), std::out_of_range);
    std::remove(path.c_str());
}

} // TEST_SUITE
