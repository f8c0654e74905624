#include <string>

#include <CLI11.hpp>

#include "coex/cli.hpp"
#include "coex/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Wi-Fi DCF / duty-cycled LTE coexistence: analytical model, "
                 "event simulator, fairness solver"};
    app.set_version_flag("--version", coex::kToolVersion);
    app.require_subcommand(1);

    std::string config, out;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "Evaluate the analytical model over a sweep");
    analyze->add_option("--config", config, "sweep spec (JSON)")->required();
    analyze->add_option("--out", out, "output CSV")->required();

    coex::SimulateOptions sopts;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run the event simulator over a sweep");
    simulate->add_option("--config", config, "sweep spec (JSON)")->required();
    simulate->add_option("--out", out, "output CSV")->required();
    simulate->add_option("--runs", sopts.runs,
                         "independent runs per grid point");
    simulate->add_option("--sim-time-s", sopts.sim_time_s,
                         "simulated seconds per run");
    simulate->add_option("--seed", sopts.seed,
                         "base seed; run r uses seed + r");
    simulate->add_flag("--trace", sopts.trace,
                       "write <out>.trace for the first grid point's first run");

    std::string mode;
    CLI::App* fairness = app.add_subcommand(
        "fairness", "Solve for the duty cycle meeting a fairness target");
    fairness->add_option("--config", config, "sweep spec (JSON)")->required();
    fairness->add_option("--mode", mode, "access or throughput")->required();
    fairness->add_option("--out", out, "output CSV")->required();

    std::string model_csv, sim_csv;
    coex::CompareOptions copts;
    CLI::App* compare = app.add_subcommand(
        "compare", "Check an analyze CSV against a simulate CSV");
    compare->add_option("--analytical", model_csv, "analyze output CSV")
        ->required();
    compare->add_option("--sim", sim_csv, "simulate output CSV")->required();
    compare->add_option("--out", out, "per-point deviation CSV (optional)");
    compare->add_option("--tolerance", copts.prob_tol,
                        "absolute tolerance on collision probabilities");
    compare->add_option("--tput-rtol", copts.tput_rtol,
                        "relative tolerance on Wi-Fi throughput");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? coex::kExitOk : coex::kExitUsage;
    }

    if (app.got_subcommand(analyze))
        return coex::cmd_analyze(config, out);
    if (app.got_subcommand(simulate))
        return coex::cmd_simulate(config, out, sopts);
    if (app.got_subcommand(fairness))
        return coex::cmd_fairness(config, mode, out);
    return coex::cmd_compare(model_csv, sim_csv, out, copts);
}
