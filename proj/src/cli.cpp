#include "coex/cli.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "coex/csv.hpp"
#include "coex/errors.hpp"
#include "coex/off_period.hpp"
#include "coex/parallel.hpp"
#include "coex/sim.hpp"
#include "coex/sweep.hpp"
#include "coex/throughput.hpp"
#include "coex/version.hpp"
#include "scenario_json.hpp"

namespace coex {

namespace {

std::string version_comment(std::uint64_t hash) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "coexctl %s config=0x%016" PRIx64,
                  kToolVersion, hash);
    return buf;
}

std::string read_file_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_mode(const SweepSpec& spec, const std::string& mode) {
    if (!spec.has_mode(mode))
        throw ConfigError("sweep modes do not include \"" + mode +
                          "\", refusing to run");
}

int run_guarded(const char* what, const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return kExitUsage;
    } catch (const ToleranceFailure& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return kExitTolerance;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return kExitInternal;
    }
}

} // namespace

int cmd_analyze(const std::string& config_path, const std::string& out_path) {
    return run_guarded("analyze", [&] {
        SweepSpec spec = sweep_from_json_file(config_path);
        require_mode(spec, "analytical");
        std::vector<GridPoint> grid = expand_grid(spec);

        CsvWriter out(out_path,
                      {"sweep_value", "alpha", "t_cycle_us", "n_w", "r_w_mbps",
                       "packet_bytes", "p_cwl", "p_c_total", "tau_w", "e_n",
                       "tput_wifi_mbps", "tput_lte_mbps",
                       "tput_wifi_only_scaled_mbps"},
                      {version_comment(sweep_hash(spec))});

        BackoffSumTable table(spec.base.wifi.w0);
        for (const GridPoint& pt : grid) {
            CoexEvaluation ev = evaluate_coex(pt.cfg, &table);
            const ThroughputReport& r = ev.report;
            out.row({pt.sweep_value, pt.cfg.lte.alpha,
                     pt.cfg.lte.t_cycle, double(pt.cfg.n_w), pt.cfg.r_w,
                     double(pt.cfg.packet_bytes), ev.dist.p_cwl,
                     ev.fp.p_coll, ev.fp.tau, r.e_n, r.tput_wifi_coex,
                     r.tput_lte,
                     (1.0 - pt.cfg.lte.alpha) * r.tput_wifi_only});
        }
        std::fprintf(stderr, "analyze: %zu rows -> %s\n", grid.size(),
                     out_path.c_str());
    });
}

int cmd_simulate(const std::string& config_path, const std::string& out_path,
                 const SimulateOptions& opts) {
    return run_guarded("simulate", [&] {
        if (opts.runs < 1)
            throw ConfigError("--runs must be at least 1");
        if (opts.sim_time_s <= 0.0)
            throw ConfigError("--sim-time-s must be positive");
        SweepSpec spec = sweep_from_json_file(config_path);
        require_mode(spec, "simulate");
        std::vector<GridPoint> grid = expand_grid(spec);

        double warmup_s = std::min(1.0, 0.1 * opts.sim_time_s);
        std::vector<SimStats> stats(grid.size());
        SimTrace trace;
        trace.record_events = opts.trace;

        parallel_for(grid.size(), [&](std::size_t i) {
            std::vector<SimStats> runs;
            runs.reserve(std::size_t(opts.runs));
            for (int r = 0; r < opts.runs; ++r) {
                SimConfig sc;
                sc.scenario = grid[i].cfg;
                sc.sim_time_s = opts.sim_time_s;
                sc.warmup_s = warmup_s;
                sc.seed = opts.seed + std::uint64_t(r);
                SimTrace* tr =
                    (opts.trace && i == 0 && r == 0) ? &trace : nullptr;
                runs.push_back(run(sc, tr));
            }
            stats[i] = runs.size() == 1 ? runs.front() : aggregate(runs);
        });

        CsvWriter out(out_path,
                      {"sweep_value", "alpha", "t_cycle_us", "n_w", "r_w_mbps",
                       "packet_bytes", "p_coll_lte", "p_coll_total",
                       "tput_wifi_mbps", "ci95_tput_mbps", "runs",
                       "sim_time_s", "seed"},
                      {version_comment(sweep_hash(spec))});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const GridPoint& pt = grid[i];
            out.row({pt.sweep_value, pt.cfg.lte.alpha, pt.cfg.lte.t_cycle,
                     double(pt.cfg.n_w), pt.cfg.r_w,
                     double(pt.cfg.packet_bytes), stats[i].p_coll_lte,
                     stats[i].p_coll_total, stats[i].tput_wifi,
                     stats[i].ci95_tput, double(opts.runs), opts.sim_time_s,
                     double(opts.seed)});
        }

        if (opts.trace) {
            std::string trace_path = out_path + ".trace";
            std::ofstream tf(trace_path);
            if (!tf)
                throw ConfigError("cannot open " + trace_path);
            for (const std::string& line : trace.events)
                tf << line << '\n';
            std::fprintf(stderr, "simulate: trace -> %s\n",
                         trace_path.c_str());
        }
        std::fprintf(stderr, "simulate: %zu rows -> %s\n", grid.size(),
                     out_path.c_str());
    });
}

int cmd_fairness(const std::string& config_path, const std::string& mode,
                 const std::string& out_path) {
    return run_guarded("fairness", [&] {
        bool access;
        if (mode == "access")
            access = true;
        else if (mode == "throughput")
            access = false;
        else
            throw ConfigError("--mode must be \"access\" or \"throughput\"");

        SweepSpec spec = sweep_from_json_file(config_path);
        require_mode(spec, access ? "fairness_access" : "fairness_throughput");
        if (spec.var == SweepVar::alpha)
            throw ConfigError(
                "fairness solves for alpha, sweeping it makes no sense");
        if (!spec.alpha_grid.empty())
            throw ConfigError("alpha_grid is not allowed with fairness");
        std::vector<GridPoint> grid = expand_grid(spec);

        CsvWriter out(out_path,
                      {"sweep_value", "mode", "n_w", "alpha_star", "residual",
                       "metric_at_optimum", "target", "boundary"},
                      {version_comment(sweep_hash(spec))});
        FairnessOptions fopts;
        for (const GridPoint& pt : grid) {
            FairnessResult res =
                access ? access_fair_alpha(pt.cfg, pt.cfg.n_w, fopts)
                       : throughput_fair_alpha(pt.cfg, pt.cfg.n_w, fopts);
            std::vector<std::string> cells;
            cells.push_back(CsvWriter::format(pt.sweep_value));
            cells.push_back(mode);
            cells.push_back(std::to_string(pt.cfg.n_w));
            cells.push_back(CsvWriter::format(res.alpha_star));
            cells.push_back(CsvWriter::format(res.objective_residual));
            cells.push_back(CsvWriter::format(res.metric_at_optimum));
            cells.push_back(CsvWriter::format(res.target));
            cells.push_back(res.boundary ? "1" : "0");
            out.row(cells);
        }
        std::fprintf(stderr, "fairness(%s): %zu rows -> %s\n", mode.c_str(),
                     grid.size(), out_path.c_str());
    });
}

namespace {

struct CompareRow {
    double sweep_value = 0.0;
    double alpha = 0.0;
    int n_w = 0;
    double pc_model = 0.0, pc_sim = 0.0, pc_dev = 0.0;
    bool has_pcwl = false;
    double pcwl_model = 0.0, pcwl_sim = 0.0, pcwl_dev = 0.0;
    double tput_model = 0.0, tput_sim = 0.0, tput_rel = 0.0;
};

std::string join_key(const std::string& sweep_value,
                     const std::string& alpha) {
    return sweep_value + "|" + alpha;
}

} // namespace

int cmd_compare(const std::string& analytical_csv, const std::string& sim_csv,
                const std::string& out_path, const CompareOptions& opts) {
    return run_guarded("compare", [&] {
        CsvTable model = CsvTable::read(analytical_csv);
        CsvTable sim = CsvTable::read(sim_csv);
        for (const char* col :
             {"sweep_value", "alpha", "n_w", "p_cwl", "p_c_total",
              "tput_wifi_mbps"})
            if (!model.has_column(col))
                throw ConfigError(analytical_csv + ": missing column " + col);
        for (const char* col : {"sweep_value", "alpha", "p_coll_lte",
                                "p_coll_total", "tput_wifi_mbps"})
            if (!sim.has_column(col))
                throw ConfigError(sim_csv + ": missing column " + col);

        std::map<std::string, std::size_t> sim_index;
        for (std::size_t i = 0; i < sim.rows(); ++i) {
            std::string key = join_key(sim.cell(i, "sweep_value"),
                                       sim.cell(i, "alpha"));
            if (!sim_index.emplace(key, i).second)
                throw ConfigError(sim_csv + ": duplicate grid point " + key);
        }

        std::vector<CompareRow> rows;
        rows.reserve(model.rows());
        for (std::size_t i = 0; i < model.rows(); ++i) {
            std::string key = join_key(model.cell(i, "sweep_value"),
                                       model.cell(i, "alpha"));
            auto it = sim_index.find(key);
            if (it == sim_index.end())
                throw ConfigError("grid point " + key +
                                  " has no simulation row");
            std::size_t j = it->second;
            sim_index.erase(it);

            CompareRow row;
            row.sweep_value = model.num(i, "sweep_value");
            row.alpha = model.num(i, "alpha");
            row.n_w = int(std::lround(model.num(i, "n_w")));
            row.pc_model = model.num(i, "p_c_total");
            row.pc_sim = sim.num(j, "p_coll_total");
            row.pc_dev = std::fabs(row.pc_model - row.pc_sim);
            if (row.n_w == 1) {
                // With one station every collision is against LTE, so the
                // simulator's LTE-hit ratio is directly comparable.
                row.has_pcwl = true;
                row.pcwl_model = model.num(i, "p_cwl");
                row.pcwl_sim = sim.num(j, "p_coll_lte");
                row.pcwl_dev = std::fabs(row.pcwl_model - row.pcwl_sim);
            }
            row.tput_model = model.num(i, "tput_wifi_mbps");
            row.tput_sim = sim.num(j, "tput_wifi_mbps");
            if (std::fabs(row.tput_model) < 1e-12 &&
                std::fabs(row.tput_sim) < 1e-12)
                row.tput_rel = 0.0;
            else if (row.tput_sim <= 0.0)
                row.tput_rel = HUGE_VAL;
            else
                row.tput_rel =
                    std::fabs(row.tput_model - row.tput_sim) / row.tput_sim;
            rows.push_back(row);
        }
        if (!sim_index.empty())
            throw ConfigError("simulation has " +
                              std::to_string(sim_index.size()) +
                              " grid points missing from the model CSV");

        double max_pc = 0.0, max_pcwl = 0.0, max_rel = 0.0;
        int violations = 0;
        for (const CompareRow& r : rows) {
            max_pc = std::max(max_pc, r.pc_dev);
            if (r.has_pcwl)
                max_pcwl = std::max(max_pcwl, r.pcwl_dev);
            max_rel = std::max(max_rel, r.tput_rel);
            bool bad = r.pc_dev > opts.prob_tol ||
                       (r.has_pcwl && r.pcwl_dev > opts.prob_tol) ||
                       r.tput_rel > opts.tput_rtol;
            if (bad) {
                ++violations;
                std::fprintf(stderr,
                             "compare: sweep=%g alpha=%g exceeds tolerance "
                             "(|dP_c|=%.4f |dP_cwl|=%.4f dTput=%.2f%%)\n",
                             r.sweep_value, r.alpha, r.pc_dev,
                             r.has_pcwl ? r.pcwl_dev : 0.0,
                             100.0 * r.tput_rel);
            }
        }

        if (!out_path.empty()) {
            char summary[160];
            std::snprintf(summary, sizeof(summary),
                          "max |dP_c_total|=%.6f max |dP_cwl|=%.6f "
                          "max rel dTput=%.6f",
                          max_pc, max_pcwl, max_rel);
            std::uint64_t h = fnv1a64(read_file_text(analytical_csv) +
                                      read_file_text(sim_csv));
            CsvWriter out(out_path,
                          {"sweep_value", "alpha", "n_w", "p_c_total_model",
                           "p_c_total_sim", "dev_p_c_total", "p_cwl_model",
                           "p_cwl_sim", "dev_p_cwl", "tput_model_mbps",
                           "tput_sim_mbps", "rel_dev_tput"},
                          {version_comment(h), summary});
            for (const CompareRow& r : rows) {
                std::vector<std::string> cells;
                cells.push_back(CsvWriter::format(r.sweep_value));
                cells.push_back(CsvWriter::format(r.alpha));
                cells.push_back(std::to_string(r.n_w));
                cells.push_back(CsvWriter::format(r.pc_model));
                cells.push_back(CsvWriter::format(r.pc_sim));
                cells.push_back(CsvWriter::format(r.pc_dev));
                cells.push_back(r.has_pcwl ? CsvWriter::format(r.pcwl_model)
                                           : "");
                cells.push_back(r.has_pcwl ? CsvWriter::format(r.pcwl_sim)
                                           : "");
                cells.push_back(r.has_pcwl ? CsvWriter::format(r.pcwl_dev)
                                           : "");
                cells.push_back(CsvWriter::format(r.tput_model));
                cells.push_back(CsvWriter::format(r.tput_sim));
                cells.push_back(CsvWriter::format(r.tput_rel));
                out.row(cells);
            }
        }

        std::fprintf(stderr,
                     "compare: %zu points, max |dP_c_total|=%.4f (tol %.4f), "
                     "max |dP_cwl|=%.4f (tol %.4f), "
                     "max rel dTput=%.2f%% (tol %.2f%%)\n",
                     rows.size(), max_pc, opts.prob_tol, max_pcwl,
                     opts.prob_tol, 100.0 * max_rel, 100.0 * opts.tput_rtol);
        if (violations > 0)
            throw ToleranceFailure(std::to_string(violations) +
                                   " grid points exceed tolerance");
    });
}

} // namespace coex
