#ifndef MOSAIC_DRIVER_HPP
#define MOSAIC_DRIVER_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/baselines.hpp"
#include "mosaic/optimizer.hpp"

namespace mosaic {

enum class Algorithm { mosaic, too, gald, dmgc };

Algorithm algorithm_from_name(std::string_view name);
const char* algorithm_name(Algorithm algo);

struct RunOptions {
    Algorithm algorithm = Algorithm::mosaic;
    SearchBudget budget;
    std::uint64_t seed = 0;
    int objectives = 3;
    int jobs = 1;                    // worker pool for independent epochs
    double trace_interval_s = 0.5;
    SearchHooks hooks;               // applied to every epoch's run
};

/// Single-epoch dispatch with per-algorithm defaults.
EpochResult run_epoch(const Scenario& sc, int epoch, Algorithm algo, const RunOptions& opt,
                      std::uint64_t epoch_seed);

struct RunReport {
    std::vector<EpochResult> epochs;
    // 24-hour totals of the per-epoch cost-, carbon-, and water-efficient picks
    std::array<ObjectiveVector, 3> corner_totals;
    ObjectiveVector cumulative_best_total;
};

/// Full-day experiment: one independent optimization per epoch (dispatched to
/// `jobs` workers), plus Table-I-style corner totals and the cumulative-best
/// aggregate. When out_dir is nonempty, writes front_epochNN.csv,
/// trace_epochNN.jsonl, and report.json; outputs are byte-identical for a
/// fixed seed and evaluation budget, regardless of jobs.
RunReport run_day(const Scenario& sc, const RunOptions& opt, const std::string& out_dir);

std::string report_to_json(const Scenario& sc, const RunOptions& opt, const RunReport& report);

struct SweepOptions {
    std::string axis;                    // "dcs" | "subscription" | "objectives"
    std::vector<Algorithm> algorithms;   // must include Algorithm::too
    std::vector<std::uint64_t> seeds;
    SearchBudget budget;
    int epoch = 0;
    int jobs = 1;
    int objectives = 3;                  // for dcs/subscription axes
};

struct SweepRow {
    double axis_value = 0.0;
    Algorithm algorithm = Algorithm::mosaic;
    std::size_t runs = 0;
    double median_phv = 0.0;
    double too_mean_phv = 0.0;
    double phv_vs_too = 0.0;
};

/// Axis values are fixed: dcs {4,8,16}, subscription {0.5,0.75,0.99},
/// objectives {1,2,3}. Per cell, every algorithm x seed optimizes one epoch
/// under the shared budget; PHVs are computed over bounds spanning the whole
/// cell and normalized to the annealing baseline's mean.
std::vector<SweepRow> sweep(const GenerateSpec& base, const SweepOptions& opt,
                            const std::string& out_csv);

// front CSV: header cost_usd,carbon_kg,water_l,<share/premium genes...>
void write_front_csv(const std::string& path, const std::vector<FrontPoint>& front,
                     const Scenario& sc);
std::vector<std::vector<double>> read_front_objectives_csv(const std::string& path);

void write_trace_jsonl(const std::string& path, const std::vector<TraceRecord>& trace);

} // namespace mosaic

#endif
