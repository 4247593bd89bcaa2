#ifndef MOSAIC_BASELINES_HPP
#define MOSAIC_BASELINES_HPP

#include "mosaic/optimizer.hpp"

namespace mosaic {

/// Shared knobs for the three comparison frameworks. All consume the same
/// evaluation engine, archive, and budget accounting as the hybrid search.
struct BaselineConfig {
    int objectives = 3;
    int population = 30;          // GA/decomposition population (SA ignores)

    // simulated annealing (TOO)
    double sa_t0 = 1.0;
    double sa_decay = 0.995;      // geometric cooling
    double sa_tmin = 1e-3;        // restart threshold

    // genetic algorithm (GALD)
    double crossover_rate = 0.9;

    // decomposition EA (DMGC)
    double dmgc_sigma = 0.1;      // Gaussian mutation, fraction of gene range
    int n_cand = 5;
    int n_rep = 2;

    double mutation_sigma = 0.1;
    MoveConfig moves;
    double init_share_noise = 0.25;
    std::size_t archive_cap = 200;
    double trace_interval_s = 0.5;
    SearchBudget budget;
    std::uint64_t seed = 0;
    SearchHooks hooks;
};

/// Simulated-annealing tri-objective optimizer: scalarized acceptance under a
/// random simplex weight redrawn per restart, geometric cooling, archive of
/// all visited non-dominated points.
EpochResult run_too(const Scenario& sc, int epoch, const BaselineConfig& cfg);

/// Genetic-algorithm load distribution extended to multiple objectives with
/// non-dominated-rank + crowding selection; shares the hybrid search's
/// variation operators.
EpochResult run_gald(const Scenario& sc, int epoch, const BaselineConfig& cfg);

/// Decomposition EA with Gaussian mutation centered on parents and
/// crowding-distance-preferred population maintenance (which can keep
/// higher-crowding points over higher-quality ones).
EpochResult run_dmgc(const Scenario& sc, int epoch, const BaselineConfig& cfg);

} // namespace mosaic

#endif
