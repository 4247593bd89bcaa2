#ifndef MOSAIC_OPTIMIZER_HPP
#define MOSAIC_OPTIMIZER_HPP

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mosaic/decision.hpp"
#include "mosaic/pareto.hpp"
#include "mosaic/rng.hpp"
#include "mosaic/scenario.hpp"
#include "mosaic/sustainability.hpp"

namespace mosaic {

/// Termination: any set limit stops the run; 0 means unlimited. At least one
/// of max_evals / max_seconds / max_generations must be set. Runs limited
/// only by wall time are not reproducible run-to-run.
struct SearchBudget {
    std::uint64_t max_evals = 0;
    double max_seconds = 0.0;
    std::uint64_t max_generations = 0;
};

struct Population;
class UpdateTable;

/// Optional observers, mainly for tests and audits. All default to empty.
struct SearchHooks {
    std::function<void(const DistributionPlan&, const ObjectiveVector&)> on_eval;
    std::function<void(int slot, double g_start, double g_end)> on_local_search;
    std::function<void(double g_cur, double g_cand, bool accepted)> on_sa_step;
    std::function<void(std::uint64_t generation, const Population&, const UpdateTable&)> on_generation;
};

struct TraceRecord {
    std::uint64_t evaluations = 0;
    double elapsed_s = 0.0;
    double archive_phv = 0.0;
    std::size_t archive_size = 0;
};

struct FrontPoint {
    ObjectiveVector objectives;
    DistributionPlan plan;
};

struct EpochResult {
    std::vector<FrontPoint> front;     // non-dominated over all evaluations
    std::vector<TraceRecord> trace;
    std::uint64_t evaluations = 0;
    double wall_s = 0.0;
};

/// Shared evaluation funnel: budget accounting, ideal point, the external
/// archive, and the PHV-over-time trace. Infeasible plans (capacity errors)
/// score +inf on every objective and are kept out of the archive and ideal
/// point but still consume budget.
class Evaluator {
public:
    Evaluator(const Scenario& sc, const EvalContext& ctx, int epoch, int objectives,
              const SearchBudget& budget, SearchHooks hooks,
              std::size_t archive_cap = 200, double trace_interval_s = 0.5);

    /// nullopt once the eval/wall budget is exhausted (no budget consumed).
    std::optional<ObjectiveVector> evaluate(const DistributionPlan& plan);

    bool exhausted() const;
    std::uint64_t evaluations() const { return evals_; }
    int objectives() const { return objectives_; }
    double elapsed_s() const;

    /// Component-wise minima over all feasible evaluations (M entries).
    const std::vector<double>& ideal_point() const { return ideal_; }

    /// ideal_point with not-yet-observed components (inf) replaced by 0,
    /// the model-level lower bound; keeps scalarizations finite before the
    /// first feasible evaluation.
    std::vector<double> ideal_point_safe() const;

    std::vector<FrontPoint> front() const;

    /// Trace with a final sample appended.
    std::vector<TraceRecord> take_trace();

    std::size_t premium_clamp_count() const { return premium_clamps_; }

private:
    void archive_insert(const ObjectiveVector& obj, const DistributionPlan& plan);
    void maybe_sample_trace(bool force);
    double archive_phv() const;

    const Scenario* sc_;
    const EvalContext* ctx_;
    int epoch_;
    int objectives_;
    SearchBudget budget_;
    SearchHooks hooks_;
    std::size_t archive_cap_;
    double trace_interval_s_;

    std::vector<FrontPoint> archive_;  // lex-sorted by objectives
    std::vector<double> ideal_;
    std::uint64_t evals_ = 0;
    std::size_t premium_clamps_ = 0;
    std::vector<TraceRecord> trace_;
    bool bounds_frozen_ = false;
    NormalizationBounds trace_bounds_;
    double last_sample_s_ = -1.0;
    std::chrono::steady_clock::time_point start_;
};

/// Evenly spread simplex-lattice weight vectors. When the smallest lattice
/// covering n exceeds it, subsamples by farthest-point selection keeping the
/// unit vectors. For m == 1 the set degenerates to the single vector (1).
std::vector<std::vector<double>> generate_weights(int n, int m);

/// Weighted-sum scalarization: sum_i w_i |obj_i - z_i|.
double weighted_sum(const ObjectiveVector& obj, std::span<const double> w,
                    std::span<const double> z);

/// Tchebycheff scalarization: max_i w_i |obj_i - z_i|. Kept for the
/// decomposition baseline; the hybrid search optimizes the weighted sum.
double tchebycheff(const ObjectiveVector& obj, std::span<const double> w,
                   std::span<const double> z);

/// Per-slot ring of local-search step outcomes (capped at max_length);
/// drives starting point selection via the average update frequency.
class UpdateTable {
public:
    UpdateTable(int slots, int max_length);

    void append(int slot, const std::vector<bool>& record);
    void reset(int slot);  // fresh slot: single `true` entry
    double frequency(int slot) const;
    int ring_size(int slot) const { return static_cast<int>(rings_[slot].size()); }
    int slots() const { return static_cast<int>(rings_.size()); }
    int max_length() const { return max_length_; }

private:
    std::vector<std::deque<bool>> rings_;
    int max_length_;
};

/// k starting slots: uniform random during the first iter_early generations,
/// afterwards the k highest average update frequencies (random tie order).
std::vector<int> select_starters(const UpdateTable& table, int k, std::uint64_t generation,
                                 int iter_early, Rng& rng);

struct MoveConfig {
    double coarse_delta = 0.05;
    double fine_delta = 0.01;
    double premium_step_fraction = 0.05;  // of the location's premium cap
};

/// One uniformly chosen neighborhood move (share transfer or premium step),
/// repaired. Used by the annealing baseline.
DistributionPlan random_neighbor(const DistributionPlan& plan, const EvalContext& ctx,
                                 const MoveConfig& moves, Rng& rng);

using EvalFn = std::function<std::optional<ObjectiveVector>(const DistributionPlan&)>;

struct LocalSearchResult {
    DistributionPlan plan;
    ObjectiveVector objectives;
    std::vector<bool> record;  // one entry per evaluation step: accepted?
    double g_start = 0.0;
    double g_end = 0.0;
};

/// First-improvement hill climbing on the weighted sum under a frozen ideal
/// point snapshot. Stops on budget exhaustion or a full sweep without
/// improvement.
LocalSearchResult local_search(const DistributionPlan& start, const ObjectiveVector& start_obj,
                               std::span<const double> w, std::span<const double> z_snapshot,
                               int budget, const EvalContext& ctx, const MoveConfig& moves,
                               Rng& rng, const EvalFn& eval);

struct PopulationSlot {
    DistributionPlan plan;
    ObjectiveVector objectives;
    int weight = 0;  // index into the weight set; never changes
};

struct Population {
    std::vector<PopulationSlot> slots;
    int size() const { return static_cast<int>(slots.size()); }
};

/// Arithmetic blend on share genes (single alpha), uniform pick on premium
/// genes, then repair.
DistributionPlan crossover_blend(const DistributionPlan& a, const DistributionPlan& b,
                                 const EvalContext& ctx, Rng& rng);

/// Per-gene Gaussian perturbation (sigma_frac of the gene range) applied at
/// `rate` per gene, then repair. rate <= 0 selects 1/genome_length.
DistributionPlan mutate_gaussian(const DistributionPlan& p, const EvalContext& ctx, Rng& rng,
                                 double sigma_frac, double rate);

struct EaStepConfig {
    int offspring = 10;
    int n_cand = 5;        // slots compared per offspring
    int n_rep = 2;         // max replacements per offspring
    double mutation_sigma = 0.1;
};

/// Collaborative EA step: crossover always pairs a starter slot with a
/// non-starter, mutate, evaluate, then replace up to n_rep randomly chosen
/// slots the offspring strictly beats on their own weighted sums. Replaced
/// slots' table rings reset to a single `true`.
void ea_step(Population& pop, const std::vector<int>& starters,
             const std::vector<std::vector<double>>& weights, UpdateTable& table,
             const EvalContext& ctx, const EaStepConfig& cfg, Rng& rng, const EvalFn& eval,
             const std::vector<double>& z);

struct MosaicConfig {
    int population = 30;
    int objectives = 3;
    int iter_early = 500;       // generations of random starter selection
    int table_length = 50;
    int starters = 10;          // |P_start| per generation
    int local_search_evals = 30;
    int offspring = 10;
    int n_cand = 5;
    int n_rep = 2;
    MoveConfig moves;
    double mutation_sigma = 0.1;
    double init_share_noise = 0.25;
    std::size_t archive_cap = 200;
    double trace_interval_s = 0.5;
    SearchBudget budget;
    std::uint64_t seed = 0;
    SearchHooks hooks;
};

/// The hybrid optimizer for one epoch: self-guided local search feeding a
/// collaborative decomposition EA over a shared population.
EpochResult optimize_epoch(const Scenario& sc, int epoch, const MosaicConfig& cfg);

/// Throws Error(capacity) when the epoch's demand cannot be scheduled even
/// with capacity-proportional shares.
void require_feasible_epoch(const Scenario& sc, const EvalContext& ctx, int epoch);

} // namespace mosaic

#endif
