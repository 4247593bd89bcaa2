#ifndef MOSAIC_DECISION_HPP
#define MOSAIC_DECISION_HPP

#include <span>
#include <vector>

#include "mosaic/rng.hpp"
#include "mosaic/scenario.hpp"

namespace mosaic {

/// The genome: tier-1 workload split plus per-location clean-premium buys.
/// shares[d][j] is the fraction of workload j's global arrival rate sent to
/// datacenter d; each workload column sums to 1 after repair.
struct DistributionPlan {
    int datacenters = 0;
    int workloads = 0;
    std::vector<double> shares;       // row-major [d * workloads + j]
    std::vector<double> premium_kwh;  // per datacenter

    double share(int d, int j) const { return shares[static_cast<std::size_t>(d) * workloads + j]; }
    double& share(int d, int j) { return shares[static_cast<std::size_t>(d) * workloads + j]; }

    std::size_t genome_size() const { return shares.size() + premium_kwh.size(); }
    std::vector<double> to_genome() const;

    bool operator==(const DistributionPlan& o) const = default;
};

/// Tier-2 result at one datacenter: active node counts per (workload, type).
struct NodeAssignment {
    std::vector<std::vector<int>> active;  // [workload][node type]
    std::vector<int> active_per_type;      // summed over workloads
};

/// Immutable per-scenario precomputation shared by all evaluations:
/// scheduling order, premium gene bounds, and greedy capacity estimates.
class EvalContext {
public:
    explicit EvalContext(const Scenario& sc);

    const Scenario& scenario() const { return *scenario_; }

    /// Node type indices sorted by energy-per-job for this workload
    /// (AP/throughput ascending, ties by node type id).
    const std::vector<int>& schedule_order(int workload) const { return order_[workload]; }

    /// Static upper bound for the premium gene: the location's maximum
    /// possible epoch energy, or 0 where no premium is offered.
    double premium_cap_kwh(int d) const { return premium_cap_[d]; }

    /// Maximum epoch energy of a location (all nodes active at peak power).
    double max_epoch_energy_kwh(int d) const { return max_energy_[d]; }

    /// Largest total job rate of the given workload mix that datacenter d can
    /// schedule (mix components sum to 1). Found by bisection on the greedy
    /// scheduler, which is monotone in rate.
    double dc_mix_capacity(int d, std::span<const double> mix) const;

    /// Sum of dc_mix_capacity over datacenters for the mix of one epoch.
    double fleet_mix_capacity(int epoch) const;

    /// Fraction of fleet mix capacity demanded in one epoch.
    double subscription_rate(int epoch) const;

    /// Per-datacenter capacity fractions for the epoch's mix; the witness
    /// plan used for feasibility checks and search initialization.
    std::vector<double> capacity_shares(int epoch) const;

    /// Greedy schedule at datacenter d using the precomputed order; false if
    /// the arrival cannot be placed.
    bool try_schedule(int d, std::span<const double> arrival_jobs_h, NodeAssignment* out) const;

private:
    const Scenario* scenario_;
    std::vector<std::vector<int>> order_;  // [workload] -> type indices
    std::vector<double> premium_cap_;
    std::vector<double> max_energy_;
};

/// Greedy list scheduling: cheapest energy-per-job node types first, last
/// node per workload rounded up. Throws Error(capacity) when arrival exceeds
/// what the inventory can absorb.
NodeAssignment local_schedule(const std::vector<NodeType>& node_types,
                              const std::vector<int>& inventory,
                              std::span<const double> arrival_jobs_h);

/// Total function from raw gene values to a feasible-by-construction plan:
/// negative genes clamped to 0, share columns renormalized (uniform 1/D for
/// all-zero columns), premiums clamped to [0, premium_cap].
DistributionPlan repair(std::span<const double> raw_shares,
                        std::span<const double> raw_premium,
                        const EvalContext& ctx);

DistributionPlan plan_from_genome(std::span<const double> genome, const EvalContext& ctx);

/// True iff sum_d AR_{d,j} matches GAR_j within rel_tol for all workloads.
bool conservation_check(const DistributionPlan& plan, const WorkloadDemand& demand,
                        int epoch, double rel_tol = 1e-9);

/// Random feasible-ish plan: capacity-proportional shares with multiplicative
/// noise scaled by subscription headroom, premiums uniform in their box.
DistributionPlan random_plan(const EvalContext& ctx, int epoch, Rng& rng,
                             double share_noise = 0.25);

} // namespace mosaic

#endif
