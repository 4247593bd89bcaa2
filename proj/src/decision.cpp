#include "mosaic/decision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

constexpr double kArrivalEps = 1e-9;

// Greedy list scheduling against a precomputed per-workload type order.
// Returns false instead of throwing so capacity probes stay cheap.
bool greedy_schedule(const std::vector<NodeType>& node_types, const std::vector<int>& inventory,
                  std::span<const double> arrival,
                  const std::vector<std::vector<int>>& order, NodeAssignment* out) {
    const int type_count = static_cast<int>(node_types.size());
    const int workloads = static_cast<int>(arrival.size());

    NodeAssignment asg;
    asg.active.assign(workloads, std::vector<int>(type_count, 0));
    asg.active_per_type.assign(type_count, 0);

    for (int j = 0; j < workloads; ++j) {
        double remaining = arrival[j];
        if (remaining < 0) return false;
        const double eps = kArrivalEps * std::max(1.0, arrival[j]);
        if (remaining <= eps) continue;
        for (int t : order[j]) {
            int avail = inventory[t] - asg.active_per_type[t];
            if (avail <= 0) continue;
            const double thpt = node_types[t].throughput_jobs_h[j];
            const double full = std::floor(remaining / thpt);
            int take = full >= avail ? avail : static_cast<int>(full);
            if (take > 0) {
                asg.active[j][t] += take;
                asg.active_per_type[t] += take;
                remaining -= take * thpt;
            }
            if (remaining > eps && take < avail) {
                // last node runs below full throughput
                asg.active[j][t] += 1;
                asg.active_per_type[t] += 1;
                remaining = 0.0;
            }
            if (remaining <= eps) break;
        }
        if (remaining > eps) return false;
    }
    if (out) *out = std::move(asg);
    return true;
}

std::vector<std::vector<int>> build_orders(const std::vector<NodeType>& node_types,
                                           int workloads) {
    std::vector<std::vector<int>> order(workloads);
    for (int j = 0; j < workloads; ++j) {
        std::vector<int>& o = order[j];
        o.resize(node_types.size());
        std::iota(o.begin(), o.end(), 0);
        std::sort(o.begin(), o.end(), [&](int a, int b) {
            double ea = node_types[a].active_power_w[j] / node_types[a].throughput_jobs_h[j];
            double eb = node_types[b].active_power_w[j] / node_types[b].throughput_jobs_h[j];
            if (ea != eb) return ea < eb;
            return node_types[a].id < node_types[b].id;
        });
    }
    return order;
}

} // namespace

std::vector<double> DistributionPlan::to_genome() const {
    std::vector<double> g;
    g.reserve(genome_size());
    g.insert(g.end(), shares.begin(), shares.end());
    g.insert(g.end(), premium_kwh.begin(), premium_kwh.end());
    return g;
}

EvalContext::EvalContext(const Scenario& sc) : scenario_(&sc) {
    const int workloads = sc.workload_count();
    order_ = build_orders(sc.node_types, workloads);

    const int dcs = sc.location_count();
    premium_cap_.resize(dcs);
    max_energy_.resize(dcs);
    for (int d = 0; d < dcs; ++d) {
        const Location& loc = sc.locations[d];
        double p_it_max_w = 0.0;
        for (std::size_t t = 0; t < sc.node_types.size(); ++t) {
            const NodeType& nt = sc.node_types[t];
            double ap_max = nt.idle_power_w;
            for (double ap : nt.active_power_w) ap_max = std::max(ap_max, ap);
            p_it_max_w += loc.inventory[t] * ap_max;
        }
        const double p_it_max_kw = p_it_max_w / 1000.0;
        const double overhead = 1.0 + 3.0 / loc.factors.cop + 0.13;
        max_energy_[d] = p_it_max_kw * overhead * sc.epoch_hours;
        premium_cap_[d] = loc.price.clean_premium_usd_per_kwh.has_value() ? max_energy_[d] : 0.0;
    }
}

double EvalContext::dc_mix_capacity(int d, std::span<const double> mix) const {
    const Scenario& sc = *scenario_;
    const Location& loc = sc.locations[d];
    const int workloads = sc.workload_count();

    double hi = 0.0;
    for (std::size_t t = 0; t < sc.node_types.size(); ++t) {
        double thpt_max = 0.0;
        for (double th : sc.node_types[t].throughput_jobs_h) thpt_max = std::max(thpt_max, th);
        hi += loc.inventory[t] * thpt_max;
    }
    if (hi <= 0.0) return 0.0;

    std::vector<double> arrival(workloads);
    auto feasible = [&](double rate) {
        for (int j = 0; j < workloads; ++j) arrival[j] = mix[j] * rate;
        return greedy_schedule(sc.node_types, loc.inventory, arrival, order_, nullptr);
    };

    if (feasible(hi)) return hi;
    double lo = 0.0;
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        if (feasible(mid)) lo = mid; else hi = mid;
    }
    return lo;
}

double EvalContext::fleet_mix_capacity(int epoch) const {
    const Scenario& sc = *scenario_;
    const int workloads = sc.workload_count();
    std::vector<double> mix(workloads, 0.0);
    double total = 0.0;
    for (int j = 0; j < workloads; ++j) total += sc.demand.gar_jobs_h[j][epoch];
    if (total <= 0.0) return std::numeric_limits<double>::infinity();
    for (int j = 0; j < workloads; ++j) mix[j] = sc.demand.gar_jobs_h[j][epoch] / total;

    double fleet = 0.0;
    for (int d = 0; d < sc.location_count(); ++d) fleet += dc_mix_capacity(d, mix);
    return fleet;
}

double EvalContext::subscription_rate(int epoch) const {
    const Scenario& sc = *scenario_;
    double total = 0.0;
    for (int j = 0; j < sc.workload_count(); ++j) total += sc.demand.gar_jobs_h[j][epoch];
    if (total <= 0.0) return 0.0;
    return total / fleet_mix_capacity(epoch);
}

std::vector<double> EvalContext::capacity_shares(int epoch) const {
    const Scenario& sc = *scenario_;
    const int dcs = sc.location_count();
    const int workloads = sc.workload_count();

    std::vector<double> mix(workloads, 0.0);
    double total = 0.0;
    for (int j = 0; j < workloads; ++j) total += sc.demand.gar_jobs_h[j][epoch];
    std::vector<double> shares(dcs, 0.0);
    if (total <= 0.0) {
        std::fill(shares.begin(), shares.end(), 1.0 / dcs);
        return shares;
    }
    for (int j = 0; j < workloads; ++j) mix[j] = sc.demand.gar_jobs_h[j][epoch] / total;

    double fleet = 0.0;
    for (int d = 0; d < dcs; ++d) {
        shares[d] = dc_mix_capacity(d, mix);
        fleet += shares[d];
    }
    if (fleet <= 0.0) {
        std::fill(shares.begin(), shares.end(), 1.0 / dcs);
        return shares;
    }
    for (double& s : shares) s /= fleet;
    return shares;
}

bool EvalContext::try_schedule(int d, std::span<const double> arrival_jobs_h,
                               NodeAssignment* out) const {
    const Scenario& sc = *scenario_;
    return greedy_schedule(sc.node_types, sc.locations[d].inventory, arrival_jobs_h, order_,
                                out);
}

NodeAssignment local_schedule(const std::vector<NodeType>& node_types,
                              const std::vector<int>& inventory,
                              std::span<const double> arrival_jobs_h) {
    if (inventory.size() != node_types.size())
        fail(ErrorCode::invalid_argument, "local_schedule: inventory size does not match node types");
    for (const NodeType& nt : node_types) {
        if (nt.active_power_w.size() != arrival_jobs_h.size() ||
            nt.throughput_jobs_h.size() != arrival_jobs_h.size())
            fail(ErrorCode::invalid_argument,
                 "local_schedule: node type '" + nt.id + "' lacks per-workload tables");
    }
    auto order = build_orders(node_types, static_cast<int>(arrival_jobs_h.size()));
    NodeAssignment asg;
    if (!greedy_schedule(node_types, inventory, arrival_jobs_h, order, &asg))
        fail(ErrorCode::capacity, "local_schedule: arrival exceeds datacenter capacity");
    return asg;
}

DistributionPlan repair(std::span<const double> raw_shares, std::span<const double> raw_premium,
                        const EvalContext& ctx) {
    const Scenario& sc = ctx.scenario();
    const int dcs = sc.location_count();
    const int workloads = sc.workload_count();
    if (raw_shares.size() != static_cast<std::size_t>(dcs) * workloads ||
        raw_premium.size() != static_cast<std::size_t>(dcs))
        fail(ErrorCode::invalid_argument, "repair: gene vector size mismatch");

    DistributionPlan plan;
    plan.datacenters = dcs;
    plan.workloads = workloads;
    plan.shares.assign(raw_shares.begin(), raw_shares.end());
    plan.premium_kwh.assign(raw_premium.begin(), raw_premium.end());

    for (double& s : plan.shares)
        if (!(s > 0.0)) s = 0.0;  // also catches NaN

    for (int j = 0; j < workloads; ++j) {
        double sum = 0.0;
        for (int d = 0; d < dcs; ++d) sum += plan.share(d, j);
        if (sum < 1e-100) {
            for (int d = 0; d < dcs; ++d) plan.share(d, j) = 1.0 / dcs;
        } else if (std::abs(sum - 1.0) > 1e-12) {
            for (int d = 0; d < dcs; ++d) plan.share(d, j) /= sum;
        }
        // columns already summing to 1 within 1e-12 are left untouched,
        // which makes repair exactly idempotent
    }

    for (int d = 0; d < dcs; ++d) {
        double& p = plan.premium_kwh[d];
        const double cap = ctx.premium_cap_kwh(d);
        if (!(p > 0.0)) p = 0.0;
        if (p > cap) p = cap;
    }
    return plan;
}

DistributionPlan plan_from_genome(std::span<const double> genome, const EvalContext& ctx) {
    const std::size_t dcs = ctx.scenario().locations.size();
    const std::size_t share_genes = dcs * ctx.scenario().workload_count();
    if (genome.size() != share_genes + dcs)
        fail(ErrorCode::invalid_argument, "plan_from_genome: genome size mismatch");
    return repair(genome.subspan(0, share_genes), genome.subspan(share_genes), ctx);
}

bool conservation_check(const DistributionPlan& plan, const WorkloadDemand& demand, int epoch,
                        double rel_tol) {
    const int workloads = static_cast<int>(demand.workload_types.size());
    if (plan.workloads != workloads) return false;
    for (int j = 0; j < workloads; ++j) {
        const double gar = demand.gar_jobs_h[j][epoch];
        double ar_sum = 0.0;
        for (int d = 0; d < plan.datacenters; ++d) ar_sum += plan.share(d, j) * gar;
        if (std::abs(ar_sum - gar) > rel_tol * std::max(std::abs(gar), 1e-300)) return false;
    }
    return true;
}

DistributionPlan random_plan(const EvalContext& ctx, int epoch, Rng& rng, double share_noise) {
    const Scenario& sc = ctx.scenario();
    const int dcs = sc.location_count();
    const int workloads = sc.workload_count();

    const std::vector<double> cap_shares = ctx.capacity_shares(epoch);
    const double r = std::min(1.0, ctx.subscription_rate(epoch));
    const double sigma = share_noise * std::min(1.0, 2.0 * (1.0 - r));

    std::vector<double> shares(static_cast<std::size_t>(dcs) * workloads);
    for (int d = 0; d < dcs; ++d)
        for (int j = 0; j < workloads; ++j)
            shares[static_cast<std::size_t>(d) * workloads + j] =
                cap_shares[d] * std::exp(sigma * rng.normal());

    std::vector<double> premium(dcs);
    for (int d = 0; d < dcs; ++d) premium[d] = rng.uniform() * ctx.premium_cap_kwh(d);

    return repair(shares, premium, ctx);
}

} // namespace mosaic
