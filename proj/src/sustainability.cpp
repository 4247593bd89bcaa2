#include "mosaic/sustainability.hpp"

#include <cmath>
#include <string>

#include "mosaic/errors.hpp"

namespace mosaic {

double it_power_kw(const std::vector<NodeType>& node_types, const std::vector<int>& inventory,
                   const NodeAssignment& assignment) {
    const std::size_t type_count = node_types.size();
    if (inventory.size() != type_count || assignment.active_per_type.size() != type_count)
        fail(ErrorCode::invalid_argument, "it_power: inventory/assignment size mismatch");

    for (std::size_t t = 0; t < type_count; ++t) {
        if (assignment.active_per_type[t] > inventory[t])
            fail(ErrorCode::capacity,
                 "it_power: active nodes of type '" + node_types[t].id + "' exceed inventory");
    }

    double active_w = 0.0;
    for (std::size_t j = 0; j < assignment.active.size(); ++j)
        for (std::size_t t = 0; t < type_count; ++t)
            active_w += assignment.active[j][t] * node_types[t].active_power_w[j];

    double idle_w = 0.0;
    for (std::size_t t = 0; t < type_count; ++t)
        idle_w += (inventory[t] - assignment.active_per_type[t]) * node_types[t].idle_power_w;

    return (active_w + idle_w) / 1000.0;
}

CoolingMode cooling_mode(const LocationFactors& factors, const FreeAirPolicy& policy,
                         int local_hour) {
    if (!factors.free_air_cooling) return CoolingMode::mechanical;
    const WeatherPoint& w = factors.weather[local_hour];
    const bool ok = w.outdoor_temp_c <= policy.max_outdoor_temp_c &&
                    w.dew_point_c >= policy.dew_point_min_c &&
                    w.dew_point_c <= policy.dew_point_max_c;
    return ok ? CoolingMode::free_air : CoolingMode::mechanical;
}

double cooling_power_kw(double p_it_kw, const LocationFactors& factors, CoolingMode mode,
                        double fan_fraction) {
    if (p_it_kw < 0) fail(ErrorCode::invalid_argument, "cooling_power: negative IT power");
    if (factors.cop <= 0) fail(ErrorCode::config, "cooling_power: CoP must be positive");
    const double p_crac = p_it_kw / factors.cop;
    return mode == CoolingMode::mechanical ? 3.0 * p_crac : fan_fraction * p_crac;
}

double ipcs_power_kw(double p_it_kw) {
    if (p_it_kw < 0) fail(ErrorCode::invalid_argument, "ipcs_power: negative IT power");
    return 0.13 * p_it_kw;
}

WaterUsage water_usage(const PowerBreakdown& power, const LocationFactors& factors,
                       double epoch_hours, CoolingMode mode) {
    if (epoch_hours <= 0) fail(ErrorCode::config, "water_usage: epoch_hours must be positive");

    WaterUsage w;
    if (mode == CoolingMode::mechanical) {
        if (factors.water_latent_heat_kwh_per_l <= 0)
            fail(ErrorCode::config, "water_usage: water latent heat must be positive");
        if (factors.concentration_cycles <= 1.0)
            fail(ErrorCode::config, "water_usage: concentration cycles must exceed 1");
        const double e_it_kwh = power.p_it_kw * epoch_hours;
        w.v_e_l = e_it_kwh / factors.water_latent_heat_kwh_per_l;
        w.v_b_l = w.v_e_l / (factors.concentration_cycles - 1.0);
    }
    w.v_s_l = power.total_kw * epoch_hours * factors.ewif_l_per_kwh;
    return w;
}

CarbonEmissions carbon_emissions(double e_brown_kwh, double v_e_l, double v_b_l,
                                 const LocationFactors& factors) {
    if (factors.carbon_factor_kwh_per_kg <= 0)
        fail(ErrorCode::config, "carbon_emissions: carbon factor must be positive");
    CarbonEmissions c;
    c.m_electricity_kg = e_brown_kwh / factors.carbon_factor_kwh_per_kg;
    c.m_water_kg = ((v_b_l + v_e_l) * factors.potable_intensity_kwh_per_l +
                    v_b_l * factors.wastewater_intensity_kwh_per_l) /
                   factors.carbon_factor_kwh_per_kg;
    return c;
}

CostResult energy_cost(double total_energy_kwh, const PriceSchedule& schedule, int local_hour,
                       double clean_premium_kwh) {
    if (total_energy_kwh < 0)
        fail(ErrorCode::invalid_argument, "energy_cost: negative epoch energy");
    if (clean_premium_kwh < 0)
        fail(ErrorCode::invalid_argument, "energy_cost: negative clean premium request");

    CostResult r;
    double contracted = 0.0;
    if (schedule.annual_contract) {
        contracted = std::min(total_energy_kwh, schedule.annual_contract->contracted_kwh_per_epoch);
        r.cost_usd += contracted * schedule.annual_contract->price_usd_per_kwh;
    }
    const double remainder = total_energy_kwh - contracted;
    r.cost_usd += remainder * schedule.tou_usd_per_kwh[local_hour];

    if (clean_premium_kwh > 0 && !schedule.clean_premium_usd_per_kwh)
        fail(ErrorCode::infeasible, "energy_cost: clean premium requested where none is offered");

    if (schedule.clean_premium_usd_per_kwh) {
        r.premium_applied_kwh = std::min(clean_premium_kwh, remainder);
        r.premium_clamped = clean_premium_kwh > remainder;
        r.cost_usd += r.premium_applied_kwh * *schedule.clean_premium_usd_per_kwh;
    }

    r.e_clean_kwh = contracted + r.premium_applied_kwh;
    r.e_brown_kwh = total_energy_kwh - r.e_clean_kwh;
    return r;
}

std::vector<DatacenterEval> evaluate_plan_detailed(const Scenario& sc, const EvalContext& ctx,
                                                   int epoch, const DistributionPlan& plan,
                                                   ObjectiveVector* totals) {
    const int dcs = sc.location_count();
    const int workloads = sc.workload_count();
    if (plan.datacenters != dcs || plan.workloads != workloads)
        fail(ErrorCode::invalid_argument, "evaluate_plan: plan shape does not match scenario");
    if (epoch < 0 || epoch >= sc.epoch_count())
        fail(ErrorCode::invalid_argument, "evaluate_plan: epoch out of range");

    std::vector<DatacenterEval> evals(dcs);
    ObjectiveVector sum;
    std::vector<double> arrival(workloads);

    for (int d = 0; d < dcs; ++d) {
        const Location& loc = sc.locations[d];
        if (plan.premium_kwh[d] > 0 && !loc.price.clean_premium_usd_per_kwh)
            fail(ErrorCode::infeasible,
                 "plan requests clean premium at location '" + loc.name + "' without an offering");

        for (int j = 0; j < workloads; ++j)
            arrival[j] = plan.share(d, j) * sc.demand.gar_jobs_h[j][epoch];

        NodeAssignment asg;
        if (!ctx.try_schedule(d, arrival, &asg))
            fail(ErrorCode::capacity, "datacenter '" + loc.name + "' oversubscribed at epoch " +
                                          std::to_string(epoch));

        DatacenterEval& ev = evals[d];
        const int hour = sc.local_hour(d, epoch);
        ev.mode = cooling_mode(loc.factors, sc.free_air, hour);

        ev.power.p_it_kw = it_power_kw(sc.node_types, loc.inventory, asg);
        ev.power.p_cooling_kw =
            cooling_power_kw(ev.power.p_it_kw, loc.factors, ev.mode, sc.free_air.fan_fraction);
        ev.power.p_ipcs_kw = ipcs_power_kw(ev.power.p_it_kw);
        ev.power.total_kw = ev.power.p_it_kw + ev.power.p_cooling_kw + ev.power.p_ipcs_kw;

        const double total_kwh = ev.power.total_kw * sc.epoch_hours;
        ev.cost = energy_cost(total_kwh, loc.price, hour, plan.premium_kwh[d]);
        ev.power.e_brown_kwh = ev.cost.e_brown_kwh;
        ev.power.e_clean_kwh = ev.cost.e_clean_kwh;

        ev.water = water_usage(ev.power, loc.factors, sc.epoch_hours, ev.mode);
        ev.carbon = carbon_emissions(ev.cost.e_brown_kwh, ev.water.v_e_l, ev.water.v_b_l,
                                     loc.factors);

        sum.cost_usd += ev.cost.cost_usd;
        sum.carbon_kg += ev.carbon.total_kg();
        sum.water_l += ev.water.total_l();
    }
    if (totals) *totals = sum;
    return evals;
}

ObjectiveVector evaluate_plan(const Scenario& sc, const EvalContext& ctx, int epoch,
                              const DistributionPlan& plan, EvalDiagnostics* diag) {
    ObjectiveVector totals;
    auto evals = evaluate_plan_detailed(sc, ctx, epoch, plan, &totals);
    if (diag) {
        for (const DatacenterEval& ev : evals)
            if (ev.cost.premium_clamped) ++diag->premium_clamped_locations;
    }
    return totals;
}

} // namespace mosaic
