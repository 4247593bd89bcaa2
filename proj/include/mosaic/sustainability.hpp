#ifndef MOSAIC_SUSTAINABILITY_HPP
#define MOSAIC_SUSTAINABILITY_HPP

#include <span>
#include <vector>

#include "mosaic/decision.hpp"
#include "mosaic/scenario.hpp"
#include "mosaic/types.hpp"

namespace mosaic {

/// IT load in kW: active nodes at their workload's active power, the rest of
/// the inventory idling. Throws Error(capacity) if assignment exceeds
/// inventory.
double it_power_kw(const std::vector<NodeType>& node_types,
                   const std::vector<int>& inventory,
                   const NodeAssignment& assignment);

/// Whether a location runs free air cooling in the given local hour.
CoolingMode cooling_mode(const LocationFactors& factors, const FreeAirPolicy& policy,
                         int local_hour);

/// Mechanical: CRAC + chiller + support = 3 x P_IT / CoP. Free air: only the
/// fan fraction of the CRAC term remains.
double cooling_power_kw(double p_it_kw, const LocationFactors& factors,
                        CoolingMode mode, double fan_fraction);

/// Internal power conditioning overhead: 0.13 x P_IT.
double ipcs_power_kw(double p_it_kw);

struct WaterUsage {
    double v_e_l = 0.0;  // evaporative
    double v_b_l = 0.0;  // blowdown to wastewater facility
    double v_s_l = 0.0;  // source-based (generation)
    double total_l() const { return v_e_l + v_b_l + v_s_l; }
};

/// V_E = E_IT / H_water and V_B = V_E / (C - 1) in mechanical mode, both zero
/// under free air; V_S = total energy x EWIF in either mode.
WaterUsage water_usage(const PowerBreakdown& power, const LocationFactors& factors,
                       double epoch_hours, CoolingMode mode);

struct CarbonEmissions {
    double m_electricity_kg = 0.0;
    double m_water_kg = 0.0;
    double total_kg() const { return m_electricity_kg + m_water_kg; }
};

/// M_electricity = E_brown / CF; M_water = ((V_B + V_E) I_P + V_B I_W) / CF,
/// with CF in kWh generated per kg CO2.
CarbonEmissions carbon_emissions(double e_brown_kwh, double v_e_l, double v_b_l,
                                 const LocationFactors& factors);

struct CostResult {
    double cost_usd = 0.0;
    double e_brown_kwh = 0.0;
    double e_clean_kwh = 0.0;
    double premium_applied_kwh = 0.0;
    bool premium_clamped = false;  // requested more than was purchasable
};

/// Billing for one location-epoch: contracted energy at the contract price
/// (clean), the rest at the local TOU rate, plus the premium surcharge on the
/// requested clean-premium energy (also clean). Requesting premium where none
/// is offered throws Error(infeasible); requesting more than purchasable is
/// clamped and flagged.
CostResult energy_cost(double total_energy_kwh, const PriceSchedule& schedule,
                       int local_hour, double clean_premium_kwh);

struct DatacenterEval {
    PowerBreakdown power;
    CoolingMode mode = CoolingMode::mechanical;
    WaterUsage water;
    CarbonEmissions carbon;
    CostResult cost;
};

struct EvalDiagnostics {
    int premium_clamped_locations = 0;
};

/// Full model composition for one (scenario, epoch, plan): tier-2 scheduling
/// then power, cost, water, carbon at every datacenter. Pure and
/// deterministic; throws Error(capacity) for unschedulable plans.
ObjectiveVector evaluate_plan(const Scenario& sc, const EvalContext& ctx, int epoch,
                              const DistributionPlan& plan,
                              EvalDiagnostics* diag = nullptr);

/// Same as evaluate_plan but keeps the per-datacenter breakdown.
std::vector<DatacenterEval> evaluate_plan_detailed(const Scenario& sc, const EvalContext& ctx,
                                                   int epoch, const DistributionPlan& plan,
                                                   ObjectiveVector* totals = nullptr);

} // namespace mosaic

#endif
