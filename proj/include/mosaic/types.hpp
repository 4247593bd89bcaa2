#ifndef MOSAIC_TYPES_HPP
#define MOSAIC_TYPES_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace mosaic {

/// A server SKU. Active power and throughput are indexed by workload type
/// (same order as Scenario::demand.workload_types).
struct NodeType {
    std::string id;
    int core_count = 1;
    double idle_power_w = 0.0;
    std::vector<double> active_power_w;     // per workload type, fixed P-state
    std::vector<double> throughput_jobs_h;  // per workload type
};

struct WeatherPoint {
    double outdoor_temp_c = 20.0;
    double dew_point_c = 10.0;
};

/// Geography- and time-based environmental factors of one location.
struct LocationFactors {
    double ewif_l_per_kwh = 0.0;             // energy water intensity factor
    double carbon_factor_kwh_per_kg = 1.0;   // kWh generated per kg CO2 emitted
    double cop = 4.0;                        // coefficient of performance
    double water_latent_heat_kwh_per_l = 0.66;
    double concentration_cycles = 5.0;       // > 1
    double potable_intensity_kwh_per_l = 550e-6;
    double wastewater_intensity_kwh_per_l = 640e-6;
    bool free_air_cooling = false;
    std::vector<WeatherPoint> weather;       // one entry per local hour (24)
};

struct AnnualContract {
    double price_usd_per_kwh = 0.15;
    double contracted_kwh_per_epoch = 0.0;
};

struct PriceSchedule {
    std::vector<double> tou_usd_per_kwh;                 // 24 entries, local hours
    std::optional<double> clean_premium_usd_per_kwh;
    std::optional<AnnualContract> annual_contract;
};

enum class CoolingMode { mechanical, free_air };

struct PowerBreakdown {
    double p_it_kw = 0.0;
    double p_cooling_kw = 0.0;
    double p_ipcs_kw = 0.0;
    double total_kw = 0.0;
    double e_brown_kwh = 0.0;
    double e_clean_kwh = 0.0;
};

/// One plan's score for one epoch: (energy cost, carbon, water), minimized.
struct ObjectiveVector {
    double cost_usd = 0.0;
    double carbon_kg = 0.0;
    double water_l = 0.0;

    double operator[](int i) const {
        return i == 0 ? cost_usd : (i == 1 ? carbon_kg : water_l);
    }

    bool finite() const {
        return std::isfinite(cost_usd) && std::isfinite(carbon_kg) && std::isfinite(water_l);
    }

    bool operator==(const ObjectiveVector& o) const {
        return cost_usd == o.cost_usd && carbon_kg == o.carbon_kg && water_l == o.water_l;
    }
};

} // namespace mosaic

#endif
