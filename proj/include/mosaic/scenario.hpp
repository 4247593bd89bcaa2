#ifndef MOSAIC_SCENARIO_HPP
#define MOSAIC_SCENARIO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mosaic/types.hpp"

namespace mosaic {

/// Feasibility envelope and fan power for free air cooling. Applies to every
/// location whose factors set free_air_cooling.
struct FreeAirPolicy {
    double max_outdoor_temp_c = 27.0;
    double dew_point_min_c = -9.0;
    double dew_point_max_c = 15.0;
    double fan_fraction = 0.15;  // of P_CRAC, replacing the 3x mechanical stack
};

struct Location {
    std::string name;
    int timezone_offset_hours = 0;   // local = UTC + offset
    LocationFactors factors;
    PriceSchedule price;
    std::vector<int> inventory;      // node count per node type index
};

/// Global demand: arrival rate per workload type and epoch (UTC hours).
struct WorkloadDemand {
    std::vector<std::string> workload_types;
    std::vector<std::vector<double>> gar_jobs_h;  // [workload][epoch]
};

struct Scenario {
    int schema_version = 1;
    std::string name;
    double epoch_hours = 1.0;
    FreeAirPolicy free_air;
    std::vector<NodeType> node_types;
    std::vector<Location> locations;
    WorkloadDemand demand;

    int epoch_count() const {
        return demand.gar_jobs_h.empty() ? 0 : static_cast<int>(demand.gar_jobs_h[0].size());
    }
    int location_count() const { return static_cast<int>(locations.size()); }
    int workload_count() const { return static_cast<int>(demand.workload_types.size()); }

    int local_hour(int location, int epoch) const {
        int h = (epoch + locations[location].timezone_offset_hours) % 24;
        return h < 0 ? h + 24 : h;
    }
};

/// Throws Error(validation) naming the offending field path.
void validate_scenario(const Scenario& sc);

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string scenario_to_json(const Scenario& sc);
void save_scenario(const Scenario& sc, const std::string& path);

bool scenario_equal(const Scenario& a, const Scenario& b);

/// Synthetic-scenario generator. Factor ranges follow published US data:
/// TOU 1.8-48 c/kWh, clean premium 0.39-144 c/kWh, annual contract 15 c/kWh
/// at exactly one location, CoP 3.74-5.73, EWIF 0-3.97 L/kWh.
struct GenerateSpec {
    int datacenters = 16;
    int node_types = 3;
    int workload_types = 5;
    std::uint64_t seed = 1;
    double subscription = 0.5;   // of fleet mix capacity, see fleet_mix_capacity
    bool diurnal = false;        // flat demand profile when false
};

Scenario generate_scenario(const GenerateSpec& spec);

/// Rescales demand so that peak-epoch subscription equals r (exact for flat
/// profiles, which hold every epoch at r).
void set_subscription(Scenario& sc, double r);

} // namespace mosaic

#endif
