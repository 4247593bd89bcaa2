#include "mosaic/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mosaic/decision.hpp"
#include "mosaic/errors.hpp"
#include "mosaic/rng.hpp"

namespace mosaic {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
    fail(ErrorCode::validation, path + ": " + msg);
}

const json& require_field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) bad(path + "." + key, "missing required field");
    return *it;
}

double require_number(const json& j, const char* key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number()) bad(path + "." + key, "expected a number");
    return v.get<double>();
}

int require_int(const json& j, const char* key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
    return v.get<int>();
}

std::string require_string(const json& j, const char* key, const std::string& path) {
    const json& v = require_field(j, key, path);
    if (!v.is_string()) bad(path + "." + key, "expected a string");
    return v.get<std::string>();
}

std::vector<double> require_number_array(const json& j, const char* key, const std::string& path,
                                         int expected = -1) {
    const json& v = require_field(j, key, path);
    if (!v.is_array()) bad(path + "." + key, "expected an array");
    std::vector<double> out;
    for (const auto& e : v) {
        if (!e.is_number()) bad(path + "." + key, "expected numeric entries");
        out.push_back(e.get<double>());
    }
    if (expected >= 0 && static_cast<int>(out.size()) != expected)
        bad(path + "." + key, "expected " + std::to_string(expected) + " entries, got " +
                                  std::to_string(out.size()));
    return out;
}

std::vector<double> workload_map(const json& j, const char* key, const std::string& path,
                                 const std::vector<std::string>& workloads) {
    const json& v = require_field(j, key, path);
    if (!v.is_object()) bad(path + "." + key, "expected a map keyed by workload type");
    std::vector<double> out(workloads.size());
    for (std::size_t i = 0; i < workloads.size(); ++i) {
        auto it = v.find(workloads[i]);
        if (it == v.end())
            bad(path + "." + key, "missing workload type '" + workloads[i] + "'");
        if (!it->is_number()) bad(path + "." + key + "." + workloads[i], "expected a number");
        out[i] = it->get<double>();
    }
    if (v.size() != workloads.size())
        bad(path + "." + key, "contains workload types not declared in workload_types");
    return out;
}

} // namespace

void validate_scenario(const Scenario& sc) {
    if (sc.schema_version != 1)
        bad("schema_version", "unsupported version " + std::to_string(sc.schema_version));
    if (!(sc.epoch_hours > 0)) bad("epoch_hours", "must be positive");
    if (sc.node_types.empty()) bad("node_types", "at least one node type required");
    if (sc.locations.empty()) bad("locations", "at least one location required");
    if (sc.demand.workload_types.empty()) bad("workload_types", "at least one workload required");

    const std::size_t workloads = sc.demand.workload_types.size();
    {
        std::set<std::string> seen;
        for (const auto& w : sc.demand.workload_types)
            if (!seen.insert(w).second) bad("workload_types", "duplicate workload type '" + w + "'");
    }

    std::set<std::string> node_ids;
    for (std::size_t t = 0; t < sc.node_types.size(); ++t) {
        const NodeType& nt = sc.node_types[t];
        const std::string path = "node_types[" + std::to_string(t) + "]";
        if (nt.id.empty()) bad(path + ".id", "must be nonempty");
        if (!node_ids.insert(nt.id).second) bad(path + ".id", "duplicate node type '" + nt.id + "'");
        if (nt.core_count < 1) bad(path + ".core_count", "must be >= 1");
        if (!(nt.idle_power_w > 0)) bad(path + ".idle_power_w", "must be positive");
        if (nt.active_power_w.size() != workloads)
            bad(path + ".active_power_w", "must cover every workload type");
        if (nt.throughput_jobs_h.size() != workloads)
            bad(path + ".throughput_jobs_per_hour", "must cover every workload type");
        for (std::size_t j = 0; j < workloads; ++j) {
            if (nt.active_power_w[j] < nt.idle_power_w)
                bad(path + ".active_power_w." + sc.demand.workload_types[j],
                    "active power below idle power");
            if (!(nt.throughput_jobs_h[j] > 0))
                bad(path + ".throughput_jobs_per_hour." + sc.demand.workload_types[j],
                    "must be positive");
        }
    }

    for (std::size_t d = 0; d < sc.locations.size(); ++d) {
        const Location& loc = sc.locations[d];
        const std::string path = "locations[" + std::to_string(d) + "]";
        if (loc.name.empty()) bad(path + ".name", "must be nonempty");
        if (loc.timezone_offset_hours < -12 || loc.timezone_offset_hours > 14)
            bad(path + ".timezone_offset_hours", "must lie in [-12, 14]");
        if (loc.inventory.size() != sc.node_types.size())
            bad(path + ".inventory", "must cover every node type");
        for (std::size_t t = 0; t < loc.inventory.size(); ++t)
            if (loc.inventory[t] < 0) bad(path + ".inventory." + sc.node_types[t].id, "negative count");

        const LocationFactors& f = loc.factors;
        const std::string fp = path + ".factors";
        if (f.ewif_l_per_kwh < 0) bad(fp + ".ewif_l_per_kwh", "must be >= 0");
        if (!(f.carbon_factor_kwh_per_kg > 0)) bad(fp + ".carbon_factor_kwh_per_kg", "must be positive");
        if (f.cop < 3.0 || f.cop > 7.0) bad(fp + ".cop", "must lie in [3.0, 7.0]");
        if (!(f.water_latent_heat_kwh_per_l > 0))
            bad(fp + ".water_latent_heat_kwh_per_l", "must be positive");
        if (!(f.concentration_cycles > 1.0))
            bad(fp + ".concentration_cycles", "must exceed 1");
        if (f.potable_intensity_kwh_per_l < 0) bad(fp + ".potable_intensity_kwh_per_l", "must be >= 0");
        if (f.wastewater_intensity_kwh_per_l < 0)
            bad(fp + ".wastewater_intensity_kwh_per_l", "must be >= 0");
        if (f.weather.size() != 24)
            bad(fp + ".weather", "expected 24 entries, got " + std::to_string(f.weather.size()) +
                                     " (location '" + loc.name + "')");

        const PriceSchedule& p = loc.price;
        const std::string pp = path + ".price";
        if (p.tou_usd_per_kwh.size() != 24)
            bad(pp + ".tou_usd_per_kwh", "expected 24 entries, got " +
                                             std::to_string(p.tou_usd_per_kwh.size()) +
                                             " (location '" + loc.name + "')");
        for (double v : p.tou_usd_per_kwh)
            if (v < 0) bad(pp + ".tou_usd_per_kwh", "negative price");
        if (p.clean_premium_usd_per_kwh && *p.clean_premium_usd_per_kwh < 0)
            bad(pp + ".clean_premium_usd_per_kwh", "negative price");
        if (p.annual_contract) {
            if (p.annual_contract->price_usd_per_kwh < 0)
                bad(pp + ".annual_contract.price_usd_per_kwh", "negative price");
            if (p.annual_contract->contracted_kwh_per_epoch < 0)
                bad(pp + ".annual_contract.contracted_kwh_per_epoch", "must be >= 0");
        }
    }

    const int epochs = sc.epoch_count();
    if (epochs < 1) bad("demand.gar_jobs_per_hour", "at least one epoch required");
    for (std::size_t j = 0; j < workloads; ++j) {
        const std::string path = "demand.gar_jobs_per_hour." + sc.demand.workload_types[j];
        if (static_cast<int>(sc.demand.gar_jobs_h[j].size()) != epochs)
            bad(path, "epoch count differs across workload types");
        for (double v : sc.demand.gar_jobs_h[j])
            if (v < 0 || !std::isfinite(v)) bad(path, "arrival rates must be finite and >= 0");
    }
}

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        fail(ErrorCode::parse, std::string("scenario JSON: ") + e.what());
    }
    if (!j.is_object()) fail(ErrorCode::parse, "scenario JSON: top level must be an object");

    Scenario sc;
    sc.schema_version = require_int(j, "schema_version", "$");
    sc.name = j.contains("name") ? require_string(j, "name", "$") : "";
    sc.epoch_hours = require_number(j, "epoch_hours", "$");

    if (j.contains("free_air")) {
        const json& fa = j["free_air"];
        sc.free_air.max_outdoor_temp_c = require_number(fa, "max_outdoor_temp_c", "free_air");
        sc.free_air.dew_point_min_c = require_number(fa, "dew_point_min_c", "free_air");
        sc.free_air.dew_point_max_c = require_number(fa, "dew_point_max_c", "free_air");
        sc.free_air.fan_fraction = require_number(fa, "fan_fraction", "free_air");
    }

    const json& wl = require_field(j, "workload_types", "$");
    if (!wl.is_array() || wl.empty()) bad("workload_types", "expected a nonempty array");
    for (const auto& w : wl) {
        if (!w.is_string()) bad("workload_types", "expected strings");
        sc.demand.workload_types.push_back(w.get<std::string>());
    }

    const json& nts = require_field(j, "node_types", "$");
    if (!nts.is_array() || nts.empty()) bad("node_types", "expected a nonempty array");
    for (std::size_t t = 0; t < nts.size(); ++t) {
        const std::string path = "node_types[" + std::to_string(t) + "]";
        const json& n = nts[t];
        NodeType nt;
        nt.id = require_string(n, "id", path);
        nt.core_count = require_int(n, "core_count", path);
        nt.idle_power_w = require_number(n, "idle_power_w", path);
        nt.active_power_w = workload_map(n, "active_power_w", path, sc.demand.workload_types);
        nt.throughput_jobs_h =
            workload_map(n, "throughput_jobs_per_hour", path, sc.demand.workload_types);
        sc.node_types.push_back(std::move(nt));
    }

    const json& locs = require_field(j, "locations", "$");
    if (!locs.is_array() || locs.empty()) bad("locations", "expected a nonempty array");
    for (std::size_t d = 0; d < locs.size(); ++d) {
        const std::string path = "locations[" + std::to_string(d) + "]";
        const json& l = locs[d];
        Location loc;
        loc.name = require_string(l, "name", path);
        loc.timezone_offset_hours = require_int(l, "timezone_offset_hours", path);

        const json& f = require_field(l, "factors", path);
        const std::string fp = path + ".factors";
        loc.factors.ewif_l_per_kwh = require_number(f, "ewif_l_per_kwh", fp);
        loc.factors.carbon_factor_kwh_per_kg = require_number(f, "carbon_factor_kwh_per_kg", fp);
        loc.factors.cop = require_number(f, "cop", fp);
        loc.factors.water_latent_heat_kwh_per_l =
            require_number(f, "water_latent_heat_kwh_per_l", fp);
        loc.factors.concentration_cycles = require_number(f, "concentration_cycles", fp);
        loc.factors.potable_intensity_kwh_per_l =
            require_number(f, "potable_intensity_kwh_per_l", fp);
        loc.factors.wastewater_intensity_kwh_per_l =
            require_number(f, "wastewater_intensity_kwh_per_l", fp);
        const json& fac = require_field(f, "free_air_cooling", fp);
        if (!fac.is_boolean()) bad(fp + ".free_air_cooling", "expected a boolean");
        loc.factors.free_air_cooling = fac.get<bool>();
        const json& weather = require_field(f, "weather", fp);
        if (!weather.is_array()) bad(fp + ".weather", "expected an array");
        for (const auto& wp : weather) {
            WeatherPoint w;
            w.outdoor_temp_c = require_number(wp, "outdoor_temp_c", fp + ".weather[]");
            w.dew_point_c = require_number(wp, "dew_point_c", fp + ".weather[]");
            loc.factors.weather.push_back(w);
        }

        const json& p = require_field(l, "price", path);
        const std::string pp = path + ".price";
        loc.price.tou_usd_per_kwh = require_number_array(p, "tou_usd_per_kwh", pp);
        if (p.contains("clean_premium_usd_per_kwh") && !p["clean_premium_usd_per_kwh"].is_null()) {
            if (!p["clean_premium_usd_per_kwh"].is_number())
                bad(pp + ".clean_premium_usd_per_kwh", "expected a number");
            loc.price.clean_premium_usd_per_kwh = p["clean_premium_usd_per_kwh"].get<double>();
        }
        if (p.contains("annual_contract") && !p["annual_contract"].is_null()) {
            const json& c = p["annual_contract"];
            AnnualContract ac;
            ac.price_usd_per_kwh = require_number(c, "price_usd_per_kwh", pp + ".annual_contract");
            ac.contracted_kwh_per_epoch =
                require_number(c, "contracted_kwh_per_epoch", pp + ".annual_contract");
            loc.price.annual_contract = ac;
        }

        const json& inv = require_field(l, "inventory", path);
        if (!inv.is_object()) bad(path + ".inventory", "expected a map keyed by node type id");
        loc.inventory.assign(sc.node_types.size(), 0);
        for (auto it = inv.begin(); it != inv.end(); ++it) {
            auto nt = std::find_if(sc.node_types.begin(), sc.node_types.end(),
                                   [&](const NodeType& n) { return n.id == it.key(); });
            if (nt == sc.node_types.end())
                bad(path + ".inventory", "unknown node type '" + it.key() + "'");
            if (!it->is_number_integer()) bad(path + ".inventory." + it.key(), "expected an integer");
            loc.inventory[nt - sc.node_types.begin()] = it->get<int>();
        }
        sc.locations.push_back(std::move(loc));
    }

    const json& demand = require_field(j, "demand", "$");
    const json& gar = require_field(demand, "gar_jobs_per_hour", "demand");
    if (!gar.is_object()) bad("demand.gar_jobs_per_hour", "expected a map keyed by workload type");
    sc.demand.gar_jobs_h.resize(sc.demand.workload_types.size());
    for (std::size_t w = 0; w < sc.demand.workload_types.size(); ++w) {
        const std::string& name = sc.demand.workload_types[w];
        auto it = gar.find(name);
        if (it == gar.end()) bad("demand.gar_jobs_per_hour", "missing workload type '" + name + "'");
        if (!it->is_array()) bad("demand.gar_jobs_per_hour." + name, "expected an array");
        for (const auto& v : *it) {
            if (!v.is_number()) bad("demand.gar_jobs_per_hour." + name, "expected numbers");
            sc.demand.gar_jobs_h[w].push_back(v.get<double>());
        }
    }

    validate_scenario(sc);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& sc) {
    json j;
    j["schema_version"] = sc.schema_version;
    if (!sc.name.empty()) j["name"] = sc.name;
    j["epoch_hours"] = sc.epoch_hours;
    j["free_air"] = {{"max_outdoor_temp_c", sc.free_air.max_outdoor_temp_c},
                     {"dew_point_min_c", sc.free_air.dew_point_min_c},
                     {"dew_point_max_c", sc.free_air.dew_point_max_c},
                     {"fan_fraction", sc.free_air.fan_fraction}};
    j["workload_types"] = sc.demand.workload_types;

    json nts = json::array();
    for (const NodeType& nt : sc.node_types) {
        json n;
        n["id"] = nt.id;
        n["core_count"] = nt.core_count;
        n["idle_power_w"] = nt.idle_power_w;
        json ap = json::object(), th = json::object();
        for (std::size_t w = 0; w < sc.demand.workload_types.size(); ++w) {
            ap[sc.demand.workload_types[w]] = nt.active_power_w[w];
            th[sc.demand.workload_types[w]] = nt.throughput_jobs_h[w];
        }
        n["active_power_w"] = ap;
        n["throughput_jobs_per_hour"] = th;
        nts.push_back(n);
    }
    j["node_types"] = nts;

    json locs = json::array();
    for (const Location& loc : sc.locations) {
        json l;
        l["name"] = loc.name;
        l["timezone_offset_hours"] = loc.timezone_offset_hours;
        json f;
        f["ewif_l_per_kwh"] = loc.factors.ewif_l_per_kwh;
        f["carbon_factor_kwh_per_kg"] = loc.factors.carbon_factor_kwh_per_kg;
        f["cop"] = loc.factors.cop;
        f["water_latent_heat_kwh_per_l"] = loc.factors.water_latent_heat_kwh_per_l;
        f["concentration_cycles"] = loc.factors.concentration_cycles;
        f["potable_intensity_kwh_per_l"] = loc.factors.potable_intensity_kwh_per_l;
        f["wastewater_intensity_kwh_per_l"] = loc.factors.wastewater_intensity_kwh_per_l;
        f["free_air_cooling"] = loc.factors.free_air_cooling;
        json weather = json::array();
        for (const WeatherPoint& w : loc.factors.weather)
            weather.push_back({{"outdoor_temp_c", w.outdoor_temp_c}, {"dew_point_c", w.dew_point_c}});
        f["weather"] = weather;
        l["factors"] = f;

        json p;
        p["tou_usd_per_kwh"] = loc.price.tou_usd_per_kwh;
        if (loc.price.clean_premium_usd_per_kwh)
            p["clean_premium_usd_per_kwh"] = *loc.price.clean_premium_usd_per_kwh;
        if (loc.price.annual_contract)
            p["annual_contract"] = {
                {"price_usd_per_kwh", loc.price.annual_contract->price_usd_per_kwh},
                {"contracted_kwh_per_epoch", loc.price.annual_contract->contracted_kwh_per_epoch}};
        l["price"] = p;

        json inv = json::object();
        for (std::size_t t = 0; t < loc.inventory.size(); ++t)
            inv[sc.node_types[t].id] = loc.inventory[t];
        l["inventory"] = inv;
        locs.push_back(l);
    }
    j["locations"] = locs;

    json gar = json::object();
    for (std::size_t w = 0; w < sc.demand.workload_types.size(); ++w)
        gar[sc.demand.workload_types[w]] = sc.demand.gar_jobs_h[w];
    j["demand"] = {{"gar_jobs_per_hour", gar}};

    return j.dump(2) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write scenario file '" + path + "'");
    out << scenario_to_json(sc);
    if (!out) fail(ErrorCode::io, "failed writing scenario file '" + path + "'");
}

bool scenario_equal(const Scenario& a, const Scenario& b) {
    return scenario_to_json(a) == scenario_to_json(b);
}

namespace {

const char* kWorkloadNames[] = {"lda", "kmeans", "naive-bayes", "img-to-text", "img-to-img"};
const char* kNodeNames[] = {"e3-1225v3", "e5649", "e5-2697v2"};
const int kNodeCores[] = {4, 12, 24};
const double kNodeIdleW[] = {30.0, 60.0, 95.0};

} // namespace

Scenario generate_scenario(const GenerateSpec& spec) {
    if (spec.datacenters < 1 || spec.node_types < 1 || spec.workload_types < 1)
        fail(ErrorCode::config, "generate_scenario: counts must be >= 1");
    if (!(spec.subscription > 0) || spec.subscription > 1.0)
        fail(ErrorCode::config, "generate_scenario: subscription must lie in (0, 1]");

    Rng rng(spec.seed);
    Scenario sc;
    sc.name = "synthetic-" + std::to_string(spec.datacenters) + "dc";
    sc.epoch_hours = 1.0;

    for (int w = 0; w < spec.workload_types; ++w) {
        sc.demand.workload_types.push_back(
            w < 5 ? kWorkloadNames[w] : "workload-" + std::to_string(w));
    }

    // synthetic power/throughput table; the SKU names are real, the numbers
    // are not published anywhere and are generated here
    for (int t = 0; t < spec.node_types; ++t) {
        NodeType nt;
        nt.id = t < 3 ? kNodeNames[t] : "node-" + std::to_string(t);
        nt.core_count = t < 3 ? kNodeCores[t] : 8 * (t + 1);
        nt.idle_power_w = t < 3 ? kNodeIdleW[t] : 40.0 + 20.0 * t;
        for (int w = 0; w < spec.workload_types; ++w) {
            nt.active_power_w.push_back(nt.idle_power_w + nt.core_count * rng.uniform(8.0, 20.0));
            nt.throughput_jobs_h.push_back(nt.core_count * rng.uniform(8.0, 25.0));
        }
        sc.node_types.push_back(std::move(nt));
    }

    const int contract_dc = static_cast<int>(rng.index(spec.datacenters));
    for (int d = 0; d < spec.datacenters; ++d) {
        Location loc;
        char buf[16];
        std::snprintf(buf, sizeof buf, "dc%02d", d);
        loc.name = buf;
        static const int kTz[] = {-8, -7, -6, -5};
        loc.timezone_offset_hours = kTz[rng.index(4)];

        // split 4320 nodes across types, different mix per location
        std::vector<double> w(spec.node_types);
        double wsum = 0;
        for (double& v : w) {
            v = rng.uniform(0.5, 1.5);
            wsum += v;
        }
        int total = 4320, assigned = 0;
        loc.inventory.resize(spec.node_types);
        for (int t = 0; t < spec.node_types; ++t) {
            loc.inventory[t] = static_cast<int>(std::floor(total * w[t] / wsum));
            assigned += loc.inventory[t];
        }
        loc.inventory[0] += total - assigned;

        LocationFactors& f = loc.factors;
        f.ewif_l_per_kwh = rng.uniform(0.0, 3.97);
        f.carbon_factor_kwh_per_kg = rng.uniform(1.2, 8.0);
        f.cop = rng.uniform(3.74, 5.73);
        f.water_latent_heat_kwh_per_l = 0.66;
        f.concentration_cycles = 5.0;
        f.potable_intensity_kwh_per_l = 550e-6;
        f.wastewater_intensity_kwh_per_l = 640e-6;
        f.free_air_cooling = rng.bernoulli(0.5);
        const double base_temp = rng.uniform(2.0, 32.0);
        const double amp = rng.uniform(3.0, 9.0);
        const double dew_gap = rng.uniform(4.0, 16.0);
        for (int h = 0; h < 24; ++h) {
            WeatherPoint wp;
            wp.outdoor_temp_c = base_temp + amp * std::sin(2.0 * M_PI * (h - 9) / 24.0);
            wp.dew_point_c = wp.outdoor_temp_c - dew_gap;
            f.weather.push_back(wp);
        }

        const double off_peak = rng.uniform(0.018, 0.12);
        const double peak_mult = rng.uniform(1.5, 3.5);
        for (int h = 0; h < 24; ++h) {
            const double bump = std::exp(-0.5 * std::pow((h - 17.0) / 3.5, 2.0));
            double price = off_peak * (1.0 + (peak_mult - 1.0) * bump);
            loc.price.tou_usd_per_kwh.push_back(std::clamp(price, 0.018, 0.48));
        }
        if (rng.bernoulli(0.5)) loc.price.clean_premium_usd_per_kwh = rng.uniform(0.0039, 1.44);
        if (d == contract_dc) {
            // contract size ~30% of the location's maximum epoch energy
            double p_it_max_w = 0;
            for (int t = 0; t < spec.node_types; ++t) {
                double ap_max = 0;
                for (double ap : sc.node_types[t].active_power_w) ap_max = std::max(ap_max, ap);
                p_it_max_w += loc.inventory[t] * ap_max;
            }
            AnnualContract ac;
            ac.price_usd_per_kwh = 0.15;
            ac.contracted_kwh_per_epoch =
                0.3 * (p_it_max_w / 1000.0) * (1.0 + 3.0 / f.cop + 0.13) * sc.epoch_hours;
            loc.price.annual_contract = ac;
        }
        sc.locations.push_back(std::move(loc));
    }

    // demand mix, then scale to the requested subscription of fleet capacity
    std::vector<double> mix(spec.workload_types);
    double mix_sum = 0;
    for (double& v : mix) {
        v = rng.uniform(0.5, 1.5);
        mix_sum += v;
    }
    for (double& v : mix) v /= mix_sum;

    sc.demand.gar_jobs_h.assign(spec.workload_types, std::vector<double>(24, 0.0));
    EvalContext ctx(sc);
    double fleet = 0.0;
    for (int d = 0; d < spec.datacenters; ++d) fleet += ctx.dc_mix_capacity(d, mix);

    for (int e = 0; e < 24; ++e) {
        double profile = 1.0;
        if (spec.diurnal) {
            // peak exactly 1 so the peak epoch meets the subscription target
            profile = 0.7 + 0.3 * std::sin(2.0 * M_PI * (e - 4) / 24.0);
        }
        for (int w = 0; w < spec.workload_types; ++w)
            sc.demand.gar_jobs_h[w][e] = mix[w] * spec.subscription * fleet * profile;
    }

    validate_scenario(sc);
    return sc;
}

void set_subscription(Scenario& sc, double r) {
    if (!(r > 0) || r > 1.0)
        fail(ErrorCode::config, "set_subscription: subscription must lie in (0, 1]");
    EvalContext ctx(sc);
    double peak = 0.0;
    for (int e = 0; e < sc.epoch_count(); ++e) peak = std::max(peak, ctx.subscription_rate(e));
    if (peak <= 0) fail(ErrorCode::config, "set_subscription: scenario has no demand");
    const double scale = r / peak;
    for (auto& row : sc.demand.gar_jobs_h)
        for (double& v : row) v *= scale;
}

} // namespace mosaic
