#include <cmath>
#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "fdi/fleet.hpp"
#include "fdi/fuselage.hpp"
#include "fdi/io.hpp"

namespace {

struct GlobalOptions {
    std::string config_path;
    std::string twist_path = "data/twist.csv";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
};

fdi::Config load_config_or_default(const GlobalOptions& opts) {
    if (opts.config_path.empty()) return fdi::default_config();
    return fdi::load_config(opts.config_path);
}

int resolve_threads(const GlobalOptions& opts) {
    if (opts.threads > 0) return opts.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void print_single_flight(const fdi::Config& cfg, const fdi::TwistTable& twist,
                         const fdi::FlightRecord& rec) {
    const fdi::FdiNormalization norm = fdi::compute_normalization(cfg, twist);
    const fdi::MonitoringMask monitored{true, true, true};
    const fdi::FlightLoadsInput loads = fdi::flight_loads(rec, monitored, cfg);
    const fdi::WingScalingRules rules = fdi::wing_rules_from(cfg);
    const double wing = fdi::wing_damage_per_flight(loads, twist, rules, cfg.material);
    const double fuselage = fdi::fuselage_damage_per_flight(loads.max_altitude_ft, cfg.fuselage,
                                                            cfg.atmosphere, cfg.material);
    std::printf("distance_km         %12.3f\n", rec.distance_km);
    std::printf("flight_time_h       %12.4f\n", rec.flight_time_h);
    std::printf("seat_load_factor    %12.4f\n", rec.seat_load_factor);
    std::printf("taxi_total_min      %12.3f\n", rec.taxi_origin_min + rec.taxi_dest_min);
    std::printf("takeoff_weight_kg   %12.2f\n", loads.takeoff_weight_kg);
    std::printf("max_altitude_ft     %12.1f\n", loads.max_altitude_ft);
    std::printf("wing_damage         %12.6e\n", wing);
    std::printf("fuselage_damage     %12.6e\n", fuselage);
    std::printf("wing_fdi_increment      %12.6e\n", wing / norm.design_wing_damage_esg);
    std::printf("fuselage_fdi_increment  %12.6e\n", fuselage / norm.design_fuselage_damage_esg);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fatigue damage index library and fleet lifetime simulator"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--config", opts.config_path, "Configuration file (key = value format)");
    app.add_option("--twist", opts.twist_path, "TWIST spectrum CSV")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "Override the synthetic-fleet seed")
        ->each([&](const std::string&) { opts.seed_set = true; });
    app.add_option("--threads", opts.threads, "Worker threads (default: hardware)");

    // single-flight
    auto* single = app.add_subcommand("single-flight", "Per-flight damage for one flight");
    double distance = 0.0, lf = 1.0, taxi_origin = 0.0, taxi_dest = 0.0, flight_time = 0.0;
    single->add_option("--distance", distance, "Great-circle distance [km]")->required();
    single->add_option("--lf", lf, "Seat load factor [0..1]")->capture_default_str();
    single->add_option("--taxi-origin", taxi_origin, "Taxi time at origin [min]")
        ->capture_default_str();
    single->add_option("--taxi-dest", taxi_dest, "Taxi time at destination [min]")
        ->capture_default_str();
    single->add_option("--flight-time", flight_time,
                       "Flight time [h] (default: derived from distance)");

    // aircraft
    auto* aircraft = app.add_subcommand("aircraft", "Simulate recorded aircraft to retirement");
    std::string fleet_csv, criterion_name = "esg", monitor = "none";
    aircraft->add_option("--fleet-csv", fleet_csv, "Flight record CSV")->required();
    aircraft->add_option("--criterion", criterion_name, "dsg|esg|fdi-dsg|fdi-esg")
        ->capture_default_str();
    aircraft->add_option("--monitor", monitor, "none|taxi|alt|lf|alt+lf|all")
        ->capture_default_str();

    // fleet
    auto* fleet_cmd = app.add_subcommand("fleet", "Simulate a fleet under multiple scenarios");
    std::string fleet_csv2, synthetic_spec, out_dir;
    std::vector<std::string> scenario_args{"dsg", "esg", "fdi-dsg:all", "fdi-esg:all"};
    fleet_cmd->add_option("--fleet-csv", fleet_csv2, "Flight record CSV");
    fleet_cmd->add_option("--synthetic-spec", synthetic_spec, "Synthetic fleet spec file");
    fleet_cmd->add_option("--scenarios", scenario_args,
                          "Scenario list, each criterion[:mask] (e.g. fdi-esg:alt+lf)")
        ->capture_default_str();
    fleet_cmd->add_option("--out-dir", out_dir, "Report output directory")->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Single-parameter FDI sensitivity sweep");
    std::string param;
    double from = 0.0, to = 0.0;
    int steps = 20;
    sweep_cmd->add_option("--param", param, "lf|taxi|alt|distance")->required();
    sweep_cmd->add_option("--from", from, "Sweep start")->required();
    sweep_cmd->add_option("--to", to, "Sweep end")->required();
    sweep_cmd->add_option("--steps", steps, "Number of points")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const fdi::Config cfg = load_config_or_default(opts);
        const fdi::TwistTable twist =
            fdi::load_twist(opts.twist_path, cfg.design.twist_block_flights);

        if (single->parsed()) {
            fdi::FlightRecord rec;
            rec.aircraft_id = "cli";
            rec.distance_km = distance;
            rec.flight_time_h =
                single->count("--flight-time")
                    ? flight_time
                    : fdi::flight_time_for_distance_h(distance, cfg.profile, cfg.aircraft);
            rec.seat_load_factor = lf;
            rec.taxi_origin_min = taxi_origin;
            rec.taxi_dest_min = taxi_dest;
            fdi::validate_record(rec);
            print_single_flight(cfg, twist, rec);
        } else if (aircraft->parsed()) {
            const fdi::FleetDataset fleet = fdi::parse_fleet_csv(fleet_csv);
            const fdi::FdiNormalization norm = fdi::compute_normalization(cfg, twist);
            const fdi::Scenario scenario =
                fdi::parse_scenario(criterion_name + ":" + monitor, cfg, norm);
            std::printf("aircraft_id,scenario,flights_flown,flight_hours,wing_fdi,"
                        "fuselage_fdi,retired_because\n");
            for (const auto& [id, history] : fleet.histories) {
                const fdi::AircraftOutcome o =
                    fdi::simulate_aircraft(id, history, scenario.criterion, scenario.mask, cfg,
                                           twist, norm, scenario.label);
                std::printf("%s,%s,%ld,%.2f,%.6f,%.6f,%s\n", o.aircraft_id.c_str(),
                            o.scenario.c_str(), o.flights_flown, o.final_state.flight_hours,
                            o.final_state.wing_fdi, o.final_state.fuselage_fdi,
                            fdi::to_string(o.retired_because).c_str());
            }
        } else if (fleet_cmd->parsed()) {
            if (fleet_csv2.empty() == synthetic_spec.empty())
                throw fdi::ValidationError(
                    "fleet: give exactly one of --fleet-csv and --synthetic-spec");
            fdi::FleetDataset fleet;
            if (!fleet_csv2.empty()) {
                fleet = fdi::parse_fleet_csv(fleet_csv2);
            } else {
                fdi::SyntheticFleetSpec spec = fdi::load_synthetic_spec(synthetic_spec);
                if (opts.seed_set) spec.seed = opts.seed;
                fleet = fdi::generate_synthetic_fleet(spec, cfg);
            }
            const fdi::FdiNormalization norm = fdi::compute_normalization(cfg, twist);
            std::vector<fdi::Scenario> scenarios;
            for (const auto& text : scenario_args)
                scenarios.push_back(fdi::parse_scenario(text, cfg, norm));
            const fdi::FleetResult result =
                fdi::simulate_fleet(fleet, scenarios, cfg, twist, resolve_threads(opts));
            const auto written = fdi::emit_reports(result, out_dir);
            std::printf("criterion,mean_fc,fc_ratio_pct,mean_fh,fh_ratio_pct\n");
            auto pct = [](double v) {
                if (std::isnan(v)) return std::string();
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.1f", v);
                return std::string(buf);
            };
            for (const auto& row : result.summary)
                std::printf("%s,%.1f,%s,%.1f,%s\n", row.scenario.c_str(), row.mean_fc,
                            pct(row.fc_ratio_pct).c_str(), row.mean_fh,
                            pct(row.fh_ratio_pct).c_str());
            std::fprintf(stderr, "wrote %zu report files to %s\n", written.size(),
                         out_dir.c_str());
        } else if (sweep_cmd->parsed()) {
            fdi::SweepParameter p;
            if (param == "lf") p = fdi::SweepParameter::SeatLoadFactor;
            else if (param == "taxi") p = fdi::SweepParameter::TaxiTime;
            else if (param == "alt") p = fdi::SweepParameter::MaxAltitude;
            else if (param == "distance") p = fdi::SweepParameter::Distance;
            else throw fdi::ValidationError("sweep: unknown --param '" + param + "'");
            const auto points = fdi::sweep_fdi(p, from, to, steps, cfg, twist);
            std::printf("%s,wing_fdi,fuselage_fdi\n", param.c_str());
            for (const auto& pt : points)
                std::printf("%.6f,%.9f,%.9f\n", pt.parameter, pt.wing_fdi, pt.fuselage_fdi);
        }
    } catch (const fdi::IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
