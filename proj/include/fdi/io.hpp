#pragma once

#include <cstdint>
#include <filesystem>

#include "fdi/fleet.hpp"

namespace fdi {

/// Columns: aircraft_id,distance_km,flight_time_h,seat_load_factor,
/// taxi_origin_min,taxi_dest_min. Altitude is never an input column; it is
/// derived from distance. Errors carry the offending line number and field.
FleetDataset parse_fleet_csv(const std::filesystem::path& path);
void write_fleet_csv(const FleetDataset& fleet, const std::filesystem::path& path);

/// Shape targets for the synthetic fleet. Flight time and taxi time are
/// truncated normals, the seat load factor is beta-distributed (bounded
/// support), and distances follow from flight times through the climb
/// profile. Per-aircraft means are drawn first, flights jitter around them.
struct SyntheticFleetSpec {
    int aircraft_count = 1000;
    int flights_per_aircraft = 100;
    double flight_time_mean_h = 2.0;
    double flight_time_sd_h = 0.4;
    double lf_mean = 0.8;
    double lf_sd = 0.1;
    double taxi_total_mean_min = 25.0;
    double taxi_total_sd_min = 8.0;
    std::uint64_t seed = 1;
};

void validate_spec(const SyntheticFleetSpec& spec);
SyntheticFleetSpec load_synthetic_spec(const std::filesystem::path& path);

FleetDataset generate_synthetic_fleet(const SyntheticFleetSpec& spec, const Config& cfg);

/// Writes summary.csv (criterion, mean FC/FH and ratios), lifetime_bars.csv,
/// and per scenario scatter_<label>.csv plus hist_<label>_{wing,fuselage}.csv
/// (50 bins over [0, max]). Returns the written paths.
std::vector<std::filesystem::path> emit_reports(const FleetResult& result,
                                                const std::filesystem::path& out_dir);

} // namespace fdi
