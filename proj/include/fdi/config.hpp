#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fdi/errors.hpp"

namespace fdi {

/// A320-class performance and weight constants. Units are SI unless the
/// field name says otherwise; specific fuel consumption is kept in
/// kg/(N*s) so the range equation needs no unit juggling.
struct AircraftParams {
    double fuel_reserve_weight_kg = 2500.0;
    double cruise_mach = 0.79;
    double taxi_fuel_rate_kg_s = 0.1;
    double fuel_reserve_factor = 1.05;
    double gravity_m_s2 = 9.81;
    double lift_to_drag = 15.0;
    double max_payload_kg = 16600.0;
    double mtow_kg = 73500.0;
    double max_fuel_kg = 20000.0;
    double misc_payload_kg = 600.0;
    double min_prop_fuel_kg = 5000.0;
    int seat_count = 160;
    double oew_kg = 42200.0;
    double sfc_cruise_kg_ns = 1.688e-5; // 16.88 g/(kN*s)
    double speed_of_sound_cruise_m_s = 295.0;
    double pax_weight_kg = 100.0;

    bool operator==(const AircraftParams&) const = default;
};

enum class SegmentKind { Climb, Cruise, Descent };
enum class SpeedType { Ias, Mach };

/// One leg of the climb/descent schedule. For climb segments `level_ft` is
/// the top of the band, for descent segments the bottom, for the cruise
/// segment the cruise ceiling.
struct ClimbSegment {
    std::string name;
    SegmentKind kind = SegmentKind::Climb;
    double level_ft = 0.0;
    double rate_fpm = 0.0;
    SpeedType speed_type = SpeedType::Ias;
    double speed = 0.0; // kts for Ias, Mach number for Mach

    bool operator==(const ClimbSegment&) const = default;
};

struct ClimbProfile {
    std::vector<ClimbSegment> segments;

    double cruise_ceiling_ft() const;
    double cruise_mach() const;

    bool operator==(const ClimbProfile&) const = default;
};

/// Al 2024-T3 constants: Haigh mean-stress sensitivity plus the S-N curve
/// parameters (c1 fatigue limit, c2 ultimate strength, c3/c4 slope). kt is
/// descriptive only and enters no formula.
struct MaterialParams {
    double m_sigma = 0.4;
    double c1_mpa = 63.0;
    double c2_mpa = 470.0;
    double c3 = 3.50;
    double c4 = 2.07;
    double kt = 2.5;

    bool operator==(const MaterialParams&) const = default;
};

struct AtmosphereParams {
    double p0_hpa = 1013.25;
    double scale_height_m = 8435.0;

    bool operator==(const AtmosphereParams&) const = default;
};

struct FuselageGeometry {
    double diameter_mean_m = 4.14;
    double skin_thickness_m = 0.001;

    bool operator==(const FuselageGeometry&) const = default;
};

/// Design reference points and the regulatory service goals.
struct DesignReference {
    double design_mean_stress_mpa = 100.0;
    double design_flight_time_h = 2.0;
    double design_taxi_time_min = 25.0;
    double design_max_altitude_ft = 39100.0;
    double twist_block_flights = 40000.0;
    double dsg_fc = 48000.0;
    double dsg_fh = 60000.0;
    double esg_fc = 60000.0;
    double esg_fh = 120000.0;
    double dsg_design_flight_time_h = 1.25;

    bool operator==(const DesignReference&) const = default;
};

struct Config {
    AircraftParams aircraft;
    ClimbProfile profile;
    MaterialParams material;
    AtmosphereParams atmosphere;
    FuselageGeometry fuselage;
    DesignReference design;

    bool operator==(const Config&) const = default;
};

ClimbProfile default_climb_profile();
Config default_config();

/// Throws ValidationError naming the offending field.
void validate_config(const Config& cfg);

/// Parses the flat `key = value` format (# comments, blank lines allowed).
/// Unknown keys are rejected. Missing keys keep their defaults.
Config parse_config(const std::string& text);
Config load_config(const std::filesystem::path& path);

std::string serialize_config(const Config& cfg);
void save_config(const Config& cfg, const std::filesystem::path& path);

} // namespace fdi
