#pragma once

#include <filesystem>
#include <vector>

#include "fdi/fatigue.hpp"
#include "fdi/flight_performance.hpp"

namespace fdi {

/// One TWIST row. Stress levels are ratios to the 1g mean flight stress;
/// counts are per block of `twist_block_flights` (40,000) flights.
struct TwistRow {
    SpectrumSegment segment = SpectrumSegment::Flight;
    double relative_mean = 0.0;
    double relative_amplitude = 0.0;
    double cycles_per_block = 0.0;
};

struct TwistTable {
    std::vector<TwistRow> rows;
};

/// Throws ValidationError: amplitudes must be positive, counts positive,
/// ground rows must have negative mean, and there must be exactly one
/// ground-air-ground row carrying one cycle per flight of the block.
void validate_twist(const TwistTable& table, double block_flights);

/// CSV layout: header, then `segment,relative_mean,relative_amplitude,
/// cycles_per_block` with segment in {flight, ground, gag}.
TwistTable load_twist(const std::filesystem::path& path, double block_flights = 40000.0);

/// How a flight's loads rescale the TWIST block.
struct WingScalingRules {
    double design_mean_stress_mpa = 100.0;
    double design_flight_time_h = 2.0;
    double design_taxi_time_min = 25.0;
    double design_weight_kg = 73500.0;
    double block_flights = 40000.0;
};

WingScalingRules wing_rules_from(const Config& cfg);

/// Per-flight spectrum for the given loads:
///  - bin means scale with the 1g mean flight stress, which is linear in
///    takeoff weight (design_mean_stress * W / design_weight); amplitudes
///    stay at their design-level stresses (gust and taxi excursions are not
///    weight excursions),
///  - flight-segment counts scale linearly with flight time,
///  - ground-segment counts scale linearly with total taxi time,
///  - the ground-air-ground cycle occurs once per flight.
LoadSpectrum scale_spectrum(const TwistTable& twist, const FlightLoadsInput& loads,
                            const WingScalingRules& rules);

/// Miner damage of one flight's wing spectrum.
double wing_damage_per_flight(const FlightLoadsInput& loads, const TwistTable& twist,
                              const WingScalingRules& rules, const MaterialParams& mat);

} // namespace fdi
