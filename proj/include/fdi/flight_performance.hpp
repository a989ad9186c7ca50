#pragma once

#include <string>
#include <vector>

#include "fdi/config.hpp"

namespace fdi {

/// One flight's operational inputs as recorded (or synthesized).
struct FlightRecord {
    std::string aircraft_id;
    double distance_km = 0.0;
    double flight_time_h = 0.0;
    double seat_load_factor = 0.0;
    double taxi_origin_min = 0.0;
    double taxi_dest_min = 0.0;
};

/// Throws ValidationError naming the offending field.
void validate_record(const FlightRecord& rec);

/// The four fatigue drivers a flight feeds into the damage models.
struct FlightLoadsInput {
    double takeoff_weight_kg = 0.0;
    double max_altitude_ft = 0.0;
    double flight_time_h = 0.0;
    double total_taxi_time_min = 0.0;
};

double taxi_fuel_kg(double taxi_dest_min, const AircraftParams& params);
double zero_fuel_takeoff_weight_kg(const FlightRecord& rec, const AircraftParams& params);

/// Breguet cruise fuel with reserve factor, floored at the airline minimum.
double propulsion_fuel_kg(double zero_fuel_tow_kg, double distance_km,
                          const AircraftParams& params);

/// Total takeoff weight, capped at MTOW.
double takeoff_weight_kg(const FlightRecord& rec, const AircraftParams& params);

/// International Standard Atmosphere (two layers: 6.5 K/km lapse to 11 km,
/// isothermal above). Used for IAS -> TAS conversion of the profile speeds.
namespace isa {
double temperature_k(double altitude_m);
double pressure_pa(double altitude_m);
double density_ratio(double altitude_m);
double speed_of_sound_m_s(double altitude_m);
} // namespace isa

/// True airspeed of a profile speed value at an altitude.
double true_airspeed_m_s(SpeedType type, double speed, double altitude_ft);

struct ProfileLeg {
    double distance_m = 0.0;
    double time_s = 0.0;
};

/// Ground distance and time to climb from 0 ft to `cruise_altitude_ft` and
/// descend back, both truncated at that altitude. Closed form per segment
/// with speeds converted at the mid-altitude of each flown piece.
ProfileLeg climb_descent_leg(double cruise_altitude_ft, const ClimbProfile& profile);

/// Highest attainable altitude for a flight distance: the largest whole-foot
/// H at or below the cruise ceiling whose climb-plus-descent ground distance
/// fits into the total distance (1 ft granularity, solved by bisection).
double max_altitude_ft(double distance_km, const ClimbProfile& profile);

/// Precomputed distance-to-altitude lookup over a profile. `lookup` returns
/// exactly the same value as max_altitude_ft for the same profile; the table
/// trades one-time setup for O(log n) queries in fleet-scale runs.
class AltitudeTable {
public:
    explicit AltitudeTable(const ClimbProfile& profile);
    double lookup(double distance_km) const;

private:
    double ceiling_ft_;
    double ceiling_distance_m_;
    std::vector<double> distance_m_;
};

/// Simplified cabin differential pressure p0 (1 - exp(-H/H0)).
double differential_pressure_hpa(double altitude_ft, const AtmosphereParams& atmos);

/// Flight time implied by a distance under the profile (climb + cruise at
/// a*Mc + descent), and its inverse. The two are consistent: beyond the
/// full-profile distance the mapping is linear in the cruise speed.
double flight_time_for_distance_h(double distance_km, const ClimbProfile& profile,
                                  const AircraftParams& params);
double distance_for_flight_time_km(double flight_time_h, const ClimbProfile& profile,
                                   const AircraftParams& params);

} // namespace fdi
