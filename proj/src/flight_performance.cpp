#include "fdi/flight_performance.hpp"

#include <algorithm>
#include <cmath>

namespace fdi {

namespace {
constexpr double kFtToM = 0.3048;
constexpr double kKtToMs = 0.514444;
constexpr double kAltitudeTolFt = 1.0;
} // namespace

void validate_record(const FlightRecord& rec) {
    if (rec.distance_km < 0)
        throw ValidationError("record '" + rec.aircraft_id + "': distance must be >= 0");
    if (rec.distance_km > 0 && rec.flight_time_h <= 0)
        throw ValidationError("record '" + rec.aircraft_id +
                              "': flight_time must be > 0 for a non-zero distance");
    if (rec.flight_time_h < 0)
        throw ValidationError("record '" + rec.aircraft_id + "': flight_time must be >= 0");
    if (rec.seat_load_factor < 0 || rec.seat_load_factor > 1)
        throw ValidationError("record '" + rec.aircraft_id +
                              "': seat_load_factor must be in [0, 1]");
    if (rec.taxi_origin_min < 0 || rec.taxi_dest_min < 0)
        throw ValidationError("record '" + rec.aircraft_id + "': taxi times must be >= 0");
}

double taxi_fuel_kg(double taxi_dest_min, const AircraftParams& params) {
    if (taxi_dest_min < 0) throw ValidationError("taxi_fuel: taxi time must be >= 0");
    return taxi_dest_min * 60.0 * params.taxi_fuel_rate_kg_s;
}

double zero_fuel_takeoff_weight_kg(const FlightRecord& rec, const AircraftParams& params) {
    return params.oew_kg + params.misc_payload_kg +
           rec.seat_load_factor * params.seat_count * params.pax_weight_kg +
           taxi_fuel_kg(rec.taxi_dest_min, params);
}

double propulsion_fuel_kg(double zero_fuel_tow_kg, double distance_km,
                          const AircraftParams& params) {
    if (distance_km < 0) throw ValidationError("propulsion_fuel: distance must be >= 0");
    const double cruise_speed = params.speed_of_sound_cruise_m_s * params.cruise_mach;
    const double x = (distance_km * 1000.0 / cruise_speed) * params.gravity_m_s2 *
                     params.sfc_cruise_kg_ns / params.lift_to_drag;
    const double fuel = (zero_fuel_tow_kg + params.fuel_reserve_weight_kg) *
                        std::expm1(x) * params.fuel_reserve_factor;
    return std::max(fuel, params.min_prop_fuel_kg);
}

double takeoff_weight_kg(const FlightRecord& rec, const AircraftParams& params) {
    const double zero_fuel = zero_fuel_takeoff_weight_kg(rec, params);
    return std::min(zero_fuel + propulsion_fuel_kg(zero_fuel, rec.distance_km, params),
                    params.mtow_kg);
}

namespace isa {

namespace {
constexpr double kT0 = 288.15;
constexpr double kLapse = 0.0065;
constexpr double kP0 = 101325.0;
constexpr double kR = 287.05287;
constexpr double kG0 = 9.80665;
constexpr double kGamma = 1.4;
constexpr double kTropopauseM = 11000.0;
const double kExponent = kG0 / (kR * kLapse); // 5.2559
} // namespace

double temperature_k(double altitude_m) {
    return kT0 - kLapse * std::min(altitude_m, kTropopauseM);
}

double pressure_pa(double altitude_m) {
    if (altitude_m <= kTropopauseM)
        return kP0 * std::pow(temperature_k(altitude_m) / kT0, kExponent);
    const double t11 = kT0 - kLapse * kTropopauseM;
    const double p11 = kP0 * std::pow(t11 / kT0, kExponent);
    return p11 * std::exp(-kG0 * (altitude_m - kTropopauseM) / (kR * t11));
}

double density_ratio(double altitude_m) {
    const double rho0 = kP0 / (kR * kT0);
    return pressure_pa(altitude_m) / (kR * temperature_k(altitude_m)) / rho0;
}

double speed_of_sound_m_s(double altitude_m) {
    return std::sqrt(kGamma * kR * temperature_k(altitude_m));
}

} // namespace isa

double true_airspeed_m_s(SpeedType type, double speed, double altitude_ft) {
    const double h = altitude_ft * kFtToM;
    if (type == SpeedType::Ias) return speed * kKtToMs / std::sqrt(isa::density_ratio(h));
    return speed * isa::speed_of_sound_m_s(h);
}

ProfileLeg climb_descent_leg(double cruise_altitude_ft, const ClimbProfile& profile) {
    ProfileLeg leg;
    // Climb bands run from the previous climb level upward; descent bands from
    // the previous descent level downward (starting at the cruise ceiling).
    double climb_floor = 0.0;
    double descent_top = profile.cruise_ceiling_ft();
    for (const auto& seg : profile.segments) {
        double lo = 0.0, hi = 0.0;
        switch (seg.kind) {
        case SegmentKind::Cruise:
            continue;
        case SegmentKind::Climb:
            lo = climb_floor;
            hi = seg.level_ft;
            climb_floor = seg.level_ft;
            break;
        case SegmentKind::Descent:
            lo = seg.level_ft;
            hi = descent_top;
            descent_top = seg.level_ft;
            break;
        }
        const double flown_lo = lo;
        const double flown_hi = std::min(hi, cruise_altitude_ft);
        if (flown_hi <= flown_lo) continue;
        const double time_s = (flown_hi - flown_lo) / seg.rate_fpm * 60.0;
        const double tas = true_airspeed_m_s(seg.speed_type, seg.speed,
                                             0.5 * (flown_lo + flown_hi));
        leg.distance_m += tas * time_s;
        leg.time_s += time_s;
    }
    return leg;
}

double max_altitude_ft(double distance_km, const ClimbProfile& profile) {
    // Whole-foot granularity: the largest integer altitude whose climb plus
    // descent distance fits. Keeps the result identical to an AltitudeTable
    // lookup over the same profile.
    if (distance_km < 0) throw ValidationError("max_altitude: distance must be >= 0");
    const double target_m = distance_km * 1000.0;
    const double ceiling = profile.cruise_ceiling_ft();
    if (climb_descent_leg(ceiling, profile).distance_m <= target_m) return ceiling;
    long hi = static_cast<long>(std::floor(ceiling));
    if (climb_descent_leg(static_cast<double>(hi), profile).distance_m <= target_m)
        return static_cast<double>(hi);
    long lo = 0;
    while (hi - lo > 1) {
        const long mid = lo + (hi - lo) / 2;
        if (climb_descent_leg(static_cast<double>(mid), profile).distance_m <= target_m)
            lo = mid;
        else
            hi = mid;
    }
    return static_cast<double>(lo);
}

AltitudeTable::AltitudeTable(const ClimbProfile& profile)
    : ceiling_ft_(profile.cruise_ceiling_ft()),
      ceiling_distance_m_(climb_descent_leg(ceiling_ft_, profile).distance_m) {
    const long top = static_cast<long>(std::floor(ceiling_ft_));
    distance_m_.resize(top + 1);
    for (long h = 0; h <= top; ++h)
        distance_m_[h] = climb_descent_leg(static_cast<double>(h), profile).distance_m;
}

double AltitudeTable::lookup(double distance_km) const {
    if (distance_km < 0) throw ValidationError("max_altitude: distance must be >= 0");
    const double target_m = distance_km * 1000.0;
    if (ceiling_distance_m_ <= target_m) return ceiling_ft_;
    if (distance_m_.back() <= target_m) return static_cast<double>(distance_m_.size() - 1);
    const auto it = std::upper_bound(distance_m_.begin(), distance_m_.end(), target_m);
    return static_cast<double>((it - distance_m_.begin()) - 1);
}

double differential_pressure_hpa(double altitude_ft, const AtmosphereParams& atmos) {
    if (altitude_ft < 0) throw ValidationError("differential_pressure: altitude must be >= 0");
    return atmos.p0_hpa * (-std::expm1(-altitude_ft * kFtToM / atmos.scale_height_m));
}

double flight_time_for_distance_h(double distance_km, const ClimbProfile& profile,
                                  const AircraftParams& params) {
    if (distance_km < 0) throw ValidationError("flight_time_for_distance: distance must be >= 0");
    const double d = distance_km * 1000.0;
    const ProfileLeg full = climb_descent_leg(profile.cruise_ceiling_ft(), profile);
    const double cruise_speed = params.speed_of_sound_cruise_m_s * params.cruise_mach;
    if (d >= full.distance_m)
        return (full.time_s + (d - full.distance_m) / cruise_speed) / 3600.0;
    double lo = 0.0, hi = profile.cruise_ceiling_ft();
    while (hi - lo > kAltitudeTolFt) {
        const double mid = 0.5 * (lo + hi);
        if (climb_descent_leg(mid, profile).distance_m <= d)
            lo = mid;
        else
            hi = mid;
    }
    return climb_descent_leg(lo, profile).time_s / 3600.0;
}

double distance_for_flight_time_km(double flight_time_h, const ClimbProfile& profile,
                                   const AircraftParams& params) {
    if (flight_time_h < 0)
        throw ValidationError("distance_for_flight_time: flight time must be >= 0");
    const double t = flight_time_h * 3600.0;
    const ProfileLeg full = climb_descent_leg(profile.cruise_ceiling_ft(), profile);
    const double cruise_speed = params.speed_of_sound_cruise_m_s * params.cruise_mach;
    if (t >= full.time_s)
        return (full.distance_m + (t - full.time_s) * cruise_speed) / 1000.0;
    double lo = 0.0, hi = profile.cruise_ceiling_ft();
    while (hi - lo > kAltitudeTolFt) {
        const double mid = 0.5 * (lo + hi);
        if (climb_descent_leg(mid, profile).time_s <= t)
            lo = mid;
        else
            hi = mid;
    }
    return climb_descent_leg(lo, profile).distance_m / 1000.0;
}

} // namespace fdi
