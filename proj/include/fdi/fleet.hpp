#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fdi/config.hpp"
#include "fdi/flight_performance.hpp"
#include "fdi/wing.hpp"

namespace fdi {

/// Accumulated state of one airframe. FDIs are normalized: 1.0 equals the
/// damage of an aircraft flown at design loads until the extended service
/// goal. All fields grow monotonically over a simulation.
struct FdiState {
    double wing_fdi = 0.0;
    double fuselage_fdi = 0.0;
    long flight_cycles = 0;
    double flight_hours = 0.0;
};

struct ServiceGoal {
    double fc_limit = 0.0;
    double fh_limit = 0.0;
};

struct FdiThreshold {
    double wing_limit = 0.0;
    double fuselage_limit = 0.0;
};

using RetirementCriterion = std::variant<ServiceGoal, FdiThreshold>;

/// Which operational parameters feed the damage models with monitored
/// values; unmonitored ones fall back to their design assumptions.
struct MonitoringMask {
    bool use_load_factor = false;
    bool use_altitude = false;
    bool use_taxi = false;
};

enum class RetirementCause { FlightCycles, FlightHours, WingFdi, FuselageFdi };

std::string to_string(RetirementCause cause);

struct AircraftOutcome {
    std::string aircraft_id;
    std::string scenario;
    FdiState final_state;
    RetirementCause retired_because = RetirementCause::FlightCycles;
    long flights_flown = 0;
};

/// Raw design damages over an ESG lifetime (the FDI denominators) and the
/// normalized DSG retirement thresholds.
struct FdiNormalization {
    double design_wing_damage_esg = 0.0;
    double design_fuselage_damage_esg = 0.0;
    double dsg_wing_threshold = 0.0;
    double dsg_fuselage_threshold = 0.0;
};

/// The design flight: load factor 1, design taxi time (attributed to the
/// destination), design altitude, distance implied by the flight time.
FlightRecord design_flight_record(const Config& cfg, double flight_time_h);

FdiNormalization compute_normalization(const Config& cfg, const TwistTable& twist);

/// Replaces unmonitored record fields by their design assumptions.
FlightRecord apply_monitoring_mask(const FlightRecord& rec, const MonitoringMask& mask,
                                   const Config& cfg);

/// Mask-aware loads for one flight. Altitude is derived from distance when
/// monitored, pinned to the design altitude otherwise; `altitude_override`
/// bypasses both (used by parameter sweeps).
FlightLoadsInput flight_loads(const FlightRecord& rec, const MonitoringMask& mask,
                              const Config& cfg,
                              std::optional<double> altitude_override = std::nullopt);

/// Normalized per-flight FDI growth of one recorded flight.
struct FlightIncrement {
    double wing = 0.0;
    double fuselage = 0.0;
    double flight_hours = 0.0;
};

FlightIncrement per_flight_increment(const FlightRecord& rec, const MonitoringMask& mask,
                                     const Config& cfg, const TwistTable& twist,
                                     const FdiNormalization& norm,
                                     std::optional<double> altitude_override = std::nullopt);

/// Replays the history cyclically until the criterion fires; the flight that
/// meets or exceeds any limit is the last one flown.
AircraftOutcome simulate_aircraft(const std::string& aircraft_id,
                                  std::span<const FlightRecord> history,
                                  const RetirementCriterion& criterion,
                                  const MonitoringMask& mask, const Config& cfg,
                                  const TwistTable& twist, const FdiNormalization& norm,
                                  const std::string& scenario_label = {});

enum class ScenarioFamily { Dsg, Esg };

struct Scenario {
    std::string label;
    RetirementCriterion criterion;
    MonitoringMask mask;
    ScenarioFamily family = ScenarioFamily::Esg;
};

Scenario make_service_goal_scenario(ScenarioFamily family, const MonitoringMask& mask,
                                    const Config& cfg);
Scenario make_fdi_scenario(ScenarioFamily family, const MonitoringMask& mask,
                           const FdiNormalization& norm);

/// `criterion[:mask]` with criterion in {dsg, esg, fdi-dsg, fdi-esg} and
/// mask in {none, taxi, alt, lf, alt+lf, all} (any '+'-joined combination).
Scenario parse_scenario(const std::string& text, const Config& cfg,
                        const FdiNormalization& norm);
MonitoringMask parse_monitoring_mask(const std::string& text);

struct FleetSummaryRow {
    std::string scenario;
    double mean_fc = 0.0;
    double mean_fh = 0.0;
    double fc_ratio_pct = 0.0; // NaN when no matching service goal was simulated
    double fh_ratio_pct = 0.0;
};

struct FleetResult {
    std::vector<AircraftOutcome> outcomes; // aircraft-major, scenario-minor
    std::vector<FleetSummaryRow> summary;
};

struct FleetDataset {
    std::map<std::string, std::vector<FlightRecord>> histories;
    std::string provenance;
};

/// Simulates every aircraft under every scenario. Aircraft are independent
/// and distributed over `threads` workers; results land in preassigned
/// slots, so the outcome is identical for any thread count.
FleetResult simulate_fleet(const FleetDataset& fleet, std::span<const Scenario> scenarios,
                           const Config& cfg, const TwistTable& twist, int threads = 1);

enum class SweepParameter { SeatLoadFactor, TaxiTime, MaxAltitude, Distance };

struct SweepPoint {
    double parameter = 0.0;
    double wing_fdi = 0.0;
    double fuselage_fdi = 0.0;
};

/// FDIs at retirement under the extended service goal for a design-baseline
/// flight with one parameter varied. Distance sweeps derive flight time and
/// altitude from the swept distance; the other sweeps hold the 2 h design
/// flight fixed.
std::vector<SweepPoint> sweep_fdi(SweepParameter parameter, double from, double to, int steps,
                                  const Config& cfg, const TwistTable& twist);

} // namespace fdi
