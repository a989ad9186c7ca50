#include "fdi/fleet.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "fdi/fuselage.hpp"

namespace fdi {

namespace {

constexpr long kMaxFlights = 1000000000L;

struct Accumulator {
    long double wing = 0.0L;
    long double fuselage = 0.0L;
    long double flight_hours = 0.0L;
    long flight_cycles = 0;
};

FdiState to_state(const Accumulator& acc) {
    FdiState s;
    s.wing_fdi = static_cast<double>(acc.wing);
    s.fuselage_fdi = static_cast<double>(acc.fuselage);
    s.flight_cycles = acc.flight_cycles;
    s.flight_hours = static_cast<double>(acc.flight_hours);
    return s;
}

std::optional<RetirementCause> criterion_fired(const Accumulator& acc,
                                               const RetirementCriterion& criterion) {
    if (const auto* goal = std::get_if<ServiceGoal>(&criterion)) {
        if (static_cast<double>(acc.flight_cycles) >= goal->fc_limit)
            return RetirementCause::FlightCycles;
        if (static_cast<double>(acc.flight_hours) >= goal->fh_limit)
            return RetirementCause::FlightHours;
        return std::nullopt;
    }
    const auto& thr = std::get<FdiThreshold>(criterion);
    if (static_cast<double>(acc.wing) >= thr.wing_limit) return RetirementCause::WingFdi;
    if (static_cast<double>(acc.fuselage) >= thr.fuselage_limit)
        return RetirementCause::FuselageFdi;
    return std::nullopt;
}

AircraftOutcome run_simulation(const std::string& aircraft_id, const std::string& scenario,
                               std::span<const FlightIncrement> increments,
                               const RetirementCriterion& criterion) {
    if (increments.empty())
        throw ValidationError("aircraft '" + aircraft_id + "': history is empty");
    if (std::holds_alternative<FdiThreshold>(criterion)) {
        bool any = false;
        for (const auto& inc : increments) any = any || inc.wing > 0 || inc.fuselage > 0;
        if (!any)
            throw ValidationError("aircraft '" + aircraft_id +
                                  "': FDI criterion unreachable (all increments are zero)");
    }
    Accumulator acc;
    std::size_t idx = 0;
    for (long flight = 1; flight <= kMaxFlights; ++flight) {
        const FlightIncrement& inc = increments[idx];
        if (++idx == increments.size()) idx = 0;
        acc.wing += inc.wing;
        acc.fuselage += inc.fuselage;
        acc.flight_hours += inc.flight_hours;
        acc.flight_cycles += 1;
        if (auto cause = criterion_fired(acc, criterion)) {
            AircraftOutcome outcome;
            outcome.aircraft_id = aircraft_id;
            outcome.scenario = scenario;
            outcome.final_state = to_state(acc);
            outcome.retired_because = *cause;
            outcome.flights_flown = flight;
            return outcome;
        }
    }
    throw ValidationError("aircraft '" + aircraft_id + "': retirement criterion not reached within " +
                          std::to_string(kMaxFlights) + " flights");
}

} // namespace

std::string to_string(RetirementCause cause) {
    switch (cause) {
    case RetirementCause::FlightCycles: return "fc";
    case RetirementCause::FlightHours: return "fh";
    case RetirementCause::WingFdi: return "wing_fdi";
    case RetirementCause::FuselageFdi: return "fuselage_fdi";
    }
    return "?";
}

FlightRecord design_flight_record(const Config& cfg, double flight_time_h) {
    FlightRecord rec;
    rec.aircraft_id = "design";
    rec.distance_km = distance_for_flight_time_km(flight_time_h, cfg.profile, cfg.aircraft);
    rec.flight_time_h = flight_time_h;
    rec.seat_load_factor = 1.0;
    rec.taxi_origin_min = 0.0;
    rec.taxi_dest_min = cfg.design.design_taxi_time_min;
    return rec;
}

FdiNormalization compute_normalization(const Config& cfg, const TwistTable& twist) {
    validate_config(cfg);
    const WingScalingRules rules = wing_rules_from(cfg);

    auto design_damages = [&](double flight_time_h) {
        const FlightRecord rec = design_flight_record(cfg, flight_time_h);
        FlightLoadsInput loads;
        loads.takeoff_weight_kg = takeoff_weight_kg(rec, cfg.aircraft);
        loads.max_altitude_ft = cfg.design.design_max_altitude_ft;
        loads.flight_time_h = flight_time_h;
        loads.total_taxi_time_min = cfg.design.design_taxi_time_min;
        const double wing = wing_damage_per_flight(loads, twist, rules, cfg.material);
        const double fuselage = fuselage_damage_per_flight(
            loads.max_altitude_ft, cfg.fuselage, cfg.atmosphere, cfg.material);
        return std::pair{wing, fuselage};
    };

    const auto [wing_esg, fus_esg] = design_damages(cfg.design.design_flight_time_h);
    const auto [wing_dsg, fus_dsg] = design_damages(cfg.design.dsg_design_flight_time_h);

    FdiNormalization norm;
    norm.design_wing_damage_esg = cfg.design.esg_fc * wing_esg;
    norm.design_fuselage_damage_esg = cfg.design.esg_fc * fus_esg;
    norm.dsg_wing_threshold = cfg.design.dsg_fc * wing_dsg / norm.design_wing_damage_esg;
    norm.dsg_fuselage_threshold =
        cfg.design.dsg_fc * fus_dsg / norm.design_fuselage_damage_esg;
    return norm;
}

FlightRecord apply_monitoring_mask(const FlightRecord& rec, const MonitoringMask& mask,
                                   const Config& cfg) {
    FlightRecord masked = rec;
    if (!mask.use_load_factor) masked.seat_load_factor = 1.0;
    if (!mask.use_taxi) {
        masked.taxi_origin_min = 0.0;
        masked.taxi_dest_min = cfg.design.design_taxi_time_min;
    }
    return masked;
}

namespace {

FlightLoadsInput loads_impl(const FlightRecord& rec, const MonitoringMask& mask,
                            const Config& cfg, std::optional<double> altitude_override,
                            const AltitudeTable* altitudes) {
    const FlightRecord masked = apply_monitoring_mask(rec, mask, cfg);
    FlightLoadsInput loads;
    loads.takeoff_weight_kg = takeoff_weight_kg(masked, cfg.aircraft);
    if (altitude_override)
        loads.max_altitude_ft = *altitude_override;
    else if (mask.use_altitude)
        loads.max_altitude_ft = altitudes ? altitudes->lookup(rec.distance_km)
                                          : max_altitude_ft(rec.distance_km, cfg.profile);
    else
        loads.max_altitude_ft = cfg.design.design_max_altitude_ft;
    loads.flight_time_h = rec.flight_time_h;
    loads.total_taxi_time_min = masked.taxi_origin_min + masked.taxi_dest_min;
    return loads;
}

FlightIncrement increment_impl(const FlightRecord& rec, const MonitoringMask& mask,
                               const Config& cfg, const TwistTable& twist,
                               const FdiNormalization& norm, const WingScalingRules& rules,
                               std::optional<double> altitude_override,
                               const AltitudeTable* altitudes) {
    const FlightLoadsInput loads = loads_impl(rec, mask, cfg, altitude_override, altitudes);
    FlightIncrement inc;
    inc.wing = wing_damage_per_flight(loads, twist, rules, cfg.material) /
               norm.design_wing_damage_esg;
    inc.fuselage = fuselage_damage_per_flight(loads.max_altitude_ft, cfg.fuselage,
                                              cfg.atmosphere, cfg.material) /
                   norm.design_fuselage_damage_esg;
    inc.flight_hours = rec.flight_time_h;
    return inc;
}

} // namespace

FlightLoadsInput flight_loads(const FlightRecord& rec, const MonitoringMask& mask,
                              const Config& cfg, std::optional<double> altitude_override) {
    return loads_impl(rec, mask, cfg, altitude_override, nullptr);
}

FlightIncrement per_flight_increment(const FlightRecord& rec, const MonitoringMask& mask,
                                     const Config& cfg, const TwistTable& twist,
                                     const FdiNormalization& norm,
                                     std::optional<double> altitude_override) {
    return increment_impl(rec, mask, cfg, twist, norm, wing_rules_from(cfg),
                          altitude_override, nullptr);
}

AircraftOutcome simulate_aircraft(const std::string& aircraft_id,
                                  std::span<const FlightRecord> history,
                                  const RetirementCriterion& criterion,
                                  const MonitoringMask& mask, const Config& cfg,
                                  const TwistTable& twist, const FdiNormalization& norm,
                                  const std::string& scenario_label) {
    if (history.empty())
        throw ValidationError("aircraft '" + aircraft_id + "': history is empty");
    std::vector<FlightIncrement> increments;
    increments.reserve(history.size());
    for (const auto& rec : history) {
        validate_record(rec);
        increments.push_back(per_flight_increment(rec, mask, cfg, twist, norm));
    }
    return run_simulation(aircraft_id, scenario_label, increments, criterion);
}

Scenario make_service_goal_scenario(ScenarioFamily family, const MonitoringMask& mask,
                                    const Config& cfg) {
    Scenario s;
    s.family = family;
    if (family == ScenarioFamily::Dsg) {
        s.label = "dsg";
        s.criterion = ServiceGoal{cfg.design.dsg_fc, cfg.design.dsg_fh};
    } else {
        s.label = "esg";
        s.criterion = ServiceGoal{cfg.design.esg_fc, cfg.design.esg_fh};
    }
    s.mask = mask;
    return s;
}

Scenario make_fdi_scenario(ScenarioFamily family, const MonitoringMask& mask,
                           const FdiNormalization& norm) {
    Scenario s;
    s.family = family;
    if (family == ScenarioFamily::Dsg) {
        s.label = "fdi-dsg";
        s.criterion = FdiThreshold{norm.dsg_wing_threshold, norm.dsg_fuselage_threshold};
    } else {
        s.label = "fdi-esg";
        s.criterion = FdiThreshold{1.0, 1.0};
    }
    s.mask = mask;
    return s;
}

MonitoringMask parse_monitoring_mask(const std::string& text) {
    MonitoringMask mask;
    if (text.empty() || text == "none") return mask;
    if (text == "all") return {true, true, true};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto plus = text.find('+', pos);
        const std::string token =
            text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
        if (token == "lf") mask.use_load_factor = true;
        else if (token == "alt") mask.use_altitude = true;
        else if (token == "taxi") mask.use_taxi = true;
        else throw ValidationError("unknown monitoring token '" + token + "'");
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return mask;
}

Scenario parse_scenario(const std::string& text, const Config& cfg,
                        const FdiNormalization& norm) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const MonitoringMask mask =
        colon == std::string::npos ? MonitoringMask{} : parse_monitoring_mask(text.substr(colon + 1));
    Scenario s;
    if (name == "dsg") s = make_service_goal_scenario(ScenarioFamily::Dsg, mask, cfg);
    else if (name == "esg") s = make_service_goal_scenario(ScenarioFamily::Esg, mask, cfg);
    else if (name == "fdi-dsg") s = make_fdi_scenario(ScenarioFamily::Dsg, mask, norm);
    else if (name == "fdi-esg") s = make_fdi_scenario(ScenarioFamily::Esg, mask, norm);
    else throw ValidationError("unknown scenario '" + name + "'");
    if (colon != std::string::npos) s.label = text;
    return s;
}

FleetResult simulate_fleet(const FleetDataset& fleet, std::span<const Scenario> scenarios,
                           const Config& cfg, const TwistTable& twist, int threads) {
    if (fleet.histories.empty()) throw ValidationError("fleet is empty");
    if (scenarios.empty()) throw ValidationError("no scenarios given");
    if (threads < 1) threads = 1;

    const FdiNormalization norm = compute_normalization(cfg, twist);
    const WingScalingRules rules = wing_rules_from(cfg);

    // Altitude derivation dominates the per-record cost at fleet scale; the
    // table is built once and shared read-only by every worker.
    bool any_altitude_mask = false;
    for (const auto& s : scenarios) any_altitude_mask = any_altitude_mask || s.mask.use_altitude;
    std::optional<AltitudeTable> altitudes;
    if (any_altitude_mask) altitudes.emplace(cfg.profile);
    const AltitudeTable* altitude_table = altitudes ? &*altitudes : nullptr;

    std::vector<const std::string*> ids;
    std::vector<const std::vector<FlightRecord>*> histories;
    ids.reserve(fleet.histories.size());
    for (const auto& [id, hist] : fleet.histories) {
        if (hist.empty()) throw ValidationError("aircraft '" + id + "': history is empty");
        for (const auto& rec : hist) validate_record(rec);
        ids.push_back(&id);
        histories.push_back(&hist);
    }

    const std::size_t n_aircraft = ids.size();
    const std::size_t n_scen = scenarios.size();
    FleetResult result;
    result.outcomes.resize(n_aircraft * n_scen);

    // Scenarios sharing a mask reuse the same per-record increments.
    auto mask_key = [](const MonitoringMask& m) {
        return (m.use_load_factor ? 4 : 0) + (m.use_altitude ? 2 : 0) + (m.use_taxi ? 1 : 0);
    };

    auto worker = [&](std::size_t begin, std::size_t end) {
        std::map<int, std::vector<FlightIncrement>> increments_by_mask;
        for (std::size_t a = begin; a < end; ++a) {
            increments_by_mask.clear();
            for (std::size_t s = 0; s < n_scen; ++s) {
                const Scenario& scen = scenarios[s];
                auto& increments = increments_by_mask[mask_key(scen.mask)];
                if (increments.empty()) {
                    increments.reserve(histories[a]->size());
                    for (const auto& rec : *histories[a])
                        increments.push_back(increment_impl(rec, scen.mask, cfg, twist, norm,
                                                            rules, std::nullopt,
                                                            altitude_table));
                }
                result.outcomes[a * n_scen + s] =
                    run_simulation(*ids[a], scen.label, increments, scen.criterion);
            }
        }
    };

    if (threads == 1 || n_aircraft < 2) {
        worker(0, n_aircraft);
    } else {
        const std::size_t n_workers = std::min<std::size_t>(threads, n_aircraft);
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            const std::size_t begin = w * n_aircraft / n_workers;
            const std::size_t end = (w + 1) * n_aircraft / n_workers;
            pool.emplace_back([&, w, begin, end] {
                try {
                    worker(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // Table-style summary: means per scenario plus ratios against the
    // matching service-goal scenario of the same family.
    std::vector<double> mean_fc(n_scen, 0.0), mean_fh(n_scen, 0.0);
    for (std::size_t s = 0; s < n_scen; ++s) {
        for (std::size_t a = 0; a < n_aircraft; ++a) {
            const auto& o = result.outcomes[a * n_scen + s];
            mean_fc[s] += static_cast<double>(o.final_state.flight_cycles);
            mean_fh[s] += o.final_state.flight_hours;
        }
        mean_fc[s] /= static_cast<double>(n_aircraft);
        mean_fh[s] /= static_cast<double>(n_aircraft);
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t s = 0; s < n_scen; ++s) {
        FleetSummaryRow row;
        row.scenario = scenarios[s].label;
        row.mean_fc = mean_fc[s];
        row.mean_fh = mean_fh[s];
        row.fc_ratio_pct = nan;
        row.fh_ratio_pct = nan;
        for (std::size_t g = 0; g < n_scen; ++g) {
            if (scenarios[g].family == scenarios[s].family &&
                std::holds_alternative<ServiceGoal>(scenarios[g].criterion)) {
                row.fc_ratio_pct = 100.0 * mean_fc[s] / mean_fc[g];
                row.fh_ratio_pct = 100.0 * mean_fh[s] / mean_fh[g];
                break;
            }
        }
        result.summary.push_back(row);
    }
    return result;
}

std::vector<SweepPoint> sweep_fdi(SweepParameter parameter, double from, double to, int steps,
                                  const Config& cfg, const TwistTable& twist) {
    if (steps < 2) throw ValidationError("sweep needs at least 2 steps");
    if (to < from) throw ValidationError("sweep range must have to >= from");
    const FdiNormalization norm = compute_normalization(cfg, twist);
    const RetirementCriterion esg = ServiceGoal{cfg.design.esg_fc, cfg.design.esg_fh};
    const FlightRecord baseline = design_flight_record(cfg, cfg.design.design_flight_time_h);

    std::vector<SweepPoint> points;
    points.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        const double v = from + (to - from) * i / (steps - 1);
        FlightRecord rec = baseline;
        MonitoringMask mask; // all design
        std::optional<double> altitude_override;
        switch (parameter) {
        case SweepParameter::SeatLoadFactor:
            rec.seat_load_factor = v;
            mask.use_load_factor = true;
            break;
        case SweepParameter::TaxiTime:
            rec.taxi_origin_min = 0.0;
            rec.taxi_dest_min = v;
            mask.use_taxi = true;
            break;
        case SweepParameter::MaxAltitude:
            altitude_override = v;
            break;
        case SweepParameter::Distance:
            rec.distance_km = v;
            rec.flight_time_h = flight_time_for_distance_h(v, cfg.profile, cfg.aircraft);
            mask.use_altitude = true;
            break;
        }
        const FlightIncrement inc =
            per_flight_increment(rec, mask, cfg, twist, norm, altitude_override);
        const std::vector<FlightIncrement> increments{inc};
        const AircraftOutcome outcome = run_simulation("sweep", "sweep", increments, esg);
        points.push_back({v, outcome.final_state.wing_fdi, outcome.final_state.fuselage_fdi});
    }
    return points;
}

} // namespace fdi
