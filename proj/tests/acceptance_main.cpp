// Acceptance suite: one binary, one pass/fail line per criterion. Each check
// pins its tolerance in code; failures carry the measured numbers.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fdi/fatigue.hpp"
#include "fdi/fleet.hpp"
#include "fdi/fuselage.hpp"
#include "fdi/io.hpp"
#include "fdi/rng.hpp"

using namespace fdi;

namespace {

const Config kCfg = default_config();
const TwistTable kTwist = load_twist(FDI_DATA_DIR "/twist.csv");
const FdiNormalization kNorm = compute_normalization(kCfg, kTwist);

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

#define EXPECT(o, cond, ...)                                                                  \
    do {                                                                                      \
        if (!(cond)) {                                                                        \
            (o).pass = false;                                                                 \
            char buf_[256];                                                                   \
            std::snprintf(buf_, sizeof(buf_), __VA_ARGS__);                                   \
            (o).detail << " [" << buf_ << "]";                                                \
        }                                                                                     \
    } while (0)

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- 1: normalization identity -------------------------------------------
Outcome criterion_normalization(double time_budget_s) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<FlightRecord> history{design_flight_record(kCfg, 2.0)};
    const MonitoringMask design_mask{}; // design LF, taxi, altitude
    const AircraftOutcome r = simulate_aircraft("design", history, FdiThreshold{1.0, 1.0},
                                                design_mask, kCfg, kTwist, kNorm, "fdi-esg");
    const FlightIncrement inc =
        per_flight_increment(history[0], design_mask, kCfg, kTwist, kNorm);
    const double elapsed = seconds_since(t0);

    EXPECT(o, std::labs(r.flights_flown - 60000) <= 1, "FC=%ld not within 60000 +/- 1",
           r.flights_flown);
    EXPECT(o, std::abs(r.final_state.flight_hours - 120000.0) <= 2.0,
           "FH=%.3f not within 120000 +/- 2", r.final_state.flight_hours);
    // 1e-9 pads the lower bound against accumulation rounding; it is seven
    // orders of magnitude below the per-flight increment.
    const double lo = 1.0 - 1e-9;
    EXPECT(o, r.final_state.wing_fdi >= lo && r.final_state.wing_fdi <= 1.0 + inc.wing + 1e-9,
           "wing FDI=%.12f outside [1, 1+inc]", r.final_state.wing_fdi);
    EXPECT(o,
           r.final_state.fuselage_fdi >= lo &&
               r.final_state.fuselage_fdi <= 1.0 + inc.fuselage + 1e-9,
           "fuselage FDI=%.12f outside [1, 1+inc]", r.final_state.fuselage_fdi);
    EXPECT(o, elapsed < time_budget_s, "runtime %.2fs exceeds %.0fs", elapsed, time_budget_s);
    o.detail << " FC=" << r.flights_flown << " wing=" << r.final_state.wing_fdi
             << " fus=" << r.final_state.fuselage_fdi;
    return o;
}

// --- 2: DSG flight-hour binding -------------------------------------------
Outcome criterion_dsg_binding() {
    Outcome o;
    const std::vector<FlightRecord> history{design_flight_record(kCfg, 2.0)};
    const AircraftOutcome r =
        simulate_aircraft("design", history, ServiceGoal{kCfg.design.dsg_fc, kCfg.design.dsg_fh},
                          MonitoringMask{}, kCfg, kTwist, kNorm, "dsg");
    EXPECT(o, r.flights_flown == 30000, "FC=%ld, expected 30000", r.flights_flown);
    EXPECT(o, r.final_state.flight_hours == 60000.0, "FH=%.6f, expected 60000 exactly",
           r.final_state.flight_hours);
    EXPECT(o, r.retired_because == RetirementCause::FlightHours, "cause=%s, expected fh",
           to_string(r.retired_because).c_str());
    o.detail << " FC=" << r.flights_flown << " FH=" << r.final_state.flight_hours << " cause="
             << to_string(r.retired_because);
    return o;
}

// --- 3: taxi insensitivity -------------------------------------------------
Outcome criterion_taxi_insensitivity(double time_budget_s) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto points = sweep_fdi(SweepParameter::TaxiTime, 0.0, 60.0, 21, kCfg, kTwist);
    const double elapsed = seconds_since(t0);
    double wing_min = points[0].wing_fdi, wing_max = points[0].wing_fdi;
    bool fus_constant = true;
    for (const auto& p : points) {
        wing_min = std::min(wing_min, p.wing_fdi);
        wing_max = std::max(wing_max, p.wing_fdi);
        fus_constant = fus_constant && (p.fuselage_fdi == points[0].fuselage_fdi);
    }
    const double wing_change = (wing_max - wing_min) / wing_min;
    EXPECT(o, fus_constant, "fuselage FDI varied over the taxi sweep");
    EXPECT(o, wing_change < 0.01, "wing FDI change %.4f%% >= 1%%", 100.0 * wing_change);
    EXPECT(o, elapsed < time_budget_s, "runtime %.2fs exceeds %.0fs", elapsed, time_budget_s);
    o.detail << " wing change=" << 100.0 * wing_change << "% fus constant=" << fus_constant;
    return o;
}

// --- 4: sensitivity directions ---------------------------------------------
Outcome criterion_sensitivity_directions() {
    Outcome o;
    const auto lf = sweep_fdi(SweepParameter::SeatLoadFactor, 0.0, 1.0, 20, kCfg, kTwist);
    for (std::size_t i = 1; i < lf.size(); ++i) {
        EXPECT(o, lf[i].wing_fdi > lf[i - 1].wing_fdi,
               "wing FDI not strictly increasing in LF at point %zu", i);
        EXPECT(o, lf[i].fuselage_fdi == lf[0].fuselage_fdi,
               "fuselage FDI not bitwise-invariant in LF at point %zu", i);
    }
    // the altitude sweep starts above the fatigue-limit knee (~15.5 kft),
    // below which the single pressurization cycle causes no damage at all
    const auto alt = sweep_fdi(SweepParameter::MaxAltitude, 25000.0, 39100.0, 20, kCfg, kTwist);
    for (std::size_t i = 1; i < alt.size(); ++i) {
        EXPECT(o, alt[i].fuselage_fdi > alt[i - 1].fuselage_fdi,
               "fuselage FDI not strictly increasing in altitude at point %zu", i);
        EXPECT(o, alt[i].wing_fdi == alt[0].wing_fdi,
               "wing FDI not bitwise-invariant in altitude at point %zu", i);
    }
    const auto taxi = sweep_fdi(SweepParameter::TaxiTime, 0.0, 60.0, 20, kCfg, kTwist);
    for (std::size_t i = 1; i < taxi.size(); ++i)
        EXPECT(o, taxi[i].fuselage_fdi == taxi[0].fuselage_fdi,
               "fuselage FDI not bitwise-invariant in taxi at point %zu", i);
    o.detail << " lf wing " << lf.front().wing_fdi << "->" << lf.back().wing_fdi << ", alt fus "
             << alt.front().fuselage_fdi << "->" << alt.back().fuselage_fdi;
    return o;
}

// --- 5: distance effect ------------------------------------------------------
Outcome criterion_distance_effect(double time_budget_s) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    // design point is the 2 h-equivalent distance (~1588 km); sweep above it
    const double d_design =
        distance_for_flight_time_km(kCfg.design.design_flight_time_h, kCfg.profile, kCfg.aircraft);
    const auto pts = sweep_fdi(SweepParameter::Distance, d_design + 100.0, 8000.0, 10, kCfg,
                               kTwist);
    const double elapsed = seconds_since(t0);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        EXPECT(o, pts[i].wing_fdi <= pts[i - 1].wing_fdi,
               "wing FDI increased %.6f -> %.6f at d=%.0f km", pts[i - 1].wing_fdi,
               pts[i].wing_fdi, pts[i].parameter);
        EXPECT(o, pts[i].fuselage_fdi <= pts[i - 1].fuselage_fdi,
               "fuselage FDI increased %.6f -> %.6f at d=%.0f km", pts[i - 1].fuselage_fdi,
               pts[i].fuselage_fdi, pts[i].parameter);
    }
    EXPECT(o, elapsed < time_budget_s, "runtime %.2fs exceeds %.0fs", elapsed, time_budget_s);
    o.detail << " wing " << pts.front().wing_fdi << "->" << pts.back().wing_fdi << ", fus "
             << pts.front().fuselage_fdi << "->" << pts.back().fuselage_fdi;
    return o;
}

// --- 6: Haigh/S-N property suite ---------------------------------------------
Outcome criterion_fatigue_properties() {
    Outcome o;
    const MaterialParams& mat = kCfg.material;
    Rng rng(987654321);
    const double m = mat.m_sigma;
    for (int i = 0; i < 10000 && o.pass; ++i) {
        const double sa = 1e-3 + 400.0 * rng.uniform();
        // regime continuity at R = 0 (S_m = S_a) and R = 0.5 (S_m = 3 S_a)
        const double left_r0 = sa + m * sa;
        const double right_r0 = sa * (1.0 + m) * (3.0 + m) / (3.0 + m);
        const double impl_r0 = equivalent_amplitude({sa, sa, 1.0}, mat);
        EXPECT(o, std::abs(impl_r0 - left_r0) <= 1e-12 * left_r0, "R=0 continuity (left)");
        EXPECT(o, std::abs(impl_r0 - right_r0) <= 1e-12 * right_r0, "R=0 continuity (right)");
        const double left_r05 = sa * (1.0 + m) * (3.0 + 3.0 * m) / (3.0 + m);
        const double right_r05 = 3.0 * sa * (1.0 + m) * (1.0 + m) / (3.0 + m);
        const double impl_r05 = equivalent_amplitude({3.0 * sa, sa, 1.0}, mat);
        EXPECT(o, std::abs(impl_r05 - left_r05) <= 1e-12 * left_r05, "R=0.5 continuity (left)");
        EXPECT(o, std::abs(impl_r05 - right_r05) <= 1e-12 * right_r05,
               "R=0.5 continuity (right)");
    }
    EXPECT(o, cycles_to_failure(mat.c2_mpa, mat) == 1.0, "N(C2) != 1");
    double prev = std::numeric_limits<double>::infinity();
    for (double amp = mat.c1_mpa + 0.25; amp < mat.c2_mpa; amp += 0.25) {
        const double n = cycles_to_failure(amp, mat);
        if (!(n < prev)) {
            EXPECT(o, false, "N not strictly decreasing at %.2f MPa", amp);
            break;
        }
        prev = n;
    }
    for (int trial = 0; trial < 100 && o.pass; ++trial) {
        LoadSpectrum a, b;
        for (int i = 0; i < 15; ++i) {
            a.entries.push_back({SpectrumSegment::Flight,
                                 {-150.0 + 350.0 * rng.uniform(), 1.0 + 250.0 * rng.uniform(),
                                  10.0 * rng.uniform()}});
            b.entries.push_back({SpectrumSegment::Ground,
                                 {-150.0 + 350.0 * rng.uniform(), 1.0 + 250.0 * rng.uniform(),
                                  10.0 * rng.uniform()}});
        }
        LoadSpectrum both = a;
        both.entries.insert(both.entries.end(), b.entries.begin(), b.entries.end());
        const double sum = miner_damage(a, mat) + miner_damage(b, mat);
        EXPECT(o, std::abs(miner_damage(both, mat) - sum) <= 1e-12 * std::max(sum, 1e-300),
               "Miner additivity violated (trial %d)", trial);
        LoadSpectrum shuffled = both;
        std::mt19937 perm(trial);
        std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), perm);
        const double orig = miner_damage(both, mat);
        EXPECT(o,
               std::abs(miner_damage(shuffled, mat) - orig) <= 1e-12 * std::max(orig, 1e-300),
               "Miner permutation invariance violated (trial %d)", trial);
    }
    o.detail << " 10000 boundary bins, 100 spectra";
    return o;
}

// --- 7: closed-form oracle equivalence ---------------------------------------
Outcome criterion_closed_form() {
    Outcome o;
    Rng rng(1357);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        FlightRecord rec;
        rec.aircraft_id = "cf";
        rec.distance_km = 200.0 + 5500.0 * rng.uniform();
        rec.flight_time_h =
            flight_time_for_distance_h(rec.distance_km, kCfg.profile, kCfg.aircraft) *
            (0.85 + 0.3 * rng.uniform());
        rec.seat_load_factor = rng.uniform();
        rec.taxi_origin_min = 30.0 * rng.uniform();
        rec.taxi_dest_min = 30.0 * rng.uniform();
        const MonitoringMask mask{rng.uniform() < 0.5, rng.uniform() < 0.5,
                                  rng.uniform() < 0.5};
        const FlightIncrement inc = per_flight_increment(rec, mask, kCfg, kTwist, kNorm);
        // limits strictly between multiples of the increment keep the
        // ceiling unambiguous under floating-point accumulation
        const double mlim = 1.0 + std::floor(rng.uniform() * 999.0);
        const double frac = 0.1 + 0.8 * rng.uniform();
        RetirementCriterion criterion;
        long expected;
        if (trial % 2 == 0) {
            // half of these bind on flight cycles, half on flight hours
            const double fh_scale = trial % 4 == 0 ? 2.0 : 0.5;
            const double fh_limit = (mlim + frac) * rec.flight_time_h * fh_scale;
            criterion = ServiceGoal{mlim, fh_limit};
            expected = std::min(static_cast<long>(mlim),
                                static_cast<long>(std::ceil(fh_limit / rec.flight_time_h)));
        } else {
            if (inc.fuselage == 0.0 || inc.wing == 0.0) continue;
            const double wing_limit = (mlim + frac) * inc.wing;
            const double fus_limit = (mlim + frac) * inc.fuselage * (trial % 4 == 1 ? 0.5 : 2.0);
            criterion = FdiThreshold{wing_limit, fus_limit};
            expected = std::min(static_cast<long>(std::ceil(wing_limit / inc.wing)),
                                static_cast<long>(std::ceil(fus_limit / inc.fuselage)));
        }
        const std::vector<FlightRecord> history{rec};
        const AircraftOutcome r =
            simulate_aircraft("cf", history, criterion, mask, kCfg, kTwist, kNorm, "t");
        if (r.flights_flown != expected)
            EXPECT(o, false, "trial %d: sim %ld != closed form %ld", trial, r.flights_flown,
                   expected);
        ++checked;
    }
    o.detail << " " << checked << " parameter sets";
    return o;
}

FleetDataset make_synthetic_fleet() {
    SyntheticFleetSpec spec;
    spec.aircraft_count = 1000;
    spec.flights_per_aircraft = 50;
    spec.flight_time_mean_h = 2.0;
    spec.flight_time_sd_h = 0.4;
    spec.lf_mean = 0.8;
    spec.lf_sd = 0.1;
    spec.taxi_total_mean_min = 25.0;
    spec.taxi_total_sd_min = 8.0;
    spec.seed = 20240901;
    return generate_synthetic_fleet(spec, kCfg);
}

std::vector<Scenario> reference_scenarios() {
    const MonitoringMask lf_alt{true, true, false};
    return {make_service_goal_scenario(ScenarioFamily::Dsg, lf_alt, kCfg),
            make_service_goal_scenario(ScenarioFamily::Esg, lf_alt, kCfg),
            make_fdi_scenario(ScenarioFamily::Dsg, lf_alt, kNorm),
            make_fdi_scenario(ScenarioFamily::Esg, lf_alt, kNorm)};
}

// --- 8: qualitative lifetime-table direction ---------------------------------
Outcome criterion_synthetic_direction(const FleetDataset& fleet, double time_budget_s) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const auto scenarios = reference_scenarios();
    const FleetResult result = simulate_fleet(fleet, scenarios, kCfg, kTwist, 1);
    const double elapsed = seconds_since(t0);

    const auto& dsg = result.summary[0];
    const auto& esg = result.summary[1];
    const auto& fdi_dsg = result.summary[2];
    const auto& fdi_esg = result.summary[3];
    EXPECT(o, fdi_dsg.fc_ratio_pct > 100.0, "FDI(DSG) FC ratio %.1f%% <= 100%%",
           fdi_dsg.fc_ratio_pct);
    EXPECT(o, fdi_dsg.fh_ratio_pct > 100.0, "FDI(DSG) FH ratio %.1f%% <= 100%%",
           fdi_dsg.fh_ratio_pct);
    EXPECT(o, fdi_esg.fc_ratio_pct > 100.0, "FDI(ESG) FC ratio %.1f%% <= 100%%",
           fdi_esg.fc_ratio_pct);
    EXPECT(o, fdi_esg.fh_ratio_pct > 100.0, "FDI(ESG) FH ratio %.1f%% <= 100%%",
           fdi_esg.fh_ratio_pct);
    EXPECT(o, fdi_dsg.fc_ratio_pct > fdi_esg.fc_ratio_pct,
           "DSG gain %.1f%% not above ESG gain %.1f%%", fdi_dsg.fc_ratio_pct,
           fdi_esg.fc_ratio_pct);
    EXPECT(o, fdi_dsg.fh_ratio_pct > fdi_esg.fh_ratio_pct,
           "DSG FH gain %.1f%% not above ESG FH gain %.1f%%", fdi_dsg.fh_ratio_pct,
           fdi_esg.fh_ratio_pct);
    EXPECT(o, elapsed < time_budget_s, "runtime %.1fs exceeds %.0fs", elapsed, time_budget_s);
    o.detail << " DSG " << dsg.mean_fc << " -> FDI " << fdi_dsg.mean_fc << " ("
             << fdi_dsg.fc_ratio_pct << "%), ESG " << esg.mean_fc << " -> FDI "
             << fdi_esg.mean_fc << " (" << fdi_esg.fc_ratio_pct << "%), " << elapsed << "s";
    return o;
}

// --- 9: performance envelope ---------------------------------------------------
Outcome criterion_performance(const FleetDataset& fleet, double time_budget_s) {
    Outcome o;
    const auto scenarios = reference_scenarios();
    const auto t0 = std::chrono::steady_clock::now();
    const FleetResult serial = simulate_fleet(fleet, scenarios, kCfg, kTwist, 1);
    const double t_serial = seconds_since(t0);
    const auto t1 = std::chrono::steady_clock::now();
    const FleetResult parallel = simulate_fleet(fleet, scenarios, kCfg, kTwist, 4);
    const double t_parallel = seconds_since(t1);

    bool identical = serial.outcomes.size() == parallel.outcomes.size();
    for (std::size_t i = 0; identical && i < serial.outcomes.size(); ++i) {
        identical = serial.outcomes[i].flights_flown == parallel.outcomes[i].flights_flown &&
                    serial.outcomes[i].final_state.wing_fdi ==
                        parallel.outcomes[i].final_state.wing_fdi &&
                    serial.outcomes[i].final_state.fuselage_fdi ==
                        parallel.outcomes[i].final_state.fuselage_fdi &&
                    serial.outcomes[i].final_state.flight_hours ==
                        parallel.outcomes[i].final_state.flight_hours;
    }
    const double speedup = t_serial / t_parallel;
    EXPECT(o, identical, "parallel outcomes differ from serial");
    EXPECT(o, speedup >= 2.0, "speedup %.2fx < 2x (1 thread %.1fs, 4 threads %.1fs)", speedup,
           t_serial, t_parallel);
    EXPECT(o, t_serial + t_parallel < time_budget_s, "runtime %.1fs exceeds %.0fs",
           t_serial + t_parallel, time_budget_s);
    o.detail << " 1-thread " << t_serial << "s, 4-thread " << t_parallel << "s, speedup "
             << speedup << "x, machine cores=" << std::thread::hardware_concurrency();
    return o;
}

} // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome outcome;
    };
    std::vector<Entry> entries;
    entries.push_back({"normalization identity", criterion_normalization(5.0)});
    entries.push_back({"DSG flight-hour binding", criterion_dsg_binding()});
    entries.push_back({"taxi insensitivity", criterion_taxi_insensitivity(10.0)});
    entries.push_back({"sensitivity directions", criterion_sensitivity_directions()});
    entries.push_back({"distance effect", criterion_distance_effect(60.0)});
    entries.push_back({"Haigh/S-N property suite", criterion_fatigue_properties()});
    entries.push_back({"closed-form oracle equivalence", criterion_closed_form()});
    const FleetDataset fleet = make_synthetic_fleet();
    entries.push_back({"synthetic lifetime-table direction",
                       criterion_synthetic_direction(fleet, 600.0)});
    entries.push_back({"performance envelope", criterion_performance(fleet, 600.0)});

    int failures = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        std::printf("[%zu/9] %-36s %s%s\n", i + 1, e.name, e.outcome.pass ? "PASS" : "FAIL",
                    e.outcome.detail.str().c_str());
        if (!e.outcome.pass) ++failures;
    }
    if (failures == 0)
        std::printf("RESULT: all 9 acceptance criteria passed\n");
    else
        std::printf("RESULT: %d of 9 acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
