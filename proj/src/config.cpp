#include "fdi/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace fdi {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError("config: key '" + key + "': not a number: '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ParseError("config: key '" + key + "': not an integer: '" + value + "'");
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError("config: " + msg);
}

ClimbSegment parse_segment(const std::string& key, const std::string& value) {
    std::istringstream in(value);
    ClimbSegment seg;
    std::string kind, speed_type;
    if (!(in >> seg.name >> kind >> seg.level_ft >> seg.rate_fpm >> speed_type >> seg.speed))
        throw ParseError("config: key '" + key +
                         "': expected 'name climb|cruise|descent level_ft rate_fpm ias|mach speed'");
    std::string rest;
    if (in >> rest) throw ParseError("config: key '" + key + "': trailing tokens");
    if (kind == "climb") seg.kind = SegmentKind::Climb;
    else if (kind == "cruise") seg.kind = SegmentKind::Cruise;
    else if (kind == "descent") seg.kind = SegmentKind::Descent;
    else throw ParseError("config: key '" + key + "': unknown segment kind '" + kind + "'");
    if (speed_type == "ias") seg.speed_type = SpeedType::Ias;
    else if (speed_type == "mach") seg.speed_type = SpeedType::Mach;
    else throw ParseError("config: key '" + key + "': unknown speed type '" + speed_type + "'");
    return seg;
}

std::string segment_to_string(const ClimbSegment& seg) {
    std::string kind = seg.kind == SegmentKind::Climb    ? "climb"
                       : seg.kind == SegmentKind::Cruise ? "cruise"
                                                         : "descent";
    std::string st = seg.speed_type == SpeedType::Ias ? "ias" : "mach";
    return seg.name + " " + kind + " " + fmt(seg.level_ft) + " " + fmt(seg.rate_fpm) + " " + st +
           " " + fmt(seg.speed);
}

} // namespace

double ClimbProfile::cruise_ceiling_ft() const {
    for (const auto& s : segments)
        if (s.kind == SegmentKind::Cruise) return s.level_ft;
    throw ValidationError("climb profile has no cruise segment");
}

double ClimbProfile::cruise_mach() const {
    for (const auto& s : segments)
        if (s.kind == SegmentKind::Cruise) return s.speed;
    throw ValidationError("climb profile has no cruise segment");
}

ClimbProfile default_climb_profile() {
    // Eurocontrol-style A320 schedule. The initial-climb ceiling of 5,000 ft
    // is the conventional band boundary for this data set.
    ClimbProfile p;
    p.segments = {
        {"initial_climb", SegmentKind::Climb, 5000.0, 2500.0, SpeedType::Ias, 175.0},
        {"climb_to_fl150", SegmentKind::Climb, 15000.0, 2000.0, SpeedType::Ias, 290.0},
        {"climb_to_fl240", SegmentKind::Climb, 24000.0, 1400.0, SpeedType::Ias, 290.0},
        {"mach_climb_to_fl390", SegmentKind::Climb, 39000.0, 1000.0, SpeedType::Mach, 0.78},
        {"cruise", SegmentKind::Cruise, 39000.0, 0.0, SpeedType::Mach, 0.79},
        {"initial_descent_to_fl240", SegmentKind::Descent, 24000.0, 1000.0, SpeedType::Mach, 0.78},
        {"descent_to_fl100", SegmentKind::Descent, 10000.0, 3500.0, SpeedType::Ias, 290.0},
        {"approach", SegmentKind::Descent, 0.0, 1500.0, SpeedType::Ias, 250.0},
    };
    return p;
}

Config default_config() {
    Config cfg;
    cfg.profile = default_climb_profile();
    return cfg;
}

void validate_config(const Config& cfg) {
    const auto& a = cfg.aircraft;
    require(a.fuel_reserve_weight_kg > 0, "fuel_reserve_weight must be > 0");
    require(a.cruise_mach > 0 && a.cruise_mach < 1, "cruise_mach must be in (0, 1)");
    require(a.taxi_fuel_rate_kg_s > 0, "taxi_fuel_rate must be > 0");
    require(a.fuel_reserve_factor > 0, "fuel_reserve_factor must be > 0");
    require(a.gravity_m_s2 > 0, "gravity must be > 0");
    require(a.lift_to_drag > 0, "lift_to_drag must be > 0");
    require(a.max_payload_kg > 0, "max_payload must be > 0");
    require(a.mtow_kg > 0, "mtow must be > 0");
    require(a.max_fuel_kg > 0, "max_fuel must be > 0");
    require(a.misc_payload_kg > 0, "misc_payload must be > 0");
    require(a.min_prop_fuel_kg > 0, "min_prop_fuel must be > 0");
    require(a.seat_count > 0, "seat_count must be > 0");
    require(a.oew_kg > 0, "oew must be > 0");
    require(a.sfc_cruise_kg_ns > 0, "sfc_cruise must be > 0");
    require(a.speed_of_sound_cruise_m_s > 0, "speed_of_sound_cruise must be > 0");
    require(a.pax_weight_kg > 0, "pax_weight must be > 0");
    require(a.oew_kg + a.misc_payload_kg + a.max_payload_kg <= a.mtow_kg,
            "oew + misc_payload + max_payload must not exceed mtow");
    require(a.min_prop_fuel_kg <= a.max_fuel_kg, "min_prop_fuel must not exceed max_fuel");

    const auto& segs = cfg.profile.segments;
    require(!segs.empty(), "climb profile must not be empty");
    int cruise_count = 0;
    double prev_climb = 0.0;
    bool have_climb = false, have_descent = false;
    double prev_descent = 0.0;
    bool first_descent = true;
    for (const auto& s : segs) {
        switch (s.kind) {
        case SegmentKind::Climb:
            require(s.level_ft > prev_climb,
                    "climb segment levels must be strictly increasing (segment '" + s.name + "')");
            prev_climb = s.level_ft;
            have_climb = true;
            require(s.rate_fpm > 0, "climb rate must be > 0 (segment '" + s.name + "')");
            break;
        case SegmentKind::Cruise:
            ++cruise_count;
            require(s.rate_fpm == 0, "cruise rate must be 0");
            break;
        case SegmentKind::Descent:
            require(first_descent || s.level_ft < prev_descent,
                    "descent segment levels must be strictly decreasing (segment '" + s.name + "')");
            prev_descent = s.level_ft;
            first_descent = false;
            have_descent = true;
            require(s.rate_fpm > 0, "descent rate must be > 0 (segment '" + s.name + "')");
            break;
        }
        require(s.speed > 0, "segment speed must be > 0 (segment '" + s.name + "')");
    }
    require(cruise_count == 1, "climb profile must have exactly one cruise segment");
    require(have_climb && have_descent, "climb profile needs climb and descent segments");
    require(prev_climb == cfg.profile.cruise_ceiling_ft(),
            "last climb segment must reach the cruise ceiling");
    require(prev_descent == 0.0, "last descent segment must reach 0 ft");

    const auto& m = cfg.material;
    require(m.m_sigma >= 0 && m.m_sigma < 1, "m_sigma must be in [0, 1)");
    require(m.c1_mpa > 0, "c1 must be > 0");
    require(m.c1_mpa < m.c2_mpa, "c1 < c2 required");
    require(m.c3 > 0, "c3 must be > 0");
    require(m.c4 > 0, "c4 must be > 0");

    require(cfg.atmosphere.p0_hpa > 0, "p0 must be > 0");
    require(cfg.atmosphere.scale_height_m > 0, "scale_height must be > 0");

    require(cfg.fuselage.diameter_mean_m > 0, "fuselage diameter_mean must be > 0");
    require(cfg.fuselage.skin_thickness_m > 0, "fuselage skin_thickness must be > 0");
    require(cfg.fuselage.skin_thickness_m < cfg.fuselage.diameter_mean_m / 100.0,
            "fuselage skin_thickness must be small against diameter_mean");

    const auto& d = cfg.design;
    require(d.design_mean_stress_mpa > 0, "design_mean_stress must be > 0");
    require(d.design_flight_time_h > 0, "design_flight_time must be > 0");
    require(d.design_taxi_time_min > 0, "design_taxi_time must be > 0");
    require(d.design_max_altitude_ft > 0, "design_max_altitude must be > 0");
    require(d.twist_block_flights > 0, "twist_block_flights must be > 0");
    require(d.dsg_fc > 0 && d.dsg_fh > 0 && d.esg_fc > 0 && d.esg_fh > 0,
            "service goal limits must be > 0");
    require(d.dsg_fc < d.esg_fc, "dsg_fc < esg_fc required");
    require(d.dsg_fh < d.esg_fh, "dsg_fh < esg_fh required");
    require(d.dsg_design_flight_time_h > 0, "dsg_design_flight_time must be > 0");
}

Config parse_config(const std::string& text) {
    Config cfg = default_config();

    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters;
    auto dbl = [&](const char* key, double& field) {
        setters[key] = [&field](const std::string& k, const std::string& v) {
            field = parse_double(k, v);
        };
    };
    auto& a = cfg.aircraft;
    dbl("aircraft.fuel_reserve_weight", a.fuel_reserve_weight_kg);
    dbl("aircraft.cruise_mach", a.cruise_mach);
    dbl("aircraft.taxi_fuel_rate", a.taxi_fuel_rate_kg_s);
    dbl("aircraft.fuel_reserve_factor", a.fuel_reserve_factor);
    dbl("aircraft.gravity", a.gravity_m_s2);
    dbl("aircraft.lift_to_drag", a.lift_to_drag);
    dbl("aircraft.max_payload", a.max_payload_kg);
    dbl("aircraft.mtow", a.mtow_kg);
    dbl("aircraft.max_fuel", a.max_fuel_kg);
    dbl("aircraft.misc_payload", a.misc_payload_kg);
    dbl("aircraft.min_prop_fuel", a.min_prop_fuel_kg);
    setters["aircraft.seat_count"] = [&a](const std::string& k, const std::string& v) {
        a.seat_count = parse_int(k, v);
    };
    dbl("aircraft.oew", a.oew_kg);
    dbl("aircraft.sfc_cruise", a.sfc_cruise_kg_ns);
    dbl("aircraft.speed_of_sound_cruise", a.speed_of_sound_cruise_m_s);
    dbl("aircraft.pax_weight", a.pax_weight_kg);

    auto& m = cfg.material;
    dbl("material.m_sigma", m.m_sigma);
    dbl("material.c1", m.c1_mpa);
    dbl("material.c2", m.c2_mpa);
    dbl("material.c3", m.c3);
    dbl("material.c4", m.c4);
    dbl("material.kt", m.kt);

    dbl("atmosphere.p0", cfg.atmosphere.p0_hpa);
    dbl("atmosphere.scale_height", cfg.atmosphere.scale_height_m);

    dbl("fuselage.diameter_mean", cfg.fuselage.diameter_mean_m);
    dbl("fuselage.skin_thickness", cfg.fuselage.skin_thickness_m);

    auto& d = cfg.design;
    dbl("design.mean_stress", d.design_mean_stress_mpa);
    dbl("design.flight_time", d.design_flight_time_h);
    dbl("design.taxi_time", d.design_taxi_time_min);
    dbl("design.max_altitude", d.design_max_altitude_ft);
    dbl("design.twist_block_flights", d.twist_block_flights);
    dbl("design.dsg_fc", d.dsg_fc);
    dbl("design.dsg_fh", d.dsg_fh);
    dbl("design.esg_fc", d.esg_fc);
    dbl("design.esg_fh", d.esg_fh);
    dbl("design.dsg_flight_time", d.dsg_design_flight_time_h);

    // profile.N keys replace the default schedule wholesale on first use
    std::map<int, ClimbSegment> profile_rows;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("config: line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.rfind("profile.", 0) == 0) {
            int idx = parse_int(key, key.substr(8));
            profile_rows[idx] = parse_segment(key, value);
            continue;
        }
        auto it = setters.find(key);
        if (it == setters.end())
            throw ParseError("config: line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        it->second(key, value);
    }

    if (!profile_rows.empty()) {
        cfg.profile.segments.clear();
        for (auto& [idx, seg] : profile_rows) cfg.profile.segments.push_back(std::move(seg));
    }

    validate_config(cfg);
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const Config& cfg) {
    std::ostringstream out;
    out << "# Fatigue-damage-index configuration.\n"
           "# Units: weights kg, speeds m/s unless noted, altitudes/levels ft, rates ft/min,\n"
           "# times h (flight) / min (taxi), stresses MPa, pressures hPa, lengths m.\n"
           "# aircraft.sfc_cruise is kg/(N*s); Table values quoted in g/(kN*s) divide by 1e6.\n"
           "# profile.N = name climb|cruise|descent level_ft rate_fpm ias|mach speed\n\n";
    const auto& a = cfg.aircraft;
    out << "aircraft.fuel_reserve_weight = " << fmt(a.fuel_reserve_weight_kg) << "\n";
    out << "aircraft.cruise_mach = " << fmt(a.cruise_mach) << "\n";
    out << "aircraft.taxi_fuel_rate = " << fmt(a.taxi_fuel_rate_kg_s) << "\n";
    out << "aircraft.fuel_reserve_factor = " << fmt(a.fuel_reserve_factor) << "\n";
    out << "aircraft.gravity = " << fmt(a.gravity_m_s2) << "\n";
    out << "aircraft.lift_to_drag = " << fmt(a.lift_to_drag) << "\n";
    out << "aircraft.max_payload = " << fmt(a.max_payload_kg) << "\n";
    out << "aircraft.mtow = " << fmt(a.mtow_kg) << "\n";
    out << "aircraft.max_fuel = " << fmt(a.max_fuel_kg) << "\n";
    out << "aircraft.misc_payload = " << fmt(a.misc_payload_kg) << "\n";
    out << "aircraft.min_prop_fuel = " << fmt(a.min_prop_fuel_kg) << "\n";
    out << "aircraft.seat_count = " << a.seat_count << "\n";
    out << "aircraft.oew = " << fmt(a.oew_kg) << "\n";
    out << "aircraft.sfc_cruise = " << fmt(a.sfc_cruise_kg_ns) << "\n";
    out << "aircraft.speed_of_sound_cruise = " << fmt(a.speed_of_sound_cruise_m_s) << "\n";
    out << "aircraft.pax_weight = " << fmt(a.pax_weight_kg) << "\n\n";
    for (std::size_t i = 0; i < cfg.profile.segments.size(); ++i)
        out << "profile." << i << " = " << segment_to_string(cfg.profile.segments[i]) << "\n";
    out << "\n";
    const auto& m = cfg.material;
    out << "material.m_sigma = " << fmt(m.m_sigma) << "\n";
    out << "material.c1 = " << fmt(m.c1_mpa) << "\n";
    out << "material.c2 = " << fmt(m.c2_mpa) << "\n";
    out << "material.c3 = " << fmt(m.c3) << "\n";
    out << "material.c4 = " << fmt(m.c4) << "\n";
    out << "material.kt = " << fmt(m.kt) << "\n\n";
    out << "atmosphere.p0 = " << fmt(cfg.atmosphere.p0_hpa) << "\n";
    out << "atmosphere.scale_height = " << fmt(cfg.atmosphere.scale_height_m) << "\n\n";
    out << "fuselage.diameter_mean = " << fmt(cfg.fuselage.diameter_mean_m) << "\n";
    out << "fuselage.skin_thickness = " << fmt(cfg.fuselage.skin_thickness_m) << "\n\n";
    const auto& d = cfg.design;
    out << "design.mean_stress = " << fmt(d.design_mean_stress_mpa) << "\n";
    out << "design.flight_time = " << fmt(d.design_flight_time_h) << "\n";
    out << "design.taxi_time = " << fmt(d.design_taxi_time_min) << "\n";
    out << "design.max_altitude = " << fmt(d.design_max_altitude_ft) << "\n";
    out << "design.twist_block_flights = " << fmt(d.twist_block_flights) << "\n";
    out << "design.dsg_fc = " << fmt(d.dsg_fc) << "\n";
    out << "design.dsg_fh = " << fmt(d.dsg_fh) << "\n";
    out << "design.esg_fc = " << fmt(d.esg_fc) << "\n";
    out << "design.esg_fh = " << fmt(d.esg_fh) << "\n";
    out << "design.dsg_flight_time = " << fmt(d.dsg_design_flight_time_h) << "\n";
    return out.str();
}

void save_config(const Config& cfg, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("config: cannot write '" + path.string() + "'");
    out << serialize_config(cfg);
    if (!out) throw IoError("config: write failed for '" + path.string() + "'");
}

} // namespace fdi
