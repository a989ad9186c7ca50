#include "fdi/wing.hpp"

#include <fstream>
#include <sstream>

namespace fdi {

void validate_twist(const TwistTable& table, double block_flights) {
    if (table.rows.empty()) throw ValidationError("twist: table is empty");
    int gag_rows = 0;
    bool has_flight = false, has_ground = false;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        const std::string where = "twist: row " + std::to_string(i + 1);
        if (row.relative_amplitude <= 0)
            throw ValidationError(where + ": relative_amplitude must be > 0");
        if (row.cycles_per_block <= 0)
            throw ValidationError(where + ": cycles_per_block must be > 0");
        switch (row.segment) {
        case SpectrumSegment::Flight:
            has_flight = true;
            break;
        case SpectrumSegment::Ground:
            has_ground = true;
            if (row.relative_mean >= 0)
                throw ValidationError(where + ": ground rows must have relative_mean < 0");
            break;
        case SpectrumSegment::GroundAirGround:
            ++gag_rows;
            if (row.cycles_per_block != block_flights)
                throw ValidationError(where + ": gag row must have cycles_per_block = " +
                                      std::to_string(block_flights) + " (one per flight)");
            break;
        }
    }
    if (gag_rows != 1)
        throw ValidationError("twist: expected exactly one gag row, found " +
                              std::to_string(gag_rows));
    if (!has_flight) throw ValidationError("twist: no flight rows");
    if (!has_ground) throw ValidationError("twist: no ground rows");
}

TwistTable load_twist(const std::filesystem::path& path, double block_flights) {
    std::ifstream in(path);
    if (!in) throw IoError("twist: cannot open '" + path.string() + "'");
    TwistTable table;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) { // first data-ish line is the column header
            header_seen = true;
            continue;
        }
        std::istringstream row_in(line);
        std::string segment, field;
        TwistRow row;
        const std::string where = "twist: '" + path.string() + "' line " + std::to_string(line_no);
        try {
            if (!std::getline(row_in, segment, ',')) throw ParseError("");
            if (!std::getline(row_in, field, ',')) throw ParseError("");
            row.relative_mean = std::stod(field);
            if (!std::getline(row_in, field, ',')) throw ParseError("");
            row.relative_amplitude = std::stod(field);
            if (!std::getline(row_in, field, ',')) throw ParseError("");
            row.cycles_per_block = std::stod(field);
        } catch (const std::exception&) {
            throw ParseError(where + ": expected 'segment,relative_mean,relative_amplitude,"
                                     "cycles_per_block'");
        }
        if (segment == "flight") row.segment = SpectrumSegment::Flight;
        else if (segment == "ground") row.segment = SpectrumSegment::Ground;
        else if (segment == "gag") row.segment = SpectrumSegment::GroundAirGround;
        else throw ParseError(where + ": unknown segment '" + segment + "'");
        table.rows.push_back(row);
    }
    validate_twist(table, block_flights);
    return table;
}

WingScalingRules wing_rules_from(const Config& cfg) {
    WingScalingRules rules;
    rules.design_mean_stress_mpa = cfg.design.design_mean_stress_mpa;
    rules.design_flight_time_h = cfg.design.design_flight_time_h;
    rules.design_taxi_time_min = cfg.design.design_taxi_time_min;
    rules.design_weight_kg = cfg.aircraft.mtow_kg;
    rules.block_flights = cfg.design.twist_block_flights;
    return rules;
}

LoadSpectrum scale_spectrum(const TwistTable& twist, const FlightLoadsInput& loads,
                            const WingScalingRules& rules) {
    const double mean_flight_stress =
        rules.design_mean_stress_mpa * loads.takeoff_weight_kg / rules.design_weight_kg;
    const double flight_count_scale = loads.flight_time_h / rules.design_flight_time_h;
    const double ground_count_scale = loads.total_taxi_time_min / rules.design_taxi_time_min;

    LoadSpectrum spectrum;
    spectrum.entries.reserve(twist.rows.size());
    for (const auto& row : twist.rows) {
        SpectrumEntry entry;
        entry.segment = row.segment;
        entry.bin.mean_stress_mpa = row.relative_mean * mean_flight_stress;
        entry.bin.amplitude_stress_mpa = row.relative_amplitude * rules.design_mean_stress_mpa;
        double count = row.cycles_per_block / rules.block_flights;
        switch (row.segment) {
        case SpectrumSegment::Flight:
            count *= flight_count_scale;
            break;
        case SpectrumSegment::Ground:
            count *= ground_count_scale;
            break;
        case SpectrumSegment::GroundAirGround:
            break; // one per flight, unscaled
        }
        entry.bin.cycle_count = count;
        spectrum.entries.push_back(entry);
    }
    return spectrum;
}

double wing_damage_per_flight(const FlightLoadsInput& loads, const TwistTable& twist,
                              const WingScalingRules& rules, const MaterialParams& mat) {
    return miner_damage(scale_spectrum(twist, loads, rules), mat);
}

} // namespace fdi
