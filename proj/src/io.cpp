#include "fdi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fdi/rng.hpp"

namespace fdi {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_field(const std::string& value, const std::string& where, const char* name) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ParseError(where + ": field '" + std::string(name) + "' is not a number: '" +
                         value + "'");
    }
}

std::string sanitize_label(const std::string& label) {
    std::string out = label;
    for (char& c : out)
        if (c == ':' || c == '/' || c == '\\' || c == ' ') c = '_';
    return out;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
}

void write_histogram(const std::filesystem::path& path, const std::vector<double>& values) {
    constexpr int kBins = 50;
    double max_value = 0.0;
    for (double v : values) max_value = std::max(max_value, v);
    if (max_value <= 0.0) max_value = 1.0;
    std::vector<long> counts(kBins, 0);
    for (double v : values) {
        int bin = static_cast<int>(v / max_value * kBins);
        if (bin >= kBins) bin = kBins - 1; // the maximum lands in the last bin
        if (bin < 0) bin = 0;
        ++counts[bin];
    }
    auto out = open_out(path);
    out << "bin_low,bin_high,count\n";
    for (int b = 0; b < kBins; ++b)
        out << fmt(max_value * b / kBins) << "," << fmt(max_value * (b + 1) / kBins) << ","
            << counts[b] << "\n";
}

} // namespace

FleetDataset parse_fleet_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("fleet csv: cannot open '" + path.string() + "'");
    FleetDataset fleet;
    fleet.provenance = path.string();
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    long records = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const std::string where = "fleet csv: '" + path.string() + "' line " +
                                  std::to_string(line_no);
        const auto fields = split_csv(line);
        if (fields.size() != 6)
            throw ParseError(where + ": expected 6 columns, got " +
                             std::to_string(fields.size()));
        FlightRecord rec;
        rec.aircraft_id = fields[0];
        if (rec.aircraft_id.empty()) throw ParseError(where + ": empty aircraft_id");
        rec.distance_km = parse_field(fields[1], where, "distance_km");
        rec.flight_time_h = parse_field(fields[2], where, "flight_time_h");
        rec.seat_load_factor = parse_field(fields[3], where, "seat_load_factor");
        rec.taxi_origin_min = parse_field(fields[4], where, "taxi_origin_min");
        rec.taxi_dest_min = parse_field(fields[5], where, "taxi_dest_min");
        try {
            validate_record(rec);
        } catch (const ValidationError& e) {
            throw ValidationError(where + ": " + e.what());
        }
        fleet.histories[rec.aircraft_id].push_back(std::move(rec));
        ++records;
    }
    if (records == 0) throw ValidationError("fleet csv: '" + path.string() + "': no records");
    return fleet;
}

void write_fleet_csv(const FleetDataset& fleet, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "aircraft_id,distance_km,flight_time_h,seat_load_factor,taxi_origin_min,taxi_dest_min\n";
    for (const auto& [id, history] : fleet.histories)
        for (const auto& rec : history)
            out << id << "," << fmt(rec.distance_km) << "," << fmt(rec.flight_time_h) << ","
                << fmt(rec.seat_load_factor) << "," << fmt(rec.taxi_origin_min) << ","
                << fmt(rec.taxi_dest_min) << "\n";
    if (!out) throw IoError("fleet csv: write failed for '" + path.string() + "'");
}

void validate_spec(const SyntheticFleetSpec& spec) {
    if (spec.aircraft_count <= 0)
        throw ValidationError("synthetic spec: aircraft_count must be > 0");
    if (spec.flights_per_aircraft <= 0)
        throw ValidationError("synthetic spec: flights_per_aircraft must be > 0");
    if (spec.flight_time_mean_h <= 0 || spec.flight_time_mean_h > 12)
        throw ValidationError("synthetic spec: flight_time_mean_h out of (0, 12]");
    if (spec.flight_time_sd_h < 0)
        throw ValidationError("synthetic spec: flight_time_sd_h must be >= 0");
    if (spec.lf_mean <= 0 || spec.lf_mean >= 1)
        throw ValidationError("synthetic spec: lf_mean must be in (0, 1)");
    if (spec.lf_sd < 0 || spec.lf_sd * spec.lf_sd >= spec.lf_mean * (1.0 - spec.lf_mean))
        throw ValidationError("synthetic spec: lf_sd incompatible with lf_mean");
    if (spec.taxi_total_mean_min <= 0 || spec.taxi_total_mean_min > 240)
        throw ValidationError("synthetic spec: taxi_total_mean_min out of (0, 240]");
    if (spec.taxi_total_sd_min < 0)
        throw ValidationError("synthetic spec: taxi_total_sd_min must be >= 0");
}

SyntheticFleetSpec load_synthetic_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("synthetic spec: cannot open '" + path.string() + "'");
    SyntheticFleetSpec spec;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const auto eq = line.find('=');
        std::string key, value;
        if (eq != std::string::npos) {
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r\n");
                if (b == std::string::npos) return std::string{};
                auto e = s.find_last_not_of(" \t\r\n");
                return s.substr(b, e - b + 1);
            };
            key = trim(line.substr(0, eq));
            value = trim(line.substr(eq + 1));
        } else {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            throw ParseError("synthetic spec: line " + std::to_string(line_no) +
                             ": expected 'key = value'");
        }
        const std::string where = "synthetic spec: line " + std::to_string(line_no);
        try {
            if (key == "aircraft_count") spec.aircraft_count = std::stoi(value);
            else if (key == "flights_per_aircraft") spec.flights_per_aircraft = std::stoi(value);
            else if (key == "flight_time_mean_h") spec.flight_time_mean_h = std::stod(value);
            else if (key == "flight_time_sd_h") spec.flight_time_sd_h = std::stod(value);
            else if (key == "lf_mean") spec.lf_mean = std::stod(value);
            else if (key == "lf_sd") spec.lf_sd = std::stod(value);
            else if (key == "taxi_total_mean_min") spec.taxi_total_mean_min = std::stod(value);
            else if (key == "taxi_total_sd_min") spec.taxi_total_sd_min = std::stod(value);
            else if (key == "seed") spec.seed = std::stoull(value);
            else throw ParseError(where + ": unknown key '" + key + "'");
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(where + ": bad value '" + value + "'");
        }
    }
    validate_spec(spec);
    return spec;
}

FleetDataset generate_synthetic_fleet(const SyntheticFleetSpec& spec, const Config& cfg) {
    validate_spec(spec);
    Rng rng(spec.seed);
    FleetDataset fleet;
    fleet.provenance = "synthetic seed=" + std::to_string(spec.seed);

    // Beta parameters matched to the requested LF moments.
    const double lf_var = std::max(spec.lf_sd * spec.lf_sd, 1e-8);
    const double lf_conc = spec.lf_mean * (1.0 - spec.lf_mean) / lf_var - 1.0;
    const double lf_alpha = spec.lf_mean * lf_conc;
    const double lf_beta = (1.0 - spec.lf_mean) * lf_conc;

    const int id_width = static_cast<int>(std::to_string(spec.aircraft_count).size());

    for (int a = 0; a < spec.aircraft_count; ++a) {
        std::string id = std::to_string(a + 1);
        id = "AC" + std::string(id_width - static_cast<int>(id.size()), '0') + id;

        const double ac_ft =
            rng.truncated_normal(spec.flight_time_mean_h, spec.flight_time_sd_h, 0.5, 10.0);
        const double ac_lf_mean = rng.beta(lf_alpha, lf_beta);
        const double ac_taxi =
            rng.truncated_normal(spec.taxi_total_mean_min, spec.taxi_total_sd_min, 4.0, 180.0);

        // Within-aircraft jitter is kept small against the fleet spread so the
        // per-aircraft averages carry the requested distribution.
        const double lf_conc_flight = 60.0;
        std::vector<FlightRecord> history;
        history.reserve(spec.flights_per_aircraft);
        for (int f = 0; f < spec.flights_per_aircraft; ++f) {
            FlightRecord rec;
            rec.aircraft_id = id;
            rec.flight_time_h =
                rng.truncated_normal(ac_ft, spec.flight_time_sd_h / 4.0, 0.5, 10.0);
            rec.distance_km =
                distance_for_flight_time_km(rec.flight_time_h, cfg.profile, cfg.aircraft);
            rec.seat_load_factor =
                rng.beta(ac_lf_mean * lf_conc_flight, (1.0 - ac_lf_mean) * lf_conc_flight);
            const double taxi_total =
                rng.truncated_normal(ac_taxi, spec.taxi_total_sd_min / 4.0, 4.0, 180.0);
            const double origin_share = 0.4 + 0.2 * rng.uniform();
            rec.taxi_origin_min = taxi_total * origin_share;
            rec.taxi_dest_min = taxi_total - rec.taxi_origin_min;
            history.push_back(std::move(rec));
        }
        fleet.histories.emplace(std::move(id), std::move(history));
    }
    return fleet;
}

std::vector<std::filesystem::path> emit_reports(const FleetResult& result,
                                                const std::filesystem::path& out_dir) {
    if (result.outcomes.empty()) throw ValidationError("emit_reports: no outcomes");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec && !std::filesystem::is_directory(out_dir))
        throw IoError("emit_reports: cannot create '" + out_dir.string() + "'");

    std::vector<std::filesystem::path> written;

    {
        const auto path = out_dir / "summary.csv";
        auto out = open_out(path);
        out << "criterion,mean_fc,fc_ratio_pct,mean_fh,fh_ratio_pct\n";
        for (const auto& row : result.summary) {
            out << row.scenario << "," << fmt(row.mean_fc) << ",";
            if (!std::isnan(row.fc_ratio_pct)) out << fmt(row.fc_ratio_pct);
            out << "," << fmt(row.mean_fh) << ",";
            if (!std::isnan(row.fh_ratio_pct)) out << fmt(row.fh_ratio_pct);
            out << "\n";
        }
        written.push_back(path);
    }
    {
        const auto path = out_dir / "lifetime_bars.csv";
        auto out = open_out(path);
        out << "criterion,mean_fc,mean_fh\n";
        for (const auto& row : result.summary)
            out << row.scenario << "," << fmt(row.mean_fc) << "," << fmt(row.mean_fh) << "\n";
        written.push_back(path);
    }

    for (const auto& row : result.summary) {
        std::vector<double> wing, fuselage;
        const auto scatter_path = out_dir / ("scatter_" + sanitize_label(row.scenario) + ".csv");
        auto out = open_out(scatter_path);
        out << "aircraft_id,wing_fdi,fuselage_fdi\n";
        for (const auto& o : result.outcomes) {
            if (o.scenario != row.scenario) continue;
            out << o.aircraft_id << "," << fmt(o.final_state.wing_fdi) << ","
                << fmt(o.final_state.fuselage_fdi) << "\n";
            wing.push_back(o.final_state.wing_fdi);
            fuselage.push_back(o.final_state.fuselage_fdi);
        }
        written.push_back(scatter_path);

        const auto wing_path = out_dir / ("hist_" + sanitize_label(row.scenario) + "_wing.csv");
        write_histogram(wing_path, wing);
        written.push_back(wing_path);
        const auto fus_path =
            out_dir / ("hist_" + sanitize_label(row.scenario) + "_fuselage.csv");
        write_histogram(fus_path, fuselage);
        written.push_back(fus_path);
    }
    return written;
}

} // namespace fdi
