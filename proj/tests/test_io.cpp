#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "fdi/io.hpp"

using namespace fdi;
namespace fs = std::filesystem;

namespace {

const Config kCfg = default_config();
const TwistTable kTwist = load_twist(FDI_DATA_DIR "/twist.csv");

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("fdi_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter_++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static inline int counter_ = 0;
};

fs::path write_file(const TempDir& dir, const std::string& name, const std::string& body) {
    const fs::path p = dir.path / name;
    std::ofstream out(p);
    out << body;
    return p;
}

} // namespace

TEST_CASE("fleet csv parsing") {
    TempDir dir;
    const auto good = write_file(dir, "fleet.csv",
                                 "aircraft_id,distance_km,flight_time_h,seat_load_factor,"
                                 "taxi_origin_min,taxi_dest_min\n"
                                 "A1,800,1.4,0.8,10,12\n"
                                 "A1,1200,1.9,0.75,8,15\n");
    const FleetDataset fleet = parse_fleet_csv(good);
    CHECK(fleet.histories.size() == 1);
    CHECK(fleet.histories.at("A1").size() == 2);
    CHECK(fleet.histories.at("A1")[1].distance_km == 1200.0);

    const auto bad_lf = write_file(dir, "bad_lf.csv",
                                   "aircraft_id,distance_km,flight_time_h,seat_load_factor,"
                                   "taxi_origin_min,taxi_dest_min\n"
                                   "A1,800,1.4,1.3,10,12\n");
    try {
        parse_fleet_csv(bad_lf);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
        CHECK(msg.find("seat_load_factor") != std::string::npos);
    }

    const auto empty = write_file(dir, "empty.csv", "");
    CHECK_THROWS_WITH_AS(parse_fleet_csv(empty),
                         ("fleet csv: '" + empty.string() + "': no records").c_str(),
                         ValidationError);

    const auto short_row = write_file(dir, "short.csv",
                                      "aircraft_id,distance_km,flight_time_h,seat_load_factor,"
                                      "taxi_origin_min,taxi_dest_min\n"
                                      "A1,800,1.4\n");
    CHECK_THROWS_AS(parse_fleet_csv(short_row), ParseError);

    CHECK_THROWS_AS(parse_fleet_csv(dir.path / "missing.csv"), IoError);
}

TEST_CASE("fleet csv round trip") {
    TempDir dir;
    SyntheticFleetSpec spec;
    spec.aircraft_count = 5;
    spec.flights_per_aircraft = 7;
    spec.seed = 123;
    const FleetDataset fleet = generate_synthetic_fleet(spec, kCfg);
    const fs::path p = dir.path / "out.csv";
    write_fleet_csv(fleet, p);
    const FleetDataset back = parse_fleet_csv(p);
    REQUIRE(back.histories.size() == fleet.histories.size());
    for (const auto& [id, history] : fleet.histories) {
        const auto& parsed = back.histories.at(id);
        REQUIRE(parsed.size() == history.size());
        for (std::size_t i = 0; i < history.size(); ++i) {
            CHECK(parsed[i].distance_km == history[i].distance_km);
            CHECK(parsed[i].flight_time_h == history[i].flight_time_h);
            CHECK(parsed[i].seat_load_factor == history[i].seat_load_factor);
            CHECK(parsed[i].taxi_origin_min == history[i].taxi_origin_min);
            CHECK(parsed[i].taxi_dest_min == history[i].taxi_dest_min);
        }
    }
}

TEST_CASE("synthetic spec file") {
    TempDir dir;
    const auto p = write_file(dir, "spec.txt",
                              "# synthetic fleet\n"
                              "aircraft_count = 42\n"
                              "flights_per_aircraft = 9\n"
                              "flight_time_mean_h = 2.5\n"
                              "flight_time_sd_h = 0.3\n"
                              "lf_mean = 0.75\n"
                              "lf_sd = 0.08\n"
                              "taxi_total_mean_min = 22\n"
                              "taxi_total_sd_min = 6\n"
                              "seed = 77\n");
    const SyntheticFleetSpec spec = load_synthetic_spec(p);
    CHECK(spec.aircraft_count == 42);
    CHECK(spec.flights_per_aircraft == 9);
    CHECK(spec.flight_time_mean_h == 2.5);
    CHECK(spec.seed == 77);

    const auto bad = write_file(dir, "bad.txt", "lf_mean = 1.5\n");
    CHECK_THROWS_AS(load_synthetic_spec(bad), ValidationError);
    const auto unknown = write_file(dir, "unk.txt", "wings = 2\n");
    CHECK_THROWS_AS(load_synthetic_spec(unknown), ParseError);
}

TEST_CASE("synthetic generation: determinism and target moments") {
    SyntheticFleetSpec spec;
    spec.aircraft_count = 1000;
    spec.flights_per_aircraft = 20;
    spec.seed = 1;

    const FleetDataset a = generate_synthetic_fleet(spec, kCfg);
    const FleetDataset b = generate_synthetic_fleet(spec, kCfg);
    REQUIRE(a.histories.size() == 1000);
    bool identical = true;
    for (const auto& [id, history] : a.histories) {
        const auto& other = b.histories.at(id);
        for (std::size_t i = 0; i < history.size(); ++i) {
            identical = identical && history[i].distance_km == other[i].distance_km &&
                        history[i].flight_time_h == other[i].flight_time_h &&
                        history[i].seat_load_factor == other[i].seat_load_factor &&
                        history[i].taxi_origin_min == other[i].taxi_origin_min &&
                        history[i].taxi_dest_min == other[i].taxi_dest_min;
        }
    }
    CHECK(identical);

    SyntheticFleetSpec other_seed = spec;
    other_seed.seed = 2;
    const FleetDataset c = generate_synthetic_fleet(other_seed, kCfg);
    bool differs = false;
    for (const auto& [id, history] : a.histories) {
        const auto& otherh = c.histories.at(id);
        for (std::size_t i = 0; i < history.size(); ++i)
            differs = differs || history[i].seat_load_factor != otherh[i].seat_load_factor;
    }
    CHECK(differs);

    double sum_ft = 0.0, sum_lf = 0.0, sum_taxi = 0.0;
    long n = 0;
    for (const auto& [id, history] : a.histories) {
        for (const auto& rec : history) {
            sum_ft += rec.flight_time_h;
            sum_lf += rec.seat_load_factor;
            sum_taxi += rec.taxi_origin_min + rec.taxi_dest_min;
            ++n;
            const double implied =
                distance_for_flight_time_km(rec.flight_time_h, kCfg.profile, kCfg.aircraft);
            CHECK(rec.distance_km == doctest::Approx(implied).epsilon(0.05));
        }
    }
    CHECK(sum_ft / n == doctest::Approx(spec.flight_time_mean_h).epsilon(0.02));
    CHECK(sum_lf / n == doctest::Approx(spec.lf_mean).epsilon(0.02));
    CHECK(sum_taxi / n == doctest::Approx(spec.taxi_total_mean_min).epsilon(0.02));
}

TEST_CASE("report emission for a one-aircraft design fleet") {
    TempDir dir;
    FleetDataset fleet;
    fleet.histories["D1"] = {design_flight_record(kCfg, 2.0)};
    const FdiNormalization norm = compute_normalization(kCfg, kTwist);
    std::vector<Scenario> scenarios{
        make_service_goal_scenario(ScenarioFamily::Esg, {}, kCfg),
        make_fdi_scenario(ScenarioFamily::Esg, {}, norm),
    };
    const FleetResult result = simulate_fleet(fleet, scenarios, kCfg, kTwist, 1);
    const auto files = emit_reports(result, dir.path);
    CHECK(files.size() == 2 + 2 * 3);

    // summary: the FDI(ESG) row sits at ~100% of the ESG service goal
    std::ifstream summary(dir.path / "summary.csv");
    REQUIRE(summary.good());
    std::string line;
    std::getline(summary, line);
    CHECK(line == "criterion,mean_fc,fc_ratio_pct,mean_fh,fh_ratio_pct");
    std::getline(summary, line);
    CHECK(line.find("esg,60000,100,") != std::string::npos);
    std::getline(summary, line);
    REQUIRE(line.rfind("fdi-esg,", 0) == 0);
    std::istringstream row(line.substr(8));
    std::string field;
    std::getline(row, field, ',');
    const double fdi_fc = std::stod(field);
    std::getline(row, field, ',');
    const double fdi_ratio = std::stod(field);
    CHECK(std::abs(fdi_fc - 60000.0) <= 1.0);
    CHECK(fdi_ratio == doctest::Approx(100.0).epsilon(1e-4));

    // scatter row count equals aircraft count; histogram counts conserve it
    std::ifstream scatter(dir.path / "scatter_fdi-esg.csv");
    REQUIRE(scatter.good());
    int rows = 0;
    std::getline(scatter, line); // header
    while (std::getline(scatter, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 1);

    std::ifstream hist(dir.path / "hist_fdi-esg_wing.csv");
    REQUIRE(hist.good());
    std::getline(hist, line);
    CHECK(line == "bin_low,bin_high,count");
    long total = 0;
    int bins = 0;
    while (std::getline(hist, line)) {
        if (line.empty()) continue;
        const auto last = line.rfind(',');
        total += std::stol(line.substr(last + 1));
        ++bins;
    }
    CHECK(bins == 50);
    CHECK(total == 1);
}

TEST_CASE("emitted fleet csv reparses through the module's own reader") {
    TempDir dir;
    SyntheticFleetSpec spec;
    spec.aircraft_count = 3;
    spec.flights_per_aircraft = 4;
    spec.seed = 5;
    const FleetDataset fleet = generate_synthetic_fleet(spec, kCfg);
    write_fleet_csv(fleet, dir.path / "f.csv");
    CHECK_NOTHROW(parse_fleet_csv(dir.path / "f.csv"));
}
