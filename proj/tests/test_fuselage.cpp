#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fdi/fatigue.hpp"
#include "fdi/fuselage.hpp"

using namespace fdi;

namespace {
const Config kCfg = default_config();
}

TEST_CASE("stress state at ground level and at design altitude") {
    const FuselageStressState zero = fuselage_stress(0.0, kCfg.fuselage, kCfg.atmosphere);
    CHECK(zero.tangential_mpa == 0.0);
    CHECK(zero.axial_mpa == 0.0);
    CHECK(zero.mean_mpa == 0.0);
    CHECK(zero.amplitude_mpa == 0.0);

    const FuselageStressState des = fuselage_stress(39100.0, kCfg.fuselage, kCfg.atmosphere);
    // hand chain: 766.58 hPa * 4.14 m / (2 * 1 mm)
    CHECK(des.tangential_mpa == doctest::Approx(158.683).epsilon(1e-4));
    CHECK(des.axial_mpa == doctest::Approx(des.tangential_mpa / 2.0).epsilon(1e-15));
    CHECK(des.mean_mpa == des.amplitude_mpa);
    CHECK(des.mean_mpa == doctest::Approx(des.tangential_mpa / 2.0).epsilon(1e-15));
}

TEST_CASE("thickness proportionality") {
    FuselageGeometry thick = kCfg.fuselage;
    thick.skin_thickness_m *= 2.0;
    const auto base = fuselage_stress(35000.0, kCfg.fuselage, kCfg.atmosphere);
    const auto halved = fuselage_stress(35000.0, thick, kCfg.atmosphere);
    CHECK(halved.tangential_mpa == doctest::Approx(base.tangential_mpa / 2.0).epsilon(1e-15));
    CHECK(halved.axial_mpa == doctest::Approx(base.axial_mpa / 2.0).epsilon(1e-15));
}

TEST_CASE("per-flight damage: zero at ground, frozen design value, altitude ordering") {
    CHECK(fuselage_damage_per_flight(0.0, kCfg.fuselage, kCfg.atmosphere, kCfg.material) == 0.0);

    const double design = fuselage_damage_per_flight(39100.0, kCfg.fuselage, kCfg.atmosphere,
                                                     kCfg.material);
    CHECK(design == doctest::Approx(8.9117815219e-06).epsilon(1e-6));
    // independent chain: one R=0 cycle at S_a = S_tan/2, equivalent amplitude 1.4 S_a
    const auto s = fuselage_stress(39100.0, kCfg.fuselage, kCfg.atmosphere);
    const double eq = 1.4 * s.amplitude_mpa;
    const double oracle =
        1.0 / std::pow(10.0, 3.5 * std::pow(std::log(407.0 / (eq - 63.0)), 1.0 / 2.07));
    CHECK(design == doctest::Approx(oracle).epsilon(1e-12));

    CHECK(fuselage_damage_per_flight(35000.0, kCfg.fuselage, kCfg.atmosphere, kCfg.material) <
          design);
}

TEST_CASE("strictly increasing above the fatigue-limit knee") {
    double prev = 0.0;
    for (double h = 20000.0; h <= 41000.0; h += 500.0) {
        const double d = fuselage_damage_per_flight(h, kCfg.fuselage, kCfg.atmosphere,
                                                    kCfg.material);
        CHECK(d > prev);
        prev = d;
    }
    // below the knee the single pressurization cycle stays below the limit
    CHECK(fuselage_damage_per_flight(10000.0, kCfg.fuselage, kCfg.atmosphere, kCfg.material) ==
          0.0);
}

TEST_CASE("one pressure cycle per flight accumulates linearly") {
    const double per_flight = fuselage_damage_per_flight(39000.0, kCfg.fuselage,
                                                         kCfg.atmosphere, kCfg.material);
    LoadSpectrum k_flights;
    const auto s = fuselage_stress(39000.0, kCfg.fuselage, kCfg.atmosphere);
    k_flights.entries.push_back(
        {SpectrumSegment::Flight, {s.mean_mpa, s.amplitude_mpa, 1000.0}});
    CHECK(miner_damage(k_flights, kCfg.material) ==
          doctest::Approx(1000.0 * per_flight).epsilon(1e-12));
}
