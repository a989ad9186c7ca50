#pragma once

#include "fdi/config.hpp"
#include "fdi/flight_performance.hpp"

namespace fdi {

/// Thin-walled pressure-vessel stresses of the pressurized cabin. The
/// pressurization cycle is a pure swelling load (R = 0), so mean and
/// amplitude are each half the tangential stress.
struct FuselageStressState {
    double tangential_mpa = 0.0;
    double axial_mpa = 0.0;
    double mean_mpa = 0.0;
    double amplitude_mpa = 0.0;
};

FuselageStressState fuselage_stress(double altitude_ft, const FuselageGeometry& geom,
                                    const AtmosphereParams& atmos);

/// Damage of the single pressurization cycle at the flight's maximum
/// altitude. Zero below the fatigue limit, strictly increasing above it.
double fuselage_damage_per_flight(double altitude_ft, const FuselageGeometry& geom,
                                  const AtmosphereParams& atmos, const MaterialParams& mat);

} // namespace fdi
