#include "fdi/fuselage.hpp"

#include "fdi/fatigue.hpp"

namespace fdi {

FuselageStressState fuselage_stress(double altitude_ft, const FuselageGeometry& geom,
                                    const AtmosphereParams& atmos) {
    const double p_pa = differential_pressure_hpa(altitude_ft, atmos) * 100.0;
    FuselageStressState state;
    state.tangential_mpa = p_pa * geom.diameter_mean_m / (2.0 * geom.skin_thickness_m) / 1e6;
    state.axial_mpa = p_pa * geom.diameter_mean_m / (4.0 * geom.skin_thickness_m) / 1e6;
    state.mean_mpa = state.tangential_mpa / 2.0;
    state.amplitude_mpa = state.tangential_mpa / 2.0;
    return state;
}

double fuselage_damage_per_flight(double altitude_ft, const FuselageGeometry& geom,
                                  const AtmosphereParams& atmos, const MaterialParams& mat) {
    const FuselageStressState s = fuselage_stress(altitude_ft, geom, atmos);
    if (s.amplitude_mpa <= 0.0) return 0.0;
    LoadSpectrum spectrum;
    spectrum.entries.push_back({SpectrumSegment::Flight, {s.mean_mpa, s.amplitude_mpa, 1.0}});
    return miner_damage(spectrum, mat);
}

} // namespace fdi
