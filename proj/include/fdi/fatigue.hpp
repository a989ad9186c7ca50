#pragma once

#include <vector>

#include "fdi/config.hpp"

namespace fdi {

enum class SpectrumSegment { Flight, Ground, GroundAirGround };

/// One (mean, amplitude, count) load bin. Counts may be fractional: per-flight
/// spectra carry block counts divided by the block size.
struct LoadCycleBin {
    double mean_stress_mpa = 0.0;
    double amplitude_stress_mpa = 0.0;
    double cycle_count = 0.0;
};

struct SpectrumEntry {
    SpectrumSegment segment = SpectrumSegment::Flight;
    LoadCycleBin bin;
};

struct LoadSpectrum {
    std::vector<SpectrumEntry> entries;
};

/// R = S_min/S_max = (S_m - S_a)/(S_m + S_a). Returns -inf when the cycle
/// peaks at exactly zero; values above 1 occur for fully compressive cycles.
double stress_ratio(const LoadCycleBin& bin);

/// Maps a (mean, amplitude) cycle to the equivalent fully reversed (R = -1)
/// amplitude using the piecewise Haigh-diagram approximation. Branches by
/// stress regime:
///   fully compressive (S_max <= 0)      -> S_a (1 - M)
///   -inf <= R <= 0                      -> S_a + M S_m
///   0 < R < 0.5                         -> S_a (1+M)(3 + M S_m/S_a)/(3+M)
///   0.5 <= R < 1                        -> 3 S_a (1+M)^2/(3+M)
/// The pieces agree at the regime boundaries, so boundary assignment is
/// observation-free.
double equivalent_amplitude(const LoadCycleBin& bin, const MaterialParams& mat);

/// S-N life at a fully reversed amplitude. Returns +inf at or below the
/// fatigue limit c1 and clamps to 1 cycle at or above the ultimate strength
/// c2 (the curve itself reaches 1 at c2). Strictly decreasing in between.
double cycles_to_failure(double amplitude_mpa, const MaterialParams& mat);

/// Linear (Miner) damage sum over the spectrum; bins below the fatigue limit
/// contribute nothing. Accumulated in extended precision so that 60k-flight
/// sums of ~1e-5 increments stay exact to well under one increment.
double miner_damage(const LoadSpectrum& spectrum, const MaterialParams& mat);

} // namespace fdi
