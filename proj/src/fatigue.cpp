#include "fdi/fatigue.hpp"

#include <cmath>
#include <limits>

namespace fdi {

double stress_ratio(const LoadCycleBin& bin) {
    const double s_max = bin.mean_stress_mpa + bin.amplitude_stress_mpa;
    const double s_min = bin.mean_stress_mpa - bin.amplitude_stress_mpa;
    if (s_max == 0.0) return -std::numeric_limits<double>::infinity();
    return s_min / s_max;
}

double equivalent_amplitude(const LoadCycleBin& bin, const MaterialParams& mat) {
    const double sa = bin.amplitude_stress_mpa;
    const double sm = bin.mean_stress_mpa;
    const double m = mat.m_sigma;
    if (sm + sa <= 0.0) return sa * (1.0 - m);         // R > 1 and the R = -inf edge
    if (sm <= sa) return sa + m * sm;                  // -inf <= R <= 0
    if (sm < 3.0 * sa)                                 // 0 < R < 0.5
        return sa * (1.0 + m) * (3.0 + m * sm / sa) / (3.0 + m);
    return sa * 3.0 * (1.0 + m) * (1.0 + m) / (3.0 + m); // R >= 0.5
}

double cycles_to_failure(double amplitude_mpa, const MaterialParams& mat) {
    if (amplitude_mpa <= mat.c1_mpa) return std::numeric_limits<double>::infinity();
    if (amplitude_mpa >= mat.c2_mpa) return 1.0;
    const double log_arg = std::log((mat.c2_mpa - mat.c1_mpa) / (amplitude_mpa - mat.c1_mpa));
    return std::pow(10.0, mat.c3 * std::pow(log_arg, 1.0 / mat.c4));
}

double miner_damage(const LoadSpectrum& spectrum, const MaterialParams& mat) {
    long double sum = 0.0L;
    for (const auto& entry : spectrum.entries) {
        const double n = cycles_to_failure(equivalent_amplitude(entry.bin, mat), mat);
        if (std::isinf(n)) continue;
        sum += static_cast<long double>(entry.bin.cycle_count) / n;
    }
    return static_cast<double>(sum);
}

} // namespace fdi
