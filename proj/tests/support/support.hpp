// Shared fixtures for the qprobe test executables.
#pragma once

#include <algorithm>
#include <cmath>

#include "qprobe/spectral.hpp"

namespace qprobe::test {

inline BathParameters bath_T(double lambda, double s, double temperature, double cutoff = 1.0) {
    return {OhmicSpectralDensity::make(lambda, s, cutoff), BathTemperature::from_temperature(temperature)};
}

inline BathParameters bath_beta(double lambda, double s, double beta, double cutoff = 1.0) {
    return {OhmicSpectralDensity::make(lambda, s, cutoff), BathTemperature::from_beta(beta)};
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace qprobe::test
