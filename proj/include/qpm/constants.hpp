#pragma once

#include <cmath>

namespace qpm {

inline constexpr double speed_of_light = 299792458.0;  // m/s, exact
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

// Vacuum wavelength (nm) <-> angular frequency (rad/s).
inline double omega_from_wavelength_nm(double wavelength_nm) {
    return two_pi * speed_of_light / (wavelength_nm * 1e-9);
}

inline double wavelength_nm_from_omega(double omega) {
    return two_pi * speed_of_light / omega * 1e9;
}

inline double wavelength_um_from_omega(double omega) {
    return two_pi * speed_of_light / omega * 1e6;
}

inline double thz_from_angular(double omega) { return omega / (two_pi * 1e12); }
inline double angular_from_thz(double thz) { return two_pi * 1e12 * thz; }

}  // namespace qpm
