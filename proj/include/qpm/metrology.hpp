#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qpm {

/// Low-finesse Fabry-Perot transmission scan of one waveguide.
struct FringeScan {
    std::vector<double> axis;   // monotonic scan variable (temperature, detuning, ...)
    std::vector<double> power;  // transmitted power, linear units, >= 0
    double reflectivity = 0.0;  // facet power reflectivity R in (0,1)
    double length_cm = 0.0;
};

/// Fringe contrast K = (Imax - Imin)/(Imax + Imin) from per-fringe extrema
/// (quadratically interpolated) averaged over all complete fringes.
/// A constant scan has K = 0; a scan with variation but no complete fringe
/// raises NoFringeFound.
double fringe_contrast(const FringeScan& scan);

/// Propagation loss in dB/cm from the contrast of a low-finesse cavity:
///   Rt = (1 - sqrt(1 - K^2)) / K,   alpha = 10 / (L ln 10) * ln(R / Rt).
/// Returns 0 when Rt >= R within numerical noise; a contrast beyond the
/// lossless bound 2R/(1+R^2) raises GainImplied.
double loss_db_per_cm_from_contrast(double contrast, double reflectivity, double length_cm);

/// Normal-incidence Fresnel power reflectivity ((n-1)/(n+1))^2.
double fresnel_reflectivity(double refractive_index);

struct BrightnessInput {
    double detected_cps = 0.0;    // counts/s
    double background_cps = 0.0;  // counts/s (background + fluorescence)
    double pump_power_mw = 0.0;
    double bandwidth_ghz = 0.0;
    std::optional<double> coupling_efficiency;  // in (0, 1]
};

struct BrightnessEstimate {
    double lower_bound = 0.0;  // counts/(s mW GHz), no coupling correction
    std::optional<double> coupling_corrected;  // estimate, not a lower bound
};

BrightnessEstimate brightness_lower_bound(const BrightnessInput& input);

/// Two-column CSV (scan_axis, power); reflectivity/length come from a JSON
/// sidecar handled by the CLI.
FringeScan read_fringe_csv(const std::filesystem::path& csv_path);

}  // namespace qpm
