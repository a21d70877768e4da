#pragma once

#include <iosfwd>
#include <vector>

#include "qpm/jsa.hpp"

namespace qpm {

struct BandwidthReport {
    double fw_thz = 0.0;            // full width at the fraction, THz
    double main_lobe_lo_nm = 0.0;   // wavelength interval of the main lobe
    double main_lobe_hi_nm = 0.0;
    bool side_lobe = false;         // points at/above the fraction outside the lobe
    double uncertainty_thz = 0.0;   // half the width spread at fraction +- 0.05
};

/// Width of the contiguous interval around the global maximum where the
/// normalized intensity stays >= fraction, with linear interpolation at the
/// crossings. fraction defaults to the 80 % criterion.
BandwidthReport bandwidth_fw_at_fraction(const Spectrum& spectrum, double fraction = 0.8);

struct TuningRow {
    double parameter = 0.0;        // temperature (deg C) or pump wavelength (nm)
    bool valid = false;            // false: out-of-validity row, intensities absent (NaN)
    bool phase_matched = false;    // raw sinc^2 peak >= 0.5 inside the window
    double raw_peak = 0.0;         // pre-normalization max of |f|^2
    double peak_wavelength_nm = 0.0;
    BandwidthReport bandwidth;
};

struct TuningMap {
    std::vector<double> wavelength_axis_nm;  // columns (signal side)
    std::vector<double> parameter_axis;      // rows
    std::vector<double> intensity;           // rows x cols, row-major, row max = 1
    std::vector<TuningRow> rows;
    double pump_nm = 0, temperature_c = 0;   // template values (fixed one recorded)
    std::string parameter_name;              // "temperature_c" or "pump_nm"

    double at(int row, int col) const {
        return intensity[static_cast<size_t>(row) * wavelength_axis_nm.size() + col];
    }
};

/// Signal-marginal spectra over a temperature range at fixed pump; row i is
/// the normalized marginal at T_i with peak and FW80 extracted. Rows whose
/// grid leaves the model validity are marked invalid, not zero-filled.
TuningMap temperature_map(const ProcessConfig& config_template, double temp_min_c,
                          double temp_max_c, int steps, const SpectralGrid& grid,
                          Exec exec = Exec::parallel);

struct PumpSweepResult {
    std::vector<double> pump_nm;        // rows
    std::vector<double> temperature_c;  // columns
    std::vector<double> fw_thz;         // rows x cols, NaN where invalid
    std::vector<double> best_temperature_c;  // per pump
    std::vector<double> best_fw_thz;         // per pump

    double at(int row, int col) const {
        return fw_thz[static_cast<size_t>(row) * temperature_c.size() + col];
    }
};

PumpSweepResult pump_sweep_bandwidth(const ProcessConfig& config_template,
                                     const std::vector<double>& pump_nm,
                                     double temp_min_c, double temp_max_c, int temp_steps,
                                     const SpectralGrid& grid, Exec exec = Exec::parallel);

enum class Regime { above_design, at_design, below_design };
std::string to_string(Regime r);

/// Classification per the three temperature-tuning behaviours:
///   at_design   : some phase-matched row's main lobe spans > 50 nm;
///   below_design: two disjoint temperature intervals with FW80 above 1.5x
///                 the median over the scanned range, or a phase-matched row
///                 with >= 3 merged peaks (height > 0.5, prominence >= 0.2,
///                 merged within 2 bins);
///   above_design: otherwise.
/// Requires the map to cover the broadband region (the FW80 maximum must not
/// sit on the parameter boundary), else InsufficientRange.
Regime classify_regime(const TuningMap& map);

/// Peak count used by the classifier, exposed for tests.
int count_main_peaks(const std::vector<double>& normalized_row);

/// CSV matrix: first row wavelength axis, first column parameter axis.
void write_tuning_map_csv(const TuningMap& map, std::ostream& os);
/// Companion JSON with one BandwidthReport entry per row.
std::string tuning_map_rows_json(const TuningMap& map);

void write_pump_sweep_csv(const PumpSweepResult& sweep, std::ostream& os);
std::string pump_sweep_json(const PumpSweepResult& sweep);

}  // namespace qpm
