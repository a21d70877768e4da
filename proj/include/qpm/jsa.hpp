#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "qpm/phasematch.hpp"

namespace qpm {

enum class Exec { serial, parallel };
enum class Side { signal, idler };

/// Uniform detuning grid, symmetric about zero, odd point count (so that
/// delta_omega = 0 is a grid point).
struct SpectralGrid {
    std::vector<double> delta_omega;  // rad/s, ascending
    double resolution = 0.0;          // rad/s
    double half_span = 0.0;           // rad/s
    double signal_center_nm = 0.0;
    double idler_center_nm = 0.0;

    static SpectralGrid centered(const ProcessConfig& config, double half_span_rad_s,
                                 int points);
    int zero_index() const { return static_cast<int>(delta_omega.size() / 2); }
};

/// f(dw) = sinc(Delta_beta L / 2) * exp(i Delta_beta L / 2) per grid point.
struct JsaResult {
    SpectralGrid grid;
    std::vector<std::complex<double>> amplitude;
    std::vector<double> intensity;  // |f|^2
    // Snapshot of the evaluated configuration
    double pump_nm = 0, signal_nm = 0, idler_nm = 0, temperature_c = 0;
    double length_mm = 0, poling_period_um = 0;
    std::string model_name, model_version;
};

JsaResult jsa(const ProcessConfig& config, const SpectralGrid& grid,
              Exec exec = Exec::parallel);

/// Marginal intensity over the detuning axis, labelled with the vacuum
/// wavelength of the chosen side and normalized to a maximum of exactly 1.
struct Spectrum {
    Side side = Side::signal;
    std::vector<double> delta_omega;   // rad/s, ascending (same order as JSA grid)
    std::vector<double> wavelength_nm; // per point
    std::vector<double> intensity;     // max = 1
};

/// wavelength_jacobian = true re-weights |f|^2 by lambda^2 (per-wavelength-bin
/// convention) before normalizing; default is per-frequency-bin intensity.
Spectrum marginal_spectrum(const JsaResult& result, Side side,
                           bool wavelength_jacobian = false);

/// Energy-conserving idler wavelength: 1/(1/pump - 1/signal), all in nm.
double idler_wavelength_of(double pump_nm, double signal_nm);

/// Fourier-limited correlation time: FWHM (fs) of |g(tau)|^2 where g is the
/// DFT of the amplitude spectrum sqrt(I) with flat spectral phase; the
/// transform is zero-padded at least 8x and the crossing interpolated.
double correlation_time_fs(const Spectrum& spectrum);

/// CSV with header delta_omega_rad_s,lambda_s_nm,lambda_i_nm,re_f,im_f,intensity.
void write_jsa_csv(const JsaResult& result, std::ostream& os);

}  // namespace qpm
