#pragma once

#include <memory>
#include <string>

#include "qpm/dispersion.hpp"

namespace qpm {

struct PolarizationTriple {
    Polarization pump = Polarization::ordinary;
    Polarization signal = Polarization::extraordinary;
    Polarization idler = Polarization::ordinary;
};

/// Periodically poled waveguide: length, poling period, width label and the
/// polarization assignment of the three fields. Thermal expansion of the
/// poling period and length is off by default; a linear coefficient can be
/// supplied to make the assumption explicit.
struct WaveguideSpec {
    double length_mm = 40.0;
    double poling_period_um = 6.0;
    double width_um = 20.0;
    PolarizationTriple polarizations;
    double thermal_expansion_per_k = 0.0;
    double expansion_reference_c = 25.0;

    bool is_type_ii() const { return polarizations.signal != polarizations.idler; }
    void validate() const;  // throws ConfigError

    double expansion_factor(double temperature_c) const {
        return 1.0 + thermal_expansion_per_k * (temperature_c - expansion_reference_c);
    }
};

/// Central frequencies of the cw process. Energy conservation is structural:
/// the idler frequency is defined as pump_omega - signal_omega.
class ProcessConfig {
public:
    static ProcessConfig from_wavelengths(std::shared_ptr<const DispersionModel> model,
                                          WaveguideSpec waveguide, double pump_nm,
                                          double signal_nm, double temperature_c);

    const DispersionModel& model() const { return *model_; }
    std::shared_ptr<const DispersionModel> model_ptr() const { return model_; }
    const WaveguideSpec& waveguide() const { return waveguide_; }

    double pump_omega() const { return pump_omega_; }
    double signal_omega() const { return signal_omega_; }
    double idler_omega() const { return idler_omega_; }
    double temperature_c() const { return temperature_c_; }

    double pump_nm() const;
    double signal_nm() const;
    double idler_nm() const;

    double effective_length_m() const;
    double effective_poling_period_m() const;

    ProcessConfig with_temperature(double temperature_c) const;
    ProcessConfig with_pump_nm(double pump_nm) const;  // keeps the signal center

private:
    ProcessConfig() = default;
    std::shared_ptr<const DispersionModel> model_;
    WaveguideSpec waveguide_;
    double pump_omega_ = 0, signal_omega_ = 0, idler_omega_ = 0, temperature_c_ = 0;
};

/// Taylor coefficients of the phase mismatch around the central frequencies.
/// kappa/eta include the pump-derivative parts; gv_term and gvd_term are the
/// reduced cw forms (the pump contributions cancel for a cw pump):
///   gv_term  = -beta_s'(W_s) + beta_i'(W_i)          [s/m]
///   gvd_term = -(beta_s''(W_s) + beta_i''(W_i)) / 2  [s^2/m]
struct TaylorCoefficients {
    double kappa_s = 0, kappa_i = 0;        // s/m
    double eta_s = 0, eta_i = 0, eta_p = 0; // s^2/m
    double gv_term = 0;                     // s/m
    double gvd_term = 0;                    // s^2/m
    double delta_beta0 = 0;                 // rad/m
};

/// Exact mismatch beta_p(W_p) - beta_s(W_s+dw) - beta_i(W_i-dw) - 2pi/Lambda.
double delta_beta(const ProcessConfig& config, double delta_omega);

/// First-order QPM period zeroing the mismatch at the central frequencies.
double poling_period_um_for(const DispersionModel& model, const PolarizationTriple& pols,
                            double pump_nm, double signal_nm, double temperature_c);

TaylorCoefficients taylor_coefficients(const ProcessConfig& config, double deriv_rel_tol = 0.0);

double taylor_mismatch(const TaylorCoefficients& coeffs, double delta_omega);

}  // namespace qpm
