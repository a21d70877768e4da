#include "qpm/phasematch.hpp"

#include <cmath>
#include <sstream>

#include "qpm/constants.hpp"
#include "qpm/errors.hpp"

namespace qpm {

void WaveguideSpec::validate() const {
    if (!(length_mm > 0)) throw ConfigError("waveguide length must be > 0 mm");
    if (!(poling_period_um > 0)) throw ConfigError("poling period must be > 0 um");
    if (!std::isfinite(thermal_expansion_per_k))
        throw ConfigError("thermal expansion coefficient must be finite");
}

ProcessConfig ProcessConfig::from_wavelengths(std::shared_ptr<const DispersionModel> model,
                                              WaveguideSpec waveguide, double pump_nm,
                                              double signal_nm, double temperature_c) {
    if (!model) throw ConfigError("ProcessConfig requires a dispersion model");
    waveguide.validate();
    if (!(signal_nm > pump_nm))
        throw NonPhysical("signal wavelength must exceed the pump wavelength");

    ProcessConfig cfg;
    cfg.model_ = std::move(model);
    cfg.waveguide_ = waveguide;
    cfg.pump_omega_ = omega_from_wavelength_nm(pump_nm);
    cfg.signal_omega_ = omega_from_wavelength_nm(signal_nm);
    cfg.idler_omega_ = cfg.pump_omega_ - cfg.signal_omega_;  // exact by construction
    cfg.temperature_c_ = temperature_c;

    // All three central wavelengths must be evaluable.
    const auto& m = *cfg.model_;
    m.refractive_index(cfg.pump_nm(), temperature_c, waveguide.polarizations.pump);
    m.refractive_index(cfg.signal_nm(), temperature_c, waveguide.polarizations.signal);
    m.refractive_index(cfg.idler_nm(), temperature_c, waveguide.polarizations.idler);
    return cfg;
}

double ProcessConfig::pump_nm() const { return wavelength_nm_from_omega(pump_omega_); }
double ProcessConfig::signal_nm() const { return wavelength_nm_from_omega(signal_omega_); }
double ProcessConfig::idler_nm() const { return wavelength_nm_from_omega(idler_omega_); }

double ProcessConfig::effective_length_m() const {
    return waveguide_.length_mm * 1e-3 * waveguide_.expansion_factor(temperature_c_);
}

double ProcessConfig::effective_poling_period_m() const {
    return waveguide_.poling_period_um * 1e-6 * waveguide_.expansion_factor(temperature_c_);
}

ProcessConfig ProcessConfig::with_temperature(double temperature_c) const {
    ProcessConfig cfg = *this;
    cfg.temperature_c_ = temperature_c;
    return cfg;
}

ProcessConfig ProcessConfig::with_pump_nm(double pump_nm) const {
    ProcessConfig cfg = *this;
    cfg.pump_omega_ = omega_from_wavelength_nm(pump_nm);
    cfg.idler_omega_ = cfg.pump_omega_ - cfg.signal_omega_;
    return cfg;
}

double delta_beta(const ProcessConfig& config, double delta_omega) {
    const auto& m = config.model();
    const auto& pols = config.waveguide().polarizations;
    const double temp = config.temperature_c();
    const double beta_p = beta(m, config.pump_omega(), temp, pols.pump);
    const double beta_s = beta(m, config.signal_omega() + delta_omega, temp, pols.signal);
    const double beta_i = beta(m, config.idler_omega() - delta_omega, temp, pols.idler);
    return beta_p - beta_s - beta_i - two_pi / config.effective_poling_period_m();
}

double poling_period_um_for(const DispersionModel& model, const PolarizationTriple& pols,
                            double pump_nm, double signal_nm, double temperature_c) {
    const double omega_p = omega_from_wavelength_nm(pump_nm);
    const double omega_s = omega_from_wavelength_nm(signal_nm);
    const double omega_i = omega_p - omega_s;
    const double mismatch = beta(model, omega_p, temperature_c, pols.pump) -
                            beta(model, omega_s, temperature_c, pols.signal) -
                            beta(model, omega_i, temperature_c, pols.idler);
    if (!(mismatch > 0)) {
        std::ostringstream msg;
        msg << "beta_p - beta_s - beta_i = " << mismatch
            << " rad/m is not positive; forward first-order QPM impossible";
        throw NonPositiveMismatch(msg.str());
    }
    return two_pi / mismatch * 1e6;
}

TaylorCoefficients taylor_coefficients(const ProcessConfig& config, double deriv_rel_tol) {
    const auto& m = config.model();
    const auto& pols = config.waveguide().polarizations;
    const double temp = config.temperature_c();
    const double wp = config.pump_omega();
    const double ws = config.signal_omega();
    const double wi = config.idler_omega();

    const double bp1 = beta_derivative(m, wp, temp, pols.pump, 1, deriv_rel_tol);
    const double bs1 = beta_derivative(m, ws, temp, pols.signal, 1, deriv_rel_tol);
    const double bi1 = beta_derivative(m, wi, temp, pols.idler, 1, deriv_rel_tol);
    const double bp2 = beta_derivative(m, wp, temp, pols.pump, 2, deriv_rel_tol);
    const double bs2 = beta_derivative(m, ws, temp, pols.signal, 2, deriv_rel_tol);
    const double bi2 = beta_derivative(m, wi, temp, pols.idler, 2, deriv_rel_tol);

    TaylorCoefficients c;
    c.kappa_s = bp1 - bs1;
    c.kappa_i = bp1 - bi1;
    c.eta_s = bp2 - bs2;
    c.eta_i = bp2 - bi2;
    c.eta_p = bp2;
    c.gv_term = -bs1 + bi1;
    c.gvd_term = -0.5 * (bs2 + bi2);
    c.delta_beta0 = delta_beta(config, 0.0);
    return c;
}

double taylor_mismatch(const TaylorCoefficients& coeffs, double delta_omega) {
    return coeffs.delta_beta0 + coeffs.gv_term * delta_omega +
           coeffs.gvd_term * delta_omega * delta_omega;
}

}  // namespace qpm
