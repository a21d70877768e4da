#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qpm {

/// Crystal polarization. For the z-cut mapping used throughout, TE guides see
/// the ordinary index and TM guides the extraordinary one.
enum class Polarization { ordinary, extraordinary };

Polarization polarization_from_string(std::string_view s);
std::string to_string(Polarization pol);

struct ValidityRange {
    double wavelength_min_nm = 0.0;
    double wavelength_max_nm = 0.0;
    double temperature_min_c = 0.0;
    double temperature_max_c = 0.0;

    bool contains(double wavelength_nm, double temperature_c) const {
        return wavelength_nm >= wavelength_min_nm && wavelength_nm <= wavelength_max_nm &&
               temperature_c >= temperature_min_c && temperature_c <= temperature_max_c;
    }
};

/// Refractive-index model n(lambda, T, polarization). Immutable after
/// construction; evaluation outside the declared validity range throws
/// OutOfValidityRange rather than extrapolating.
class DispersionModel {
public:
    virtual ~DispersionModel() = default;

    const std::string& name() const { return name_; }
    const std::string& version() const { return version_; }
    const ValidityRange& validity() const { return validity_; }

    double refractive_index(double wavelength_nm, double temperature_c,
                            Polarization pol) const;

protected:
    DispersionModel(std::string name, std::string version, ValidityRange validity)
        : name_(std::move(name)), version_(std::move(version)), validity_(validity) {}

    virtual double index_unchecked(double wavelength_nm, double temperature_c,
                                   Polarization pol) const = 0;

private:
    std::string name_;
    std::string version_;
    ValidityRange validity_;
};

/// Propagation constant beta = n(omega) * omega / c  (rad/m).
double beta(const DispersionModel& model, double omega, double temperature_c,
            Polarization pol);

/// d^order beta / d omega^order by central differences with step halving and
/// Richardson extrapolation. rel_tol <= 0 selects the per-order default
/// (1e-6 for orders 1-2, 1e-4 for order 3).
double beta_derivative(const DispersionModel& model, double omega, double temperature_c,
                       Polarization pol, int order, double rel_tol = 0.0);

/// Temperature-dependent Sellmeier set in the form
///   n^2 = A1 + (A2 + B1 F)/(lam^2 - (A3 + B2 F)^2) + B3 F - A4 lam^2,
///   F = (T - T0)(T + T0 + 546.32),  lam in um, T in deg C,
/// plus an optional per-width additive index correction polynomial in lam.
class SellmeierModel final : public DispersionModel {
public:
    struct Coefficients {
        double a1 = 0, a2 = 0, a3 = 0, a4 = 0;
        double b1 = 0, b2 = 0, b3 = 0;
        double t0 = 24.5;
    };

    /// Load from a model file; width_label selects the matching
    /// [correction <width> <pol>] sections (empty or unlisted width: bulk).
    static SellmeierModel load(const std::filesystem::path& path,
                               std::string_view width_label = {});
    static SellmeierModel parse(const std::string& text, std::string origin,
                                std::string_view width_label = {});

    const std::string& width_label() const { return width_label_; }
    const std::string& source_note() const { return source_note_; }

private:
    SellmeierModel(std::string name, std::string version, ValidityRange validity)
        : DispersionModel(std::move(name), std::move(version), validity) {}

    static SellmeierModel parse_kv_impl(const class KvFile& kv,
                                        std::string_view width_label);

    double index_unchecked(double wavelength_nm, double temperature_c,
                           Polarization pol) const override;

    Coefficients ordinary_;
    Coefficients extraordinary_;
    std::vector<double> correction_ordinary_;       // polynomial in lambda_um
    std::vector<double> correction_extraordinary_;  // polynomial in lambda_um
    std::string width_label_;
    std::string source_note_;
};

}  // namespace qpm
