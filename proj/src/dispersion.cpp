#include "qpm/dispersion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

#include "qpm/constants.hpp"
#include "qpm/errors.hpp"
#include "qpm/kvfile.hpp"

namespace qpm {

Polarization polarization_from_string(std::string_view s) {
    std::string low(s);
    std::transform(low.begin(), low.end(), low.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (low == "ordinary" || low == "o" || low == "te") return Polarization::ordinary;
    if (low == "extraordinary" || low == "e" || low == "tm")
        return Polarization::extraordinary;
    throw UnknownPolarization("unknown polarization '" + std::string(s) +
                              "' (expected ordinary/TE or extraordinary/TM)");
}

std::string to_string(Polarization pol) {
    return pol == Polarization::ordinary ? "ordinary" : "extraordinary";
}

double DispersionModel::refractive_index(double wavelength_nm, double temperature_c,
                                         Polarization pol) const {
    if (!validity_.contains(wavelength_nm, temperature_c)) {
        std::ostringstream msg;
        msg << "model '" << name_ << "': evaluation outside validity range: lambda="
            << wavelength_nm << " nm (valid " << validity_.wavelength_min_nm << ".."
            << validity_.wavelength_max_nm << "), T=" << temperature_c << " C (valid "
            << validity_.temperature_min_c << ".." << validity_.temperature_max_c << ")";
        throw OutOfValidityRange(msg.str());
    }
    return index_unchecked(wavelength_nm, temperature_c, pol);
}

double beta(const DispersionModel& model, double omega, double temperature_c,
            Polarization pol) {
    const double lambda_nm = wavelength_nm_from_omega(omega);
    return model.refractive_index(lambda_nm, temperature_c, pol) * omega / speed_of_light;
}

namespace {

double central_difference(const DispersionModel& model, double omega, double temp_c,
                          Polarization pol, int order, double h) {
    auto b = [&](double w) { return beta(model, w, temp_c, pol); };
    switch (order) {
        case 1:
            return (b(omega + h) - b(omega - h)) / (2.0 * h);
        case 2:
            return (b(omega + h) - 2.0 * b(omega) + b(omega - h)) / (h * h);
        case 3:
            return (b(omega + 2 * h) - 2.0 * b(omega + h) + 2.0 * b(omega - h) -
                    b(omega - 2 * h)) /
                   (2.0 * h * h * h);
        default:
            throw Error("beta_derivative: order must be 1, 2 or 3");
    }
}

}  // namespace

double beta_derivative(const DispersionModel& model, double omega, double temperature_c,
                       Polarization pol, int order, double rel_tol) {
    if (order < 1 || order > 3) throw Error("beta_derivative: order must be 1, 2 or 3");
    if (rel_tol <= 0.0) rel_tol = (order == 3) ? 1e-4 : 1e-6;

    // Power-of-two relative steps keep omega +/- h exactly representable
    // scalings of omega.
    const double h0 =
        omega * ((order == 1) ? 0x1p-17 : (order == 2) ? 0x1p-13 : 0x1p-11);

    double beta_center = 0.0;
    try {
        beta_center = beta(model, omega, temperature_c, pol);
    } catch (const OutOfValidityRange& e) {
        throw StencilOutOfRange(std::string("derivative stencil center invalid: ") +
                                e.what());
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double h = h0;
    double prev = 0.0;
    bool have_prev = false;
    for (int iter = 0; iter < 8; ++iter, h *= 0.5) {
        double current = 0.0;
        try {
            current = central_difference(model, omega, temperature_c, pol, order, h);
        } catch (const OutOfValidityRange& e) {
            throw StencilOutOfRange(std::string("derivative stencil leaves validity: ") +
                                    e.what());
        }
        if (have_prev) {
            // Both estimates are O(h^2) accurate; Richardson removes the
            // leading term. Converged when halving no longer moves the value
            // beyond tolerance or beyond the rounding floor of the stencil.
            const double richardson = (4.0 * current - prev) / 3.0;
            const double diff = std::abs(current - prev);
            const double noise_floor =
                64.0 * eps * std::abs(beta_center) / std::pow(h, order);
            if (diff <= std::max(rel_tol * std::abs(richardson), noise_floor))
                return richardson;
        }
        prev = current;
        have_prev = true;
    }
    std::ostringstream msg;
    msg << "beta_derivative(order " << order << ") did not stabilize under step halving at "
        << "omega=" << omega << " rad/s, T=" << temperature_c << " C";
    throw NonConverged(msg.str());
}

namespace {

double evaluate_polynomial(const std::vector<double>& coeffs, double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

SellmeierModel::Coefficients read_coefficients(const KvFile& kv, const std::string& section) {
    SellmeierModel::Coefficients c;
    c.a1 = kv.get_double(section, "a1");
    c.a2 = kv.get_double(section, "a2");
    c.a3 = kv.get_double(section, "a3");
    c.a4 = kv.get_double(section, "a4");
    c.b1 = kv.get_double(section, "b1");
    c.b2 = kv.get_double(section, "b2");
    c.b3 = kv.get_double(section, "b3");
    c.t0 = kv.get_double_or(section, "t0", 24.5);
    return c;
}

double sellmeier_el84(const SellmeierModel::Coefficients& c, double lambda_um, double temp_c) {
    const double f = (temp_c - c.t0) * (temp_c + c.t0 + 546.32);
    const double pole = c.a3 + c.b2 * f;
    const double lam2 = lambda_um * lambda_um;
    const double n2 =
        c.a1 + (c.a2 + c.b1 * f) / (lam2 - pole * pole) + c.b3 * f - c.a4 * lam2;
    return std::sqrt(n2);
}

}  // namespace

SellmeierModel SellmeierModel::load(const std::filesystem::path& path,
                                    std::string_view width_label) {
    KvFile kv = KvFile::parse_file(path);
    return parse_kv_impl(kv, width_label);
}

SellmeierModel SellmeierModel::parse(const std::string& text, std::string origin,
                                     std::string_view width_label) {
    KvFile kv = KvFile::parse(text, std::move(origin));
    return parse_kv_impl(kv, width_label);
}

SellmeierModel SellmeierModel::parse_kv_impl(const KvFile& kv, std::string_view width_label) {
    const std::string form = kv.get_string("", "form");
    if (form != "sellmeier_el84")
        throw ParseError(kv.origin() + ":" + std::to_string(kv.line_of("", "form")) +
                             ": unsupported form '" + form + "' (expected sellmeier_el84)",
                         kv.line_of("", "form"));

    ValidityRange v;
    v.wavelength_min_nm = kv.get_double("", "wavelength_min_nm");
    v.wavelength_max_nm = kv.get_double("", "wavelength_max_nm");
    v.temperature_min_c = kv.get_double("", "temperature_min_c");
    v.temperature_max_c = kv.get_double("", "temperature_max_c");
    if (!(v.wavelength_min_nm > 0 && v.wavelength_max_nm > v.wavelength_min_nm &&
          v.temperature_max_c > v.temperature_min_c))
        throw ParseError(kv.origin() + ": invalid validity range", 0);

    SellmeierModel model(kv.get_string("", "name"), kv.get_string("", "version"), v);
    model.source_note_ = kv.get_string_or("", "source", "");
    model.ordinary_ = read_coefficients(kv, "ordinary");
    model.extraordinary_ = read_coefficients(kv, "extraordinary");

    if (!width_label.empty()) {
        model.width_label_ = std::string(width_label);
        const std::string sec_o = "correction " + model.width_label_ + " ordinary";
        const std::string sec_e = "correction " + model.width_label_ + " extraordinary";
        if (kv.has_section(sec_o)) model.correction_ordinary_ = kv.get_doubles(sec_o, "c");
        if (kv.has_section(sec_e))
            model.correction_extraordinary_ = kv.get_doubles(sec_e, "c");
    }
    return model;
}

double SellmeierModel::index_unchecked(double wavelength_nm, double temperature_c,
                                       Polarization pol) const {
    const double lambda_um = wavelength_nm * 1e-3;
    const bool ordinary = (pol == Polarization::ordinary);
    double n = sellmeier_el84(ordinary ? ordinary_ : extraordinary_, lambda_um,
                              temperature_c);
    const auto& corr = ordinary ? correction_ordinary_ : correction_extraordinary_;
    if (!corr.empty()) n += evaluate_polynomial(corr, lambda_um);
    return n;
}

}  // namespace qpm
