#pragma once

#include <memory>
#include <string>

#include "qpm/phasematch.hpp"
#include "qpm/rootfind.hpp"

namespace qpm {

struct SolverTolerances {
    double gv_abs = 1e-16;           // s/m
    double gvd_abs = 1e-29;          // s^2/m
    double dbeta0_abs = 1e-9;        // rad/m
    double signal_interval_nm = 1e-6;
    double pump_interval_nm = 1e-4;
    double temp_interval_c = 1e-7;
    double deriv_rel_tol = 1e-10;
    int coarse_points = 201;
    double degenerate_gv_eps = 1e-18;  // s/m; flat-band detection on coarse scans
};

struct WorkingPoint {
    double pump_nm = 0;
    double temperature_c = 0;
    double signal_nm = 0;
    double idler_nm = 0;
    double poling_period_um = 0;
    double gv_residual = 0;      // s/m
    double gvd_residual = 0;     // s^2/m
    double dbeta0_residual = 0;  // rad/m
    bool degenerate_gv = false;
    SolverTolerances tolerances;
    std::string model_name, model_version;
};

std::string working_point_json(const WorkingPoint& wp);

struct GvMatchedPair {
    double signal_omega = 0;
    double idler_omega = 0;
    double gv_residual = 0;  // s/m, re-evaluated at the returned root
};

/// Root of gv_term over the signal wavelength at fixed pump and temperature.
/// Exactly one sign change is required on the coarse scan: none raises
/// NoRootInBracket, several raise MultipleRoots carrying every bracket, and a
/// scan that is flat below degenerate_gv_eps raises DegenerateRoot.
GvMatchedPair solve_gv_matched_signal(const DispersionModel& model,
                                      const PolarizationTriple& pols, double pump_nm,
                                      double temperature_c,
                                      Bracket signal_bracket_nm = {700.0, 1100.0},
                                      const SolverTolerances& tol = {});

/// Unique operating point of a fixed poling period: group-velocity matching,
/// group-velocity-dispersion cancellation and quasi-phase matching hold
/// simultaneously. Nested bracketed 1D solves, innermost first:
///   inner : signal wavelength zeroing beta_s'' + beta_i'' (the stationary
///           point of the group-velocity mismatch; upward crossings only),
///   middle: temperature zeroing gv_term on that curve,
///   outer : pump wavelength zeroing delta_beta0 for the given Lambda.
WorkingPoint solve_design_point(std::shared_ptr<const DispersionModel> model,
                                const WaveguideSpec& waveguide,
                                Bracket temperature_c = {50.0, 400.0},
                                Bracket pump_nm = {600.0, 700.0},
                                Bracket signal_nm = {700.0, 1100.0},
                                const SolverTolerances& tol = {});

/// Inverse convenience: at a given pump and temperature, the GV-matched
/// centers and the poling period that zeroes delta_beta0 there, with the
/// (possibly nonzero) gvd_term reported for diagnosis.
WorkingPoint solve_poling_for_design(std::shared_ptr<const DispersionModel> model,
                                     const WaveguideSpec& waveguide, double pump_nm,
                                     double temperature_c,
                                     Bracket signal_nm = {700.0, 1100.0},
                                     const SolverTolerances& tol = {});

}  // namespace qpm
