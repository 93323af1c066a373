// Detection layer: photocount rates under the above-zeropoint-threshold
// model, closed-form and quadrature detuning integrals, the up/down
// conversion ratio table, the alignment-laser helper, and the backward
// partner rate.
#pragma once

#include <string>
#include <vector>

#include "pucv/coupling.hpp"

namespace pucv {

enum class DetectorMode { Pinhole, Filter };

struct DetectorConfig {
    double efficiency_C = 1.0;   // constant per unit omega*bandwidth*solid-angle
    double solid_angle = 1.0;    // steradians
    DetectorMode mode = DetectorMode::Pinhole;  // Filter is converted to the
                                                // equivalent pinhole integral
};

enum class RateMethod { ClosedForm, Integral };

enum class DetectableMode { Mode1 = 1, Mode2 = 2, Both = 3 };

struct RateResult {
    double d1 = 0.0;  // counts per unit time, arbitrary units
    double d2 = 0.0;
    DetectableMode detectable_mode = DetectableMode::Mode1;
    RateMethod method = RateMethod::ClosedForm;
    std::vector<std::string> warnings;
};

// Stationary-phase closed form of the detuning integral:
// 2*pi / (l * |n1 sec(phi1) - n2 sec(phi2)|).
// Throws NearDegeneratePhaseMatch when the slope magnitude is below
// epsilon_degenerate (default 1e-3).
double freq_integral_closed(const MatchSolution& sol, double length_um,
                            double epsilon_degenerate = 1e-3);

// Adaptive quadrature of sinc^2(delta(omega1') l / 2) over
// omega1 +/- min(40*pi/(l*|slope|), 0.2*omega1), absolute tolerance 1e-9
// on the integrand. Same degeneracy guard as the closed form.
double freq_integral_quadrature(const MatchSolution& sol, double length_um,
                                double epsilon_degenerate = 1e-3);

// Counting rate of the detectable up-conversion mode. With the default
// coefficient ordering (d15 sec(phi1) >= d31 sec(phi2)) mode 1 is above the
// zeropoint and mode 2 is depleted (d2 = 0); when the ordering flips the
// roles swap. Pinhole detection; Filter configs are converted. Method
// Integral rescales the closed form by the quadrature/closed ratio of the
// detuning integral.
RateResult pucv_rate_closed(const UniaxialCrystal& crystal, const PumpWave& pump,
                            const MatchSolution& sol, const DetectorConfig& det,
                            RateMethod method = RateMethod::ClosedForm);

// Counting rates for down conversion (extraordinary pump, both modes
// ordinary and detectable).
RateResult pdcv_rate_closed(const UniaxialCrystal& crystal, const PumpWave& pump,
                            const MatchSolution& sol_d, const DetectorConfig& det,
                            RateMethod method = RateMethod::ClosedForm);

struct RatioRow {
    double lambda1_nm = 0.0;
    double ratio = 0.0;
    double theta1_deg = 0.0;
};

// Ratio of the up-conversion rate at each grid wavelength to a fixed
// down-conversion reference (default reference signal 0.692 um from the
// extraordinary-polarized pump), equal solid angles and constant detector
// efficiency. d31_over_d15 rescales the crystal's d31 before evaluation.
std::vector<RatioRow> ratio_table(const UniaxialCrystal& crystal,
                                  const PumpWave& pump_puc,
                                  const PumpWave& pump_pdc_ref,
                                  const std::vector<double>& lambda_grid_um,
                                  double d31_over_d15 = 1.0,
                                  const DetectorConfig& det = DetectorConfig{},
                                  double ref_lambda1_um = 0.692);

struct AlignmentGeometry {
    double aligner_lambda_um = 0.0;    // extraordinary partner wavelength
    double aligner_incidence_deg = 0.0;  // external angle of the injected beam
    double signal_exit_deg = 0.0;        // external exit angle of the signal
};

// Geometry for seeding the up-conversion signal at target_lambda1 with an
// external laser at the partner wavelength.
AlignmentGeometry alignment_geometry(const UniaxialCrystal& crystal,
                                     const PumpWave& pump, double target_lambda1_um,
                                     PlaneSelector plane);

// Backward (retro-reflected) partner rate: r2 times the forward detectable rate.
double backward_partner_rate(const RateResult& forward, const CouplingSet& cs);

}  // namespace pucv
