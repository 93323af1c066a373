#include "pucv/detection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pucv/numeric.hpp"

namespace pucv {

namespace {

// |n1 sec(phi1) - n2 sec(phi2)|, the detuning slope magnitude, with the
// near-degenerate guard shared by the closed form and the quadrature.
double guarded_slope(const MatchSolution& sol, double epsilon_degenerate) {
    const double s = sol.n1 / std::cos(deg_to_rad(sol.phi1_deg)) -
                     sol.n2 / std::cos(deg_to_rad(sol.phi2_deg));
    if (std::abs(s) < epsilon_degenerate) {
        std::ostringstream msg;
        msg << "detuning slope |" << s << "| below " << epsilon_degenerate
            << "; the closed-form frequency integral is not valid near degeneracy";
        throw NearDegeneratePhaseMatch(msg.str());
    }
    return std::abs(s);
}

// Common prefactor and assembly for the closed-form counting rates.
// bracket carries the d-coefficient combination of the detected branch;
// obliquity2 the squared polarization projection; r_det the Fresnel
// reflectivity of the detected mode.
double assemble_rate(const DetectorConfig& det, double pump_V, double length_um,
                     double omega_det, double omega_partner, double n1, double n2,
                     double bracket, double slope_abs, double obliquity2,
                     double r_det) {
    const double prefactor = 16.0 * kPi * kPi * kPi * pump_V * pump_V * length_um *
                             det.efficiency_C * det.solid_angle;
    const double spectral =
        omega_det * omega_det * omega_det * omega_det * omega_partner / (n1 * n2);
    return prefactor * spectral * (bracket / slope_abs) * obliquity2 / (1.0 + r_det);
}

void append_shared_warnings(const UniaxialCrystal& crystal, const MatchSolution& sol,
                            const CouplingSet& cs, RateResult& result) {
    const double strength = cs.g1 * cs.g2 * cs.length_l * cs.length_l;
    if (std::abs(strength) > 0.01) {
        std::ostringstream msg;
        msg << "g1*g2*l^2 = " << strength
            << " above 0.01; weak-coupling rate formulas degrade";
        result.warnings.push_back(msg.str());
    }
    if (sol.below_transparency) {
        std::ostringstream msg;
        msg << "partner wavelength " << sol.lambda2_um * 1000.0
            << " nm below the transparency limit " << crystal.transparency_min_um * 1000.0
            << " nm";
        result.warnings.push_back(msg.str());
    }
}

// Quadrature-to-closed ratio for the Integral method; both integrals share
// the same guard, so the rescaling is well-defined whenever the closed form is.
double integral_rescale(const MatchSolution& sol, double length_um,
                        RateMethod method) {
    if (method != RateMethod::Integral) return 1.0;
    const double q_closed = freq_integral_closed(sol, length_um);
    const double q_num = freq_integral_quadrature(sol, length_um);
    return q_num / q_closed;
}

}  // namespace

double freq_integral_closed(const MatchSolution& sol, double length_um,
                            double epsilon_degenerate) {
    if (!(length_um > 0.0)) throw UsageError("crystal length must be positive");
    const double slope = guarded_slope(sol, epsilon_degenerate);
    return 2.0 * kPi / (length_um * slope);
}

double freq_integral_quadrature(const MatchSolution& sol, double length_um,
                                double epsilon_degenerate) {
    if (!(length_um > 0.0)) throw UsageError("crystal length must be positive");
    const double slope = guarded_slope(sol, epsilon_degenerate);
    const double w1 = omega_of(sol.lambda1_um);
    const double halfwidth = std::min(40.0 * kPi / (length_um * slope), 0.2 * w1);
    const auto integrand = [&](double w1p) {
        const double d = detuning(sol, sol.process, w1p);
        const double s = sinc(d * length_um / 2.0);
        return s * s;
    };
    // Pre-segment so no segment spans more than about half an oscillation
    // lobe: the adaptive rule's error estimate can alias to zero when a
    // probe interval straddles whole lobes.  The local lobe width follows
    // the local detuning rate, which near a degeneracy grows well beyond
    // the central slope toward the window edges.
    const double lo = w1 - halfwidth;
    const double hi = w1 + halfwidth;
    const double probe = 1e-6 * halfwidth;
    std::vector<double> cuts{lo};
    double x = lo;
    while (x < hi) {
        const double xm = std::max(x - probe, lo);
        const double xp = std::min(x + probe, hi);
        const double rate =
            std::abs(detuning(sol, sol.process, xp) -
                     detuning(sol, sol.process, xm)) /
            (xp - xm);
        const double local = std::max(rate, slope);
        double step = std::min(kPi / (length_um * local), halfwidth / 8.0);
        x = std::min(x + step, hi);
        cuts.push_back(x);
    }
    const double seg_tol = 1e-9 / static_cast<double>(cuts.size() - 1);
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_adaptive(integrand, cuts[i], cuts[i + 1], seg_tol);
    return total;
}

RateResult pucv_rate_closed(const UniaxialCrystal& crystal, const PumpWave& pump,
                            const MatchSolution& sol, const DetectorConfig& det,
                            RateMethod method) {
    if (sol.process != ProcessKind::PUC)
        throw UsageError("pucv_rate_closed requires an up-conversion solution");
    if (!(det.efficiency_C > 0.0) || !(det.solid_angle > 0.0))
        throw UsageError("detector efficiency and solid angle must be positive");

    const double slope = guarded_slope(sol, 1e-3);
    const CouplingSet cs = coupling_constants(crystal, pump, sol, ProcessKind::PUC);

    const double phi1 = deg_to_rad(sol.phi1_deg);
    const double phi2 = deg_to_rad(sol.phi2_deg);
    const double sec1 = 1.0 / std::cos(phi1);
    const double sec2 = 1.0 / std::cos(phi2);
    const double w1 = omega_of(sol.lambda1_um);
    const double w2 = omega_of(sol.lambda2_um);
    const double obliquity2 = std::cos(phi1) * std::cos(phi1);
    const double length_um = crystal.length_l_um;
    const double rescale = integral_rescale(sol, length_um, method);

    RateResult result;
    result.method = method;
    const double bracket1 = crystal.d15 * (crystal.d15 * sec1 - crystal.d31 * sec2);
    if (bracket1 >= 0.0) {
        // Low-frequency mode above the zeropoint; partner depleted.
        result.detectable_mode = DetectableMode::Mode1;
        result.d1 = assemble_rate(det, pump.amplitude_V, length_um, w1, w2, sol.n1,
                                  sol.n2, bracket1, slope, obliquity2, cs.r1) *
                    rescale;
        result.d2 = 0.0;
    } else {
        // Coefficient ordering flipped: the high-frequency mode is the
        // detectable one and the role of the indices is exchanged.
        const double bracket2 =
            crystal.d31 * (crystal.d31 * sec2 - crystal.d15 * sec1);
        result.detectable_mode = DetectableMode::Mode2;
        result.d2 = assemble_rate(det, pump.amplitude_V, length_um, w2, w1, sol.n1,
                                  sol.n2, bracket2, slope, obliquity2, cs.r2) *
                    rescale;
        result.d1 = 0.0;
    }
    append_shared_warnings(crystal, sol, cs, result);
    return result;
}

RateResult pdcv_rate_closed(const UniaxialCrystal& crystal, const PumpWave& pump,
                            const MatchSolution& sol_d, const DetectorConfig& det,
                            RateMethod method) {
    if (sol_d.process != ProcessKind::PDC)
        throw UsageError("pdcv_rate_closed requires a down-conversion solution");
    if (!(det.efficiency_C > 0.0) || !(det.solid_angle > 0.0))
        throw UsageError("detector efficiency and solid angle must be positive");

    const double slope = guarded_slope(sol_d, 1e-3);
    const CouplingSet cs = coupling_constants(crystal, pump, sol_d, ProcessKind::PDC);

    const double phi1 = deg_to_rad(sol_d.phi1_deg);
    const double phi2 = deg_to_rad(sol_d.phi2_deg);
    const double sec_sum = 1.0 / std::cos(phi1) + 1.0 / std::cos(phi2);
    const double bracket = crystal.d15 * crystal.d15 * sec_sum;
    const double obliquity = std::cos(phi1 - phi2);
    const double obliquity2 = obliquity * obliquity;
    const double w1 = omega_of(sol_d.lambda1_um);
    const double w2 = omega_of(sol_d.lambda2_um);
    const double length_um = crystal.length_l_um;
    const double rescale = integral_rescale(sol_d, length_um, method);

    RateResult result;
    result.method = method;
    result.detectable_mode = DetectableMode::Both;
    result.d1 = assemble_rate(det, pump.amplitude_V, length_um, w1, w2, sol_d.n1,
                              sol_d.n2, bracket, slope, obliquity2, cs.r1) *
                rescale;
    result.d2 = assemble_rate(det, pump.amplitude_V, length_um, w2, w1, sol_d.n1,
                              sol_d.n2, bracket, slope, obliquity2, cs.r2) *
                rescale;
    append_shared_warnings(crystal, sol_d, cs, result);
    return result;
}

std::vector<RatioRow> ratio_table(const UniaxialCrystal& crystal,
                                  const PumpWave& pump_puc,
                                  const PumpWave& pump_pdc_ref,
                                  const std::vector<double>& lambda_grid_um,
                                  double d31_over_d15, const DetectorConfig& det,
                                  double ref_lambda1_um) {
    if (!(d31_over_d15 > 0.0)) throw UsageError("d31/d15 ratio must be positive");
    UniaxialCrystal scaled = crystal;
    scaled.d31 = d31_over_d15 * crystal.d15;

    const MatchSolution ref_sol =
        solve_pair(ProcessKind::PDC, scaled, pump_pdc_ref, ref_lambda1_um,
                   PlaneSelector::Equatorial);
    const RateResult ref_rate = pdcv_rate_closed(scaled, pump_pdc_ref, ref_sol, det);
    if (!(ref_rate.d1 > 0.0))
        throw UsageError("down-conversion reference rate is not positive");

    std::vector<RatioRow> rows;
    rows.reserve(lambda_grid_um.size());
    for (double lam : lambda_grid_um) {
        try {
            const MatchSolution sol = solve_pair(ProcessKind::PUC, scaled, pump_puc,
                                                 lam, PlaneSelector::Equatorial);
            const RateResult rate = pucv_rate_closed(scaled, pump_puc, sol, det);
            const double detectable =
                (rate.detectable_mode == DetectableMode::Mode2) ? rate.d2 : rate.d1;
            rows.push_back({lam * 1000.0, detectable / ref_rate.d1, sol.theta1_deg});
        } catch (const NearDegeneratePhaseMatch&) {
            // Degenerate-slope grid points are excluded rather than extended.
        } catch (const NoRootInWindow&) {
            // Below the spectrum edge: no emission at this wavelength.
        }
    }
    return rows;
}

AlignmentGeometry alignment_geometry(const UniaxialCrystal& crystal,
                                     const PumpWave& pump, double target_lambda1_um,
                                     PlaneSelector plane) {
    const MatchSolution sol =
        solve_pair(ProcessKind::PUC, crystal, pump, target_lambda1_um, plane);
    AlignmentGeometry geom;
    geom.aligner_lambda_um = sol.lambda2_um;
    geom.aligner_incidence_deg = sol.theta2_deg;
    geom.signal_exit_deg = sol.theta1_deg;
    return geom;
}

double backward_partner_rate(const RateResult& forward, const CouplingSet& cs) {
    if (cs.process != ProcessKind::PUC)
        throw UsageError("backward_partner_rate applies to up-conversion results");
    if (forward.detectable_mode != DetectableMode::Mode1)
        throw UsageError(
            "backward_partner_rate requires a detectable low-frequency mode");
    return cs.r2 * forward.d1;
}

}  // namespace pucv
