#include "pucv/phasematch.hpp"

#include <cmath>
#include <sstream>

#include "pucv/numeric.hpp"

namespace pucv {

namespace {

constexpr double kGrazingDeg = 89.9;  // reported branch is theta1 in (0, 89.9]

void check_cut(const UniaxialCrystal& c) {
    if (c.cut_angle_deg != 90.0)
        throw UsageError("only the 90-degree cut (optic axis in the entry face) is supported");
}

void check_process_polarization(ProcessKind process, const PumpWave& pump) {
    if (process == ProcessKind::PUC && pump.polarization != Polarization::Ordinary)
        throw UsageError("up conversion requires an ordinary-polarized pump");
    if (process == ProcessKind::PDC && pump.polarization != Polarization::Extraordinary)
        throw UsageError("down conversion requires an extraordinary-polarized pump");
}

double pump_index(const UniaxialCrystal& c, const PumpWave& pump) {
    // Normal incidence with the optic axis in the face: the ordinary pump
    // sees n_ord, the extraordinary pump the principal extraordinary index.
    if (pump.polarization == Polarization::Ordinary)
        return crystal_n_ord(c, pump.lambda0_um);
    return crystal_n_ext90(c, pump.lambda0_um);
}

}  // namespace

double partner_wavelength(ProcessKind process, double lambda0_um, double lambda1_um) {
    if (!(lambda0_um > 0.0 && lambda1_um > 0.0))
        throw UsageError("wavelengths must be positive");
    if (process == ProcessKind::PUC)
        return 1.0 / (1.0 / lambda0_um + 1.0 / lambda1_um);
    const double inv = 1.0 / lambda0_um - 1.0 / lambda1_um;
    if (inv <= 0.0) {
        std::ostringstream msg;
        msg << "down-conversion partner frequency non-positive for lambda0 = "
            << lambda0_um << " um, lambda1 = " << lambda1_um << " um";
        throw NonPositiveFrequency(msg.str());
    }
    return 1.0 / inv;
}

double collinear_edge(ProcessKind process, const UniaxialCrystal& crystal,
                      const PumpWave& pump, Polarization pol1, Polarization pol2) {
    check_cut(crystal);
    check_process_polarization(process, pump);
    if (process == ProcessKind::PUC) {
        if (pol1 != Polarization::Ordinary || pol2 != Polarization::Extraordinary)
            throw UsageError("up conversion edge expects ordinary signal and extraordinary partner");
    } else {
        if (pol1 != Polarization::Ordinary || pol2 != Polarization::Ordinary)
            throw UsageError("down conversion edge expects two ordinary modes");
    }

    const double lam0 = pump.lambda0_um;
    const double w0 = omega_of(lam0);
    const double n0 = pump_index(crystal, pump);
    const double k0 = n0 * w0;
    const double wmin = crystal.window_min_um;
    const double wmax = crystal.window_max_um;

    // Collinear wavenumber mismatch as a function of lambda1, all waves on axis.
    auto mismatch = [&](double lam1) {
        const double lam2 = partner_wavelength(process, lam0, lam1);
        const double k1 = omega_of(lam1) * crystal_n_ord(crystal, lam1);
        if (process == ProcessKind::PUC) {
            const double k2 = omega_of(lam2) * crystal_n_ext90(crystal, lam2);
            return k2 - k0 - k1;
        }
        const double k2 = omega_of(lam2) * crystal_n_ord(crystal, lam2);
        return k0 - k1 - k2;
    };

    // Keep the partner wavelength inside the validity window over the bracket.
    double lo = wmin;
    if (process == ProcessKind::PUC) {
        const double inv = 1.0 / wmin - 1.0 / lam0;
        if (inv > 0.0) lo = std::max(lo, 1.0 / inv);
    } else {
        lo = std::max(lo, 1.0 / (1.0 / lam0 - 1.0 / wmax));
        lo = std::max(lo, lam0);
    }
    lo += 1e-9;
    const double hi = wmax;
    if (!(lo < hi)) throw NoRootInWindow("collinear edge: empty search bracket");

    const auto bracket = scan_bracket(mismatch, lo, hi, 256);
    if (bracket.first == bracket.second) return bracket.first;
    return bisect_root(mismatch, bracket.first, bracket.second, 1e-12);
}

MatchSolution solve_pair(ProcessKind process, const UniaxialCrystal& crystal,
                         const PumpWave& pump, double lambda1_um,
                         PlaneSelector plane) {
    check_cut(crystal);
    check_process_polarization(process, pump);

    const double lam0 = pump.lambda0_um;
    const double lam1 = lambda1_um;
    const double lam2 = partner_wavelength(process, lam0, lam1);

    const double w0 = omega_of(lam0);
    const double w1 = omega_of(lam1);
    const double w2 = omega_of(lam2);
    const double n0 = pump_index(crystal, pump);
    const double n1 = crystal_n_ord(crystal, lam1);
    const double k0 = n0 * w0;

    // Partner index as a function of the transverse wavenumber t = w1 sin(theta1).
    auto n2_of_t = [&](double t) {
        if (process == ProcessKind::PDC) return crystal_n_ord(crystal, lam2);
        if (plane == PlaneSelector::Equatorial) return crystal_n_ext90(crystal, lam2);
        // Longitudinal plane: the partner propagates at external angle theta2
        // from the pump inside the plane containing the optic axis, which sits
        // 90 degrees from the pump direction.
        const double theta2 = std::asin(t / w2);
        return crystal_n_ext(crystal, lam2, 90.0 - rad_to_deg(theta2));
    };

    // Longitudinal wavenumber mismatch at transverse wavenumber t.
    auto resid = [&](double t) {
        const double n2 = n2_of_t(t);
        const double k1x = std::sqrt(n1 * n1 * w1 * w1 - t * t);
        const double k2x = std::sqrt(n2 * n2 * w2 * w2 - t * t);
        if (process == ProcessKind::PUC) return k2x - k0 - k1x;
        return k0 - k1x - k2x;
    };

    const double sin_graze = std::sin(deg_to_rad(kGrazingDeg));
    const double tmax = (process == ProcessKind::PUC ? w1 : std::min(w1, w2)) * sin_graze;

    const double r0 = resid(0.0);
    double t = 0.0;
    if (std::abs(r0) <= 1e-9 * k0) {
        t = 0.0;  // collinear solution at (or numerically at) the spectrum edge
    } else {
        if (process == ProcessKind::PUC && r0 > 0.0) {
            std::ostringstream msg;
            msg << "lambda1 = " << lam1 << " um is below the spectrum edge";
            throw NoRootInWindow(msg.str());
        }
        if (process == ProcessKind::PDC && r0 > 0.0) {
            std::ostringstream msg;
            msg << "no transverse solution for lambda1 = " << lam1
                << " um (collinear mismatch already positive)";
            throw NoRootInWindow(msg.str());
        }
        if (plane == PlaneSelector::Equatorial || process == ProcessKind::PDC) {
            if (resid(tmax) < 0.0) {
                std::ostringstream msg;
                msg << "lambda1 = " << lam1 << " um exits beyond the grazing bound";
                throw NoRootInWindow(msg.str());
            }
            t = bisect_root(resid, 0.0, tmax, 1e-13 * std::max(1.0, tmax));
        } else {
            const auto bracket = scan_bracket(resid, 0.0, tmax, 512);
            t = (bracket.first == bracket.second)
                    ? bracket.first
                    : bisect_root(resid, bracket.first, bracket.second,
                                  1e-13 * std::max(1.0, tmax));
        }
    }

    MatchSolution sol;
    sol.process = process;
    sol.plane = plane;
    sol.lambda1_um = lam1;
    sol.lambda2_um = lam2;
    sol.n0 = n0;
    sol.n1 = n1;
    sol.n2 = n2_of_t(t);

    const double theta1 = std::asin(t / w1);
    const double theta2_mag = std::asin(t / w2);
    const double theta2 = (process == ProcessKind::PUC) ? theta2_mag : -theta2_mag;
    sol.theta1_deg = rad_to_deg(theta1);
    sol.theta2_deg = rad_to_deg(theta2);
    sol.phi1_deg = rad_to_deg(std::asin(std::sin(theta1) / sol.n1));
    sol.phi2_deg = rad_to_deg(std::asin(std::sin(theta2) / sol.n2));

    const double sign = (process == ProcessKind::PUC) ? -1.0 : 1.0;
    sol.residual_transverse =
        (w2 * std::sin(theta2) + sign * w1 * std::sin(theta1)) / k0;
    sol.residual_longitudinal = resid(t) / k0;
    sol.below_transparency = lam1 < crystal.transparency_min_um ||
                             lam2 < crystal.transparency_min_um;
    return sol;
}

SweepResult rainbow_sweep(ProcessKind process, const UniaxialCrystal& crystal,
                          const PumpWave& pump, double lambda_min_um,
                          double lambda_max_um, double step_um,
                          PlaneSelector plane) {
    if (!(step_um > 0.0)) throw UsageError("sweep step must be positive");
    if (!(lambda_min_um <= lambda_max_um))
        throw UsageError("sweep range is empty");

    SweepResult result;
    const double span = lambda_max_um - lambda_min_um;
    const long npts = static_cast<long>(std::floor(span / step_um + 1e-9)) + 1;
    for (long i = 0; i < npts; ++i) {
        const double lam1 = lambda_min_um + step_um * static_cast<double>(i);
        try {
            result.solutions.push_back(solve_pair(process, crystal, pump, lam1, plane));
        } catch (const NoRootInWindow& e) {
            result.notes.push_back({lam1, e.what()});
        } catch (const OutOfWindow& e) {
            result.notes.push_back({lam1, e.what()});
        } catch (const NonPositiveFrequency& e) {
            result.notes.push_back({lam1, e.what()});
        }
    }
    if (result.solutions.empty())
        throw EmptySweep("no grid point in the sweep is solvable");
    return result;
}

}  // namespace pucv
