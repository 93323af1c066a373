// Phase matching for parametric up / down conversion in a uniaxial crystal
// with a normally incident pump and the optic axis in the entry face:
// partner wavelength, collinear spectrum edge, cone semiangle solves in the
// equatorial and longitudinal planes, and grid sweeps.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pucv/crystal.hpp"

namespace pucv {

enum class ProcessKind { PDC, PUC };
enum class PlaneSelector { Equatorial, Longitudinal };
enum class Polarization { Ordinary, Extraordinary };

struct PumpWave {
    double lambda0_um = 0.351;
    Polarization polarization = Polarization::Ordinary;
    double amplitude_V = 1.0;  // field amplitude, arbitrary units; incidence is normal
};

struct MatchSolution {
    ProcessKind process = ProcessKind::PUC;
    PlaneSelector plane = PlaneSelector::Equatorial;
    double lambda1_um = 0.0;
    double lambda2_um = 0.0;
    double theta1_deg = 0.0;   // external exit angle of mode 1 (>= 0 branch)
    double theta2_deg = 0.0;   // external, signed: PUC same side, PDC opposite
    double phi1_deg = 0.0;     // internal angles, sin(phi) = sin(theta)/n
    double phi2_deg = 0.0;
    double n0 = 0.0;
    double n1 = 0.0;
    double n2 = 0.0;
    double residual_transverse = 0.0;    // both normalized by omega0*n0
    double residual_longitudinal = 0.0;
    bool below_transparency = false;     // lambda1 or lambda2 under the transparency limit
};

struct SweepNote {
    double lambda1_um = 0.0;
    std::string note;
};

struct SweepResult {
    std::vector<MatchSolution> solutions;
    std::vector<SweepNote> notes;  // grid points skipped, with reason
};

// Frequency bookkeeping: omega = 2*pi/lambda (c = 1), so k = n*omega and
// phases like delta*l are plain radians when lengths are in um.
inline double omega_of(double lambda_um) { return 2.0 * 3.141592653589793238462643 / lambda_um; }

// 1/lambda2 = 1/lambda0 -/+ 1/lambda1 (PDC upper sign, PUC lower).
// Throws NonPositiveFrequency for PDC when 1/lambda0 <= 1/lambda1.
double partner_wavelength(ProcessKind process, double lambda0_um, double lambda1_um);

// Wavelength at which the emission cone closes (theta1 = theta2 = 0).
// pol1/pol2 select the out-mode polarizations; the supported geometries are
// PUC (pump o, modes o+e) and PDC (pump e, modes o+o).
double collinear_edge(ProcessKind process, const UniaxialCrystal& crystal,
                      const PumpWave& pump, Polarization pol1, Polarization pol2);

// Solves the matching system at fixed lambda1. PUC: ordinary pump and
// signal, extraordinary partner; equatorial plane has an angle-independent
// partner index, longitudinal evaluates it at psi = 90 deg minus the
// external partner angle. PDC: extraordinary pump, both modes ordinary
// (plane-independent).
MatchSolution solve_pair(ProcessKind process, const UniaxialCrystal& crystal,
                         const PumpWave& pump, double lambda1_um,
                         PlaneSelector plane);

// Batch solve over [lambda_min, lambda_max] with the given step. Unsolvable
// grid points become notes, not errors; throws EmptySweep if nothing solves.
SweepResult rainbow_sweep(ProcessKind process, const UniaxialCrystal& crystal,
                          const PumpWave& pump, double lambda_min_um,
                          double lambda_max_um, double step_um,
                          PlaneSelector plane);

}  // namespace pucv
