// Coupled-mode layer for one matched geometry: coupling constants, detuning,
// the closed-form two-mode transfer across the crystal, Fresnel interface
// coefficients, and the multi-reflection output intensities up to the
// all-reflections closed form. Intensities are in zeropoint units, i.e.
// measured against the vacuum-mode Poynting flow hbar*k/2n (hbar = 1).
#pragma once

#include <complex>
#include <utility>

#include "pucv/phasematch.hpp"

namespace pucv {

struct CouplingSet {
    double f1 = 0.0;         // um^-1, source strengths
    double f2 = 0.0;
    double g1 = 0.0;         // um^-1, SVEA coupling rates
    double g2 = 0.0;
    double delta = 0.0;      // um^-1 at the quoted detuning (0 when matched)
    double b = 0.0;          // |characteristic rate|, um^-1
    double b_squared = 0.0;  // signed: PUC delta^2/4 + g1*g2, PDC delta^2/4 - g1*g2;
                             // negative values mark the hyperbolic branch
    double length_l = 0.0;   // um
    double r1 = 0.0;         // Fresnel intensity reflection coefficients
    double r2 = 0.0;
    ProcessKind process = ProcessKind::PUC;
};

struct ModeAmplitudePair {
    std::complex<double> a1{0.0, 0.0};
    std::complex<double> a2{0.0, 0.0};
};

// Fresnel intensity reflection coefficients at the crystal face, external
// angle theta vs internal angle phi (degrees); `n` supplies the
// normal-incidence limit ((n-1)/(n+1))^2 when the angles vanish.
double fresnel_r_tangent(double theta_deg, double phi_deg, double n);  // in-plane polarized (ordinary modes here)
double fresnel_r_sine(double theta_deg, double phi_deg, double n);     // normal polarized (extraordinary partner)

// Builds the CouplingSet for a matched geometry at zero detuning.
// PUC: f1 = 4*pi*d15*V*cos(phi1), f2 = 4*pi*d31*V*cos(phi1), r1 tangent
// form, r2 sine form. PDC: f1 = f2 = 4*pi*d15*V*cos(phi1 - phi2) with both
// interface coefficients in tangent form (both modes ordinary).
// g_i = f_i/(2 cos phi_i) * sqrt(omega1*omega2/(n1*n2)).
// Throws CouplingTooStrong when g1*g2*l^2 > 0.1 (weak-coupling validity).
CouplingSet coupling_constants(const UniaxialCrystal& crystal, const PumpWave& pump,
                               const MatchSolution& sol, ProcessKind process);

// Wavevector mismatch at detuned signal frequency omega1' (um^-1), with the
// partner frequency slaved to the pump (omega2' = omega0 +/- omega1') and
// the transverse momentum and indices frozen at the matched solution:
// k_i = sqrt(n_i^2 omega_i'^2 - omega_i^2 sin^2 theta_i).
// PUC: k0 + k1 - k2; PDC: k0 - k1 - k2. Requires |omega1'-omega1| <= 0.2*omega1.
double detuning(const MatchSolution& sol, ProcessKind process, double omega1_prime);

// Closed-form amplitude transfer across one crystal length:
// A1(l) = e^{+i delta l/2} [A1(0)(cos(bl) - i(delta l/2) sinc(bl)) - i g1 l A2(0) sinc(bl)]
// A2(l) = e^{-i delta l/2} [A2(0)(cos(bl) - i(delta l/2) sinc(bl)) - i g2 l A1(0) sinc(bl)]
// evaluated branch-stably through b_squared (cos->cosh etc. when negative).
ModeAmplitudePair transfer(const CouplingSet& cs, const ModeAmplitudePair& input);

// Outgoing intensity of each mode in zeropoint units, summing path classes
// with at most max_reflections internal reflections: forward passes carry
// the coupled intensity transfer (linearized to first order in g^2),
// interfaces contribute (1-r) transmission or r reflection factors, and the
// surface bounce of the external vacuum mode enters at one reflection.
// Distinct reflection orders add in intensity, not amplitude.
std::pair<double, double> poynting_out_partial(const CouplingSet& cs,
                                               int max_reflections);

// All-reflections closed form:
// p_i = 1 + g_i (g_i -/+ g_j) l^2 sinc^2(bl) / (1 + r_i)  (PUC '-', PDC '+').
std::pair<double, double> poynting_out_all(const CouplingSet& cs);

}  // namespace pucv
