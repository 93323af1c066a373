#include "pucv/coupling.hpp"

#include <cmath>
#include <sstream>

#include "pucv/numeric.hpp"

namespace pucv {

namespace {

// sinc(bl) / sinh-counterpart selected by the sign of b^2.
double sincc_signed(double b_squared, double length) {
    if (b_squared >= 0.0) return sinc(std::sqrt(b_squared) * length);
    return sinhc(std::sqrt(-b_squared) * length);
}

double pump_omega(const MatchSolution& sol) {
    const double w1 = omega_of(sol.lambda1_um);
    const double w2 = omega_of(sol.lambda2_um);
    return (sol.process == ProcessKind::PUC) ? w2 - w1 : w2 + w1;
}

}  // namespace

double fresnel_r_tangent(double theta_deg, double phi_deg, double n) {
    const double theta = deg_to_rad(theta_deg);
    const double phi = deg_to_rad(phi_deg);
    if (std::abs(theta) < 1e-12) {
        const double r = (n - 1.0) / (n + 1.0);
        return r * r;
    }
    const double ratio = std::tan(theta - phi) / std::tan(theta + phi);
    return ratio * ratio;
}

double fresnel_r_sine(double theta_deg, double phi_deg, double n) {
    const double theta = deg_to_rad(theta_deg);
    const double phi = deg_to_rad(phi_deg);
    if (std::abs(theta) < 1e-12) {
        const double r = (n - 1.0) / (n + 1.0);
        return r * r;
    }
    const double ratio = std::sin(theta - phi) / std::sin(theta + phi);
    return ratio * ratio;
}

CouplingSet coupling_constants(const UniaxialCrystal& crystal, const PumpWave& pump,
                               const MatchSolution& sol, ProcessKind process) {
    if (process != sol.process)
        throw UsageError("coupling_constants: process does not match the solution");

    const double V = pump.amplitude_V;
    if (!(V > 0.0)) throw UsageError("pump amplitude must be positive");
    const double phi1 = deg_to_rad(sol.phi1_deg);
    const double phi2 = deg_to_rad(sol.phi2_deg);
    const double w1 = omega_of(sol.lambda1_um);
    const double w2 = omega_of(sol.lambda2_um);

    CouplingSet cs;
    cs.process = process;
    cs.length_l = crystal.length_l_um;

    constexpr double four_pi = 4.0 * kPi;
    if (process == ProcessKind::PUC) {
        // Both source terms carry the signal's polarization projection.
        cs.f1 = four_pi * crystal.d15 * V * std::cos(phi1);
        cs.f2 = four_pi * crystal.d31 * V * std::cos(phi1);
    } else {
        // Both modes ordinary: the projection is between the two in-plane
        // polarizations, an angle phi1 - phi2 apart (phi2 signed).
        const double obliquity = std::cos(phi1 - phi2);
        cs.f1 = four_pi * crystal.d15 * V * obliquity;
        cs.f2 = cs.f1;
    }

    const double rate_scale = std::sqrt(w1 * w2 / (sol.n1 * sol.n2));
    cs.g1 = cs.f1 / (2.0 * std::cos(phi1)) * rate_scale;
    cs.g2 = cs.f2 / (2.0 * std::cos(phi2)) * rate_scale;

    cs.delta = detuning(sol, process, w1);
    const double quad = cs.delta * cs.delta / 4.0;
    cs.b_squared = (process == ProcessKind::PUC) ? quad + cs.g1 * cs.g2
                                                 : quad - cs.g1 * cs.g2;
    cs.b = std::sqrt(std::abs(cs.b_squared));

    cs.r1 = fresnel_r_tangent(sol.theta1_deg, sol.phi1_deg, sol.n1);
    cs.r2 = (process == ProcessKind::PUC)
                ? fresnel_r_sine(sol.theta2_deg, sol.phi2_deg, sol.n2)
                : fresnel_r_tangent(sol.theta2_deg, sol.phi2_deg, sol.n2);

    const double strength = cs.g1 * cs.g2 * cs.length_l * cs.length_l;
    if (strength > 0.1) {
        std::ostringstream msg;
        msg << "g1*g2*l^2 = " << strength << " exceeds the weak-coupling bound 0.1";
        throw CouplingTooStrong(msg.str());
    }
    return cs;
}

double detuning(const MatchSolution& sol, ProcessKind process, double omega1_prime) {
    if (process != sol.process)
        throw UsageError("detuning: process does not match the solution");
    const double w1 = omega_of(sol.lambda1_um);
    if (std::abs(omega1_prime - w1) > 0.2 * w1)
        throw UsageError("detuning: omega1' outside the +/-20% validity window");

    const double w0 = pump_omega(sol);
    const double k0 = sol.n0 * w0;
    const double t = w1 * std::sin(deg_to_rad(sol.theta1_deg));
    const double t2 = t * t;

    const double rad1 = sol.n1 * sol.n1 * omega1_prime * omega1_prime - t2;
    if (rad1 < 0.0) throw NegativeRadicand("detuning: mode-1 radicand negative");
    const double k1 = std::sqrt(rad1);

    const double omega2_prime =
        (process == ProcessKind::PUC) ? w0 + omega1_prime : w0 - omega1_prime;
    const double rad2 = sol.n2 * sol.n2 * omega2_prime * omega2_prime - t2;
    if (rad2 < 0.0) throw NegativeRadicand("detuning: mode-2 radicand negative");
    const double k2 = std::sqrt(rad2);

    return (process == ProcessKind::PUC) ? k0 + k1 - k2 : k0 - k1 - k2;
}

ModeAmplitudePair transfer(const CouplingSet& cs, const ModeAmplitudePair& input) {
    const double l = cs.length_l;
    const double half = cs.delta * l / 2.0;
    const double c = cosc_signed(cs.b_squared, l);
    const double s = sincc_signed(cs.b_squared, l);
    const std::complex<double> i_unit(0.0, 1.0);
    // Channel-2's self factor is the conjugate of channel-1's: integrating
    // the coupled envelope equations with g2 = 0 must leave A2 unchanged,
    // which fixes the sign of the i*(delta l/2)*sinc term per channel.
    const std::complex<double> common1 = c - i_unit * half * s;
    const std::complex<double> common2 = c + i_unit * half * s;
    const std::complex<double> phase = std::exp(i_unit * half);

    ModeAmplitudePair out;
    out.a1 = phase * (input.a1 * common1 - i_unit * cs.g1 * l * input.a2 * s);
    out.a2 =
        (1.0 / phase) * (input.a2 * common2 - i_unit * cs.g2 * l * input.a1 * s);
    return out;
}

std::pair<double, double> poynting_out_partial(const CouplingSet& cs,
                                               int max_reflections) {
    if (max_reflections < 0)
        throw UsageError("max_reflections must be non-negative");
    const int N = max_reflections;
    const double l = cs.length_l;
    const double s2 = sinc2_signed(cs.b_squared, l);
    const double sign = (cs.process == ProcessKind::PUC) ? 1.0 : -1.0;
    const double eps = sign * cs.g1 * cs.g2 * l * l * s2;
    const double G[2] = {cs.g1 * cs.g1 * l * l * s2, cs.g2 * cs.g2 * l * l * s2};
    const double r[2] = {cs.r1, cs.r2};

    double out[2] = {0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        double total = 0.0;
        // Surface bounce of the external vacuum mode: one reflection.
        if (N >= 1) total += r[i];
        // Uncrossed paths entering from the left: m forward passes cost
        // 2(m-1) reflections and carry the m-pass depletion factor.
        for (int m = 1; 2 * (m - 1) <= N; ++m)
            total += (1.0 - r[i]) * (1.0 - r[i]) *
                     std::pow(r[i], 2 * (m - 1)) * (1.0 - m * eps);
        // Uncrossed paths entering from the right: 2m-1 reflections.
        for (int m = 1; 2 * m - 1 <= N; ++m)
            total += (1.0 - r[i]) * (1.0 - r[i]) *
                     std::pow(r[i], 2 * m - 1) * (1.0 - m * eps);
        // Converted paths: partner enters from the left (2a partner-side
        // reflections before converting, 2b own-side after), or from the
        // right (one extra partner-side reflection).
        for (int a = 0; 2 * a <= N; ++a)
            for (int b = 0; 2 * a + 2 * b <= N; ++b)
                total += (1.0 - r[j]) * (1.0 - r[i]) * G[i] *
                         std::pow(r[j], 2 * a) * std::pow(r[i], 2 * b);
        for (int a = 0; 2 * a + 1 <= N; ++a)
            for (int b = 0; 2 * a + 1 + 2 * b <= N; ++b)
                total += (1.0 - r[j]) * (1.0 - r[i]) * G[i] *
                         std::pow(r[j], 2 * a + 1) * std::pow(r[i], 2 * b);
        out[i] = total;
    }
    return {out[0], out[1]};
}

std::pair<double, double> poynting_out_all(const CouplingSet& cs) {
    const double l = cs.length_l;
    const double s2 = sinc2_signed(cs.b_squared, l);
    const double cross = (cs.process == ProcessKind::PUC) ? -1.0 : 1.0;
    const double p1 =
        1.0 + cs.g1 * (cs.g1 + cross * cs.g2) * l * l * s2 / (1.0 + cs.r1);
    const double p2 =
        1.0 + cs.g2 * (cs.g2 + cross * cs.g1) * l * l * s2 / (1.0 + cs.r2);
    return {p1, p2};
}

}  // namespace pucv
