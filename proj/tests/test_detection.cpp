// Detection layer: detuning integrals, counting rates, the conversion ratio
// table, alignment geometry, and the backward partner rate.
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "generated_reference.hpp"
#include "pucv/detection.hpp"

using namespace pucv;

namespace {

constexpr double kPi = 3.141592653589793238462643;

const UniaxialCrystal kBbo = bbo_preset();

PumpWave pump_o(double lambda_um, double amplitude = 1.0) {
    PumpWave p;
    p.lambda0_um = lambda_um;
    p.polarization = Polarization::Ordinary;
    p.amplitude_V = amplitude;
    return p;
}

PumpWave pump_e(double lambda_um) {
    PumpWave p;
    p.lambda0_um = lambda_um;
    p.polarization = Polarization::Extraordinary;
    return p;
}

MatchSolution puc_at(double lambda1_um) {
    return solve_pair(ProcessKind::PUC, kBbo, pump_o(0.351), lambda1_um,
                      PlaneSelector::Equatorial);
}

MatchSolution pdc_at(double lambda1_um) {
    return solve_pair(ProcessKind::PDC, kBbo, pump_e(0.351), lambda1_um,
                      PlaneSelector::Equatorial);
}

}  // namespace

TEST_CASE("closed detuning integral") {
    for (size_t i = 0; i < std::size(oracle::t1_lambda1_um); ++i) {
        const MatchSolution sol = puc_at(oracle::t1_lambda1_um[i]);
        const double expect = 2.0 * kPi / (5000.0 * std::abs(oracle::t1_slope[i]));
        CHECK(freq_integral_closed(sol, 5000.0) ==
              doctest::Approx(expect).epsilon(1e-9));
        // Linear in 1/length.
        CHECK(freq_integral_closed(sol, 10000.0) ==
              doctest::Approx(expect / 2.0).epsilon(1e-12));
    }
    const MatchSolution pdc = pdc_at(0.692);
    CHECK(freq_integral_closed(pdc, 5000.0) ==
          doctest::Approx(2.0 * kPi / (5000.0 * std::abs(oracle::pdc_slope)))
              .epsilon(1e-9));
}

TEST_CASE("degenerate phase matching is rejected") {
    // The detuning slope crosses zero near 491 nm on the up-conversion branch.
    const MatchSolution near_deg = puc_at(0.491);
    CHECK_THROWS_AS(freq_integral_closed(near_deg, 5000.0),
                    NearDegeneratePhaseMatch);
    CHECK_THROWS_AS(freq_integral_quadrature(near_deg, 5000.0),
                    NearDegeneratePhaseMatch);
    DetectorConfig det;
    CHECK_THROWS_AS(pucv_rate_closed(kBbo, pump_o(0.351), near_deg, det),
                    NearDegeneratePhaseMatch);

    // Degenerate down conversion: symmetric pair at twice the pump wavelength.
    const MatchSolution deg = pdc_at(0.702);
    CHECK_THROWS_AS(freq_integral_closed(deg, 5000.0), NearDegeneratePhaseMatch);
    CHECK_THROWS_AS(pdcv_rate_closed(kBbo, pump_e(0.351), deg, det),
                    NearDegeneratePhaseMatch);
}

TEST_CASE("quadrature over closed ratios") {
    for (size_t i = 0; i < std::size(oracle::t1_lambda1_um); ++i) {
        const MatchSolution sol = puc_at(oracle::t1_lambda1_um[i]);
        const double ratio = freq_integral_quadrature(sol, 5000.0) /
                             freq_integral_closed(sol, 5000.0);
        CHECK(ratio ==
              doctest::Approx(oracle::t1_quad_over_closed[i]).epsilon(1e-6));
    }
    // Window-capped geometries close to degeneracy.
    CHECK(freq_integral_quadrature(puc_at(0.490), 5000.0) /
              freq_integral_closed(puc_at(0.490), 5000.0) ==
          doctest::Approx(oracle::t4_quad_over_closed[4]).epsilon(1e-5));
    CHECK(freq_integral_quadrature(puc_at(0.492), 5000.0) /
              freq_integral_closed(puc_at(0.492), 5000.0) ==
          doctest::Approx(oracle::t4_quad_over_closed[5]).epsilon(1e-5));
    const MatchSolution pdc = pdc_at(0.692);
    CHECK(freq_integral_quadrature(pdc, 5000.0) /
              freq_integral_closed(pdc, 5000.0) ==
          doctest::Approx(oracle::pdc_quad_over_closed).epsilon(1e-6));
}

TEST_CASE("up-conversion rate: scaling and branch selection") {
    const DetectorConfig det;
    const MatchSolution sol = puc_at(0.5);
    const RateResult base = pucv_rate_closed(kBbo, pump_o(0.351), sol, det);
    CHECK(base.detectable_mode == DetectableMode::Mode1);
    CHECK(base.d1 > 0.0);
    CHECK(base.d2 == 0.0);
    CHECK(base.method == RateMethod::ClosedForm);
    CHECK(base.warnings.empty());

    // Quadratic in the pump amplitude, linear in the crystal length.
    const RateResult v2 = pucv_rate_closed(kBbo, pump_o(0.351, 2.0), sol, det);
    CHECK(v2.d1 == doctest::Approx(4.0 * base.d1).epsilon(1e-12));
    UniaxialCrystal longer = kBbo;
    longer.length_l_um = 2.0 * kBbo.length_l_um;
    const RateResult l2 = pucv_rate_closed(longer, pump_o(0.351), sol, det);
    CHECK(l2.d1 == doctest::Approx(2.0 * base.d1).epsilon(1e-12));

    // A dominant d31 flips the detectable branch to mode 2.
    UniaxialCrystal flipped = kBbo;
    flipped.d31 = 2.0 * kBbo.d15;
    const RateResult swapped = pucv_rate_closed(flipped, pump_o(0.351), sol, det);
    CHECK(swapped.detectable_mode == DetectableMode::Mode2);
    CHECK(swapped.d1 == 0.0);
    CHECK(swapped.d2 > 0.0);

    // At the spectrum edge the coefficient bracket closes and the rate
    // collapses.
    const PumpWave pump = pump_o(0.351);
    const double edge = collinear_edge(ProcessKind::PUC, kBbo, pump,
                                       Polarization::Ordinary,
                                       Polarization::Extraordinary);
    const MatchSolution edge_sol =
        solve_pair(ProcessKind::PUC, kBbo, pump, edge, PlaneSelector::Equatorial);
    const RateResult edge_rate = pucv_rate_closed(kBbo, pump, edge_sol, det);
    CHECK(edge_rate.d1 >= 0.0);
    CHECK(edge_rate.d1 < 1e-8 * base.d1);

    // Integral method rescales by the quadrature/closed ratio.
    const RateResult integral =
        pucv_rate_closed(kBbo, pump_o(0.351), sol, det, RateMethod::Integral);
    CHECK(integral.method == RateMethod::Integral);
    CHECK(integral.d1 / base.d1 ==
          doctest::Approx(freq_integral_quadrature(sol, kBbo.length_l_um) /
                          freq_integral_closed(sol, kBbo.length_l_um))
              .epsilon(1e-12));

    // Strong-pump warning.
    const RateResult warned = pucv_rate_closed(kBbo, pump_o(0.351, 3.0), sol, det);
    REQUIRE(!warned.warnings.empty());
    CHECK(warned.warnings[0].find("weak-coupling rate formulas degrade") !=
          std::string::npos);

    // Process mismatch is a usage error.
    CHECK_THROWS_AS(pucv_rate_closed(kBbo, pump_e(0.351), pdc_at(0.692), det),
                    UsageError);
}

TEST_CASE("down-conversion rate") {
    const DetectorConfig det;
    const MatchSolution sol = pdc_at(0.692);
    const RateResult rate = pdcv_rate_closed(kBbo, pump_e(0.351), sol, det);
    CHECK(rate.detectable_mode == DetectableMode::Both);
    CHECK(rate.d1 > 0.0);
    CHECK(rate.d2 > 0.0);
    // Reference value was generated with unit coefficient; the rate scales
    // as d15^2 (default d15 = 1e-7).
    CHECK(rate.d1 * 1e14 == doctest::Approx(oracle::pdc_ref_rate).epsilon(1e-12));
    // The detected mode carries the bigger spectral weight here (omega1 > omega2).
    CHECK(rate.d1 > rate.d2);

    CHECK_THROWS_AS(pdcv_rate_closed(kBbo, pump_o(0.351), puc_at(0.5), det),
                    UsageError);
}

TEST_CASE("ratio table against reference values") {
    const std::vector<double> grid(std::begin(oracle::t4_lambda1_um),
                                   std::end(oracle::t4_lambda1_um));
    const auto rows =
        ratio_table(kBbo, pump_o(0.351), pump_e(0.351), grid, 1.0);
    REQUIRE(rows.size() == std::size(oracle::t4_lambda1_um));
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].lambda1_nm ==
              doctest::Approx(oracle::t4_lambda1_um[i] * 1000.0).epsilon(1e-12));
        CHECK(rows[i].ratio ==
              doctest::Approx(oracle::t4_ratio_kleinman[i]).epsilon(1e-9));
        CHECK(rows[i].theta1_deg ==
              doctest::Approx(oracle::t4_theta1_deg[i]).epsilon(1e-9));
    }

    const auto rows95 =
        ratio_table(kBbo, pump_o(0.351), pump_e(0.351), grid, 0.95);
    REQUIRE(rows95.size() == rows.size());
    for (size_t i = 0; i < rows95.size(); ++i) {
        CHECK(rows95[i].ratio ==
              doctest::Approx(oracle::t4_ratio_d31_095[i]).epsilon(1e-9));
    }
}

TEST_CASE("ratio table drops degenerate grid points") {
    std::vector<double> grid;
    for (int nm = 482; nm <= 500; ++nm) grid.push_back(nm / 1000.0);
    const auto rows = ratio_table(kBbo, pump_o(0.351), pump_e(0.351), grid, 1.0);
    CHECK(rows.size() == 18);  // 19 grid points, 491 nm excluded
    CHECK(std::none_of(rows.begin(), rows.end(), [](const RatioRow& r) {
        return std::abs(r.lambda1_nm - 491.0) < 0.5;
    }));
    CHECK(std::any_of(rows.begin(), rows.end(), [](const RatioRow& r) {
        return std::abs(r.lambda1_nm - 490.0) < 0.5;
    }));
}

TEST_CASE("ratio table is invariant under detector rescaling") {
    const std::vector<double> grid = {0.484, 0.49, 0.5};
    const auto base = ratio_table(kBbo, pump_o(0.351), pump_e(0.351), grid, 1.0);

    // A global rescale touches the shared pump amplitude (both processes see
    // the same pump) and the detector constants; everything cancels in the
    // ratio.
    DetectorConfig scaled_det;
    scaled_det.efficiency_C = 7.0;
    scaled_det.solid_angle = 0.2;
    PumpWave pdc_scaled = pump_e(0.351);
    pdc_scaled.amplitude_V = 3.0;
    const auto scaled = ratio_table(kBbo, pump_o(0.351, 3.0), pdc_scaled, grid,
                                    1.0, scaled_det);
    REQUIRE(scaled.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) {
        CHECK(scaled[i].ratio == doctest::Approx(base[i].ratio).epsilon(1e-12));
    }
}

TEST_CASE("alignment geometry") {
    const AlignmentGeometry align = alignment_geometry(
        kBbo, pump_o(0.351), 0.5, PlaneSelector::Equatorial);
    CHECK(align.aligner_lambda_um ==
          doctest::Approx(0.20622796709753233).epsilon(1e-12));
    CHECK(align.aligner_incidence_deg ==
          doctest::Approx(7.340225534693556).epsilon(1e-9));
    CHECK(align.signal_exit_deg ==
          doctest::Approx(18.04456368342408).epsilon(1e-9));
}

TEST_CASE("backward partner rate") {
    const DetectorConfig det;
    const MatchSolution sol = puc_at(0.5);
    const PumpWave pump = pump_o(0.351);
    const RateResult forward = pucv_rate_closed(kBbo, pump, sol, det);
    const CouplingSet cs = coupling_constants(kBbo, pump, sol, ProcessKind::PUC);
    CHECK(backward_partner_rate(forward, cs) ==
          doctest::Approx(cs.r2 * forward.d1).epsilon(1e-15));

    // Only defined for the up-conversion mode-1 branch.
    const MatchSolution pdc_sol = pdc_at(0.692);
    const CouplingSet pdc_cs =
        coupling_constants(kBbo, pump_e(0.351), pdc_sol, ProcessKind::PDC);
    const RateResult pdc_rate = pdcv_rate_closed(kBbo, pump_e(0.351), pdc_sol, det);
    CHECK_THROWS_AS(backward_partner_rate(pdc_rate, pdc_cs), UsageError);

    UniaxialCrystal flipped = kBbo;
    flipped.d31 = 2.0 * kBbo.d15;
    const RateResult swapped = pucv_rate_closed(flipped, pump, sol, det);
    CHECK_THROWS_AS(backward_partner_rate(swapped, cs), UsageError);
}
