# Smoke tests for the Python bindings: a thin pass over each layer.
import math

import pytest

import pucvsim as pv


def test_dispersion():
    bbo = pv.bbo_preset()
    assert abs(pv.crystal_n_ord(bbo, 0.5) - 1.677361055353951) < 1e-12
    assert abs(pv.crystal_n_ext90(bbo, 0.5) - 1.556909725146453) < 1e-12
    assert abs(pv.crystal_n_ext(bbo, 0.5, 45.0) - 1.613773705746607) < 1e-12
    with pytest.raises(RuntimeError):
        pv.crystal_n_ord(bbo, 0.1)


def test_edge_and_matching():
    bbo = pv.bbo_preset()
    pump = pv.PumpWave()  # 0.351 um, ordinary
    edge = pv.collinear_edge(pv.ProcessKind.PUC, bbo, pump,
                             pv.Polarization.ORDINARY,
                             pv.Polarization.EXTRAORDINARY)
    assert abs(edge * 1000.0 - 481.06974048045686) < 1e-6

    sol = pv.solve_pair(pv.ProcessKind.PUC, bbo, pump, 0.5,
                        pv.PlaneSelector.EQUATORIAL)
    assert abs(sol.theta1_deg - 18.04456368342408) < 1e-8
    assert abs(sol.lambda2_um * 1000.0 - 206.22796709753233) < 1e-8
    assert abs(sol.residual_longitudinal) < 1e-9

    pdc_pump = pv.PumpWave()
    pdc_pump.polarization = pv.Polarization.EXTRAORDINARY
    with pytest.raises(ValueError):
        pv.solve_pair(pv.ProcessKind.PUC, bbo, pdc_pump, 0.5,
                      pv.PlaneSelector.EQUATORIAL)


def test_coupling_and_transfer():
    bbo = pv.bbo_preset()
    pump = pv.PumpWave()
    sol = pv.solve_pair(pv.ProcessKind.PUC, bbo, pump, 0.5,
                        pv.PlaneSelector.EQUATORIAL)
    cs = pv.coupling_constants(bbo, pump, sol, pv.ProcessKind.PUC)
    assert cs.g1 > 0 and cs.g2 > 0
    assert abs(cs.b - math.sqrt(cs.g1 * cs.g2)) < 1e-10 * cs.b

    amps = pv.ModeAmplitudePair()
    amps.a1 = 0.8 + 0.3j
    amps.a2 = -0.2 + 0.5j
    out = pv.transfer(cs, amps)
    before = cs.g2 * abs(amps.a1) ** 2 + cs.g1 * abs(amps.a2) ** 2
    after = cs.g2 * abs(out.a1) ** 2 + cs.g1 * abs(out.a2) ** 2
    assert abs(after - before) < 1e-12 * before

    p1, p2 = pv.poynting_out_all(cs)
    assert p1 >= 1.0 and p2 <= 1.0


def test_rates_and_ratio_table():
    bbo = pv.bbo_preset()
    pump = pv.PumpWave()
    sol = pv.solve_pair(pv.ProcessKind.PUC, bbo, pump, 0.5,
                        pv.PlaneSelector.EQUATORIAL)
    rate = pv.pucv_rate_closed(bbo, pump, sol, pv.DetectorConfig())
    assert rate.detectable_mode == pv.DetectableMode.MODE1
    assert abs(rate.d1 - 0.006240087478631343) < 1e-12

    pdc_pump = pv.PumpWave()
    pdc_pump.polarization = pv.Polarization.EXTRAORDINARY
    grid = [0.482 + 0.002 * k for k in range(10)]
    rows = pv.ratio_table(bbo, pump, pdc_pump, grid)
    assert len(rows) == 10
    peak = max(rows, key=lambda r: r.ratio)
    assert abs(peak.lambda1_nm - 490.0) < 0.5
    assert 0.20 <= peak.ratio <= 0.31


def test_reference_tables():
    reports = pv.check_all_tables(pv.bbo_preset())
    by_name = {r.name: r for r in reports}
    assert by_name["TABLE1"].pass_
    assert by_name["TABLE2"].pass_
    assert not by_name["TABLE3"].pass_  # one published cell is not reproducible
    assert by_name["TABLE4"].pass_
    text = pv.format_reports(reports)
    assert "TABLE1: PASS" in text
