// pybind11 bindings for the pucv core: crystals and dispersion, phase
// matching, coupled-mode transfer, rates, and the reference-table checks.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pucv/cli.hpp"
#include "pucv/coupling.hpp"
#include "pucv/detection.hpp"
#include "pucv/reference_tables.hpp"
#include "pucv/table_io.hpp"

namespace py = pybind11;
using namespace pucv;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Geometry and intensity of parametric up/down conversion of the "
        "vacuum in a pumped uniaxial crystal";

    // Exception translation: the library root maps to RuntimeError, usage
    // mistakes to ValueError (registered last so it is matched first).
    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    py::enum_<ProcessKind>(m, "ProcessKind")
        .value("PDC", ProcessKind::PDC)
        .value("PUC", ProcessKind::PUC);
    py::enum_<PlaneSelector>(m, "PlaneSelector")
        .value("EQUATORIAL", PlaneSelector::Equatorial)
        .value("LONGITUDINAL", PlaneSelector::Longitudinal);
    py::enum_<Polarization>(m, "Polarization")
        .value("ORDINARY", Polarization::Ordinary)
        .value("EXTRAORDINARY", Polarization::Extraordinary);
    py::enum_<DetectableMode>(m, "DetectableMode")
        .value("MODE1", DetectableMode::Mode1)
        .value("MODE2", DetectableMode::Mode2)
        .value("BOTH", DetectableMode::Both);
    py::enum_<RateMethod>(m, "RateMethod")
        .value("CLOSED_FORM", RateMethod::ClosedForm)
        .value("INTEGRAL", RateMethod::Integral);

    py::class_<SellmeierModel>(m, "SellmeierModel")
        .def(py::init<>())
        .def_readwrite("a", &SellmeierModel::a)
        .def_readwrite("b", &SellmeierModel::b)
        .def_readwrite("c", &SellmeierModel::c)
        .def_readwrite("d", &SellmeierModel::d);

    py::class_<UniaxialCrystal>(m, "UniaxialCrystal")
        .def(py::init<>())
        .def_readwrite("name", &UniaxialCrystal::name)
        .def_readwrite("ord", &UniaxialCrystal::ord)
        .def_readwrite("ext90", &UniaxialCrystal::ext90)
        .def_readwrite("cut_angle_deg", &UniaxialCrystal::cut_angle_deg)
        .def_readwrite("length_l_um", &UniaxialCrystal::length_l_um)
        .def_readwrite("d15", &UniaxialCrystal::d15)
        .def_readwrite("d31", &UniaxialCrystal::d31)
        .def_readwrite("transparency_min_um", &UniaxialCrystal::transparency_min_um)
        .def_readwrite("window_min_um", &UniaxialCrystal::window_min_um)
        .def_readwrite("window_max_um", &UniaxialCrystal::window_max_um);

    py::class_<PumpWave>(m, "PumpWave")
        .def(py::init<>())
        .def_readwrite("lambda0_um", &PumpWave::lambda0_um)
        .def_readwrite("polarization", &PumpWave::polarization)
        .def_readwrite("amplitude_V", &PumpWave::amplitude_V);

    py::class_<MatchSolution>(m, "MatchSolution")
        .def_readonly("process", &MatchSolution::process)
        .def_readonly("plane", &MatchSolution::plane)
        .def_readonly("lambda1_um", &MatchSolution::lambda1_um)
        .def_readonly("lambda2_um", &MatchSolution::lambda2_um)
        .def_readonly("theta1_deg", &MatchSolution::theta1_deg)
        .def_readonly("theta2_deg", &MatchSolution::theta2_deg)
        .def_readonly("phi1_deg", &MatchSolution::phi1_deg)
        .def_readonly("phi2_deg", &MatchSolution::phi2_deg)
        .def_readonly("n0", &MatchSolution::n0)
        .def_readonly("n1", &MatchSolution::n1)
        .def_readonly("n2", &MatchSolution::n2)
        .def_readonly("residual_transverse", &MatchSolution::residual_transverse)
        .def_readonly("residual_longitudinal",
                      &MatchSolution::residual_longitudinal)
        .def_readonly("below_transparency", &MatchSolution::below_transparency);

    py::class_<SweepNote>(m, "SweepNote")
        .def_readonly("lambda1_um", &SweepNote::lambda1_um)
        .def_readonly("note", &SweepNote::note);
    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("solutions", &SweepResult::solutions)
        .def_readonly("notes", &SweepResult::notes);

    py::class_<CouplingSet>(m, "CouplingSet")
        .def(py::init<>())
        .def_readwrite("f1", &CouplingSet::f1)
        .def_readwrite("f2", &CouplingSet::f2)
        .def_readwrite("g1", &CouplingSet::g1)
        .def_readwrite("g2", &CouplingSet::g2)
        .def_readwrite("delta", &CouplingSet::delta)
        .def_readwrite("b", &CouplingSet::b)
        .def_readwrite("b_squared", &CouplingSet::b_squared)
        .def_readwrite("length_l", &CouplingSet::length_l)
        .def_readwrite("r1", &CouplingSet::r1)
        .def_readwrite("r2", &CouplingSet::r2)
        .def_readwrite("process", &CouplingSet::process);

    py::class_<ModeAmplitudePair>(m, "ModeAmplitudePair")
        .def(py::init<>())
        .def_readwrite("a1", &ModeAmplitudePair::a1)
        .def_readwrite("a2", &ModeAmplitudePair::a2);

    py::class_<DetectorConfig>(m, "DetectorConfig")
        .def(py::init<>())
        .def_readwrite("efficiency_C", &DetectorConfig::efficiency_C)
        .def_readwrite("solid_angle", &DetectorConfig::solid_angle);

    py::class_<RateResult>(m, "RateResult")
        .def_readonly("d1", &RateResult::d1)
        .def_readonly("d2", &RateResult::d2)
        .def_readonly("detectable_mode", &RateResult::detectable_mode)
        .def_readonly("method", &RateResult::method)
        .def_readonly("warnings", &RateResult::warnings);

    py::class_<RatioRow>(m, "RatioRow")
        .def_readonly("lambda1_nm", &RatioRow::lambda1_nm)
        .def_readonly("ratio", &RatioRow::ratio)
        .def_readonly("theta1_deg", &RatioRow::theta1_deg);

    py::class_<AlignmentGeometry>(m, "AlignmentGeometry")
        .def_readonly("aligner_lambda_um", &AlignmentGeometry::aligner_lambda_um)
        .def_readonly("aligner_incidence_deg",
                      &AlignmentGeometry::aligner_incidence_deg)
        .def_readonly("signal_exit_deg", &AlignmentGeometry::signal_exit_deg);

    py::class_<CellCheck>(m, "CellCheck")
        .def_readonly("label", &CellCheck::label)
        .def_readonly("computed", &CellCheck::computed)
        .def_readonly("reference", &CellCheck::reference)
        .def_readonly("tolerance", &CellCheck::tolerance)
        .def_readonly("relative", &CellCheck::relative)
        .def_readonly("pass_", &CellCheck::pass)
        .def_readonly("note", &CellCheck::note);
    py::class_<TableReport>(m, "TableReport")
        .def_readonly("name", &TableReport::name)
        .def_readonly("cells", &TableReport::cells)
        .def_readonly("pass_", &TableReport::pass);

    // Crystals and dispersion.
    m.def("bbo_preset", &bbo_preset, "Built-in beta barium borate preset");
    m.def("crystal_n_ord", &crystal_n_ord, py::arg("crystal"),
          py::arg("lambda_um"));
    m.def("crystal_n_ext90", &crystal_n_ext90, py::arg("crystal"),
          py::arg("lambda_um"));
    m.def("crystal_n_ext", &crystal_n_ext, py::arg("crystal"),
          py::arg("lambda_um"), py::arg("psi_deg"));

    // Phase matching.
    m.def("partner_wavelength", &partner_wavelength, py::arg("process"),
          py::arg("lambda0_um"), py::arg("lambda1_um"));
    m.def("collinear_edge", &collinear_edge, py::arg("process"),
          py::arg("crystal"), py::arg("pump"), py::arg("pol1"), py::arg("pol2"));
    m.def("solve_pair", &solve_pair, py::arg("process"), py::arg("crystal"),
          py::arg("pump"), py::arg("lambda1_um"), py::arg("plane"));
    m.def("rainbow_sweep", &rainbow_sweep, py::arg("process"), py::arg("crystal"),
          py::arg("pump"), py::arg("lambda_min_um"), py::arg("lambda_max_um"),
          py::arg("step_um"), py::arg("plane"));

    // Coupled-mode layer.
    m.def("coupling_constants", &coupling_constants, py::arg("crystal"),
          py::arg("pump"), py::arg("sol"), py::arg("process"));
    m.def("detuning", &detuning, py::arg("sol"), py::arg("process"),
          py::arg("omega1_prime"));
    m.def("transfer", &transfer, py::arg("cs"), py::arg("input"));
    m.def("poynting_out_partial", &poynting_out_partial, py::arg("cs"),
          py::arg("max_reflections"));
    m.def("poynting_out_all", &poynting_out_all, py::arg("cs"));
    m.def("fresnel_r_tangent", &fresnel_r_tangent, py::arg("theta_deg"),
          py::arg("phi_deg"), py::arg("n"));
    m.def("fresnel_r_sine", &fresnel_r_sine, py::arg("theta_deg"),
          py::arg("phi_deg"), py::arg("n"));

    // Detection layer.
    m.def("freq_integral_closed", &freq_integral_closed, py::arg("sol"),
          py::arg("length_um"), py::arg("epsilon_degenerate") = 1e-3);
    m.def("freq_integral_quadrature", &freq_integral_quadrature, py::arg("sol"),
          py::arg("length_um"), py::arg("epsilon_degenerate") = 1e-3);
    m.def("pucv_rate_closed", &pucv_rate_closed, py::arg("crystal"),
          py::arg("pump"), py::arg("sol"), py::arg("det"),
          py::arg("method") = RateMethod::ClosedForm);
    m.def("pdcv_rate_closed", &pdcv_rate_closed, py::arg("crystal"),
          py::arg("pump"), py::arg("sol_d"), py::arg("det"),
          py::arg("method") = RateMethod::ClosedForm);
    m.def("ratio_table", &ratio_table, py::arg("crystal"), py::arg("pump_puc"),
          py::arg("pump_pdc_ref"), py::arg("lambda_grid_um"),
          py::arg("d31_over_d15") = 1.0,
          py::arg("det") = DetectorConfig{},
          py::arg("ref_lambda1_um") = 0.692);
    m.def("alignment_geometry", &alignment_geometry, py::arg("crystal"),
          py::arg("pump"), py::arg("target_lambda1_um"), py::arg("plane"));
    m.def("backward_partner_rate", &backward_partner_rate, py::arg("forward"),
          py::arg("cs"));

    // Reference-table checks.
    m.def("check_all_tables", &check_all_tables, py::arg("crystal"),
          py::arg("d31_over_d15") = 1.0);
    m.def("format_reports", &format_reports, py::arg("reports"));
}
