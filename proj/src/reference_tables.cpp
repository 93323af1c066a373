#include "pucv/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pucv/detection.hpp"
#include "pucv/phasematch.hpp"

namespace pucv {

namespace {

// Published reference values: rainbow rows are
// (signal nm, equatorial deg, longitudinal deg, partner nm).
struct RainbowRef {
    double lambda1_nm;
    double eq_deg;
    double long_deg;
    double partner_nm;
};

constexpr RainbowRef kTable1Rows[] = {
    {500.0, 18.04, 15.37, 206.23},
    {600.0, 42.42, 36.94, 221.45},
    {700.0, 55.98, 49.18, 233.78},
    {800.0, 68.13, 59.47, 243.96},
};
constexpr double kTable1EdgeNm = 481.07;

constexpr RainbowRef kTable2Rows[] = {
    {270.0, 28.04, 16.99, 195.00},
    {300.0, 45.57, 28.69, 210.18},
    {400.0, 65.08, 44.23, 254.81},
    {500.0, 73.16, 51.69, 292.01},
    {600.0, 79.67, 56.93, 323.50},
    {679.5, 89.33, 60.47, 345.28},
};
constexpr double kTable2EdgeNm = 256.79;

// Spectrum edge vs pump: (pump nm, edge nm, partner nm).
struct EdgeRef {
    double pump_nm;
    double edge_nm;
    double partner_nm;
};

constexpr EdgeRef kTable3Rows[] = {
    {351.0, 481.07, 202.93},
    {400.0, 419.35, 204.72},
    {500.0, 338.02, 202.00},
    {600.0, 290.02, 195.51},
    {702.0, 256.79, 188.01},
};

// Up/down rate ratios on the 482-500 nm grid: (signal nm, ratio, theta1 deg).
struct RatioRef {
    double lambda1_nm;
    double ratio;
    double theta1_deg;
};

constexpr RatioRef kTable4Rows[] = {
    {482.0, 0.003, 4.07},  {484.0, 0.011, 7.20},  {486.0, 0.025, 9.33},
    {488.0, 0.059, 11.04}, {490.0, 0.254, 12.50}, {492.0, 0.221, 13.81},
    {494.0, 0.094, 14.99}, {496.0, 0.065, 16.08}, {498.0, 0.052, 17.09},
    {500.0, 0.045, 18.04},
};

std::string row_label(const char* what, double lambda_nm, const char* unit) {
    char buf[96];
    if (unit[0] == '\0')
        std::snprintf(buf, sizeof(buf), "%s_%gnm", what, lambda_nm);
    else
        std::snprintf(buf, sizeof(buf), "%s_%gnm_%s", what, lambda_nm, unit);
    return buf;
}

CellCheck make_cell(std::string label, double computed, double reference,
                    double tolerance, bool relative = false, std::string note = "") {
    CellCheck cell;
    cell.label = std::move(label);
    cell.computed = computed;
    cell.reference = reference;
    cell.tolerance = tolerance;
    cell.relative = relative;
    const double bound = relative ? tolerance * std::abs(reference) : tolerance;
    cell.pass = std::isfinite(computed) && std::abs(computed - reference) <= bound;
    cell.note = std::move(note);
    return cell;
}

CellCheck error_cell(std::string label, double reference, std::string why) {
    CellCheck cell;
    cell.label = std::move(label);
    cell.computed = std::nan("");
    cell.reference = reference;
    cell.pass = false;
    cell.note = std::move(why);
    return cell;
}

void finalize(TableReport& report) {
    report.pass = std::all_of(report.cells.begin(), report.cells.end(),
                              [](const CellCheck& c) { return c.pass; });
}

TableReport check_rainbow_table(const UniaxialCrystal& crystal, std::string name,
                                double pump_nm, double edge_ref_nm,
                                const RainbowRef* rows, size_t nrows,
                                double eq_tol_last_row) {
    TableReport report;
    report.name = std::move(name);
    PumpWave pump;
    pump.lambda0_um = pump_nm / 1000.0;
    pump.polarization = Polarization::Ordinary;

    try {
        const double edge_um =
            collinear_edge(ProcessKind::PUC, crystal, pump, Polarization::Ordinary,
                           Polarization::Extraordinary);
        report.cells.push_back(
            make_cell("edge_lambda1_nm", edge_um * 1000.0, edge_ref_nm, 0.05));
    } catch (const Error& e) {
        report.cells.push_back(error_cell("edge_lambda1_nm", edge_ref_nm, e.what()));
    }

    for (size_t i = 0; i < nrows; ++i) {
        const RainbowRef& row = rows[i];
        const double lam_um = row.lambda1_nm / 1000.0;
        const double eq_tol = (i + 1 == nrows) ? eq_tol_last_row : 0.05;
        try {
            const MatchSolution eq = solve_pair(ProcessKind::PUC, crystal, pump,
                                                lam_um, PlaneSelector::Equatorial);
            report.cells.push_back(make_cell(
                row_label("theta1_eq", row.lambda1_nm, "deg"), eq.theta1_deg,
                row.eq_deg, eq_tol));
            report.cells.push_back(make_cell(
                row_label("lambda2", row.lambda1_nm, "nm"), eq.lambda2_um * 1000.0,
                row.partner_nm, 0.01,
                false, eq.below_transparency ? "partner below transparency" : ""));
        } catch (const Error& e) {
            report.cells.push_back(error_cell(
                row_label("theta1_eq", row.lambda1_nm, "deg"), row.eq_deg, e.what()));
        }
        try {
            const MatchSolution lng = solve_pair(ProcessKind::PUC, crystal, pump,
                                                 lam_um, PlaneSelector::Longitudinal);
            report.cells.push_back(make_cell(
                row_label("theta1_long", row.lambda1_nm, "deg"), lng.theta1_deg,
                row.long_deg, 0.3));
        } catch (const Error& e) {
            report.cells.push_back(error_cell(
                row_label("theta1_long", row.lambda1_nm, "deg"), row.long_deg,
                e.what()));
        }
    }
    finalize(report);
    return report;
}

}  // namespace

TableReport check_table1(const UniaxialCrystal& crystal) {
    return check_rainbow_table(crystal, "TABLE1", 351.0, kTable1EdgeNm, kTable1Rows,
                               std::size(kTable1Rows), 0.05);
}

TableReport check_table2(const UniaxialCrystal& crystal) {
    // The last row sits within a degree of grazing exit; its published angle
    // carries a looser tolerance.
    return check_rainbow_table(crystal, "TABLE2", 702.0, kTable2EdgeNm, kTable2Rows,
                               std::size(kTable2Rows), 0.1);
}

TableReport check_table3(const UniaxialCrystal& crystal) {
    TableReport report;
    report.name = "TABLE3";
    for (const EdgeRef& row : kTable3Rows) {
        PumpWave pump;
        pump.lambda0_um = row.pump_nm / 1000.0;
        pump.polarization = Polarization::Ordinary;
        try {
            const double edge_um =
                collinear_edge(ProcessKind::PUC, crystal, pump,
                               Polarization::Ordinary, Polarization::Extraordinary);
            const double partner_um =
                partner_wavelength(ProcessKind::PUC, pump.lambda0_um, edge_um);
            const bool below = partner_um < crystal.transparency_min_um;
            report.cells.push_back(make_cell(row_label("edge_pump", row.pump_nm, "nm"),
                                             edge_um * 1000.0, row.edge_nm, 0.05));
            report.cells.push_back(make_cell(
                row_label("partner_pump", row.pump_nm, "nm"), partner_um * 1000.0,
                row.partner_nm, 0.05, false,
                below ? "partner below transparency" : ""));
            if (row.pump_nm == 702.0) {
                report.cells.push_back(
                    make_cell("transparency_warning_702nm", below ? 1.0 : 0.0, 1.0,
                              0.0, false,
                              "expects the deepest-ultraviolet partner flagged"));
            }
        } catch (const Error& e) {
            report.cells.push_back(
                error_cell(row_label("edge_pump", row.pump_nm, "nm"), row.edge_nm,
                           e.what()));
        }
    }
    finalize(report);
    return report;
}

namespace {

// Shared by the ratio checks: 1-nm scan over the full grid span; grid points
// excluded by the degeneracy guard are simply absent from the rows.
std::vector<RatioRow> ratio_scan_1nm(const UniaxialCrystal& crystal,
                                     double d31_over_d15) {
    PumpWave pump_puc;
    pump_puc.lambda0_um = 0.351;
    pump_puc.polarization = Polarization::Ordinary;
    PumpWave pump_pdc;
    pump_pdc.lambda0_um = 0.351;
    pump_pdc.polarization = Polarization::Extraordinary;
    std::vector<double> grid;
    for (int nm = 482; nm <= 500; ++nm) grid.push_back(nm / 1000.0);
    return ratio_table(crystal, pump_puc, pump_pdc, grid, d31_over_d15);
}

const RatioRow* peak_row(const std::vector<RatioRow>& rows) {
    const RatioRow* best = nullptr;
    for (const RatioRow& row : rows)
        if (best == nullptr || row.ratio > best->ratio) best = &row;
    return best;
}

}  // namespace

TableReport check_table4(const UniaxialCrystal& crystal) {
    TableReport report;
    report.name = "TABLE4";
    PumpWave pump_puc;
    pump_puc.lambda0_um = 0.351;
    pump_puc.polarization = Polarization::Ordinary;
    PumpWave pump_pdc;
    pump_pdc.lambda0_um = 0.351;
    pump_pdc.polarization = Polarization::Extraordinary;

    std::vector<double> grid;
    for (const RatioRef& row : kTable4Rows) grid.push_back(row.lambda1_nm / 1000.0);

    std::vector<RatioRow> rows;
    try {
        rows = ratio_table(crystal, pump_puc, pump_pdc, grid, 1.0);
    } catch (const Error& e) {
        report.cells.push_back(error_cell("ratio_grid", 0.0, e.what()));
        finalize(report);
        return report;
    }

    for (const RatioRef& ref : kTable4Rows) {
        const auto it = std::find_if(rows.begin(), rows.end(), [&](const RatioRow& r) {
            return std::abs(r.lambda1_nm - ref.lambda1_nm) < 1e-6;
        });
        if (it == rows.end()) {
            report.cells.push_back(error_cell(
                row_label("ratio", ref.lambda1_nm, ""), ref.ratio, "no solution"));
            continue;
        }
        report.cells.push_back(make_cell(row_label("ratio", ref.lambda1_nm, ""),
                                         it->ratio, ref.ratio, 0.20, true));
        report.cells.push_back(make_cell(row_label("theta1", ref.lambda1_nm, "deg"),
                                         it->theta1_deg, ref.theta1_deg, 0.05));
    }

    try {
        const std::vector<RatioRow> scan = ratio_scan_1nm(crystal, 1.0);
        const RatioRow* best = peak_row(scan);
        if (best == nullptr) {
            report.cells.push_back(error_cell("peak_location_nm", 491.0, "empty scan"));
        } else {
            report.cells.push_back(
                make_cell("peak_location_nm", best->lambda1_nm, 491.0, 2.0));
            report.cells.push_back(make_cell("peak_ratio", best->ratio, 0.255, 0.055));
        }
    } catch (const Error& e) {
        report.cells.push_back(error_cell("peak_location_nm", 491.0, e.what()));
    }
    finalize(report);
    return report;
}

TableReport check_kleinman_sensitivity(const UniaxialCrystal& crystal) {
    TableReport report;
    report.name = "SENSITIVITY";
    try {
        const std::vector<RatioRow> scan = ratio_scan_1nm(crystal, 0.95);
        const RatioRow* best = peak_row(scan);
        if (best == nullptr) {
            report.cells.push_back(
                error_cell("peak_ratio_d31_095", 1.25, "empty scan"));
        } else {
            // Expected band 1.0..1.5 expressed as midpoint and half-width.
            report.cells.push_back(
                make_cell("peak_ratio_d31_095", best->ratio, 1.25, 0.25));
        }
    } catch (const Error& e) {
        report.cells.push_back(error_cell("peak_ratio_d31_095", 1.25, e.what()));
    }
    finalize(report);
    return report;
}

std::vector<TableReport> check_all_tables(const UniaxialCrystal& crystal,
                                          double d31_over_d15) {
    std::vector<TableReport> reports;
    reports.push_back(check_table1(crystal));
    reports.push_back(check_table2(crystal));
    reports.push_back(check_table3(crystal));
    reports.push_back(check_table4(crystal));
    if (d31_over_d15 != 1.0)
        reports.push_back(check_kleinman_sensitivity(crystal));
    return reports;
}

std::string format_reports(const std::vector<TableReport>& reports) {
    std::ostringstream out;
    for (const TableReport& report : reports) {
        out << "=== " << report.name << " ===\n";
        size_t npass = 0;
        for (const CellCheck& cell : report.cells) {
            char tol[32];
            if (cell.relative)
                std::snprintf(tol, sizeof(tol), "%.0f%%", cell.tolerance * 100.0);
            else
                std::snprintf(tol, sizeof(tol), "%.4f", cell.tolerance);
            char line[256];
            std::snprintf(line, sizeof(line),
                          "  %-28s computed %14.6f  reference %12.6f  tol %-8s %s",
                          cell.label.c_str(), cell.computed, cell.reference, tol,
                          cell.pass ? "PASS" : "FAIL");
            out << line;
            if (!cell.note.empty()) out << "  [" << cell.note << "]";
            out << '\n';
            if (cell.pass) ++npass;
        }
        out << report.name << (report.pass ? ": PASS" : ": FAIL") << " (" << npass
            << "/" << report.cells.size() << " cells)\n";
    }
    return out.str();
}

}  // namespace pucv
