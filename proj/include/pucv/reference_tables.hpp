// Published reference tables embedded as data, plus the recompute-and-diff
// reports the CLI and the acceptance checks share. Each cell records the
// computed value, the reference value, the tolerance, and pass/fail.
#pragma once

#include <string>
#include <vector>

#include "pucv/crystal.hpp"

namespace pucv {

struct CellCheck {
    std::string label;
    double computed = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;   // absolute unless relative is set
    bool relative = false;
    bool pass = false;
    std::string note;         // warnings or solver errors for this cell
};

struct TableReport {
    std::string name;
    std::vector<CellCheck> cells;
    bool pass = false;
};

// Rainbow table for the 0.351 um ordinary pump: collinear edge, equatorial
// and longitudinal semiangles at 500-800 nm, partner wavelengths.
TableReport check_table1(const UniaxialCrystal& crystal);
// Same layout for the 0.702 um ordinary pump (rows 270-679.5 nm).
TableReport check_table2(const UniaxialCrystal& crystal);
// Spectrum edge and partner vs pump wavelength (351-702 nm pumps).
TableReport check_table3(const UniaxialCrystal& crystal);
// Up/down conversion rate ratios on the 482-500 nm grid against the fixed
// 692o down-conversion reference, plus peak location/value bounds.
TableReport check_table4(const UniaxialCrystal& crystal);
// Sensitivity case d31 = 0.95*d15: grid peak ratio against [1.0, 1.5].
TableReport check_kleinman_sensitivity(const UniaxialCrystal& crystal);

// Tables 1-4; appends the sensitivity report when d31_over_d15 != 1.
std::vector<TableReport> check_all_tables(const UniaxialCrystal& crystal,
                                          double d31_over_d15 = 1.0);

// Fixed-format report: one line per cell, one PASS/FAIL line per table.
std::string format_reports(const std::vector<TableReport>& reports);

}  // namespace pucv
