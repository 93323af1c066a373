// Deterministic CSV/JSON emission for sweeps, rates, and ratio tables, plus
// the number-formatting helpers shared by the CLI (fixed decimals for the
// human-facing columns, 17 significant digits for JSON).
#pragma once

#include <string>
#include <vector>

#include "pucv/detection.hpp"
#include "pucv/phasematch.hpp"

namespace pucv {

// Fixed-point with the given number of decimals (printf %.Nf).
std::string fmt_fixed(double value, int decimals);
// Shortest round-trippable representation (printf %.17g).
std::string fmt_full(double value);

// One merged row of an equatorial + longitudinal sweep; missing planes keep
// empty cells and a warning token.
struct SweepRow {
    double lambda1_um = 0.0;
    bool has_eq = false;
    bool has_long = false;
    double theta1_eq_deg = 0.0;
    double theta1_long_deg = 0.0;
    double lambda2_um = 0.0;
    std::vector<std::string> warnings;
};

std::vector<SweepRow> merge_sweeps(const SweepResult& eq, const SweepResult& lng);

// Header: lambda1_nm,theta1_deg_eq,theta1_deg_long,lambda2_nm,warning
// Angles and wavelengths with 2 decimals; warnings joined with ';'.
std::string sweep_csv(const std::vector<SweepRow>& rows);
// Same records with identical field names, full precision.
std::string sweep_json(const std::vector<SweepRow>& rows);

// {lambda1_nm, theta1_deg, rate_arbitrary, detectable_mode, method, warnings[]}
std::string rate_json(double lambda1_nm, double theta1_deg, double rate,
                      DetectableMode mode, RateMethod method,
                      const std::vector<std::string>& warnings);

// Header: lambda1_nm,ratio,theta1_deg — wavelengths/angles 2 decimals, ratios 3.
std::string ratio_csv(const std::vector<RatioRow>& rows);
std::string ratio_json(const std::vector<RatioRow>& rows);

}  // namespace pucv
