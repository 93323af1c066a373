// Command-line front end. run_cli is in-process so tests can drive the full
// binary behaviour; tools/main.cpp is a thin wrapper around it.
#pragma once

#include <iosfwd>
#include <string>

namespace pucv {

struct RunConfig {
    std::string crystal_name = "bbo";
    double pump_nm = 351.0;
    std::string pump_pol;          // "o" | "e"; defaults by process if empty
    std::string process = "puc";   // "puc" | "pdc"
    std::string plane = "eq";      // "eq" | "long"
    double length_um = 0.0;        // 0 = use the crystal's own length
    double d31_over_d15 = 1.0;
    std::string output_format = "csv";  // "csv" | "json"
    std::string output_path;       // empty = standard output
};

// Exit codes: 0 success, 1 domain/solver failure (or failed table check),
// 2 usage error. Data goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pucv
