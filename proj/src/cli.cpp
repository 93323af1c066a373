#include "pucv/cli.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pucv/detection.hpp"
#include "pucv/errors.hpp"
#include "pucv/reference_tables.hpp"
#include "pucv/table_io.hpp"

namespace pucv {

namespace {

using nlohmann::json;

ProcessKind process_of(const RunConfig& cfg) {
    if (cfg.process == "puc") return ProcessKind::PUC;
    if (cfg.process == "pdc") return ProcessKind::PDC;
    throw UsageError("process must be 'puc' or 'pdc'");
}

PlaneSelector plane_of(const RunConfig& cfg) {
    if (cfg.plane == "eq") return PlaneSelector::Equatorial;
    if (cfg.plane == "long") return PlaneSelector::Longitudinal;
    throw UsageError("plane must be 'eq' or 'long'");
}

Polarization pump_pol_of(const RunConfig& cfg) {
    if (cfg.pump_pol.empty())
        return process_of(cfg) == ProcessKind::PUC ? Polarization::Ordinary
                                                   : Polarization::Extraordinary;
    if (cfg.pump_pol == "o") return Polarization::Ordinary;
    if (cfg.pump_pol == "e") return Polarization::Extraordinary;
    throw UsageError("pump polarization must be 'o' or 'e'");
}

PumpWave make_pump(const RunConfig& cfg) {
    PumpWave pump;
    pump.lambda0_um = cfg.pump_nm / 1000.0;
    pump.polarization = pump_pol_of(cfg);
    return pump;
}

UniaxialCrystal resolve_crystal(const RunConfig& cfg, bool d_ratio_set) {
    CrystalRegistry registry = load_registry_from_env();
    UniaxialCrystal crystal = registry.get(cfg.crystal_name);
    if (cfg.length_um > 0.0) crystal.length_l_um = cfg.length_um;
    if (d_ratio_set) {
        if (!(cfg.d31_over_d15 > 0.0))
            throw UsageError("--d31-over-d15 must be positive");
        crystal.d31 = cfg.d31_over_d15 * crystal.d15;
    }
    return crystal;
}

int emit(const RunConfig& cfg, std::ostream& out, std::ostream& err,
         const std::string& text) {
    if (cfg.output_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(cfg.output_path);
    if (!file) {
        err << "error: cannot open output file " << cfg.output_path << "\n";
        return 1;
    }
    file << text;
    return 0;
}

std::vector<std::string> solution_warnings(const MatchSolution& sol) {
    std::vector<std::string> warnings;
    if (sol.below_transparency) warnings.push_back("partner_below_transparency");
    return warnings;
}

json solution_json(const MatchSolution& sol) {
    json rec;
    rec["lambda1_nm"] = sol.lambda1_um * 1000.0;
    rec["lambda2_nm"] = sol.lambda2_um * 1000.0;
    rec["theta1_deg"] = sol.theta1_deg;
    rec["theta2_deg"] = sol.theta2_deg;
    rec["phi1_deg"] = sol.phi1_deg;
    rec["phi2_deg"] = sol.phi2_deg;
    rec["n0"] = sol.n0;
    rec["n1"] = sol.n1;
    rec["n2"] = sol.n2;
    rec["residual_transverse"] = sol.residual_transverse;
    rec["residual_longitudinal"] = sol.residual_longitudinal;
    rec["warnings"] = solution_warnings(sol);
    return rec;
}

struct SubArgs {
    double lambda_nm = 0.0;    // index
    std::string pol = "o";
    double psi_deg = 90.0;
    double lambda1_nm = 0.0;   // match / rates / align
    std::string method = "closed";
    double min_nm = 0.0;       // rainbow
    double max_nm = 0.0;
    double step_nm = 1.0;
    double grid_min_nm = 482.0;  // ratio-table
    double grid_max_nm = 500.0;
    double grid_step_nm = 2.0;
};

int cmd_index(const RunConfig& cfg, const SubArgs& args, bool d_ratio_set,
              std::ostream& out, std::ostream& err) {
    const UniaxialCrystal crystal = resolve_crystal(cfg, d_ratio_set);
    const double lambda_um = args.lambda_nm / 1000.0;
    double n = 0.0;
    if (args.pol == "o")
        n = crystal_n_ord(crystal, lambda_um);
    else if (args.pol == "e")
        n = crystal_n_ext(crystal, lambda_um, args.psi_deg);
    else
        throw UsageError("--pol must be 'o' or 'e'");
    return emit(cfg, out, err, fmt_fixed(n, 6) + "\n");
}

int cmd_edge(const RunConfig& cfg, bool d_ratio_set, std::ostream& out,
             std::ostream& err) {
    const UniaxialCrystal crystal = resolve_crystal(cfg, d_ratio_set);
    const PumpWave pump = make_pump(cfg);
    const ProcessKind process = process_of(cfg);
    const Polarization pol2 = (process == ProcessKind::PUC)
                                  ? Polarization::Extraordinary
                                  : Polarization::Ordinary;
    const double edge_um =
        collinear_edge(process, crystal, pump, Polarization::Ordinary, pol2);
    const double partner_um =
        partner_wavelength(process, pump.lambda0_um, edge_um);

    std::string text;
    if (cfg.output_format == "json") {
        json rec;
        rec["lambda1_nm"] = edge_um * 1000.0;
        rec["lambda2_nm"] = partner_um * 1000.0;
        text = rec.dump(2) + "\n";
    } else {
        text = "lambda1_nm,lambda2_nm\n" + fmt_fixed(edge_um * 1000.0, 2) + "," +
               fmt_fixed(partner_um * 1000.0, 2) + "\n";
    }
    return emit(cfg, out, err, text);
}

int cmd_match(const RunConfig& cfg, const SubArgs& args, bool d_ratio_set,
              std::ostream& out, std::ostream& err) {
    const UniaxialCrystal crystal = resolve_crystal(cfg, d_ratio_set);
    const PumpWave pump = make_pump(cfg);
    const MatchSolution sol = solve_pair(process_of(cfg), crystal, pump,
                                         args.lambda1_nm / 1000.0, plane_of(cfg));
    std::string text;
    if (cfg.output_format == "json") {
        text = solution_json(sol).dump(2) + "\n";
    } else {
        text =
            "lambda1_nm,theta1_deg,theta2_deg,phi1_deg,phi2_deg,lambda2_nm,"
            "warning\n";
        text += fmt_fixed(sol.lambda1_um * 1000.0, 2) + "," +
                fmt_fixed(sol.theta1_deg, 2) + "," + fmt_fixed(sol.theta2_deg, 2) +
                "," + fmt_fixed(sol.phi1_deg, 2) + "," + fmt_fixed(sol.phi2_deg, 2) +
                "," + fmt_fixed(sol.lambda2_um * 1000.0, 2) + ",";
        const auto warnings = solution_warnings(sol);
        for (size_t i = 0; i < warnings.size(); ++i)
            text += (i ? ";" : "") + warnings[i];
        text += "\n";
    }
    return emit(cfg, out, err, text);
}

int cmd_rainbow(const RunConfig& cfg, const SubArgs& args, bool d_ratio_set,
                std::ostream& out, std::ostream& err) {
    if (!(args.min_nm > 0.0) || !(args.max_nm >= args.min_nm) ||
        !(args.step_nm > 0.0))
        throw UsageError("rainbow requires 0 < --min <= --max and --step > 0");
    const UniaxialCrystal crystal = resolve_crystal(cfg, d_ratio_set);
    const PumpWave pump = make_pump(cfg);
    const ProcessKind process = process_of(cfg);
    const SweepResult eq =
        rainbow_sweep(process, crystal, pump, args.min_nm / 1000.0,
                      args.max_nm / 1000.0, args.step_nm / 1000.0,
                      PlaneSelector::Equatorial);
    const SweepResult lng =
        rainbow_sweep(process, crystal, pump, args.min_nm / 1000.0,
                      args.max_nm / 1000.0, args.step_nm / 1000.0,
                      PlaneSelector::Longitudinal);
    const std::vector<SweepRow> rows = merge_sweeps(eq, lng);
    const std::string text =
        (cfg.output_format == "json") ? sweep_json(rows) : sweep_csv(rows);
    return emit(cfg, out, err, text);
}

int cmd_rates(const RunConfig& cfg, const SubArgs& args, bool d_ratio_set,
              std::ostream& out, std::ostream& err) {
    const UniaxialCrystal crystal = resolve_crystal(cfg, d_ratio_set);
    const PumpWave pump = make_pump(cfg);
    const ProcessKind process = process_of(cfg);
    const MatchSolution sol = solve_pair(process, crystal, pump,
                                         args.lambda1_nm / 1000.0, plane_of(cfg));
    RateMethod method;
    if (args.method == "closed")
        method = RateMethod::ClosedForm;
    else if (args.method == "integral")
        method = RateMethod::Integral;
    else
        throw UsageError("--method must be 'closed' or 'integral'");

    const DetectorConfig det;
    const RateResult rate =
        (process == ProcessKind::PUC)
            ? pucv_rate_closed(crystal, pump, sol, det, method)
            : pdcv_rate_closed(crystal, pump, sol, det, method);
    const double detectable =
        (rate.detectable_mode == DetectableMode::Mode2) ? rate.d2 : rate.d1;
    std::vector<std::string> warnings = rate.warnings;
    for (const std::string& w : solution_warnings(sol)) warnings.push_back(w);
    return emit(cfg, out, err,
                rate_json(sol.lambda1_um * 1000.0, sol.theta1_deg, detectable,
                          rate.detectable_mode, rate.method, warnings));
}

int cmd_ratio_table(const RunConfig& cfg, const SubArgs& args, std::ostream& out,
                    std::ostream& err) {
    if (!(args.grid_min_nm > 0.0) || !(args.grid_max_nm >= args.grid_min_nm) ||
        !(args.grid_step_nm > 0.0))
        throw UsageError("ratio-table requires 0 < --min <= --max and --step > 0");
    const UniaxialCrystal crystal = resolve_crystal(cfg, false);
    PumpWave pump_puc;
    pump_puc.lambda0_um = cfg.pump_nm / 1000.0;
    pump_puc.polarization = Polarization::Ordinary;
    PumpWave pump_pdc = pump_puc;
    pump_pdc.polarization = Polarization::Extraordinary;

    std::vector<double> grid;
    for (double nm = args.grid_min_nm; nm <= args.grid_max_nm + 1e-9;
         nm += args.grid_step_nm)
        grid.push_back(nm / 1000.0);

    const std::vector<RatioRow> rows =
        ratio_table(crystal, pump_puc, pump_pdc, grid, cfg.d31_over_d15);
    const std::string text =
        (cfg.output_format == "json") ? ratio_json(rows) : ratio_csv(rows);
    return emit(cfg, out, err, text);
}

int cmd_align(const RunConfig& cfg, const SubArgs& args, bool d_ratio_set,
              std::ostream& out, std::ostream& err) {
    const UniaxialCrystal crystal = resolve_crystal(cfg, d_ratio_set);
    const PumpWave pump = make_pump(cfg);
    const AlignmentGeometry geom = alignment_geometry(
        crystal, pump, args.lambda1_nm / 1000.0, plane_of(cfg));
    std::string text;
    if (cfg.output_format == "json") {
        json rec;
        rec["aligner_lambda_nm"] = geom.aligner_lambda_um * 1000.0;
        rec["aligner_incidence_deg"] = geom.aligner_incidence_deg;
        rec["signal_exit_deg"] = geom.signal_exit_deg;
        text = rec.dump(2) + "\n";
    } else {
        text = "aligner_lambda_nm,aligner_incidence_deg,signal_exit_deg\n" +
               fmt_fixed(geom.aligner_lambda_um * 1000.0, 2) + "," +
               fmt_fixed(geom.aligner_incidence_deg, 2) + "," +
               fmt_fixed(geom.signal_exit_deg, 2) + "\n";
    }
    return emit(cfg, out, err, text);
}

int cmd_tables(const RunConfig& cfg, bool d_ratio_set, std::ostream& out,
               std::ostream& err) {
    const UniaxialCrystal crystal = resolve_crystal(cfg, false);
    const double ratio = d_ratio_set ? cfg.d31_over_d15 : 1.0;
    const std::vector<TableReport> reports = check_all_tables(crystal, ratio);
    const int rc = emit(cfg, out, err, format_reports(reports));
    if (rc != 0) return rc;
    for (const TableReport& report : reports)
        if (!report.pass) return 1;
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    RunConfig cfg;
    SubArgs args;

    CLI::App app{"geometry and intensity of parametric up/down conversion of "
                 "the vacuum in a pumped uniaxial crystal"};
    app.name("pucvsim");
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--crystal", cfg.crystal_name, "crystal name in the registry");
    app.add_option("--pump-nm", cfg.pump_nm, "pump wavelength (nm)");
    app.add_option("--pump-pol", cfg.pump_pol, "pump polarization: o|e")
        ->check(CLI::IsMember({"o", "e"}));
    app.add_option("--process", cfg.process, "puc|pdc")
        ->check(CLI::IsMember({"puc", "pdc"}));
    app.add_option("--plane", cfg.plane, "eq|long")
        ->check(CLI::IsMember({"eq", "long"}));
    app.add_option("--length-um", cfg.length_um, "crystal length override (um)");
    auto* d_ratio_opt =
        app.add_option("--d31-over-d15", cfg.d31_over_d15, "d31/d15 ratio");
    app.add_option("--format", cfg.output_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", cfg.output_path, "output file (default: stdout)");

    auto* sub_index = app.add_subcommand("index", "refractive index lookup");
    sub_index->add_option("--lambda", args.lambda_nm, "wavelength (nm)")
        ->required();
    sub_index->add_option("--pol", args.pol, "o|e")
        ->check(CLI::IsMember({"o", "e"}));
    sub_index->add_option("--psi", args.psi_deg,
                          "angle to the optic axis (deg, extraordinary only)");

    auto* sub_edge =
        app.add_subcommand("edge", "collinear edge of the emission spectrum");

    auto* sub_match =
        app.add_subcommand("match", "solve the matching angles at one wavelength");
    sub_match->add_option("--lambda1", args.lambda1_nm, "signal wavelength (nm)")
        ->required();

    auto* sub_rainbow =
        app.add_subcommand("rainbow", "sweep the emission cone over a range");
    sub_rainbow->add_option("--min", args.min_nm, "range start (nm)")->required();
    sub_rainbow->add_option("--max", args.max_nm, "range end (nm)")->required();
    sub_rainbow->add_option("--step", args.step_nm, "grid step (nm)");

    auto* sub_rates =
        app.add_subcommand("rates", "counting rate of the detectable mode");
    sub_rates->add_option("--lambda1", args.lambda1_nm, "signal wavelength (nm)")
        ->required();
    sub_rates->add_option("--method", args.method, "closed|integral")
        ->check(CLI::IsMember({"closed", "integral"}));

    auto* sub_ratio = app.add_subcommand(
        "ratio-table", "up/down conversion rate ratios on a wavelength grid");
    sub_ratio->add_option("--min", args.grid_min_nm, "grid start (nm)");
    sub_ratio->add_option("--max", args.grid_max_nm, "grid end (nm)");
    sub_ratio->add_option("--step", args.grid_step_nm, "grid step (nm)");

    auto* sub_align = app.add_subcommand(
        "align", "seed-laser geometry for a target signal wavelength");
    sub_align->add_option("--lambda1", args.lambda1_nm, "signal wavelength (nm)")
        ->required();

    auto* sub_tables = app.add_subcommand(
        "paper-tables",
        "recompute the published reference tables and diff against them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const bool d_ratio_set = d_ratio_opt->count() > 0;
    try {
        if (sub_index->parsed()) return cmd_index(cfg, args, d_ratio_set, out, err);
        if (sub_edge->parsed()) return cmd_edge(cfg, d_ratio_set, out, err);
        if (sub_match->parsed()) return cmd_match(cfg, args, d_ratio_set, out, err);
        if (sub_rainbow->parsed())
            return cmd_rainbow(cfg, args, d_ratio_set, out, err);
        if (sub_rates->parsed()) return cmd_rates(cfg, args, d_ratio_set, out, err);
        if (sub_ratio->parsed()) return cmd_ratio_table(cfg, args, out, err);
        if (sub_align->parsed()) return cmd_align(cfg, args, d_ratio_set, out, err);
        if (sub_tables->parsed()) return cmd_tables(cfg, d_ratio_set, out, err);
        err << "error: no subcommand selected\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pucv
