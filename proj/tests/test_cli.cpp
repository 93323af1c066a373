// End-to-end CLI behaviour through the in-process entry point: golden
// outputs, exit codes, formats, and the file/registry plumbing.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pucv/cli.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("pucvsim");
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliRun result;
    result.code =
        pucv::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("index lookup") {
    const CliRun r = run({"index", "--lambda", "500", "--pol", "o"});
    CHECK(r.code == 0);
    CHECK(r.out == "1.677361\n");
    CHECK(r.err.empty());

    const CliRun e = run({"index", "--lambda", "500", "--pol", "e", "--psi", "45"});
    CHECK(e.code == 0);
    CHECK(e.out == "1.613774\n");

    // Out of the dispersion window: domain failure, code 1.
    const CliRun bad = run({"index", "--lambda", "100", "--pol", "o"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(contains(bad.err, "error:"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({"match"}).code == 2);                       // missing --lambda1
    CHECK(run({"frobnicate"}).code == 2);                  // unknown subcommand
    CHECK(run({"edge", "--nope"}).code == 2);              // unknown flag
    CHECK(run({"--crystal", "quartz", "edge"}).code == 2); // unknown crystal
    CHECK(run({"--pump-pol", "x", "edge"}).code == 2);     // bad enum value
    CHECK(run({"--process", "pdc", "--pump-pol", "o", "match", "--lambda1",
               "692"}).code == 2);                         // wrong pump mode
    CHECK(run({}).code == 2);                              // no subcommand
}

TEST_CASE("help exits cleanly") {
    const CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pucvsim"));
    CHECK(contains(r.out, "rainbow"));
}

TEST_CASE("edge golden output") {
    const CliRun r = run({"edge"});
    CHECK(r.code == 0);
    CHECK(r.out == "lambda1_nm,lambda2_nm\n481.07,202.93\n");

    const CliRun j = run({"--format", "json", "edge"});
    CHECK(j.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["lambda1_nm"].get<double>() ==
          doctest::Approx(481.06974048045686).epsilon(1e-9));
    CHECK(doc["lambda2_nm"].get<double>() ==
          doctest::Approx(202.93428626684487).epsilon(1e-9));
}

TEST_CASE("match golden rows") {
    const CliRun eq = run({"match", "--lambda1", "500"});
    CHECK(eq.code == 0);
    CHECK(eq.out ==
          "lambda1_nm,theta1_deg,theta2_deg,phi1_deg,phi2_deg,lambda2_nm,"
          "warning\n"
          "500.00,18.04,7.34,10.64,4.34,206.23,\n");

    const CliRun lng = run({"--plane", "long", "match", "--lambda1", "500"});
    CHECK(lng.code == 0);
    CHECK(contains(lng.out, "500.00,15.37,6.28,9.09,3.71,206.23,"));

    // Below the spectrum edge there is no root: domain failure.
    const CliRun below = run({"match", "--lambda1", "450"});
    CHECK(below.code == 1);
    CHECK(contains(below.err, "spectrum edge"));

    // Down-conversion solve, JSON format, signed partner angles.
    const CliRun pdc =
        run({"--process", "pdc", "--format", "json", "match", "--lambda1", "692"});
    CHECK(pdc.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(pdc.out);
    CHECK(doc["theta1_deg"].get<double>() ==
          doctest::Approx(31.467279475233546).epsilon(1e-9));
    CHECK(doc["theta2_deg"].get<double>() ==
          doctest::Approx(-32.50137239055903).epsilon(1e-9));
    CHECK(doc["lambda2_nm"].get<double>() ==
          doctest::Approx(712.2932551319648).epsilon(1e-9));
}

TEST_CASE("rainbow sweep output") {
    const CliRun r =
        run({"rainbow", "--min", "480", "--max", "600", "--step", "10"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lambda1_nm,theta1_deg_eq,theta1_deg_long,lambda2_nm,warning");
    std::getline(lines, line);
    CHECK(contains(line, "480.00,,,,"));
    CHECK(contains(line, "below the spectrum edge"));

    // JSON agrees with the reference geometry at 600 nm.
    const CliRun j = run({"--format", "json", "rainbow", "--min", "480", "--max",
                          "600", "--step", "10"});
    CHECK(j.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(j.out);
    bool found = false;
    for (const auto& rec : doc) {
        if (!rec["theta1_deg_eq"].is_null() &&
            std::abs(rec["lambda1_nm"].get<double>() - 600.0) < 1e-9) {
            found = true;
            CHECK(rec["theta1_deg_eq"].get<double>() ==
                  doctest::Approx(42.42170233977239).epsilon(1e-9));
            CHECK(rec["theta1_deg_long"].get<double>() ==
                  doctest::Approx(36.94390675501928).epsilon(1e-9));
            CHECK(rec["lambda2_nm"].get<double>() ==
                  doctest::Approx(221.45110410094637).epsilon(1e-9));
        }
    }
    CHECK(found);

    // Whole range below the edge: nothing to report, domain failure.
    CHECK(run({"rainbow", "--min", "400", "--max", "450", "--step", "10"}).code ==
          1);
    // Inverted range is a usage error.
    CHECK(run({"rainbow", "--min", "600", "--max", "500", "--step", "10"}).code ==
          2);
}

TEST_CASE("rates JSON") {
    const CliRun r = run({"rates", "--lambda1", "500"});
    CHECK(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc["lambda1_nm"].get<double>() == doctest::Approx(500.0));
    CHECK(doc["theta1_deg"].get<double>() ==
          doctest::Approx(18.04456368342408).epsilon(1e-9));
    CHECK(doc["rate_arbitrary"].get<double>() ==
          doctest::Approx(0.006240087478631343).epsilon(1e-10));
    CHECK(doc["detectable_mode"].get<std::string>() == "1");
    CHECK(doc["method"].get<std::string>() == "closed_form");
    CHECK(doc["warnings"].empty());

    const CliRun integral =
        run({"rates", "--lambda1", "500", "--method", "integral"});
    CHECK(integral.code == 0);
    const nlohmann::json idoc = nlohmann::json::parse(integral.out);
    CHECK(idoc["method"].get<std::string>() == "integral");
    CHECK(idoc["rate_arbitrary"].get<double>() / 0.006240087478631343 ==
          doctest::Approx(0.9956191005047418).epsilon(1e-5));

    // Near-degenerate geometry: domain failure, code 1.
    CHECK(run({"rates", "--lambda1", "491"}).code == 1);
}

TEST_CASE("ratio table golden rows") {
    const CliRun r = run({"ratio-table"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lambda1_nm,ratio,theta1_deg");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 10);
    CHECK(rows.front() == "482.00,0.003,4.07");
    CHECK(rows[4] == "490.00,0.252,12.50");
    CHECK(rows.back() == "500.00,0.045,18.04");
}

TEST_CASE("alignment golden output") {
    const CliRun r = run({"align", "--lambda1", "500"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "aligner_lambda_nm,aligner_incidence_deg,signal_exit_deg\n"
          "206.23,7.34,18.04\n");
}

TEST_CASE("reference table checks") {
    const CliRun r = run({"paper-tables"});
    CHECK(r.code == 1);  // one published cell is not reproducible
    CHECK(contains(r.out, "TABLE1: PASS"));
    CHECK(contains(r.out, "TABLE2: PASS"));
    CHECK(contains(r.out, "TABLE3: FAIL"));
    CHECK(contains(r.out, "TABLE4: PASS"));
    CHECK(!contains(r.out, "SENSITIVITY"));

    const CliRun s = run({"--d31-over-d15", "0.95", "paper-tables"});
    CHECK(s.code == 1);
    CHECK(contains(s.out, "SENSITIVITY"));
}

TEST_CASE("output is deterministic") {
    const CliRun a = run({"match", "--lambda1", "500"});
    const CliRun b = run({"match", "--lambda1", "500"});
    CHECK(a.out == b.out);
    const CliRun ja = run({"--format", "json", "rainbow", "--min", "490", "--max",
                           "520", "--step", "10"});
    const CliRun jb = run({"--format", "json", "rainbow", "--min", "490", "--max",
                           "520", "--step", "10"});
    CHECK(ja.out == jb.out);
}

TEST_CASE("environment registry and file output") {
    const std::string path = "/tmp/pucvsim_cli_registry.toml";
    {
        std::ofstream file(path);
        file << "[envbbo]\n"
             << "ord.a = 2.7359\nord.b = 0.01878\nord.c = 0.01822\nord.d = "
                "0.01354\n"
             << "ext90.a = 2.3753\next90.b = 0.01224\next90.c = 0.01667\n"
             << "ext90.d = 0.01516\n";
    }
    setenv("PUCVSIM_CRYSTAL_REGISTRY", path.c_str(), 1);
    const CliRun r =
        run({"--crystal", "envbbo", "index", "--lambda", "500", "--pol", "o"});
    unsetenv("PUCVSIM_CRYSTAL_REGISTRY");
    CHECK(r.code == 0);
    CHECK(r.out == "1.677361\n");

    const std::string out_path = "/tmp/pucvsim_cli_edge.csv";
    std::remove(out_path.c_str());
    const CliRun w = run({"--out", out_path, "edge"});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream file(out_path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    CHECK(buffer.str() == "lambda1_nm,lambda2_nm\n481.07,202.93\n");
    std::remove(out_path.c_str());
}
