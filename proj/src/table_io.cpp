#include "pucv/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pucv {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

const char* mode_name(DetectableMode mode) {
    switch (mode) {
        case DetectableMode::Mode1: return "1";
        case DetectableMode::Mode2: return "2";
        case DetectableMode::Both: return "both";
    }
    return "?";
}

const char* method_name(RateMethod method) {
    return method == RateMethod::Integral ? "integral" : "closed_form";
}

}  // namespace

std::string fmt_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

std::string fmt_full(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<SweepRow> merge_sweeps(const SweepResult& eq, const SweepResult& lng) {
    // Key wavelengths by a fixed sub-picometre quantization so grid points
    // produced by the two sweeps coincide exactly.
    const auto key_of = [](double lambda_um) {
        return static_cast<long long>(std::llround(lambda_um * 1e7));
    };
    std::map<long long, SweepRow> merged;

    for (const MatchSolution& s : eq.solutions) {
        SweepRow& row = merged[key_of(s.lambda1_um)];
        row.lambda1_um = s.lambda1_um;
        row.has_eq = true;
        row.theta1_eq_deg = s.theta1_deg;
        row.lambda2_um = s.lambda2_um;
        if (s.below_transparency)
            row.warnings.push_back("partner_below_transparency");
    }
    for (const MatchSolution& s : lng.solutions) {
        SweepRow& row = merged[key_of(s.lambda1_um)];
        row.lambda1_um = s.lambda1_um;
        row.has_long = true;
        row.theta1_long_deg = s.theta1_deg;
        if (!row.has_eq) {
            row.lambda2_um = s.lambda2_um;
            if (s.below_transparency)
                row.warnings.push_back("partner_below_transparency");
        }
    }
    for (const SweepNote& note : eq.notes) {
        SweepRow& row = merged[key_of(note.lambda1_um)];
        row.lambda1_um = note.lambda1_um;
        row.warnings.push_back("eq:" + note.note);
    }
    for (const SweepNote& note : lng.notes) {
        SweepRow& row = merged[key_of(note.lambda1_um)];
        row.lambda1_um = note.lambda1_um;
        row.warnings.push_back("long:" + note.note);
    }

    std::vector<SweepRow> rows;
    rows.reserve(merged.size());
    for (auto& [key, row] : merged) {
        (void)key;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "lambda1_nm,theta1_deg_eq,theta1_deg_long,lambda2_nm,warning\n";
    for (const SweepRow& row : rows) {
        out += fmt_fixed(row.lambda1_um * 1000.0, 2);
        out += ',';
        if (row.has_eq) out += fmt_fixed(row.theta1_eq_deg, 2);
        out += ',';
        if (row.has_long) out += fmt_fixed(row.theta1_long_deg, 2);
        out += ',';
        if (row.has_eq || row.has_long) out += fmt_fixed(row.lambda2_um * 1000.0, 2);
        out += ',';
        out += join(row.warnings, ";");
        out += '\n';
    }
    return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    json arr = json::array();
    for (const SweepRow& row : rows) {
        json rec;
        rec["lambda1_nm"] = row.lambda1_um * 1000.0;
        rec["theta1_deg_eq"] = row.has_eq ? json(row.theta1_eq_deg) : json(nullptr);
        rec["theta1_deg_long"] =
            row.has_long ? json(row.theta1_long_deg) : json(nullptr);
        rec["lambda2_nm"] = (row.has_eq || row.has_long)
                                ? json(row.lambda2_um * 1000.0)
                                : json(nullptr);
        rec["warning"] = row.warnings;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

std::string rate_json(double lambda1_nm, double theta1_deg, double rate,
                      DetectableMode mode, RateMethod method,
                      const std::vector<std::string>& warnings) {
    json rec;
    rec["lambda1_nm"] = lambda1_nm;
    rec["theta1_deg"] = theta1_deg;
    rec["rate_arbitrary"] = rate;
    rec["detectable_mode"] = mode_name(mode);
    rec["method"] = method_name(method);
    rec["warnings"] = warnings;
    return rec.dump(2) + "\n";
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
    std::string out = "lambda1_nm,ratio,theta1_deg\n";
    for (const RatioRow& row : rows) {
        out += fmt_fixed(row.lambda1_nm, 2);
        out += ',';
        out += fmt_fixed(row.ratio, 3);
        out += ',';
        out += fmt_fixed(row.theta1_deg, 2);
        out += '\n';
    }
    return out;
}

std::string ratio_json(const std::vector<RatioRow>& rows) {
    json arr = json::array();
    for (const RatioRow& row : rows) {
        json rec;
        rec["lambda1_nm"] = row.lambda1_nm;
        rec["ratio"] = row.ratio;
        rec["theta1_deg"] = row.theta1_deg;
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

}  // namespace pucv
