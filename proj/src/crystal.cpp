#include "pucv/crystal.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pucv/errors.hpp"

namespace pucv {

UniaxialCrystal bbo_preset() {
    UniaxialCrystal c;
    c.name = "bbo";
    c.ord = SellmeierModel{2.7359, 0.01878, 0.01822, 0.01354};
    c.ext90 = SellmeierModel{2.3753, 0.01224, 0.01667, 0.01516};
    c.cut_angle_deg = 90.0;
    c.length_l_um = 5000.0;
    c.d15 = 1e-7;
    c.d31 = 1e-7;
    c.transparency_min_um = 0.189;
    c.window_min_um = 0.17;
    c.window_max_um = 3.5;
    return c;
}

double crystal_n_ord(const UniaxialCrystal& c, double lambda_um) {
    return n_ord(c.ord, lambda_um, c.window_min_um, c.window_max_um);
}

double crystal_n_ext90(const UniaxialCrystal& c, double lambda_um) {
    return n_ext90(c.ext90, lambda_um, c.window_min_um, c.window_max_um);
}

double crystal_n_ext(const UniaxialCrystal& c, double lambda_um, double psi_deg) {
    return n_ext(c.ord, c.ext90, lambda_um, psi_deg, c.window_min_um, c.window_max_um);
}

CrystalRegistry CrystalRegistry::builtin() {
    CrystalRegistry reg;
    const UniaxialCrystal bbo = bbo_preset();
    reg.crystals_[bbo.name] = bbo;
    return reg;
}

bool CrystalRegistry::contains(const std::string& name) const {
    return crystals_.count(name) != 0;
}

const UniaxialCrystal& CrystalRegistry::get(const std::string& name) const {
    auto it = crystals_.find(name);
    if (it == crystals_.end())
        throw UsageError("unknown crystal '" + name + "'");
    return it->second;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, const std::string& context, int line_no) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != value.size()) {
        std::ostringstream msg;
        msg << "registry line " << line_no << ": bad number '" << value << "' for "
            << context;
        throw RegistryParseError(msg.str());
    }
    return out;
}

void apply_key(UniaxialCrystal& c, const std::string& key, double v, int line_no) {
    if (key == "ord.a") c.ord.a = v;
    else if (key == "ord.b") c.ord.b = v;
    else if (key == "ord.c") c.ord.c = v;
    else if (key == "ord.d") c.ord.d = v;
    else if (key == "ext90.a") c.ext90.a = v;
    else if (key == "ext90.b") c.ext90.b = v;
    else if (key == "ext90.c") c.ext90.c = v;
    else if (key == "ext90.d") c.ext90.d = v;
    else if (key == "cut_angle") c.cut_angle_deg = v;
    else if (key == "length_um") c.length_l_um = v;
    else if (key == "d15") c.d15 = v;
    else if (key == "d31") c.d31 = v;
    else if (key == "transparency_min") c.transparency_min_um = v;
    else if (key == "window_min") c.window_min_um = v;
    else if (key == "window_max") c.window_max_um = v;
    else {
        std::ostringstream msg;
        msg << "registry line " << line_no << ": unknown key '" << key << "'";
        throw RegistryParseError(msg.str());
    }
}

void validate(const UniaxialCrystal& c) {
    if (!(c.length_l_um > 0.0 && c.d15 > 0.0 && c.d31 > 0.0 &&
          c.transparency_min_um > 0.0 && c.window_min_um > 0.0 &&
          c.window_max_um > c.window_min_um)) {
        throw RegistryParseError("crystal '" + c.name +
                                 "': lengths, coefficients and window must be positive");
    }
    if (c.ord.c >= c.window_min_um * c.window_min_um) {
        throw RegistryParseError("crystal '" + c.name +
                                 "': dispersion pole inside the validity window");
    }
}

}  // namespace

void CrystalRegistry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryParseError("cannot open registry file '" + path + "'");

    UniaxialCrystal current;
    bool have_section = false;
    int line_no = 0;
    std::string raw;
    auto flush = [&]() {
        if (have_section) {
            validate(current);
            crystals_[current.name] = current;
        }
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                std::ostringstream msg;
                msg << "registry line " << line_no << ": unterminated section header";
                throw RegistryParseError(msg.str());
            }
            flush();
            current = UniaxialCrystal{};
            current.name = trim(line.substr(1, line.size() - 2));
            if (current.name.empty()) {
                std::ostringstream msg;
                msg << "registry line " << line_no << ": empty crystal name";
                throw RegistryParseError(msg.str());
            }
            have_section = true;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || !have_section) {
            std::ostringstream msg;
            msg << "registry line " << line_no << ": expected 'key = value'"
                << (have_section ? "" : " inside a [section]");
            throw RegistryParseError(msg.str());
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        apply_key(current, key, parse_number(value, key, line_no), line_no);
    }
    flush();
}

CrystalRegistry load_registry_from_env() {
    CrystalRegistry reg = CrystalRegistry::builtin();
    if (const char* path = std::getenv("PUCVSIM_CRYSTAL_REGISTRY"); path && *path)
        reg.load_file(path);
    return reg;
}

}  // namespace pucv
