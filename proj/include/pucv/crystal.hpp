// Uniaxial crystal description plus a name-keyed registry with a built-in
// BBO preset and an optional plain-text registry file.
#pragma once

#include <map>
#include <string>

#include "pucv/sellmeier.hpp"

namespace pucv {

struct UniaxialCrystal {
    std::string name;
    SellmeierModel ord;
    SellmeierModel ext90;
    double cut_angle_deg = 90.0;      // optic axis to face normal; 90 = axis in the face
    double length_l_um = 5000.0;
    double d15 = 1e-7;                // nonlinear coefficients, arbitrary units
    double d31 = 1e-7;
    double transparency_min_um = 0.189;
    double window_min_um = 0.17;      // hard validity window of the dispersion fit
    double window_max_um = 3.5;
};

// Built-in beta barium borate preset (negative uniaxial, 90-degree cut).
UniaxialCrystal bbo_preset();

// Window-validated index evaluations on a crystal.
double crystal_n_ord(const UniaxialCrystal& c, double lambda_um);
double crystal_n_ext90(const UniaxialCrystal& c, double lambda_um);
double crystal_n_ext(const UniaxialCrystal& c, double lambda_um, double psi_deg);

class CrystalRegistry {
  public:
    // Registry with only the built-in presets.
    static CrystalRegistry builtin();

    // Parses a registry file and merges its crystals over the current set.
    // Format: one `[name]` section per crystal; keys `ord.a`..`ord.d`,
    // `ext90.a`..`ext90.d`, `cut_angle`, `length_um`, `d15`, `d31`,
    // `transparency_min`, and optional `window_min`, `window_max`.
    void load_file(const std::string& path);

    const UniaxialCrystal& get(const std::string& name) const;
    bool contains(const std::string& name) const;

  private:
    std::map<std::string, UniaxialCrystal> crystals_;
};

// builtin() plus the file named by PUCVSIM_CRYSTAL_REGISTRY, if set.
CrystalRegistry load_registry_from_env();

}  // namespace pucv
