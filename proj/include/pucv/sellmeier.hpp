// Sellmeier dispersion: n^2(lambda) = a + b/(lambda^2 - c) - d*lambda^2,
// lambda in micrometres, plus the angle-dependent extraordinary index of a
// uniaxial crystal.
#pragma once

#include "pucv/errors.hpp"

namespace pucv {

struct SellmeierModel {
    double a = 0.0;  // dimensionless
    double b = 0.0;  // um^2
    double c = 0.0;  // um^2
    double d = 0.0;  // um^-2
};

// Ordinary index at lambda (um). Throws OutOfWindow outside
// [window_min, window_max], NonPhysicalIndex if n^2 <= 1.
double n_ord(const SellmeierModel& model, double lambda_um,
             double window_min = 0.17, double window_max = 3.5);

// Principal extraordinary index (wave normal perpendicular to the optic
// axis); same evaluation with the ext90 coefficient set.
double n_ext90(const SellmeierModel& model, double lambda_um,
               double window_min = 0.17, double window_max = 3.5);

// Extraordinary index for a wave normal at angle psi (degrees) from the
// optic axis: 1/n^2 = cos^2(psi)/n_ord^2 + sin^2(psi)/n_ext90^2.
double n_ext(const SellmeierModel& model_ord, const SellmeierModel& model_ext90,
             double lambda_um, double psi_deg, double window_min = 0.17,
             double window_max = 3.5);

}  // namespace pucv
