#include "pucv/sellmeier.hpp"

#include <cmath>
#include <cstdio>

namespace pucv {

namespace {

void check_window(double lambda_um, double lo, double hi) {
    if (!(lambda_um >= lo && lambda_um <= hi)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf),
                      "wavelength %.6g um outside validity window [%.6g, %.6g] um",
                      lambda_um, lo, hi);
        throw OutOfWindow(buf);
    }
}

double index_from(const SellmeierModel& m, double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    const double n2 = m.a + m.b / (l2 - m.c) - m.d * l2;
    if (!(n2 > 1.0)) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "n^2 = %.6g <= 1 at %.6g um", n2, lambda_um);
        throw NonPhysicalIndex(buf);
    }
    return std::sqrt(n2);
}

}  // namespace

double n_ord(const SellmeierModel& model, double lambda_um, double window_min,
             double window_max) {
    check_window(lambda_um, window_min, window_max);
    return index_from(model, lambda_um);
}

double n_ext90(const SellmeierModel& model, double lambda_um, double window_min,
               double window_max) {
    check_window(lambda_um, window_min, window_max);
    return index_from(model, lambda_um);
}

double n_ext(const SellmeierModel& model_ord, const SellmeierModel& model_ext90,
             double lambda_um, double psi_deg, double window_min, double window_max) {
    check_window(lambda_um, window_min, window_max);
    const double no = index_from(model_ord, lambda_um);
    const double ne = index_from(model_ext90, lambda_um);
    const double psi = psi_deg * 3.141592653589793238462643 / 180.0;
    const double cs = std::cos(psi);
    const double sn = std::sin(psi);
    const double inv2 = cs * cs / (no * no) + sn * sn / (ne * ne);
    return 1.0 / std::sqrt(inv2);
}

}  // namespace pucv
