#include "rmtsf/gue/special_functions.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_airy.h>
#include <gsl/gsl_sf_bessel.h>
#include <gsl/gsl_sf_erf.h>
#include <gsl/gsl_sf_expint.h>
#include <gsl/gsl_sf_gamma.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace rmtsf::gue::sf {

namespace {

void init_gsl() {
    static std::once_flag flag;
    std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

template <class F>
double checked(const char* name, double x, F f) {
    init_gsl();
    if (!std::isfinite(x)) throw std::domain_error(std::string(name) + ": non-finite argument");
    gsl_sf_result r;
    const int status = f(x, &r);
    if (status != GSL_SUCCESS) {
        throw std::domain_error(std::string(name) + ": " + gsl_strerror(status) + " at x = " + std::to_string(x));
    }
    return r.val;
}

}  // namespace

double bessel_j0(double x) { return checked("bessel_j0", x, gsl_sf_bessel_J0_e); }
double bessel_j1(double x) { return checked("bessel_j1", x, gsl_sf_bessel_J1_e); }

double airy_ai(double x) {
    return checked("airy_ai", x, [](double v, gsl_sf_result* r) { return gsl_sf_airy_Ai_e(v, GSL_PREC_DOUBLE, r); });
}

double airy_ai_prime(double x) {
    return checked("airy_ai_prime", x, [](double v, gsl_sf_result* r) { return gsl_sf_airy_Ai_deriv_e(v, GSL_PREC_DOUBLE, r); });
}

double erf(double x) { return checked("erf", x, gsl_sf_erf_e); }
double sine_integral(double x) { return checked("sine_integral", x, gsl_sf_Si_e); }
double gamma(double x) { return checked("gamma", x, gsl_sf_gamma_e); }
double lgamma(double x) { return checked("lgamma", x, gsl_sf_lngamma_e); }

}  // namespace rmtsf::gue::sf
