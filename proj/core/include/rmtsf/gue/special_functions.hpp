#pragma once

// Thin checked wrappers over GSL special functions. Each throws
// std::domain_error on non-finite input or when GSL reports an error.

namespace rmtsf::gue::sf {

double bessel_j0(double x);
double bessel_j1(double x);
double airy_ai(double x);
double airy_ai_prime(double x);
double erf(double x);
/// Sine integral Si(x) = int_0^x sin(t)/t dt.
double sine_integral(double x);
double gamma(double x);
double lgamma(double x);

}  // namespace rmtsf::gue::sf
