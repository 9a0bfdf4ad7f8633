#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace rmtsf::gue {

enum class QuadratureScheme { GaussKronrod, TanhSinh };

struct AccuracyPolicy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    QuadratureScheme scheme = QuadratureScheme::GaussKronrod;
    /// Recompute with the other scheme and fold the disagreement into the error.
    bool cross_check = true;
    /// Maximum bisection depth of the adaptive scheme.
    unsigned max_depth = 18;
    /// When positive, [a, b] is split into panels no longer than this before
    /// integrating; needed for long oscillatory ranges.
    double panel_width = 0.0;
    /// Working precision in bits (informational: evaluation is in double).
    int precision_bits = 53;

    double tolerance(double magnitude) const;
};

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

struct ComplexEstimate {
    std::complex<double> value;
    double error = 0.0;
    bool converged = true;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, Estimate e) : std::runtime_error(what), estimate(e) {}
    Estimate estimate;
};

Estimate integrate(const std::function<double(double)>& f, double a, double b, const AccuracyPolicy& policy = {});

/// Integral of a complex function of a real variable.
ComplexEstimate integrate_complex(const std::function<std::complex<double>(double)>& f, double a, double b,
                          const AccuracyPolicy& policy = {});

/// Straight-line contour integral from 0 to z.
ComplexEstimate integrate_segment(const std::function<std::complex<double>(std::complex<double>)>& f,
                                  std::complex<double> z, const AccuracyPolicy& policy = {});

/// Throws QuadratureError when the estimate did not converge.
Estimate require(const Estimate& e, const char* what);

}  // namespace rmtsf::gue
