#pragma once

// Closed forms of the bulk two-point function rho_(2)(X, 0) for beta = 1, 2, 4
// and residuals of the bulk-limit operators applied to them.

#include "rmtsf/algebra/diff_operator.hpp"
#include "rmtsf/gue/jet.hpp"

namespace rmtsf::gue {

/// rho_(2)(X, 0) at beta in {1, 2, 4}. X = 0 is a regular point; the beta = 1
/// form requires X >= 0. Throws for other beta.
double rho2_closed(int beta, double x);
/// Taylor jet of rho2_closed about x.
Jet rho2_jet(int beta, double x, std::size_t order);

/// R(X) = rho_(2)(2X, 0) at beta = 1, written in terms of the beta = 4 building blocks.
Jet beta1_companion_jet(double x, std::size_t order);

/// Jet of the small-k closed form of S(k; beta) for beta in {2, 4}, valid for
/// 0 < k < 4 pi with k != 2 pi (beta = 4) or 0 < k < 2 pi (beta = 2).
Jet structure_function_jet(int beta, double k, std::size_t order);

struct OdeResidual {
    double absolute = 0.0;
    /// absolute / sum_j |p_j(X) f^{(j)}(X)|
    double relative = 0.0;
};

/// sum_j p_j(x) f^{(j)}(x) for an operator in one variable with pi set to its numeric
/// value; f is the jet of the candidate solution about x.
OdeResidual ode_residual(const DiffOperator& op, double x, const Jet& f);

}  // namespace rmtsf::gue
