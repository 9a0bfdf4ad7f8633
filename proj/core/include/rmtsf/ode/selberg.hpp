#pragma once

// Differential-difference system for Selberg-type integrals, its reduction to
// a scalar ODE in z, and the bulk scaling limit of that ODE.

#include "rmtsf/algebra/diff_operator.hpp"
#include "rmtsf/algebra/rational_fn.hpp"

#include <map>
#include <vector>

namespace rmtsf::ode {

/// Parameters of the integral family. Coefficients may depend on N.
struct SystemParams {
    int n = 1;
    Poly lambda1;
    Poly lambda2;
    Rational kappa;
    Poly alpha;
    /// Exponent of the (z-1) prefactor; equal to n for the circular case.
    Poly prefactor_exponent;
};

/// Per-p coefficients of the transformed recurrence, p = 0..n, as polynomials in N.
struct RecurrenceCoeffs {
    int n = 0;
    std::vector<Poly> A, B, D, E, A_tilde, B_tilde;

    /// (n-p) E_p, the factor multiplying K_{p+1}.
    Poly closing_factor(int p) const;
};

/// Tridiagonal matrix of the first-order system z(1-z) v' = X v.
struct TridiagonalSystem {
    std::vector<Poly> diagonal;  // A~_p - z B~_p
    std::vector<Poly> super;     // -(n-p) E_p, p = 0..n-1
    std::vector<Poly> sub;       // z D_p, p = 1..n (index p-1)

    int dimension() const { return static_cast<int>(diagonal.size()); }
    /// Dense entry (row, col); zero off the three diagonals.
    Poly entry(int row, int col) const;
};

/// K_p = L_p[K_0] with L_p = scaled[p] / denominators[p]. Both parts are
/// polynomial; the denominators are products of (n-q) E_q and free of z.
struct OperatorChain {
    std::vector<DiffOperator> scaled;
    std::vector<Poly> denominators;

    int length() const { return static_cast<int>(scaled.size()); }
    /// Coefficient of d^j/dz^j in L_p as a rational function.
    RationalFn coefficient(int p, int j) const;
};

/// Circular ensemble: n = beta, lambda1 = lambda2 = 2/beta - 1, kappa = 2/beta,
/// alpha = N - 2. Throws for odd or nonpositive beta.
SystemParams specialize_circular(int beta);

RecurrenceCoeffs build_system(const SystemParams& params);
TridiagonalSystem tridiagonal_system(const RecurrenceCoeffs& rc);

/// delta_z = z(1-z) d/dz.
DiffOperator delta_z();

/// Operators L_0..L_n. Throws std::domain_error naming p when (n-p) E_p vanishes identically.
OperatorChain operator_chain(const RecurrenceCoeffs& rc);

/// Order n+1 operator in z annihilating K_0, normalized.
DiffOperator eliminate(const SystemParams& params);

struct BulkLimitOptions {
    /// Exponential-series truncation; 0 selects max z-degree + order + 2.
    int truncation = 0;
    /// Also compute at truncation + 2 and require equal output.
    bool stability_check = true;
};

/// Leading large-N operator in X after z = exp(2 pi i X / N). Normalized, real.
/// Throws on order collapse, a non-real limit, or truncation instability.
DiffOperator bulk_limit(const DiffOperator& op_z, const BulkLimitOptions& opts = {});

/// Parity structure of a bulk operator: the coefficient of d^j/dX^j has only
/// X-powers congruent to j mod 2 and only even powers of pi.
bool has_bulk_parity(const DiffOperator& op);

/// Transfers an X-side operator to the Fourier variable k, g(k) = int f(X) e^{ikX} dX:
/// X^m D^j maps to (-i d/dk)^m o (-ik)^j. Boundary terms are assumed to vanish.
/// Normalized; throws if the result is not real.
DiffOperator fourier_side(const DiffOperator& op_x);

/// Convenience: bulk_limit(eliminate(specialize_circular(beta))).
DiffOperator circular_bulk_operator(int beta);

}  // namespace rmtsf::ode
