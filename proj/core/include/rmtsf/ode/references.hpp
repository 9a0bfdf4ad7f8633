#pragma once

// Reference bulk operators used by the consistency checks. Coefficients are
// listed lowest derivative first as polynomial strings.

#include "rmtsf/algebra/diff_operator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmtsf::ode {

/// A coefficient whose recorded value is known to be a misprint.
struct Erratum {
    int derivative;
    std::string recorded;
    std::string corrected;
    std::string reason;
};

struct ReferenceOperator {
    std::string name;
    int beta;
    bool fourier;
    Var variable;
    /// Coefficient strings by derivative order; empty strings are unlisted
    /// orders of a partial reference.
    std::vector<std::string> coefficients;
    bool partial = false;
    std::vector<Erratum> errata;

    /// The operator with errata applied (unlisted orders are zero).
    DiffOperator op() const;
    /// The operator exactly as recorded, misprints included.
    DiffOperator as_recorded() const;
    std::vector<int> listed_orders() const;
};

const std::vector<ReferenceOperator>& reference_operators();
std::optional<ReferenceOperator> find_reference(int beta, bool fourier);

struct ReferenceCheck {
    std::string name;
    bool match = false;
    /// Whether the recorded (uncorrected) form also matches.
    bool matches_recorded = false;
    std::vector<std::string> mismatches;
};

/// Compares a derived operator with a reference up to an overall scalar. For
/// partial references only the listed orders are compared, after scaling so
/// the top coefficients agree.
ReferenceCheck check_against_reference(const DiffOperator& derived, const ReferenceOperator& ref);

}  // namespace rmtsf::ode
