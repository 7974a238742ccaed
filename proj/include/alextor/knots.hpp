#pragma once

// Twisted chain complex of a knot exterior from a deficiency-one
// presentation, Kitano's determinant formula, and the duality checks.
//
// The complex is stored in column convention: d_2 is (k m) x ((k-1) m) with
// block (i, j) = Phi(d r_j / d x_i)^T and d_1 is m x (k m) with block
// i = Phi(x_i - 1)^T. This is the transpose of the row-vector convention, so
// every determinant agrees with it.

#include "alextor/complexes.hpp"
#include "alextor/foxcalc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace alextor {

struct TwistedComplex {
    BasedComplex complex;
    std::string presentation;
    std::string representation;
    std::size_t generators = 0;
    std::size_t dimension = 0;
};

/// Validates rho and eps first; d_1 d_2 = 0 is checked on construction.
TwistedComplex build_twisted_complex(const Presentation& p, const Representation& rho, const Augmentation& eps);

struct KitanoResult {
    std::size_t column = 0;        // 0-based generator index
    LaurentPoly numerator;         // det A_j
    LaurentPoly denominator;       // det Phi(x_j - 1)
    RatFunc value;
    UnitNormalized normalized;
};

/// det A_j / det Phi(x_j - 1), A_j = d_2 without block-row j. Throws
/// HypothesisError naming the singular factor.
KitanoResult twisted_alexander(const Presentation& p, const Representation& rho, const Augmentation& eps,
                               std::size_t column);

struct ColumnEntry {
    std::size_t column = 0;
    bool admissible = false;
    std::string reason;
    std::optional<UnitClass> unit_to_first; // value_j = unit * value_first
};

struct ColumnCheck {
    bool all_equal = true;
    std::vector<ColumnEntry> columns;
};

ColumnCheck column_independence_check(const Presentation& p, const Representation& rho, const Augmentation& eps);

struct Theorem41Check {
    Verdict verdict = Verdict::not_applicable;
    std::string reason;
    RatFunc dual_torsion;
    RatFunc inverse_alexander;
    std::optional<UnitClass> unit;          // dual_torsion = unit * inverse_alexander
};

/// Torsion of the Hom-dual of the twisted complex against 1 / Delta.
Theorem41Check theorem41_check(const Presentation& p, const Representation& rho, const Augmentation& eps);

struct Corollary41Report {
    Verdict verdict = Verdict::not_applicable;
    std::string reason;
    std::string grading_note;
    std::optional<int> order_delta;         // ord_{t=1} Delta
    std::optional<int> minus_order_astar;   // -ord_{t=1} A*
    std::optional<std::size_t> dim_h1;      // dim H^1(X, rho)
    bool inequality = false;                // ord Delta >= dim H^1
    bool semisimple_at_one = false;
    bool equality = false;
    bool equality_matches_semisimplicity = false;
    bool all_cohomology_vanishes = false;
    std::optional<Real> abs_torsion;        // |tau*_C(X, rho)|
    std::optional<Real> inverse_abs_delta_at_one;
    std::optional<Real> relative_error;
};

/// c is the chain-graded twisted complex (or any chain complex of a
/// 3-dimensional exterior); delta is the twisted Alexander polynomial when
/// known, otherwise the inverse chain torsion is used.
Corollary41Report corollary41_report(const BasedComplex& c, const std::optional<RatFunc>& delta,
                                     unsigned precision_bits = kDefaultPrecisionBits);

} // namespace alextor
