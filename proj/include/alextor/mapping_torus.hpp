#pragma once

// Mapping-torus invariants from the monodromy action F = f* on H^1(S, rho).

#include "alextor/complexes.hpp"

#include <optional>
#include <string>

namespace alextor {

struct QuotientI {
    std::size_t beta = 0;       // dim Ker(F - 1)
    std::size_t i_dim = 0;      // dim I = dim V - beta
    CycloMatrix induced;        // F on I = V / Ker(F - 1)
    CycloMatrix basis;          // columns: kernel basis, then complement
};

/// Throws InputError if F is not square or not invertible.
QuotientI quotient_I(const CycloMatrix& F);

struct Semisimplicity {
    LaurentPoly minimal_polynomial;
    std::vector<LaurentPoly> invariant_factors; // of t I - F
    bool global = false;        // minimal polynomial squarefree
    bool at_one = false;        // (t - 1)^2 divides no invariant factor
};

Semisimplicity semisimplicity(const CycloMatrix& F);

struct MonodromyTorsion {
    std::optional<CycloNumber> det_f_minus_one_on_I; // absent when singular
    std::optional<Real> abs_torsion;                 // |det((F - 1)|_I)|^-1
    bool within_hypothesis = false;                  // F globally semisimple
    std::string note;
};

MonodromyTorsion torsion_from_monodromy(const CycloMatrix& F, unsigned precision_bits = kDefaultPrecisionBits);

/// 1 / det(t I - F).
RatFunc alexander_from_monodromy(const CycloMatrix& F);

struct Theorem35Report {
    Verdict verdict = Verdict::not_applicable;
    std::string reason;
    std::size_t beta = 0;
    int order_astar = 0;
    bool order_equals_minus_beta = false;
    bool strict_inequality = false;  // ord A* < -beta
    bool semisimple_at_one = false;
    bool globally_semisimple = false;
    bool limit_checked = false;
    std::optional<Real> limit;       // lim |(t - 1)^beta A*(t)|
    std::optional<Real> abs_torsion;
    std::optional<Real> relative_error;
};

Theorem35Report theorem35_report(const CycloMatrix& F, bool h0_vanishes,
                                 unsigned precision_bits = kDefaultPrecisionBits, double tolerance = 1e-20);

} // namespace alextor
