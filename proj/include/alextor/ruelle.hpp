#pragma once

// Predictions for the Ruelle L-function at s = 0 from the topological side,
// and a truncated Euler product over a user-supplied length spectrum.

#include "alextor/laurent.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace alextor {

struct RuellePrediction {
    int order_e = 0;
    Real leading_abs;
    std::string provenance;
};

/// 4 h0 - 2 h1. Throws InputError on negative dimensions.
int predict_order(long h0, long h1);

/// |tau|^2. Throws InputError unless abs_torsion > 0.
Real predict_leading_from_torsion(const Real& abs_torsion);

/// (delta * |A*(1)|)^2. Throws InputError unless both inputs are positive.
Real predict_R0_from_alexander(const Real& delta_abs, const Real& a_at_one_abs);

struct SpectrumEntry {
    Real length;
    long multiplicity = 1;
    LaurentPoly holonomy_charpoly; // det(t I - rho(gamma)), monic of degree m
    std::size_t line = 0;
};

struct LengthSpectrum {
    unsigned cyclotomic_order = 1;
    std::size_t dimension = 0;     // m
    std::vector<SpectrumEntry> entries;
};

/// CSV rows `length,multiplicity,holonomy` where holonomy is `charpoly:<poly in t>`
/// or `matrix:<row>;<row>...` with comma-separated entries (quote the field).
/// `# cyclotomic_order = n` sets the coefficient field; other `#` lines are comments.
LengthSpectrum parse_spectrum_csv(std::string_view text, const std::string& source,
                                  unsigned precision_bits = kDefaultPrecisionBits);
LengthSpectrum load_spectrum(const std::string& path, unsigned precision_bits = kDefaultPrecisionBits);

struct TruncatedValue {
    Complex value;
    std::size_t terms_used = 0;
    Real last_factor_deviation; // |factor - 1| of the last included entry
};

/// Product of det(1 - rho(gamma) e^{-s l})^mult over entries with l <= max_length.
/// Throws InputError when no entry survives the cutoff.
TruncatedValue evaluate_truncated(const LengthSpectrum& spec, const Complex& s, const Real& max_length,
                                  unsigned precision_bits = kDefaultPrecisionBits);

} // namespace alextor
