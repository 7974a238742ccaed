#pragma once

#include <stdexcept>
#include <string>

namespace alextor {

/// Malformed user input: bad files, unknown generators, shape mismatches.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input is well formed but does not satisfy a theorem's hypothesis
/// (non-torsion homology, singular Kitano minor, missing H^0 vanishing...).
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug or a
/// corrupted input that slipped past validation.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace alextor
