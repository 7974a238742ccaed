#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element of order n is stored by its coordinates in the power basis
// 1, z, ..., z^{phi(n)-1} of Q[z]/(Phi_n(z)). Elements of different orders
// interoperate by lifting both to Q(zeta_lcm) via zeta_n = zeta_N^{N/n}.

#include "alextor/numeric.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace alextor {

using Rational = mpq_class;
using Integer = mpz_class;

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
/// Cached; safe to call concurrently.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

/// Euler phi(n) == deg Phi_n.
unsigned euler_phi(unsigned n);

class CycloNumber {
public:
    CycloNumber();
    CycloNumber(long value);  // NOLINT: implicit by design of the arithmetic
    CycloNumber(Rational value); // NOLINT

    /// zeta_n^power.
    static CycloNumber zeta(unsigned n, long power = 1);
    /// Coordinates in the power basis mod Phi_n; longer inputs are reduced.
    static CycloNumber from_coords(unsigned n, std::vector<Rational> coords);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    /// Same element in Q(zeta_N); N must be a multiple of order().
    CycloNumber lifted(unsigned N) const;
    /// The element rewritten in Q(zeta_n) if it lies in that subfield.
    std::optional<CycloNumber> projected(unsigned n) const;
    /// Rewritten in the smallest order dividing order() that contains it,
    /// among {1, order()}. Rationals collapse to order 1.
    CycloNumber simplified() const;

    CycloNumber conjugate() const;
    CycloNumber inverse() const;

    /// Embedding zeta_n -> exp(2 pi i / n), each component within 2^(1-bits).
    Complex embed(unsigned precision_bits = kDefaultPrecisionBits) const;

    /// e.g. "1/2 + 1/2*z^2"; the literal syntax accepted by the parser.
    std::string to_string() const;

    CycloNumber& operator+=(const CycloNumber& b);
    CycloNumber& operator-=(const CycloNumber& b);
    CycloNumber& operator*=(const CycloNumber& b);
    CycloNumber& operator/=(const CycloNumber& b);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
    friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
    friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
    CycloNumber operator-() const;

    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

private:
    CycloNumber(unsigned n, std::vector<Rational> coords, bool reduced);

    unsigned order_;
    std::vector<Rational> coords_;
};

enum class CycloOp { add, sub, mul, div };

/// Dispatch form of the four field operations; div by zero throws.
CycloNumber cyclo_arith(const CycloNumber& a, const CycloNumber& b, CycloOp op);

inline CycloNumber conjugate(const CycloNumber& a) { return a.conjugate(); }
inline Complex embed_numeric(const CycloNumber& a, unsigned precision_bits) { return a.embed(precision_bits); }

unsigned lcm_order(unsigned a, unsigned b);

} // namespace alextor
