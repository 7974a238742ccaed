#pragma once

// Laurent polynomials over a cyclotomic field, K[t, t^-1], and the fraction
// field K(t). Units of K[t, t^-1] are exactly c*t^k with c != 0.

#include "alextor/scalars.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace alextor {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(CycloNumber c); // NOLINT: constants embed implicitly
    LaurentPoly(long c);        // NOLINT

    /// coeffs[i] is the coefficient of t^(min_exp + i); trimmed on construction.
    static LaurentPoly from_coeffs(int min_exp, std::vector<CycloNumber> coeffs);
    static LaurentPoly monomial(CycloNumber c, int exponent);
    static LaurentPoly t() { return monomial(CycloNumber(1L), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Nonzero single term c*t^k.
    bool is_unit() const { return coeffs_.size() == 1; }
    bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && min_exp_ == 0); }

    int min_exp() const { return min_exp_; }
    int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
    /// max_exp - min_exp; -1 for zero. For polynomials with min_exp 0 this is the degree.
    int span() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<CycloNumber>& coeffs() const { return coeffs_; }
    CycloNumber coeff(int exponent) const;
    const CycloNumber& leading() const { return coeffs_.back(); }
    const CycloNumber& trailing() const { return coeffs_.front(); }

    /// Common cyclotomic order of all coefficients (1 for zero / rational).
    unsigned cyclotomic_order() const;

    LaurentPoly shifted(int k) const;
    /// Multiplied by t^-min_exp, so min_exp becomes 0 and t does not divide it.
    LaurentPoly stripped() const { return shifted(-min_exp_); }
    LaurentPoly conjugated() const;
    /// Divided by its leading coefficient.
    LaurentPoly monic() const;
    /// Formal derivative d/dt.
    LaurentPoly derivative() const;

    CycloNumber evaluate(const CycloNumber& x) const;
    Complex evaluate_numeric(const Complex& x) const;

    LaurentPoly& operator+=(const LaurentPoly& b);
    LaurentPoly& operator-=(const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& b);
    LaurentPoly& operator*=(const CycloNumber& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const CycloNumber& c) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();

    int min_exp_ = 0;
    std::vector<CycloNumber> coeffs_;
};

/// Division with remainder in K[t]; both arguments need min_exp >= 0.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a in K[t, t^-1]; throws InvariantViolation otherwise.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// b divides a in K[t, t^-1].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Monic gcd in K[t] of the t-stripped arguments; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// The polynomial t - 1.
LaurentPoly t_minus_one();

class RatFunc {
public:
    RatFunc() : num_(), den_(1L) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1L) {} // NOLINT
    RatFunc(CycloNumber c) : num_(std::move(c)), den_(1L) {}  // NOLINT
    RatFunc(long c) : num_(c), den_(1L) {}                   // NOLINT
    RatFunc(LaurentPoly num, LaurentPoly den);

    /// Numerator carries every power of t; denominator has min_exp 0, a nonzero
    /// constant term and leading coefficient 1; gcd(num, den) = 1.
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_unit() const { return num_.is_unit() && den_ == LaurentPoly(1L); }
    bool is_laurent() const { return den_ == LaurentPoly(1L); }

    RatFunc inverse() const;
    RatFunc conjugated() const;

    /// Value at a point where the denominator does not vanish.
    std::optional<CycloNumber> evaluate(const CycloNumber& x) const;

    RatFunc& operator+=(const RatFunc& b);
    RatFunc& operator-=(const RatFunc& b);
    RatFunc& operator*=(const RatFunc& b);
    RatFunc& operator/=(const RatFunc& b);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Multiplicity of (t - 1): zeros positive, poles negative. Throws on zero.
int order_at_one(const RatFunc& f);

/// Value of (t-1)^(-order) * f at t = 1.
CycloNumber leading_at_one(const RatFunc& f);

/// f = coefficient * t^exponent * canonical.
struct UnitClass {
    int exponent = 0;
    CycloNumber coefficient = CycloNumber(1L);
};

struct UnitNormalized {
    RatFunc canonical;
    UnitClass unit;
};

/// Canonical representative: numerator and denominator both monic with min_exp 0.
UnitNormalized unit_normalize(const RatFunc& f);

/// The unit u with a = u * b, if a/b is a unit.
std::optional<UnitClass> unit_ratio(const RatFunc& a, const RatFunc& b);

inline bool unit_equal(const RatFunc& a, const RatFunc& b) { return unit_ratio(a, b).has_value(); }

} // namespace alextor
