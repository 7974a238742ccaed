#pragma once

// Thin RAII layer over MPFR. Every value carries its own precision; binary
// operations produce a result at the larger of the two operand precisions.

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

namespace alextor {

inline constexpr unsigned kDefaultPrecisionBits = 128;

class Real {
public:
    explicit Real(unsigned precision_bits = kDefaultPrecisionBits);
    Real(double v, unsigned precision_bits);
    Real(long v, unsigned precision_bits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_string(std::string_view text, unsigned precision_bits);
    static Real pi(unsigned precision_bits);

    unsigned precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }
    Real with_precision(unsigned precision_bits) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }

    /// Scientific notation with `digits` significant decimal digits.
    std::string to_string(int digits = 0) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real cos(const Real& x);
Real sin(const Real& x);
Real pow(const Real& x, long n);
Real hypot(const Real& a, const Real& b);

/// |a - b| / max(|a|, |b|); zero when both vanish.
Real relative_difference(const Real& a, const Real& b);

struct Complex {
    Real re;
    Real im;

    explicit Complex(unsigned precision_bits = kDefaultPrecisionBits)
        : re(precision_bits), im(precision_bits) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    unsigned precision() const { return re.precision(); }

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);

    Real modulus() const { return hypot(re, im); }
    std::string to_string(int digits = 0) const;
};

/// e^{i theta}
Complex unit_phase(const Real& theta);
Complex complex_exp(const Complex& z);
Complex complex_pow(const Complex& z, long n);

} // namespace alextor
