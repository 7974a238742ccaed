#include "alextor/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace alextor {

namespace {

unsigned max_prec(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

} // namespace

Real::Real(unsigned precision_bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_zero(value_, 1);
}

Real::Real(double v, unsigned precision_bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(long v, unsigned precision_bits)
{
    mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    // MPFR has no move; swap with a minimal-precision placeholder.
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::from_string(std::string_view text, unsigned precision_bits)
{
    Real r(precision_bits);
    std::string s(text);
    if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a real number: '" + s + "'");
    return r;
}

Real Real::pi(unsigned precision_bits)
{
    Real r(precision_bits);
    mpfr_const_pi(r.value_, MPFR_RNDN);
    return r;
}

Real Real::with_precision(unsigned precision_bits) const
{
    Real r(precision_bits);
    mpfr_set(r.value_, value_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const
{
    if (digits <= 0) digits = std::max(17, static_cast<int>(precision() * 0.30103));
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, "%.*Rg", digits, value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

Real operator+(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real Real::operator-() const
{
    Real r(precision());
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

#define ALEXTOR_UNARY(name, fn)                          \
    Real name(const Real& x)                             \
    {                                                    \
        Real r(x.precision());                           \
        fn(r.get(), x.get(), MPFR_RNDN);                 \
        return r;                                        \
    }

ALEXTOR_UNARY(abs, mpfr_abs)
ALEXTOR_UNARY(sqrt, mpfr_sqrt)
ALEXTOR_UNARY(exp, mpfr_exp)
ALEXTOR_UNARY(log, mpfr_log)
ALEXTOR_UNARY(cos, mpfr_cos)
ALEXTOR_UNARY(sin, mpfr_sin)

#undef ALEXTOR_UNARY

Real pow(const Real& x, long n)
{
    Real r(x.precision());
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

Real hypot(const Real& a, const Real& b)
{
    Real r(max_prec(a, b));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real relative_difference(const Real& a, const Real& b)
{
    Real scale = abs(a) < abs(b) ? abs(b) : abs(a);
    Real diff = abs(a - b);
    if (scale.is_zero()) return diff;
    return diff / scale;
}

Complex operator/(const Complex& a, const Complex& b)
{
    Real den = b.re * b.re + b.im * b.im;
    if (den.is_zero()) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

std::string Complex::to_string(int digits) const
{
    std::string out = re.to_string(digits);
    if (im.sign() < 0)
        out += " - " + abs(im).to_string(digits) + "i";
    else
        out += " + " + im.to_string(digits) + "i";
    return out;
}

Complex unit_phase(const Real& theta)
{
    Real s(theta.precision()), c(theta.precision());
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

Complex complex_exp(const Complex& z)
{
    Real mag = exp(z.re);
    Complex phase = unit_phase(z.im);
    return {mag * phase.re, mag * phase.im};
}

Complex complex_pow(const Complex& z, long n)
{
    Complex base = z;
    if (n < 0) {
        Complex one(Real(1L, z.precision()), Real(0L, z.precision()));
        base = one / z;
        n = -n;
    }
    Complex acc(Real(1L, z.precision()), Real(0L, z.precision()));
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

} // namespace alextor
