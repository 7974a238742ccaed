#include "alextor/laurent.hpp"

#include "alextor/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace alextor {

namespace {

// Dense coefficient vector of a K[t] polynomial (index == exponent).
std::vector<CycloNumber> dense(const LaurentPoly& p)
{
    if (p.is_zero()) return {};
    if (p.min_exp() < 0) throw std::invalid_argument("expected a polynomial in K[t], got " + p.to_string());
    std::vector<CycloNumber> out(static_cast<std::size_t>(p.max_exp()) + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        out[static_cast<std::size_t>(p.min_exp()) + i] = p.coeffs()[i];
    return out;
}

bool needs_parens(const CycloNumber& c)
{
    if (c.is_rational()) return false;
    int terms = 0;
    for (const auto& q : c.coords())
        if (q != 0) ++terms;
    return terms > 1;
}

// p(t) / (t - 1) for p with p(1) == 0, by synthetic division.
LaurentPoly divide_by_t_minus_one(const LaurentPoly& p)
{
    const auto& c = p.coeffs();
    std::vector<CycloNumber> q(c.size() - 1);
    CycloNumber carry;
    for (std::size_t i = c.size() - 1; i > 0; --i) {
        carry += c[i];
        q[i - 1] = carry;
    }
    return LaurentPoly::from_coeffs(p.min_exp(), std::move(q));
}

std::pair<int, LaurentPoly> strip_t_minus_one(LaurentPoly p)
{
    int k = 0;
    const CycloNumber one(1L);
    while (!p.is_zero() && p.evaluate(one).is_zero()) {
        p = divide_by_t_minus_one(p);
        ++k;
    }
    return {k, p};
}

} // namespace

LaurentPoly::LaurentPoly(CycloNumber c)
{
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(long c) : LaurentPoly(CycloNumber(c)) {}

LaurentPoly LaurentPoly::from_coeffs(int min_exp, std::vector<CycloNumber> coeffs)
{
    LaurentPoly p;
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::monomial(CycloNumber c, int exponent)
{
    LaurentPoly p(std::move(c));
    if (!p.is_zero()) p.min_exp_ = exponent;
    return p;
}

void LaurentPoly::trim()
{
    std::size_t hi = coeffs_.size();
    while (hi > 0 && coeffs_[hi - 1].is_zero()) --hi;
    std::size_t lo = 0;
    while (lo < hi && coeffs_[lo].is_zero()) ++lo;
    if (lo == hi) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<CycloNumber>(coeffs_.begin() + static_cast<long>(lo), coeffs_.begin() + static_cast<long>(hi));
        min_exp_ += static_cast<int>(lo);
    }
}

CycloNumber LaurentPoly::coeff(int exponent) const
{
    if (is_zero() || exponent < min_exp_ || exponent > max_exp()) return {};
    return coeffs_[static_cast<std::size_t>(exponent - min_exp_)];
}

unsigned LaurentPoly::cyclotomic_order() const
{
    unsigned n = 1;
    for (const auto& c : coeffs_)
        if (!c.is_rational()) n = lcm_order(n, c.order());
    return n;
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly p = *this;
    if (!p.is_zero()) p.min_exp_ += k;
    return p;
}

LaurentPoly LaurentPoly::conjugated() const
{
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = c.conjugate();
    return p;
}

LaurentPoly LaurentPoly::monic() const
{
    if (is_zero()) return *this;
    LaurentPoly p = *this;
    p *= leading().inverse();
    return p;
}

LaurentPoly LaurentPoly::derivative() const
{
    std::vector<CycloNumber> d;
    d.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * CycloNumber(static_cast<long>(min_exp_ + static_cast<int>(i))));
    return from_coeffs(min_exp_ - 1, std::move(d));
}

CycloNumber LaurentPoly::evaluate(const CycloNumber& x) const
{
    if (is_zero()) return {};
    CycloNumber acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    if (min_exp_ == 0) return acc;
    CycloNumber base = min_exp_ > 0 ? x : x.inverse();
    for (int k = 0; k < std::abs(min_exp_); ++k) acc *= base;
    return acc;
}

Complex LaurentPoly::evaluate_numeric(const Complex& x) const
{
    unsigned prec = x.precision();
    Complex acc{Real(0L, prec), Real(0L, prec)};
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].embed(prec);
    if (min_exp_ == 0) return acc;
    return acc * complex_pow(x, min_exp_);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b)
{
    if (b.is_zero()) return *this;
    if (is_zero()) return *this = b;
    int lo = std::min(min_exp_, b.min_exp_);
    int hi = std::max(max_exp(), b.max_exp());
    std::vector<CycloNumber> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(min_exp_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[static_cast<std::size_t>(b.min_exp_ - lo) + i] += b.coeffs_[i];
    min_exp_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) { return *this += -b; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) { return *this = *this * b; }

LaurentPoly& LaurentPoly::operator*=(const CycloNumber& c)
{
    if (c.is_zero()) return *this = LaurentPoly();
    for (auto& x : coeffs_) x *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<CycloNumber> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentPoly::from_coeffs(a.min_exp_ + b.min_exp_, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPoly::to_string(const std::string& var) const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t idx = coeffs_.size(); idx-- > 0;) {
        const CycloNumber& c = coeffs_[idx];
        if (c.is_zero()) continue;
        int e = min_exp_ + static_cast<int>(idx);
        std::string power = e == 1 ? var : var + "^" + std::to_string(e);
        std::string term;
        bool negative = false;
        if (c.is_rational()) {
            Rational q = c.rational_value();
            negative = q < 0;
            if (negative) q = -q;
            if (e == 0)
                term = q.get_str();
            else if (q == 1)
                term = power;
            else
                term = q.get_str() + "*" + power;
        } else {
            std::string cs = c.to_string();
            if (needs_parens(c)) cs = "(" + cs + ")";
            else if (cs.front() == '-') {
                negative = true;
                cs.erase(0, 1);
            }
            term = e == 0 ? cs : cs + "*" + power;
        }
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    auto r = dense(a);
    auto d = dense(b);
    if (r.size() < d.size()) return {LaurentPoly(), a};
    std::vector<CycloNumber> q(r.size() - d.size() + 1);
    CycloNumber lead_inv = d.back().inverse();
    const std::size_t dn = d.size();
    for (std::size_t top = r.size(); top >= dn; --top) {
        std::size_t k = top - 1;
        if (r[k].is_zero()) continue;
        CycloNumber c = r[k] * lead_inv;
        std::size_t shift = k - (dn - 1);
        for (std::size_t j = 0; j < dn; ++j)
            if (!d[j].is_zero()) r[shift + j] -= c * d[j];
        q[shift] = std::move(c);
    }
    r.resize(d.size() - 1);
    return {LaurentPoly::from_coeffs(0, std::move(q)), LaurentPoly::from_coeffs(0, std::move(r))};
}

bool divides(const LaurentPoly& b, const LaurentPoly& a)
{
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return poly_divmod(a.stripped(), b.stripped()).second.is_zero();
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw std::domain_error("exact division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_unit()) {
        LaurentPoly q = a.shifted(-b.min_exp());
        q *= b.trailing().inverse();
        return q;
    }
    auto [q, r] = poly_divmod(a.stripped(), b.stripped());
    if (!r.is_zero())
        throw InvariantViolation("inexact polynomial division: (" + a.to_string() + ") / (" + b.to_string() + ")");
    return q.shifted(a.min_exp() - b.min_exp());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly x = a.stripped();
    LaurentPoly y = b.stripped();
    while (!y.is_zero()) {
        LaurentPoly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

LaurentPoly t_minus_one() { return LaurentPoly::from_coeffs(0, {CycloNumber(-1L), CycloNumber(1L)}); }

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFunc::normalize()
{
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    num_ = num_.shifted(-den_.min_exp());
    den_ = den_.stripped();
    if (!den_.is_constant()) {
        LaurentPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    CycloNumber lead_inv = den_.leading().inverse();
    num_ *= lead_inv;
    den_ *= lead_inv;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::conjugated() const { return RatFunc(num_.conjugated(), den_.conjugated()); }

std::optional<CycloNumber> RatFunc::evaluate(const CycloNumber& x) const
{
    CycloNumber d = den_.evaluate(x);
    if (d.is_zero()) return std::nullopt;
    if (x.is_zero() && num_.min_exp() < 0) return std::nullopt;
    return num_.evaluate(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& b)
{
    if (den_ == b.den_) {
        num_ += b.num_;
        normalize();
        return *this;
    }
    num_ = num_ * b.den_ + b.num_ * den_;
    den_ = den_ * b.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& b) { return *this += -b; }

RatFunc& RatFunc::operator*=(const RatFunc& b)
{
    num_ = num_ * b.num_;
    den_ = den_ * b.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& b) { return *this *= b.inverse(); }

RatFunc RatFunc::operator-() const
{
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::to_string(const std::string& var) const
{
    std::string n = num_.to_string(var);
    if (is_laurent()) return n;
    auto wrap = [](const LaurentPoly& p, std::string s) {
        return p.coeffs().size() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_, n) + "/" + wrap(den_, den_.to_string(var));
}

int order_at_one(const RatFunc& f)
{
    if (f.is_zero()) throw std::domain_error("order_at_one of the zero function");
    return strip_t_minus_one(f.num()).first - strip_t_minus_one(f.den()).first;
}

CycloNumber leading_at_one(const RatFunc& f)
{
    if (f.is_zero()) throw std::domain_error("leading_at_one of the zero function");
    const CycloNumber one(1L);
    auto n = strip_t_minus_one(f.num()).second.evaluate(one);
    auto d = strip_t_minus_one(f.den()).second.evaluate(one);
    return n / d;
}

UnitNormalized unit_normalize(const RatFunc& f)
{
    if (f.is_zero()) throw std::domain_error("unit_normalize of the zero function");
    UnitClass unit{f.num().min_exp(), f.num().leading()};
    LaurentPoly canonical_num = f.num().stripped().monic();
    return {RatFunc(std::move(canonical_num), f.den()), std::move(unit)};
}

std::optional<UnitClass> unit_ratio(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    RatFunc r = a / b;
    if (!r.is_unit()) return std::nullopt;
    return UnitClass{r.num().min_exp(), r.num().leading()};
}

} // namespace alextor
