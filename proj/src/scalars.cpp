#include "alextor/scalars.hpp"

#include "alextor/errors.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace alextor {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<Integer> compute_cyclotomic(unsigned n)
{
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    std::vector<Integer> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& div = cyclotomic_polynomial(d);
        std::size_t dd = div.size() - 1;
        std::vector<Integer> quot(num.size() - dd, 0);
        for (std::size_t k = num.size(); k-- > dd;) {
            Integer c = num[k]; // divisor is monic
            quot[k - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
        }
        num = std::move(quot);
    }
    return num;
}

// Reduce an arbitrary-length polynomial modulo the monic Phi_n in place.
void reduce_mod_phi(QPoly& p, unsigned n)
{
    const auto& phi = cyclotomic_polynomial(n);
    std::size_t d = phi.size() - 1;
    for (std::size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) continue;
        Rational c = p[k];
        for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= c * phi[j];
    }
    p.resize(d, Rational(0));
}

// Long division of polynomials over Q; divisor must be nonzero and trimmed.
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r)
{
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Rational c = r.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
}

QPoly poly_mul(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly poly_sub(QPoly a, const QPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

// Solve A y = rhs exactly; A is rows x cols (rows >= cols). Empty on failure.
std::optional<QPoly> solve_overdetermined(std::vector<QPoly> a, QPoly rhs)
{
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    QPoly y(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = rhs[i] / a[i][pivot_col[i]];
    return y;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(unsigned n)
{
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<unsigned, std::vector<Integer>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Computed outside the lock: recursion needs the divisors' entries.
    std::vector<Integer> value = n == 1 ? std::vector<Integer>{-1, 1} : compute_cyclotomic(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(value)).first->second;
}

unsigned euler_phi(unsigned n) { return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1); }

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

CycloNumber::CycloNumber() : order_(1), coords_(1, Rational(0)) {}

CycloNumber::CycloNumber(long value) : order_(1), coords_(1, Rational(value)) {}

CycloNumber::CycloNumber(Rational value) : order_(1), coords_(1, std::move(value))
{
    coords_[0].canonicalize();
}

CycloNumber::CycloNumber(unsigned n, std::vector<Rational> coords, bool reduced)
    : order_(n), coords_(std::move(coords))
{
    if (!reduced) reduce_mod_phi(coords_, n);
}

CycloNumber CycloNumber::zeta(unsigned n, long power)
{
    long e = power % static_cast<long>(n);
    if (e < 0) e += n;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c[static_cast<std::size_t>(e)] = 1;
    return CycloNumber(n, std::move(c), false);
}

CycloNumber CycloNumber::from_coords(unsigned n, std::vector<Rational> coords)
{
    for (auto& q : coords) q.canonicalize();
    return CycloNumber(n, std::move(coords), false);
}

bool CycloNumber::is_zero() const
{
    for (const auto& q : coords_)
        if (q != 0) return false;
    return true;
}

bool CycloNumber::is_rational() const
{
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

bool CycloNumber::is_one() const { return is_rational() && coords_[0] == 1; }

Rational CycloNumber::rational_value() const
{
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
    return coords_[0];
}

CycloNumber CycloNumber::lifted(unsigned N) const
{
    if (N % order_ != 0) throw std::invalid_argument("lift target order must be a multiple of the current order");
    if (N == order_) return *this;
    if (is_rational()) {
        std::vector<Rational> c(euler_phi(N), Rational(0));
        c[0] = coords_[0];
        return CycloNumber(N, std::move(c), true);
    }
    unsigned step = N / order_;
    std::vector<Rational> c(static_cast<std::size_t>(coords_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) c[i * step] = coords_[i];
    return CycloNumber(N, std::move(c), false);
}

std::optional<CycloNumber> CycloNumber::projected(unsigned n) const
{
    if (n == order_) return *this;
    if (is_rational()) return CycloNumber(coords_[0]).lifted(n);
    unsigned L = lcm_order(n, order_);
    CycloNumber target = lifted(L);
    unsigned dn = euler_phi(n);
    unsigned dl = euler_phi(L);
    std::vector<QPoly> system(dl, QPoly(dn, Rational(0)));
    for (unsigned i = 0; i < dn; ++i) {
        CycloNumber basis = zeta(n, i).lifted(L);
        for (unsigned r = 0; r < dl; ++r) system[r][i] = basis.coords_[r];
    }
    auto y = solve_overdetermined(std::move(system), target.coords_);
    if (!y) return std::nullopt;
    return CycloNumber(n, std::move(*y), true);
}

CycloNumber CycloNumber::simplified() const
{
    if (order_ != 1 && is_rational()) return CycloNumber(coords_[0]);
    return *this;
}

CycloNumber CycloNumber::conjugate() const
{
    if (is_rational()) return *this;
    std::vector<Rational> c(order_, Rational(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) c[(order_ - i) % order_] += coords_[i];
    return CycloNumber(order_, std::move(c), false);
}

CycloNumber CycloNumber::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in Q(zeta_" + std::to_string(order_) + ")");
    if (is_rational()) {
        CycloNumber out = *this;
        out.coords_[0] = 1 / coords_[0];
        return out;
    }
    const auto& phi_int = cyclotomic_polynomial(order_);
    QPoly r0(phi_int.begin(), phi_int.end());
    QPoly r1 = coords_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (!r1.empty()) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant because Phi_n is irreducible.
    if (r0.size() != 1) throw InvariantViolation("cyclotomic inverse: gcd with Phi_n is not constant");
    for (auto& c : s0) c /= r0[0];
    return CycloNumber(order_, std::move(s0), false);
}

Complex CycloNumber::embed(unsigned precision_bits) const
{
    unsigned work = precision_bits + 32 + 2 * static_cast<unsigned>(coords_.size());
    Real re(work), im(work);
    Real two_pi_over_n = Real::pi(work) * Real(2L, work) / Real(static_cast<long>(order_), work);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        Real c(work);
        mpfr_set_q(c.get(), coords_[i].get_mpq_t(), MPFR_RNDN);
        if (i == 0) {
            re = re + c;
            continue;
        }
        Complex phase = unit_phase(two_pi_over_n * Real(static_cast<long>(i), work));
        re = re + c * phase.re;
        im = im + c * phase.im;
    }
    return {re.with_precision(precision_bits), im.with_precision(precision_bits)};
}

std::string CycloNumber::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string power = i == 1 ? "z" : "z^" + std::to_string(i);
        if (i == 0)
            out += rational_text(mag);
        else if (mag == 1)
            out += power;
        else
            out += rational_text(mag) + "*" + power;
    }
    return out.empty() ? "0" : out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& b)
{
    if (b.order_ == 1) {
        coords_[0] += b.coords_[0];
        return *this;
    }
    if (order_ != b.order_) {
        unsigned L = lcm_order(order_, b.order_);
        *this = lifted(L);
        return *this += b.lifted(L);
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& b) { return *this += -b; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& b)
{
    if (b.order_ == 1 || b.is_rational()) {
        const Rational& s = b.coords_[0];
        for (auto& c : coords_) c *= s;
        return *this;
    }
    if (order_ == 1 || is_rational()) {
        Rational s = coords_[0];
        *this = b;
        for (auto& c : coords_) c *= s;
        return *this;
    }
    if (order_ != b.order_) {
        unsigned L = lcm_order(order_, b.order_);
        *this = lifted(L);
        return *this *= b.lifted(L);
    }
    QPoly prod = poly_mul(coords_, b.coords_);
    reduce_mod_phi(prod, order_);
    coords_ = std::move(prod);
    return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& b) { return *this *= b.inverse(); }

CycloNumber CycloNumber::operator-() const
{
    CycloNumber out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
}

bool operator==(const CycloNumber& a, const CycloNumber& b)
{
    if (a.order_ == b.order_) return a.coords_ == b.coords_;
    if (a.is_rational() && b.is_rational()) return a.coords_[0] == b.coords_[0];
    if (a.is_rational() != b.is_rational()) return false;
    unsigned L = lcm_order(a.order_, b.order_);
    return a.lifted(L).coords_ == b.lifted(L).coords_;
}

CycloNumber cyclo_arith(const CycloNumber& a, const CycloNumber& b, CycloOp op)
{
    switch (op) {
    case CycloOp::add: return a + b;
    case CycloOp::sub: return a - b;
    case CycloOp::mul: return a * b;
    case CycloOp::div: return a / b;
    }
    throw std::invalid_argument("unknown cyclotomic operation");
}

} // namespace alextor
