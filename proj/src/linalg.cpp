#include "alextor/linalg.hpp"

#include "alextor/errors.hpp"

#include <stdexcept>

namespace alextor {

namespace {

// Multiplies each row into K[t] with nonzero constant-or-higher terms; returns
// the total exponent removed, so det(original) == det(result) * t^shift.
int clear_row_powers(LaurentMatrix& a, LaurentMatrix* u = nullptr)
{
    int shift = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool any = false;
        int lo = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            lo = any ? std::min(lo, a(i, j).min_exp()) : a(i, j).min_exp();
            any = true;
        }
        if (!any || lo == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j).shifted(-lo);
        if (u) (*u)(i, i) = LaurentPoly::monomial(CycloNumber(1L), -lo);
        shift += lo;
    }
    return shift;
}

int degree(const LaurentPoly& p) { return p.max_exp(); }

// Row index >= from with a nonzero entry of least span in column c, or rows().
std::size_t choose_pivot(const LaurentMatrix& a, std::size_t from, std::size_t c)
{
    std::size_t best = a.rows();
    for (std::size_t i = from; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        if (best == a.rows() || a(i, c).span() < a(best, c).span()) best = i;
    }
    return best;
}

void add_row_multiple(LaurentMatrix& a, std::size_t dst, std::size_t src, const LaurentPoly& f)
{
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!a(src, j).is_zero()) a(dst, j) += f * a(src, j);
}

void add_col_multiple(LaurentMatrix& a, std::size_t dst, std::size_t src, const LaurentPoly& f)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a(i, src).is_zero()) a(i, dst) += a(i, src) * f;
}

} // namespace

LaurentPoly det(const LaurentMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1L);
    LaurentMatrix a = m;
    int shift = clear_row_powers(a);
    bool negate = false;
    LaurentPoly prev(1L);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = choose_pivot(a, k, k);
        if (p == n) return LaurentPoly();
        if (p != k) {
            a.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
            a(i, k) = LaurentPoly();
        }
        prev = a(k, k);
    }
    LaurentPoly d = a(n - 1, n - 1).shifted(shift);
    return negate ? -d : d;
}

std::vector<std::size_t> pivot_columns(const LaurentMatrix& m)
{
    LaurentMatrix a = m;
    clear_row_powers(a);
    std::vector<std::size_t> pivots;
    LaurentPoly prev(1L);
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = choose_pivot(a, r, c);
        if (p == a.rows()) continue;
        a.swap_rows(p, r);
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = exact_div(a(r, c) * a(i, j) - a(i, c) * a(r, j), prev);
            a(i, c) = LaurentPoly();
        }
        prev = a(r, c);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const LaurentMatrix& m) { return pivot_columns(m).size(); }

std::size_t SNFResult::rank() const
{
    std::size_t r = 0;
    for (const auto& x : d)
        if (!x.is_zero()) ++r;
    return r;
}

std::vector<LaurentPoly> SNFResult::invariant_factors() const
{
    std::vector<LaurentPoly> out;
    for (const auto& x : d)
        if (!x.is_zero()) out.push_back(x);
    return out;
}

SNFResult smith_normal_form(const LaurentMatrix& m)
{
    LaurentMatrix a = m;
    LaurentMatrix u = LaurentMatrix::identity(m.rows());
    LaurentMatrix v = LaurentMatrix::identity(m.cols());
    clear_row_powers(a, &u);

    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t n = std::min(rows, cols);
    SNFResult out;
    out.d.assign(n, LaurentPoly());

    for (std::size_t s = 0; s < n; ++s) {
        // Global pivot of least degree in the remaining block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                if (a(i, j).is_zero()) continue;
                if (pi == rows || degree(a(i, j)) < degree(a(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;
        a.swap_rows(s, pi);
        u.swap_rows(s, pi);
        a.swap_cols(s, pj);
        v.swap_cols(s, pj);

        for (;;) {
            // Bring the least-degree entry of row s / column s to the pivot.
            std::size_t bi = s, bj = s;
            for (std::size_t i = s + 1; i < rows; ++i)
                if (!a(i, s).is_zero() && degree(a(i, s)) < degree(a(bi, bj))) {
                    bi = i;
                    bj = s;
                }
            for (std::size_t j = s + 1; j < cols; ++j)
                if (!a(s, j).is_zero() && degree(a(s, j)) < degree(a(bi, bj))) {
                    bi = s;
                    bj = j;
                }
            if (bi != s) {
                a.swap_rows(s, bi);
                u.swap_rows(s, bi);
            }
            if (bj != s) {
                a.swap_cols(s, bj);
                v.swap_cols(s, bj);
            }

            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                if (a(i, s).is_zero()) continue;
                LaurentPoly q = -poly_divmod(a(i, s), a(s, s)).first;
                add_row_multiple(a, i, s, q);
                add_row_multiple(u, i, s, q);
                if (!a(i, s).is_zero()) clean = false;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                if (a(s, j).is_zero()) continue;
                LaurentPoly q = -poly_divmod(a(s, j), a(s, s)).first;
                add_col_multiple(a, j, s, q);
                add_col_multiple(v, j, s, q);
                if (!a(s, j).is_zero()) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide everything that remains.
            std::size_t bad = rows;
            for (std::size_t i = s + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (!a(i, j).is_zero() && !poly_divmod(a(i, j), a(s, s)).second.is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row_multiple(a, s, bad, LaurentPoly(1L));
            add_row_multiple(u, s, bad, LaurentPoly(1L));
        }

        CycloNumber c = a(s, s).leading().inverse();
        for (std::size_t j = 0; j < cols; ++j) a(s, j) *= c;
        for (std::size_t j = 0; j < rows; ++j) u(s, j) *= c;
        out.d[s] = a(s, s);
    }
    out.U = std::move(u);
    out.V = std::move(v);
    return out;
}

LaurentMatrix snf_diagonal(const SNFResult& snf, std::size_t rows, std::size_t cols)
{
    LaurentMatrix d(rows, cols);
    for (std::size_t i = 0; i < snf.d.size(); ++i) d(i, i) = snf.d[i];
    return d;
}

KernelRank kernel_and_rank(const LaurentMatrix& m)
{
    RatMatrix a = to_ratfunc(m);
    KernelRank out;
    out.kernel = field_kernel(a);
    out.rank = m.cols() - out.kernel.size();
    return out;
}

LaurentPoly charpoly(const CycloMatrix& m)
{
    if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    LaurentMatrix a = m.map([](const CycloNumber& c) { return LaurentPoly(-c); });
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += LaurentPoly::t();
    LaurentPoly p = det(a);
    if (p.min_exp() < 0 || !(p.leading() == CycloNumber(1L)))
        throw InvariantViolation("characteristic polynomial is not monic: " + p.to_string());
    return p;
}

CycloMatrix evaluate(const LaurentMatrix& m, const CycloNumber& point)
{
    return m.map([&](const LaurentPoly& p) { return p.evaluate(point); });
}

LaurentMatrix to_laurent(const CycloMatrix& m)
{
    return m.map([](const CycloNumber& c) { return LaurentPoly(c); });
}

RatMatrix to_ratfunc(const LaurentMatrix& m)
{
    return m.map([](const LaurentPoly& p) { return RatFunc(p); });
}

} // namespace alextor
