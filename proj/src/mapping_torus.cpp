#include "alextor/mapping_torus.hpp"

#include "alextor/errors.hpp"

namespace alextor {

QuotientI quotient_I(const CycloMatrix& F)
{
    if (!F.is_square()) throw InputError("monodromy matrix must be square");
    const std::size_t n = F.rows();
    if (field_det(F).is_zero()) throw InputError("monodromy matrix must be invertible");
    CycloMatrix fm1 = F - CycloMatrix::identity(n);
    auto kernel = field_kernel(fm1);

    QuotientI q;
    q.beta = kernel.size();
    q.i_dim = n - q.beta;
    // Extend the kernel basis by unit vectors.
    std::vector<std::vector<CycloNumber>> cols = kernel;
    for (std::size_t e = 0; e < n && cols.size() < n; ++e) {
        std::vector<CycloNumber> v(n);
        v[e] = CycloNumber(1L);
        auto trial = cols;
        trial.push_back(v);
        CycloMatrix m(n, trial.size());
        for (std::size_t j = 0; j < trial.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) m(i, j) = trial[j][i];
        if (field_rank(m) == trial.size()) cols = std::move(trial);
    }
    q.basis = CycloMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) q.basis(i, j) = cols[j][i];
    CycloMatrix g = field_inverse(q.basis) * F * q.basis;
    for (std::size_t i = q.beta; i < n; ++i)
        for (std::size_t j = 0; j < q.beta; ++j)
            if (!g(i, j).is_zero()) throw InvariantViolation("F does not preserve Ker(F - 1)");
    std::vector<std::size_t> tail;
    for (std::size_t i = q.beta; i < n; ++i) tail.push_back(i);
    q.induced = g.submatrix(tail, tail);
    if (field_det(q.induced).is_zero()) throw InvariantViolation("induced map on I is singular");
    return q;
}

Semisimplicity semisimplicity(const CycloMatrix& F)
{
    if (!F.is_square()) throw InputError("monodromy matrix must be square");
    LaurentMatrix a = F.map([](const CycloNumber& c) { return LaurentPoly(-c); });
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) += LaurentPoly::t();
    Semisimplicity s;
    s.invariant_factors = smith_normal_form(a).invariant_factors();
    s.minimal_polynomial = s.invariant_factors.empty() ? LaurentPoly(1L) : s.invariant_factors.back();
    s.global = gcd(s.minimal_polynomial, s.minimal_polynomial.derivative()).is_constant();
    LaurentPoly sq = t_minus_one() * t_minus_one();
    s.at_one = true;
    for (const auto& f : s.invariant_factors)
        if (divides(sq, f)) s.at_one = false;
    return s;
}

MonodromyTorsion torsion_from_monodromy(const CycloMatrix& F, unsigned precision_bits)
{
    QuotientI q = quotient_I(F);
    Semisimplicity s = semisimplicity(F);
    MonodromyTorsion out;
    out.within_hypothesis = s.global;
    if (!s.global) out.note = "F is not semisimple: outside the hypothesis of the mapping-torus theorem";
    CycloNumber d = field_det(q.induced - CycloMatrix::identity(q.i_dim));
    if (d.is_zero()) {
        out.note = (out.note.empty() ? "" : out.note + "; ") +
                   std::string("(F - 1) is singular on I (Jordan block at eigenvalue 1); torsion undefined");
        return out;
    }
    out.det_f_minus_one_on_I = d;
    out.abs_torsion = Real(1L, precision_bits) / d.embed(precision_bits).modulus();
    return out;
}

RatFunc alexander_from_monodromy(const CycloMatrix& F)
{
    return RatFunc(LaurentPoly(1L), charpoly(F));
}

Theorem35Report theorem35_report(const CycloMatrix& F, bool h0_vanishes, unsigned precision_bits, double tolerance)
{
    Theorem35Report r;
    if (!h0_vanishes) {
        r.reason = "input does not assert H^0(S, rho) = 0";
        return r;
    }
    QuotientI q = quotient_I(F);
    Semisimplicity s = semisimplicity(F);
    RatFunc astar = alexander_from_monodromy(F);
    r.beta = q.beta;
    r.order_astar = order_at_one(astar);
    r.semisimple_at_one = s.at_one;
    r.globally_semisimple = s.global;
    int minus_beta = -static_cast<int>(q.beta);
    r.order_equals_minus_beta = r.order_astar == minus_beta;
    r.strict_inequality = r.order_astar < minus_beta;
    bool ok = r.order_astar <= minus_beta && r.order_equals_minus_beta == s.at_one;
    if (s.at_one) {
        MonodromyTorsion t = torsion_from_monodromy(F, precision_bits);
        if (!t.abs_torsion) throw InvariantViolation("semisimple at 1 but (F - 1) is singular on I");
        r.limit = leading_at_one(astar).embed(precision_bits).modulus();
        r.abs_torsion = t.abs_torsion;
        r.relative_error = relative_difference(*r.limit, *r.abs_torsion);
        r.limit_checked = true;
        ok = ok && r.relative_error->to_double() < tolerance;
    }
    r.verdict = ok ? Verdict::holds : Verdict::fails;
    return r;
}

} // namespace alextor
