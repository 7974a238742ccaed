#include "alextor/knots.hpp"

#include "alextor/errors.hpp"

namespace alextor {

namespace {

void place_block(LaurentMatrix& dst, std::size_t r0, std::size_t c0, const LaurentMatrix& b)
{
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) dst(r0 + i, c0 + j) = b(i, j);
}

std::string label(const std::string& cell, std::size_t alpha, std::size_t m)
{
    return m == 1 ? cell : cell + ".v" + std::to_string(alpha + 1);
}

} // namespace

TwistedComplex build_twisted_complex(const Presentation& p, const Representation& rho, const Augmentation& eps)
{
    validate_presentation(p);
    validate_representation(p, rho);
    validate_augmentation(p, eps);
    const std::size_t k = p.rank(), r = p.relators.size(), m = rho.dimension;

    LaurentMatrix d2(k * m, r * m), d1(m, k * m);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            place_block(d2, i * m, j * m, phi(fox_derivative(p.relators[j], i), rho, eps).transposed());
        auto x_minus_one = GroupRingElement(FreeWord::generator(i)) - GroupRingElement::one();
        place_block(d1, 0, i * m, phi(x_minus_one, rho, eps).transposed());
    }

    std::vector<std::vector<std::string>> labels(3);
    for (std::size_t a = 0; a < m; ++a) labels[0].push_back(label("p", a, m));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < m; ++a) labels[1].push_back(label(p.generators[i], a, m));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t a = 0; a < m; ++a) labels[2].push_back(label("r" + std::to_string(j + 1), a, m));

    TwistedComplex out;
    try {
        out.complex = BasedComplex(0, {m, k * m, r * m}, {{1, d1}, {2, d2}}, Grading::chain, labels);
    } catch (const InputError& e) {
        throw InvariantViolation(std::string("twisted complex is not a complex: ") + e.what());
    }
    out.presentation = p.name;
    out.representation = rho.name;
    out.generators = k;
    out.dimension = m;
    return out;
}

KitanoResult twisted_alexander(const Presentation& p, const Representation& rho, const Augmentation& eps,
                               std::size_t column)
{
    if (!p.deficiency_one())
        throw HypothesisError("Kitano's formula needs a deficiency-one presentation (" +
                              std::to_string(p.generators.size()) + " generators, " +
                              std::to_string(p.relators.size()) + " relators)");
    if (column >= p.rank())
        throw InputError("column " + std::to_string(column + 1) + " is out of range 1.." + std::to_string(p.rank()));
    TwistedComplex tc = build_twisted_complex(p, rho, eps);
    const std::size_t m = rho.dimension, k = p.rank();
    const LaurentMatrix& d2 = tc.complex.boundary(2);

    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < k; ++i)
        if (i != column)
            for (std::size_t a = 0; a < m; ++a) rows.push_back(i * m + a);
    for (std::size_t c = 0; c < d2.cols(); ++c) cols.push_back(c);
    std::vector<std::size_t> block;
    for (std::size_t a = 0; a < m; ++a) block.push_back(column * m + a);
    std::vector<std::size_t> all_m;
    for (std::size_t a = 0; a < m; ++a) all_m.push_back(a);

    KitanoResult out;
    out.column = column;
    out.denominator = det(tc.complex.boundary(1).submatrix(all_m, block));
    if (out.denominator.is_zero())
        throw HypothesisError("det Phi(" + p.generators[column] + " - 1) vanishes");
    out.numerator = det(d2.submatrix(rows, cols));
    if (out.numerator.is_zero())
        throw HypothesisError("det A_" + std::to_string(column + 1) +
                              " vanishes: the twisted homology is not a torsion module");
    out.value = RatFunc(out.numerator, out.denominator);
    out.normalized = unit_normalize(out.value);
    return out;
}

ColumnCheck column_independence_check(const Presentation& p, const Representation& rho, const Augmentation& eps)
{
    ColumnCheck out;
    std::optional<RatFunc> first;
    for (std::size_t j = 0; j < p.rank(); ++j) {
        ColumnEntry e;
        e.column = j;
        try {
            auto r = twisted_alexander(p, rho, eps, j);
            e.admissible = true;
            if (!first) first = r.value;
            e.unit_to_first = unit_ratio(r.value, *first);
            if (!e.unit_to_first) out.all_equal = false;
        } catch (const HypothesisError& err) {
            e.reason = err.what();
        }
        out.columns.push_back(std::move(e));
    }
    return out;
}

Theorem41Check theorem41_check(const Presentation& p, const Representation& rho, const Augmentation& eps)
{
    Theorem41Check out;
    TwistedComplex tc = build_twisted_complex(p, rho, eps);
    HomologyData h = homology(tc.complex);
    if (auto bad = h.non_torsion_degree()) {
        out.reason = "homology in degree " + std::to_string(*bad) + " is not a torsion module";
        return out;
    }
    std::optional<RatFunc> delta;
    for (std::size_t j = 0; j < p.rank() && !delta; ++j) {
        try {
            delta = twisted_alexander(p, rho, eps, j).value;
        } catch (const HypothesisError&) {
        }
    }
    if (!delta) {
        out.reason = "no admissible column for Kitano's formula";
        return out;
    }
    BasedComplex dual = dualize(tc.complex, DualKind::plain);
    out.dual_torsion = reidemeister_torsion(dual).value;
    out.inverse_alexander = delta->inverse();
    out.unit = unit_ratio(out.dual_torsion, out.inverse_alexander);
    out.verdict = out.unit ? Verdict::holds : Verdict::fails;
    return out;
}

Corollary41Report corollary41_report(const BasedComplex& c, const std::optional<RatFunc>& delta, unsigned precision_bits)
{
    Corollary41Report out;
    out.grading_note = "H^q(X_inf, rho) is read off H_q of the chain-graded complex (dual vector spaces over K); "
                       "H^q(X, rho) from the specialization at t = 1";
    if (c.grading() != Grading::chain) {
        out.reason = "expects the chain-graded complex";
        return out;
    }
    HomologyData h = homology(c);
    if (auto bad = h.non_torsion_degree()) {
        out.reason = "homology in degree " + std::to_string(*bad) + " is not a torsion module";
        return out;
    }
    const HomologyDegree* h0 = h.at(0);
    if (h0 && h0->dimension() > 0) {
        out.reason = "H^0(X_inf, rho) has dimension " + std::to_string(h0->dimension()) + ", not 0";
        return out;
    }

    RatFunc d = delta ? *delta : reidemeister_torsion(c).value.inverse();
    RatFunc astar = alexander_invariant(h, AlexanderConvention::chain);
    out.order_delta = order_at_one(d);
    out.minus_order_astar = -order_at_one(astar);

    const CycloNumber one(1L);
    auto rank_at_one = [&](int j) { return field_rank(evaluate(c.boundary(j), one)); };
    std::size_t n1 = c.rank(1);
    out.dim_h1 = n1 - rank_at_one(1) - rank_at_one(2);
    out.inequality = *out.order_delta >= static_cast<int>(*out.dim_h1);

    out.semisimple_at_one = true;
    if (const HomologyDegree* h1 = h.at(1))
        for (const auto& f : h1->torsion)
            if (divides(t_minus_one() * t_minus_one(), f)) out.semisimple_at_one = false;
    out.equality = *out.order_delta == static_cast<int>(*out.dim_h1);
    out.equality_matches_semisimplicity = out.equality == out.semisimple_at_one;

    bool ok = out.inequality && out.equality_matches_semisimplicity && *out.order_delta == *out.minus_order_astar;

    Specialization dual_at_one = specialize_at_one(dualize(c, DualKind::plain));
    out.all_cohomology_vanishes = dual_at_one.acyclic;
    if (out.all_cohomology_vanishes) {
        out.abs_torsion = dual_at_one.torsion->embed(precision_bits).modulus();
        auto d1 = d.evaluate(one);
        if (!d1 || d1->is_zero()) throw InvariantViolation("Delta has a zero or pole at t = 1 while H(X, rho) = 0");
        Real inv = Real(1L, precision_bits) / d1->embed(precision_bits).modulus();
        out.inverse_abs_delta_at_one = inv;
        out.relative_error = relative_difference(*out.abs_torsion, inv);
        ok = ok && out.relative_error->to_double() < 1e-20;
    }
    out.verdict = ok ? Verdict::holds : Verdict::fails;
    return out;
}

} // namespace alextor
