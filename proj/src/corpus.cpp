#include "alextor/corpus.hpp"

#include "alextor/errors.hpp"

#include <algorithm>
#include <numeric>

namespace alextor {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

struct BaseChange {
    LaurentMatrix p;
    LaurentMatrix p_inv;
};

BaseChange random_unimodular(Rng& rng, std::size_t n, unsigned order)
{
    BaseChange b{LaurentMatrix::identity(n), LaurentMatrix::identity(n)};
    if (n == 0) return b;
    int ops = uniform(rng, 1, 3);
    for (int k = 0; k < ops; ++k) {
        LaurentMatrix e = LaurentMatrix::identity(n), e_inv = LaurentMatrix::identity(n);
        int kind = n >= 2 ? uniform(rng, 0, 2) : 0;
        if (kind == 0) {
            std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            CycloNumber c = random_scalar(rng, order);
            int s = uniform(rng, -1, 1);
            e(a, a) = LaurentPoly::monomial(c, s);
            e_inv(a, a) = LaurentPoly::monomial(c.inverse(), -s);
        } else if (kind == 1) {
            std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            std::size_t b2 = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
            if (b2 >= a) ++b2;
            LaurentPoly g = random_poly(rng, 1, order);
            e(a, b2) = g;
            e_inv(a, b2) = -g;
        } else {
            std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            std::size_t b2 = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
            e.swap_rows(a, b2);
            e_inv.swap_rows(a, b2);
        }
        b.p = b.p * e;
        b.p_inv = e_inv * b.p_inv;
    }
    return b;
}

} // namespace

CycloNumber random_scalar(Rng& rng, unsigned order)
{
    for (;;) {
        std::vector<Rational> c(euler_phi(order));
        for (auto& x : c) {
            int v = uniform(rng, -3, 3);
            x = v;
        }
        if (order > 1 && coin(rng, 0.5)) std::fill(c.begin() + 1, c.end(), Rational(0));
        auto z = CycloNumber::from_coords(order, c);
        if (!z.is_zero()) return z;
    }
}

LaurentPoly random_poly(Rng& rng, int max_degree, unsigned order)
{
    for (;;) {
        int deg = uniform(rng, 0, max_degree);
        std::vector<CycloNumber> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c)
            if (coin(rng, 0.6)) x = random_scalar(rng, order);
        auto p = LaurentPoly::from_coeffs(0, c);
        if (!p.is_zero()) return p;
    }
}

BasedComplex random_complex(Rng& rng, const ComplexGenOptions& opt)
{
    int length = uniform(rng, std::min(2, opt.max_length), opt.max_length);
    int lo = uniform(rng, -1, 1);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(length), 0);
    // Elementary pieces sit on (j, j-1) for chain indices lo+1..lo+length-1.
    struct Piece {
        int degree;
        LaurentPoly f;
    };
    std::vector<Piece> pieces;
    for (int j = lo + 1; j < lo + length; ++j) {
        int count = uniform(rng, j == lo + 1 ? 1 : 0, 3);
        for (int k = 0; k < count; ++k) {
            auto i = static_cast<std::size_t>(j - lo);
            if (ranks[i] >= opt.max_rank || ranks[i - 1] >= opt.max_rank) break;
            LaurentPoly f;
            if (coin(rng, opt.unit_rate)) {
                f = LaurentPoly::monomial(random_scalar(rng, opt.cyclotomic_order), uniform(rng, -1, 1));
            } else {
                f = random_poly(rng, opt.max_poly_degree, opt.cyclotomic_order);
                if (coin(rng, opt.t_minus_one_rate)) f *= t_minus_one();
                f = f.shifted(uniform(rng, -1, 1));
            }
            ++ranks[i];
            ++ranks[i - 1];
            pieces.push_back({j, f});
        }
    }
    // Place pieces on consecutive basis slots per degree.
    std::vector<std::size_t> used(ranks.size(), 0);
    std::map<int, LaurentMatrix> bd;
    for (int j = lo + 1; j < lo + length; ++j)
        bd.emplace(j, LaurentMatrix(ranks[static_cast<std::size_t>(j - lo - 1)], ranks[static_cast<std::size_t>(j - lo)]));
    for (const auto& pc : pieces) {
        auto i = static_cast<std::size_t>(pc.degree - lo);
        bd[pc.degree](used[i - 1]++, used[i]++) = pc.f;
    }
    std::vector<BaseChange> change;
    for (auto r : ranks) change.push_back(random_unimodular(rng, r, opt.cyclotomic_order));
    for (auto& [j, m] : bd) {
        auto i = static_cast<std::size_t>(j - lo);
        m = change[i - 1].p_inv * m * change[i].p;
    }
    return BasedComplex(lo, ranks, bd);
}

namespace {

CycloNumber random_eigenvalue(Rng& rng, const MonodromyGenOptions& opt)
{
    if (coin(rng, opt.eigenvalue_one_rate)) return CycloNumber(1L);
    switch (uniform(rng, 0, 3)) {
    case 0: return CycloNumber(-1L);
    case 1: return CycloNumber::zeta(opt.cyclotomic_order, uniform(rng, 1, static_cast<int>(opt.cyclotomic_order)));
    case 2: return CycloNumber(Rational(uniform(rng, 1, 4), uniform(rng, 1, 4)));
    default: return random_scalar(rng, opt.cyclotomic_order);
    }
}

CycloMatrix conjugate_randomly(Rng& rng, const CycloMatrix& d, unsigned order)
{
    std::size_t n = d.rows();
    CycloMatrix p = CycloMatrix::identity(n);
    int ops = uniform(rng, 1, 2 * static_cast<int>(n));
    for (int k = 0; k < ops && n >= 2; ++k) {
        CycloMatrix e = CycloMatrix::identity(n);
        std::size_t a = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
        std::size_t b = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
        if (b >= a) ++b;
        e(a, b) = random_scalar(rng, order);
        p = p * e;
    }
    return p * d * field_inverse(p);
}

} // namespace

CycloMatrix random_semisimple_monodromy(Rng& rng, const MonodromyGenOptions& opt)
{
    std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(opt.max_dim)));
    CycloMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        CycloNumber v = random_eigenvalue(rng, opt);
        while (v.is_zero()) v = random_eigenvalue(rng, opt);
        d(i, i) = v;
    }
    return conjugate_randomly(rng, d, opt.cyclotomic_order);
}

CycloMatrix random_jordan_monodromy(Rng& rng, const MonodromyGenOptions& opt)
{
    std::size_t n = static_cast<std::size_t>(uniform(rng, 2, static_cast<int>(std::max<std::size_t>(opt.max_dim, 2))));
    CycloMatrix d(n, n);
    d(0, 0) = CycloNumber(1L);
    d(0, 1) = CycloNumber(1L);
    d(1, 1) = CycloNumber(1L);
    for (std::size_t i = 2; i < n; ++i) {
        CycloNumber v = random_eigenvalue(rng, opt);
        while (v.is_zero()) v = random_eigenvalue(rng, opt);
        d(i, i) = v;
    }
    return conjugate_randomly(rng, d, opt.cyclotomic_order);
}

Presentation two_bridge_presentation(int p, int q)
{
    if (p < 3 || p % 2 == 0 || q <= 0 || q >= p || q % 2 == 0 || std::gcd(p, q) != 1)
        throw InputError("two-bridge parameters need p odd >= 3 and q odd, coprime, 0 < q < p");
    std::vector<Letter> w;
    for (int i = 1; i < p; ++i) {
        int e = ((i * q) / p) % 2 == 0 ? 1 : -1;
        w.push_back({static_cast<std::size_t>((i - 1) % 2), e});
    }
    FreeWord ww(w);
    FreeWord r = ww * FreeWord::generator(0) * ww.inverse() * FreeWord::generator(1, -1);
    return Presentation{"b(" + std::to_string(p) + "," + std::to_string(q) + ")", {"x", "y"}, {r}, std::nullopt};
}

Representation dihedral_representation(unsigned p, bool twisted)
{
    Representation r;
    r.dimension = 2;
    r.cyclotomic_order = twisted ? 2 * p : p;
    r.name = std::string(twisted ? "twisted D" : "D") + std::to_string(p);
    CycloNumber chi = twisted ? CycloNumber::zeta(2 * p, 1) : CycloNumber(1L);
    for (long k = 0; k < 2; ++k) {
        CycloMatrix m(2, 2);
        m(0, 1) = chi * CycloNumber::zeta(p, k);
        m(1, 0) = chi * CycloNumber::zeta(p, -k);
        r.matrices.push_back(m);
    }
    return r;
}

KnotCase random_knot_case(Rng& rng, int max_p)
{
    int p = 2 * uniform(rng, 1, (max_p - 1) / 2) + 1;
    std::vector<int> qs;
    for (int q = 1; q < p; q += 2)
        if (std::gcd(p, q) == 1) qs.push_back(q);
    int q = qs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(qs.size()) - 1))];
    KnotCase k;
    k.presentation = two_bridge_presentation(p, q);
    FreeWord& rel = k.presentation.relators[0];
    rel = rel.rotated(static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rel.length()) - 1)));
    if (coin(rng, 0.5)) rel = rel.inverse();
    switch (uniform(rng, 0, 3)) {
    case 0: k.representation = Representation::trivial(2, 1); break;
    case 1: k.representation = Representation::trivial(2, 2); break;
    case 2: k.representation = dihedral_representation(static_cast<unsigned>(p), false); break;
    default: k.representation = dihedral_representation(static_cast<unsigned>(p), true); break;
    }
    if (k.representation.name.empty()) k.representation.name = "trivial" + std::to_string(k.representation.dimension);
    k.label = k.presentation.name + " / " + k.representation.name;
    return k;
}

} // namespace alextor
