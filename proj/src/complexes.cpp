#include "alextor/complexes.hpp"

#include "alextor/errors.hpp"

#include <algorithm>

namespace alextor {

std::string to_string(Grading g) { return g == Grading::chain ? "chain" : "cochain"; }
std::string to_string(AlexanderConvention c) { return c == AlexanderConvention::chain ? "chain" : "cochain"; }

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "not_applicable";
    }
}

BasedComplex::BasedComplex(int min_degree, std::vector<std::size_t> ranks, std::map<int, LaurentMatrix> boundaries,
                           Grading grading, std::vector<std::vector<std::string>> labels)
    : min_degree_(min_degree), ranks_(std::move(ranks)), labels_(std::move(labels)), grading_(grading)
{
    if (ranks_.empty()) throw InputError("a complex needs at least one degree");
    for (const auto& [j, m] : boundaries)
        if ((j <= min_degree_ || j > max_degree()) && !m.is_zero())
            throw InputError("nonzero boundary in degree " + std::to_string(native_degree(j)) +
                             " lies outside the degree range");
    boundaries_.emplace_back(0, rank(min_degree_));
    for (int j = min_degree_ + 1; j <= max_degree(); ++j) {
        auto it = boundaries.find(j);
        LaurentMatrix m = it == boundaries.end() ? LaurentMatrix(rank(j - 1), rank(j)) : it->second;
        if (m.rows() != rank(j - 1) || m.cols() != rank(j))
            throw InputError("boundary in degree " + std::to_string(native_degree(j)) + " has shape " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                             std::to_string(rank(j - 1)) + "x" + std::to_string(rank(j)));
        for (const auto& e : m.data()) order_ = lcm_order(order_, e.cyclotomic_order());
        boundaries_.push_back(std::move(m));
    }
    boundaries_.emplace_back(rank(max_degree()), 0);
    for (int j = min_degree_ + 2; j <= max_degree(); ++j)
        if (!(boundary(j - 1) * boundary(j)).is_zero())
            throw InputError("boundaries compose to a nonzero map at degree " + std::to_string(native_degree(j)));
    if (labels_.empty()) {
        for (int j = min_degree_; j <= max_degree(); ++j) {
            std::vector<std::string> l;
            for (std::size_t i = 0; i < rank(j); ++i)
                l.push_back("c" + std::to_string(native_degree(j)) + "_" + std::to_string(i));
            labels_.push_back(std::move(l));
        }
    } else if (labels_.size() != ranks_.size()) {
        throw InputError("label list does not cover every degree");
    } else {
        for (std::size_t i = 0; i < ranks_.size(); ++i)
            if (labels_[i].size() != ranks_[i]) throw InputError("label count does not match rank");
    }
}

std::size_t BasedComplex::rank(int j) const
{
    if (j < min_degree_ || j > max_degree()) return 0;
    return ranks_[static_cast<std::size_t>(j - min_degree_)];
}

const LaurentMatrix& BasedComplex::boundary(int j) const
{
    static const LaurentMatrix none;
    if (j < min_degree_ || j > max_degree() + 1) return none;
    return boundaries_[static_cast<std::size_t>(j - min_degree_)];
}

const std::vector<std::string>& BasedComplex::labels(int j) const
{
    static const std::vector<std::string> none;
    if (j < min_degree_ || j > max_degree()) return none;
    return labels_[static_cast<std::size_t>(j - min_degree_)];
}

bool HomologyData::is_torsion() const { return !non_torsion_degree().has_value(); }

std::optional<int> HomologyData::non_torsion_degree() const
{
    for (const auto& d : degrees)
        if (d.free_rank > 0) return d.degree;
    return std::nullopt;
}

const HomologyDegree* HomologyData::at(int native_degree) const
{
    for (const auto& d : degrees)
        if (d.degree == native_degree) return &d;
    return nullptr;
}

HomologyData homology(const BasedComplex& c)
{
    HomologyData out;
    out.grading = c.grading();
    // ranks[j] = rank d_j over K(t); snf of d_{j+1} gives the torsion of H_j.
    std::map<int, SNFResult> snf;
    for (int j = c.min_degree() + 1; j <= c.max_degree(); ++j) snf.emplace(j, smith_normal_form(c.boundary(j)));
    auto rank_of = [&](int j) -> std::size_t {
        auto it = snf.find(j);
        return it == snf.end() ? 0 : it->second.rank();
    };
    for (int j = c.min_degree(); j <= c.max_degree(); ++j) {
        HomologyDegree h;
        h.degree = c.native_degree(j);
        h.free_rank = c.rank(j) - rank_of(j) - rank_of(j + 1);
        auto it = snf.find(j + 1);
        if (it != snf.end())
            for (const auto& d : it->second.invariant_factors()) {
                LaurentPoly f = d.stripped().monic();
                if (f.is_constant()) continue;
                h.torsion.push_back(f);
                h.charpoly *= f;
            }
        out.degrees.push_back(std::move(h));
    }
    return out;
}

RatFunc alexander_invariant(const HomologyData& h, AlexanderConvention convention)
{
    if (auto bad = h.non_torsion_degree())
        throw HypothesisError("homology in degree " + std::to_string(*bad) + " is not a torsion module");
    RatFunc a(1L);
    for (const auto& d : h.degrees) {
        if (d.degree % 2 == 0)
            a *= RatFunc(d.charpoly);
        else
            a /= RatFunc(d.charpoly);
    }
    return convention == AlexanderConvention::chain ? a : a.inverse();
}

RatFunc alexander_invariant(const BasedComplex& c, AlexanderConvention convention)
{
    return alexander_invariant(homology(c), convention);
}

AlexanderConvention matching_convention(const BasedComplex& c)
{
    return c.grading() == Grading::chain ? AlexanderConvention::chain : AlexanderConvention::cochain;
}

namespace {

std::vector<std::size_t> pivots_of(const LaurentMatrix& m) { return pivot_columns(m); }
std::vector<std::size_t> pivots_of(const CycloMatrix& m) { return rref(m).pivot_cols; }

// Pivot sets S_j and the square matrices M_j for chain indices lo..hi, where
// d(j) returns d_j. Throws HypothesisError when not acyclic.
template <class T, class BoundaryFn>
std::pair<std::vector<std::vector<std::size_t>>, std::vector<Matrix<T>>>
torsion_blocks(int lo, int hi, const std::vector<std::size_t>& ranks, BoundaryFn d, Grading grading,
               const std::string& field)
{
    auto n = [&](int j) { return ranks[static_cast<std::size_t>(j - lo)]; };
    std::vector<std::vector<std::size_t>> s(static_cast<std::size_t>(hi - lo + 2));
    for (int j = lo + 1; j <= hi; ++j) s[static_cast<std::size_t>(j - lo)] = pivots_of(d(j));
    auto S = [&](int j) -> const std::vector<std::size_t>& { return s[static_cast<std::size_t>(j - lo)]; };
    for (int j = lo; j <= hi; ++j)
        if (S(j).size() + S(j + 1).size() != n(j)) {
            int deg = grading == Grading::chain ? j : -j;
            throw HypothesisError("complex is not acyclic over " + field + " in degree " + std::to_string(deg));
        }
    std::vector<Matrix<T>> blocks;
    for (int j = lo; j <= hi; ++j) {
        Matrix<T> m(n(j), n(j));
        std::size_t col = 0;
        for (auto p : S(j)) m(p, col++) = T(1L);
        if (j < hi) {
            Matrix<T> next = d(j + 1);
            for (auto p : S(j + 1)) {
                for (std::size_t i = 0; i < n(j); ++i) m(i, col) = next(i, p);
                ++col;
            }
        }
        blocks.push_back(std::move(m));
    }
    s.pop_back();
    return {std::move(s), std::move(blocks)};
}

template <class T>
Matrix<T> block_diagonal(const std::vector<const Matrix<T>*>& blocks)
{
    std::size_t n = 0;
    for (auto* b : blocks) n += b->rows();
    Matrix<T> out(n, n);
    std::size_t off = 0;
    for (auto* b : blocks) {
        for (std::size_t i = 0; i < b->rows(); ++i)
            for (std::size_t j = 0; j < b->cols(); ++j) out(off + i, off + j) = (*b)(i, j);
        off += b->rows();
    }
    return out;
}

std::vector<std::size_t> ranks_of(const BasedComplex& c)
{
    std::vector<std::size_t> r;
    for (int j = c.min_degree(); j <= c.max_degree(); ++j) r.push_back(c.rank(j));
    return r;
}

bool even(int j) { return j % 2 == 0; }

} // namespace

TorsionResult reidemeister_torsion(const BasedComplex& c)
{
    int lo = c.min_degree(), hi = c.max_degree();
    auto [pivots, blocks] = torsion_blocks<LaurentPoly>(lo, hi, ranks_of(c), [&](int j) { return c.boundary(j); },
                                                        c.grading(), "K(t)");
    RatFunc num(1L), den(1L);
    std::vector<const LaurentMatrix*> ev, od;
    for (int j = lo; j <= hi; ++j) {
        const auto& m = blocks[static_cast<std::size_t>(j - lo)];
        LaurentPoly d = det(m);
        if (d.is_zero()) throw InvariantViolation("singular torsion block in an acyclic complex");
        if (even(j)) {
            num *= RatFunc(d);
            ev.push_back(&m);
        } else {
            den *= RatFunc(d);
            od.push_back(&m);
        }
    }
    TorsionResult out;
    out.value = c.grading() == Grading::chain ? num / den : den / num;
    out.certificate.min_degree = lo;
    out.certificate.pivots = pivots;
    out.certificate.even = block_diagonal(ev);
    out.certificate.odd = block_diagonal(od);
    out.certificate.grading = c.grading();
    return out;
}

RatFunc replay_torsion(const BasedComplex& c, const TorsionCertificate& cert)
{
    int lo = c.min_degree(), hi = c.max_degree();
    if (cert.min_degree != lo || cert.pivots.size() != static_cast<std::size_t>(hi - lo + 1) ||
        cert.grading != c.grading())
        throw InvariantViolation("torsion certificate does not match the complex");
    std::vector<LaurentMatrix> blocks;
    for (int j = lo; j <= hi; ++j) {
        const auto& sj = cert.pivots[static_cast<std::size_t>(j - lo)];
        std::size_t n = c.rank(j);
        std::size_t next = j < hi ? cert.pivots[static_cast<std::size_t>(j + 1 - lo)].size() : 0;
        if (sj.size() + next != n) throw InvariantViolation("torsion certificate pivot sets have the wrong sizes");
        LaurentMatrix m(n, n);
        std::size_t col = 0;
        for (auto p : sj) m(p, col++) = LaurentPoly(1L);
        if (j < hi) {
            LaurentMatrix d = c.boundary(j + 1);
            for (auto p : cert.pivots[static_cast<std::size_t>(j + 1 - lo)]) {
                for (std::size_t i = 0; i < n; ++i) m(i, col) = d(i, p);
                ++col;
            }
        }
        blocks.push_back(std::move(m));
    }
    std::vector<const LaurentMatrix*> ev, od;
    for (int j = lo; j <= hi; ++j) (even(j) ? ev : od).push_back(&blocks[static_cast<std::size_t>(j - lo)]);
    if (!(block_diagonal(ev) == cert.even) || !(block_diagonal(od) == cert.odd))
        throw InvariantViolation("torsion certificate matrices do not match the complex");
    LaurentPoly de = det(cert.even), dodd = det(cert.odd);
    if (de.is_zero() || dodd.is_zero()) throw InvariantViolation("torsion certificate matrix is singular");
    RatFunc v(de, dodd);
    return cert.grading == Grading::chain ? v : v.inverse();
}

DifferenceDelta difference_delta(const BasedComplex& c, unsigned precision_bits)
{
    RatFunc tau = reidemeister_torsion(c).value;
    RatFunc a = alexander_invariant(c, matching_convention(c));
    auto u = unit_ratio(tau, a);
    if (!u)
        throw InvariantViolation("torsion " + tau.to_string() + " and Alexander invariant " + a.to_string() +
                                 " do not generate the same fractional ideal");
    DifferenceDelta out;
    out.coefficient = u->coefficient;
    out.exponent = u->exponent;
    out.delta_abs = u->coefficient.embed(precision_bits).modulus();
    return out;
}

BasedComplex dualize(const BasedComplex& c, DualKind kind)
{
    // D_j = (C_{-j})^*, with d^D_j the (conjugate) transpose of d^C_{1-j}.
    int lo = -c.max_degree(), hi = -c.min_degree();
    std::vector<std::size_t> ranks;
    std::vector<std::vector<std::string>> labels;
    for (int j = lo; j <= hi; ++j) {
        ranks.push_back(c.rank(-j));
        std::vector<std::string> l;
        for (const auto& s : c.labels(-j)) {
            bool starred = !s.empty() && s.back() == '*';
            l.push_back(starred ? s.substr(0, s.size() - 1) : s + "*");
        }
        labels.push_back(std::move(l));
    }
    std::map<int, LaurentMatrix> bd;
    for (int j = lo + 1; j <= hi; ++j) {
        LaurentMatrix m = c.boundary(1 - j);
        bd.emplace(j, kind == DualKind::plain ? m.transposed() : conjugate_transpose(m));
    }
    Grading g = c.grading() == Grading::chain ? Grading::cochain : Grading::chain;
    return BasedComplex(lo, std::move(ranks), std::move(bd), g, std::move(labels));
}

Specialization specialize_at_one(const BasedComplex& c)
{
    Specialization out;
    const CycloNumber one(1L);
    for (int j = c.min_degree() + 1; j <= c.max_degree(); ++j) out.boundaries.push_back(evaluate(c.boundary(j), one));

    HomologyData h = homology(c);
    out.precondition = h.is_torsion();
    for (const auto& d : h.degrees)
        for (const auto& f : d.torsion)
            if (f.evaluate(one).is_zero()) out.precondition = false;

    int lo = c.min_degree(), hi = c.max_degree();
    auto d = [&](int j) -> CycloMatrix {
        if (j <= lo || j > hi) return CycloMatrix(c.rank(j - 1), c.rank(j));
        return out.boundaries[static_cast<std::size_t>(j - lo - 1)];
    };
    try {
        auto [pivots, blocks] = torsion_blocks<CycloNumber>(lo, hi, ranks_of(c), d, c.grading(), "K at t = 1");
        out.acyclic = true;
        CycloNumber num(1L), den(1L);
        for (int j = lo; j <= hi; ++j) {
            CycloNumber v = field_det(blocks[static_cast<std::size_t>(j - lo)]);
            (even(j) ? num : den) *= v;
        }
        out.torsion = c.grading() == Grading::chain ? num / den : den / num;
    } catch (const HypothesisError& e) {
        out.acyclic = false;
        out.note = e.what();
    }
    if (!out.precondition) {
        if (out.note.empty()) out.note = "t - 1 divides an invariant factor of the homology; comparison skipped";
        else out.note = "t - 1 divides an invariant factor of the homology; " + out.note;
        return out;
    }
    if (!out.acyclic) throw InvariantViolation("specialization at t = 1 is not acyclic although t - 1 avoids the homology");
    out.tau_at_one = reidemeister_torsion(c).value.evaluate(one);
    if (!out.tau_at_one) throw InvariantViolation("torsion has a pole at t = 1 although t - 1 avoids the homology");
    out.equal = *out.tau_at_one == *out.torsion;
    return out;
}

std::map<int, std::size_t> specialized_dimensions(const BasedComplex& c)
{
    const CycloNumber one(1L);
    auto rank_at_one = [&](int j) -> std::size_t {
        if (j <= c.min_degree() || j > c.max_degree()) return 0;
        return field_rank(evaluate(c.boundary(j), one));
    };
    std::map<int, std::size_t> out;
    for (int j = c.min_degree(); j <= c.max_degree(); ++j)
        out[c.native_degree(j)] = c.rank(j) - rank_at_one(j) - rank_at_one(j + 1);
    return out;
}

Theorem31Report theorem31_report(const BasedComplex& c)
{
    Theorem31Report r;
    int lo = std::min(c.native_degree(c.min_degree()), c.native_degree(c.max_degree()));
    int hi = std::max(c.native_degree(c.min_degree()), c.native_degree(c.max_degree()));
    if (lo < 0 || hi > 3) {
        r.reason = "degrees " + std::to_string(lo) + ".." + std::to_string(hi) + " do not fit a 3-dimensional complex";
        return r;
    }
    HomologyData h = homology(c);
    if (auto bad = h.non_torsion_degree()) {
        r.reason = "homology in degree " + std::to_string(*bad) + " is not a torsion module";
        return r;
    }
    for (int q = 0; q <= 3; ++q) {
        const HomologyDegree* d = h.at(q);
        r.dimensions[q] = d ? d->dimension() : 0;
    }
    r.checks.emplace_back("dim H^3 = 0", r.dimensions[3] == 0);
    r.checks.emplace_back("dim H^0 = dim H^2", r.dimensions[0] == r.dimensions[2]);
    r.checks.emplace_back("dim H^1 = dim H^1", true);
    bool all = std::all_of(r.checks.begin(), r.checks.end(), [](const auto& p) { return p.second; });
    r.overall = all ? Verdict::holds : Verdict::fails;
    return r;
}

Theorem32Check theorem32_check(const BasedComplex& c, unsigned precision_bits, double tolerance)
{
    Theorem32Check out;
    RatFunc tau = reidemeister_torsion(c).value;
    RatFunc a = alexander_invariant(c, matching_convention(c));
    DifferenceDelta delta = difference_delta(c, precision_bits);
    out.beta = order_at_one(tau);
    out.orders_equal = out.beta == order_at_one(a);
    out.lhs = leading_at_one(tau).embed(precision_bits).modulus();
    out.rhs = delta.delta_abs * leading_at_one(a).embed(precision_bits).modulus();
    out.relative_error = relative_difference(out.lhs, out.rhs);
    out.pass = out.orders_equal && out.relative_error.to_double() < tolerance;
    return out;
}

} // namespace alextor
