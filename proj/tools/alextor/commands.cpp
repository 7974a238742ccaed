#include "commands.hpp"

#include "alextor/errors.hpp"
#include "alextor/knots.hpp"
#include "alextor/mapping_torus.hpp"
#include "alextor/ruelle.hpp"
#include "alextor/verify.hpp"

#include <sstream>

namespace alextor::cli {

namespace {

constexpr int kDigits = 25;

Json opt_real(const std::optional<Real>& r) { return r ? to_json(*r, kDigits) : Json(nullptr); }

template <class T>
Json opt(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

std::string str(const std::optional<Real>& r) { return r ? r->to_string(kDigits) : "n/a"; }

Json matrix_json(const CycloMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        rows.push_back(row);
    }
    return rows;
}

Json unit_json(const std::optional<UnitClass>& u, unsigned bits)
{
    return u ? to_json(*u, bits) : Json(nullptr);
}

std::string unit_text(const UnitClass& u)
{
    return "(" + u.coefficient.to_string() + ")*t^" + std::to_string(u.exponent);
}

Json normalized_json(const RatFunc& f, unsigned bits)
{
    UnitNormalized n = unit_normalize(f);
    return Json{{"value", to_json(f)}, {"canonical", to_json(n.canonical)}, {"unit", to_json(n.unit, bits)}};
}

struct Loaded {
    Presentation presentation;
    Representation representation;
    Augmentation augmentation;
};

Loaded load_knot(const std::string& pres, const std::string& rep)
{
    Loaded l;
    l.presentation = load_presentation(pres);
    l.representation = load_representation(rep, l.presentation);
    l.augmentation = augmentation_for(l.presentation);
    return l;
}

Json knot_json(const Loaded& l)
{
    Json rels = Json::array();
    for (const auto& w : l.presentation.relators) rels.push_back(w.to_string(l.presentation.generators));
    return Json{{"presentation",
                 {{"name", l.presentation.name}, {"generators", l.presentation.generators}, {"relators", rels}}},
                {"representation",
                 {{"name", l.representation.name},
                  {"dimension", l.representation.dimension},
                  {"cyclotomic_order", l.representation.cyclotomic_order}}},
                {"augmentation", l.augmentation.values}};
}

std::string knot_text(const Loaded& l)
{
    std::ostringstream os;
    auto plural = [](std::size_t n, const std::string& w) { return std::to_string(n) + " " + w + (n == 1 ? "" : "s"); };
    os << "presentation: " << l.presentation.name << " (" << plural(l.presentation.rank(), "generator") << ", "
       << plural(l.presentation.relators.size(), "relator") << ")\n";
    os << "representation: " << l.representation.name << " (dimension " << l.representation.dimension
       << ", cyclotomic order " << l.representation.cyclotomic_order << ")\n";
    os << "augmentation:";
    for (std::size_t g = 0; g < l.presentation.rank(); ++g)
        os << (g ? ", " : " ") << l.presentation.generators[g] << " -> " << l.augmentation.values[g];
    os << "\n";
    return os.str();
}

Json cor_json(const Corollary41Report& r)
{
    return Json{{"verdict", to_string(r.verdict)},
                {"reason", r.reason},
                {"grading_note", r.grading_note},
                {"order_delta", opt(r.order_delta)},
                {"minus_order_astar", opt(r.minus_order_astar)},
                {"dim_h1", opt(r.dim_h1)},
                {"inequality", r.inequality},
                {"semisimple_at_one", r.semisimple_at_one},
                {"equality", r.equality},
                {"equality_matches_semisimplicity", r.equality_matches_semisimplicity},
                {"all_cohomology_vanishes", r.all_cohomology_vanishes},
                {"abs_torsion", opt_real(r.abs_torsion)},
                {"inverse_abs_delta_at_one", opt_real(r.inverse_abs_delta_at_one)},
                {"relative_error", opt_real(r.relative_error)}};
}

std::string cor_text(const Corollary41Report& r)
{
    std::ostringstream os;
    os << "order inequality at t = 1: " << to_string(r.verdict);
    if (!r.reason.empty()) os << " (" << r.reason << ")";
    os << "\n";
    if (r.verdict == Verdict::not_applicable) return os.str();
    os << "  ord Delta = " << *r.order_delta << ", -ord A* = " << *r.minus_order_astar << ", dim H^1(X) = " << *r.dim_h1
       << "\n";
    os << "  semisimple at 1: " << (r.semisimple_at_one ? "yes" : "no") << ", equality: " << (r.equality ? "yes" : "no")
       << "\n";
    if (r.all_cohomology_vanishes)
        os << "  all cohomology vanishes: |tau| = " << str(r.abs_torsion) << ", 1/|Delta(1)| = "
           << str(r.inverse_abs_delta_at_one) << ", relative error " << str(r.relative_error) << "\n";
    return os.str();
}

BasedComplex source_complex(const Source& src)
{
    if (!src.complex_path.empty()) {
        if (!src.presentation_path.empty() || !src.representation_path.empty())
            throw InputError("give either --complex or -p/-r, not both");
        return load_complex(src.complex_path);
    }
    if (src.presentation_path.empty() || src.representation_path.empty())
        throw InputError("need --complex FILE, or both -p and -r");
    Loaded l = load_knot(src.presentation_path, src.representation_path);
    return build_twisted_complex(l.presentation, l.representation, l.augmentation).complex;
}

Json homology_json(const HomologyData& h)
{
    Json degs = Json::array();
    for (const auto& d : h.degrees) {
        Json factors = Json::array();
        for (const auto& f : d.torsion) factors.push_back(to_json(f));
        degs.push_back(Json{{"degree", d.degree},
                            {"free_rank", d.free_rank},
                            {"invariant_factors", factors},
                            {"charpoly", to_json(d.charpoly)},
                            {"dimension", d.free_rank ? Json(nullptr) : Json(d.dimension())}});
    }
    return Json{{"grading", to_string(h.grading)}, {"torsion", h.is_torsion()}, {"degrees", degs}};
}

} // namespace

Output twisted_alexander(const std::string& pres, const std::string& rep, std::optional<std::size_t> column,
                         const Global& g)
{
    Loaded l = load_knot(pres, rep);
    const auto& p = l.presentation;
    if (column && (*column == 0 || *column > p.rank()))
        throw InputError("--column must lie in 1.." + std::to_string(p.rank()));

    ColumnCheck cols = column_independence_check(p, l.representation, l.augmentation);
    std::size_t j = 0;
    if (column) {
        j = *column - 1;
    } else {
        auto it = std::find_if(cols.columns.begin(), cols.columns.end(), [](const auto& c) { return c.admissible; });
        if (it == cols.columns.end()) throw HypothesisError("no column gives a nonsingular Kitano quotient");
        j = it->column;
    }
    KitanoResult k = twisted_alexander(p, l.representation, l.augmentation, j);
    Theorem41Check dual = theorem41_check(p, l.representation, l.augmentation);
    TwistedComplex tc = build_twisted_complex(p, l.representation, l.augmentation);
    Corollary41Report cor = corollary41_report(tc.complex, k.value, g.precision_bits);

    Output out;
    out.json = knot_json(l);
    out.json["report"] = "twisted-alexander";
    out.json["column"] = j + 1;
    out.json["numerator"] = to_json(k.numerator);
    out.json["denominator"] = to_json(k.denominator);
    out.json["delta"] = normalized_json(k.value, g.precision_bits);
    Json cj = Json::array();
    for (const auto& c : cols.columns)
        cj.push_back(Json{{"column", c.column + 1},
                          {"admissible", c.admissible},
                          {"reason", c.reason},
                          {"unit_to_first", unit_json(c.unit_to_first, g.precision_bits)}});
    out.json["column_independence"] = Json{{"all_equal", cols.all_equal}, {"columns", cj}};
    out.json["dual_torsion"] = Json{{"verdict", to_string(dual.verdict)},
                                    {"reason", dual.reason},
                                    {"torsion", to_json(dual.dual_torsion)},
                                    {"inverse_delta", to_json(dual.inverse_alexander)},
                                    {"unit", unit_json(dual.unit, g.precision_bits)}};
    out.json["order_inequality"] = cor_json(cor);

    std::ostringstream os;
    os << knot_text(l);
    os << "column: " << j + 1 << "\n";
    os << "twisted Alexander polynomial: " << k.normalized.canonical.to_string() << "\n";
    os << "  computed value: " << k.value.to_string() << " = " << unit_text(k.normalized.unit) << " * canonical\n";
    std::size_t admissible = std::count_if(cols.columns.begin(), cols.columns.end(), [](const auto& c) { return c.admissible; });
    os << "column independence: " << (cols.all_equal ? "holds" : "fails") << " (" << admissible
       << " admissible columns)\n";
    os << "dual torsion = unit / Delta: " << to_string(dual.verdict);
    if (dual.unit) os << " (unit " << unit_text(*dual.unit) << ")";
    if (!dual.reason.empty()) os << " (" << dual.reason << ")";
    os << "\n" << cor_text(cor);
    out.text = os.str();
    if (!cols.all_equal || dual.verdict == Verdict::fails || cor.verdict == Verdict::fails)
        out.exit_code = invariant_violation;
    return out;
}

Output torsion(const Source& src, const std::string& dual, const Global& g)
{
    BasedComplex c = source_complex(src);
    if (dual == "plain") c = dualize(c, DualKind::plain);
    else if (dual == "unitary") c = dualize(c, DualKind::unitary);
    else if (dual != "none") throw InputError("--dual must be none, plain or unitary");

    TorsionResult t = reidemeister_torsion(c);
    AlexanderConvention conv = matching_convention(c);
    RatFunc a = alexander_invariant(c, conv);
    DifferenceDelta d = difference_delta(c, g.precision_bits);
    Theorem32Check lim = theorem32_check(c, g.precision_bits);
    Specialization s = specialize_at_one(c);

    Output out;
    Json pivots = Json::array();
    for (const auto& p : t.certificate.pivots) pivots.push_back(p);
    out.json = Json{{"report", "torsion"},
                    {"grading", to_string(c.grading())},
                    {"dual", dual},
                    {"torsion", normalized_json(t.value, g.precision_bits)},
                    {"certificate", {{"min_degree", t.certificate.min_degree}, {"pivot_columns", pivots}}},
                    {"alexander", {{"convention", to_string(conv)}, {"value", normalized_json(a, g.precision_bits)}}},
                    {"difference",
                     {{"coefficient", d.coefficient.to_string()},
                      {"exponent", d.exponent},
                      {"delta_abs", to_json(d.delta_abs, kDigits)}}},
                    {"order_at_one", {{"torsion", order_at_one(t.value)}, {"alexander", order_at_one(a)}}},
                    {"leading_limit",
                     {{"beta", lim.beta},
                      {"orders_equal", lim.orders_equal},
                      {"torsion_side", to_json(lim.lhs, kDigits)},
                      {"alexander_side", to_json(lim.rhs, kDigits)},
                      {"relative_error", to_json(lim.relative_error, kDigits)},
                      {"pass", lim.pass}}},
                    {"specialization",
                     {{"precondition", s.precondition},
                      {"acyclic", s.acyclic},
                      {"torsion", s.torsion ? Json(s.torsion->to_string()) : Json(nullptr)},
                      {"tau_at_one", s.tau_at_one ? Json(s.tau_at_one->to_string()) : Json(nullptr)},
                      {"equal", s.equal},
                      {"note", s.note}}}};

    UnitNormalized tn = unit_normalize(t.value);
    std::ostringstream os;
    os << "grading: " << to_string(c.grading()) << (dual != "none" ? " (" + dual + " dual)" : "") << "\n";
    os << "torsion: " << tn.canonical.to_string() << "  [value " << t.value.to_string() << "]\n";
    os << "alexander invariant (" << to_string(conv) << "): " << a.to_string() << "\n";
    os << "difference: " << unit_text({d.exponent, d.coefficient}) << ", |delta| = " << d.delta_abs.to_string(kDigits)
       << "\n";
    os << "order at t = 1: " << lim.beta << " (torsion and alexander " << (lim.orders_equal ? "agree" : "differ")
       << ")\n";
    os << "leading limits: " << lim.lhs.to_string(kDigits) << " vs " << lim.rhs.to_string(kDigits)
       << ", relative error " << lim.relative_error.to_string(5) << "\n";
    os << "specialization at t = 1: ";
    if (!s.precondition) os << "skipped (" << s.note << ")\n";
    else os << (s.equal ? "torsion equals value at 1" : "MISMATCH") << " (" << s.torsion->to_string() << ")\n";
    out.text = os.str();
    if (!lim.pass || (s.precondition && !s.equal)) out.exit_code = invariant_violation;
    return out;
}

Output homology(const Source& src, const Global&)
{
    BasedComplex c = source_complex(src);
    HomologyData h = alextor::homology(c);
    Theorem31Report t = theorem31_report(c);
    auto dims = specialized_dimensions(c);

    Output out;
    Json dj = Json::object();
    for (auto [q, d] : t.dimensions) dj[std::to_string(q)] = d;
    Json checks = Json::array();
    for (const auto& [name, ok] : t.checks) checks.push_back(Json{{"check", name}, {"holds", ok}});
    Json sd = Json::object();
    for (auto [q, d] : dims) sd[std::to_string(q)] = d;
    out.json = Json{{"report", "homology"},
                    {"homology", homology_json(h)},
                    {"duality_dimensions",
                     {{"verdict", to_string(t.overall)}, {"reason", t.reason}, {"dimensions", dj}, {"checks", checks}}},
                    {"dimensions_at_one", sd}};

    std::ostringstream os;
    os << "grading: " << to_string(h.grading) << "\n";
    for (const auto& d : h.degrees) {
        os << "H_" << d.degree << ": ";
        if (d.free_rank) os << "free rank " << d.free_rank;
        if (d.torsion.empty() && !d.free_rank) os << "0";
        for (std::size_t i = 0; i < d.torsion.size(); ++i)
            os << (i || d.free_rank ? " + " : "") << "L/(" << d.torsion[i].to_string() << ")";
        os << "   charpoly " << d.charpoly.to_string() << "\n";
    }
    os << "duality of dimensions: " << to_string(t.overall);
    if (!t.reason.empty()) os << " (" << t.reason << ")";
    os << "\n";
    for (const auto& [name, ok] : t.checks) os << "  " << name << ": " << (ok ? "yes" : "no") << "\n";
    os << "dimensions at t = 1:";
    for (auto [q, d] : dims) os << " H_" << q << "=" << d;
    os << "\n";
    out.text = os.str();
    return out;
}

Output mapping_torus(const std::string& path, const Global& g)
{
    MonodromyInput m = load_monodromy(path);
    Output out;
    if (!m.h0_vanishes) {
        out.json = Json{{"report", "mapping-torus"}, {"name", m.name}, {"verdict", "not_applicable"},
                        {"reason", "input does not assert H^0(S, rho) = 0"}};
        out.text = "not applicable: input does not assert H^0(S, rho) = 0\n";
        out.exit_code = not_applicable;
        return out;
    }
    QuotientI q = quotient_I(m.F);
    Semisimplicity s = semisimplicity(m.F);
    MonodromyTorsion t = torsion_from_monodromy(m.F, g.precision_bits);
    RatFunc a = alexander_from_monodromy(m.F);
    Theorem35Report r = theorem35_report(m.F, true, g.precision_bits);

    Json factors = Json::array();
    for (const auto& f : s.invariant_factors) factors.push_back(to_json(f));
    out.json = Json{{"report", "mapping-torus"},
                    {"name", m.name},
                    {"cyclotomic_order", m.cyclotomic_order},
                    {"beta", q.beta},
                    {"quotient_dimension", q.i_dim},
                    {"induced_map", matrix_json(q.induced)},
                    {"semisimplicity",
                     {{"minimal_polynomial", to_json(s.minimal_polynomial)},
                      {"invariant_factors", factors},
                      {"global", s.global},
                      {"at_one", s.at_one}}},
                    {"torsion",
                     {{"det_f_minus_one_on_quotient",
                       t.det_f_minus_one_on_I ? Json(t.det_f_minus_one_on_I->to_string()) : Json(nullptr)},
                      {"abs_torsion", opt_real(t.abs_torsion)},
                      {"within_hypothesis", t.within_hypothesis},
                      {"note", t.note}}},
                    {"alexander", to_json(a)},
                    {"order_report",
                     {{"verdict", to_string(r.verdict)},
                      {"order_astar", r.order_astar},
                      {"minus_beta", -static_cast<int>(r.beta)},
                      {"order_equals_minus_beta", r.order_equals_minus_beta},
                      {"strict_inequality", r.strict_inequality},
                      {"limit_checked", r.limit_checked},
                      {"limit", opt_real(r.limit)},
                      {"abs_torsion", opt_real(r.abs_torsion)},
                      {"relative_error", opt_real(r.relative_error)}}}};

    std::ostringstream os;
    os << "monodromy: " << (m.name.empty() ? path : m.name) << " (dimension " << m.F.rows() << ")\n";
    os << "beta = dim Ker(F - 1) = " << q.beta << ", dim I = " << q.i_dim << "\n";
    os << "minimal polynomial: " << s.minimal_polynomial.to_string() << " (semisimple: " << (s.global ? "yes" : "no")
       << ", at 1: " << (s.at_one ? "yes" : "no") << ")\n";
    os << "A*(t) = " << a.to_string() << "\n";
    os << "|tau| = |det((F - 1)|_I)|^-1 = " << str(t.abs_torsion) << "\n";
    if (!t.note.empty()) os << "  note: " << t.note << "\n";
    os << "ord A* = " << r.order_astar << " vs -beta = " << -static_cast<int>(r.beta) << ": "
       << (r.order_equals_minus_beta ? "equality" : r.strict_inequality ? "strict inequality" : "VIOLATION") << "\n";
    if (r.limit_checked)
        os << "lim |(t - 1)^beta A*| = " << str(r.limit) << ", relative error to |tau| " << str(r.relative_error) << "\n";
    else
        os << "limit check skipped: not semisimple at eigenvalue 1\n";
    os << "verdict: " << to_string(r.verdict) << "\n";
    out.text = os.str();
    if (r.verdict == Verdict::fails) out.exit_code = invariant_violation;
    return out;
}

Output ruelle_predict(const std::vector<std::string>& from, const Global& g)
{
    if (from.empty()) throw InputError("--from needs 'mapping-torus FILE' or 'knot PRESENTATION REPRESENTATION'");
    Output out;
    std::ostringstream os;
    const unsigned bits = g.precision_bits;
    if (from[0] == "mapping-torus") {
        if (from.size() != 2) throw InputError("--from mapping-torus takes one file");
        MonodromyInput m = load_monodromy(from[1]);
        if (!m.h0_vanishes) {
            out.json = Json{{"report", "ruelle-predict"}, {"source", "mapping-torus"}, {"verdict", "not_applicable"},
                            {"reason", "input does not assert H^0(S, rho) = 0"}};
            out.text = "not applicable: input does not assert H^0(S, rho) = 0\n";
            out.exit_code = not_applicable;
            return out;
        }
        Theorem35Report r = theorem35_report(m.F, true, bits);
        MonodromyTorsion t = torsion_from_monodromy(m.F, bits);
        long beta = static_cast<long>(r.beta);
        int e = predict_order(0, beta);
        std::optional<Real> lead, alex, err;
        if (r.globally_semisimple && t.abs_torsion && r.limit) {
            lead = predict_leading_from_torsion(*t.abs_torsion);
            alex = *r.limit * *r.limit;
            err = relative_difference(*lead, *alex);
        }
        out.json = Json{{"report", "ruelle-predict"},
                        {"source", "mapping-torus"},
                        {"beta", beta},
                        {"order", e},
                        {"twice_order_astar", 2 * r.order_astar},
                        {"order_equality", e == 2 * r.order_astar},
                        {"globally_semisimple", r.globally_semisimple},
                        {"leading_from_torsion", opt_real(lead)},
                        {"leading_from_alexander", opt_real(alex)},
                        {"relative_error", opt_real(err)}};
        os << "beta = " << beta << "\n";
        os << "order at s = 0: " << e << " (2 ord A* = " << 2 * r.order_astar << ", "
           << (e == 2 * r.order_astar ? "equal" : "bound only") << ")\n";
        if (lead)
            os << "lim |s^(2 beta) R(s)| = |tau|^2 = " << str(lead) << "\n  Alexander side: " << str(alex)
               << ", relative error " << str(err) << "\n";
        else
            os << "leading constant: not predicted (monodromy not semisimple)\n";
        out.text = os.str();
        if (err && err->to_double() >= 1e-18) out.exit_code = invariant_violation;
        return out;
    }
    if (from[0] == "knot") {
        if (from.size() != 3) throw InputError("--from knot takes a presentation and a representation");
        Loaded l = load_knot(from[1], from[2]);
        TwistedComplex tc = build_twisted_complex(l.presentation, l.representation, l.augmentation);
        auto dims = specialized_dimensions(tc.complex);
        long h0 = static_cast<long>(dims[0]), h1 = static_cast<long>(dims[1]);
        int e = predict_order(h0, h1);
        out.json = knot_json(l);
        out.json["report"] = "ruelle-predict";
        out.json["source"] = "knot";
        out.json["dimensions"] = {{"h0", h0}, {"h1", h1}, {"h2", dims[2]}};
        out.json["order"] = e;
        os << knot_text(l);
        os << "dim H^0 = " << h0 << ", dim H^1 = " << h1 << ", dim H^2 = " << dims[2] << "\n";
        os << "order at s = 0: " << e << "\n";
        if (h0 != 0) {
            out.json["verdict"] = "not_applicable";
            out.json["reason"] = "H^0(X, rho) does not vanish";
            os << "not applicable: H^0(X, rho) does not vanish\n";
            out.text = os.str();
            out.exit_code = not_applicable;
            return out;
        }
        KitanoResult k = twisted_alexander(l.presentation, l.representation, l.augmentation, 0);
        Corollary41Report cor = corollary41_report(tc.complex, k.value, bits);
        BasedComplex dual = dualize(tc.complex, DualKind::plain);
        RatFunc astar = alexander_invariant(dual, AlexanderConvention::cochain);
        int ord = order_at_one(astar);
        out.json["twice_order_astar"] = 2 * ord;
        out.json["order_equality"] = e == 2 * ord;
        os << "2 ord A* = " << 2 * ord << " (" << (e == 2 * ord ? "equal" : "bound only") << ")\n";
        bool vanish = dims[0] == 0 && dims[1] == 0 && dims[2] == 0 && dims[3] == 0;
        if (vanish && cor.abs_torsion) {
            DifferenceDelta d = difference_delta(dual, bits);
            Real a1 = astar.evaluate(CycloNumber(1L))->embed(bits).modulus();
            Real via_alexander = predict_R0_from_alexander(d.delta_abs, a1);
            Real via_torsion = predict_leading_from_torsion(*cor.abs_torsion);
            Real err = relative_difference(via_alexander, via_torsion);
            out.json["R0_from_alexander"] = to_json(via_alexander, kDigits);
            out.json["R0_from_torsion"] = to_json(via_torsion, kDigits);
            out.json["delta_abs"] = to_json(d.delta_abs, kDigits);
            out.json["relative_error"] = to_json(err, kDigits);
            os << "|R(0)| = (|delta| |A*(1)|)^2 = " << via_alexander.to_string(kDigits) << "\n";
            os << "|R(0)| = |tau|^2 = " << via_torsion.to_string(kDigits) << ", relative error " << err.to_string(5)
               << "\n";
            if (err.to_double() >= 1e-18) out.exit_code = invariant_violation;
        } else {
            out.json["R0_from_alexander"] = nullptr;
            out.json["R0_from_torsion"] = nullptr;
            os << "|R(0)|: not predicted (cohomology does not vanish)\n";
        }
        out.text = os.str();
        return out;
    }
    throw InputError("--from must be 'mapping-torus' or 'knot', got '" + from[0] + "'");
}

Output ruelle_truncate(const std::string& spectrum, const std::string& s, const std::string& max_length,
                       const Global& g)
{
    const unsigned bits = g.precision_bits;
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("-s expects RE,IM");
    Complex sv;
    Real cutoff;
    try {
        sv = Complex(Real::from_string(s.substr(0, comma), bits), Real::from_string(s.substr(comma + 1), bits));
        cutoff = Real::from_string(max_length, bits);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    LengthSpectrum spec = load_spectrum(spectrum, bits);
    TruncatedValue v = evaluate_truncated(spec, sv, cutoff, bits);
    Output out;
    out.json = Json{{"report", "ruelle-truncate"},
                    {"s", {to_json(sv.re, kDigits), to_json(sv.im, kDigits)}},
                    {"max_length", to_json(cutoff, kDigits)},
                    {"terms_used", v.terms_used},
                    {"value", {to_json(v.value.re, kDigits), to_json(v.value.im, kDigits)}},
                    {"abs_value", to_json(v.value.modulus(), kDigits)},
                    {"last_factor_deviation", to_json(v.last_factor_deviation, kDigits)},
                    {"note", "partial Euler product; no statement about s = 0 is derived from it"}};
    std::ostringstream os;
    os << "partial product over " << v.terms_used << " entries with length <= " << cutoff.to_string(10) << "\n";
    os << "value: " << v.value.to_string(kDigits) << "\n";
    os << "|last factor - 1| = " << v.last_factor_deviation.to_string(5) << "\n";
    out.text = os.str();
    return out;
}

Output verify(const VerifyArgs& a, const Global& g)
{
    VerifyOptions o;
    o.seed = a.seed;
    o.suite = a.suite;
    o.threads = a.threads;
    o.precision_bits = g.precision_bits;
    if (a.complexes) o.complexes = a.complexes;
    if (a.monodromies) o.monodromies = a.monodromies;
    if (a.jordans) o.jordans = a.jordans;
    if (a.knots) o.knots = a.knots;
    if (a.words) o.words = a.words;
    VerificationRun run = verify_suite(o);
    if (!run.ok()) save_artifacts(run, a.artifacts);

    Output out;
    out.json = to_json(run);
    std::ostringstream os;
    os << "seed " << o.seed << ", suite " << o.suite << "\n";
    for (const auto& p : run.properties) {
        os << (p.failed ? "FAIL " : "ok   ") << p.name << ": " << p.passed << " passed";
        if (p.skipped) os << ", " << p.skipped << " skipped";
        if (p.failed) os << ", " << p.failed << " failed";
        os << "\n";
        for (const auto& f : p.failures) os << "       " << f << "\n";
    }
    if (!run.ok()) os << "failure artifacts written to " << a.artifacts << "\n";
    os << (run.ok() ? "all properties pass\n" : "some properties FAILED\n");
    out.text = os.str();
    if (!run.ok()) out.exit_code = invariant_violation;
    return out;
}

} // namespace alextor::cli
