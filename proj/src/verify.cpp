#include "alextor/verify.hpp"

#include "alextor/corpus.hpp"
#include "alextor/errors.hpp"
#include "alextor/knots.hpp"
#include "alextor/mapping_torus.hpp"
#include "alextor/ruelle.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

namespace alextor {

namespace {

constexpr std::size_t kMaxFailureMessages = 5;

enum class Outcome { pass, fail, skip };

struct Check {
    std::string property;
    Outcome outcome;
    std::string message;
};

struct ItemResult {
    std::vector<Check> checks;
    std::optional<Json> artifact;

    void add(const std::string& property, bool ok, const std::string& message = {})
    {
        checks.push_back({property, ok ? Outcome::pass : Outcome::fail, ok ? std::string() : message});
    }
    void skip(const std::string& property) { checks.push_back({property, Outcome::skip, {}}); }
};

using ItemFn = std::function<ItemResult(std::size_t)>;

std::vector<ItemResult> run_parallel(std::size_t n, unsigned threads, const ItemFn& fn)
{
    std::vector<ItemResult> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (const std::exception& e) {
                out[i].checks.push_back({"no_exception", Outcome::fail, e.what()});
            }
        }
    };
    unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    t = static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(n, 1)));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

class Collector {
public:
    void merge(const std::string& suite, const std::vector<ItemResult>& items, std::vector<Artifact>& artifacts)
    {
        for (std::size_t i = 0; i < items.size(); ++i) {
            bool failed = false;
            for (const auto& c : items[i].checks) {
                auto& p = get(suite + "." + c.property);
                if (c.outcome == Outcome::pass) ++p.passed;
                if (c.outcome == Outcome::skip) ++p.skipped;
                if (c.outcome == Outcome::fail) {
                    ++p.failed;
                    failed = true;
                    if (p.failures.size() < kMaxFailureMessages)
                        p.failures.push_back("item " + std::to_string(i) + ": " + c.message);
                }
            }
            if (failed && items[i].artifact)
                artifacts.push_back({suite + "-" + std::to_string(i), *items[i].artifact});
        }
    }

    std::vector<PropertyResult> take() { return std::move(results_); }

private:
    PropertyResult& get(const std::string& name)
    {
        auto it = index_.find(name);
        if (it != index_.end()) return results_[it->second];
        index_[name] = results_.size();
        PropertyResult p;
        p.name = name;
        results_.push_back(std::move(p));
        return results_.back();
    }

    std::map<std::string, std::size_t> index_;
    std::vector<PropertyResult> results_;
};

Rng suite_rng(std::uint64_t seed, std::uint64_t suite_id)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(suite_id)};
    return Rng(seq);
}

bool below(const Real& r, double tol) { return r.to_double() < tol; }

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

// Flips one entry of some d_j whose change is seen by d_{j-1}; returns false if no such entry exists.
bool mutation_detected(const BasedComplex& c, bool& applicable)
{
    applicable = false;
    for (int j = c.min_degree() + 2; j <= c.max_degree(); ++j) {
        const LaurentMatrix& below_map = c.boundary(j - 1);
        const LaurentMatrix& d = c.boundary(j);
        for (std::size_t r = 0; r < d.rows(); ++r) {
            bool seen = false;
            for (std::size_t k = 0; k < below_map.rows(); ++k)
                if (!below_map(k, r).is_zero()) seen = true;
            if (!seen || d.cols() == 0) continue;
            applicable = true;
            std::map<int, LaurentMatrix> bd;
            for (int q = c.min_degree() + 1; q <= c.max_degree(); ++q) bd.emplace(q, c.boundary(q));
            bd.at(j)(r, 0) += LaurentPoly(1L);
            std::vector<std::size_t> ranks;
            for (int q = c.min_degree(); q <= c.max_degree(); ++q) ranks.push_back(c.rank(q));
            try {
                BasedComplex(c.min_degree(), ranks, bd);
            } catch (const InputError&) {
                return true;
            }
            return false;
        }
    }
    return false;
}

ItemResult check_complex(const BasedComplex& c, const LaurentPoly& unit, unsigned bits)
{
    ItemResult r;
    r.artifact = complex_to_json(c);
    HomologyData h = homology(c);
    r.add("torsion_homology", h.is_torsion(), "generator produced non-torsion homology");
    if (!h.is_torsion()) return r;

    TorsionResult tau = reidemeister_torsion(c);
    RatFunc a = alexander_invariant(c, matching_convention(c));
    r.add("ideal_equality", unit_ratio(tau.value, a).has_value(),
          "tau / A is not a unit: tau = " + tau.value.to_string() + ", A = " + a.to_string());
    r.add("order_equality", order_at_one(tau.value) == order_at_one(a), "orders at t = 1 differ");
    r.add("certificate_replay", replay_torsion(c, tau.certificate) == tau.value, "replayed torsion differs");
    r.add("unit_order_invariance", order_at_one(tau.value * RatFunc(unit)) == order_at_one(tau.value),
          "a unit changed the order at t = 1");

    Specialization s = specialize_at_one(c);
    if (s.precondition) r.add("specialization", s.acyclic && s.equal, "specialized torsion differs: " + s.note);
    else r.skip("specialization");

    RatFunc achain = alexander_invariant(c, AlexanderConvention::chain);
    BasedComplex dp = dualize(c, DualKind::plain);
    BasedComplex du = dualize(c, DualKind::unitary);
    r.add("duality_plain", alexander_invariant(dp, AlexanderConvention::chain) * achain == RatFunc(1L),
          "A(C) A(dual C) != 1");
    r.add("duality_unitary",
          alexander_invariant(du, AlexanderConvention::chain) * achain.conjugated() == RatFunc(1L),
          "A(dual C) conj(A(C)) != 1");
    r.add("dual_involution", complex_to_json(dualize(du, DualKind::unitary)) == complex_to_json(c),
          "dualizing twice changed the complex");

    Theorem32Check t32 = theorem32_check(c, bits);
    r.add("leading_limit", t32.pass, "relative error " + t32.relative_error.to_string(5));

    bool applicable = false;
    bool caught = mutation_detected(c, applicable);
    if (applicable) r.add("mutation_detected", caught, "flipped entry passed construction");
    else r.skip("mutation_detected");
    return r;
}

ItemResult check_semisimple(const CycloMatrix& f, const CycloMatrix& p, unsigned bits)
{
    ItemResult r;
    r.artifact = Json{{"F", matrix_json(f)}, {"kind", "semisimple"}};
    QuotientI q = quotient_I(f);
    int beta = static_cast<int>(q.beta);
    RatFunc astar = alexander_from_monodromy(f);
    r.add("order_equals_minus_beta", order_at_one(astar) == -beta,
          "ord A* = " + std::to_string(order_at_one(astar)) + ", beta = " + std::to_string(beta));
    Theorem35Report t = theorem35_report(f, true, bits);
    r.add("torsion_limit", t.verdict == Verdict::holds && t.limit_checked && below(*t.relative_error, 1e-20),
          "limit check failed");
    MonodromyTorsion mt = torsion_from_monodromy(f, bits);
    CycloMatrix g = p * f * field_inverse(p);
    r.add("base_change_invariance",
          torsion_from_monodromy(g, bits).det_f_minus_one_on_I == mt.det_f_minus_one_on_I,
          "det((F - 1)|_I) changed under conjugation");
    r.add("ruelle_order", predict_order(0, beta) == 2 * order_at_one(astar), "predicted order mismatch");
    if (mt.abs_torsion && t.limit) {
        Real lhs = predict_leading_from_torsion(*mt.abs_torsion);
        Real rhs = *t.limit * *t.limit;
        r.add("ruelle_leading", below(relative_difference(lhs, rhs), 1e-18),
              "relative error " + relative_difference(lhs, rhs).to_string(5));
    } else {
        r.add("ruelle_leading", false, "torsion undefined for a semisimple F");
    }
    return r;
}

ItemResult check_jordan(const CycloMatrix& f, unsigned bits)
{
    ItemResult r;
    r.artifact = Json{{"F", matrix_json(f)}, {"kind", "jordan"}};
    Theorem35Report t = theorem35_report(f, true, bits);
    r.add("strict_inequality", t.strict_inequality && !t.semisimple_at_one && t.verdict == Verdict::holds,
          "expected ord A* < -beta");
    r.add("ruelle_order_bound", predict_order(0, static_cast<long>(t.beta)) > 2 * t.order_astar,
          "expected -2 beta > 2 ord A*");
    return r;
}

Json knot_artifact(const KnotCase& k)
{
    Json rels = Json::array();
    for (const auto& w : k.presentation.relators) rels.push_back(w.to_string(k.presentation.generators));
    Json mats = Json::object();
    for (std::size_t g = 0; g < k.representation.matrices.size(); ++g)
        mats[k.presentation.generators[g]] = matrix_json(k.representation.matrices[g]);
    return Json{{"label", k.label},
                {"generators", k.presentation.generators},
                {"relators", rels},
                {"cyclotomic_order", k.representation.cyclotomic_order},
                {"matrices", mats}};
}

ItemResult check_knot(const KnotCase& k, unsigned bits)
{
    ItemResult r;
    r.artifact = knot_artifact(k);
    const Presentation& p = k.presentation;
    const Representation& rho = k.representation;
    Augmentation eps = augmentation_for(p);
    TwistedComplex tc = build_twisted_complex(p, rho, eps);
    const BasedComplex& c = tc.complex;
    r.add("boundary_composition", (c.boundary(1) * c.boundary(2)).is_zero(), "d1 d2 != 0");

    ColumnCheck cols = column_independence_check(p, rho, eps);
    r.add("kitano_column_independence", cols.all_equal, "columns disagree");
    KitanoResult kr = twisted_alexander(p, rho, eps, 0);

    Theorem41Check t41 = theorem41_check(p, rho, eps);
    r.add("dual_torsion_inverse", t41.verdict == Verdict::holds, t41.reason);

    Corollary41Report cor = corollary41_report(c, kr.value, bits);
    if (cor.verdict == Verdict::not_applicable) {
        r.skip("order_inequality");
        r.skip("duality_dimensions");
    } else {
        r.add("order_inequality", cor.verdict == Verdict::holds, cor.reason);
        Theorem31Report t31 = theorem31_report(c);
        r.add("duality_dimensions", t31.overall == Verdict::holds, t31.reason);
    }

    if (cor.all_cohomology_vanishes && cor.abs_torsion) {
        r.add("acyclic_value", below(*cor.relative_error, 1e-20),
              "|tau| vs 1/|Delta(1)| relative error " + cor.relative_error->to_string(5));
        BasedComplex dual = dualize(c, DualKind::plain);
        DifferenceDelta delta = difference_delta(dual, bits);
        auto a1 = alexander_invariant(dual, AlexanderConvention::cochain).evaluate(CycloNumber(1L));
        if (!a1) {
            r.add("ruelle_two_routes", false, "A*(1) undefined although all cohomology vanishes");
        } else {
            Real via_alexander = predict_R0_from_alexander(delta.delta_abs, a1->embed(bits).modulus());
            Real via_torsion = predict_leading_from_torsion(*cor.abs_torsion);
            Real err = relative_difference(via_alexander, via_torsion);
            r.add("ruelle_two_routes", below(err, 1e-18), "relative error " + err.to_string(5));
        }
    } else {
        r.skip("acyclic_value");
        r.skip("ruelle_two_routes");
    }
    return r;
}

FreeWord random_word(Rng& rng, std::size_t k, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len), gen(0, k - 1);
    std::bernoulli_distribution sign(0.5);
    std::vector<Letter> letters;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return FreeWord(letters);
}

struct WordCase {
    FreeWord word;
    std::size_t generators;
    Augmentation eps;
    Representation rho;
};

ItemResult check_word(const WordCase& w)
{
    ItemResult r;
    std::vector<std::string> names;
    for (std::size_t g = 0; g < w.generators; ++g) names.push_back("x" + std::to_string(g + 1));
    r.artifact = Json{{"word", w.word.to_string(names)}, {"generators", names}, {"augmentation", w.eps.values}};
    auto minus_one = [](const FreeWord& u) { return GroupRingElement(u) - GroupRingElement::one(); };
    GroupRingElement sum;
    for (std::size_t g = 0; g < w.generators; ++g)
        sum += fox_derivative(w.word, g) * minus_one(FreeWord::generator(g));
    r.add("fundamental_identity", sum == minus_one(w.word), "identity fails in the group ring");
    LaurentMatrix lhs(w.rho.dimension, w.rho.dimension);
    for (std::size_t g = 0; g < w.generators; ++g)
        lhs = lhs + phi(fox_derivative(w.word, g), w.rho, w.eps) * phi(minus_one(FreeWord::generator(g)), w.rho, w.eps);
    r.add("fundamental_identity_phi", lhs == phi(minus_one(w.word), w.rho, w.eps), "identity fails after Phi");
    return r;
}

} // namespace

bool VerificationRun::ok() const
{
    return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.failed == 0; });
}

VerificationRun verify_suite(const VerifyOptions& opt)
{
    static const std::vector<std::string> suites = {"complexes", "monodromy", "knots", "fox"};
    if (opt.suite != "all" && std::find(suites.begin(), suites.end(), opt.suite) == suites.end())
        throw InputError("unknown suite '" + opt.suite + "' (expected all, complexes, monodromy, knots or fox)");
    auto wanted = [&](const std::string& s) { return opt.suite == "all" || opt.suite == s; };
    const unsigned bits = opt.precision_bits;

    VerificationRun run;
    run.options = opt;
    Collector col;

    if (wanted("complexes")) {
        Rng rng = suite_rng(opt.seed, 1);
        std::vector<BasedComplex> items;
        std::vector<LaurentPoly> units;
        static const unsigned orders[] = {1, 1, 3, 4};
        for (std::size_t i = 0; i < opt.complexes; ++i) {
            ComplexGenOptions g;
            g.cyclotomic_order = orders[i % 4];
            items.push_back(random_complex(rng, g));
            std::uniform_int_distribution<int> e(-3, 3);
            units.push_back(LaurentPoly::monomial(random_scalar(rng, g.cyclotomic_order), e(rng)));
        }
        auto res = run_parallel(items.size(), opt.threads,
                                [&](std::size_t i) { return check_complex(items[i], units[i], bits); });
        col.merge("complexes", res, run.artifacts);
    }

    if (wanted("monodromy")) {
        Rng rng = suite_rng(opt.seed, 2);
        std::vector<CycloMatrix> semi, conj, jordan;
        for (std::size_t i = 0; i < opt.monodromies; ++i) {
            semi.push_back(random_semisimple_monodromy(rng));
            CycloMatrix p = CycloMatrix::identity(semi.back().rows());
            for (std::size_t a = 0; a + 1 < p.rows(); ++a) p(a, a + 1) = random_scalar(rng, 4);
            conj.push_back(p);
        }
        for (std::size_t i = 0; i < opt.jordans; ++i) jordan.push_back(random_jordan_monodromy(rng));
        auto rs = run_parallel(semi.size(), opt.threads,
                               [&](std::size_t i) { return check_semisimple(semi[i], conj[i], bits); });
        col.merge("monodromy_semisimple", rs, run.artifacts);
        auto rj = run_parallel(jordan.size(), opt.threads, [&](std::size_t i) { return check_jordan(jordan[i], bits); });
        col.merge("monodromy_jordan", rj, run.artifacts);
    }

    if (wanted("knots")) {
        Rng rng = suite_rng(opt.seed, 3);
        std::vector<KnotCase> items;
        for (auto [p, q] : {std::pair{3, 1}, {5, 3}}) {
            items.push_back({"", two_bridge_presentation(p, q), Representation::trivial(2, 1)});
            items.back().label = items.back().presentation.name + " / trivial1";
        }
        while (items.size() < opt.knots) items.push_back(random_knot_case(rng));
        auto res = run_parallel(items.size(), opt.threads, [&](std::size_t i) { return check_knot(items[i], bits); });
        col.merge("knots", res, run.artifacts);
    }

    if (wanted("fox")) {
        Rng rng = suite_rng(opt.seed, 4);
        std::vector<WordCase> items;
        for (std::size_t i = 0; i < opt.words; ++i) {
            std::size_t k = 1 + i % 4;
            WordCase w{random_word(rng, k, 12), k, Augmentation{std::vector<long>(k)}, {}};
            std::uniform_int_distribution<long> e(-2, 2);
            for (auto& v : w.eps.values) v = e(rng);
            w.rho.dimension = 2;
            w.rho.cyclotomic_order = 5;
            for (std::size_t g = 0; g < k; ++g) {
                CycloMatrix m(2, 2);
                m(0, 1) = CycloNumber::zeta(5, static_cast<long>(g));
                m(1, 0) = CycloNumber::zeta(5, -static_cast<long>(g));
                w.rho.matrices.push_back(m);
            }
            items.push_back(std::move(w));
        }
        auto res = run_parallel(items.size(), opt.threads, [&](std::size_t i) { return check_word(items[i]); });
        col.merge("fox", res, run.artifacts);
    }

    run.properties = col.take();
    return run;
}

Json to_json(const VerificationRun& run)
{
    const auto& o = run.options;
    Json props = Json::array();
    for (const auto& p : run.properties)
        props.push_back(Json{{"name", p.name},
                             {"passed", p.passed},
                             {"failed", p.failed},
                             {"skipped", p.skipped},
                             {"failures", p.failures}});
    Json arts = Json::array();
    for (const auto& a : run.artifacts) arts.push_back(a.name);
    return Json{{"report", "verify"},
                {"seed", o.seed},
                {"suite", o.suite},
                {"precision_bits", o.precision_bits},
                {"sizes",
                 {{"complexes", o.complexes},
                  {"monodromies", o.monodromies},
                  {"jordans", o.jordans},
                  {"knots", o.knots},
                  {"words", o.words}}},
                {"properties", props},
                {"artifacts", arts},
                {"ok", run.ok()}};
}

void save_artifacts(const VerificationRun& run, const std::string& dir)
{
    if (run.artifacts.empty()) return;
    std::filesystem::create_directories(dir);
    for (const auto& a : run.artifacts) {
        std::ofstream out(std::filesystem::path(dir) / (a.name + ".json"));
        if (!out) throw InputError("cannot write artifact to " + dir);
        out << a.payload.dump(2) << "\n";
    }
}

} // namespace alextor
