#include "alextor/io.hpp"

#include "alextor/errors.hpp"
#include "alextor/parse.hpp"

#include <toml.hpp>

#include <fstream>
#include <sstream>

namespace alextor {

namespace {

std::string where(const std::string& source, const toml::source_region& r)
{
    return source + ":" + std::to_string(r.begin.line) + ":" + std::to_string(r.begin.column);
}

toml::table parse_toml(std::string_view text, const std::string& source)
{
    try {
        return toml::parse(text, source);
    } catch (const toml::parse_error& e) {
        throw InputError(where(source, e.source()) + ": " + std::string(e.description()));
    }
}

[[noreturn]] void fail_at(const std::string& source, const toml::node& n, const std::string& what)
{
    throw InputError(where(source, n.source()) + ": " + what);
}

[[noreturn]] void fail_missing(const std::string& source, const std::string& key)
{
    throw InputError(source + ": missing key '" + key + "'");
}

CycloNumber cyclo_from_node(const toml::node& n, unsigned order, const std::string& source)
{
    if (auto i = n.as_integer()) return CycloNumber(static_cast<long>(i->get()));
    if (auto s = n.as_string()) {
        try {
            return parse_cyclo(s->get(), order);
        } catch (const InputError& e) {
            fail_at(source, n, e.what());
        }
    }
    fail_at(source, n, "expected an integer or a cyclotomic literal string");
}

CycloMatrix matrix_from_node(const toml::node& n, unsigned dim, unsigned order, const std::string& source,
                             const std::string& what)
{
    auto rows = n.as_array();
    if (!rows || rows->size() != dim) fail_at(source, n, what + " must be a " + std::to_string(dim) + "x" + std::to_string(dim) + " array");
    CycloMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto row = (*rows)[i].as_array();
        if (!row || row->size() != dim) fail_at(source, (*rows)[i], what + " row " + std::to_string(i + 1) + " must have " + std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cyclo_from_node((*row)[j], order, source);
    }
    return m;
}

unsigned positive(const toml::table& t, const std::string& key, const std::string& source, std::optional<unsigned> fallback)
{
    auto n = t.get(key);
    if (!n) {
        if (fallback) return *fallback;
        fail_missing(source, key);
    }
    auto i = n->as_integer();
    if (!i || i->get() < 1 || i->get() > 100000) fail_at(source, *n, "'" + key + "' must be a positive integer");
    return static_cast<unsigned>(i->get());
}

} // namespace

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Presentation presentation_from_toml(std::string_view text, const std::string& source)
{
    toml::table t = parse_toml(text, source);
    Presentation p;
    p.name = t["name"].value_or(std::string());
    auto gens = t.get("generators");
    if (!gens) fail_missing(source, "generators");
    auto ga = gens->as_array();
    if (!ga || ga->empty()) fail_at(source, *gens, "'generators' must be a non-empty array of names");
    for (const auto& g : *ga) {
        auto s = g.as_string();
        if (!s || s->get().empty()) fail_at(source, g, "generator names must be non-empty strings");
        for (char ch : s->get())
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '^') fail_at(source, g, "generator names cannot contain spaces or '^'");
        p.generators.push_back(s->get());
    }
    if (auto rels = t.get("relators")) {
        auto ra = rels->as_array();
        if (!ra) fail_at(source, *rels, "'relators' must be an array of words");
        for (const auto& r : *ra) {
            auto s = r.as_string();
            if (!s) fail_at(source, r, "relators must be strings");
            try {
                p.relators.push_back(parse_word(s->get(), p.generators));
            } catch (const InputError& e) {
                fail_at(source, r, e.what());
            }
        }
    }
    if (auto aug = t.get("augmentation")) {
        auto at = aug->as_table();
        if (!at) fail_at(source, *aug, "'augmentation' must be a table of generator = integer");
        std::vector<long> v(p.generators.size(), 0);
        std::vector<bool> seen(p.generators.size(), false);
        for (const auto& [k, val] : *at) {
            std::size_t i;
            try {
                i = p.index_of(std::string(k.str()));
            } catch (const InputError& e) {
                fail_at(source, val, e.what());
            }
            auto iv = val.as_integer();
            if (!iv) fail_at(source, val, "augmentation values must be integers");
            v[i] = static_cast<long>(iv->get());
            seen[i] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) fail_at(source, *aug, "augmentation misses generator '" + p.generators[i] + "'");
        p.augmentation = v;
    }
    try {
        validate_presentation(p);
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
    return p;
}

Presentation load_presentation(const std::string& path) { return presentation_from_toml(read_file(path), path); }

Representation representation_from_toml(std::string_view text, const std::string& source, const Presentation& p)
{
    toml::table t = parse_toml(text, source);
    Representation r;
    r.name = t["name"].value_or(std::string());
    r.cyclotomic_order = positive(t, "cyclotomic_order", source, 1u);
    r.dimension = positive(t, "dimension", source, std::nullopt);
    if (t["trivial"].value_or(false)) {
        if (t.get("matrices")) throw InputError(source + ": a trivial representation takes no matrices");
        Representation triv = Representation::trivial(p.generators.size(), r.dimension);
        triv.name = r.name.empty() ? "trivial" : r.name;
        triv.cyclotomic_order = r.cyclotomic_order;
        return triv;
    }
    auto mats = t.get("matrices");
    if (!mats || !mats->as_table()) fail_missing(source, "matrices");
    const auto& mt = *mats->as_table();
    for (const auto& [k, v] : mt) {
        bool known = false;
        for (const auto& g : p.generators) known = known || g == k.str();
        if (!known) fail_at(source, v, "matrix given for unknown generator '" + std::string(k.str()) + "'");
    }
    for (const auto& g : p.generators) {
        auto n = mt.get(g);
        if (!n) throw InputError(where(source, mats->source()) + ": no matrix for generator '" + g + "'");
        r.matrices.push_back(matrix_from_node(*n, r.dimension, r.cyclotomic_order, source, "matrix of '" + g + "'"));
    }
    try {
        validate_representation(p, r);
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
    return r;
}

Representation load_representation(const std::string& path, const Presentation& p)
{
    return representation_from_toml(read_file(path), path, p);
}

MonodromyInput monodromy_from_toml(std::string_view text, const std::string& source)
{
    toml::table t = parse_toml(text, source);
    MonodromyInput m;
    m.name = t["name"].value_or(std::string());
    m.cyclotomic_order = positive(t, "cyclotomic_order", source, 1u);
    unsigned dim = positive(t, "dimension", source, std::nullopt);
    auto f = t.get("F");
    if (!f) fail_missing(source, "F");
    m.F = matrix_from_node(*f, dim, m.cyclotomic_order, source, "F");
    if (auto h = t.get("h0_vanishes")) {
        auto b = h->as_boolean();
        if (!b) fail_at(source, *h, "'h0_vanishes' must be true or false");
        m.h0_vanishes = b->get();
    }
    return m;
}

MonodromyInput load_monodromy(const std::string& path) { return monodromy_from_toml(read_file(path), path); }

Json to_json(const CycloNumber& c) { return c.to_string(); }

Json to_json(const LaurentPoly& p)
{
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"min_exp", p.is_zero() ? 0 : p.min_exp()}, {"coeffs", coeffs}, {"cyclotomic_order", p.cyclotomic_order()}};
}

Json to_json(const RatFunc& f)
{
    return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", f.to_string()}};
}

Json to_json(const Real& r, int digits) { return r.to_string(digits); }

Json to_json(const UnitClass& u, unsigned precision_bits)
{
    return Json{{"exponent", u.exponent},
                {"coefficient", u.coefficient.to_string()},
                {"abs_coefficient", to_json(u.coefficient.embed(precision_bits).modulus())}};
}

LaurentPoly laurent_from_json(const Json& j)
{
    if (j.is_string()) return parse_laurent(j.get<std::string>(), 1);
    if (!j.is_object() || !j.contains("coeffs")) throw InputError("expected a polynomial object");
    unsigned order = j.value("cyclotomic_order", 1u);
    std::vector<CycloNumber> c;
    for (const auto& x : j.at("coeffs")) c.push_back(parse_cyclo(x.get<std::string>(), order));
    return LaurentPoly::from_coeffs(j.value("min_exp", 0), c);
}

Json complex_to_json(const BasedComplex& c)
{
    Json j;
    j["format"] = "alextor.complex/1";
    j["grading"] = to_string(c.grading());
    j["cyclotomic_order"] = c.cyclotomic_order();
    // Native degrees ascending.
    int lo = c.grading() == Grading::chain ? c.min_degree() : -c.max_degree();
    int hi = c.grading() == Grading::chain ? c.max_degree() : -c.min_degree();
    j["min_degree"] = lo;
    Json ranks = Json::array(), labels = Json::array();
    for (int q = lo; q <= hi; ++q) {
        ranks.push_back(c.rank(c.chain_index(q)));
        labels.push_back(c.labels(c.chain_index(q)));
    }
    j["ranks"] = ranks;
    j["labels"] = labels;
    Json bd = Json::object();
    for (int q = lo; q <= hi; ++q) {
        // chain: d_q for q > lo; cochain: d^q for q < hi.
        int idx = c.grading() == Grading::chain ? q : -q;
        if (c.grading() == Grading::chain ? q == lo : q == hi) continue;
        const LaurentMatrix& m = c.boundary(idx);
        Json rows = Json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            for (std::size_t s = 0; s < m.cols(); ++s) row.push_back(m(r, s).to_string());
            rows.push_back(row);
        }
        bd[std::to_string(q)] = rows;
    }
    j["boundaries"] = bd;
    return j;
}

BasedComplex complex_from_json(const Json& j, const std::string& source)
{
    auto fail = [&](const std::string& what) -> InputError { return InputError(source + ": " + what); };
    try {
        if (!j.is_object()) throw fail("expected a JSON object");
        if (j.value("format", std::string()) != "alextor.complex/1") throw fail("format must be \"alextor.complex/1\"");
        std::string g = j.value("grading", std::string("chain"));
        if (g != "chain" && g != "cochain") throw fail("grading must be \"chain\" or \"cochain\"");
        Grading grading = g == "chain" ? Grading::chain : Grading::cochain;
        unsigned order = j.value("cyclotomic_order", 1u);
        if (order < 1) throw fail("cyclotomic_order must be positive");
        int lo = j.value("min_degree", 0);
        auto ranks_native = j.at("ranks").get<std::vector<std::size_t>>();
        if (ranks_native.empty()) throw fail("ranks must be non-empty");
        int hi = lo + static_cast<int>(ranks_native.size()) - 1;
        auto rank_native = [&](int q) -> std::size_t {
            return q < lo || q > hi ? 0 : ranks_native[static_cast<std::size_t>(q - lo)];
        };

        std::vector<std::size_t> ranks;
        std::vector<std::vector<std::string>> labels;
        bool has_labels = j.contains("labels");
        Json lab = has_labels ? j.at("labels") : Json();
        if (has_labels && (!lab.is_array() || lab.size() != ranks_native.size())) throw fail("labels must list every degree");
        int clo = grading == Grading::chain ? lo : -hi;
        int chi = grading == Grading::chain ? hi : -lo;
        for (int idx = clo; idx <= chi; ++idx) {
            int q = grading == Grading::chain ? idx : -idx;
            ranks.push_back(rank_native(q));
            if (has_labels) labels.push_back(lab.at(static_cast<std::size_t>(q - lo)).get<std::vector<std::string>>());
        }

        std::map<int, LaurentMatrix> bd;
        if (j.contains("boundaries")) {
            for (const auto& [key, rows] : j.at("boundaries").items()) {
                int q;
                try {
                    std::size_t used = 0;
                    q = std::stoi(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw fail("boundary key '" + key + "' is not an integer degree");
                }
                std::size_t nr = grading == Grading::chain ? rank_native(q - 1) : rank_native(q + 1);
                std::size_t nc = rank_native(q);
                if (!rows.is_array() || rows.size() != nr)
                    throw fail("boundary " + key + " must have " + std::to_string(nr) + " rows");
                LaurentMatrix m(nr, nc);
                for (std::size_t r = 0; r < nr; ++r) {
                    if (!rows[r].is_array() || rows[r].size() != nc)
                        throw fail("boundary " + key + " row " + std::to_string(r + 1) + " must have " + std::to_string(nc) + " entries");
                    for (std::size_t s = 0; s < nc; ++s) {
                        const Json& e = rows[r][s];
                        if (e.is_number_integer())
                            m(r, s) = LaurentPoly(e.get<long>());
                        else if (e.is_string())
                            m(r, s) = parse_laurent(e.get<std::string>(), order);
                        else
                            throw fail("boundary " + key + " entry (" + std::to_string(r + 1) + ", " + std::to_string(s + 1) + ") must be a string");
                    }
                }
                bd.emplace(grading == Grading::chain ? q : -q, std::move(m));
            }
        }
        return BasedComplex(clo, ranks, bd, grading, labels);
    } catch (const Json::exception& e) {
        throw fail(e.what());
    } catch (const InputError& e) {
        std::string msg = e.what();
        if (msg.rfind(source + ":", 0) == 0) throw;
        throw fail(msg);
    }
}

BasedComplex load_complex(const std::string& path)
{
    Json j;
    try {
        j = Json::parse(read_file(path));
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return complex_from_json(j, path);
}

} // namespace alextor
