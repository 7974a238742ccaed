#include "alextor/foxcalc.hpp"

#include "alextor/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace alextor {

FreeWord::FreeWord(std::vector<Letter> letters)
{
    for (const auto& l : letters) {
        if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
        if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().exponent == -l.exponent)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::generator(std::size_t g, int exponent) { return FreeWord({Letter{g, exponent}}); }

FreeWord FreeWord::inverse() const
{
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (auto& l : out) l.exponent = -l.exponent;
    return FreeWord(std::move(out));
}

FreeWord FreeWord::rotated(std::size_t k) const
{
    if (letters_.empty()) return *this;
    k %= letters_.size();
    std::vector<Letter> out(letters_.begin() + static_cast<long>(k), letters_.end());
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<long>(k));
    // A rotation of a reduced word can cancel across the seam.
    FreeWord w(std::move(out));
    while (w.letters_.size() >= 2 && w.letters_.front().generator == w.letters_.back().generator &&
           w.letters_.front().exponent == -w.letters_.back().exponent) {
        w.letters_.pop_back();
        w.letters_.erase(w.letters_.begin());
    }
    return w;
}

FreeWord FreeWord::prefix(std::size_t n) const
{
    FreeWord w;
    w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(std::min(n, letters_.size())));
    return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b)
{
    std::vector<Letter> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return FreeWord(std::move(out));
}

std::string FreeWord::to_string(const std::vector<std::string>& names) const
{
    if (letters_.empty()) return "1";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += ' ';
        out += l.generator < names.size() ? names[l.generator] : "g" + std::to_string(l.generator);
        if (l.exponent < 0) out += "^-1";
    }
    return out;
}

FreeWord parse_word(std::string_view text, const std::vector<std::string>& generators)
{
    std::istringstream in{std::string(text)};
    std::string token;
    std::vector<Letter> letters;
    auto fail = [&](const std::string& why) {
        throw InputError("in word \"" + std::string(text) + "\": " + why);
    };
    auto find = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return i;
        return std::nullopt;
    };
    while (in >> token) {
        if (token == "1") continue;
        std::string name = token;
        long power = 1;
        if (auto caret = token.find('^'); caret != std::string::npos) {
            name = token.substr(0, caret);
            std::string e = token.substr(caret + 1);
            if (!e.empty() && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
            try {
                std::size_t used = 0;
                power = std::stol(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                fail("bad exponent in token '" + token + "'");
            }
        }
        auto g = find(name);
        if (!g) {
            std::string lower = name;
            bool upper = !name.empty();
            for (auto& ch : lower) {
                if (!std::isupper(static_cast<unsigned char>(ch)) && std::isalpha(static_cast<unsigned char>(ch))) upper = false;
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            }
            if (upper && lower != name) g = find(lower);
            if (!g) fail("unknown generator '" + name + "'");
            power = -power;
        }
        int sign = power < 0 ? -1 : 1;
        for (long k = 0; k < std::labs(power); ++k) letters.push_back(Letter{*g, sign});
    }
    return FreeWord(std::move(letters));
}

GroupRingElement::GroupRingElement(const FreeWord& w, long coefficient)
{
    if (coefficient != 0) terms_.emplace(w, Integer(coefficient));
}

void GroupRingElement::add_term(const FreeWord& w, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& b)
{
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& b)
{
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b)
{
    GroupRingElement out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) out.add_term(u * v, c * d);
    return out;
}

GroupRingElement GroupRingElement::operator-() const
{
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

std::string GroupRingElement::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        bool neg = c < 0;
        Integer mag = neg ? Integer(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit_coeff = mag == 1;
        if (!unit_coeff) out += mag.get_str();
        if (w.is_identity()) {
            if (unit_coeff) out += "1";
        } else {
            if (!unit_coeff) out += "*";
            out += w.length() > 1 ? "(" + w.to_string(names) + ")" : w.to_string(names);
        }
    }
    return out;
}

GroupRingElement fox_derivative(const FreeWord& w, std::size_t g)
{
    GroupRingElement out;
    const auto& l = w.letters();
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i].generator != g) continue;
        if (l[i].exponent > 0)
            out += GroupRingElement(w.prefix(i));
        else
            out -= GroupRingElement(w.prefix(i + 1));
    }
    return out;
}

std::size_t Presentation::index_of(const std::string& g) const
{
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == g) return i;
    throw InputError("unknown generator '" + g + "'");
}

void validate_presentation(const Presentation& p)
{
    if (p.generators.empty()) throw InputError("presentation has no generators");
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (p.generators[i] == p.generators[j]) throw InputError("duplicate generator '" + p.generators[i] + "'");
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const auto& l : p.relators[r].letters())
            if (l.generator >= p.generators.size())
                throw InputError("relator " + std::to_string(r + 1) + " references an unknown generator");
    if (p.augmentation && p.augmentation->size() != p.generators.size())
        throw InputError("augmentation must give one value per generator");
}

Representation Representation::trivial(std::size_t generators, unsigned dimension)
{
    Representation r;
    r.name = "trivial";
    r.dimension = dimension;
    r.matrices.assign(generators, CycloMatrix::identity(dimension));
    return r;
}

void validate_representation(const Presentation& p, const Representation& rho)
{
    if (rho.dimension == 0) throw InputError("representation dimension must be positive");
    if (rho.matrices.size() != p.generators.size())
        throw InputError("representation gives " + std::to_string(rho.matrices.size()) + " matrices for " +
                         std::to_string(p.generators.size()) + " generators");
    const auto id = CycloMatrix::identity(rho.dimension);
    for (std::size_t g = 0; g < rho.matrices.size(); ++g) {
        const auto& u = rho.matrices[g];
        if (u.rows() != rho.dimension || u.cols() != rho.dimension)
            throw InputError("matrix of generator '" + p.generators[g] + "' has the wrong shape");
        if (!(u * conjugate_transpose(u) == id))
            throw InputError("matrix of generator '" + p.generators[g] + "' is not unitary");
    }
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        if (!(rho_of(p.relators[r], rho) == id))
            throw InputError("relator " + std::to_string(r + 1) + " (" + p.relators[r].to_string(p.generators) +
                             ") does not map to the identity");
}

CycloMatrix rho_of(const FreeWord& w, const Representation& rho)
{
    CycloMatrix out = CycloMatrix::identity(rho.dimension);
    for (const auto& l : w.letters()) {
        const auto& u = rho.matrices.at(l.generator);
        // Unitary matrices are inverted by conjugate transposition.
        out = out * (l.exponent > 0 ? u : conjugate_transpose(u));
    }
    return out;
}

long Augmentation::of(const FreeWord& w) const
{
    long s = 0;
    for (const auto& l : w.letters()) s += l.exponent * values.at(l.generator);
    return s;
}

void validate_augmentation(const Presentation& p, const Augmentation& eps)
{
    if (eps.values.size() != p.generators.size()) throw InputError("augmentation must give one value per generator");
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        if (eps.of(p.relators[r]) != 0)
            throw InputError("relator " + std::to_string(r + 1) + " has nonzero augmentation weight");
    long g = 0;
    for (long v : eps.values) g = std::gcd(g, v);
    if (g != 1) throw InputError("augmentation values do not generate Z (gcd " + std::to_string(g) + ")");
}

IntegerSNF integer_smith(std::vector<std::vector<Integer>> a, std::size_t cols)
{
    const std::size_t rows = a.size();
    IntegerSNF out;
    out.V.assign(cols, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) out.V[i][i] = 1;
    auto& V = out.V;
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        if (x == y) return;
        for (auto& r : a) std::swap(r[x], r[y]);
        for (auto& r : V) std::swap(r[x], r[y]);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (auto& r : a) r[dst] += f * r[src];
        for (auto& r : V) r[dst] += f * r[src];
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    };
    const std::size_t n = std::min(rows, cols);
    for (std::size_t s = 0; s < n; ++s) {
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = s; i < rows; ++i)
                for (std::size_t j = s; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            std::swap(a[s], a[pi]);
            swap_cols(s, pj);
            bool clean = true;
            for (std::size_t i = s + 1; i < rows; ++i) {
                Integer q = a[i][s] / a[s][s];
                if (q != 0) add_row(i, s, -q);
                if (a[i][s] != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < cols; ++j) {
                Integer q = a[s][j] / a[s][s];
                if (q != 0) add_col(j, s, -q);
                if (a[s][j] != 0) clean = false;
            }
            if (!clean) continue;
            std::size_t bad = rows;
            for (std::size_t i = s + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = s + 1; j < cols; ++j)
                    if (a[i][j] % a[s][s] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row(s, bad, 1);
        }
        if (s >= rows || s >= cols || a[s][s] == 0) break;
        if (a[s][s] < 0)
            for (std::size_t j = 0; j < cols; ++j) a[s][j] = -a[s][j];
        out.d.push_back(a[s][s]);
        ++out.rank;
    }
    return out;
}

Augmentation abelianization_epsilon(const Presentation& p)
{
    const std::size_t k = p.generators.size();
    std::vector<std::vector<Integer>> m;
    for (const auto& r : p.relators) {
        std::vector<Integer> row(k, 0);
        for (const auto& l : r.letters()) row[l.generator] += l.exponent;
        m.push_back(std::move(row));
    }
    auto snf = integer_smith(m, k);
    bool cyclic = snf.rank + 1 == k;
    for (const auto& d : snf.d)
        if (d != 1) cyclic = false;
    if (!cyclic) {
        std::string h;
        for (const auto& d : snf.d)
            if (d != 1) h += "Z/" + d.get_str() + " + ";
        std::size_t free = k - snf.rank;
        h += free == 0 ? "0" : (free == 1 ? "Z" : "Z^" + std::to_string(free));
        throw InputError("H_1 of the presentation is " + h +
                         ", not infinite cyclic; supply the augmentation explicitly");
    }
    Augmentation eps;
    for (std::size_t i = 0; i < k; ++i) eps.values.push_back(snf.V[i][k - 1].get_si());
    for (long v : eps.values) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& x : eps.values) x = -x;
        break;
    }
    return eps;
}

Augmentation augmentation_for(const Presentation& p)
{
    Augmentation eps = p.augmentation ? Augmentation{*p.augmentation} : abelianization_epsilon(p);
    validate_augmentation(p, eps);
    return eps;
}

LaurentMatrix phi(const GroupRingElement& e, const Representation& rho, const Augmentation& eps)
{
    LaurentMatrix out(rho.dimension, rho.dimension);
    for (const auto& [w, c] : e.terms()) {
        CycloMatrix r = rho_of(w, rho);
        int k = static_cast<int>(eps.of(w));
        CycloNumber cc{Rational(c)};
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (!r(i, j).is_zero()) out(i, j) += LaurentPoly::monomial(cc * r(i, j), k);
    }
    return out;
}

} // namespace alextor
