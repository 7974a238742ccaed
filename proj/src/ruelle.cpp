#include "alextor/ruelle.hpp"

#include "alextor/errors.hpp"
#include "alextor/io.hpp"
#include "alextor/linalg.hpp"
#include "alextor/parse.hpp"

#include <regex>

namespace alextor {

int predict_order(long h0, long h1)
{
    if (h0 < 0 || h1 < 0) throw InputError("cohomology dimensions must be non-negative");
    return static_cast<int>(4 * h0 - 2 * h1);
}

Real predict_leading_from_torsion(const Real& abs_torsion)
{
    if (abs_torsion.sign() <= 0) throw InputError("|tau| must be positive");
    return abs_torsion * abs_torsion;
}

Real predict_R0_from_alexander(const Real& delta_abs, const Real& a_at_one_abs)
{
    if (delta_abs.sign() <= 0 || a_at_one_abs.sign() <= 0)
        throw InputError("|delta| and |A*(1)| must be positive");
    Real p = delta_abs * a_at_one_abs;
    return p * p;
}

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv(const std::string& line, const std::string& where)
{
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw InputError(where + ": unterminated quote");
    out.push_back(trim(cur));
    return out;
}

CycloMatrix parse_matrix_field(const std::string& text, unsigned order, const std::string& where)
{
    std::vector<std::vector<CycloNumber>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(';', start);
        std::string row = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        std::vector<CycloNumber> entries;
        std::size_t s = 0;
        while (s <= row.size()) {
            auto e = row.find(',', s);
            std::string cell = trim(row.substr(s, e == std::string::npos ? std::string::npos : e - s));
            if (cell.empty()) throw InputError(where + ": empty matrix entry");
            try {
                entries.push_back(parse_cyclo(cell, order));
            } catch (const InputError& err) {
                throw InputError(where + ": " + err.what());
            }
            if (e == std::string::npos) break;
            s = e + 1;
        }
        if (!rows.empty() && entries.size() != rows[0].size()) throw InputError(where + ": ragged holonomy matrix");
        rows.push_back(std::move(entries));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    if (rows.size() != rows[0].size()) throw InputError(where + ": holonomy matrix must be square");
    CycloMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    if (m * conjugate_transpose(m) != CycloMatrix::identity(m.rows()))
        throw InputError(where + ": holonomy matrix is not unitary");
    return m;
}

} // namespace

LengthSpectrum parse_spectrum_csv(std::string_view text, const std::string& source, unsigned precision_bits)
{
    LengthSpectrum spec;
    static const std::regex order_re(R"(^#\s*cyclotomic_order\s*=\s*(\d+)\s*$)");
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_allowed = true;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string line = trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::string where = source + ":" + std::to_string(line_no);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::smatch m;
            if (std::regex_match(line, m, order_re)) {
                if (!spec.entries.empty()) throw InputError(where + ": cyclotomic_order must precede the data rows");
                spec.cyclotomic_order = static_cast<unsigned>(std::stoul(m[1]));
                if (spec.cyclotomic_order == 0) throw InputError(where + ": cyclotomic_order must be positive");
            }
            continue;
        }
        auto fields = split_csv(line, where);
        if (header_allowed && !fields.empty() && fields[0] == "length") {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        if (fields.size() != 3) throw InputError(where + ": expected 3 columns (length, multiplicity, holonomy)");

        SpectrumEntry e;
        e.line = line_no;
        try {
            e.length = Real::from_string(fields[0], precision_bits);
        } catch (const std::invalid_argument&) {
            throw InputError(where + ": length is not a number: '" + fields[0] + "'");
        }
        if (e.length.sign() <= 0) throw InputError(where + ": length must be positive");
        if (!spec.entries.empty() && e.length < spec.entries.back().length)
            throw InputError(where + ": lengths must be sorted ascending");
        try {
            std::size_t used = 0;
            e.multiplicity = std::stol(fields[1], &used);
            if (used != fields[1].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw InputError(where + ": multiplicity is not an integer: '" + fields[1] + "'");
        }
        if (e.multiplicity <= 0) throw InputError(where + ": multiplicity must be positive");

        const std::string& h = fields[2];
        if (h.rfind("charpoly:", 0) == 0) {
            try {
                e.holonomy_charpoly = parse_laurent(h.substr(9), spec.cyclotomic_order);
            } catch (const InputError& err) {
                throw InputError(where + ": " + err.what());
            }
            const auto& p = e.holonomy_charpoly;
            if (p.is_zero() || p.min_exp() != 0 || !p.leading().is_one() || p.trailing().is_zero())
                throw InputError(where + ": charpoly must be monic with nonzero constant term");
        } else if (h.rfind("matrix:", 0) == 0) {
            e.holonomy_charpoly = charpoly(parse_matrix_field(h.substr(7), spec.cyclotomic_order, where));
        } else {
            throw InputError(where + ": holonomy must start with 'charpoly:' or 'matrix:'");
        }
        std::size_t m = static_cast<std::size_t>(e.holonomy_charpoly.max_exp());
        if (spec.entries.empty()) spec.dimension = m;
        else if (m != spec.dimension) throw InputError(where + ": holonomy dimension differs from earlier rows");
        spec.entries.push_back(std::move(e));
    }
    return spec;
}

LengthSpectrum load_spectrum(const std::string& path, unsigned precision_bits)
{
    return parse_spectrum_csv(read_file(path), path, precision_bits);
}

TruncatedValue evaluate_truncated(const LengthSpectrum& spec, const Complex& s, const Real& max_length,
                                  unsigned precision_bits)
{
    TruncatedValue out;
    Complex one(Real(1L, precision_bits), Real(0L, precision_bits));
    out.value = one;
    out.last_factor_deviation = Real(0L, precision_bits);
    Complex ss(s.re.with_precision(precision_bits), s.im.with_precision(precision_bits));
    for (const auto& e : spec.entries) {
        if (max_length < e.length) break;
        Complex sl(-(ss.re * e.length), -(ss.im * e.length));
        Complex z = complex_exp(sl);
        // det(1 - rho z) = z^m p(1/z) = sum_k c_k z^(m-k)
        const auto& p = e.holonomy_charpoly;
        int m = p.max_exp();
        Complex factor(precision_bits);
        Complex zp = one;
        for (int k = m; k >= 0; --k) {
            factor = factor + p.coeff(k).embed(precision_bits) * zp;
            zp = zp * z;
        }
        out.value = out.value * complex_pow(factor, e.multiplicity);
        out.last_factor_deviation = (factor - one).modulus();
        ++out.terms_used;
    }
    if (out.terms_used == 0) throw InputError("no spectrum entry has length <= the cutoff");
    return out;
}

} // namespace alextor
