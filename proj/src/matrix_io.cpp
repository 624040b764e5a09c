#include "flagcalc/matrix_io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "flagcalc/errors.hpp"
#include "flagcalc/textio.hpp"

namespace flagcalc {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "ascii") return Format::Ascii;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    return std::nullopt;
}

namespace {

std::string label_of(const std::string& symbol, const WeylElement& w) {
    std::string s = symbol + "[";
    for (std::size_t k = 0; k < w.word().size(); ++k) s += (k ? "," : "") + std::to_string(w.word()[k]);
    return s + "]";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

template <class Coeff, class Fmt>
std::string render_text(const WeylGroup& g, const MatrixLabel& label, const BasisMatrix<Coeff>& m, Format f,
                        Fmt cell) {
    const std::size_t n = m.size();
    std::vector<std::string> labels;
    for (const auto& w : m.order) labels.push_back(label_of(label.symbol, w));
    std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) cells[r][c] = cell(m(r, c));

    std::ostringstream os;
    if (f == Format::Csv) {
        os << "\"\"";
        for (const auto& l : labels) os << ',' << csv_field(l);
        os << '\n';
        for (std::size_t r = 0; r < n; ++r) {
            os << csv_field(labels[r]);
            for (std::size_t c = 0; c < n; ++c) os << ',' << csv_field(cells[r][c]);
            os << '\n';
        }
        return os.str();
    }

    os << "# " << g.root_system().type().name() << "  s" << label.gen << "  basis " << label.basis
       << "  (column j is the image of basis element j)\n";
    std::size_t lw = 0;
    for (const auto& l : labels) lw = std::max(lw, l.size());
    std::vector<std::size_t> cw(n);
    for (std::size_t c = 0; c < n; ++c) {
        cw[c] = labels[c].size();
        for (std::size_t r = 0; r < n; ++r) cw[c] = std::max(cw[c], cells[r][c].size());
    }
    auto row = [&](const std::string& head, const std::vector<std::string>& xs) {
        std::string line = head + std::string(lw - head.size(), ' ');
        for (std::size_t c = 0; c < n; ++c) line += "  " + xs[c] + std::string(cw[c] - xs[c].size(), ' ');
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    };
    row("", labels);
    for (std::size_t r = 0; r < n; ++r) row(labels[r], cells[r]);
    return os.str();
}

json header(const WeylGroup& g, const MatrixLabel& label) {
    json j;
    j["type"] = std::string(1, g.root_system().type().letter());
    j["rank"] = g.rank();
    j["gen"] = label.gen;
    j["basis"] = label.basis;
    json order = json::array();
    for (const auto& w : g.elements()) order.push_back(format_word(w.word()));
    j["order"] = order;
    return j;
}

json laurent_json(const RootSystem& rs, const LaurentPolynomial& f) {
    json out = json::array();
    for (const auto& [w, c] : canonical_terms(rs, f)) {
        json mono;
        if (auto m = rs.to_simple_coords(w))
            mono["w"] = std::vector<int>(m->begin(), m->begin() + static_cast<long>(rs.rank()));
        else
            mono["wf"] = std::vector<int>(w.coords().begin(), w.coords().end());
        mono["c"] = std::vector<std::int64_t>(c.coeffs().begin(), c.coeffs().end());
        out.push_back(mono);
    }
    return out;
}

json sym_json(const RootSystem& rs, const SymPolynomial& f) {
    json out = json::array();
    for (const auto& [e, c] : canonical_terms(rs, f)) {
        json mono;
        mono["x"] = std::vector<int>(e.begin(), e.begin() + static_cast<long>(rs.rank()));
        mono["c"] = std::to_string(c.numerator()) + "/" + std::to_string(c.denominator());
        out.push_back(mono);
    }
    return out;
}

template <class Coeff, class ToJson>
std::string render_json(const WeylGroup& g, const MatrixLabel& label, const BasisMatrix<Coeff>& m, ToJson to_json) {
    json j = header(g, label);
    json rows = json::array();
    for (std::size_t r = 0; r < m.size(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(g.root_system(), m(r, c)));
        rows.push_back(row);
    }
    j["entries"] = rows;
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_matrix(const WeylGroup& g, const MatrixLabel& label, const BasisMatrix<LaurentPolynomial>& m,
                          Format f) {
    if (f == Format::Json) return render_json(g, label, m, laurent_json);
    return render_text(g, label, m, f, [&](const LaurentPolynomial& p) { return format_laurent(g.root_system(), p); });
}

std::string render_matrix(const WeylGroup& g, const MatrixLabel& label, const BasisMatrix<SymPolynomial>& m,
                          Format f) {
    if (f == Format::Json) return render_json(g, label, m, sym_json);
    return render_text(g, label, m, f, [&](const SymPolynomial& p) { return format_sym(g.root_system(), p); });
}

// ---------------------------------------------------------------------------
// Readers

namespace {

std::vector<std::vector<std::string>> split_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows(1);
    std::string field;
    bool quoted = false;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (quoted) {
            if (c == '"' && k + 1 < text.size() && text[k + 1] == '"') {
                field += '"';
                ++k;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            rows.back().push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            rows.back().push_back(std::move(field));
            field.clear();
            rows.emplace_back();
        } else {
            field += c;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", text.size());
    if (!field.empty() || !rows.back().empty()) rows.back().push_back(std::move(field));
    if (rows.back().empty()) rows.pop_back();
    return rows;
}

std::vector<std::vector<std::string>> split_ascii(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> cells;
        const bool header = line.front() == ' ';
        if (header) cells.emplace_back();
        std::size_t k = 0;
        while (k < line.size()) {
            while (k < line.size() && line[k] == ' ') ++k;
            if (k >= line.size()) break;
            std::size_t end = line.find("  ", k);
            if (end == std::string::npos) end = line.size();
            cells.push_back(line.substr(k, end - k));
            k = end;
        }
        rows.push_back(std::move(cells));
    }
    return rows;
}

template <class Coeff, class Parse>
BasisMatrix<Coeff> from_grid(const WeylGroup& g, const std::vector<std::vector<std::string>>& rows, Parse parse) {
    const std::size_t n = g.order();
    if (rows.size() != n + 1) throw ParseError("expected " + std::to_string(n + 1) + " rows", 0);
    BasisMatrix<Coeff> m;
    m.order = g.elements();
    m.entries.assign(n, std::vector<Coeff>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r + 1].size() != n + 1) throw ParseError("row " + std::to_string(r + 1) + " has the wrong width", 0);
        for (std::size_t c = 0; c < n; ++c) m.entries[r][c] = parse(rows[r + 1][c + 1]);
    }
    return m;
}

json parse_json(const WeylGroup& g, std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (!j.contains("entries") || j["entries"].size() != g.order()) throw ParseError("missing or mis-sized entries", 0);
    return j;
}

}  // namespace

BasisMatrix<LaurentPolynomial> read_laurent_matrix_csv(const WeylGroup& g, std::string_view text) {
    return from_grid<LaurentPolynomial>(g, split_csv(text),
                                        [&](const std::string& s) { return parse_laurent(g.root_system(), s); });
}

BasisMatrix<SymPolynomial> read_sym_matrix_csv(const WeylGroup& g, std::string_view text) {
    return from_grid<SymPolynomial>(g, split_csv(text),
                                    [&](const std::string& s) { return parse_sym(g.root_system(), s); });
}

BasisMatrix<LaurentPolynomial> read_laurent_matrix_ascii(const WeylGroup& g, std::string_view text) {
    return from_grid<LaurentPolynomial>(g, split_ascii(text),
                                        [&](const std::string& s) { return parse_laurent(g.root_system(), s); });
}

BasisMatrix<SymPolynomial> read_sym_matrix_ascii(const WeylGroup& g, std::string_view text) {
    return from_grid<SymPolynomial>(g, split_ascii(text),
                                    [&](const std::string& s) { return parse_sym(g.root_system(), s); });
}

BasisMatrix<LaurentPolynomial> read_laurent_matrix_json(const WeylGroup& g, std::string_view text) {
    const json j = parse_json(g, text);
    const RootSystem& rs = g.root_system();
    const std::size_t n = g.order();
    BasisMatrix<LaurentPolynomial> m;
    m.order = g.elements();
    m.entries.assign(n, std::vector<LaurentPolynomial>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& mono : j["entries"][r][c]) {
                const auto coeffs = mono.at("c").get<std::vector<std::int64_t>>();
                const Weight w = mono.contains("w") ? rs.from_simple_coords(mono["w"].get<std::vector<int>>())
                                                    : Weight::from_span(mono.at("wf").get<std::vector<int>>());
                m.entries[r][c].add_term(w, YPolynomial(coeffs));
            }
    return m;
}

BasisMatrix<SymPolynomial> read_sym_matrix_json(const WeylGroup& g, std::string_view text) {
    const json j = parse_json(g, text);
    const RootSystem& rs = g.root_system();
    const std::size_t n = g.order();
    BasisMatrix<SymPolynomial> m;
    m.order = g.elements();
    m.entries.assign(n, std::vector<SymPolynomial>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            SymPolynomial simple;
            for (const auto& mono : j["entries"][r][c]) {
                const auto xs = mono.at("x").get<std::vector<int>>();
                Exponent e{};
                std::copy(xs.begin(), xs.end(), e.begin());
                const std::string q = mono.at("c").get<std::string>();
                const auto slash = q.find('/');
                simple.add_term(e, Rational(std::stoll(q.substr(0, slash)), std::stoll(q.substr(slash + 1))));
            }
            m.entries[r][c] = from_simple_variables(rs, simple);
        }
    return m;
}

}  // namespace flagcalc
