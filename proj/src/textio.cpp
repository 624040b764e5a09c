#include "flagcalc/textio.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

std::string join_ints(std::span<const int> xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(xs[k]);
    }
    return s;
}

std::string word_body(const Word& w) { return join_ints(w); }

std::string format_rational(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Appends a signed summand: "a" then "+b" / "-b" (or " + b" / " - b" when spaced).
void append_signed(std::string& out, std::string term, bool spaced) {
    const bool neg = !term.empty() && term.front() == '-';
    if (out.empty()) {
        out = std::move(term);
        return;
    }
    if (neg) term.erase(0, 1);
    if (spaced)
        out += neg ? " - " : " + ";
    else
        out += neg ? "-" : "+";
    out += term;
}

// Coefficient c attached to a non-trivial symbol `body`.
std::string scaled_symbol(const std::string& coeff, const std::string& body) {
    if (coeff == "1") return body;
    if (coeff == "-1") return "-" + body;
    return coeff + "*" + body;
}

}  // namespace

std::string format_ypoly(const YPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    std::size_t nonzero = 0;
    for (auto c : p.coeffs()) nonzero += c != 0;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const auto c = p.coeffs()[k];
        if (c == 0) continue;
        std::string t;
        if (k == 0) {
            t = std::to_string(c);
        } else {
            std::string mono = k == 1 ? "y" : "y^" + std::to_string(k);
            t = c == 1 ? mono : c == -1 ? "-" + mono : std::to_string(c) + mono;
        }
        append_signed(out, std::move(t), false);
    }
    return nonzero > 1 ? "(" + out + ")" : out;
}

std::string format_weight(const RootSystem& rs, const Weight& w) {
    if (auto m = rs.to_simple_coords(w)) return "e[" + join_ints(std::span<const int>(m->data(), rs.rank())) + "]";
    return "ef[" + join_ints(w.coords()) + "]";
}

std::vector<std::pair<Weight, YPolynomial>> canonical_terms(const RootSystem& rs, const LaurentPolynomial& f) {
    struct Key {
        long height;
        SimpleCoords coords;
        auto operator<=>(const Key&) const = default;
    };
    std::vector<std::pair<Key, std::pair<Weight, YPolynomial>>> keyed;
    for (const auto& t : f.terms()) {
        const SimpleCoords m = rs.scaled_simple_coords(t.first);
        long h = 0;
        for (std::size_t k = 0; k < rs.rank(); ++k) h += m[k];
        keyed.push_back({Key{h, m}, t});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Weight, YPolynomial>> out;
    for (auto& k : keyed) out.push_back(std::move(k.second));
    return out;
}

std::string format_laurent(const RootSystem& rs, const LaurentPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : canonical_terms(rs, f)) {
        std::string coeff = format_ypoly(c);
        append_signed(out, w.is_zero() ? coeff : scaled_symbol(coeff, format_weight(rs, w)), false);
    }
    return out;
}

SymPolynomial to_simple_variables(const RootSystem& rs, const SymPolynomial& f) {
    const std::size_t n = rs.rank();
    std::vector<SymPolynomial> images;
    for (std::size_t j = 0; j < n; ++j) {
        const SimpleCoords m = rs.scaled_simple_coords(rs.fundamental_weight(static_cast<int>(j) + 1));
        SymPolynomial img;
        for (std::size_t k = 0; k < n; ++k)
            if (m[k] != 0)
                img += Rational(m[k], rs.determinant()) * SymPolynomial::variable(k);
        images.push_back(std::move(img));
    }
    return substitute(f, images);
}

SymPolynomial from_simple_variables(const RootSystem& rs, const SymPolynomial& f) {
    std::vector<SymPolynomial> images;
    for (std::size_t k = 0; k < rs.rank(); ++k)
        images.push_back(SymPolynomial::linear_form(rs.alpha(static_cast<int>(k) + 1)));
    return substitute(f, images);
}

std::vector<std::pair<Exponent, Rational>> canonical_terms(const RootSystem& rs, const SymPolynomial& f) {
    const SymPolynomial g = to_simple_variables(rs, f);
    const std::size_t n = rs.rank();
    std::vector<std::pair<Exponent, Rational>> terms(g.terms().begin(), g.terms().end());
    auto degree = [n](const Exponent& e) {
        int d = 0;
        for (std::size_t k = 0; k < n; ++k) d += e[k];
        return d;
    };
    std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        const int da = degree(a.first), db = degree(b.first);
        if (da != db) return da < db;
        return a.first > b.first;
    });
    return terms;
}

std::string format_sym(const RootSystem& rs, const SymPolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : canonical_terms(rs, f)) {
        std::string mono;
        for (std::size_t k = 0; k < rs.rank(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "a" + std::to_string(k + 1);
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        const std::string coeff = format_rational(c);
        append_signed(out, mono.empty() ? coeff : scaled_symbol(coeff, mono), false);
    }
    return out;
}

std::string basis_symbol(Basis b) {
    switch (b) {
        case Basis::Schubert: return "O";
        case Basis::Ideal: return "I";
        case Basis::Fixed: return "FP";
    }
    return "O";
}

namespace {

// True when s is a sum at top level, ignoring a leading sign.
bool is_compound(const std::string& s) {
    int depth = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (depth == 0 && k > 0 && (c == '+' || c == '-') && s[k - 1] != '^') return true;
    }
    return false;
}

template <class Coeff, class Fmt>
std::string format_combination(const Combination<Coeff>& u, const std::string& sym, Fmt fmt) {
    if (u.is_zero()) return "0";
    std::string out;
    for (const auto& [w, a] : u.terms()) {
        const std::string body = sym + "[" + word_body(w.word()) + "]";
        const std::string s = fmt(a);
        append_signed(out, is_compound(s) ? "(" + s + ")*" + body : scaled_symbol(s, body), true);
    }
    return out;
}

}  // namespace

std::string format_kclass(const RootSystem& rs, const KClass& u, Basis b) {
    return format_combination<LaurentPolynomial>(u, basis_symbol(b),
                                                 [&](const LaurentPolynomial& f) { return format_laurent(rs, f); });
}

std::string format_cohclass(const RootSystem& rs, const CohClass& c) {
    return format_combination<SymPolynomial>(c, "X", [&](const SymPolynomial& f) { return format_sym(rs, f); });
}

std::string format_restriction(const WeylGroup& g, const FixedPointVector& v) {
    std::ostringstream os;
    for (const auto& w : g.elements()) {
        std::string label = w.is_identity() ? "id" : "";
        for (int i : w.word()) label += "s" + std::to_string(i);
        os << label << ": " << format_laurent(g.root_system(), v.at(w)) << '\n';
    }
    return os.str();
}

std::string render_parse_error(std::string_view text, const ParseError& e) {
    std::ostringstream os;
    os << "parse error: " << e.what() << '\n' << "  " << text << '\n' << "  " << std::string(std::min(e.position(), text.size()), ' ') << '^';
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Mode { K, Coh };

template <class S>
struct Value {
    // Key -1 holds the scalar part; other keys are element indices.
    std::map<long, S> parts;

    bool has_class() const { return !parts.empty() && parts.rbegin()->first >= 0; }
    bool is_scalar() const { return !has_class(); }
    S scalar() const {
        auto it = parts.find(-1);
        return it == parts.end() ? S() : it->second;
    }
    void add(long key, const S& s) {
        if (s.is_zero()) return;
        auto [it, inserted] = parts.try_emplace(key, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) parts.erase(it);
        }
    }
};

template <class S>
class Parser {
   public:
    Parser(const WeylGroup* g, const RootSystem& rs, std::string_view text, Mode mode)
        : g_(g), rs_(rs), text_(text), mode_(mode) {}

    Value<S> parse_all() {
        skip();
        if (pos_ >= text_.size()) fail("empty expression");
        Value<S> v = expr();
        skip();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

    char basis_letter() const { return basis_; }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t p) const { throw ParseError(msg, p); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool starts(std::string_view s) {
        skip();
        return text_.substr(pos_, s.size()) == s;
    }

    S constant(std::int64_t c) const {
        if constexpr (std::is_same_v<S, LaurentPolynomial>)
            return LaurentPolynomial::constant(rs_.rank(), c);
        else
            return SymPolynomial::constant(Rational(c));
    }

    Value<S> scalar_value(S s) const {
        Value<S> v;
        v.add(-1, s);
        return v;
    }

    Value<S> expr() {
        Value<S> acc;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Value<S> t = term();
        merge(acc, t, neg);
        while (true) {
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                break;
            Value<S> u = term();
            merge(acc, u, neg);
        }
        return acc;
    }

    void merge(Value<S>& acc, const Value<S>& v, bool neg) const {
        for (const auto& [k, s] : v.parts) acc.add(k, neg ? -s : s);
    }

    bool atom_starts() {
        skip();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c));
    }

    Value<S> term() {
        Value<S> acc = factor();
        while (accept('*') || atom_starts()) {
            skip();
            const std::size_t at = pos_;
            acc = multiply(acc, factor(), at);
        }
        return acc;
    }

    Value<S> multiply(const Value<S>& a, const Value<S>& b, std::size_t at) {
        if (a.has_class() && b.has_class()) fail_at("product of two classes is not supported", at);
        const Value<S>& s = a.has_class() ? b : a;
        const Value<S>& c = a.has_class() ? a : b;
        const S k = s.scalar();
        Value<S> r;
        for (const auto& [key, v] : c.parts) r.add(key, k * v);
        return r;
    }

    Value<S> factor() {
        const std::size_t start = pos_;
        Value<S> base = atom();
        if (!accept('^')) return base;
        skip();
        const bool neg = accept('-');
        skip();
        const std::size_t epos = pos_;
        const std::int64_t e = integer();
        if (!base.is_scalar()) fail_at("only scalars can be raised to a power", start);
        S b = base.scalar();
        if (neg) {
            if constexpr (std::is_same_v<S, LaurentPolynomial>) {
                if (!b.is_monomial() || !b.terms().begin()->second.is_constant() ||
                    std::abs(b.terms().begin()->second.coeff(0)) != 1)
                    fail_at("negative powers need a unit monomial", epos);
                const auto& [w, c] = *b.terms().begin();
                b = LaurentPolynomial::monomial(-w, c);
            } else {
                fail_at("negative powers are not polynomial", epos);
            }
        }
        if (e > 64) fail_at("exponent too large", epos);
        S r = constant(1);
        for (std::int64_t k = 0; k < e; ++k) r = r * b;
        return scalar_value(r);
    }

    std::int64_t integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
        if (ec != std::errc()) fail_at("integer out of range", start);
        return v;
    }

    std::vector<int> int_list() {
        std::vector<int> out;
        skip();
        if (peek(']')) return out;
        while (true) {
            skip();
            const std::size_t start = pos_;
            const bool neg = accept('-');
            const std::int64_t v = integer();
            if (v > 1000) fail_at("coordinate out of range", start);
            out.push_back(static_cast<int>(neg ? -v : v));
            if (!accept(',')) break;
        }
        return out;
    }

    Value<S> atom() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const std::size_t start = pos_;
        const char c = text_[pos_];

        if (c == '(') {
            ++pos_;
            Value<S> v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::int64_t n = integer();
            if (accept('/')) {
                const std::size_t dpos = pos_;
                const std::int64_t d = integer();
                if (mode_ == Mode::K) fail_at("fractions are not allowed in K-theory", start);
                if (d == 0) fail_at("division by zero", dpos);
                if constexpr (std::is_same_v<S, SymPolynomial>) return scalar_value(SymPolynomial::constant(Rational(n, d)));
            }
            return scalar_value(constant(n));
        }
        for (std::string_view sym : {"FP", "O", "I", "X"}) {
            if (starts(std::string(sym) + "[") || (starts(sym) && next_is_bracket(sym.size()))) return basis_atom(sym, start);
        }
        if (starts("ef") && next_is_bracket(2)) return weight_atom(true, start);
        if (starts("e") && next_is_bracket(1)) return weight_atom(false, start);
        if (c == 'y' && !ident_continues(1)) {
            ++pos_;
            if (mode_ != Mode::K) fail_at("'y' is not allowed in cohomology", start);
            if constexpr (std::is_same_v<S, LaurentPolynomial>)
                return scalar_value(LaurentPolynomial::constant(rs_.rank(), YPolynomial::y()));
        }
        if (c == 'a' || c == 'w') {
            ++pos_;
            accept('_');
            const std::size_t ipos = pos_;
            const std::int64_t k = integer();
            if (mode_ != Mode::Coh) fail_at("root variables are only allowed in cohomology", start);
            if (k < 1 || k > static_cast<std::int64_t>(rs_.rank())) fail_at("index out of range", ipos);
            if constexpr (std::is_same_v<S, SymPolynomial>) {
                if (c == 'a') return scalar_value(SymPolynomial::linear_form(rs_.alpha(static_cast<int>(k))));
                return scalar_value(SymPolynomial::variable(static_cast<std::size_t>(k - 1)));
            }
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    bool next_is_bracket(std::size_t skipn) {
        std::size_t p = pos_ + skipn;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() && text_[p] == '[';
    }
    bool ident_continues(std::size_t skipn) const {
        const std::size_t p = pos_ + skipn;
        return p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_');
    }

    Value<S> weight_atom(bool fundamental, std::size_t start) {
        pos_ += fundamental ? 2 : 1;
        expect('[');
        const std::vector<int> xs = int_list();
        expect(']');
        if (mode_ != Mode::K) fail_at("characters e[...] are only allowed in K-theory", start);
        if (xs.size() != rs_.rank()) fail_at("expected " + std::to_string(rs_.rank()) + " coordinates", start);
        if constexpr (std::is_same_v<S, LaurentPolynomial>) {
            const Weight w = fundamental ? Weight::from_span(xs) : rs_.from_simple_coords(xs);
            return scalar_value(LaurentPolynomial::monomial(w));
        }
        fail_at("unreachable", start);
    }

    Value<S> basis_atom(std::string_view sym, std::size_t start) {
        pos_ += sym.size();
        expect('[');
        const std::size_t body = pos_;
        const std::size_t close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("missing ']'");
        const std::string_view inside = text_.substr(body, close - body);
        Word word;
        try {
            word = parse_word(inside);
        } catch (const ParseError& e) {
            fail_at(e.what(), body + e.position());
        }
        for (int letter : word)
            if (letter < 1 || letter > static_cast<int>(rs_.rank())) fail_at("simple index out of range", body);
        pos_ = close + 1;

        const char letter = sym == "FP" ? 'F' : sym[0];
        if ((mode_ == Mode::Coh) != (letter == 'X')) fail_at(mode_ == Mode::Coh ? "expected X[...] in cohomology" : "X[...] is a cohomology class", start);
        if (!g_) fail_at("basis symbols are not allowed here", start);
        if (basis_ && basis_ != letter) fail_at("mixed basis symbols", start);
        basis_ = letter;
        if (!g_->is_reduced(word)) fail_at("word is not reduced", body);
        Value<S> v;
        v.add(static_cast<long>(g_->from_word(word).index()), constant(1));
        return v;
    }

    const WeylGroup* g_;
    const RootSystem& rs_;
    std::string_view text_;
    Mode mode_;
    std::size_t pos_ = 0;
    char basis_ = 0;
};

template <class S>
Combination<S> to_combination(const WeylGroup& g, const Value<S>& v, std::string_view text) {
    if (!v.scalar().is_zero()) throw ParseError("term without a basis symbol", 0);
    (void)text;
    Combination<S> r;
    for (const auto& [k, s] : v.parts) r.add_term(g.at(static_cast<std::size_t>(k)), s);
    return r;
}

}  // namespace

ParsedKClass parse_kclass(const WeylGroup& g, std::string_view text) {
    Parser<LaurentPolynomial> p(&g, g.root_system(), text, Mode::K);
    const auto v = p.parse_all();
    ParsedKClass out;
    out.basis = p.basis_letter() == 'I' ? Basis::Ideal : p.basis_letter() == 'F' ? Basis::Fixed : Basis::Schubert;
    out.coords = to_combination(g, v, text);
    return out;
}

CohClass parse_cohclass(const WeylGroup& g, std::string_view text) {
    Parser<SymPolynomial> p(&g, g.root_system(), text, Mode::Coh);
    return to_combination(g, p.parse_all(), text);
}

LaurentPolynomial parse_laurent(const RootSystem& rs, std::string_view text) {
    Parser<LaurentPolynomial> p(nullptr, rs, text, Mode::K);
    return p.parse_all().scalar();
}

SymPolynomial parse_sym(const RootSystem& rs, std::string_view text) {
    Parser<SymPolynomial> p(nullptr, rs, text, Mode::Coh);
    return p.parse_all().scalar();
}

}  // namespace flagcalc
