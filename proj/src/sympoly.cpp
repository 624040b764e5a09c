#include "flagcalc/sympoly.hpp"

#include <algorithm>
#include <numeric>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// x_j -> linear form of the image of varpi_j (column j).
std::vector<SymPolynomial> linear_images(const WeylMatrix& m) {
    const std::size_t n = m.rank();
    std::vector<SymPolynomial> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Weight col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = m.at(r, j);
        images.push_back(SymPolynomial::linear_form(col));
    }
    return images;
}

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent r{};
    for (std::size_t j = 0; j < kMaxRank; ++j) r[j] = a[j] + b[j];
    return r;
}

}  // namespace

SymPolynomial SymPolynomial::constant(Rational c) {
    SymPolynomial p;
    p.add_term(Exponent{}, c);
    return p;
}

SymPolynomial SymPolynomial::variable(std::size_t j) {
    Exponent e{};
    e.at(j) = 1;
    SymPolynomial p;
    p.add_term(e, 1);
    return p;
}

SymPolynomial SymPolynomial::linear_form(const Weight& w) {
    SymPolynomial p;
    for (std::size_t j = 0; j < w.rank(); ++j) {
        Exponent e{};
        e[j] = 1;
        p.add_term(e, w[j]);
    }
    return p;
}

int SymPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool SymPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
}

bool SymPolynomial::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.denominator() == 1; });
}

void SymPolynomial::add_term(const Exponent& e, Rational c) {
    if (c.numerator() == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.numerator() == 0) terms_.erase(it);
    }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPolynomial& SymPolynomial::operator-=(const SymPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPolynomial& SymPolynomial::operator*=(Rational s) {
    if (s.numerator() == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
    SymPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
    return r;
}

SymPolynomial substitute(const SymPolynomial& f, const std::vector<SymPolynomial>& images) {
    SymPolynomial r;
    for (const auto& [e, c] : f.terms()) {
        SymPolynomial term = SymPolynomial::constant(c);
        for (std::size_t j = 0; j < kMaxRank; ++j) {
            if (e[j] == 0) continue;
            if (j >= images.size()) throw InternalError("substitution is missing a variable image");
            for (int k = 0; k < e[j]; ++k) term = term * images[j];
        }
        r += term;
    }
    return r;
}

// Long division with the largest-index variable of the form as pivot: the
// pivot-degree-maximal terms of f must be divisible by the pivot.
std::optional<SymPolynomial> divide_by_linear(const SymPolynomial& f, const SymPolynomial& linear) {
    if (linear.is_zero() || linear.degree() != 1 || !linear.is_homogeneous()) return std::nullopt;
    std::size_t pivot = 0;
    Rational lead = 0;
    for (const auto& [e, c] : linear.terms()) {
        for (std::size_t j = 0; j < kMaxRank; ++j)
            if (e[j] == 1 && j >= pivot) {
                pivot = j;
                lead = c;
            }
    }
    SymPolynomial rem = f, q;
    while (!rem.is_zero()) {
        auto top = std::max_element(rem.terms().begin(), rem.terms().end(),
                                    [pivot](const auto& a, const auto& b) {
                                        if (a.first[pivot] != b.first[pivot])
                                            return a.first[pivot] < b.first[pivot];
                                        return a.first < b.first;
                                    });
        Exponent e = top->first;
        if (e[pivot] == 0) return std::nullopt;
        Rational c = top->second / lead;
        e[pivot] -= 1;
        SymPolynomial t;
        t.add_term(e, c);
        q += t;
        rem -= t * linear;
    }
    return q;
}

SymPolynomial weyl_act_sym(const WeylElement& w, const SymPolynomial& f) {
    return substitute(f, linear_images(w.matrix()));
}

SymPolynomial divided_diff_coh(const RootSystem& rs, int i, const SymPolynomial& f) {
    SymPolynomial num = f - substitute(f, linear_images(WeylMatrix::simple_reflection(rs, i)));
    auto q = divide_by_linear(num, -SymPolynomial::linear_form(rs.alpha(i)));
    if (!q) throw InternalError("f - s_i f is not divisible by alpha_i");
    return *q;
}

}  // namespace flagcalc
