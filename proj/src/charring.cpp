#include "flagcalc/charring.hpp"

#include <algorithm>
#include <limits>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in Z[y] arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in Z[y] arithmetic");
    return r;
}

}  // namespace

// ---------------------------------------------------------------- YPolynomial

YPolynomial::YPolynomial(std::int64_t c) {
    if (c != 0) c_.push_back(c);
}

YPolynomial::YPolynomial(std::vector<std::int64_t> coeffs) : c_(coeffs.begin(), coeffs.end()) { trim(); }

YPolynomial YPolynomial::y(int power) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
    c.back() = 1;
    return YPolynomial(std::move(c));
}

void YPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t YPolynomial::evaluate(std::int64_t y) const {
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, y), *it);
    return acc;
}

YPolynomial& YPolynomial::operator+=(const YPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
    trim();
    return *this;
}

YPolynomial& YPolynomial::operator-=(const YPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], -o.c_[k]);
    trim();
    return *this;
}

YPolynomial& YPolynomial::operator*=(const YPolynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    Coeffs r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t a = 0; a < c_.size(); ++a)
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            r[a + b] = checked_add(r[a + b], checked_mul(c_[a], o.c_[b]));
    c_ = std::move(r);
    trim();
    return *this;
}

YPolynomial operator-(YPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
}

std::optional<YPolynomial> YPolynomial::divide_exact(const YPolynomial& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return YPolynomial();
    if (degree() < d.degree()) return std::nullopt;
    Coeffs rem = c_;
    std::vector<std::int64_t> q(c_.size() - d.c_.size() + 1, 0);
    const std::int64_t lead = d.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        std::int64_t top = rem[k + d.c_.size() - 1];
        if (top % lead != 0) return std::nullopt;
        q[k] = top / lead;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[k + j] = checked_add(rem[k + j], -checked_mul(q[k], d.c_[j]));
    }
    if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; })) return std::nullopt;
    return YPolynomial(std::move(q));
}

// --------------------------------------------------------- LaurentPolynomial

LaurentPolynomial LaurentPolynomial::monomial(const Weight& w, const YPolynomial& c) {
    LaurentPolynomial p;
    p.add_term(w, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t rank, const YPolynomial& c) {
    return monomial(Weight(rank), c);
}

YPolynomial LaurentPolynomial::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? YPolynomial() : it->second;
}

void LaurentPolynomial::add_term(const Weight& w, const YPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const YPolynomial& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const Weight& w) const {
    LaurentPolynomial r;
    for (const auto& [v, c] : terms_) r.terms_.emplace(v + w, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::specialize_y(std::int64_t v) const {
    LaurentPolynomial r;
    for (const auto& [w, c] : terms_) r.add_term(w, c.evaluate(v));
    return r;
}

bool LaurentPolynomial::is_y_free() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

// Greedy division on the lexicographic leading term. Quotient exponents are
// confined to the box [min f - min g, max f - max g] coordinatewise, which
// bounds the loop when g does not divide f.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return LaurentPolynomial();
    const std::size_t n = f.terms().begin()->first.rank();

    auto bounds = [n](const LaurentPolynomial& p) {
        Weight lo = p.terms().begin()->first, hi = lo;
        for (const auto& [w, c] : p.terms())
            for (std::size_t j = 0; j < n; ++j) {
                lo[j] = std::min(lo[j], w[j]);
                hi[j] = std::max(hi[j], w[j]);
            }
        return std::pair{lo, hi};
    };
    auto [flo, fhi] = bounds(f);
    auto [glo, ghi] = bounds(g);
    const Weight qlo = flo - glo, qhi = fhi - ghi;
    for (std::size_t j = 0; j < n; ++j)
        if (qlo[j] > qhi[j]) return std::nullopt;

    const auto& [gw, gc] = *g.terms().rbegin();
    LaurentPolynomial rem = f, q;
    while (!rem.is_zero()) {
        const auto& [rw, rc] = *rem.terms().rbegin();
        Weight e = rw - gw;
        for (std::size_t j = 0; j < n; ++j)
            if (e[j] < qlo[j] || e[j] > qhi[j]) return std::nullopt;
        auto c = rc.divide_exact(gc);
        if (!c) return std::nullopt;
        q.add_term(e, *c);
        for (const auto& [v, cv] : g.terms()) rem.add_term(v + e, -(*c * cv));
    }
    return q;
}

LaurentPolynomial weyl_act(const WeylElement& w, const LaurentPolynomial& f) {
    LaurentPolynomial r;
    for (const auto& [lambda, c] : f.terms()) r.add_term(w(lambda), c);
    return r;
}

LaurentPolynomial isobaric_dd(const RootSystem& rs, int i, const LaurentPolynomial& f) {
    const Root& a = rs.simple_root(i);
    LaurentPolynomial r;
    for (const auto& [lambda, c] : f.terms()) {
        const int m = lambda[static_cast<std::size_t>(i - 1)];
        if (m <= 0) {
            Weight mu = lambda;
            for (int k = 0; k <= -m; ++k, mu += a.weight) r.add_term(mu, c);
        } else {
            Weight mu = lambda - a.weight;
            for (int k = 1; k <= m - 1; ++k, mu -= a.weight) r.add_term(mu, -c);
        }
    }
    return r;
}

LaurentPolynomial t_operator(const RootSystem& rs, const Root& beta, int eps, const LaurentPolynomial& f) {
    if (eps != 0 && eps != 1) throw PreconditionViolated("t_operator: eps must be 0 or 1");
    LaurentPolynomial r;
    for (const auto& [lambda, c] : f.terms()) {
        const int m = rs.pairing(lambda, beta);
        if (eps == 1) {
            r.add_term(lambda - m * beta.weight, c);
        } else if (m > 0) {
            Weight mu = lambda;
            for (int k = 0; k < m; ++k, mu -= beta.weight) r.add_term(mu, c);
        } else if (m < 0) {
            Weight mu = lambda + beta.weight;
            for (int k = 1; k <= -m; ++k, mu += beta.weight) r.add_term(mu, -c);
        }
    }
    return r;
}

}  // namespace flagcalc
