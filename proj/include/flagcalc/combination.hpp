#pragma once

#include <functional>
#include <map>
#include <vector>

#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// Finite linear combination sum_w c_w [basis_w] over a coefficient ring.
/// Zero coefficients are never stored.
template <class Coeff>
class Combination {
   public:
    using Terms = std::map<WeylElement, Coeff>;

    Combination() = default;
    static Combination basis(const WeylElement& w, Coeff c) {
        Combination r;
        r.add_term(w, std::move(c));
        return r;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Coeff coefficient(const WeylElement& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coeff() : it->second;
    }

    void add_term(const WeylElement& w, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Combination& operator+=(const Combination& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Combination& operator-=(const Combination& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend Combination operator+(Combination a, const Combination& b) { return a += b; }
    friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
    friend Combination operator-(const Combination& a) { return Combination() - a; }
    /// Coefficient-ring scalar multiplication.
    friend Combination operator*(const Coeff& s, const Combination& a) {
        Combination r;
        for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
        return r;
    }

    /// Terms whose basis element has the given length.
    Combination of_length(int l) const {
        Combination r;
        for (const auto& [w, c] : terms_)
            if (w.length() == l) r.terms_.emplace(w, c);
        return r;
    }

    bool operator==(const Combination& o) const { return terms_ == o.terms_; }

   private:
    Terms terms_;
};

/// Matrix of an operator in a basis indexed by W: entries[row][col] is the
/// coefficient of basis element `order[row]` in the image of `order[col]`.
template <class Coeff>
struct BasisMatrix {
    std::vector<WeylElement> order;
    std::vector<std::vector<Coeff>> entries;

    std::size_t size() const noexcept { return order.size(); }
    const Coeff& operator()(std::size_t r, std::size_t c) const { return entries[r][c]; }

    bool operator==(const BasisMatrix& o) const { return order == o.order && entries == o.entries; }
};

/// Columns are op(basis element) expanded in the same basis, W in group order.
template <class Coeff>
BasisMatrix<Coeff> matrix_from_columns(const WeylGroup& g,
                                       const std::function<Combination<Coeff>(const WeylElement&)>& op) {
    BasisMatrix<Coeff> m;
    m.order = g.elements();
    const std::size_t n = m.order.size();
    m.entries.assign(n, std::vector<Coeff>(n));
    for (std::size_t c = 0; c < n; ++c) {
        Combination<Coeff> col = op(m.order[c]);
        for (const auto& [w, coeff] : col.terms()) m.entries[w.index()][c] = coeff;
    }
    return m;
}

/// Exact matrix product over the coefficient ring.
template <class Coeff>
BasisMatrix<Coeff> multiply(const BasisMatrix<Coeff>& a, const BasisMatrix<Coeff>& b) {
    BasisMatrix<Coeff> r;
    r.order = a.order;
    const std::size_t n = a.size();
    r.entries.assign(n, std::vector<Coeff>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.entries[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b.entries[k][j].is_zero()) continue;
                r.entries[i][j] += a.entries[i][k] * b.entries[k][j];
            }
        }
    return r;
}

/// True when m is the identity; `one` is the unit of the coefficient ring.
template <class Coeff>
bool is_identity(const BasisMatrix<Coeff>& m, const Coeff& one) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (!(m.entries[i][j] == (i == j ? one : Coeff()))) return false;
    return true;
}

}  // namespace flagcalc
