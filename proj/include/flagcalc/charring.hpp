#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "flagcalc/rootsys.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// Element of Z[y], dense from degree 0. Arithmetic is overflow-checked.
class YPolynomial {
   public:
    using Coeffs = boost::container::small_vector<std::int64_t, 3>;

    YPolynomial() = default;
    YPolynomial(std::int64_t c);  // NOLINT: integers are constants of Z[y]
    explicit YPolynomial(std::vector<std::int64_t> coeffs);
    static YPolynomial y(int power = 1);

    const Coeffs& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
    std::int64_t evaluate(std::int64_t y) const;

    YPolynomial& operator+=(const YPolynomial& o);
    YPolynomial& operator-=(const YPolynomial& o);
    YPolynomial& operator*=(const YPolynomial& o);
    friend YPolynomial operator+(YPolynomial a, const YPolynomial& b) { return a += b; }
    friend YPolynomial operator-(YPolynomial a, const YPolynomial& b) { return a -= b; }
    friend YPolynomial operator*(YPolynomial a, const YPolynomial& b) { return a *= b; }
    friend YPolynomial operator-(YPolynomial a);

    /// Quotient in Z[y] when d divides *this exactly.
    std::optional<YPolynomial> divide_exact(const YPolynomial& d) const;

    bool operator==(const YPolynomial&) const = default;

   private:
    void trim();
    Coeffs c_;
};

/// Element of R(T)[y] = Z[y][weight lattice]: a finite sum of p_lambda(y) e^lambda.
class LaurentPolynomial {
   public:
    using Terms = std::map<Weight, YPolynomial>;

    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(const Weight& w, const YPolynomial& c = 1);
    /// c * e^0 in a lattice of the given rank.
    static LaurentPolynomial constant(std::size_t rank, const YPolynomial& c);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    YPolynomial coefficient(const Weight& w) const;
    void add_term(const Weight& w, const YPolynomial& c);

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(const YPolynomial& s);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend LaurentPolynomial operator*(const YPolynomial& s, LaurentPolynomial a) { return a *= s; }
    friend LaurentPolynomial operator-(LaurentPolynomial a) { return a *= YPolynomial(-1); }

    /// Multiply by e^w.
    LaurentPolynomial shifted(const Weight& w) const;
    LaurentPolynomial specialize_y(std::int64_t v) const;
    /// True when every coefficient is a constant of Z[y].
    bool is_y_free() const;
    /// True when *this = c * e^w for a single weight.
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    bool operator==(const LaurentPolynomial&) const = default;

   private:
    Terms terms_;
};

/// Exact quotient f / g in R(T)[y], or nullopt when g does not divide f.
std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& f, const LaurentPolynomial& g);

/// e^lambda -> e^{w(lambda)}.
LaurentPolynomial weyl_act(const WeylElement& w, const LaurentPolynomial& f);

/// (f - e^{alpha_i} s_i(f)) / (1 - e^{alpha_i}), via per-monomial geometric sums.
LaurentPolynomial isobaric_dd(const RootSystem& rs, int i, const LaurentPolynomial& f);

/// The operators T^1_beta (eps = 1, e^lambda -> e^{s_beta lambda}) and T^0_beta
/// (eps = 0, the truncated beta-string sums) on R(T)[y].
LaurentPolynomial t_operator(const RootSystem& rs, const Root& beta, int eps, const LaurentPolynomial& f);

}  // namespace flagcalc
