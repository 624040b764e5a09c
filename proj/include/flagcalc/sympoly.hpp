#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "flagcalc/rootsys.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

using Rational = boost::rational<std::int64_t>;
using Exponent = std::array<int, kMaxRank>;

/// Element of S = Sym_Q of the weight lattice. Variable x_j is the
/// fundamental weight varpi_j, so a weight lambda is the linear form sum lambda_j x_j.
class SymPolynomial {
   public:
    using Terms = std::map<Exponent, Rational>;

    SymPolynomial() = default;
    static SymPolynomial constant(Rational c);
    static SymPolynomial variable(std::size_t j);
    static SymPolynomial linear_form(const Weight& w);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for zero; otherwise the maximal total degree.
    int degree() const;
    bool is_homogeneous() const;
    bool is_integral() const;
    void add_term(const Exponent& e, Rational c);

    SymPolynomial& operator+=(const SymPolynomial& o);
    SymPolynomial& operator-=(const SymPolynomial& o);
    SymPolynomial& operator*=(Rational s);
    friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
    friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
    friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
    friend SymPolynomial operator*(Rational s, SymPolynomial a) { return a *= s; }
    friend SymPolynomial operator-(SymPolynomial a) { return a *= Rational(-1); }

    bool operator==(const SymPolynomial&) const = default;

   private:
    Terms terms_;
};

/// Ring map sending x_j to images[j].
SymPolynomial substitute(const SymPolynomial& f, const std::vector<SymPolynomial>& images);

/// Exact quotient by a nonzero linear form, or nullopt.
std::optional<SymPolynomial> divide_by_linear(const SymPolynomial& f, const SymPolynomial& linear);

/// Automorphism of S induced by w on linear forms.
SymPolynomial weyl_act_sym(const WeylElement& w, const SymPolynomial& f);

/// (f - s_i f) / (-alpha_i). Throws InternalError if the division is not exact.
SymPolynomial divided_diff_coh(const RootSystem& rs, int i, const SymPolynomial& f);

}  // namespace flagcalc
