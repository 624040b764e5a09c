#pragma once

#include <random>
#include <string>

#include "flagcalc/charring.hpp"
#include "flagcalc/sympoly.hpp"
#include "flagcalc/textio.hpp"
#include "flagcalc/weyl.hpp"

namespace testing {

using namespace flagcalc;

inline WeylGroup group(char type, int rank) { return WeylGroup(RootSystem::build(type, rank)); }

/// Schubert-basis class from text.
inline KClass K(const WeylGroup& g, const std::string& text) { return parse_kclass(g, text).coords; }
inline LaurentPolynomial L(const WeylGroup& g, const std::string& text) { return parse_laurent(g.root_system(), text); }
inline CohClass X(const WeylGroup& g, const std::string& text) { return parse_cohclass(g, text); }
inline SymPolynomial S(const WeylGroup& g, const std::string& text) { return parse_sym(g.root_system(), text); }

inline const WeylElement& W(const WeylGroup& g, const Word& w) { return g.from_word(w); }

inline LaurentPolynomial random_laurent(std::mt19937& rng, std::size_t rank, int terms = 4, int spread = 3,
                                        bool with_y = false) {
    std::uniform_int_distribution<int> coord(-spread, spread);
    std::uniform_int_distribution<int> coeff(-3, 3);
    LaurentPolynomial f;
    for (int t = 0; t < terms; ++t) {
        Weight w(rank);
        for (std::size_t j = 0; j < rank; ++j) w[j] = coord(rng);
        YPolynomial c = coeff(rng);
        if (with_y) c += YPolynomial(coeff(rng)) * YPolynomial::y();
        f.add_term(w, c);
    }
    return f;
}

inline SymPolynomial random_sym(std::mt19937& rng, std::size_t rank, int terms = 4, int max_exp = 2) {
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::uniform_int_distribution<int> coeff(-4, 4);
    SymPolynomial f;
    for (int t = 0; t < terms; ++t) {
        Exponent e{};
        for (std::size_t j = 0; j < rank; ++j) e[j] = ex(rng);
        f.add_term(e, Rational(coeff(rng), 1 + t % 2));
    }
    return f;
}

/// Random R(T)-combination of Schubert classes.
inline KClass random_kclass(std::mt19937& rng, const WeylGroup& g, int terms = 3) {
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    KClass u;
    for (int t = 0; t < terms; ++t) u.add_term(g.at(pick(rng)), random_laurent(rng, g.rank(), 2, 2));
    return u;
}

}  // namespace testing
