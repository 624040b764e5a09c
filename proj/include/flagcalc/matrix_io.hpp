#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "flagcalc/combination.hpp"
#include "flagcalc/charring.hpp"
#include "flagcalc/sympoly.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

enum class Format { Ascii, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// Labels a matrix: `basis` is one of schubert, ideal, fixed, coh and
/// `symbol` the prefix used for row and column labels (O, I, FP, X).
struct MatrixLabel {
    int gen = 1;
    std::string basis;
    std::string symbol;
};

std::string render_matrix(const WeylGroup& g, const MatrixLabel& label, const BasisMatrix<LaurentPolynomial>& m,
                          Format f);
std::string render_matrix(const WeylGroup& g, const MatrixLabel& label, const BasisMatrix<SymPolynomial>& m,
                          Format f);

// Readers for the csv and json forms, used to check that every format
// carries the same data. Throw ParseError on malformed input.
BasisMatrix<LaurentPolynomial> read_laurent_matrix_csv(const WeylGroup& g, std::string_view text);
BasisMatrix<LaurentPolynomial> read_laurent_matrix_json(const WeylGroup& g, std::string_view text);
BasisMatrix<SymPolynomial> read_sym_matrix_csv(const WeylGroup& g, std::string_view text);
BasisMatrix<SymPolynomial> read_sym_matrix_json(const WeylGroup& g, std::string_view text);
/// The ascii grid; cells are separated by runs of two or more spaces.
BasisMatrix<LaurentPolynomial> read_laurent_matrix_ascii(const WeylGroup& g, std::string_view text);
BasisMatrix<SymPolynomial> read_sym_matrix_ascii(const WeylGroup& g, std::string_view text);

}  // namespace flagcalc
