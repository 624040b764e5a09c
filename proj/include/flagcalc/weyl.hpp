#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flagcalc/rootsys.hpp"

namespace flagcalc {

/// Word in the simple reflections; letters are 1-based simple indices.
using Word = std::vector<int>;

/// "1,2,1"; the empty word is "e".
std::string format_word(const Word& w);
/// Accepts "e", "" and comma-separated indices. Range is not checked here.
Word parse_word(std::string_view text);

/// Matrix of a Weyl group element acting on fundamental-weight coordinates.
class WeylMatrix {
   public:
    WeylMatrix() = default;
    static WeylMatrix identity(std::size_t n);
    static WeylMatrix simple_reflection(const RootSystem& rs, int i);
    static WeylMatrix reflection(const RootSystem& rs, const Root& beta);

    std::size_t rank() const noexcept { return n_; }
    int at(std::size_t r, std::size_t c) const { return a_[r * kMaxRank + c]; }
    Weight apply(const Weight& w) const;
    friend WeylMatrix operator*(const WeylMatrix& x, const WeylMatrix& y);
    bool operator==(const WeylMatrix&) const = default;
    std::size_t hash() const noexcept;

   private:
    std::array<int, kMaxRank * kMaxRank> a_{};
    std::size_t n_ = 0;
};

/// An element of W. Only a WeylGroup creates these; values from one group
/// should not be mixed with another group's.
class WeylElement {
   public:
    const WeylMatrix& matrix() const noexcept { return matrix_; }
    int length() const noexcept { return length_; }
    /// Lexicographically minimal reduced word.
    const Word& word() const noexcept { return word_; }
    /// Position in WeylGroup::elements(), i.e. in (length, word) order.
    std::size_t index() const noexcept { return index_; }
    bool is_identity() const noexcept { return length_ == 0; }

    Weight operator()(const Weight& w) const { return matrix_.apply(w); }

    bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }
    bool operator<(const WeylElement& o) const { return index_ < o.index_; }

   private:
    friend class WeylGroup;
    WeylMatrix matrix_;
    int length_ = 0;
    Word word_;
    std::size_t index_ = 0;
};

/// The finite Weyl group of a root system, fully enumerated with
/// multiplication tables by simple reflections.
class WeylGroup {
   public:
    explicit WeylGroup(RootSystem rs);

    const RootSystem& root_system() const noexcept { return rs_; }
    std::size_t rank() const noexcept { return rs_.rank(); }
    std::size_t order() const noexcept { return elements_.size(); }

    /// All elements sorted by (length, canonical word).
    const std::vector<WeylElement>& elements() const noexcept { return elements_; }
    const WeylElement& identity() const { return elements_.front(); }
    const WeylElement& longest() const { return elements_.back(); }
    const WeylElement& generator(int i) const;
    const WeylElement& at(std::size_t index) const { return elements_.at(index); }

    /// Product of generators. Throws BadIndex on out-of-range letters.
    const WeylElement& from_word(const Word& w) const;
    const WeylElement& from_matrix(const WeylMatrix& m) const;
    const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;
    const WeylElement& inverse(const WeylElement& w) const;
    /// w * s_i
    const WeylElement& right_mul(const WeylElement& w, int i) const;
    /// s_i * w
    const WeylElement& left_mul(int i, const WeylElement& w) const;
    /// l(w s_i) > l(w)
    bool is_ascent(const WeylElement& w, int i) const;
    const WeylElement& reflection(const Root& beta) const;

    bool is_reduced(const Word& w) const;
    /// Fold x <- x s_i whenever that increases the length (0-Hecke product).
    const WeylElement& demazure_product(const Word& w) const;
    /// Demazure product of the letters of w selected by mask.
    const WeylElement& subword_mask(const Word& w, const std::vector<bool>& mask) const;
    /// Positive root beta with from_word(w) s_beta = from_word(w minus letter k); k is 1-based.
    Root deletion_reflection(const Word& w, std::size_t k) const;
    /// Roots gamma != alpha_i, gamma > 0, with l(w s_i s_gamma) = l(w) and (alpha_i, gamma) != 0.
    /// Requires l(w s_i) > l(w).
    std::vector<Root> support_set_C(const WeylElement& w, int i) const;
    bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;
    /// Shared by copies of this group, distinct for separately built groups.
    /// Lets other modules key caches on the group and notice when it is gone.
    const std::shared_ptr<const int>& token() const noexcept { return token_; }

    /// Reduced words of w in lexicographic order, at most `limit` of them.
    std::vector<Word> reduced_words(const WeylElement& w, std::size_t limit = SIZE_MAX) const;

   private:
    std::size_t checked(int i) const;

    struct MatrixHash {
        std::size_t operator()(const WeylMatrix& m) const noexcept { return m.hash(); }
    };

    RootSystem rs_;
    std::vector<WeylElement> elements_;
    std::vector<std::size_t> rmul_;  // [index * n + (i-1)]
    std::vector<std::size_t> lmul_;
    std::unordered_map<WeylMatrix, std::size_t, MatrixHash> lookup_;
    std::shared_ptr<const int> token_ = std::make_shared<const int>(0);
};

}  // namespace flagcalc
