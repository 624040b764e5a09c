#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flagcalc {

/// Largest rank of any supported Cartan type (A5).
inline constexpr std::size_t kMaxRank = 5;

/// A weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_{i+1}^vee>.
class Weight {
   public:
    Weight() = default;
    explicit Weight(std::size_t rank);
    Weight(std::initializer_list<int> coords);
    static Weight from_span(std::span<const int> coords);

    std::size_t rank() const noexcept { return rank_; }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    std::span<const int> coords() const noexcept { return {c_.data(), rank_}; }
    bool is_zero() const noexcept;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(int k);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a) { return a *= k; }
    friend Weight operator-(Weight a) { return a *= -1; }

    auto operator<=>(const Weight&) const = default;

   private:
    std::array<int, kMaxRank> c_{};
    std::uint8_t rank_ = 0;
};

using SimpleCoords = std::array<int, kMaxRank>;

/// A root of the system, with its simple-root coordinates and coroot cached.
struct Root {
    Weight weight;
    SimpleCoords simple{};
    /// <lambda, beta^vee> = sum_j coroot[j] * lambda[j]
    Weight coroot;
    bool positive = true;

    int height() const noexcept;
    Root operator-() const;
    bool operator==(const Root& o) const { return weight == o.weight; }
};

enum class Family { A, B, C, D, G };

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    char letter() const noexcept;
    std::string name() const;
    bool operator==(const CartanType&) const = default;
};

/// Finite crystallographic root system. Immutable once built.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee> (0-based storage).
/// Public functions taking a "simple index" use 1-based indices.
class RootSystem {
   public:
    /// Supported: A1..A5, B2, C2, G2, D4. Throws UnsupportedType otherwise.
    static RootSystem build(char type, int rank);

    const CartanType& type() const noexcept { return type_; }
    std::size_t rank() const noexcept { return n_; }
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i * n_ + j]; }
    int symmetrizer(std::size_t i) const { return sym_[i]; }
    /// Determinant of the Cartan matrix (always positive).
    long determinant() const noexcept { return det_; }

    /// Ordered by height, then lexicographically on simple-root coordinates.
    const std::vector<Root>& positive_roots() const noexcept { return positive_; }
    const Root& simple_root(int i) const;
    const Root& highest_root() const { return positive_.back(); }
    /// Order of s_i s_j.
    int coxeter_order(int i, int j) const;

    /// Looks up +-beta among the roots.
    std::optional<Root> find_root(const Weight& w) const;
    /// Throws PreconditionViolated when w is not a root.
    Root root(const Weight& w) const;

    int pairing(const Weight& lambda, const Root& beta) const;
    Weight reflect(const Weight& lambda, const Root& beta) const;
    /// Sign of the invariant form (a, b): -1, 0 or +1.
    int inner_sign(const Weight& a, const Weight& b) const;
    /// det(C) * (a, b) under the normalisation (alpha_i, alpha_i) = 2 d_i. Always an integer.
    long scaled_form(const Weight& a, const Weight& b) const;

    /// Unique solution of C m = coords, if integral.
    std::optional<SimpleCoords> to_simple_coords(const Weight& w) const;
    /// det(C) * (C^{-1} coords); integral for every weight.
    SimpleCoords scaled_simple_coords(const Weight& w) const;
    Weight from_simple_coords(std::span<const int> m) const;
    /// Simple root alpha_i as a weight (column i of the Cartan matrix).
    Weight alpha(int i) const { return simple_root(i).weight; }
    Weight fundamental_weight(int i) const;
    Weight zero() const { return Weight(n_); }

    bool is_positive_root(const Weight& w) const;

   private:
    RootSystem() = default;
    Root make_root(const Weight& w) const;

    CartanType type_;
    std::size_t n_ = 0;
    std::vector<int> cartan_;
    std::vector<int> sym_;
    std::vector<long> adj_;  // adjugate of the Cartan matrix, row-major
    long det_ = 1;
    std::vector<Root> positive_;
    std::vector<Root> simple_;
};

}  // namespace flagcalc
