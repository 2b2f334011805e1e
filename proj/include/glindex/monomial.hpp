#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace glindex {

/// Largest number of variables a Monomial can carry.
inline constexpr std::size_t kMaxVars = 16;

/// Raised when two objects over different variable counts are combined.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for inputs outside the range an operation supports.
class UnsupportedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A monomial x1^e1 ... xn^en stored as a fixed-capacity exponent vector.
///
/// The zero vector is the monomial 1. Exponents are limited to 255 and the
/// variable count to kMaxVars; both bounds are checked on construction.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n);
    Monomial(std::size_t n, std::span<const int> exponents);
    /// Monomial with the given exponent vector; its length is the variable count.
    static Monomial of(std::initializer_list<int> exponents);

    /// Square-free monomial x_F for a set of 1-based variable indices.
    static Monomial from_support(std::size_t n, std::span<const int> vars);
    /// Square-free monomial for a bitmask over variables (bit i = x_{i+1}).
    static Monomial from_mask(std::size_t n, std::uint64_t mask);

    std::size_t vars() const noexcept { return n_; }
    int operator[](std::size_t i) const noexcept { return exps_[i]; }
    void set(std::size_t i, int e);

    int degree() const noexcept;
    /// 0-based indices of variables with positive exponent.
    std::vector<int> support() const;
    std::uint64_t support_mask() const noexcept;
    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;
    std::vector<int> exponents() const;

    /// Human-readable form such as "x1^2*x3"; the monomial 1 prints as "1".
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Lexicographic order on exponent vectors (variable count first).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept
    {
        if (auto c = a.n_ <=> b.n_; c != 0)
            return c;
        for (std::size_t i = 0; i < a.n_; ++i)
            if (auto c = a.exps_[i] <=> b.exps_[i]; c != 0)
                return c;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const noexcept;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// a / b; requires divides(b, a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);
    friend bool divides(const Monomial& a, const Monomial& b);

private:
    std::array<std::uint8_t, kMaxVars> exps_{};
    std::uint8_t n_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial operator/(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);

/// divides() without the dimension check, for inner loops over one ideal.
inline bool divides_unchecked(const Monomial& a, const Monomial& b) noexcept
{
    for (std::size_t i = 0; i < a.vars(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Divisibility-minimal elements of ms, sorted lexicographically and deduplicated.
std::vector<Monomial> minimalize(std::span<const Monomial> ms);

/// A monomial ideal held by its minimal generating set G(I).
///
/// Generators are kept sorted in lexicographic order. An empty generator set
/// is the zero ideal. The monomial 1 is rejected as a generator.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t n) : n_(n) {}
    /// Minimalizes the given monomials. Throws DimensionError on mixed
    /// variable counts and std::invalid_argument if 1 is among them.
    MonomialIdeal(std::size_t n, std::span<const Monomial> generators);

    std::size_t vars() const noexcept { return n_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_squarefree() const noexcept;
    /// Common generator degree, or nullopt for zero or mixed-degree ideals.
    std::optional<int> generating_degree() const;
    bool contains(const Monomial& m) const;
    bool is_generator(const Monomial& m) const;

    /// Stable text key: exponent vectors of the sorted generators.
    std::string serialize() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Monomial> gens_;
};

/// Minimal generators of I^k. k = 1 returns I; the zero ideal stays zero.
MonomialIdeal power_generators(const MonomialIdeal& I, int k);

} // namespace glindex

template <>
struct std::hash<glindex::Monomial> {
    std::size_t operator()(const glindex::Monomial& m) const noexcept { return m.hash(); }
};
