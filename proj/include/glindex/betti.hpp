#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glindex/clutter.hpp"
#include "glindex/complex.hpp"
#include "glindex/linalg.hpp"
#include "glindex/monomial.hpp"

namespace glindex {

/// Green–Lazarsfeld index: a positive integer or infinity.
class IndexValue {
public:
    static IndexValue infinity() { return IndexValue(); }
    static IndexValue of(int value);

    bool is_infinite() const noexcept { return !value_; }
    /// Throws std::logic_error for infinity.
    int value() const;
    /// Decimal value or "inf".
    std::string to_string() const;

    friend bool operator==(const IndexValue&, const IndexValue&) = default;
    /// Infinity compares above every integer.
    friend std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b)
    {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }
    friend bool operator>(const IndexValue& a, int b) { return a.is_infinite() || *a.value_ > b; }

private:
    std::optional<int> value_;
};

/// Graded Betti numbers keyed by (homological degree i, total degree j).
using GradedBetti = std::map<std::pair<int, int>, std::size_t>;

struct BettiEntry {
    int i = 0;
    Monomial degree;
    std::size_t rank = 0;

    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Non-zero multigraded Betti numbers of an ideal, sorted by (i, multidegree).
class BettiTable {
public:
    BettiTable() = default;
    BettiTable(std::size_t vars, std::vector<BettiEntry> entries);

    std::size_t vars() const noexcept { return vars_; }
    const std::vector<BettiEntry>& multigraded() const noexcept { return entries_; }
    /// Sum of the multigraded entries of each total degree.
    GradedBetti graded() const;
    std::size_t at(int i, int j) const;

private:
    std::size_t vars_ = 0;
    std::vector<BettiEntry> entries_;
};

/// β_{i,u}(I) = dim H̃_{i-1} of the open interval (1, u) of the lcm-lattice.
/// Zero when u is 1 or not in the lattice. For i <= 1 only connectivity is
/// needed, which does not depend on the field.
std::size_t beta_multi(const MonomialIdeal& ideal, int i, const Monomial& u, Field f = Field::rationals());

/// β_{i,j}(I): the sum of β_{i,u} over lattice elements of degree j.
std::size_t beta_graded(const MonomialIdeal& ideal, int i, int j, Field f = Field::rationals());

/// All non-zero multigraded Betti numbers, from the lcm-lattice.
BettiTable betti_table(const MonomialIdeal& ideal, Field f = Field::rationals());

/// β_{i,j}(I_Δ) = Σ_{|W|=j} dim H̃_{j-i-2}(Δ[W]) for the Stanley–Reisner ideal of Δ.
GradedBetti hochster_table(const SimplicialComplex& delta, Field f = Field::rationals());
std::size_t hochster_beta(const SimplicialComplex& delta, int i, int j, Field f = Field::rationals());
/// Square-free ideals only; throws UnsupportedInput otherwise.
std::size_t hochster_beta(const MonomialIdeal& ideal, int i, int j, Field f = Field::rationals());
/// Uses I(C) = I_Δ with Δ the clique complex of the complement.
std::size_t hochster_beta(const Clutter& c, int i, int j, Field f = Field::rationals());

/// Whether the Stanley–Reisner ideal of Δ has a d-linear resolution, i.e.
/// every induced subcomplex has homology only in degree d - 2.
bool hochster_linear(const SimplicialComplex& delta, std::size_t d, Field f = Field::rationals());

/// Least i >= 1 with β_{i,j} != 0 for some j - i > d, or infinity. Throws
/// UnsupportedInput unless I is non-zero and generated in a single degree d.
IndexValue gl_index(const MonomialIdeal& ideal, Field f = Field::rationals());

/// β_{1,j}(I) = 0 for j = d+2 .. 2d.
bool is_linearly_presented(const MonomialIdeal& ideal, Field f = Field::rationals());

bool has_linear_resolution(const MonomialIdeal& ideal, Field f = Field::rationals());

} // namespace glindex
