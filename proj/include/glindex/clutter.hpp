#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glindex/complex.hpp"
#include "glindex/monomial.hpp"

namespace glindex {

/// Largest vertex count a Clutter can carry (one bit per vertex).
inline constexpr std::size_t kMaxClutterVertices = 64;

/// A d-uniform clutter on the vertex set {1..n}.
///
/// Circuits are bitmasks (bit i stands for vertex i+1) kept sorted and
/// deduplicated. The cover condition is not enforced; see is_spanning().
class Clutter {
public:
    Clutter() = default;
    /// Throws std::invalid_argument if a mask has the wrong popcount or a
    /// bit outside the vertex range.
    Clutter(std::size_t n, std::size_t d, std::vector<std::uint64_t> circuits);
    /// Circuits as lists of 1-based vertices.
    static Clutter from_lists(std::size_t n, std::size_t d, const std::vector<std::vector<int>>& circuits);
    /// All d-subsets of {1..n}.
    static Clutter complete(std::size_t n, std::size_t d);

    std::size_t vertices() const noexcept { return n_; }
    std::size_t uniformity() const noexcept { return d_; }
    const std::vector<std::uint64_t>& circuits() const noexcept { return circuits_; }
    std::size_t size() const noexcept { return circuits_.size(); }
    bool empty() const noexcept { return circuits_.empty(); }
    bool contains(std::uint64_t circuit) const;
    /// Union of all circuits as a vertex mask.
    std::uint64_t cover() const noexcept;
    bool is_spanning() const noexcept;
    std::uint64_t vertex_mask() const noexcept;

    /// 1-based sorted vertex lists, in circuit order.
    std::vector<std::vector<int>> to_lists() const;
    /// Compact form such as "{123,145}" (vertices above 9 are bracketed).
    std::string to_string() const;

    friend bool operator==(const Clutter&, const Clutter&) = default;
    friend auto operator<=>(const Clutter&, const Clutter&) = default;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 0;
    std::vector<std::uint64_t> circuits_;
};

/// Mask of the vertex subset of the 1-based list.
std::uint64_t vertex_set(std::initializer_list<int> vertices);

/// d-subsets of {1..n} that are not circuits.
Clutter complement(const Clutter& c);

/// Circuits inside W, relabeled 1..|W| in increasing order of original label.
Clutter induced(const Clutter& c, std::uint64_t w);

/// Edge ideal: one square-free generator x_F per circuit. Needs n <= kMaxVars.
MonomialIdeal edge_ideal(const Clutter& c);

/// Complex of cliques: all sets of size < d plus sets whose d-subsets are all circuits.
SimplicialComplex clique_complex(const Clutter& c);

/// Stanley–Reisner complex of a square-free monomial ideal: the sets of
/// variables containing no generator support. Throws UnsupportedInput for
/// non-square-free ideals.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Canonical representative of the isomorphism class of c.
///
/// Vertices are first split into cells by iterated degree refinement; the
/// result is the lexicographically least sorted circuit list over all
/// relabelings that respect the cell order. Results are memoized in a
/// thread-safe table.
Clutter canonical_form(const Clutter& c);
bool are_isomorphic(const Clutter& a, const Clutter& b);

/// Injective map from pattern vertices to host vertices (0-based) under which
/// the induced subclutter of the host equals the pattern, if one exists.
std::optional<std::vector<int>> find_induced_embedding(const Clutter& host, const Clutter& pattern);

struct FamilyMatch {
    std::size_t pattern_index = 0;
    std::vector<int> embedding;
};

/// First member of the family (in order) that embeds induced into c, if any.
std::optional<FamilyMatch> find_family_member(const Clutter& c, std::span<const Clutter> family);
inline bool is_family_free(const Clutter& c, std::span<const Clutter> family)
{
    return !find_family_member(c, family).has_value();
}

namespace catalog {

Clutter bipyramid();          ///< B
Clutter bipyramid_plus_one(); ///< B1 = B with 125 added
Clutter bipyramid_plus_two(); ///< B2 = B with 125 and 135 added
Clutter two_triangles_removed(); ///< B' = all triples of [6] except 123, 456
Clutter sturmfels();          ///< D1_6
Clutter d6_7();
Clutter d48_7();
Clutter d1_8();
/// x1^2x2, x1^2x3, x1x3^2, x2x3^2, x1x3x4 over four variables.
MonomialIdeal conca();

/// The four obstructions to linear presentation, in the order B, B1, B2, B'.
std::vector<Clutter> family_c();

/// Names accepted by lookup(): B, B1, B2, Bprime, D1_6, D6_7, D48_7, D1_8.
std::vector<std::string> clutter_names();
std::optional<Clutter> lookup(const std::string& name);

} // namespace catalog

} // namespace glindex
