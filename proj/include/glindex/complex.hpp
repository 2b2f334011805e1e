#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "glindex/linalg.hpp"
#include "glindex/monomial.hpp"

namespace glindex {

/// A face: strictly increasing 0-based vertex ids.
using Face = std::vector<std::uint32_t>;

/// A finite simplicial complex held as an explicit, downward-closed face set.
///
/// Faces are bucketed by cardinality and kept sorted, so bucket 0 holds the
/// empty face whenever the complex is non-void. The void complex has no
/// faces at all; the irrelevant complex {∅} has only the empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(std::size_t vertices);
    static SimplicialComplex irrelevant(std::size_t vertices);
    /// Downward closure of the given facets.
    static SimplicialComplex from_facets(std::size_t vertices, std::span<const Face> facets);
    /// Takes faces as given; throws std::invalid_argument unless the set is
    /// downward closed (when non-empty it must contain ∅).
    static SimplicialComplex from_faces(std::size_t vertices, std::vector<Face> faces);

    std::size_t vertex_count() const noexcept { return vertices_; }
    bool is_void() const noexcept { return by_size_.empty(); }
    /// Largest face cardinality minus one; -1 for {∅}. Throws for the void complex.
    int dimension() const;
    /// Faces with exactly k vertices, sorted lexicographically.
    std::span<const Face> faces_of_size(std::size_t k) const;
    std::size_t face_count() const;
    bool contains(const Face& f) const;
    /// Subcomplex of faces inside W (vertex ids unchanged).
    SimplicialComplex induced(std::span<const std::uint32_t> w) const;
    /// Number of faces with k vertices, k = 0..dim+1.
    std::vector<std::size_t> f_vector() const;
    /// Whether every subset of every face is a face.
    bool is_downward_closed() const;

private:
    std::size_t vertices_ = 0;
    std::vector<std::vector<Face>> by_size_;

    void normalize();
};

/// Matrix of the boundary map from faces of size k to faces of size k - 1
/// (k >= 1, size-1 faces map to the empty face). Signs alternate by position.
SparseMatrix boundary_matrix(const SimplicialComplex& x, std::size_t k);

/// dim H̃_i(X; f) for i = -1 .. dim X. When max_degree is given, only
/// i <= max_degree are computed (faces above max_degree + 1 are ignored).
/// The void complex yields an empty vector.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& x, Field f,
                                               std::optional<int> max_degree = std::nullopt);

/// Connectivity via union-find on the 1-skeleton. {∅} counts as connected
/// (its H̃_0 vanishes). Throws std::invalid_argument for the void complex.
bool is_connected(const SimplicialComplex& x);

/// Number of connected components of the 1-skeleton (0 for {∅}).
std::size_t component_count(const SimplicialComplex& x);

/// Order complex of a finite set of monomials under divisibility: vertex i is
/// elements[i], faces are the chains. max_face_size truncates long chains.
SimplicialComplex order_complex(std::span<const Monomial> elements,
                                std::optional<std::size_t> max_face_size = std::nullopt);

} // namespace glindex
