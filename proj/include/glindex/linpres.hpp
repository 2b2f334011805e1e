#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "glindex/monomial.hpp"

namespace glindex {

/// Graph on minimal generators; u and v are adjacent when lcm(u, v) has
/// degree d + 1. Vertices are in lexicographic order and adjacency lists
/// are sorted, so searches visit neighbours in lexicographic order.
struct GeneratorGraph {
    std::vector<Monomial> vertices;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t edge_count() const;
    std::optional<std::size_t> index_of(const Monomial& m) const;
};

/// Throws UnsupportedInput unless I is generated in a single degree.
GeneratorGraph generator_graph(const MonomialIdeal& ideal);

/// Subgraph induced on the generators dividing lcm(u, v). Throws
/// std::invalid_argument unless u and v are minimal generators.
GeneratorGraph restricted_graph(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v);

struct PairConnection {
    bool connected = false;
    /// A shortest path from u to v when connected.
    std::vector<Monomial> path;
};

PairConnection pair_connected(const MonomialIdeal& ideal, const Monomial& u, const Monomial& v);

struct PresentationWitness {
    Monomial u;
    Monomial v;
};

struct PresentationResult {
    bool linearly_presented = true;
    /// First disconnected pair in lexicographic order, when not presented.
    std::optional<PresentationWitness> witness;
};

/// Linear presentation via the path criterion: every pair of generators is
/// joined inside the graph restricted to the divisors of its lcm.
PresentationResult linearly_presented_graph(const MonomialIdeal& ideal);

/// linearly_presented_graph applied to the k-th power.
PresentationResult power_check(const MonomialIdeal& ideal, int k);

/// Whether ∏_{i∈A} u_i · ∏_{j∈B} v_j divides lcm(∏ u_i, ∏ v_j). Indices are
/// 0-based; both sets must be non-empty with |A| + |B| = k.
bool split_divides(std::span<const Monomial> u_factors, std::span<const Monomial> v_factors,
                   std::span<const std::size_t> a, std::span<const std::size_t> b);

} // namespace glindex
