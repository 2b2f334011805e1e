#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "glindex/clutter.hpp"
#include "glindex/monomial.hpp"

namespace glindex {

/// Worker budget and cache location shared by the search routines.
struct SearchOptions {
    /// 0 means one worker per hardware thread.
    unsigned jobs = 0;
    /// Directory for persistent results; empty disables the disk cache.
    std::string cache_dir;
};

unsigned effective_jobs(unsigned requested);

/// Images of 0..n-1 under a permutation.
using Permutation = std::vector<std::uint8_t>;

std::uint64_t apply_to_mask(const Permutation& p, std::uint64_t mask);

/// A permutation group given by generators, with all elements materialized.
class PermGroup {
public:
    PermGroup(std::size_t degree, std::vector<Permutation> generators);
    /// Generators written as products of 1-based cycles, e.g. {{{1,2,3}}, {{1,2}}}.
    static PermGroup from_cycles(std::size_t degree, const std::vector<std::vector<std::vector<int>>>& generators);
    /// Full symmetric group on the given 1-based points, fixing the others.
    static PermGroup symmetric_on(std::size_t degree, std::span<const int> points);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const std::vector<Permutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

/// Group generated by the generators of both groups.
PermGroup join(const PermGroup& a, const PermGroup& b);

/// The printed generating sets for the stabilizers used by the quadruple
/// search: F = {1,2,4} gives <(1 2), S_{4..n}> and F = {1,4,5} gives
/// <(2 3), (4 5), S_{6..n}>. Throws UnsupportedInput for other F or n outside 6..8.
PermGroup stabilizer(std::size_t n, std::uint64_t f);

/// <(1 2 3), (1 2), (4 5 6), (4 5)> on six points.
PermGroup triangle_pair_group();

/// The nine triples with two vertices in {1,2,3} and one in {4,5,6}, sorted.
std::vector<std::uint64_t> mixed_triples();

/// Orbits of a group acting on subsets of a ground list of vertex masks.
/// A subset is a bitmask over ground positions; the ground list must be
/// closed under the group. Orbits are sorted, each led by its least member.
std::vector<std::vector<std::uint64_t>> subset_orbits(const PermGroup& g, std::span<const std::uint64_t> ground);

/// Number of orbits on k-subsets of the ground list, for k = 0..|ground|.
std::vector<std::size_t> subset_orbit_counts(const PermGroup& g, std::span<const std::uint64_t> ground);

/// Four triples (as vertex masks) with u = u1*u2 and v = v1*v2.
struct Quad {
    std::uint64_t u1 = 0, u2 = 0, v1 = 0, v2 = 0;

    friend bool operator==(const Quad&, const Quad&) = default;
    friend auto operator<=>(const Quad&, const Quad&) = default;
};

Monomial triple_monomial(std::size_t n, std::uint64_t mask);
/// lcm(u1 u2, v1 v2).
Monomial quad_lcm(std::size_t n, const Quad& q);
/// |(U1 ∪ U2) ∩ (V1 ∪ V2)|.
int quad_overlap(const Quad& q);
/// No product x_{U_i} x_{V_j} divides lcm(u, v).
bool quad_split_free(std::size_t n, const Quad& q);

struct Algorithm1Options {
    /// Keep only quadruples with supp(uv) = [n].
    bool require_full_support = true;
    /// Keep only quadruples with deg lcm(u, v) at least this value.
    int min_lcm_degree = 8;
    /// Drop representatives with |(U1 ∪ U2) ∩ (V1 ∪ V2)| = 5.
    bool drop_overlap_five = true;
};

/// Orbit representatives of split-free quadruples with U1 = {1,2,3} and
/// V1 in {{1,2,4}, {1,4,5}}, under the printed stabilizers. n in 6..8.
std::vector<Quad> algorithm1(std::size_t n, const Algorithm1Options& options = {});

/// The triple sets that drive the clutter search for one quadruple.
struct Algorithm2Sets {
    std::vector<std::uint64_t> forced_in;   ///< the four quadruple triples
    std::vector<std::uint64_t> forced_out;  ///< triples whose presence joins u and v
    std::vector<std::pair<std::uint64_t, std::uint64_t>> conflicts; ///< pairs never both present
    std::vector<std::uint64_t> free;        ///< triples in no rule
};

Algorithm2Sets algorithm2_sets(std::size_t n, const Quad& q);

/// All 3-uniform clutters D on [n] containing the quadruple whose edge ideal
/// J is linearly presented while u, v lie in different components of the
/// restricted graph of J^2. Sorted by circuit list.
std::vector<Clutter> algorithm2(std::size_t n, const Quad& q, const SearchOptions& options = {});

/// Same answer as algorithm2 by a direct search that ignores the triple
/// rules and only uses the two defining conditions. For cross-checking.
std::vector<Clutter> algorithm2_direct(std::size_t n, const Quad& q);

/// Canonical forms of all algorithm2 outputs for n = 6, 7, 8, deduplicated
/// and sorted by (vertex count, circuits). Read from and written to
/// options.cache_dir when set.
std::vector<Clutter> family_d(const SearchOptions& options = {});

/// Fast membership test for induced copies of a family given by canonical forms.
class CanonicalFamily {
public:
    explicit CanonicalFamily(std::span<const Clutter> members);

    struct Hit {
        std::size_t member = 0;
        std::uint64_t vertices = 0;
    };
    /// First vertex subset (by size, then mask) inducing a member.
    std::optional<Hit> find(const Clutter& c) const;
    bool is_free(const Clutter& c) const { return !find(c).has_value(); }
    std::size_t size() const noexcept { return members_.size(); }

private:
    std::vector<Clutter> members_;
    std::vector<std::size_t> sizes_;
};

/// Whether the complement of a 3-uniform clutter avoids every member of the
/// four-member obstruction family, by table lookup on 5- and 6-vertex subsets.
bool complement_c_free(const Clutter& c);

/// (C([d+1], d) ∪ C({2..d+2}, d)) minus {2..d+1}, on d + 2 vertices.
Clutter construct_cd(std::size_t d);

/// Canonical representatives of all d-uniform clutters on n vertices with at
/// most max_size circuits, grouped by size (index = size).
std::vector<std::vector<Clutter>> clutter_classes(std::size_t n, std::size_t d, std::size_t max_size,
                                                  const SearchOptions& options = {});

struct KappaResult {
    std::size_t kappa = 0;
    Clutter witness;
};

/// Least |C| over d-uniform clutters on at most 2d + 2 vertices whose
/// complement's edge ideal has no linear resolution. d in 2..3.
KappaResult kappa(std::size_t d, const SearchOptions& options = {});

struct OmegaResult {
    std::size_t count = 0;
    std::vector<Clutter> representatives;
};

/// Isomorphism classes of d-uniform clutters on n vertices whose edge ideal
/// has linearly presented powers below k, a power k that is not linearly
/// presented, and no proper induced subclutter with both properties.
/// Supported: d = 2, k = 1, n <= 6; d = 3, k = 1, n <= 6; d = 3, k = 2, n <= 8.
OmegaResult enumerate_omega(std::size_t d, std::size_t k, std::size_t n, const SearchOptions& options = {});

/// Whether index(I(C)^j) > 1 for j < k and index(I(C)^k) = 1.
bool first_failing_power_is(const Clutter& c, std::size_t k);

struct CensusResult {
    std::size_t cases = 0;
    std::size_t representatives = 0;
    std::vector<std::size_t> orbit_counts;
    /// Every completed case has an obstruction in the complement.
    bool all_obstructed = false;
};

/// Case count for two disjoint triples u = 123, v = 456: one case per orbit
/// representative X of mixed triples and per membership choice of the
/// triples not excluded by X (a single case when X is empty).
CensusResult case_census_deg6();

} // namespace glindex
