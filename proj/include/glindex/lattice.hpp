#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "glindex/complex.hpp"
#include "glindex/monomial.hpp"

namespace glindex {

/// The lcm-lattice of a non-zero monomial ideal: every lcm of a non-empty
/// set of minimal generators, plus the bottom element 1.
class LcmLattice {
public:
    /// Saturates G(I) under lcm. Throws std::invalid_argument for the zero ideal.
    explicit LcmLattice(const MonomialIdeal& ideal);

    /// Elements sorted by degree, then lexicographically; index 0 is 1.
    const std::vector<Monomial>& elements() const noexcept { return elements_; }
    const std::vector<Monomial>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Monomial& bottom() const noexcept { return elements_.front(); }
    const Monomial& top() const noexcept { return elements_.back(); }
    bool contains(const Monomial& u) const;

    /// Elements strictly between 1 and u, in lattice order. Throws
    /// std::invalid_argument when u is not in the lattice.
    std::vector<Monomial> open_interval(const Monomial& u) const;
    /// Atoms dividing u.
    std::vector<Monomial> atoms_below(const Monomial& u) const;
    /// Number of elements in the longest chain 1 < a_1 < ... < u.
    std::size_t chain_length_to(const Monomial& u) const;

private:
    std::vector<Monomial> elements_;
    std::vector<Monomial> atoms_;
};

/// Order complex of the open interval (1, u), truncated to faces of at most
/// max_face_size vertices when given.
SimplicialComplex interval_order_complex(const LcmLattice& lattice, const Monomial& u,
                                         std::optional<std::size_t> max_face_size = std::nullopt);

/// Number of connected components of the open interval (1, u).
///
/// Two atoms below u lie in one component exactly when they are joined by a
/// sequence of atoms whose pairwise lcms stay strictly below u, so this needs
/// only the atoms. Returns 0 when u is itself an atom (empty interval).
std::size_t interval_components(std::span<const Monomial> atoms, const Monomial& u);

/// Thread-safe cache of lattices keyed by the ideal's serialization.
class LatticeCache {
public:
    std::shared_ptr<const LcmLattice> get(const MonomialIdeal& ideal);
    void clear();
    std::size_t size() const;

private:
    static constexpr std::size_t kLimit = 4096;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<const LcmLattice>> table_;
};

/// Process-wide lattice cache.
LatticeCache& lattice_cache();

} // namespace glindex
