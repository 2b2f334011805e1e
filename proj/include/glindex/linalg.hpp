#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace glindex {

/// Coefficient field for homology: the rationals (p == 0) or GF(p).
class Field {
public:
    constexpr Field() = default;
    static constexpr Field rationals() { return Field(); }
    /// Throws std::invalid_argument unless p is prime.
    static Field prime(std::uint32_t p);
    /// Parses "q"/"Q" or a decimal prime.
    static Field parse(const std::string& text);

    bool is_rational() const noexcept { return p_ == 0; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::string name() const;

    friend bool operator==(Field, Field) = default;

private:
    std::uint32_t p_ = 0;
};

/// Sparse integer column: (row, value) pairs sorted by row, no zeros.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Sparse matrix stored by columns with a fixed row count.
struct SparseMatrix {
    std::size_t rows = 0;
    std::vector<SparseColumn> columns;
};

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Rank over Q by fraction-free column elimination on sparse columns; each
/// reduced column is divided by its content to keep entries small.
std::size_t rank_rational_sparse(const SparseMatrix& m);

/// Rank over Q of a dense integer matrix by Bareiss elimination.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a);

/// Rank over the given field. Small rational matrices go through Bareiss,
/// larger ones through the sparse fraction-free path.
std::size_t rank(const SparseMatrix& m, Field f);

} // namespace glindex
