#include "glindex/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace glindex {

namespace {

bool is_prime(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    b %= p;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

constexpr std::size_t kBareissCellLimit = 4096;

} // namespace

Field Field::prime(std::uint32_t p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

Field Field::parse(const std::string& text)
{
    if (text == "q" || text == "Q")
        return rationals();
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("field must be 'q' or a prime, got '" + text + "'");
    }
    if (used != text.size() || v > 0xFFFFFFFFUL)
        throw std::invalid_argument("field must be 'q' or a prime, got '" + text + "'");
    return prime(static_cast<std::uint32_t>(v));
}

std::string Field::name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p)
{
    using Col = std::vector<std::pair<std::uint32_t, std::uint64_t>>;
    // pivot row -> reduced column whose lowest row is that pivot, scaled to 1 there
    std::unordered_map<std::uint32_t, Col> pivots;
    std::size_t r = 0;
    Col work, next;
    for (const auto& src : m.columns) {
        work.clear();
        for (auto [row, v] : src) {
            std::int64_t x = v % static_cast<std::int64_t>(p);
            if (x < 0)
                x += p;
            if (x != 0)
                work.emplace_back(row, static_cast<std::uint64_t>(x));
        }
        while (!work.empty()) {
            auto low = work.back().first;
            auto it = pivots.find(low);
            if (it == pivots.end())
                break;
            // work -= c * pivot, with c the coefficient at the shared low row
            std::uint64_t c = work.back().second;
            const Col& piv = it->second;
            next.clear();
            std::size_t i = 0, j = 0;
            while (i < work.size() || j < piv.size()) {
                if (j == piv.size() || (i < work.size() && work[i].first < piv[j].first)) {
                    next.push_back(work[i++]);
                } else if (i == work.size() || piv[j].first < work[i].first) {
                    std::uint64_t v = (p - c * piv[j].second % p) % p;
                    if (v)
                        next.emplace_back(piv[j].first, v);
                    ++j;
                } else {
                    std::uint64_t v = (work[i].second + p - c * piv[j].second % p) % p;
                    if (v)
                        next.emplace_back(work[i].first, v);
                    ++i;
                    ++j;
                }
            }
            work.swap(next);
        }
        if (!work.empty()) {
            std::uint64_t inv = inv_mod(work.back().second, p);
            for (auto& e : work)
                e.second = e.second * inv % p;
            pivots.emplace(work.back().first, work);
            ++r;
        }
    }
    return r;
}

std::size_t rank_rational_sparse(const SparseMatrix& m)
{
    using Col = std::vector<std::pair<std::uint32_t, mpz_class>>;
    std::unordered_map<std::uint32_t, Col> pivots;
    std::size_t r = 0;
    Col work, next;
    mpz_class g, a, b;
    for (const auto& src : m.columns) {
        work.clear();
        for (auto [row, v] : src)
            if (v != 0)
                work.emplace_back(row, mpz_class(static_cast<long>(v)));
        while (!work.empty()) {
            auto low = work.back().first;
            auto it = pivots.find(low);
            if (it == pivots.end())
                break;
            const Col& piv = it->second;
            // work := (p/g) * work - (w/g) * piv, clearing the shared low entry
            mpz_gcd(g.get_mpz_t(), piv.back().second.get_mpz_t(), work.back().second.get_mpz_t());
            a = piv.back().second / g;
            b = work.back().second / g;
            next.clear();
            std::size_t i = 0, j = 0;
            while (i < work.size() || j < piv.size()) {
                if (j == piv.size() || (i < work.size() && work[i].first < piv[j].first)) {
                    next.emplace_back(work[i].first, a * work[i].second);
                    ++i;
                } else if (i == work.size() || piv[j].first < work[i].first) {
                    next.emplace_back(piv[j].first, -b * piv[j].second);
                    ++j;
                } else {
                    mpz_class v = a * work[i].second - b * piv[j].second;
                    if (v != 0)
                        next.emplace_back(work[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            work.swap(next);
            if (!work.empty()) {
                g = 0;
                for (const auto& e : work)
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
                if (g > 1)
                    for (auto& e : work)
                        mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
            }
        }
        if (!work.empty()) {
            pivots.emplace(work.back().first, work);
            ++r;
        }
    }
    return r;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t rows = a.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = a[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

std::size_t rank(const SparseMatrix& m, Field f)
{
    if (m.columns.empty() || m.rows == 0)
        return 0;
    if (!f.is_rational())
        return rank_mod_p(m, f.characteristic());
    if (m.rows * m.columns.size() <= kBareissCellLimit) {
        std::vector<std::vector<mpz_class>> dense(m.rows, std::vector<mpz_class>(m.columns.size()));
        for (std::size_t j = 0; j < m.columns.size(); ++j)
            for (auto [row, v] : m.columns[j])
                dense[row][j] = static_cast<long>(v);
        return bareiss_rank(std::move(dense));
    }
    return rank_rational_sparse(m);
}

} // namespace glindex
