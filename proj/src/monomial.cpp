#include "glindex/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace glindex {

namespace {

void check_vars(std::size_t n)
{
    if (n == 0 || n > kMaxVars)
        throw UnsupportedInput("variable count must be in 1.." + std::to_string(kMaxVars) + ", got " +
                               std::to_string(n));
}

void check_same(const Monomial& a, const Monomial& b)
{
    if (a.vars() != b.vars())
        throw DimensionError("monomials over " + std::to_string(a.vars()) + " and " +
                             std::to_string(b.vars()) + " variables");
}

} // namespace

Monomial::Monomial(std::size_t n) : n_(static_cast<std::uint8_t>(n)) { check_vars(n); }

Monomial::Monomial(std::size_t n, std::span<const int> exponents) : Monomial(n)
{
    if (exponents.size() != n)
        throw DimensionError("expected " + std::to_string(n) + " exponents, got " +
                             std::to_string(exponents.size()));
    for (std::size_t i = 0; i < n; ++i)
        set(i, exponents[i]);
}

Monomial Monomial::of(std::initializer_list<int> exponents)
{
    return Monomial(exponents.size(), std::span<const int>(exponents.begin(), exponents.size()));
}

Monomial Monomial::from_support(std::size_t n, std::span<const int> vars)
{
    Monomial m(n);
    for (int v : vars) {
        if (v < 1 || static_cast<std::size_t>(v) > n)
            throw std::out_of_range("variable index " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n));
        m.exps_[v - 1] = 1;
    }
    return m;
}

Monomial Monomial::from_mask(std::size_t n, std::uint64_t mask)
{
    Monomial m(n);
    if (n < 64 && (mask >> n) != 0)
        throw std::out_of_range("mask has bits beyond variable count");
    for (std::size_t i = 0; i < n; ++i)
        m.exps_[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
    return m;
}

void Monomial::set(std::size_t i, int e)
{
    if (i >= n_)
        throw std::out_of_range("variable index out of range");
    if (e < 0 || e > 255)
        throw std::out_of_range("exponent " + std::to_string(e) + " outside 0..255");
    exps_[i] = static_cast<std::uint8_t>(e);
}

int Monomial::degree() const noexcept
{
    int s = 0;
    for (std::size_t i = 0; i < n_; ++i)
        s += exps_[i];
    return s;
}

std::vector<int> Monomial::support() const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (exps_[i] > 0)
            out.push_back(static_cast<int>(i));
    return out;
}

std::uint64_t Monomial::support_mask() const noexcept
{
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_; ++i)
        if (exps_[i] > 0)
            m |= std::uint64_t{1} << i;
    return m;
}

bool Monomial::is_one() const noexcept
{
    return std::all_of(exps_.begin(), exps_.begin() + n_, [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept
{
    return std::all_of(exps_.begin(), exps_.begin() + n_, [](auto e) { return e <= 1; });
}

std::vector<int> Monomial::exponents() const { return {exps_.begin(), exps_.begin() + n_}; }

std::string Monomial::to_string() const
{
    if (is_one())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < n_; ++i) {
        if (exps_[i] == 0)
            continue;
        if (!first)
            os << '*';
        first = false;
        os << 'x' << (i + 1);
        if (exps_[i] > 1)
            os << '^' << int(exps_[i]);
    }
    return os.str();
}

std::size_t Monomial::hash() const noexcept
{
    std::uint64_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        lo |= std::uint64_t{exps_[i]} << (8 * i);
        hi |= std::uint64_t{exps_[i + 8]} << (8 * i);
    }
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + n_);
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    check_same(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    check_same(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    check_same(a, b);
    Monomial r = a;
    for (std::size_t i = 0; i < a.n_; ++i) {
        int e = int(a.exps_[i]) + int(b.exps_[i]);
        if (e > 255)
            throw std::overflow_error("exponent overflow in monomial product");
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    if (!divides(b, a))
        throw std::invalid_argument(b.to_string() + " does not divide " + a.to_string());
    Monomial r = a;
    for (std::size_t i = 0; i < a.n_; ++i)
        r.exps_[i] = static_cast<std::uint8_t>(a.exps_[i] - b.exps_[i]);
    return r;
}

bool divides(const Monomial& a, const Monomial& b)
{
    check_same(a, b);
    return divides_unchecked(a, b);
}

std::vector<Monomial> minimalize(std::span<const Monomial> ms)
{
    std::vector<Monomial> sorted(ms.begin(), ms.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        check_same(sorted[0], sorted[i]);
    // Lower degree first: a divisor always precedes what it divides.
    std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
        auto da = a.degree(), db = b.degree();
        return da != db ? da < db : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Monomial> kept;
    for (const auto& m : sorted) {
        bool covered = std::any_of(kept.begin(), kept.end(),
                                   [&](const Monomial& k) { return divides_unchecked(k, m); });
        if (!covered)
            kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::span<const Monomial> generators) : n_(n)
{
    for (const auto& g : generators) {
        if (g.vars() != n)
            throw DimensionError("generator " + g.to_string() + " is over " + std::to_string(g.vars()) +
                                 " variables, ideal over " + std::to_string(n));
        if (g.is_one())
            throw std::invalid_argument("the monomial 1 is not accepted as an ideal generator");
    }
    gens_ = minimalize(generators);
}

bool MonomialIdeal::is_squarefree() const noexcept
{
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::optional<int> MonomialIdeal::generating_degree() const
{
    if (gens_.empty())
        return std::nullopt;
    int d = gens_.front().degree();
    for (const auto& g : gens_)
        if (g.degree() != d)
            return std::nullopt;
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const
{
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

bool MonomialIdeal::is_generator(const Monomial& m) const
{
    return std::binary_search(gens_.begin(), gens_.end(), m);
}

std::string MonomialIdeal::serialize() const
{
    std::ostringstream os;
    os << n_ << ':';
    for (const auto& g : gens_) {
        os << '[';
        for (std::size_t i = 0; i < n_; ++i)
            os << (i ? "," : "") << g[i];
        os << ']';
    }
    return os.str();
}

MonomialIdeal power_generators(const MonomialIdeal& I, int k)
{
    if (k < 1)
        throw std::invalid_argument("power must be positive");
    if (I.is_zero() || k == 1)
        return I;
    // I^k = I^(k-1) * I, minimalized at every step.
    std::vector<Monomial> current = I.generators();
    for (int step = 1; step < k; ++step) {
        std::vector<Monomial> products;
        products.reserve(current.size() * I.size());
        for (const auto& a : current)
            for (const auto& g : I.generators())
                products.push_back(a * g);
        current = minimalize(products);
    }
    return MonomialIdeal(I.vars(), current);
}

} // namespace glindex
