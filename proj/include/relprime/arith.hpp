#pragma once

// Classical arithmetic primitives: Möbius sieve, divisor lists, exact
// binomials, set gcd, Euler's totient.

#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"
#include "integer_set.hpp"

namespace relprime {

/// Immutable table of mu(1..limit).
class MobiusTable {
public:
    explicit MobiusTable(std::uint64_t limit) : values_(limit + 1, 1)
    {
        require(limit >= 1, "mobius_sieve: limit must be >= 1");
        values_[0] = 0;
        std::vector<bool> composite(limit + 1, false);
        for (std::uint64_t p = 2; p <= limit; ++p) {
            if (composite[p])
                continue;
            for (std::uint64_t m = p; m <= limit; m += p) {
                if (m != p)
                    composite[m] = true;
                values_[m] = static_cast<std::int8_t>(-values_[m]);
            }
            if (p <= limit / p)
                for (std::uint64_t sq = p * p, m = sq; m <= limit; m += sq)
                    values_[m] = 0;
        }
    }

    std::uint64_t limit() const noexcept { return values_.size() - 1; }

    int mu(std::uint64_t d) const
    {
        if (d == 0 || d > limit())
            throw std::out_of_range("MobiusTable: " + std::to_string(d) + " outside 1.." + std::to_string(limit()));
        return values_[d];
    }
    int operator[](std::uint64_t d) const { return mu(d); }

    /// mu(1..limit); index 0 is padding and holds 0.
    std::span<const std::int8_t> values() const noexcept { return values_; }

private:
    std::vector<std::int8_t> values_;
};

inline MobiusTable mobius_sieve(std::uint64_t limit)
{
    return MobiusTable(limit);
}

/// Process-wide table covering at least 1..limit. The table is rebuilt
/// (never shrunk) when a larger limit is requested; previously returned
/// handles stay valid.
inline std::shared_ptr<const MobiusTable> shared_mobius(std::uint64_t limit)
{
    static std::mutex mtx;
    static std::shared_ptr<const MobiusTable> table;
    require(limit >= 1, "mobius_sieve: limit must be >= 1");
    std::lock_guard lock(mtx);
    if (!table || table->limit() < limit)
        table = std::make_shared<const MobiusTable>(std::max<std::uint64_t>(limit, 64));
    return table;
}

/// Divisors of n in ascending order.
inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    require(n >= 1, "divisors: n must be >= 1");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t i = 1; i <= n / i; ++i) {
        if (n % i != 0)
            continue;
        small.push_back(i);
        if (i != n / i)
            large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// C(n, k); zero when k > n.
inline BigNat binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return {};
    k = std::min(k, n - k);
    BigInt r = 1;
    // r holds C(n-k+i, i) after step i, so every division is exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return BigNat(std::move(r));
}

/// gcd of the absolute values of the elements; gcd({0}) = 0.
inline std::uint64_t gcd_set(const IntegerSet& s)
{
    require(!s.empty(), "gcd_set: empty set");
    std::uint64_t g = 0;
    for (auto v : s) {
        auto mag = v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
        g = std::gcd(g, mag);
    }
    return g;
}

inline std::uint64_t euler_phi(std::uint64_t n)
{
    require(n >= 1, "euler_phi: n must be >= 1");
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

} // namespace relprime
