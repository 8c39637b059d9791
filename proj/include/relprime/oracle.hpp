#pragma once

// Brute-force ground truth: walk every nonempty subset of {1..n} as a bit
// mask (bit i set iff i+1 is in the subset) and tabulate gcd and size.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"

namespace relprime {

/// Hard ceiling on n; 2^26 masks is desk scale.
inline constexpr unsigned kOracleCeiling = 26;

/// The ceiling, lowered by RELPRIME_ORACLE_MAX when that holds a smaller
/// positive integer. Larger or malformed values are ignored.
inline unsigned oracle_limit()
{
    unsigned limit = kOracleCeiling;
    if (const char* env = std::getenv("RELPRIME_ORACLE_MAX")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < limit)
            limit = static_cast<unsigned>(v);
    }
    return limit;
}

inline void require_oracle_range(std::uint64_t n)
{
    auto limit = oracle_limit();
    require(n >= 1 && n <= limit,
            "oracle: n must be in 1.." + std::to_string(limit) + " (got " + std::to_string(n) + ")");
}

using SubsetMask = std::uint32_t;

/// gcd of the elements encoded by `mask`, visiting set bits lowest first and
/// stopping as soon as the running gcd reaches 1.
inline unsigned mask_gcd(SubsetMask mask)
{
    unsigned g = 0;
    while (mask) {
        g = std::gcd(g, static_cast<unsigned>(std::countr_zero(mask)) + 1);
        if (g == 1)
            return 1;
        mask &= mask - 1;
    }
    return g;
}

/// Same as mask_gcd without the early exit.
inline unsigned mask_gcd_full(SubsetMask mask)
{
    unsigned g = 0;
    for (unsigned i = 0; i < 32; ++i)
        if (mask >> i & 1u)
            g = std::gcd(g, i + 1);
    return g;
}

/// counts(g, k): number of subsets of {1..n} with gcd g and size k.
class GcdCensus {
public:
    explicit GcdCensus(unsigned n) : n_(n), counts_((n + 1) * (n + 1), 0) {}

    unsigned n() const noexcept { return n_; }
    std::uint64_t at(unsigned g, unsigned k) const { return counts_[g * (n_ + 1) + k]; }
    void add(unsigned g, unsigned k, std::uint64_t c = 1) { counts_[g * (n_ + 1) + k] += c; }

    GcdCensus& operator+=(const GcdCensus& o)
    {
        for (std::size_t i = 0; i < counts_.size(); ++i)
            counts_[i] += o.counts_[i];
        return *this;
    }
    friend bool operator==(const GcdCensus&, const GcdCensus&) = default;

    /// Sum of at(g, k) over g satisfying `pred` and k in [k_lo, k_hi].
    template <class Pred>
    std::uint64_t sum(Pred&& pred, unsigned k_lo = 0, unsigned k_hi = ~0u) const
    {
        std::uint64_t total = 0;
        for (unsigned g = 1; g <= n_; ++g) {
            if (!pred(g))
                continue;
            for (unsigned k = k_lo; k <= std::min(k_hi, n_); ++k)
                total += at(g, k);
        }
        return total;
    }

    std::uint64_t total() const
    {
        return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
    }

private:
    unsigned n_;
    std::vector<std::uint64_t> counts_;
};

/// Census over masks in [begin, end).
inline GcdCensus gcd_census_range(unsigned n, std::uint64_t begin, std::uint64_t end)
{
    require(n >= 1 && n <= kOracleCeiling, "oracle: n out of range");
    GcdCensus census(n);
    for (std::uint64_t m = std::max<std::uint64_t>(begin, 1); m < end; ++m) {
        auto mask = static_cast<SubsetMask>(m);
        census.add(mask_gcd(mask), static_cast<unsigned>(std::popcount(mask)));
    }
    return census;
}

/// Full census of the 2^n - 1 nonempty subsets, split across `threads`
/// disjoint chunks.
inline GcdCensus gcd_census(unsigned n, unsigned threads = 1)
{
    require_oracle_range(n);
    const std::uint64_t end = std::uint64_t{1} << n;
    threads = std::clamp<unsigned>(threads, 1, 64);
    if (threads == 1)
        return gcd_census_range(n, 1, end);

    std::vector<GcdCensus> parts(threads, GcdCensus(n));
    {
        std::vector<std::jthread> workers;
        const std::uint64_t step = (end + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t lo = t * step, hi = std::min(end, lo + step);
            workers.emplace_back([&parts, t, n, lo, hi] { parts[t] = gcd_census_range(n, lo, hi); });
        }
    }
    GcdCensus total(n);
    for (auto& p : parts)
        total += p;
    return total;
}

inline BigNat brute_coprime_count(unsigned n)
{
    return gcd_census(n).sum([](unsigned g) { return g == 1; });
}

inline BigNat brute_coprime_count(unsigned n, unsigned k)
{
    require(k >= 1, "oracle: k must be >= 1");
    require_oracle_range(n);
    if (k > n)
        return {};
    return gcd_census(n).sum([](unsigned g) { return g == 1; }, k, k);
}

inline BigNat brute_phi(unsigned n)
{
    return gcd_census(n).sum([n](unsigned g) { return std::gcd(g, n) == 1; });
}

inline BigNat brute_phi(unsigned n, unsigned k)
{
    require(k >= 1, "oracle: k must be >= 1");
    require_oracle_range(n);
    if (k > n)
        return {};
    return gcd_census(n).sum([n](unsigned g) { return std::gcd(g, n) == 1; }, k, k);
}

/// Subsets with gcd(gcd(A), n) == d.
inline BigNat brute_psi(unsigned n, unsigned d)
{
    require_oracle_range(n);
    require(d >= 1 && n % d == 0, "oracle: d must divide n");
    return gcd_census(n).sum([n, d](unsigned g) { return std::gcd(g, n) == d; });
}

/// Subsets with gcd(A) == d.
inline BigNat brute_count_with_gcd(unsigned n, unsigned d)
{
    require_oracle_range(n);
    require(d >= 1 && d <= n, "oracle: d must be in 1..n");
    return gcd_census(n).sum([d](unsigned g) { return g == d; });
}

} // namespace relprime
