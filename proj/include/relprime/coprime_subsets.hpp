#pragma once

// Counts of relatively prime subsets of {1..n}.
//
//   f(n)    = #{ nonempty A in {1..n} : gcd(A) = 1 }
//           = sum_{d=1..n} mu(d) (2^[n/d] - 1)
//   f_k(n)  = #{ A in {1..n} : |A| = k, gcd(A) = 1 }
//           = sum_{d=1..n} mu(d) C([n/d], k)
//
// Both are evaluated with integer floor division only.

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>

#include "arith.hpp"
#include "bignum.hpp"
#include "errors.hpp"

namespace relprime {

enum class Method { formula, oracle };

inline const char* to_string(Method m)
{
    return m == Method::formula ? "formula" : "oracle";
}

struct CountReport {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
    std::optional<std::uint64_t> d;
    BigNat count;
    Method method = Method::formula;
    std::chrono::nanoseconds elapsed{0};

    double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

/// Runs `compute` once and wraps its result with the wall time it took.
template <class Compute>
CountReport measure(std::uint64_t n, std::optional<std::uint64_t> k, std::optional<std::uint64_t> d, Method method,
                    Compute&& compute)
{
    auto t0 = std::chrono::steady_clock::now();
    BigNat value = compute();
    auto t1 = std::chrono::steady_clock::now();
    return CountReport{n, k, d, std::move(value), method,
                       std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)};
}

/// Closed interval [lower, upper]; lower may be negative.
struct Bounds {
    BigInt lower;
    BigNat upper;

    bool contains(const BigNat& v) const { return lower <= v.value() && v <= upper; }
};

namespace detail {

inline BigNat coprime_sum(const MobiusTable& mu, std::uint64_t n)
{
    BigInt acc = 0;
    for (std::uint64_t d = 1; d <= n; ++d) {
        int m = mu[d];
        if (m == 0)
            continue;
        BigInt term = pow2_minus_1(n / d).value();
        if (m > 0)
            acc += term;
        else
            acc -= term;
    }
    return BigNat(std::move(acc));
}

template <class Binom>
BigNat coprime_sum_k(const MobiusTable& mu, std::uint64_t n, std::uint64_t k, Binom&& binom)
{
    BigInt acc = 0;
    // C([n/d], k) vanishes once d > n/k.
    for (std::uint64_t d = 1; d <= n / k; ++d) {
        int m = mu[d];
        if (m == 0)
            continue;
        const BigNat& c = binom(n / d, k);
        if (m > 0)
            acc += c.value();
        else
            acc -= c.value();
    }
    return BigNat(std::move(acc));
}

} // namespace detail

/// Memoizing evaluator for f and f_k. Sequence runs evaluate f([n/d]) for
/// the same arguments many times; this caches every value it computes.
/// Not thread-safe; use one instance per thread.
class CoprimeSubsetCounter {
public:
    explicit CoprimeSubsetCounter(std::shared_ptr<const MobiusTable> mu = nullptr) : mu_(std::move(mu)) {}

    const BigNat& count(std::uint64_t n)
    {
        require(n >= 1, "f(n): n must be >= 1");
        if (auto it = f_memo_.find(n); it != f_memo_.end())
            return it->second;
        return f_memo_.emplace(n, detail::coprime_sum(table(n), n)).first->second;
    }

    const BigNat& count(std::uint64_t n, std::uint64_t k)
    {
        require(n >= 1, "f_k(n): n must be >= 1");
        require(k >= 1, "f_k(n): k must be >= 1");
        if (k > n)
            return zero_;
        auto key = std::pair{n, k};
        if (auto it = fk_memo_.find(key); it != fk_memo_.end())
            return it->second;
        auto value = detail::coprime_sum_k(table(n), n, k,
                                           [this](std::uint64_t m, std::uint64_t kk) -> const BigNat& {
                                               return binomial_cached(m, kk);
                                           });
        return fk_memo_.emplace(key, std::move(value)).first->second;
    }

    /// sum_{d=1..n} f([n/d]) == 2^n - 1
    bool check_recursion(std::uint64_t n)
    {
        require(n >= 1, "f recursion: n must be >= 1");
        BigNat sum;
        for (std::uint64_t d = 1; d <= n; ++d)
            sum += count(n / d);
        return sum == pow2_minus_1(n);
    }

    /// sum_{d=1..n} f_k([n/d]) == C(n, k)
    bool check_recursion(std::uint64_t n, std::uint64_t k)
    {
        require(n >= 1 && k >= 1, "f_k recursion: n and k must be >= 1");
        BigNat sum;
        for (std::uint64_t d = 1; d <= n; ++d)
            sum += count(n / d, k);
        return sum == binomial_cached(n, k);
    }

    const BigNat& binomial_cached(std::uint64_t m, std::uint64_t k)
    {
        if (k > m)
            return zero_;
        auto key = std::pair{m, k};
        if (auto it = binom_memo_.find(key); it != binom_memo_.end())
            return it->second;
        return binom_memo_.emplace(key, binomial(m, k)).first->second;
    }

private:
    const MobiusTable& table(std::uint64_t n)
    {
        if (!mu_ || mu_->limit() < n)
            mu_ = shared_mobius(n);
        return *mu_;
    }

    struct PairHash {
        std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const noexcept
        {
            return std::hash<std::uint64_t>{}(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
        }
    };

    std::shared_ptr<const MobiusTable> mu_;
    std::unordered_map<std::uint64_t, BigNat> f_memo_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, BigNat, PairHash> fk_memo_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, BigNat, PairHash> binom_memo_;
    BigNat zero_;
};

/// f(n): number of nonempty relatively prime subsets of {1..n}.
inline BigNat count_coprime_subsets(std::uint64_t n)
{
    require(n >= 1, "f(n): n must be >= 1");
    return detail::coprime_sum(*shared_mobius(n), n);
}

/// f_k(n): number of relatively prime k-subsets of {1..n}; 0 when k > n.
inline BigNat count_coprime_subsets(std::uint64_t n, std::uint64_t k)
{
    require(n >= 1, "f_k(n): n must be >= 1");
    require(k >= 1, "f_k(n): k must be >= 1");
    if (k > n)
        return {};
    BigNat scratch;
    return detail::coprime_sum_k(*shared_mobius(n), n, k, [&](std::uint64_t m, std::uint64_t kk) -> const BigNat& {
        scratch = binomial(m, kk);
        return scratch;
    });
}

/// [2^n - 2^[n/2] - n 2^[n/3],  2^n - 2^[n/2]]
inline Bounds coprime_subset_bounds(std::uint64_t n)
{
    require(n >= 1, "f bounds: n must be >= 1");
    BigNat upper = BigNat::pow2(n) - BigNat::pow2(n / 2);
    BigInt lower = upper.value() - BigInt(n) * BigNat::pow2(n / 3).value();
    return {std::move(lower), std::move(upper)};
}

/// [C(n,k) - C([n/2],k) - n C([n/3],k),  C(n,k) - C([n/2],k)]
inline Bounds coprime_subset_bounds(std::uint64_t n, std::uint64_t k)
{
    require(n >= 1 && k >= 1, "f_k bounds: n and k must be >= 1");
    BigNat upper = binomial(n, k) - binomial(n / 2, k);
    BigInt lower = upper.value() - BigInt(n) * binomial(n / 3, k).value();
    return {std::move(lower), std::move(upper)};
}

inline bool check_coprime_recursion(std::uint64_t n)
{
    CoprimeSubsetCounter counter;
    return counter.check_recursion(n);
}

inline bool check_coprime_recursion(std::uint64_t n, std::uint64_t k)
{
    CoprimeSubsetCounter counter;
    return counter.check_recursion(n, k);
}

/// 2^(n-1) + 2^(n-2): sets containing 1, plus sets built around {2,3},
/// {2,5} and {3,5} that avoid the smaller generators.
inline BigNat constructive_lower_bound(std::uint64_t n)
{
    require(n >= 5, "constructive lower bound: n must be >= 5");
    return BigNat::pow2(n - 1) + BigNat::pow2(n - 2);
}

} // namespace relprime
