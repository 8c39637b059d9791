#pragma once

// Phi for subsets: counts of subsets of {1..n} whose gcd is coprime to n.
//
//   Phi(n)    = #{ nonempty A in {1..n} : gcd(gcd(A), n) = 1 }
//             = sum_{d | n} mu(d) 2^(n/d)            (n >= 2), Phi(1) = 1
//   Phi_k(n)  = sum_{d | n} mu(d) C(n/d, k)
//   Psi(n, d) = #{ nonempty A : gcd(gcd(A), n) = d } = Phi(n/d)

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "arith.hpp"
#include "bignum.hpp"
#include "errors.hpp"

namespace relprime {

/// Phi (or Phi_k) split into its leading term and the remainder.
/// value == main_term + residual.
struct PhiReport {
    std::uint64_t n = 0;
    std::optional<std::uint64_t> k;
    BigNat value;
    BigNat main_term;
    BigInt residual;
};

namespace detail {

template <class Term>
BigNat mobius_divisor_sum(std::uint64_t n, Term&& term)
{
    auto mu = shared_mobius(n);
    BigInt acc = 0;
    for (auto d : divisors(n)) {
        if (n % d != 0)
            throw std::logic_error("divisor table corrupt: " + std::to_string(d) + " does not divide " +
                                   std::to_string(n));
        int m = mu->mu(d);
        if (m > 0)
            acc += term(n / d).value();
        else if (m < 0)
            acc -= term(n / d).value();
    }
    return BigNat(std::move(acc));
}

} // namespace detail

inline BigNat subset_phi(std::uint64_t n)
{
    require(n >= 1, "Phi(n): n must be >= 1");
    // The divisor formula would give 2 here: sum_{d|1} mu(d) is 1, not 0.
    if (n == 1)
        return 1;
    return detail::mobius_divisor_sum(n, [](std::uint64_t q) { return BigNat::pow2(q); });
}

inline BigNat subset_phi(std::uint64_t n, std::uint64_t k)
{
    require(n >= 1, "Phi_k(n): n must be >= 1");
    require(k >= 1, "Phi_k(n): k must be >= 1");
    if (n == 1)
        return k == 1 ? 1 : 0;
    if (k > n)
        return {};
    return detail::mobius_divisor_sum(n, [k](std::uint64_t q) { return binomial(q, k); });
}

inline BigNat subset_psi(std::uint64_t n, std::uint64_t d)
{
    require(n >= 1, "Psi(n,d): n must be >= 1");
    require(d >= 1 && n % d == 0,
            "Psi(n,d): d must divide n (got n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    return subset_phi(n / d);
}

/// sum_{d | n} Phi(d) == 2^n - 1
inline bool check_phi_divisor_sum(std::uint64_t n)
{
    require(n >= 1, "Phi divisor sum: n must be >= 1");
    BigNat sum;
    for (auto d : divisors(n))
        sum += subset_phi(d);
    return sum == pow2_minus_1(n);
}

/// sum_{d | n} Phi_k(d) == C(n, k)
inline bool check_phi_divisor_sum(std::uint64_t n, std::uint64_t k)
{
    require(n >= 1 && k >= 1, "Phi_k divisor sum: n and k must be >= 1");
    BigNat sum;
    for (auto d : divisors(n))
        sum += subset_phi(d, k);
    return sum == binomial(n, k);
}

/// Main term 2^n (n odd) or 2^n - 2^(n/2) (n even).
inline PhiReport phi_residual(std::uint64_t n)
{
    require(n >= 1, "Phi residual: n must be >= 1");
    BigNat main = BigNat::pow2(n);
    if (n % 2 == 0)
        main -= BigNat::pow2(n / 2);
    BigNat value = subset_phi(n);
    BigInt residual = value.value() - main.value();
    return {n, std::nullopt, std::move(value), std::move(main), std::move(residual)};
}

/// Main term C(n,k) (n odd) or C(n,k) - C(n/2,k) (n even).
inline PhiReport phi_residual(std::uint64_t n, std::uint64_t k)
{
    require(n >= 1 && k >= 1, "Phi_k residual: n and k must be >= 1");
    BigNat main = binomial(n, k);
    if (n % 2 == 0)
        main -= binomial(n / 2, k);
    BigNat value = subset_phi(n, k);
    BigInt residual = value.value() - main.value();
    return {n, k, std::move(value), std::move(main), std::move(residual)};
}

/// n * 2^ceil(n/3): explicit stand-in for the O(n 2^(n/3)) error term.
inline BigNat phi_envelope(std::uint64_t n)
{
    return BigNat(n) * BigNat::pow2((n + 2) / 3);
}

/// n * C([n/3], k)
inline BigNat phi_envelope(std::uint64_t n, std::uint64_t k)
{
    return BigNat(n) * binomial(n / 3, k);
}

inline bool within_envelope(const PhiReport& r)
{
    BigNat bound = r.k ? phi_envelope(r.n, *r.k) : phi_envelope(r.n);
    return abs(r.residual) <= bound.value();
}

} // namespace relprime
