#pragma once

// Named identity suites. Each suite runs a family of exact checks over a
// window of n and reports how many passed and the first one that failed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "affine.hpp"
#include "arith.hpp"
#include "coprime_subsets.hpp"
#include "oracle.hpp"
#include "subset_phi.hpp"

namespace relprime {

enum class Suite { recursions, divisor_sums, bounds, asymptotics, oracle, affine, closed_forms };

inline constexpr std::uint64_t kVerifyCeiling = 10000;

inline std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::recursions: return "recursions";
    case Suite::divisor_sums: return "divisor-sums";
    case Suite::bounds: return "bounds";
    case Suite::asymptotics: return "asymptotics";
    case Suite::oracle: return "oracle";
    case Suite::affine: return "affine";
    case Suite::closed_forms: return "closed-forms";
    }
    return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name)
{
    for (auto s : {Suite::recursions, Suite::divisor_sums, Suite::bounds, Suite::asymptotics, Suite::oracle,
                   Suite::affine, Suite::closed_forms})
        if (suite_name(s) == name)
            return s;
    return std::nullopt;
}

struct SuiteOptions {
    std::uint64_t n_max = 100;
    std::optional<std::uint64_t> k_max;
    std::uint64_t seed = 20070103;
};

struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }

    void expect(bool passed, const std::function<std::string()>& describe)
    {
        ++checks;
        if (passed)
            return;
        if (failures++ == 0)
            first_failure = describe();
    }
};

/// k values checked for a given n: 1..min(k_max, n) when k_max is set,
/// otherwise the sample {1, 2, 3, 5, 8, n/2, n} clipped to 1..n.
inline std::vector<std::uint64_t> sampled_ks(std::uint64_t n, std::optional<std::uint64_t> k_max)
{
    std::vector<std::uint64_t> ks;
    if (k_max) {
        for (std::uint64_t k = 1; k <= std::min(*k_max, n); ++k)
            ks.push_back(k);
        return ks;
    }
    for (auto k : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3}, std::uint64_t{5}, std::uint64_t{8}, n / 2, n})
        if (k >= 1 && k <= n)
            ks.push_back(k);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

/// A random set A together with a rational map (x, y) whose image x*A + y
/// is integral.
struct AffineTrial {
    IntegerSet set;
    Rational x;
    Rational y;
};

inline AffineTrial random_affine_trial(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> size_dist(1, 8), elem(-50, 50), num(-9, 9), den(1, 9), shift(-100, 100);
    int p = 0;
    while (p == 0)
        p = num(rng);
    const int q = den(rng);
    const int c = std::uniform_int_distribution<int>(0, q - 1)(rng);
    const int t = shift(rng);
    std::vector<std::int64_t> xs;
    for (int i = 0, sz = size_dist(rng); i < sz; ++i)
        xs.push_back(std::int64_t{q} * elem(rng) + c);
    // x*(q s + c) + y = p s + t
    return {IntegerSet(std::move(xs)), Rational(p, q), Rational(std::int64_t{t} * q - std::int64_t{p} * c, q)};
}

namespace detail {

inline std::string at_n(std::string_view what, std::uint64_t n)
{
    return std::string(what) + " at n=" + std::to_string(n);
}

inline std::string at_nk(std::string_view what, std::uint64_t n, std::uint64_t k)
{
    return std::string(what) + " at n=" + std::to_string(n) + ", k=" + std::to_string(k);
}

inline bool is_prime(std::uint64_t p)
{
    return p >= 2 && divisors(p).size() == 2;
}

inline void run_recursions(const SuiteOptions& o, SuiteResult& r)
{
    CoprimeSubsetCounter counter;
    for (std::uint64_t n = 1; n <= o.n_max; ++n) {
        r.expect(counter.check_recursion(n), [n] { return at_n("sum f([n/d]) != 2^n - 1", n); });
        for (auto k : sampled_ks(n, o.k_max))
            r.expect(counter.check_recursion(n, k), [n, k] { return at_nk("sum f_k([n/d]) != C(n,k)", n, k); });
    }
}

inline void run_divisor_sums(const SuiteOptions& o, SuiteResult& r)
{
    for (std::uint64_t n = 1; n <= o.n_max; ++n) {
        r.expect(check_phi_divisor_sum(n), [n] { return at_n("sum_{d|n} Phi(d) != 2^n - 1", n); });
        for (auto k : sampled_ks(n, o.k_max))
            r.expect(check_phi_divisor_sum(n, k), [n, k] { return at_nk("sum_{d|n} Phi_k(d) != C(n,k)", n, k); });
        BigNat parts;
        for (auto d : divisors(n))
            parts += subset_psi(n, d);
        r.expect(parts == pow2_minus_1(n), [n] { return at_n("sum_{d|n} Psi(n,d) != 2^n - 1", n); });
    }
}

inline void run_bounds(const SuiteOptions& o, SuiteResult& r)
{
    CoprimeSubsetCounter counter;
    for (std::uint64_t n = 1; n <= o.n_max; ++n) {
        r.expect(coprime_subset_bounds(n).contains(counter.count(n)),
                 [n] { return at_n("f(n) outside sandwich bounds", n); });
        if (n >= 5)
            r.expect(counter.count(n) >= constructive_lower_bound(n),
                     [n] { return at_n("f(n) below 2^(n-1) + 2^(n-2)", n); });
        for (auto k : sampled_ks(n, o.k_max))
            r.expect(coprime_subset_bounds(n, k).contains(counter.count(n, k)),
                     [n, k] { return at_nk("f_k(n) outside sandwich bounds", n, k); });
    }
}

inline void run_asymptotics(const SuiteOptions& o, SuiteResult& r)
{
    for (std::uint64_t n = 2; n <= o.n_max; ++n) {
        r.expect(within_envelope(phi_residual(n)), [n] { return at_n("|Phi(n) - main| > n 2^ceil(n/3)", n); });
        for (auto k : sampled_ks(n, o.k_max))
            r.expect(within_envelope(phi_residual(n, k)),
                     [n, k] { return at_nk("|Phi_k(n) - main| > n C([n/3],k)", n, k); });
    }
}

inline void run_oracle(const SuiteOptions& o, SuiteResult& r)
{
    for (unsigned n = 1; n <= o.n_max; ++n) {
        const auto census = gcd_census(n);
        auto coprime = [](unsigned g) { return g == 1; };
        auto coprime_to_n = [n](unsigned g) { return std::gcd(g, n) == 1; };
        r.expect(BigNat(census.sum(coprime)) == count_coprime_subsets(n), [n] { return at_n("f(n) != oracle", n); });
        r.expect(BigNat(census.sum(coprime_to_n)) == subset_phi(n), [n] { return at_n("Phi(n) != oracle", n); });
        for (unsigned k = 1; k <= std::min<std::uint64_t>(n, o.k_max.value_or(n)); ++k) {
            r.expect(BigNat(census.sum(coprime, k, k)) == count_coprime_subsets(n, k),
                     [n, k] { return at_nk("f_k(n) != oracle", n, k); });
            r.expect(BigNat(census.sum(coprime_to_n, k, k)) == subset_phi(n, k),
                     [n, k] { return at_nk("Phi_k(n) != oracle", n, k); });
        }
        for (auto d : divisors(n))
            r.expect(BigNat(census.sum([n, d](unsigned g) { return std::gcd(g, n) == d; })) == subset_psi(n, d),
                     [n, d] { return "Psi(n,d) != oracle at n=" + std::to_string(n) + ", d=" + std::to_string(d); });
        for (unsigned d = 1; d <= n; ++d)
            r.expect(BigNat(census.sum([d](unsigned g) { return g == d; })) == count_coprime_subsets(n / d),
                     [n, d] { return "#{gcd(A)=d} != f([n/d]) at n=" + std::to_string(n) + ", d=" + std::to_string(d); });
    }
}

inline void run_affine(const SuiteOptions& o, SuiteResult& r)
{
    const IntegerSet a{2, 8, 11, 20}, b{-4, 10, 17, 38};
    const IntegerSet c{0, 2, 3, 6}, d{0, 3, 4, 6};
    for (const auto& s : {a, b}) {
        auto cf = canonical_form(s);
        r.expect(cf.c == c && cf.d == d, [&] { return "canonical form of " + s.str() + " is not C={0,2,3,6}, D={0,3,4,6}"; });
    }
    r.expect(affine_map(a, Rational(7, 3), Rational(-26, 3)) == b, [] { return "(7/3)*A - 26/3 != B"; });
    r.expect(affinely_equivalent(a, b), [] { return "{2,8,11,20} not equivalent to {-4,10,17,38}"; });

    std::mt19937_64 rng(o.seed);
    for (std::uint64_t i = 0; i < o.n_max; ++i) {
        auto trial = random_affine_trial(rng);
        auto image = affine_map(trial.set, trial.x, trial.y);
        auto describe = [&] { return "affine invariance fails for " + trial.set.str() + " under x=" + trial.x.str() + ", y=" + trial.y.str(); };
        r.expect(canonical_form(image).representative == canonical_form(trial.set).representative, describe);
        r.expect(invariant_profile(image) == invariant_profile(trial.set), describe);
    }

    // Exhaustive cardinality bounds over k-subsets of {0..12}, 1 <= k <= 6.
    for (std::uint32_t mask = 1; mask < (1u << 13); ++mask) {
        const auto k = static_cast<std::uint64_t>(std::popcount(mask));
        if (k > 6)
            continue;
        std::vector<std::int64_t> xs;
        for (auto m = mask; m; m &= m - 1)
            xs.push_back(std::countr_zero(m));
        IntegerSet s(std::move(xs));
        auto p = invariant_profile(s);
        r.expect(2 * k - 1 <= p.sumset_size && p.sumset_size <= k * (k + 1) / 2,
                 [&] { return "|A+A| out of [2k-1, k(k+1)/2] for " + s.str(); });
        r.expect(2 * k - 1 <= p.difference_size && p.difference_size <= k * (k - 1) + 1,
                 [&] { return "|A-A| out of [2k-1, k(k-1)+1] for " + s.str(); });
    }
}

inline void run_closed_forms(const SuiteOptions& o, SuiteResult& r)
{
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p <= 13; ++p)
        if (is_prime(p))
            primes.push_back(p);
    for (auto p : primes) {
        r.expect(subset_phi(p) == BigNat::pow2(p) - BigNat(2), [p] { return at_n("Phi(p) != 2^p - 2", p); });
        if (p <= 5)
            r.expect(subset_phi(p * p) == BigNat::pow2(p * p) - BigNat::pow2(p),
                     [p] { return at_n("Phi(p^2) != 2^(p^2) - 2^p", p); });
        for (auto q : primes)
            if (p < q && p * q <= 35)
                r.expect(subset_phi(p * q) == BigNat::pow2(p * q) - BigNat::pow2(q) - BigNat::pow2(p) + BigNat(2),
                         [p, q] { return "Phi(pq) != 2^pq - 2^q - 2^p + 2 at p=" + std::to_string(p) + ", q=" + std::to_string(q); });
    }
    for (std::uint64_t n = 1; n <= o.n_max; ++n)
        r.expect(subset_phi(n, 1) == BigNat(euler_phi(n)), [n] { return at_n("Phi_1(n) != phi(n)", n); });
}

} // namespace detail

/// Runs one suite. n_max must be at most 10000 (at most the oracle limit
/// for the oracle suite); the affine suite reads n_max as its number of
/// random trials.
inline SuiteResult run_suite(Suite suite, const SuiteOptions& options)
{
    require(options.n_max >= 1, "verify: --n-max must be >= 1");
    if (suite == Suite::oracle)
        require(options.n_max <= oracle_limit(),
                "verify oracle: --n-max must be <= " + std::to_string(oracle_limit()));
    else
        require(options.n_max <= kVerifyCeiling, "verify: --n-max must be <= " + std::to_string(kVerifyCeiling));
    require(!options.k_max || *options.k_max >= 1, "verify: --k-max must be >= 1");

    SuiteResult r;
    r.name = suite_name(suite);
    switch (suite) {
    case Suite::recursions: detail::run_recursions(options, r); break;
    case Suite::divisor_sums: detail::run_divisor_sums(options, r); break;
    case Suite::bounds: detail::run_bounds(options, r); break;
    case Suite::asymptotics: detail::run_asymptotics(options, r); break;
    case Suite::oracle: detail::run_oracle(options, r); break;
    case Suite::affine: detail::run_affine(options, r); break;
    case Suite::closed_forms: detail::run_closed_forms(options, r); break;
    }
    return r;
}

} // namespace relprime
