// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "relprime.hpp"

#ifndef RELPRIME_CLI_PATH
#error "RELPRIME_CLI_PATH must point at the built CLI"
#endif

using namespace relprime;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::uint64_t> sample_ks(std::uint64_t n)
{
    return sampled_ks(n, std::nullopt); // {1, 2, 3, 5, 8, n/2, n} within 1..n
}

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (passed)
            detail = why;
        passed = false;
    }
};

Outcome sequence_reproduction()
{
    Outcome o;
    const std::string cmd = std::string(RELPRIME_CLI_PATH) + " compute f --n 1..10";
    auto t0 = Clock::now();
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        o.fail("could not launch " + cmd);
        return o;
    }
    std::string output;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe))
        output += buf;
    int status = ::pclose(pipe);
    double secs = seconds_since(t0);
    if (status != 0)
        o.fail("CLI exited with status " + std::to_string(status));
    if (output != "1 2 5 11 26 53 116 236 488 983\n")
        o.fail("unexpected output: " + output);
    if (secs >= 1.0)
        o.fail("took " + std::to_string(secs) + " s (limit 1 s)");
    return o;
}

Outcome oracle_equivalence()
{
    Outcome o;
    auto t0 = Clock::now();
    for (unsigned n = 1; n <= 22; ++n) {
        auto census = gcd_census(n);
        auto coprime = [](unsigned g) { return g == 1; };
        auto coprime_to_n = [n](unsigned g) { return std::gcd(g, n) == 1; };
        if (BigNat(census.sum(coprime)) != count_coprime_subsets(n))
            o.fail("f(" + std::to_string(n) + ")");
        if (BigNat(census.sum(coprime_to_n)) != subset_phi(n))
            o.fail("Phi(" + std::to_string(n) + ")");
        if (n > 18)
            continue;
        for (unsigned k = 1; k <= n; ++k) {
            if (BigNat(census.sum(coprime, k, k)) != count_coprime_subsets(n, k))
                o.fail("f_k(" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (BigNat(census.sum(coprime_to_n, k, k)) != subset_phi(n, k))
                o.fail("Phi_k(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
        for (auto d : divisors(n))
            if (BigNat(census.sum([n, d](unsigned g) { return std::gcd(g, n) == d; })) != subset_psi(n, d))
                o.fail("Psi(" + std::to_string(n) + "," + std::to_string(d) + ")");
    }
    if (double secs = seconds_since(t0); secs >= 300)
        o.fail("took " + std::to_string(secs) + " s (limit 300 s)");
    return o;
}

Outcome identity_suites()
{
    Outcome o;
    CoprimeSubsetCounter counter;
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        if (!counter.check_recursion(n))
            o.fail("f recursion at n=" + std::to_string(n));
        if (!check_phi_divisor_sum(n))
            o.fail("Phi divisor sum at n=" + std::to_string(n));
        for (auto k : sample_ks(n)) {
            if (!counter.check_recursion(n, k))
                o.fail("f_k recursion at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            if (!check_phi_divisor_sum(n, k))
                o.fail("Phi_k divisor sum at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    return o;
}

Outcome closed_forms()
{
    Outcome o;
    auto p2 = [](std::uint64_t e) { return BigNat::pow2(e); };
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
        if (subset_phi(p) != p2(p) - BigNat(2))
            o.fail("Phi(p) at p=" + std::to_string(p));
    for (std::uint64_t p : {2, 3, 5})
        if (subset_phi(p * p) != p2(p * p) - p2(p))
            o.fail("Phi(p^2) at p=" + std::to_string(p));
    for (auto [p, q] : {std::pair<std::uint64_t, std::uint64_t>{2, 3}, {2, 5}, {3, 5}, {2, 7}})
        if (subset_phi(p * q) != p2(p * q) - p2(q) - p2(p) + BigNat(2))
            o.fail("Phi(pq) at p=" + std::to_string(p) + ", q=" + std::to_string(q));
    return o;
}

Outcome euler_reduction()
{
    Outcome o;
    for (std::uint64_t n = 1; n <= 1000; ++n)
        if (subset_phi(n, 1) != BigNat(euler_phi(n)))
            o.fail("Phi_1(n) != phi(n) at n=" + std::to_string(n));
    return o;
}

Outcome sandwich()
{
    Outcome o;
    CoprimeSubsetCounter counter;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        if (!coprime_subset_bounds(n).contains(counter.count(n)))
            o.fail("f sandwich at n=" + std::to_string(n));
        for (auto k : sample_ks(n))
            if (!coprime_subset_bounds(n, k).contains(counter.count(n, k)))
                o.fail("f_k sandwich at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
    return o;
}

Outcome envelopes()
{
    Outcome o;
    for (std::uint64_t n = 2; n <= 1000; ++n) {
        auto r = phi_residual(n);
        BigNat main = BigNat::pow2(n);
        if (n % 2 == 0)
            main -= BigNat::pow2(n / 2);
        if (r.main_term != main)
            o.fail("main term at n=" + std::to_string(n));
        if (abs(r.residual) > BigInt(n) * BigNat::pow2((n + 2) / 3).value())
            o.fail("Phi envelope at n=" + std::to_string(n));
        for (auto k : sample_ks(n)) {
            auto rk = phi_residual(n, k);
            if (abs(rk.residual) > BigInt(n) * binomial(n / 3, k).value())
                o.fail("Phi_k envelope at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    }
    return o;
}

Outcome affine_example_and_invariance()
{
    Outcome o;
    const IntegerSet a{2, 8, 11, 20}, b{-4, 10, 17, 38};
    const IntegerSet c{0, 2, 3, 6}, d{0, 3, 4, 6};
    for (const auto& s : {a, b}) {
        auto cf = canonical_form(s);
        if (cf.c != c || cf.d != d)
            o.fail("canonical form of " + s.str() + " is C=" + cf.c.str() + ", D=" + cf.d.str());
    }
    if (!affinely_equivalent(a, b))
        o.fail("equiv returned false on the worked example");

    std::mt19937_64 rng(2007);
    for (int i = 0; i < 1000; ++i) {
        auto t = random_affine_trial(rng);
        auto image = affine_map(t.set, t.x, t.y);
        if (canonical_form(image).representative != canonical_form(t.set).representative ||
            invariant_profile(image) != invariant_profile(t.set))
            o.fail("invariance broken for " + t.set.str() + " under x=" + t.x.str() + ", y=" + t.y.str());
    }
    return o;
}

Outcome sumset_bounds()
{
    Outcome o;
    auto t0 = Clock::now();
    for (std::uint32_t mask = 1; mask < (1u << 13); ++mask) {
        const std::uint64_t k = std::popcount(mask);
        if (k > 6)
            continue;
        std::vector<std::int64_t> xs;
        for (auto m = mask; m; m &= m - 1)
            xs.push_back(std::countr_zero(m));
        IntegerSet s(std::move(xs));
        auto size = sumset(s, s).size();
        if (size < 2 * k - 1 || size > k * (k + 1) / 2)
            o.fail("|A+A| = " + std::to_string(size) + " for " + s.str());
    }
    if (double secs = seconds_since(t0); secs >= 30)
        o.fail("took " + std::to_string(secs) + " s (limit 30 s)");
    return o;
}

Outcome bench_sanity()
{
    Outcome o;
    constexpr unsigned n = 22;
    auto best = [](int reps, auto&& fn) {
        CountReport r = fn();
        for (int i = 1; i < reps; ++i) {
            auto next = fn();
            if (next.elapsed < r.elapsed)
                r = std::move(next);
        }
        return r;
    };
    auto formula = best(20, [] {
        return measure(n, std::nullopt, std::nullopt, Method::formula, [] { return count_coprime_subsets(n); });
    });
    auto oracle = best(3, [] {
        return measure(n, std::nullopt, std::nullopt, Method::oracle, [] { return brute_coprime_count(n); });
    });
    if (formula.count != oracle.count)
        o.fail("formula " + formula.count.str() + " != oracle " + oracle.count.str());
    const double ratio = oracle.elapsed_ms() / std::max(formula.elapsed_ms(), 1e-6);
    o.detail = "speedup " + std::to_string(ratio) + "x" + (o.detail.empty() ? "" : "; " + o.detail);
    if (ratio < 100.0) {
        o.passed = false;
        o.detail += " (need >= 100x)";
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1  sequence reproduction (compute f --n 1..10)", sequence_reproduction},
        {"AC2  formula/oracle equivalence (f, Phi n<=22; f_k, Phi_k, Psi n<=18)", oracle_equivalence},
        {"AC3  recursions and divisor sums for n<=1000", identity_suites},
        {"AC4  closed forms Phi(p), Phi(p^2), Phi(pq)", closed_forms},
        {"AC5  Phi_1(n) = phi(n) for n<=1000", euler_reduction},
        {"AC6  sandwich bounds for f, f_k, 2<=n<=1000", sandwich},
        {"AC7  residual envelopes for Phi, Phi_k, 2<=n<=1000", envelopes},
        {"AC8  affine worked example and 1000 invariance trials", affine_example_and_invariance},
        {"AC9  2k-1 <= |A+A| <= k(k+1)/2 over k-subsets of {0..12}, k<=6", sumset_bounds},
        {"AC10 formula >= 100x faster than enumeration at n=22", bench_sanity},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.name, seconds_since(t0),
                    o.detail.empty() ? "" : " - ", o.detail.c_str());
        failed += !o.passed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
    return failed == 0 ? 0 : 1;
}
