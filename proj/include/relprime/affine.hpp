#pragma once

// Affine maps of finite integer sets, their canonical forms, and the
// affine invariants |A+A|, |A-A| and |F(A)| for linear forms F.

#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "arith.hpp"
#include "bignum.hpp"
#include "errors.hpp"
#include "integer_set.hpp"

namespace relprime {

/// Exact fraction in lowest terms with positive denominator.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1)
    {
        require(den != 0, "Rational: zero denominator");
        require(num != INT64_MIN && den != INT64_MIN, "Rational: component out of range");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        auto g = std::gcd(num, den);
        num_ = num / g;
        den_ = den / g;
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_ == 0; }
    std::string str() const { return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational&, const Rational&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer set arithmetic overflows 64 bits");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer set arithmetic overflows 64 bits");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer set arithmetic overflows 64 bits");
    return r;
}

} // namespace detail

/// x*A + y. Every image must be an integer.
inline IntegerSet affine_map(const IntegerSet& a, const Rational& x, const Rational& y)
{
    require(!a.empty(), "affine_map: empty set");
    require(!x.is_zero(), "affine_map: dilation factor must be nonzero");
    std::vector<std::int64_t> out;
    out.reserve(a.size());
    const BigInt den = BigInt(x.den()) * y.den();
    for (auto v : a) {
        BigInt num = BigInt(x.num()) * v * y.den() + BigInt(y.num()) * x.den();
        if (num % den != 0) {
            BigInt g = gcd(num, den);
            throw precondition_error("affine_map: element " + std::to_string(v) + " maps to " +
                                     BigInt(num / g).str() + "/" + BigInt(den / g).str() + ", not an integer");
        }
        BigInt q = num / den;
        if (q > INT64_MAX || q < INT64_MIN)
            throw std::overflow_error("affine_map: image of " + std::to_string(v) + " overflows 64 bits");
        out.push_back(q.convert_to<std::int64_t>());
    }
    return IntegerSet(std::move(out));
}

inline IntegerSet dilate(const IntegerSet& a, std::int64_t x)
{
    return affine_map(a, Rational(x), Rational(0));
}

inline IntegerSet translate(const IntegerSet& a, std::int64_t y)
{
    return affine_map(a, Rational(1), Rational(y));
}

/// (-1)*c + max(c)
inline IntegerSet reflect(const IntegerSet& c)
{
    require(!c.empty(), "reflect: empty set");
    std::vector<std::int64_t> out;
    out.reserve(c.size());
    for (auto v : c)
        out.push_back(detail::checked_sub(c.max(), v));
    return IntegerSet(std::move(out));
}

/// The two normalized members C, D of an affine class (min 0, gcd 1,
/// D = (-1)*C + max(C)) and the lexicographically smaller of the two.
struct CanonicalForm {
    IntegerSet c;
    IntegerSet d;
    IntegerSet representative;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline CanonicalForm canonical_form(const IntegerSet& a)
{
    require(!a.empty(), "canonical_form: empty set");
    if (a.size() == 1)
        return {IntegerSet{0}, IntegerSet{0}, IntegerSet{0}};
    std::vector<std::int64_t> shifted;
    shifted.reserve(a.size());
    for (auto v : a)
        shifted.push_back(detail::checked_sub(v, a.min()));
    std::int64_t g = 0;
    for (auto v : shifted)
        g = std::gcd(g, v);
    for (auto& v : shifted)
        v /= g;
    IntegerSet c(std::move(shifted));
    IntegerSet d = reflect(c);
    IntegerSet rep = std::min(c, d);
    return {std::move(c), std::move(d), std::move(rep)};
}

inline bool affinely_equivalent(const IntegerSet& a, const IntegerSet& b)
{
    require(!a.empty() && !b.empty(), "affinely_equivalent: empty set");
    if (a.size() != b.size())
        return false;
    return canonical_form(a).representative == canonical_form(b).representative;
}

inline IntegerSet sumset(const IntegerSet& a, const IntegerSet& b)
{
    require(!a.empty() && !b.empty(), "sumset: empty set");
    std::vector<std::int64_t> out;
    out.reserve(a.size() * b.size());
    for (auto x : a)
        for (auto y : b)
            out.push_back(detail::checked_add(x, y));
    return IntegerSet(std::move(out));
}

inline IntegerSet difference_set(const IntegerSet& a, const IntegerSet& b)
{
    require(!a.empty() && !b.empty(), "difference_set: empty set");
    std::vector<std::int64_t> out;
    out.reserve(a.size() * b.size());
    for (auto x : a)
        for (auto y : b)
            out.push_back(detail::checked_sub(x, y));
    return IntegerSet(std::move(out));
}

inline constexpr std::uint64_t kDefaultTupleCeiling = 10'000'000;

/// { u_1 a_1 + ... + u_m a_m + u_0 : a_i in A }.
/// Rejects inputs with |A|^m above `tuple_ceiling`.
inline IntegerSet linear_form_image(const IntegerSet& a, std::span<const std::int64_t> coeffs, std::int64_t offset,
                                    std::uint64_t tuple_ceiling = kDefaultTupleCeiling)
{
    require(!a.empty(), "linear_form_image: empty set");
    require(!coeffs.empty(), "linear_form_image: empty coefficient list");
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        require(tuples <= tuple_ceiling / a.size(),
                "linear_form_image: |A|^m exceeds the tuple ceiling of " + std::to_string(tuple_ceiling));
        tuples *= a.size();
    }
    // Partial images: {u_0} + u_1*A + ... + u_i*A, deduplicated at each step.
    IntegerSet image{offset};
    for (auto u : coeffs) {
        std::vector<std::int64_t> next;
        next.reserve(image.size() * a.size());
        for (auto s : image)
            for (auto v : a)
                next.push_back(detail::checked_add(s, detail::checked_mul(u, v)));
        image = IntegerSet(std::move(next));
    }
    return image;
}

struct InvariantProfile {
    std::uint64_t sumset_size = 0;     // |A+A|
    std::uint64_t difference_size = 0; // |A-A|

    friend bool operator==(const InvariantProfile&, const InvariantProfile&) = default;
};

inline InvariantProfile invariant_profile(const IntegerSet& a)
{
    require(!a.empty(), "invariant_profile: empty set");
    return {sumset(a, a).size(), difference_set(a, a).size()};
}

// Subsets of {0..n} as bit masks (bit i set iff i is in the set).

inline constexpr unsigned kDistributionCeiling = 20;

/// Canonical representative of a nonempty mask, as a mask.
inline std::uint32_t canonical_mask(std::uint32_t mask)
{
    mask >>= std::countr_zero(mask);
    if (std::popcount(mask) == 1)
        return 1;
    unsigned g = 0;
    for (auto m = mask; m; m &= m - 1)
        g = std::gcd(g, static_cast<unsigned>(std::countr_zero(m)));
    std::uint32_t c = 0;
    for (auto m = mask; m; m &= m - 1)
        c |= 1u << (std::countr_zero(m) / g);
    const unsigned top = std::bit_width(c) - 1;
    std::uint32_t d = 0;
    for (auto m = c; m; m &= m - 1)
        d |= 1u << (top - std::countr_zero(m));
    if (c == d)
        return c;
    // Both sequences agree below the lowest differing bit; whichever holds
    // that bit has the smaller element there.
    return (c >> std::countr_zero(c ^ d) & 1u) ? c : d;
}

inline unsigned mask_sumset_size(std::uint32_t mask)
{
    std::uint64_t s = 0;
    for (auto m = mask; m; m &= m - 1)
        s |= std::uint64_t{mask} << std::countr_zero(m);
    return static_cast<unsigned>(std::popcount(s));
}

/// ell -> number of nonempty A in {0..n} with |A+A| = ell, optionally
/// restricted to |A| = k and optionally counting each affine class once.
inline std::map<std::uint64_t, std::uint64_t> sumset_size_distribution(unsigned n, std::optional<unsigned> k,
                                                                       bool inequivalent_only)
{
    require(n <= kDistributionCeiling,
            "sumset distribution: n must be <= " + std::to_string(kDistributionCeiling));
    require(!k || *k >= 1, "sumset distribution: k must be >= 1");
    std::map<std::uint64_t, std::uint64_t> dist;
    std::unordered_set<std::uint32_t> seen;
    const std::uint32_t end = std::uint32_t{1} << (n + 1);
    for (std::uint32_t mask = 1; mask < end; ++mask) {
        if (k && static_cast<unsigned>(std::popcount(mask)) != *k)
            continue;
        if (inequivalent_only && !seen.insert(canonical_mask(mask)).second)
            continue;
        ++dist[mask_sumset_size(mask)];
    }
    return dist;
}

} // namespace relprime
