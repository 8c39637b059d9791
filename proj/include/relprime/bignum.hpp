#pragma once

// Exact integer types used for every count in the library.
//
// BigInt is a plain signed arbitrary-precision integer. BigNat wraps it and
// refuses to hold a negative value, so any subtraction that would underflow
// is reported instead of silently producing a wrong count.

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace relprime {

using BigInt = boost::multiprecision::cpp_int;

class BigNat {
public:
    BigNat() = default;

    template <std::integral T>
    BigNat(T v) : value_(v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0)
                throw std::domain_error("BigNat: negative value");
        }
    }

    explicit BigNat(BigInt v) : value_(std::move(v))
    {
        if (value_.sign() < 0)
            throw std::domain_error("BigNat: negative value");
    }

    /// 2^e.
    static BigNat pow2(std::uint64_t e)
    {
        BigNat r;
        boost::multiprecision::bit_set(r.value_, static_cast<unsigned>(e));
        return r;
    }

    /// Parses a nonempty string of decimal digits.
    static BigNat parse(std::string_view text)
    {
        if (text.empty())
            throw std::invalid_argument("BigNat: empty string");
        for (char c : text)
            if (c < '0' || c > '9')
                throw std::invalid_argument("BigNat: not a decimal digit string: " + std::string(text));
        return BigNat(BigInt(std::string(text)));
    }

    const BigInt& value() const noexcept { return value_; }
    BigInt to_signed() const { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    std::string str() const { return value_.str(); }

    /// Number of bits needed to represent the value (0 for zero).
    std::uint64_t bit_length() const
    {
        return value_.is_zero() ? 0 : boost::multiprecision::msb(value_) + 1;
    }

    BigNat& operator+=(const BigNat& o)
    {
        value_ += o.value_;
        return *this;
    }
    BigNat& operator-=(const BigNat& o)
    {
        if (value_ < o.value_)
            throw std::underflow_error("BigNat: subtraction underflow");
        value_ -= o.value_;
        return *this;
    }
    BigNat& operator*=(const BigNat& o)
    {
        value_ *= o.value_;
        return *this;
    }
    BigNat& operator<<=(unsigned s)
    {
        value_ <<= s;
        return *this;
    }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator-(BigNat a, const BigNat& b) { return a -= b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    friend BigNat operator<<(BigNat a, unsigned s) { return a <<= s; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b)
    {
        return a.value_.compare(b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.value_; }

private:
    BigInt value_;
};

/// 2^e - 1 (zero when e == 0).
inline BigNat pow2_minus_1(std::uint64_t e)
{
    return BigNat::pow2(e) - BigNat(1);
}

/// Lossless narrowing for values known to fit in 64 bits.
inline std::uint64_t to_u64(const BigNat& v)
{
    if (v.bit_length() > 64)
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    return v.value().convert_to<std::uint64_t>();
}

} // namespace relprime
