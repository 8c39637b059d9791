#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace relprime {

/// A finite set of integers, kept sorted ascending and duplicate-free.
class IntegerSet {
public:
    using value_type = std::int64_t;

    IntegerSet() = default;
    IntegerSet(std::initializer_list<value_type> xs) : elems_(xs) { normalize(); }
    explicit IntegerSet(std::vector<value_type> xs) : elems_(std::move(xs)) { normalize(); }

    /// Parses "2,8,11,20" (whitespace around entries is allowed).
    static IntegerSet parse(std::string_view text)
    {
        std::vector<value_type> xs;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto comma = text.find(',', pos);
            if (comma == std::string_view::npos)
                comma = text.size();
            auto token = text.substr(pos, comma - pos);
            while (!token.empty() && token.front() == ' ')
                token.remove_prefix(1);
            while (!token.empty() && token.back() == ' ')
                token.remove_suffix(1);
            require(!token.empty(), "malformed integer list: \"" + std::string(text) + "\"");
            std::size_t used = 0;
            value_type v = 0;
            try {
                v = std::stoll(std::string(token), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            require(used == token.size() && used > 0, "malformed integer: \"" + std::string(token) + "\"");
            xs.push_back(v);
            pos = comma + 1;
        }
        return IntegerSet(std::move(xs));
    }

    std::span<const value_type> elements() const noexcept { return elems_; }
    auto begin() const noexcept { return elems_.begin(); }
    auto end() const noexcept { return elems_.end(); }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    value_type min() const { return elems_.front(); }
    value_type max() const { return elems_.back(); }
    bool contains(value_type v) const { return std::binary_search(elems_.begin(), elems_.end(), v); }

    /// "{0,2,3,6}"
    std::string str() const
    {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < elems_.size(); ++i)
            os << (i ? "," : "") << elems_[i];
        os << '}';
        return os.str();
    }

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;
    // Lexicographic on the ascending element sequence.
    friend std::strong_ordering operator<=>(const IntegerSet& a, const IntegerSet& b)
    {
        return std::lexicographical_compare_three_way(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                                      b.elems_.end());
    }

private:
    void normalize()
    {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    std::vector<value_type> elems_;
};

} // namespace relprime
