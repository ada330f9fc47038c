#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace satkit {

// Exact half-integer arithmetic: the value is twice/2.  Charges and their
// sums only ever need halves, so this replaces floating point outright.
struct HalfInt {
    std::int64_t twice = 0;

    static constexpr HalfInt whole(std::int64_t k) { return HalfInt{2 * k}; }
    static constexpr HalfInt halves(std::int64_t k) { return HalfInt{k}; }

    constexpr bool is_whole() const { return twice % 2 == 0; }
    constexpr double to_double() const { return static_cast<double>(twice) / 2.0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.twice - b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a) { return HalfInt{-a.twice}; }
    constexpr HalfInt& operator+=(HalfInt o) { twice += o.twice; return *this; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    std::string to_string() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        std::string s = twice < 0 ? "-" : "";
        return s + std::to_string(twice < 0 ? -twice : twice) + "/2";
    }
};

}  // namespace satkit
