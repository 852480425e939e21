#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqcol/graph.hpp"

namespace seqcol {

inline constexpr int max_palette = 31;

/// A subset of {1..max_palette}; bit c holds color c.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr ColorSet(std::initializer_list<Color> colors)
    {
        for (Color c : colors)
            insert(c);
    }

    static constexpr auto full(int palette) -> ColorSet
    {
        check(palette);
        ColorSet s;
        s.bits_ = ((std::uint32_t{1} << palette) - 1U) << 1U;
        return s;
    }
    static constexpr auto single(Color c) -> ColorSet
    {
        ColorSet s;
        s.insert(c);
        return s;
    }
    static constexpr auto from_bits(std::uint32_t bits) -> ColorSet
    {
        ColorSet s;
        s.bits_ = bits & ~std::uint32_t{1};
        return s;
    }

    constexpr void insert(Color c)
    {
        check(c);
        bits_ |= std::uint32_t{1} << c;
    }
    constexpr void erase(Color c)
    {
        check(c);
        bits_ &= ~(std::uint32_t{1} << c);
    }

    [[nodiscard]] constexpr auto contains(Color c) const -> bool
    {
        return c >= 1 && c <= max_palette && ((bits_ >> c) & 1U) != 0;
    }
    [[nodiscard]] constexpr auto size() const -> int { return std::popcount(bits_); }
    [[nodiscard]] constexpr auto empty() const -> bool { return bits_ == 0; }
    [[nodiscard]] constexpr auto is_singleton() const -> bool { return std::has_single_bit(bits_); }
    /// Smallest color; requires a nonempty set.
    [[nodiscard]] constexpr auto min() const -> Color { return std::countr_zero(bits_); }
    [[nodiscard]] constexpr auto bits() const -> std::uint32_t { return bits_; }
    [[nodiscard]] constexpr auto subset_of(ColorSet other) const -> bool { return (bits_ & ~other.bits_) == 0; }
    [[nodiscard]] constexpr auto within_palette(int palette) const -> bool { return subset_of(full(palette)); }

    [[nodiscard]] auto colors() const -> std::vector<Color>
    {
        std::vector<Color> out;
        for (std::uint32_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }
    [[nodiscard]] auto to_string() const -> std::string
    {
        std::string out = "{";
        for (Color c : colors()) {
            if (out.size() > 1)
                out += ",";
            out += std::to_string(c);
        }
        return out + "}";
    }

    friend constexpr auto operator|(ColorSet a, ColorSet b) -> ColorSet { return from_bits(a.bits_ | b.bits_); }
    friend constexpr auto operator&(ColorSet a, ColorSet b) -> ColorSet { return from_bits(a.bits_ & b.bits_); }
    friend constexpr auto operator-(ColorSet a, ColorSet b) -> ColorSet { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr auto operator==(ColorSet, ColorSet) -> bool = default;
    friend constexpr auto operator<=>(ColorSet, ColorSet) = default;

private:
    static constexpr void check(int c)
    {
        if (c < 0 || c > max_palette)
            throw std::out_of_range("color out of range: " + std::to_string(c));
    }

    std::uint32_t bits_ = 0;
};

using ListAssignment = std::vector<ColorSet>;

/// Sum of list sizes.
inline auto total_size(const ListAssignment& lists) -> std::size_t
{
    std::size_t total = 0;
    for (auto l : lists)
        total += static_cast<std::size_t>(l.size());
    return total;
}

/// Pointwise inclusion.
inline auto pointwise_subset(const ListAssignment& a, const ListAssignment& b) -> bool
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].subset_of(b[i]))
            return false;
    return true;
}

}  // namespace seqcol
