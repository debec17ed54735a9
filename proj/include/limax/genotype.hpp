#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace limax {

inline constexpr int kMaxBits = 24;

/// A search point: an n-bit string stored as its integer encoding.
/// Bit i of `bits` is locus i.
struct Genotype {
    std::uint32_t bits = 0;

    constexpr auto operator<=>(const Genotype&) const = default;
};

constexpr int hamming(Genotype a, Genotype b) noexcept { return std::popcount(a.bits ^ b.bits); }

constexpr std::uint64_t space_size(int n) noexcept { return std::uint64_t{1} << n; }

constexpr Genotype complement(Genotype g, int n) noexcept {
    return Genotype{g.bits ^ static_cast<std::uint32_t>(space_size(n) - 1)};
}

/// Most significant locus first, e.g. locus 0 set in a 4-bit string prints "0001".
inline std::string to_bitstring(Genotype g, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((g.bits >> i) & 1U) s[static_cast<std::size_t>(n - 1 - i)] = '1';
    return s;
}

} // namespace limax
