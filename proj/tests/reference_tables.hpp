#pragma once

#include <array>
#include <cstdint>

// Published appendix tables, transcribed verbatim. Zero marks a blank cell.
namespace reference {

// |Ann_k(2n+k, k)|, rows n = 0..10, columns k = 0..10.
inline constexpr std::array<std::array<std::uint64_t, 11>, 11> kMaximal = {{
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7},
    {4, 5, 7, 10, 12, 15, 19, 22, 26, 31, 35},
    {10, 14, 22, 30, 43, 55, 73, 91, 116, 140, 172},
    {26, 42, 66, 99, 143, 201, 273, 364, 476, 612, 776},
    {80, 132, 217, 335, 504, 728, 1038, 1428, 1944, 2586, 3399},
    {246, 429, 715, 1144, 1768, 2652, 3876, 5538, 7752, 10659, 14421},
    {810, 1430, 2438, 3978, 6310, 9690, 14550, 21318, 30667, 43263, 60115},
    {2704, 4862, 8398, 14000, 22610, 35530, 54484, 81719, 120175, 173593, 246675},
    {9252, 16796, 29414, 49742, 81752, 130752, 204347, 312455, 468754, 690690, 1001603}
}};

// |Ann(n, m)|, rows n = 0..12, columns m = 0..12.
inline constexpr std::array<std::array<std::uint64_t, 13>, 13> kAnn = {{
    {1, 0, 1, 0, 2, 0, 4, 0, 10, 0, 26, 0, 80},
    {0, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0},
    {1, 0, 2, 0, 3, 0, 7, 0, 17, 0, 48, 0, 146},
    {0, 1, 0, 2, 0, 3, 0, 8, 0, 24, 0, 72, 0},
    {2, 0, 3, 0, 7, 0, 14, 0, 38, 0, 106, 0, 335},
    {0, 2, 0, 3, 0, 8, 0, 20, 0, 60, 0, 189, 0},
    {4, 0, 7, 0, 14, 0, 34, 0, 90, 0, 263, 0, 834},
    {0, 5, 0, 8, 0, 20, 0, 58, 0, 175, 0, 560, 0},
    {10, 0, 17, 0, 38, 0, 90, 0, 255, 0, 750, 0, 2420},
    {0, 14, 0, 24, 0, 60, 0, 175, 0, 546, 0, 1764, 0},
    {26, 0, 48, 0, 106, 0, 263, 0, 750, 0, 2268, 0, 7372},
    {0, 42, 0, 72, 0, 189, 0, 560, 0, 1764, 0, 5774, 0},
    {80, 0, 146, 0, 335, 0, 834, 0, 2420, 0, 7372, 0, 24198}
}};

// |Ann(2n)|, n = 0..13.
inline constexpr std::array<std::uint64_t, 14> kTotal = {1, 3, 8, 20, 57, 166, 538, 1762, 6045, 21040, 74628, 267598, 970134, 3544416};

}  // namespace reference
