// tests/triple_table.hpp - The 35 primitive triples listed on the reference table.
#pragma once

#include <array>
#include <cstdint>
#include <tuple>

namespace fixtures {

using Row = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

inline constexpr std::array<Row, 35> kTripleTable{{
    {3, 4, 5},      {5, 12, 13},    {7, 24, 25},    {8, 15, 17},    {9, 40, 41},
    {11, 60, 61},   {12, 35, 37},   {13, 84, 85},   {15, 112, 113}, {16, 63, 65},
    {17, 144, 145}, {19, 180, 181}, {20, 21, 29},   {20, 99, 101},  {21, 220, 221},
    {23, 264, 265}, {24, 143, 145}, {25, 312, 313}, {27, 364, 365}, {28, 45, 53},
    {28, 195, 197}, {29, 420, 421}, {31, 480, 481}, {32, 255, 257}, {33, 56, 65},
    {33, 544, 545}, {35, 612, 613}, {36, 77, 85},   {36, 323, 325}, {37, 684, 685},
    {39, 80, 89},   {39, 760, 761}, {40, 399, 401}, {41, 840, 841}, {43, 924, 925},
}};

}  // namespace fixtures
