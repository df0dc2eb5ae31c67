#pragma once

#include <array>
#include <string_view>
#include <utility>

namespace pins {

// Pseudoknots with a known pseudodeterminant; each contains a simple pseudotwist.
inline constexpr std::array<std::pair<std::string_view, long>, 8> kPseudodet{{
    {"3 i 3", 3},
    {"(3)(i)(-3)", 9},
    {"(5)(i)(-5)", 25},
    {"2 1 i,3,-3", 27},
    {"4 1 i,5,-5", 125},
    {"9*.i", 15},
    {"45 i 9", 27},
    {"495 i 99", 297},
}};

// Pseudoknots with a known modulus they are colorable for.
inline constexpr std::array<std::pair<std::string_view, long>, 12> kColorable{{
    {"3 i 3", 3},
    {"2 1 i 1 2", 3},
    {"6*2.2 0.i.1.1.1", 7},
    {"6*2.2 0.1.1.1.i", 5},
    {"8*i.1.1.1.i.1.1.1", 3},
    {"8*i.1.1.1.1.1.1.1", 3},
    {"8*i.1.1.1.-1.1.1.1", 3},
    {"(i,i,i),3,-3", 3},
    {"9*.i", 3},
    {"9*.i", 5},
    {"9*.i", 15},
    {"2 1,2 1,-(i,1,1)", 3},
}};

// Every distinct pseudodiagram used above.
inline constexpr std::array<std::string_view, 15> kAll{
    "3 i 3",        "(3)(i)(-3)",      "(5)(i)(-5)",         "2 1 i,3,-3",
    "4 1 i,5,-5",   "9*.i",            "45 i 9",             "495 i 99",
    "2 1 i 1 2",    "6*2.2 0.i.1.1.1", "6*2.2 0.1.1.1.i",    "8*i.1.1.1.i.1.1.1",
    "(i,i,i),3,-3", "2 1,2 1,-(i,1,1)", "8*i.1.1.1.-1.1.1.1",
};

}  // namespace pins
