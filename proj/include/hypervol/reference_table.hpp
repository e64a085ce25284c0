#pragma once

#include <array>
#include <numbers>

#include "hypervol/gram.hpp"

namespace hypervol {

/// Published regression values: input angles/altitude with the expected
/// dual angle mu and volume (7 printed digits).
struct ReferenceRow {
    PrismTetParams params;
    double mu;
    double volume;
};

inline constexpr std::array<ReferenceRow, 12> kReferenceTable = [] {
    constexpr double pi = std::numbers::pi;
    return std::array<ReferenceRow, 12>{{
        {{{pi / 2, pi / 3, pi / 3, pi / 2, pi / 2}, 0.0}, 0.0, 0.5019205},
        {{{pi / 2, pi / 3, pi / 3, pi / 2, pi / 2}, 0.3164870}, pi / 4, 0.4438311},
        {{{pi / 2, pi / 3, pi / 4, pi / 2, pi / 2}, 0.0}, 0.0, 0.6477716},
        {{{pi / 2, pi / 3, pi / 4, pi / 2, pi / 2}, 0.3664289}, pi / 4, 0.5805842},
        {{{pi / 2, pi / 3, pi / 5, pi / 2, pi / 2}, 0.0}, 0.0, 0.7466394},
        {{{pi / 2, pi / 3, pi / 5, pi / 2, pi / 2}, 0.3835985}, pi / 4, 0.6764612},
        {{{pi / 2, 0.0, pi / 2, 0.0, pi / 2}, 0.0}, 0.0, 0.9159659},
        {{{pi / 2, pi / 3, pi / 2, pi / 3, pi / 2}, 0.5435350}, pi / 3, 0.3244234},
        {{{pi / 2, pi / 4, pi / 2, pi / 4, pi / 2}, 0.5306375}, pi / 4, 0.5382759},
        {{{pi / 2, pi / 5, pi / 2, pi / 5, pi / 2}, 0.4812118}, pi / 5, 0.6580815},
        {{{pi / 2, pi / 6, pi / 2, pi / 6, pi / 2}, 0.4312773}, pi / 6, 0.7299264},
        {{{pi / 2, pi / 10, pi / 2, pi / 10, pi / 2}, 0.2910082}, pi / 10, 0.8447678},
    }};
}();

} // namespace hypervol
