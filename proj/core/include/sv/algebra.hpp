#pragma once

#include "sv/element.hpp"
#include "sv/report.hpp"

namespace sv {

// [x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 for every basis triple in the window.
CheckReport jacobi_check(const Window& w, const BasisBracket& br = {});

// Antisymmetry of the basis table over the window.
CheckReport antisymmetry_check(const Window& w, const BasisBracket& br = {});

// [x, y] stays inside span{M_*, Y_*, c} for every basis x and every basis y
// of the ideal M + Y + Cc within the window.
CheckReport ideal_window_check(const Window& w);

// [x, M_0] = [x, c] = 0 for every basis x in the window.
CheckReport center_check(const Window& w);

// Nonzero non-central terms of [x, y] sit in doubled degree
// grade(x) + grade(y) for all basis pairs in the window.
CheckReport grading_check(const Window& w);

} // namespace sv
