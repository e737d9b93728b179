#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sv/errors.hpp"

namespace sv {

// Basis symbols of the Schrodinger-Virasoro algebra. Y modes are stored by
// their doubled degree (Y_{n+1/2} -> 2n+1, always odd) so every index is an
// integer and the grading stays additive.
enum class Family : std::uint8_t { L = 0, M = 1, Y = 2, C = 3 };

struct BasisIndex {
    Family fam = Family::C;
    long long idx = 0;

    static BasisIndex L(long long n) { return {Family::L, n}; }
    static BasisIndex M(long long n) { return {Family::M, n}; }
    static BasisIndex Y(long long doubled) {
        if (doubled % 2 == 0) throw invalid_parameters("Y index must be odd (doubled degree)");
        return {Family::Y, doubled};
    }
    static BasisIndex C() { return {Family::C, 0}; }

    friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

// Doubled degree: L_n, M_n -> 2n; Y -> its stored odd index; c -> 0.
inline long long grade(const BasisIndex& b) {
    switch (b.fam) {
        case Family::L:
        case Family::M: return 2 * b.idx;
        case Family::Y: return b.idx;
        case Family::C: return 0;
    }
    return 0;
}

// "L[2]", "M[-3]", "Y[5]", "c".
std::string to_string(const BasisIndex& b);

// Finite truncation bound: all doubled degrees d with |d| <= bound.
struct Window {
    long long bound;

    explicit Window(long long n) : bound(n) {
        if (n < 2) throw invalid_parameters("window bound must be >= 2");
    }

    // L_n / M_n indices covered by the window.
    long long l_bound() const { return bound / 2; }
};

// Every basis symbol with |grade| <= w.bound, in deterministic order.
std::vector<BasisIndex> basis_in_window(const Window& w);

} // namespace sv
