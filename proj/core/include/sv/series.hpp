#pragma once

#include <map>

#include "sv/element.hpp"
#include "sv/report.hpp"

namespace sv {

// The three intermediate-series families over the Virasoro subalgebra, with
// basis {v_k | k in Z} and c acting as zero:
//   Aab:    L_n v_k = (a + k + n b) v_{n+k}
//   Aalpha: L_n v_k = (n + k) v_{n+k} for k != 0,  L_n v_0 = n (n + aux) v_n
//   Bbeta:  L_n v_k = k v_{n+k} for k != -n,       L_n v_{-n} = -n (n + aux) v_0
// The displayed exceptional-family formulas use a literal parameter "a";
// it is exposed verbatim as `aux`.
enum class SeriesKind { Aab, Aalpha, Bbeta };

struct SeriesSpec {
    SeriesKind kind = SeriesKind::Aab;
    GaussRat a;
    GaussRat b;
    GaussRat aux;

    static SeriesSpec aab(GaussRat a, GaussRat b) {
        return {SeriesKind::Aab, std::move(a), std::move(b), GaussRat()};
    }
    static SeriesSpec aalpha(GaussRat aux) {
        return {SeriesKind::Aalpha, GaussRat(), GaussRat(), std::move(aux)};
    }
    static SeriesSpec bbeta(GaussRat aux) {
        return {SeriesKind::Bbeta, GaussRat(), GaussRat(), std::move(aux)};
    }
};

// Sparse vector over the basis {v_k}.
using SeriesVector = std::map<long long, GaussRat>;

// Linear extension of the quoted L_n action.
SeriesVector series_action(const SeriesSpec& s, long long n, const SeriesVector& x);

// sv-module lift: L_n acts by series_action; M, Y and c act as zero.
SeriesVector sv_lift_action(const SeriesSpec& s, const BasisIndex& g, const SeriesVector& x);

// v_k -> v_{k+1} intertwines A_{a+1,b} with A_{a,b+shift_b}; shift_b = 0 is
// the genuine isomorphism, shift_b != 0 a negative control.
CheckReport series_shift_iso_check(const GaussRat& a, const GaussRat& b, const Window& w,
                                   const GaussRat& shift_b = GaussRat());

// The lifted action satisfies every bracket of the algebra on the window
// (in particular [Y, Y] lands in M, which acts as zero).
CheckReport sv_lift_bracket_check(const SeriesSpec& s, const Window& w);

} // namespace sv
