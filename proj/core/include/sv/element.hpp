#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "sv/basis.hpp"
#include "sv/gauss_rational.hpp"

namespace sv {

// Sparse linear combination of basis symbols over Q(i). Canonical: zero
// coefficients are never stored.
class Element {
  public:
    using Terms = std::map<BasisIndex, GaussRat>;

    Element() = default;

    static Element single(BasisIndex b, GaussRat c = GaussRat(1)) {
        Element e;
        e.add(b, std::move(c));
        return e;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const BasisIndex& b, const GaussRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussRat coeff(const BasisIndex& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? GaussRat() : it->second;
    }

    friend bool operator==(const Element&, const Element&) = default;

    Element operator-() const {
        Element r;
        for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
        return r;
    }
    Element& operator+=(const Element& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    Element& operator*=(const GaussRat& s);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const GaussRat& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const GaussRat& s) { return a *= s; }

  private:
    Terms terms_;
};

// Lie bracket of two basis symbols, per the defining relations:
//   [L_m, L_n] = (n-m) L_{m+n} + delta_{m+n,0} (m^3-m)/12 c
//   [L_m, M_n] = n M_{m+n}
//   [L_m, Y_y] = ((y-m)/2) Y_{y+2m}          (y = doubled Y degree)
//   [Y_y, Y_z] = ((z-y)/2) M_{(y+z)/2}
//   [M, M] = [M, Y] = [sv, c] = 0
Element bracket(const BasisIndex& x, const BasisIndex& y);

// Bilinear extension to sparse elements.
Element bracket(const Element& x, const Element& y);

// Pluggable basis-level bracket, used to inject faults into window checks.
using BasisBracket = std::function<Element(const BasisIndex&, const BasisIndex&)>;

// The true table with [L_1, M_1] replaced by 2 M_2 (both orientations).
Element corrupted_bracket(const BasisIndex& x, const BasisIndex& y);

// Textual form, e.g. "L[2] - 1/2*M[-3] + (0/1+1/1*i)*Y[5]"; zero prints "0".
std::string to_string(const Element& e);
Element parse_element(std::string_view text);

} // namespace sv
