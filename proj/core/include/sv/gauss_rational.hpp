#pragma once

#include <string>
#include <string_view>

#include "sv/rational.hpp"

namespace sv {

// Element of the field Q(i): re + im*i with exact rational parts.
// Equality is componentwise; conjugation flips the sign of im.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(long long x) : re(x) {}            // NOLINT(google-explicit-constructor)
    GaussRat(Rat x) : re(std::move(x)) {}       // NOLINT(google-explicit-constructor)
    GaussRat(Rat x, Rat y) : re(std::move(x)), im(std::move(y)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    // re^2 + im^2, the squared modulus.
    Rat norm2() const { return re * re + im * im; }

    friend bool operator==(const GaussRat&, const GaussRat&) = default;

    GaussRat operator-() const { return {-re, -im}; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
};

inline GaussRat conj(const GaussRat& q) { return {q.re, -q.im}; }

// True iff re^2 + im^2 = 1 exactly (membership in S^1 over Q(i)).
inline bool is_unit_modulus(const GaussRat& q) { return q.norm2() == 1; }

// Multiplicative inverse; throws division_by_zero on q = 0.
GaussRat inverse(const GaussRat& q);

// q^e for any integer e; e < 0 requires q != 0.
GaussRat pow_int(const GaussRat& q, long long e);

// Pure reals print as "n" or "n/d"; proper complex values print as
// "a/b+c/d*i" with both denominators explicit, e.g. "0/1+1/1*i".
std::string to_string(const GaussRat& q);

// Accepts the printed forms plus conveniences like "i", "-i", "2*i", "3/5+4/5*i".
GaussRat parse_gauss(std::string_view text);

} // namespace sv
