#include "sv/element.hpp"

#include <cctype>
#include <vector>

namespace sv {

Element& Element::operator*=(const GaussRat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c *= s;
    return *this;
}

Element bracket(const BasisIndex& x, const BasisIndex& y) {
    using F = Family;
    if (x.fam == F::C || y.fam == F::C) return {};
    if (x.fam == F::M && (y.fam == F::M || y.fam == F::Y)) return {};
    if (x.fam == F::Y && y.fam == F::M) return {};

    if (x.fam == F::L && y.fam == F::L) {
        long long m = x.idx, n = y.idx;
        Element r;
        r.add(BasisIndex::L(m + n), GaussRat(Rat(n - m)));
        if (m + n == 0) {
            Rat cocycle = Rat(BigInt(m) * m * m - m, 12);
            r.add(BasisIndex::C(), GaussRat(cocycle));
        }
        return r;
    }
    if (x.fam == F::L && y.fam == F::M) {
        long long m = x.idx, n = y.idx;
        Element r;
        r.add(BasisIndex::M(m + n), GaussRat(Rat(n)));
        return r;
    }
    if (x.fam == F::L && y.fam == F::Y) {
        long long m = x.idx, yd = y.idx;
        Element r;
        r.add(BasisIndex::Y(yd + 2 * m), GaussRat(Rat(yd - m, 2)));
        return r;
    }
    if (x.fam == F::Y && y.fam == F::Y) {
        long long y1 = x.idx, y2 = y.idx;
        Element r;
        r.add(BasisIndex::M((y1 + y2) / 2), GaussRat(Rat(y2 - y1, 2)));
        return r;
    }
    // Remaining orientations by antisymmetry.
    return -bracket(y, x);
}

Element bracket(const Element& x, const Element& y) {
    Element out;
    for (const auto& [bx, cx] : x.terms())
        for (const auto& [by, cy] : y.terms()) out += (cx * cy) * bracket(bx, by);
    return out;
}

Element corrupted_bracket(const BasisIndex& x, const BasisIndex& y) {
    const BasisIndex l1 = BasisIndex::L(1);
    const BasisIndex m1 = BasisIndex::M(1);
    if (x == l1 && y == m1) return Element::single(BasisIndex::M(2), GaussRat(2));
    if (x == m1 && y == l1) return Element::single(BasisIndex::M(2), GaussRat(-2));
    return bracket(x, y);
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : e.terms()) {
        GaussRat coef = c;
        if (first) {
            if (coef.is_real() && coef.re < 0) {
                out += "-";
                coef = -coef;
            }
        } else {
            if (coef.is_real() && coef.re < 0) {
                out += " - ";
                coef = -coef;
            } else {
                out += " + ";
            }
        }
        if (!coef.is_real()) {
            out += "(" + to_string(coef) + ")*";
        } else if (coef.re != 1) {
            out += to_string(coef.re) + "*";
        }
        out += to_string(b);
        first = false;
    }
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() { return s[pos]; }
};

BasisIndex parse_symbol(Cursor& c, std::string_view whole) {
    c.skip_ws();
    if (c.pos >= c.s.size()) throw parse_error("expected symbol in '" + std::string(whole) + "'");
    char f = c.s[c.pos];
    if (f == 'c') {
        ++c.pos;
        return BasisIndex::C();
    }
    if (f != 'L' && f != 'M' && f != 'Y')
        throw parse_error("unknown symbol '" + std::string(1, f) + "' in '" + std::string(whole) + "'");
    ++c.pos;
    c.skip_ws();
    if (c.pos >= c.s.size() || c.s[c.pos] != '[')
        throw parse_error("expected '[' in '" + std::string(whole) + "'");
    ++c.pos;
    auto close = c.s.find(']', c.pos);
    if (close == std::string_view::npos) throw parse_error("missing ']' in '" + std::string(whole) + "'");
    std::string digits(c.s.substr(c.pos, close - c.pos));
    c.pos = close + 1;
    long long idx = 0;
    try {
        idx = std::stoll(digits);
    } catch (...) {
        throw parse_error("bad index '" + digits + "' in '" + std::string(whole) + "'");
    }
    switch (f) {
        case 'L': return BasisIndex::L(idx);
        case 'M': return BasisIndex::M(idx);
        default: return BasisIndex::Y(idx);
    }
}

} // namespace

Element parse_element(std::string_view text) {
    Cursor c{text};
    Element out;
    if (c.done()) throw parse_error("empty element literal");
    {
        // "0" is the zero element.
        std::string_view t = text;
        size_t a = 0, b = t.size();
        while (a < b && std::isspace(static_cast<unsigned char>(t[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(t[b - 1]))) --b;
        if (t.substr(a, b - a) == "0") return out;
    }
    bool first = true;
    while (!c.done()) {
        int sgn = 1;
        c.skip_ws();
        if (c.peek() == '+' || c.peek() == '-') {
            sgn = c.peek() == '-' ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-' in '" + std::string(text) + "'");
        }
        c.skip_ws();
        GaussRat coef(1);
        if (c.pos < c.s.size() && c.peek() == '(') {
            auto close = c.s.find(')', c.pos);
            if (close == std::string_view::npos)
                throw parse_error("missing ')' in '" + std::string(text) + "'");
            coef = parse_gauss(c.s.substr(c.pos + 1, close - c.pos - 1));
            c.pos = close + 1;
            c.skip_ws();
            if (c.pos >= c.s.size() || c.peek() != '*')
                throw parse_error("expected '*' after coefficient in '" + std::string(text) + "'");
            ++c.pos;
        } else if (c.pos < c.s.size() &&
                   (std::isdigit(static_cast<unsigned char>(c.peek())) || c.peek() == 'i')) {
            // Bare rational (or i) coefficient up to the '*'.
            size_t star = c.pos;
            while (star < c.s.size() && c.s[star] != '*' && c.s[star] != '+' && c.s[star] != '-')
                ++star;
            if (star < c.s.size() && c.s[star] == '*') {
                coef = parse_gauss(c.s.substr(c.pos, star - c.pos));
                c.pos = star + 1;
            }
        }
        BasisIndex b = parse_symbol(c, text);
        out.add(b, sgn < 0 ? -coef : coef);
        first = false;
    }
    return out;
}

} // namespace sv
