#include "sv/gauss_rational.hpp"

#include <cctype>

namespace sv {

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= inverse(o); }

GaussRat inverse(const GaussRat& q) {
    Rat n2 = q.norm2();
    if (n2 == 0) throw division_by_zero();
    return {q.re / n2, -q.im / n2};
}

GaussRat pow_int(const GaussRat& q, long long e) {
    if (e == 0) return GaussRat(1);
    GaussRat b = e < 0 ? inverse(q) : q;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    GaussRat acc(1);
    while (n > 0) {
        if (n & 1ULL) acc *= b;
        b *= b;
        n >>= 1ULL;
    }
    return acc;
}

namespace {

std::string rat_explicit(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace

std::string to_string(const GaussRat& q) {
    if (q.im == 0) return to_string(q.re);
    std::string out = rat_explicit(q.re);
    out += q.im > 0 ? "+" : "-";
    out += rat_explicit(q.im > 0 ? q.im : Rat(-q.im));
    out += "*i";
    return out;
}

namespace {

struct Term {
    Rat value;
    bool imaginary = false;
};

// One signed term: "3/5", "4/5*i", "i", "2i".
Term parse_term(std::string_view s, std::string_view whole) {
    Term t;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw parse_error("bad scalar literal: '" + std::string(whole) + "'");
    if (s == "i") {
        t.value = Rat(1);
        t.imaginary = true;
    } else {
        if (s.back() == 'i') {
            t.imaginary = true;
            s.remove_suffix(1);
            if (!s.empty() && s.back() == '*') s.remove_suffix(1);
            if (s.empty()) {
                t.value = Rat(1);
                return negative ? Term{-t.value, true} : t;
            }
        }
        t.value = parse_rat(s);
    }
    if (negative) t.value = -t.value;
    return t;
}

} // namespace

GaussRat parse_gauss(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
    if (compact.empty()) throw parse_error("empty scalar literal");

    // Split at top-level '+'/'-' signs (not the leading one).
    std::vector<std::string_view> parts;
    std::string_view s = compact;
    size_t start = 0;
    for (size_t pos = 1; pos < s.size(); ++pos) {
        if ((s[pos] == '+' || s[pos] == '-') && s[pos - 1] != '/' && s[pos - 1] != '*') {
            parts.push_back(s.substr(start, pos - start));
            start = pos;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw parse_error("bad scalar literal: '" + std::string(text) + "'");

    GaussRat out;
    bool seen_re = false, seen_im = false;
    for (auto part : parts) {
        Term t = parse_term(part, text);
        if (t.imaginary) {
            if (seen_im) throw parse_error("duplicate imaginary part in '" + std::string(text) + "'");
            out.im = t.value;
            seen_im = true;
        } else {
            if (seen_re) throw parse_error("duplicate real part in '" + std::string(text) + "'");
            out.re = t.value;
            seen_re = true;
        }
    }
    return out;
}

} // namespace sv
