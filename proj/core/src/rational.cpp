#include "sv/rational.hpp"

#include <cctype>

namespace sv {

Rat pow_int(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e > 0) return Rat(0);
        throw division_by_zero();
    }
    Rat b = base;
    bool invert = e < 0;
    unsigned long long n = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                  : static_cast<unsigned long long>(e);
    Rat acc(1);
    while (n > 0) {
        if (n & 1ULL) acc *= b;
        b *= b;
        n >>= 1ULL;
    }
    if (invert) acc = Rat(1) / acc;
    return acc;
}

std::string to_string(const Rat& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rat parse_rat(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw parse_error("empty rational literal");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    num = trim(num);
    den = trim(den);
    auto digits_only = [](std::string_view d) {
        if (d.empty()) return false;
        for (char c : d)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (!digits_only(num) || (slash != std::string_view::npos && !digits_only(den)))
        throw parse_error("bad rational literal: '" + std::string(text) + "'");
    BigInt n{std::string(num)};
    BigInt d = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den));
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rat q(n, d);
    return negative ? -q : q;
}

} // namespace sv
