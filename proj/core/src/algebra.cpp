#include "sv/algebra.hpp"

namespace sv {

namespace {

Element apply_bracket(const BasisBracket& br, const BasisIndex& x, const BasisIndex& y) {
    return br ? br(x, y) : bracket(x, y);
}

Element apply_bracket(const BasisBracket& br, const BasisIndex& x, const Element& e) {
    Element out;
    for (const auto& [b, c] : e.terms()) out += c * apply_bracket(br, x, b);
    return out;
}

} // namespace

CheckReport jacobi_check(const Window& w, const BasisBracket& br) {
    CheckReport rep;
    const auto basis = basis_in_window(w);
    for (const auto& x : basis)
        for (const auto& y : basis)
            for (const auto& z : basis) {
                Element sum = apply_bracket(br, x, apply_bracket(br, y, z));
                {
                    Element yzx = apply_bracket(br, y, apply_bracket(br, z, x));
                    sum += yzx;
                }
                {
                    Element zxy = apply_bracket(br, z, apply_bracket(br, x, y));
                    sum += zxy;
                }
                rep.count();
                if (!sum.is_zero())
                    rep.fail("jacobi violated at (" + to_string(x) + ", " + to_string(y) + ", " +
                             to_string(z) + "): residual " + to_string(sum));
            }
    return rep;
}

CheckReport antisymmetry_check(const Window& w, const BasisBracket& br) {
    CheckReport rep;
    const auto basis = basis_in_window(w);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            rep.count();
            Element s = apply_bracket(br, x, y) + apply_bracket(br, y, x);
            if (!s.is_zero())
                rep.fail("antisymmetry violated at (" + to_string(x) + ", " + to_string(y) +
                         "): residual " + to_string(s));
        }
    return rep;
}

CheckReport ideal_window_check(const Window& w) {
    CheckReport rep;
    const auto basis = basis_in_window(w);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            if (y.fam == Family::L) continue;
            rep.count();
            Element r = bracket(x, y);
            for (const auto& [b, c] : r.terms())
                if (b.fam == Family::L)
                    rep.fail("[" + to_string(x) + ", " + to_string(y) + "] leaves the ideal: " +
                             to_string(r));
        }
    return rep;
}

CheckReport center_check(const Window& w) {
    CheckReport rep;
    const auto basis = basis_in_window(w);
    const BasisIndex m0 = BasisIndex::M(0);
    const BasisIndex c = BasisIndex::C();
    for (const auto& x : basis) {
        rep.count();
        if (!bracket(x, m0).is_zero())
            rep.fail("[" + to_string(x) + ", M[0]] != 0");
        if (!bracket(x, c).is_zero())
            rep.fail("[" + to_string(x) + ", c] != 0");
    }
    return rep;
}

CheckReport grading_check(const Window& w) {
    CheckReport rep;
    const auto basis = basis_in_window(w);
    for (const auto& x : basis)
        for (const auto& y : basis) {
            rep.count();
            Element r = bracket(x, y);
            long long d = grade(x) + grade(y);
            for (const auto& [b, c] : r.terms()) {
                if (b.fam == Family::C) continue;
                if (grade(b) != d)
                    rep.fail("grading violated at (" + to_string(x) + ", " + to_string(y) +
                             "): term " + to_string(b));
            }
        }
    return rep;
}

} // namespace sv
