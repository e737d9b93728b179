#include "sv/series.hpp"

namespace sv {

namespace {

GaussRat l_coeff(const SeriesSpec& s, long long n, long long k) {
    switch (s.kind) {
        case SeriesKind::Aab: return s.a + GaussRat(Rat(k)) + GaussRat(Rat(n)) * s.b;
        case SeriesKind::Aalpha:
            if (k != 0) return GaussRat(Rat(n + k));
            return GaussRat(Rat(n)) * (GaussRat(Rat(n)) + s.aux);
        case SeriesKind::Bbeta:
            if (k != -n) return GaussRat(Rat(k));
            return -(GaussRat(Rat(n)) * (GaussRat(Rat(n)) + s.aux));
    }
    return {};
}

void add_term(SeriesVector& v, long long k, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

} // namespace

SeriesVector series_action(const SeriesSpec& s, long long n, const SeriesVector& x) {
    SeriesVector out;
    for (const auto& [k, c] : x) add_term(out, n + k, c * l_coeff(s, n, k));
    return out;
}

SeriesVector sv_lift_action(const SeriesSpec& s, const BasisIndex& g, const SeriesVector& x) {
    if (g.fam != Family::L) return {};
    return series_action(s, g.idx, x);
}

CheckReport series_shift_iso_check(const GaussRat& a, const GaussRat& b, const Window& w,
                                   const GaussRat& shift_b) {
    CheckReport rep;
    SeriesSpec source = SeriesSpec::aab(a + GaussRat(1), b);
    SeriesSpec target = SeriesSpec::aab(a, b + shift_b);
    long long bound = w.l_bound();
    auto shift = [](const SeriesVector& v) {
        SeriesVector out;
        for (const auto& [k, c] : v) out.emplace(k + 1, c);
        return out;
    };
    for (long long n = -bound; n <= bound; ++n)
        for (long long k = -bound; k <= bound; ++k) {
            rep.count();
            SeriesVector vk{{k, GaussRat(1)}};
            SeriesVector lhs = shift(series_action(source, n, vk));
            SeriesVector rhs = series_action(target, n, shift(vk));
            if (lhs != rhs)
                rep.fail("shift map fails to intertwine at (n,k)=(" + std::to_string(n) + "," +
                         std::to_string(k) + ")");
        }
    return rep;
}

CheckReport sv_lift_bracket_check(const SeriesSpec& s, const Window& w) {
    CheckReport rep;
    const auto basis = basis_in_window(w);
    long long bound = w.l_bound();
    for (const auto& g1 : basis)
        for (const auto& g2 : basis) {
            Element br = bracket(g1, g2);
            for (long long k = -bound; k <= bound; ++k) {
                rep.count();
                SeriesVector vk{{k, GaussRat(1)}};
                SeriesVector lhs = sv_lift_action(s, g1, sv_lift_action(s, g2, vk));
                {
                    SeriesVector t = sv_lift_action(s, g2, sv_lift_action(s, g1, vk));
                    for (const auto& [kk, c] : t) {
                        auto it = lhs.find(kk);
                        if (it == lhs.end()) {
                            if (!c.is_zero()) lhs.emplace(kk, -c);
                        } else {
                            it->second -= c;
                            if (it->second.is_zero()) lhs.erase(it);
                        }
                    }
                }
                SeriesVector rhs;
                for (const auto& [b, c] : br.terms()) {
                    SeriesVector t = sv_lift_action(s, b, vk);
                    for (const auto& [kk, cc] : t) {
                        auto it = rhs.find(kk);
                        if (it == rhs.end())
                            rhs.emplace(kk, c * cc);
                        else {
                            it->second += c * cc;
                            if (it->second.is_zero()) rhs.erase(it);
                        }
                    }
                }
                if (lhs != rhs)
                    rep.fail("lifted action violates bracket at (" + to_string(g1) + ", " +
                             to_string(g2) + ") on v_" + std::to_string(k));
            }
        }
    return rep;
}

} // namespace sv
